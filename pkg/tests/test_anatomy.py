import pytest

from clawdom.anatomy import CLAWP8, P6P7, P8C, cycle_anatomy, path_anatomy, z_partition
from clawdom.detect import CYCLE, PATH, InducedWitness
from clawdom.errors import StructureViolation
from clawdom.generators import gen_family
from clawdom.graph import build_graph, cycle_graph, path_graph


def spine_cycle(k, extra_n=0, extra=()):
    edges = [(i, (i + 1) % k) for i in range(k)] + list(extra)
    return build_graph(k + extra_n, edges), InducedWitness(CYCLE, tuple(range(k)))


def spine_path(k, extra_n=0, extra=()):
    edges = [(i, i + 1) for i in range(k - 1)] + list(extra)
    return build_graph(k + extra_n, edges), InducedWitness(PATH, tuple(range(k)))


def test_bare_c6():
    an = cycle_anatomy(*spine_cycle(6))
    assert not an.S and not an.W
    assert all(not h for h in an.H.values())


def test_c4_with_pendant_path():
    # x = 4 on v1 v2, w = 5 hanging off x
    an = cycle_anatomy(*spine_cycle(4, 2, [(0, 4), (1, 4), (4, 5)]))
    assert an.H[1] == {4} and an.R[1] == {4} and an.W == {5}


def test_single_attachment_rejected():
    with pytest.raises(StructureViolation):
        cycle_anatomy(*spine_cycle(5, 1, [(0, 5)]))


def test_bare_p6():
    an = path_anatomy(*spine_path(6))
    assert not an.S and not an.W and all(not h for h in an.H.values())


def test_p7_with_h2():
    an = path_anatomy(*spine_path(7, 2, [(1, 7), (2, 7), (7, 8)]))
    assert an.H[2] == {7} and an.R[2] == {7} and an.W == {8}


def test_p7_end_edge_reaching_w_rejected():
    with pytest.raises(StructureViolation):
        path_anatomy(*spine_path(7, 2, [(0, 7), (1, 7), (7, 8)]))


def test_reverse_path_relabels():
    g, p = spine_path(7, 2, [(1, 7), (2, 7), (7, 8)])
    an = path_anatomy(g, p, reverse=True)
    assert an.v(1) == 6 and an.H[5] == {7}


def test_rotation_and_reflection():
    g, c = spine_cycle(5)
    assert cycle_anatomy(g, c, rotation=2).v(1) == 2
    an = cycle_anatomy(g, c, rotation=0, reflect=True)
    assert an.spine == (0, 4, 3, 2, 1)


def test_spine_must_be_induced():
    g = build_graph(5, [(i, (i + 1) % 5) for i in range(5)] + [(0, 2)])
    with pytest.raises(StructureViolation):
        cycle_anatomy(g, InducedWitness(CYCLE, tuple(range(5))))


def test_w_independence_check():
    g, c = spine_cycle(5, 3, [(0, 5), (1, 5), (5, 6), (5, 7), (6, 7)])
    with pytest.raises(StructureViolation):
        cycle_anatomy(g, c, w_independent=True)


@pytest.mark.parametrize("scheme,build", [
    (CLAWP8, lambda: cycle_anatomy(*spine_cycle(5))),
    (P8C, lambda: path_anatomy(*spine_path(7))),
    (P6P7, lambda: path_anatomy(*spine_path(6))),
])
def test_empty_w_partition(scheme, build):
    zp = z_partition(build(), scheme)
    assert not zp.Z and not zp.Y and zp.components == []


def test_z24_on_p7():
    # r2 = 7 on v2 v3, r4 = 8 on v4 v5, w = 9 sees both, r2 r4 adjacent
    g, p = spine_path(7, 3, [(1, 7), (2, 7), (3, 8), (4, 8), (7, 8), (7, 9), (8, 9)])
    zp = z_partition(path_anatomy(g, p), P8C)
    assert zp.Z_pair[(2, 4)] == {9}
    assert not zp.Y


def test_clawp8_adjacent_z13_must_agree():
    # R1 = {5, 6}, R3 = {7}; w 8 sees 5 and 7, w 9 sees 6 and 7, 8 and 9 adjacent
    extra = [(0, 5), (1, 5), (0, 6), (1, 6), (5, 6), (2, 7), (3, 7),
             (5, 8), (7, 8), (6, 9), (7, 9), (8, 9)]
    g, c = spine_cycle(5, 5, extra)
    with pytest.raises(StructureViolation):
        z_partition(cycle_anatomy(g, c), CLAWP8)


def test_h_must_be_clique():
    g, c = spine_cycle(6, 2, [(0, 6), (1, 6), (0, 7), (1, 7)])
    with pytest.raises(StructureViolation):
        cycle_anatomy(g, c)


@pytest.mark.parametrize("family", ["c5p8_z13", "c5p8_za", "p7p8_y3", "p6p7_z3", "c6p8"])
@pytest.mark.parametrize("seed", range(3))
def test_generated_instances_partition(family, seed):
    from clawdom.detect import find_induced_cycle, find_induced_path

    g, m = gen_family(family, seed=seed)
    case = m.expected_branch.split("/")[0]
    kind, k = case[0], int(case[1])
    if kind == "C":
        an = cycle_anatomy(g, find_induced_cycle(g, k))
    else:
        an = path_anatomy(g, find_induced_path(g, k))
    parts = [set(an.spine), set(an.S), set(an.W)]
    assert sum(map(len, parts)) == g.n
    assert set().union(*parts) == set(range(g.n))
    for i, r in an.R.items():
        assert r <= an.H[i]
