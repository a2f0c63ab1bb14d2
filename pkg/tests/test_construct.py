import pytest

from clawdom import construct
from clawdom.construct import complete_base
from clawdom.detect import CYCLE, PATH, InducedWitness, find_induced_cycle, find_induced_path
from clawdom.errors import StructureViolation
from clawdom.exact import mds_exact
from clawdom.generators import c4_template, chain_template, gen_family, paired_template
from clawdom.graph import build_graph, cycle_graph, path_graph


def hole(g, k):
    c = find_induced_cycle(g, k)
    assert c is not None
    return c


def path(g, k):
    p = find_induced_path(g, k)
    assert p is not None
    return p


def check(g, res, gamma=None):
    assert g.is_dominating(res.set)
    assert len(res.set) == (len(mds_exact(g)) if gamma is None else gamma)


def test_c8_alone():
    g = cycle_graph(8)
    check(g, construct.solve_cycle_dominates_all(g, hole(g, 8)), 3)


def test_c8_with_h1_vertex():
    g = build_graph(9, [(i, (i + 1) % 8) for i in range(8)] + [(0, 8), (1, 8)])
    check(g, construct.solve_cycle_dominates_all(g, InducedWitness(CYCLE, tuple(range(8)))), 3)


def test_c8_not_dominating_rejected():
    g = build_graph(10, [(i, (i + 1) % 8) for i in range(8)] + [(0, 8), (1, 8), (8, 9)])
    with pytest.raises(StructureViolation):
        construct.solve_cycle_dominates_all(g, InducedWitness(CYCLE, tuple(range(8))))


@pytest.mark.parametrize("q,gamma", [(2, 3), (3, 4), (5, 6)])
def test_c4_family(q, gamma):
    g = c4_template(q)
    check(g, construct.solve_c4_p6(g, InducedWitness(CYCLE, (0, 1, 2, 3))), gamma)


def test_bare_c4():
    g = cycle_graph(4)
    check(g, construct.solve_c4_p6(g, hole(g, 4)), 2)


@pytest.mark.parametrize("q,gamma", [(2, 4), (4, 6)])
def test_c6_family(q, gamma):
    g = paired_template(6, True, 1, 4, q, False)
    res = construct.solve_c6_p8(g, InducedWitness(CYCLE, tuple(range(6))))
    check(g, res, gamma)
    assert res.branch == "C6"


def test_bare_c6():
    g = cycle_graph(6)
    res = construct.solve_c6_p8(g, hole(g, 6))
    check(g, res, 2)


def test_bare_c5():
    g = cycle_graph(5)
    check(g, construct.solve_c5_p8(g, hole(g, 5)), 2)


@pytest.mark.parametrize("q", [2, 3])
def test_c5_z13_template(q):
    g = paired_template(5, True, 1, 3, q, True)
    res = construct.solve_c5_p8(g, InducedWitness(CYCLE, tuple(range(5))))
    assert res.label.startswith("C5/Z13")
    check(g, res)


@pytest.mark.parametrize("depth", [1, 2])
def test_c5_zsingle_template(depth):
    g = chain_template(5, True, 1, depth)
    res = construct.solve_c5_p8(g, InducedWitness(CYCLE, tuple(range(5))))
    check(g, res)


def test_bare_p7():
    g = path_graph(7)
    check(g, construct.solve_p7_p8(g, path(g, 7)), 3)


def test_p7_z24_template():
    g = paired_template(7, False, 2, 4, 2, True)
    res = construct.solve_p7_p8(g, InducedWitness(PATH, tuple(range(7))))
    assert res.label.startswith("P7/Z24")
    check(g, res)


@pytest.mark.parametrize("depth", [1, 2])
def test_p7_y_template(depth):
    g = chain_template(7, False, 3, depth)
    res = construct.solve_p7_p8(g, InducedWitness(PATH, tuple(range(7))))
    assert res.label.startswith("P7/Y")
    check(g, res)


def test_bare_p6():
    g = path_graph(6)
    check(g, construct.solve_p6_p7(g, path(g, 6)), 2)


def test_p6_z24_template():
    g = paired_template(6, False, 2, 4, 2, True)
    res = construct.solve_p6_p7(g, InducedWitness(PATH, tuple(range(6))))
    assert res.label.startswith("P6/Z24")
    check(g, res)


@pytest.mark.parametrize("depth", [1, 2])
def test_p6_z3_template(depth):
    g = chain_template(6, False, 3, depth)
    res = construct.solve_p6_p7(g, InducedWitness(PATH, tuple(range(6))))
    assert res.label.startswith("P6/Z3")
    check(g, res)


def test_complete_base_already_dominating():
    g = path_graph(3)
    assert complete_base(g, {1}, fallback={0, 2}) == ({1}, construct.NONE)


def test_complete_base_single():
    # P7 plus s joined to both ends: {v3, v5} misses only v1 and v7
    g = build_graph(8, [(i, i + 1) for i in range(6)] + [(0, 7), (6, 7)])
    dom, how = complete_base(g, {2, 4}, singles=[{7}], fallback={0, 6, 3})
    assert how == construct.SINGLETON and dom == {2, 4, 7}


def test_complete_base_exhausted():
    g = path_graph(7)
    dom, how = complete_base(g, {1}, singles=[{0}], pairs=[({0}, {6})], fallback={3, 5})
    assert how == construct.FALLBACK and dom == {1, 3, 5}


def test_complete_base_needs_dominating_fallback():
    with pytest.raises(StructureViolation):
        complete_base(path_graph(7), {1}, fallback={3})


@pytest.mark.parametrize("family", ["c6p8", "c5p8_z13", "c5p8_za", "p7p8_y3", "p6p7_z3",
                                    "p7p8_z24", "p6p7_z24", "c4p6"])
@pytest.mark.parametrize("seed", range(4))
def test_family_dispatch_matches_oracle(family, seed):
    from clawdom.driver import branch_bucket, solve_kernel

    g, m = gen_family(family, seed=seed)
    res = solve_kernel(g)
    assert branch_bucket(res.label) == m.expected_branch
    check(g, res)
