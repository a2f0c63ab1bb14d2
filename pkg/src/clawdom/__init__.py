"""Minimum dominating sets of (claw, P8)-free graphs."""
