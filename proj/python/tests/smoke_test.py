#!/usr/bin/env python3
"""Smoke tests for the _zetagraph extension module."""
import _zetagraph as zg

# basic action
assert zg.apply("a", "00") == "01"
assert zg.apply("b", "10") == "00"
assert zg.apply("a^-1", "01") == "00"

# graphs
g2 = zg.schreier(2)
assert g2.vertex_count == 4 and g2.edge_count == 8
assert g2.is_connected()
assert zg.adjacency(g2, ["11", "01", "00", "10"]) == [
    [2, 2, 0, 0],
    [2, 0, 2, 0],
    [0, 2, 0, 2],
    [0, 0, 2, 2],
]

zz = zg.zigzag_c4(1)
assert zz.vertex_count == 8
assert zz.neighbors("0,a^-1") == ["0,a", "0,b", "1,a", "1,b"]
assert zg.replacement(1, 2).vertex_count == 8
assert "graph {" in zz.dot()

# zeta reciprocals, exact decimal coefficients
z = [int(c) for c in zg.ihara_reciprocal(g2)]
assert len(z) == 17 and z[0] == 1 and z[-1] == 81
assert zg.nonbacktracking_reciprocal(g2) == zg.ihara_reciprocal(g2)
cyc = [int(c) for c in zg.ihara_reciprocal(zg.cycle(5))]
assert cyc == [1, 0, 0, 0, 0, -2, 0, 0, 0, 0, 1]

# covering reports
rep = zg.cover_report("gamma", 5, 2)
assert rep["frobenius"]["e_a"] == "(2 3)(6 7)"
assert rep["frobenius"]["e_b"] == "(1 2)(3 5 6 4)(7 8)"
assert rep["normal"] is False
rep32 = zg.cover_report("gamma", 3, 2)
assert rep32["normal"] is True and rep32["monodromy_order"] == 2
zz31 = zg.cover_report("zigzag", 3, 1)
assert zz31["normal"] is False
assert zz31["sheet_connectivity"] == {"11": True, "01": False, "00": False, "10": True}

art = zg.artin_report("gamma", 3, 2)
assert art["factorization"] is True
assert art["trivial"] == zg.ihara_reciprocal(g2)

# one reference check end to end
checks = zg.run_reference_checks("01-zeta")
assert checks and all(ok for _, ok, _ in checks), checks

print("smoke ok")
