"""Smoke tests for the python bindings."""

import math

import pytest

try:
    import diskclique as dc
except ImportError:  # in-tree ctest runs import the raw extension module
    import _diskclique as dc


def test_solve_unit_tangent_pair():
    res = dc.solve_unit([(0.0, 0.0), (2.0, 0.0)], eps=0.5, delta=0.3, seed=7)
    assert sorted(res["clique"]) == [0, 1]
    apart = dc.solve_unit([(0.0, 0.0), (2.01, 0.0)], eps=0.5, delta=0.3, seed=7)
    assert len(apart["clique"]) == 1


def test_solve_unit_deterministic_and_valid():
    pts = [(0.37 * i % 5.0, 0.61 * i % 5.0) for i in range(40)]
    a = dc.solve_unit(pts, eps=0.3, delta=0.2, seed=123, trials_per_cell=200)
    b = dc.solve_unit(pts, eps=0.3, delta=0.2, seed=123, trials_per_cell=200, threads=2)
    assert a["clique"] == b["clique"]
    disks = [(x, y, 1.0) for x, y in pts]
    assert dc.verify_clique(disks, a["clique"])
    opt = dc.exact_max_clique(disks)
    assert len(a["clique"]) <= len(opt)
    assert len(a["clique"]) >= math.ceil(0.7 * len(opt))


def test_solve_multi_identical_disks():
    disks = [(1.0, 1.0, 2.0)] * 6
    res = dc.solve_multi(disks, eps=0.4, seed=5, m2=40)
    assert sorted(res["clique"]) == list(range(6))
    assert res["k_estimate"] == 6


def test_cobip_clique_exact_on_small_instance():
    left = [(0.0, 0.0, 1.0), (0.5, 0.0, 1.0)]
    right = [(10.0, 0.0, 1.0), (10.5, 0.0, 1.0)]
    clique = dc.cobip_clique(left + right, split=2, eps=0.25)
    disks = left + right
    assert dc.verify_clique(disks, clique)
    assert len(clique) == len(dc.exact_max_clique(disks))


def test_instance_round_trip():
    disks = dc.gen_multi_radii(25, 3, box=8.0, seed=11)
    text = dc.emit_instance(disks)
    back = dc.parse_instance(text)
    assert back == disks
    assert len({r for (_, _, r) in disks}) == 3


def test_errors_surface():
    with pytest.raises(Exception):
        dc.solve_unit([], eps=0.3)
    with pytest.raises(Exception):
        dc.exact_max_clique([(0.0, 0.0, 1.0)] * 65)
