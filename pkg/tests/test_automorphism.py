import random

import pytest

from poissonval.automorphism import (
    MonomialSymmetry, PolyMap, cyclotomic, cyclotomic_inverse, default_root_order, embed_fiber,
    enumerate_fermat, epsilon_check, genus_and_bounds, group_verify, map_jacobian, perm_sign,
    symmetry_satisfies,
)
from poissonval.exactpoly import PolyError, parse_poly
from poissonval.quotient import fermat_potential

from oracles import fermat_symmetry_count

ID = (0, 1, 2)


def test_map_jacobians():
    assert map_jacobian(PolyMap.identity()) == 1
    assert map_jacobian(PolyMap.from_strings(["y", "x", "z"])) == -1
    assert map_jacobian(PolyMap.from_strings(["x+y", "y", "z"])) == 1


def test_epsilon_examples():
    omega = fermat_potential(5)
    r = epsilon_check(PolyMap.from_strings(["y", "x", "z"]), omega)
    assert r.ok and r.hdet == 1 and r.jacobian == -1 and r.pdet == -1 and not r.poisson
    r = epsilon_check(PolyMap.identity(), omega)
    assert (r.hdet, r.jacobian, r.pdet, r.poisson) == (1, 1, 1, True)
    r = epsilon_check(PolyMap.from_strings(["x+y", "y", "z"]), omega)
    assert not r.ok and "scalar multiple" in r.reason


def test_symmetry_predicate():
    N = 20
    u = N // 5
    assert symmetry_satisfies(MonomialSymmetry(ID, N, (u, -u % N, 0)), 5)
    assert not symmetry_satisfies(MonomialSymmetry(ID, N, (u, 0, 0)), 5)
    for variant in ("graded", "fiber"):
        assert symmetry_satisfies(MonomialSymmetry.identity(N), 5, variant)


@pytest.mark.parametrize("d,variant,order,quot,split", [
    (4, "graded", 96, "S3", True), (5, "graded", 300, "S3", False), (6, "graded", 648, "S3", True),
    (5, "fiber", 75, "C3", True), (6, "fiber", 216, "S3", True), (7, "fiber", 147, "C3", True),
])
def test_enumeration(d, variant, order, quot, split):
    r = enumerate_fermat(d, variant)
    assert (r.order, r.quotient, r.split) == (order, quot, split)
    assert group_verify(r)


def test_fiber_d5_has_no_odd_permutations():
    r = enumerate_fermat(5, "fiber")
    assert all(perm_sign(s) == 1 for s in r.quotient_image)


@pytest.mark.parametrize("d,variant", [(4, "graded"), (5, "graded"), (5, "fiber"), (6, "fiber")])
def test_enumeration_matches_numeric_brute_force(d, variant):
    N = default_root_order(d, variant)
    assert enumerate_fermat(d, variant).order == fermat_symmetry_count(d, variant, N)


def test_verify_rejects_missing_element():
    r = enumerate_fermat(5, "graded")
    r.elements = r.elements[:7] + r.elements[8:]
    cx = {}
    assert not group_verify(r, cx)
    assert cx["reason"] in ("closure", "inverse")


def test_threads_give_identical_output(monkeypatch):
    a = enumerate_fermat(6, "graded", threads=1)
    monkeypatch.setenv("POISSONVAL_THREADS", "4")
    b = enumerate_fermat(6, "graded")
    assert a.elements == b.elements


def test_bad_thread_env(monkeypatch):
    monkeypatch.setenv("POISSONVAL_THREADS", "zero")
    with pytest.raises(PolyError):
        enumerate_fermat(5)


def test_composition_agrees_with_materialized_maps():
    r = enumerate_fermat(5, "graded")
    rng = random.Random(2)
    omega = fermat_potential(5)
    for _ in range(10):
        a, b = rng.choice(r.elements), rng.choice(r.elements)
        lhs = a.compose(b).to_polymap()
        rhs = a.to_polymap().compose(b.to_polymap())
        assert lhs.images == rhs.images
        assert epsilon_check(lhs, omega).poisson


def test_fiber_embeds_in_graded():
    f = enumerate_fermat(5, "fiber")
    g = enumerate_fermat(5, "graded")
    emb = embed_fiber(f, g)
    assert len(emb) == 75 and set(emb) <= set(g.elements)


def test_cyclotomic_helpers():
    assert cyclotomic(5) == (1, 1, 1, 1, 1)
    assert len(cyclotomic(20)) == 9  # phi(20) = 8
    inv = cyclotomic_inverse([0, 1], 5)  # zeta^-1 = zeta^4 = -1 - zeta - zeta^2 - zeta^3
    assert inv == [-1, -1, -1, -1]


def test_genus_bounds():
    b = genus_and_bounds(5)
    assert (b.genus, b.hurwitz, b.order_bound) == (6, 420, 840)
    b = genus_and_bounds(4)
    assert (b.genus, b.order_bound) == (3, 168)


def test_zeta_map_parsing():
    ring = ("x", "y", "z", "zeta")
    phi = PolyMap(("x", "y", "z"), tuple(parse_poly(t, ring) for t in ("zeta*x", "zeta^4*y", "z")), 5)
    r = epsilon_check(phi, fermat_potential(5))
    assert r.ok and r.poisson
