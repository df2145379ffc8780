"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line."""

import random
import time
from contextlib import contextmanager
from fractions import Fraction
from itertools import combinations

import pytest

from poissonval.automorphism import PolyMap, enumerate_fermat, epsilon_check, genus_and_bounds, group_verify
from poissonval.catalog import ENTRY_KEYS, distinguisher_report
from poissonval.exactpoly import Poly, parse_poly
from poissonval.groebner import (
    is_isolated_singularity, linear_syzygy_kernel, milnor_number, syzygy_residual,
)
from poissonval.poisson import jacobi_residual, skew, structure_from_potential, torus, weyl
from poissonval.quotient import fermat_potential
from poissonval.valuation import (
    adams, check_elliptic, classify_point, f_xi, gadic, graded_bracket, is_classical_on_generators,
    min_weight_w, nu_c, point, torus_lattice, weyl_nu_xi,
)

from axioms import check_axioms
from conftest import random_poly
from oracles import jacobian_algebra_dimension


@pytest.fixture
def criterion(capsys):
    @contextmanager
    def run(n: int, title: str, limit: float):
        start = time.perf_counter()
        status, note = "FAIL", ""
        try:
            yield
            elapsed = time.perf_counter() - start
            if elapsed >= limit:
                note = f" (took {elapsed:.2f}s, limit {limit}s)"
                raise AssertionError(f"criterion {n} exceeded its time limit{note}")
            status, note = "PASS", f" ({elapsed:.2f}s < {limit}s)"
        finally:
            with capsys.disabled():
                print(f"\n[acceptance {n:2d}] {status}: {title}{note}")
    return run


def test_criterion_01_bracket_formulas(criterion):
    with criterion(1, "elliptic bracket formulas, canonical strings", 1):
        for lam in (0, 1, 2):
            s = structure_from_potential(parse_poly(f"x^3+y^3+z^3+{lam}*x*y*z"))
            x, y, z = s.gens()
            expected = {
                (x, y): f"3*z^2+{lam}*x*y",
                (y, z): f"3*x^2+{lam}*y*z",
                (z, x): f"3*y^2+{lam}*x*z",
            }
            for (a, b), text in expected.items():
                assert str(s.bracket(a, b)) == str(parse_poly(text))


def _sample_deg5(rng):
    out = Poly.zero(("x", "y", "z"))
    for _ in range(3):
        out = out + random_poly(rng, terms=1, homogeneous=rng.randint(0, 5))
    return out


def test_criterion_02_jacobi_leibniz(criterion):
    with criterion(2, "Jacobi on generators of 10 potentials, Leibniz on 100 samples", 30):
        rng = random.Random(2)
        structures = []
        for _ in range(10):
            omega = random_poly(rng, terms=rng.randint(1, 5), homogeneous=rng.randint(1, 6))
            s = structure_from_potential(omega)
            assert not jacobi_residual(s, *s.gens())
            structures.append(s)
        for k in range(100):
            s = structures[k % 10]
            f, g, h = (_sample_deg5(rng) for _ in range(3))
            assert max(q.total_degree() for q in (f, g, h)) <= 5
            assert s.bracket(f, g * h) == g * s.bracket(f, h) + h * s.bracket(f, g)


def test_criterion_03_singularity(criterion):
    with criterion(3, "isolated singularities and Milnor numbers with oracle", 20):
        assert is_isolated_singularity(check_elliptic(1))
        assert not is_isolated_singularity(parse_poly("x^3+y^3+z^3-3*x*y*z"))
        for d in range(3, 8):
            assert is_isolated_singularity(fermat_potential(d))
        assert milnor_number(check_elliptic(1)) == 8
        assert jacobian_algebra_dimension(check_elliptic(1)) == 8
        for d in range(3, 7):
            mu = milnor_number(fermat_potential(d))
            assert mu == (d - 1) ** 3
            assert mu == jacobian_algebra_dimension(fermat_potential(d))


def _named_contexts():
    out = []
    ell = check_elliptic(1)
    out += [adams(ell, 1), adams(ell, -1)]
    out += [nu_c(fermat_potential(d), 1) for d in range(3, 7)]
    t = torus(2)
    out += [torus_lattice(t, (a, b)) for a in range(-2, 3) for b in range(-2, 3)]
    out += [weyl_nu_xi(xi, w) for xi in (0, 1, 2) for w in (0, -1)]
    for s in (weyl(), skew(2)):
        for g in ("x", "x+y"):
            out.append(gadic(s, parse_poly(g, s.vars)))
    pts = [(0, 0), (1, 1), (Fraction(1, 2), -1), (2, Fraction(-3, 4)), (-1, 3)]
    out += [point(skew(2), p) for p in pts]
    return out


def test_criterion_04_valuation_axioms(criterion):
    with criterion(4, "valuation axioms and w-inequality, 200 pairs per named context", 60):
        for ctx in _named_contexts():
            assert check_axioms(ctx, 200, seed=4) == [], ctx.label


def test_criterion_05_weyl_nu_xi(criterion):
    with criterion(5, "ν_ξ(f_ξ) = 1 and ν_ξ'(f_ξ) = 2(w-1)", 1):
        for xi, other in ((0, 1), (1, 2)):
            for w in (0, -1):
                assert weyl_nu_xi(xi, w).value(f_xi(xi)) == 1
                assert weyl_nu_xi(other, w).value(f_xi(xi)) == 2 * (w - 1)


def test_criterion_06_nu_c_weight(criterion):
    with criterion(6, "ν^c generator bound equals deg Ω - 3", 5):
        for d in range(3, 8):
            assert min_weight_w(nu_c(fermat_potential(d), 1)) == d - 3
        ctx = nu_c(fermat_potential(3), 1)
        assert ctx.w == 0 and not is_classical_on_generators(ctx, 0)


def test_criterion_07_point_classification(criterion):
    with criterion(7, "point valuations: classical vs Weyl-type", 1):
        cases = [(skew(2), (0, 0), "classical"), (skew(2), (1, 1), "weyl-type"),
                 (weyl(), (0, 0), "weyl-type"), (weyl(), (1, 1), "weyl-type")]
        for s, p, kind in cases:
            assert classify_point(s, p) == kind
            if kind == "weyl-type":
                ctx = point(s, p)
                x, y = s.gens()
                gb = graded_bracket(ctx, x - p[0], y - p[1])
                assert gb.is_constant() and gb.constant_value() != 0


FIBER = {5: 75, 6: 216, 7: 147, 8: 384}
GRADED = {5: 300, 6: 648, 7: 1176, 8: 1920}


def test_criterion_08_fermat_groups(criterion):
    with criterion(8, "Fermat automorphism groups, quotients, splitting, bounds, doubling", 60):
        for d, order in GRADED.items():
            r = enumerate_fermat(d, "graded")
            assert r.order == order == 6 * d * d * (d - 3)
            assert r.identity_subgroup_order == d * d * (d - 3)
            assert r.quotient == "S3"
            assert r.split == (d % 2 == 0)
            assert group_verify(r)
            assert r.order <= genus_and_bounds(d).order_bound
            assert enumerate_fermat(d, "graded", N=2 * r.N).order == r.order
        for d, order in FIBER.items():
            r = enumerate_fermat(d, "fiber")
            assert r.order == order
            assert r.quotient == ("S3" if d % 2 == 0 else "C3")
            assert r.split
            assert group_verify(r)
            assert r.order <= genus_and_bounds(d).order_bound
            assert enumerate_fermat(d, "fiber", N=2 * r.N).order == r.order


def test_criterion_09_epsilon_checks(criterion):
    with criterion(9, "ε-checks on 50 graded elements and the coordinate swap", 30):
        omega = fermat_potential(5)
        r = enumerate_fermat(5, "graded")
        rng = random.Random(9)
        for e in rng.sample(r.elements, 50):
            rep = epsilon_check(e.to_polymap(), omega)
            assert rep.ok and rep.pdet == 1 and rep.identity_holds
            assert rep.hdet == rep.pdet * rep.jacobian
        swap = epsilon_check(PolyMap.from_strings(["y", "x", "z"]), omega)
        assert swap.pdet == -1 and not swap.poisson


def test_criterion_10_syzygies(criterion):
    with criterion(10, "linear syzygy kernels", 5):
        for d in range(4, 8):
            assert linear_syzygy_kernel(fermat_potential(d)) == []
        for lam in (0, 1):
            assert linear_syzygy_kernel(check_elliptic(lam)) == []
        xyz = parse_poly("x*y*z")
        assert linear_syzygy_kernel(xyz)
        x, y, _ = Poly.gens(xyz.vars)
        assert not syzygy_residual(xyz, (x, -y, Poly.zero(xyz.vars)))


def test_criterion_11_distinguishers(criterion):
    with criterion(11, "distinguisher lines for all 15 pairs", 10):
        pairs = list(combinations(ENTRY_KEYS, 2))
        assert len(pairs) == 15
        for a, b in pairs:
            assert distinguisher_report(a, b).separated
        assert distinguisher_report("weyl", "q_skew").has_computed_witness
        assert distinguisher_report("q_skew", "higher_genus").has_computed_witness
        assert distinguisher_report("q_skew", "higher_genus_graded").has_computed_witness
