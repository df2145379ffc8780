"""Buchberger's algorithm and the isolated-singularity toolkit.

Everything here works over ``Q[x, y, z]`` style polynomial rings; the
singularity functions take a homogeneous potential in three variables.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import inf
from typing import Sequence

from .exactpoly import Monomial, Poly, PolyError
from .linalg import nullspace
from .quotient import MonomialOrder, divide, divides


class NotHomogeneous(PolyError):
    pass


def _lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


class _Elem:
    """A polynomial plus its cofactors with respect to the input generators."""

    __slots__ = ("poly", "cof", "lm")

    def __init__(self, poly: Poly, cof: list[Poly], lm: Monomial | None):
        self.poly = poly
        self.cof = cof
        self.lm = lm


@dataclass(frozen=True)
class GroebnerBasis:
    generators: tuple[Poly, ...]
    order: MonomialOrder
    basis: tuple[Poly, ...]
    # basis[k] == sum(certificate[k][i] * generators[i])
    certificate: tuple[tuple[Poly, ...], ...] | None = field(default=None, compare=False)

    def leading_monomials(self) -> list[Monomial]:
        return [self.order.leading_monomial(g) for g in self.basis]

    def reduce(self, f: Poly) -> Poly:
        if not self.basis:
            return f
        return divide(f, list(self.basis), self.order)[1]

    def contains(self, f: Poly) -> bool:
        return ideal_member(self, f)

    def verify_certificate(self) -> bool:
        if self.certificate is None:
            return False
        for g, cof in zip(self.basis, self.certificate):
            total = Poly.zero(g.vars)
            for c, gen in zip(cof, self.generators):
                total = total + c * gen
            if total != g:
                return False
        return True

    def s_polynomials_reduce_to_zero(self) -> bool:
        for i in range(len(self.basis)):
            for j in range(i + 1, len(self.basis)):
                if self.reduce(s_polynomial(self.basis[i], self.basis[j], self.order)):
                    return False
        return True


def s_polynomial(f: Poly, g: Poly, order: MonomialOrder) -> Poly:
    mf, cf = order.leading_term(f)
    mg, cg = order.leading_term(g)
    l = _lcm(mf, mg)
    return (f.mul_monomial(tuple(a - b for a, b in zip(l, mf)), 1 / cf)
            - g.mul_monomial(tuple(a - b for a, b in zip(l, mg)), 1 / cg))


def buchberger(gens: Sequence[Poly], order: MonomialOrder | None = None,
               certify: bool = True) -> GroebnerBasis:
    """Reduced Groebner basis with the normal selection strategy.

    Intermediate polynomials are kept primitive over the integers; the final
    basis is made monic.
    """
    gens = tuple(g for g in gens)
    if not gens:
        raise PolyError("need at least one generator")
    vars = gens[0].vars
    for g in gens:
        if g.vars != vars or g.laurent:
            raise PolyError("generators must share one polynomial ring")
    if order is None:
        order = MonomialOrder.grevlex(*vars)
    if not order.is_well_order():
        raise PolyError(f"{order.describe()} is not a well-order")
    key = order.key(vars)
    n = len(gens)
    zero = Poly.zero(vars)

    def unit(i):
        return [Poly.const(1, vars) if k == i else zero for k in range(n)] if certify else []

    def make(poly, cof):
        if not poly:
            return _Elem(poly, cof, None)
        c = poly.content()
        lm = max(poly.terms, key=key)
        if poly.terms[lm] < 0:
            c = -c
        return _Elem(poly.scale(1 / c), [q.scale(1 / c) for q in cof], lm)

    def reduce_full(e: _Elem, basis: list[_Elem]) -> _Elem:
        p = dict(e.poly.terms)
        cof = list(e.cof)
        rem: dict[Monomial, Fraction] = {}
        while p:
            m = max(p, key=key)
            c = p[m]
            for b in basis:
                if divides(b.lm, m):
                    shift = tuple(x - y for x, y in zip(m, b.lm))
                    factor = c / b.poly.terms[b.lm]
                    for bm, bc in b.poly.terms.items():
                        t = tuple(x + y for x, y in zip(bm, shift))
                        v = p.get(t, 0) - factor * bc
                        if v:
                            p[t] = v
                        else:
                            p.pop(t, None)
                    if certify:
                        cof = [a - bq.mul_monomial(shift, factor) for a, bq in zip(cof, b.cof)]
                    break
            else:
                rem[m] = c
                del p[m]
        return make(Poly(vars, rem), cof)

    basis: list[_Elem] = []
    for i, g in enumerate(gens):
        e = make(g, unit(i))
        if e.lm is not None:
            basis.append(e)
    pairs = {(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))}
    while pairs:
        # normal strategy: smallest lcm of leading monomials first
        i, j = min(pairs, key=lambda p: (key(_lcm(basis[p[0]].lm, basis[p[1]].lm)), p))
        pairs.discard((i, j))
        a, b = basis[i], basis[j]
        l = _lcm(a.lm, b.lm)
        if all(x == 0 or y == 0 for x, y in zip(a.lm, b.lm)):
            continue  # coprime leading monomials: S-polynomial reduces to zero
        sa = tuple(x - y for x, y in zip(l, a.lm))
        sb = tuple(x - y for x, y in zip(l, b.lm))
        ca, cb = a.poly.terms[a.lm], b.poly.terms[b.lm]
        spoly = a.poly.mul_monomial(sa, 1 / ca) - b.poly.mul_monomial(sb, 1 / cb)
        scof = ([x.mul_monomial(sa, 1 / ca) - y.mul_monomial(sb, 1 / cb) for x, y in zip(a.cof, b.cof)]
                if certify else [])
        r = reduce_full(_Elem(spoly, scof, None), basis)
        if r.lm is None:
            continue
        k = len(basis)
        basis.append(r)
        pairs |= {(m, k) for m in range(k)}

    # minimalize, then interreduce
    minimal: list[_Elem] = []
    for e in sorted(basis, key=lambda e: key(e.lm)):
        if not any(divides(m.lm, e.lm) for m in minimal):
            minimal.append(e)
    reduced: list[_Elem] = []
    for idx, e in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1:]
        r = reduce_tail(e, others, key, certify, vars)
        reduced.append(r)
    reduced.sort(key=lambda e: key(e.lm), reverse=True)
    out_basis = []
    out_cert = []
    for e in reduced:
        lc = e.poly.terms[e.lm]
        out_basis.append(e.poly.scale(1 / lc))
        out_cert.append(tuple(q.scale(1 / lc) for q in e.cof))
    return GroebnerBasis(gens, order, tuple(out_basis), tuple(out_cert) if certify else None)


def reduce_tail(e: _Elem, others: list[_Elem], key, certify: bool, vars) -> _Elem:
    """Reduce the non-leading terms of ``e`` by ``others``."""
    p = dict(e.poly.terms)
    cof = list(e.cof)
    done: dict[Monomial, Fraction] = {e.lm: p.pop(e.lm)}
    while p:
        m = max(p, key=key)
        c = p[m]
        for b in others:
            if divides(b.lm, m):
                shift = tuple(x - y for x, y in zip(m, b.lm))
                factor = c / b.poly.terms[b.lm]
                for bm, bc in b.poly.terms.items():
                    t = tuple(x + y for x, y in zip(bm, shift))
                    if t == e.lm:
                        raise AssertionError("tail reduction touched the leading monomial")
                    v = p.get(t, 0) - factor * bc
                    if v:
                        p[t] = v
                    else:
                        p.pop(t, None)
                if certify:
                    cof = [a - bq.mul_monomial(shift, factor) for a, bq in zip(cof, b.cof)]
                break
        else:
            done[m] = c
            del p[m]
    return _Elem(Poly(vars, done), cof, e.lm)


def ideal_member(gb: GroebnerBasis, f: Poly) -> bool:
    return not gb.reduce(f)


# singularities

@dataclass(frozen=True)
class SingularityReport:
    potential: Poly
    isolated: bool
    milnor: int | float  # math.inf when not isolated
    leading_monomials: tuple[Monomial, ...]
    pure_powers: dict[str, int | None]

    def to_dict(self) -> dict:
        return {
            "potential": str(self.potential),
            "isolated": self.isolated,
            "milnor": "infinity" if self.milnor == inf else self.milnor,
            "leading_monomials": [list(m) for m in self.leading_monomials],
            "pure_powers": self.pure_powers,
        }


def _check_potential(omega: Poly) -> None:
    if omega.nvars != 3 or omega.laurent:
        raise PolyError("potential must be a polynomial in three variables")
    if not omega:
        raise PolyError("zero potential")
    if not omega.is_homogeneous():
        raise NotHomogeneous(f"potential {omega} is not homogeneous")


def jacobian_ideal_basis(omega: Poly, order: MonomialOrder | None = None) -> GroebnerBasis:
    partials = [omega.diff(v) for v in omega.vars]
    partials = [p for p in partials if p]
    if not partials:
        raise PolyError("constant potential has no Jacobian ideal")
    return buchberger(partials, order or MonomialOrder.grevlex(*omega.vars))


def singularity_report(omega: Poly) -> SingularityReport:
    _check_potential(omega)
    if omega.is_constant():
        raise PolyError("constant potential")
    gb = jacobian_ideal_basis(omega)
    lms = gb.leading_monomials()
    n = omega.nvars
    powers: dict[str, int | None] = {}
    for i, v in enumerate(omega.vars):
        pure = [m[i] for m in lms if all(e == 0 for k, e in enumerate(m) if k != i)]
        powers[v] = min(pure) if pure else None
    isolated = all(p is not None for p in powers.values())
    if isolated:
        box = [powers[v] for v in omega.vars]
        count = sum(1 for m in product(*(range(b) for b in box))
                    if not any(divides(l, m) for l in lms))
    else:
        count = inf
    return SingularityReport(omega, isolated, count, tuple(lms), powers)


def is_isolated_singularity(omega: Poly) -> bool:
    return singularity_report(omega).isolated


def milnor_number(omega: Poly) -> int | float:
    return singularity_report(omega).milnor


def linear_syzygy_kernel(omega: Poly) -> list[tuple[Poly, Poly, Poly]]:
    """Basis of linear (f1, f2, f3) with f1*Ω_x + f2*Ω_y + f3*Ω_z = 0."""
    if omega.nvars != 3 or omega.laurent:
        raise PolyError("potential must be a polynomial in three variables")
    if not omega.is_homogeneous() or omega.total_degree() < 3:
        raise PolyError("linear syzygies need a homogeneous potential of degree >= 3")
    vars = omega.vars
    g = Poly.gens(vars)
    partials = [omega.diff(v) for v in vars]
    # unknown (i, k): coefficient of g[k] in f_i
    columns = []
    for i in range(3):
        for k in range(3):
            columns.append(g[k] * partials[i])
    monos = sorted({m for c in columns for m in c.terms})
    rows = [[c.coefficient(m) for c in columns] for m in monos]
    out = []
    for v in nullspace(rows, 9):
        f = tuple(sum((g[k].scale(v[3 * i + k]) for k in range(3)), Poly.zero(vars)) for i in range(3))
        out.append(f)
    return out


def syzygy_residual(omega: Poly, f: Sequence[Poly]) -> Poly:
    return sum((fi * omega.diff(v) for fi, v in zip(f, omega.vars)), Poly.zero(omega.vars))
