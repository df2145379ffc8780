"""Monomial orders and quotients of a polynomial ring by one modulus."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Callable, Sequence

from .exactpoly import Monomial, Poly, PolyError, RingMismatch
from .poisson import PoissonStructure, bracket

ORDER_KINDS = ("lex", "grlex", "grevlex", "weighted")


class OrderError(PolyError):
    pass


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order over named variables.

    ``precedence`` lists the variables from most to least significant.  The
    weighted kind compares the weight first and breaks ties by grevlex.
    """

    kind: str
    precedence: tuple[str, ...]
    weights: tuple[int, ...] | None = None  # aligned with precedence

    def __post_init__(self):
        if self.kind not in ORDER_KINDS:
            raise OrderError(f"unknown order kind {self.kind!r}")
        if len(set(self.precedence)) != len(self.precedence):
            raise OrderError("precedence must be a permutation")
        if self.kind == "weighted":
            if self.weights is None or len(self.weights) != len(self.precedence):
                raise OrderError("weighted order needs one weight per variable")

    @classmethod
    def lex(cls, *precedence: str) -> "MonomialOrder":
        return cls("lex", tuple(precedence))

    @classmethod
    def grlex(cls, *precedence: str) -> "MonomialOrder":
        return cls("grlex", tuple(precedence))

    @classmethod
    def grevlex(cls, *precedence: str) -> "MonomialOrder":
        return cls("grevlex", tuple(precedence))

    @classmethod
    def weighted(cls, weights: dict[str, int], *precedence: str) -> "MonomialOrder":
        return cls("weighted", tuple(precedence), tuple(int(weights[v]) for v in precedence))

    def is_well_order(self) -> bool:
        """On polynomial-mode monomials."""
        if self.kind == "weighted":
            return all(w > 0 for w in self.weights)
        return True

    def key(self, vars: Sequence[str]) -> Callable[[Monomial], tuple]:
        """Sort key on exponent tuples over ``vars``; larger key = larger monomial."""
        vars = tuple(vars)
        if sorted(vars) != sorted(self.precedence):
            raise OrderError(f"order over {self.precedence} cannot compare monomials over {vars}")
        perm = tuple(vars.index(v) for v in self.precedence)
        if self.kind == "lex":
            return lambda m: tuple(m[i] for i in perm)
        rev = perm[::-1]
        if self.kind == "grlex":
            return lambda m: (sum(m), tuple(m[i] for i in perm))
        if self.kind == "grevlex":
            return lambda m: (sum(m), tuple(-m[i] for i in rev))
        w = self.weights
        return lambda m: (sum(wi * m[i] for wi, i in zip(w, perm)), sum(m), tuple(-m[i] for i in rev))

    def leading_monomial(self, p: Poly) -> Monomial:
        if not p:
            raise PolyError("zero polynomial has no leading monomial")
        return max(p.terms, key=self.key(p.vars))

    def leading_term(self, p: Poly) -> tuple[Monomial, Fraction]:
        m = self.leading_monomial(p)
        return m, p.terms[m]

    def sorted_monomials(self, p: Poly) -> list[Monomial]:
        return sorted(p.terms, key=self.key(p.vars), reverse=True)

    def describe(self) -> str:
        s = f"{self.kind}({'>'.join(self.precedence)})"
        if self.weights:
            s += f" weights={list(self.weights)}"
        return s


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def divide(f: Poly, divisors: Sequence[Poly], order: MonomialOrder) -> tuple[list[Poly], Poly]:
    """Multivariate division: ``f = sum q_i g_i + r`` with r reduced.

    Under a well-order this terminates; the remainder has no monomial divisible
    by any leading monomial of ``divisors``.
    """
    if not order.is_well_order():
        raise OrderError(f"{order.describe()} is not a well-order")
    key = order.key(f.vars)
    leads = []
    for g in divisors:
        if g.vars != f.vars or g.laurent or f.laurent:
            raise RingMismatch("division needs polynomials over one polynomial ring")
        m = max(g.terms, key=key)
        leads.append((m, g.terms[m], g))
    quotients = [dict() for _ in divisors]
    rem: dict[Monomial, Fraction] = {}
    p = dict(f.terms)
    while p:
        m = max(p, key=key)
        c = p[m]
        for k, (lm, lc, g) in enumerate(leads):
            if divides(lm, m):
                shift = tuple(a - b for a, b in zip(m, lm))
                factor = c / lc
                quotients[k][shift] = quotients[k].get(shift, 0) + factor
                for gm, gc in g.terms.items():
                    t = tuple(a + b for a, b in zip(gm, shift))
                    v = p.get(t, 0) - factor * gc
                    if v:
                        p[t] = v
                    else:
                        p.pop(t, None)
                break
        else:
            rem[m] = c
            del p[m]
    return [Poly(f.vars, q) for q in quotients], Poly(f.vars, rem)


def exact_quotient(f: Poly, g: Poly) -> Poly | None:
    """f / g if g divides f in the polynomial ring, else None."""
    order = MonomialOrder.grevlex(*f.vars)
    (q,), r = divide(f, [g], order)
    return None if r else q


@dataclass(frozen=True)
class QuotientRing:
    """Ambient polynomial ring modulo a single nonconstant polynomial."""

    vars: tuple[str, ...]
    modulus: Poly
    order: MonomialOrder
    lead: Monomial = field(init=False)

    def __post_init__(self):
        if self.modulus.vars != tuple(self.vars) or self.modulus.laurent:
            raise RingMismatch("modulus must be a polynomial over the ambient variables")
        if not self.modulus:
            raise PolyError("modulus must be nonzero")
        if self.modulus.is_constant():
            raise PolyError("a nonzero constant modulus gives the zero ring")
        if not self.order.is_well_order():
            raise OrderError(f"{self.order.describe()} admits infinite descent")
        object.__setattr__(self, "lead", self.order.leading_monomial(self.modulus))

    @classmethod
    def of(cls, modulus: Poly, order: MonomialOrder | None = None) -> "QuotientRing":
        if order is None:
            order = MonomialOrder.lex(*reversed(modulus.vars))
        return cls(modulus.vars, modulus, order)

    def normal_form(self, f: Poly) -> Poly:
        return normal_form(self, f)

    def is_reduced(self, f: Poly) -> bool:
        return not any(divides(self.lead, m) for m in f.terms)

    def mul(self, a: Poly, b: Poly) -> Poly:
        return normal_form(self, a * b)


def normal_form(q: QuotientRing, f: Poly) -> Poly:
    if f.vars != q.vars or f.laurent:
        raise RingMismatch(f"element over {f.vars} is not in the ambient ring {q.vars}")
    lead = q.lead
    lc = q.modulus.terms[lead]
    tail = [(m, c / lc) for m, c in q.modulus.terms.items() if m != lead]
    key = q.order.key(q.vars)
    p = dict(f.terms)
    out: dict[Monomial, Fraction] = {}
    # every replacement lowers the reduced monomial in a well-order, so this stops
    while p:
        m = max(p, key=key)
        c = p.pop(m)
        if divides(lead, m):
            shift = tuple(a - b for a, b in zip(m, lead))
            for tm, tc in tail:
                t = tuple(a + b for a, b in zip(tm, shift))
                v = p.get(t, 0) - c * tc
                if v:
                    p[t] = v
                else:
                    p.pop(t, None)
        else:
            out[m] = c
    return Poly(q.vars, out)


def quotient_bracket(q: QuotientRing, s: PoissonStructure, f: Poly, g: Poly) -> Poly:
    omega = s.potential
    if omega is None:
        raise PolyError("quotient brackets need a potential structure")
    diff = q.modulus - omega
    if not diff.is_constant():
        raise PolyError("modulus minus a constant must equal the potential")
    return normal_form(q, bracket(s, f, g))


def basis_monomials(q: QuotientRing, adams_bound: int) -> list[Monomial]:
    """Reduced monomials of total degree at most ``adams_bound``, largest first."""
    if adams_bound < 0:
        raise ValueError("adams_bound must be nonnegative")
    n = len(q.vars)
    out = [m for m in product(range(adams_bound + 1), repeat=n)
           if sum(m) <= adams_bound and not divides(q.lead, m)]
    out.sort(key=q.order.key(q.vars), reverse=True)
    return out


def fermat_potential(d: int, vars: Sequence[str] = ("x", "y", "z"), lam=0) -> Poly:
    """x^d + y^d + z^d (+ lam*x*y*z)."""
    g = Poly.gens(tuple(vars))
    omega = g[0] ** d + g[1] ** d + g[2] ** d
    if lam:
        omega = omega + (g[0] * g[1] * g[2]).scale(lam)
    return omega


def potential_quotient(omega: Poly, xi=0) -> QuotientRing:
    """P_{Ω-ξ} with the default lex order (last variable most significant)."""
    return QuotientRing.of(omega - xi)
