"""Weighted valuations, induced filtrations and their leading forms.

Values are ints, with ``math.inf`` standing for the value of zero.  A
:class:`FilteredContext` evaluates elements of an *original* ring (the ring of
its Poisson structure) by first moving them to a *working* presentation:

* quotient carriers replace an element by its normal form modulo Ω - ξ;
* change-of-generators carriers substitute the original variables by
  polynomials in new generators (Weyl ``ν_ξ``, point valuations);

and then take the minimum weighted degree over the monomials.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from functools import reduce
from itertools import combinations
from math import gcd, inf
from typing import Callable, Mapping, Sequence

from .exactpoly import Poly, PolyError, as_fraction, substitute
from .groebner import is_isolated_singularity
from .poisson import PoissonStructure, structure_from_potential, weyl
from .quotient import MonomialOrder, QuotientRing, exact_quotient, normal_form

INF = inf


class ValuationError(PolyError):
    pass


@dataclass(frozen=True)
class WeightAssignment:
    vars: tuple[str, ...]
    weights: tuple[int, ...]

    def __post_init__(self):
        if len(self.vars) != len(self.weights):
            raise ValuationError("one weight per variable")

    @classmethod
    def of(cls, mapping: Mapping[str, int] | None = None, vars: Sequence[str] = (), **kw) -> "WeightAssignment":
        mapping = dict(mapping or {}, **kw)
        vars = tuple(vars) or tuple(mapping)
        missing = [v for v in vars if v not in mapping]
        if missing:
            raise ValuationError(f"no weight for {missing}")
        return cls(vars, tuple(int(mapping[v]) for v in vars))

    def __getitem__(self, name: str) -> int:
        return self.weights[self.vars.index(name)]

    def as_dict(self) -> dict[str, int]:
        return dict(zip(self.vars, self.weights))

    def degree(self, mono) -> int:
        return sum(w * e for w, e in zip(self.weights, mono))

    def value(self, f: Poly) -> int | float:
        return value_poly(self, f)

    def scaled(self, d: int) -> "WeightAssignment":
        return WeightAssignment(self.vars, tuple(d * w for w in self.weights))


def value_poly(wa: WeightAssignment, f: Poly) -> int | float:
    """Minimum weighted degree over the monomials of ``f``; inf for zero."""
    if f.vars != wa.vars:
        raise ValuationError(f"weights over {wa.vars} cannot evaluate a polynomial over {f.vars}")
    if not f:
        return INF
    return min(wa.degree(m) for m in f.terms)


def _lowest_part(wa: WeightAssignment, f: Poly) -> tuple[Poly, int]:
    v = value_poly(wa, f)
    return Poly(f.vars, {m: c for m, c in f.terms.items() if wa.degree(m) == v}, f.laurent), v


@dataclass(frozen=True)
class FilteredContext:
    """An algebra with a weight assignment and the valuation it induces."""

    label: tuple
    weights: WeightAssignment
    w: int
    structure: PoissonStructure | None = None
    quotient: QuotientRing | None = None
    forward: Mapping[str, Poly] | None = None    # original var -> working poly
    backward: Mapping[str, Poly] | None = None   # working var -> original poly
    gadic: Poly | None = None
    scale: int = 1
    recorded: Mapping[str, str] = field(default_factory=dict, compare=False)

    @property
    def kind(self) -> str:
        return self.label[0]

    @property
    def original_vars(self) -> tuple[str, ...]:
        if self.structure is not None:
            return self.structure.vars
        if self.quotient is not None:
            return self.quotient.vars
        if self.forward is not None:
            return tuple(self.forward)
        return self.weights.vars

    @property
    def laurent(self) -> bool:
        return bool(self.structure and self.structure.laurent)

    def element(self, text: str) -> Poly:
        from .exactpoly import parse_poly
        return parse_poly(text, self.original_vars, "laurent" if self.laurent else "polynomial")

    def working(self, f: Poly) -> Poly:
        """The representative whose lowest weighted part carries the value."""
        if self.gadic is not None:
            raise ValuationError("g-adic contexts have no weighted working form")
        if self.quotient is not None:
            f = normal_form(self.quotient, f)
        if self.forward is not None:
            f = substitute(f, self.forward)
        return f

    def value(self, f: Poly) -> int | float:
        if self.gadic is not None:
            v = gadic_order(self.gadic, f)
        else:
            v = value_poly(self.weights, self.working(f))
        return v if v == INF else v * self.scale

    def value_fraction(self, num: Poly, den: Poly) -> int | float:
        return value_fraction(self, num, den)

    def bracket(self, f: Poly, g: Poly) -> Poly:
        if self.structure is None:
            raise ValuationError("context has no Poisson structure attached")
        return self.structure.bracket(f, g)

    def generators(self) -> list[tuple[str, Poly]]:
        """Working generators expressed in the original ring."""
        if self.backward is not None:
            return list(self.backward.items())
        return list(zip(self.original_vars, Poly.gens(self.original_vars, self.laurent)))

    def leading_form(self, f: Poly) -> tuple[Poly, int]:
        return leading_form(self, f)


def value_quotient(ctx: FilteredContext) -> Callable[[Poly], int | float]:
    """Evaluator of a quotient carrier; values are read off the normal form.

    Reduction by Ω - ξ with the leading monomial of maximal Adams degree never
    raises the Adams degree, and the top part of a normal form cannot lie in
    (Ω), so the normal form realizes the Adams filtration of P_{Ω-ξ}.
    """
    if ctx.quotient is None:
        raise ValuationError("not a quotient carrier")
    _check_adams_lead(ctx.quotient)
    return ctx.value


def _check_adams_lead(q: QuotientRing, adams: Sequence[int] | None = None) -> None:
    adams = adams or (1,) * len(q.vars)
    deg = lambda m: sum(a * e for a, e in zip(adams, m))  # noqa: E731
    top = max(deg(m) for m in q.modulus.terms)
    if deg(q.lead) != top:
        raise ValuationError(
            f"leading monomial of {q.modulus} under {q.order.describe()} is not of maximal Adams degree")


def value_fraction(ctx: FilteredContext, num: Poly, den: Poly) -> int | float:
    if ctx.quotient is not None:
        den_nf = normal_form(ctx.quotient, den)
    else:
        den_nf = den
    if not den_nf:
        raise ZeroDivisionError("zero denominator")
    a = ctx.value(num)
    if a == INF:
        return INF
    return a - ctx.value(den)


def min_weight_w(ctx: FilteredContext) -> int | None:
    """Least w making the generator-level inequality hold; None if all brackets vanish."""
    if ctx.structure is None:
        raise ValuationError("min_weight_w needs an attached Poisson structure")
    gens = ctx.generators()
    best = None
    for (_, a), (_, b) in combinations(gens, 2):
        vb = ctx.value(ctx.bracket(a, b))
        if vb == INF:
            continue
        cand = ctx.value(a) + ctx.value(b) - vb
        best = cand if best is None else max(best, cand)
    return best


def is_classical_on_generators(ctx: FilteredContext, w: int | None = None) -> bool:
    w = ctx.w if w is None else w
    wmin = min_weight_w(ctx)
    if wmin is not None and wmin > w:
        raise ValuationError(f"context is not a {w}-filtration (generator bound {wmin})")
    gens = ctx.generators()
    for (_, a), (_, b) in combinations(gens, 2):
        if not ctx.value(ctx.bracket(a, b)) > ctx.value(a) + ctx.value(b) - w:
            return False
    return True


def leading_form(ctx: FilteredContext, f: Poly) -> tuple[Poly, int]:
    """Lowest weighted part of the working form of ``f`` and its degree."""
    if not f:
        raise ValuationError("the zero element has no leading form")
    work = ctx.working(f)
    if not work:
        raise ValuationError("element is zero in the carrier")
    lf, v = _lowest_part(ctx.weights, work)
    return lf, v * ctx.scale


def graded_bracket(ctx: FilteredContext, f: Poly, g: Poly, w: int | None = None) -> Poly:
    """Image of {f, g} in degree ν(f) + ν(g) - w of the associated graded ring."""
    w = ctx.w if w is None else w
    target = ctx.value(f) + ctx.value(g) - w
    br = ctx.bracket(f, g)
    if ctx.value(br) == target:
        return leading_form(ctx, br)[0]
    if ctx.value(br) < target:
        raise ValuationError("bracket violates the w-inequality")
    return Poly.zero(ctx.weights.vars, ctx.laurent)


def faithfulness_flags(ctx: FilteredContext) -> dict:
    vals = [ctx.value(g) for _, g in ctx.generators()]
    finite = [int(v) for v in vals if v != INF]
    surj = reduce(gcd, finite, 0) == 1
    try:
        nonclassical = not is_classical_on_generators(ctx, ctx.w)
    except ValuationError:
        nonclassical = None
    return {
        "image_is_Z": surj,
        "nonclassical": nonclassical,
        "residue_dimension": ctx.recorded.get("residue_dimension", "not computed"),
    }


def scale_valuation(ctx: FilteredContext, d: int) -> FilteredContext:
    if int(d) != d or d < 1:
        raise ValuationError("scaling factor must be a positive integer")
    return replace(ctx, scale=ctx.scale * int(d), w=ctx.w * int(d),
                   label=ctx.label + (("scaled", int(d)),))


# constructors

def induced(structure: PoissonStructure, weights: Mapping[str, int], w: int | None = None,
            label: tuple = ("induced",)) -> FilteredContext:
    wa = WeightAssignment.of(weights, structure.vars)
    ctx = FilteredContext(label, wa, 0, structure)
    wmin = min_weight_w(ctx)
    if w is None:
        w = 0 if wmin is None else wmin
    elif wmin is not None and wmin > w:
        raise ValuationError(f"declared w={w} is below the generator bound {wmin}")
    return replace(ctx, w=w)


def adams(omega: Poly, sign: int = 1, xi=0, adams_degrees: Sequence[int] = (1, 1, 1)) -> FilteredContext:
    """Adams^{±Id} valuation on P_{Ω-ξ} (ξ = 0: the graded quotient P_Ω)."""
    if sign not in (1, -1):
        raise ValuationError("sign must be +1 or -1")
    xi = as_fraction(xi)
    if sign == 1 and xi:
        raise ValuationError("Adams^{Id} needs a graded carrier (xi = 0)")
    s = structure_from_potential(omega)
    q = QuotientRing.of(omega - xi)
    _check_adams_lead(q, adams_degrees)
    wa = WeightAssignment(omega.vars, tuple(sign * a for a in adams_degrees))
    label = ("adamsId",) if sign == 1 else ("adamsNegId",)
    ctx = FilteredContext(label, wa, 0, s, q)
    return replace(ctx, w=min_weight_w(ctx))


def nu_c(omega: Poly, xi=1, adams_degrees: Sequence[int] = (1, 1, 1)) -> FilteredContext:
    """The valuation on P_{Ω-ξ} whose graded ring is P_Ω: weights = -(Adams degree)."""
    xi = as_fraction(xi)
    if not xi:
        raise ValuationError("nu^c needs xi != 0")
    ctx = adams(omega, -1, xi, adams_degrees)
    return replace(ctx, label=("nuC", str(xi)))


def fermat_z_filtration(d: int, xi=1) -> FilteredContext:
    """deg x = deg y = 0, deg z = 1 on P_{Ω-ξ}, Ω = x^d + y^d + z^d: a 1-filtration.

    Normal forms are taken with x^d leading, so their z-free part has x-degree
    below d and is never a multiple of x^d + y^d - ξ; the z-order of the normal
    form is then the true value.
    """
    from .quotient import fermat_potential
    xi = as_fraction(xi)
    if d < 4 or not xi:
        raise ValuationError("needs d >= 4 and xi != 0")
    omega = fermat_potential(d)
    s = structure_from_potential(omega)
    q = QuotientRing(omega.vars, omega - xi, MonomialOrder.lex("x", "y", "z"))
    wa = WeightAssignment(omega.vars, (0, 0, 1))
    ctx = FilteredContext(("zFiltration", d, str(xi)), wa, 1, s, q)
    return ctx


def torus_lattice(structure: PoissonStructure, v: Sequence[int]) -> FilteredContext:
    if structure.kind != "torus":
        raise ValuationError("lattice valuations live on a Poisson torus")
    v = tuple(int(a) for a in v)
    if len(v) != len(structure.vars):
        raise ValuationError("one lattice coordinate per generator")
    ctx = FilteredContext(("torusLattice", v), WeightAssignment(structure.vars, v), 0, structure)
    return ctx


def weyl_induced(w: int) -> FilteredContext:
    """deg x = 1, deg y = w - 1 on the Weyl algebra: a nonclassical w-filtration."""
    return induced(weyl(), {"x": 1, "y": w - 1}, w, ("weylInduced", w))


def weyl_nu_xi(xi, w: int = 0) -> FilteredContext:
    """ν_ξ: deg(x + y + ξy^2) = 1, deg y = w - 1 on k(x, y) with {x, y} = 1."""
    if w > 0:
        raise ValuationError("the ν_ξ family is defined for w <= 0")
    xi = as_fraction(xi)
    s = weyl()
    F, y = Poly.gens(("F", "y"))
    x0, y0 = s.gens()
    forward = {"x": F - y - (y * y).scale(xi), "y": y}
    backward = {"F": x0 + y0 + (y0 * y0).scale(xi), "y": y0}
    wa = WeightAssignment(("F", "y"), (1, w - 1))
    return FilteredContext(("weylNuXi", str(xi), w), wa, w, s, forward=forward, backward=backward)


def f_xi(xi) -> Poly:
    x, y = Poly.gens(("x", "y"))
    return x + y + (y * y).scale(as_fraction(xi))


# g-adic and point valuations

def gadic_order(g: Poly, f: Poly) -> int | float:
    if g.is_constant():
        raise ValuationError("g must be nonconstant")
    if not f:
        return INF
    k = 0
    while True:
        q = exact_quotient(f, g)
        if q is None:
            return k
        f, k = q, k + 1


def gadic_valuation(g: Poly, elem) -> int | float:
    """Exponent of the prime ``g`` in a polynomial or a ``(num, den)`` fraction.

    Irreducibility of ``g`` is the caller's responsibility.
    """
    if isinstance(elem, tuple):
        num, den = elem
        if not den:
            raise ZeroDivisionError("zero denominator")
        a = gadic_order(g, num)
        return INF if a == INF else a - gadic_order(g, den)
    return gadic_order(g, elem)


def gadic(structure: PoissonStructure, g: Poly) -> FilteredContext:
    if structure.laurent:
        raise ValuationError("g-adic valuations are built on polynomial rings")
    wa = WeightAssignment(structure.vars, (0,) * len(structure.vars))
    return FilteredContext(("gAdic", str(g)), wa, 1, structure, gadic=g)


def point(structure: PoissonStructure, p: Sequence) -> FilteredContext:
    """The 2-valuation of the maximal ideal at a rational point: order of vanishing."""
    if structure.laurent:
        raise ValuationError("point valuations are built on polynomial rings")
    vars = structure.vars
    if len(p) != len(vars):
        raise ValuationError("point has the wrong dimension")
    p = tuple(as_fraction(a) for a in p)
    g = Poly.gens(vars)
    forward = {v: g[i] + p[i] for i, v in enumerate(vars)}
    backward = {v: g[i] - p[i] for i, v in enumerate(vars)}
    wa = WeightAssignment(vars, (1,) * len(vars))
    return FilteredContext(("point", tuple(str(a) for a in p)), wa, 2, structure,
                           forward=forward, backward=backward)


def point_valuation(structure: PoissonStructure, p: Sequence, elem) -> int | float:
    ctx = point(structure, p)
    if isinstance(elem, tuple):
        return value_fraction(ctx, *elem)
    return ctx.value(elem)


def classify_point(structure: PoissonStructure, p: Sequence) -> str:
    """'classical' iff every generator bracket vanishes at p."""
    pt = dict(zip(structure.vars, (as_fraction(a) for a in p)))
    n = len(structure.vars)
    vanish = all(structure.gen_bracket(i, j).evaluate(pt) == 0
                 for i, j in combinations(range(n), 2))
    if vanish:
        return "classical"
    return "weyl-type" if n == 2 else "nonclassical"


def elliptic_potential(lam) -> Poly:
    x, y, z = Poly.gens(("x", "y", "z"))
    return x ** 3 + y ** 3 + z ** 3 + (x * y * z).scale(as_fraction(lam))


def check_elliptic(lam) -> Poly:
    lam = as_fraction(lam)
    if lam ** 3 == -27:
        raise ValuationError("λ^3 = -27 gives a non-isolated singularity")
    omega = elliptic_potential(lam)
    if not is_isolated_singularity(omega):
        raise ValuationError("potential is not an isolated singularity")
    return omega


__all__ = [
    "INF", "FilteredContext", "ValuationError", "WeightAssignment", "adams", "classify_point",
    "f_xi", "faithfulness_flags", "fermat_z_filtration", "gadic", "gadic_order", "gadic_valuation",
    "graded_bracket", "induced", "is_classical_on_generators", "leading_form", "min_weight_w", "nu_c",
    "point", "point_valuation", "scale_valuation", "torus_lattice", "value_fraction", "value_poly",
    "value_quotient", "weyl_induced", "weyl_nu_xi", "elliptic_potential", "check_elliptic",
]
