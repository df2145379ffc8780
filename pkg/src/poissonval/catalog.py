"""Named Poisson fields of transcendence degree 2 and their valuations.

Each entry keeps two kinds of facts apart:

* recorded facts: values quoted from the literature, with a citation, never
  recomputed here;
* computed witnesses: contexts built and checked in the current run.

:func:`distinguisher_report` compares two entries invariant by invariant and
tags every separating line with where its evidence comes from.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

from .exactpoly import Poly
from .poisson import skew, torus, weyl
from .quotient import fermat_potential
from .valuation import (
    INF, FilteredContext, ValuationError, adams, check_elliptic, faithfulness_flags,
    fermat_z_filtration, gadic, is_classical_on_generators, min_weight_w, nu_c, point,
    torus_lattice, weyl_induced, weyl_nu_xi,
)

UNCOUNTABLE = "infinite-uncountable"
COUNTABLE = "infinite-countable"

DEFAULT_LAMBDA = 1
DEFAULT_Q = 2
HIGHER_GENUS_D = 5


@dataclass(frozen=True)
class Fact:
    value: object
    source: str  # "recorded" | "computed"
    citation: str
    detail: str = ""

    def to_dict(self) -> dict:
        v = self.value
        return {"value": v if isinstance(v, (bool, int, str)) or v is None else str(v),
                "source": self.source, "citation": self.citation, "detail": self.detail}


@dataclass(frozen=True)
class CatalogEntry:
    key: str
    name: str
    field: str
    bracket: str
    transcendence_degree: int
    faithful_count: object
    recorded: dict = field(default_factory=dict, hash=False, compare=False)
    families: tuple[str, ...] = ()
    note: str = ""

    def to_dict(self) -> dict:
        return {
            "key": self.key, "name": self.name, "field": self.field, "bracket": self.bracket,
            "transcendence_degree": self.transcendence_degree,
            "faithful_0_valuations": self.faithful_count,
            "recorded": {k: f.to_dict() for k, f in self.recorded.items()},
            "families": list(self.families), "note": self.note,
        }


def _rec(value, citation, detail=""):
    return Fact(value, "recorded", citation, detail)


_ENTRIES = (
    CatalogEntry(
        "weyl", "Weyl Poisson field K_Weyl", "k(x,y)", "{x,y}=1", 2, UNCOUNTABLE,
        {
            "faithful_0_count": _rec(UNCOUNTABLE, "faithful-valuation table; Weyl ν_ξ family",
                                     "the ν_ξ family at w = 0, over an uncountable field"),
        },
        ("weyl_nu_xi", "weyl_induced", "point", "gadic"),
    ),
    CatalogEntry(
        "q_skew", "q-skew Poisson field K_q", "k(x,y)", "{x,y}=q*x*y", 2, COUNTABLE,
        {
            "faithful_0_count": _rec(COUNTABLE, "faithful-valuation table; torus lattice classification",
                                     "primitive vectors of Z^2"),
            "has_minus1_valuation": _rec(False, "torus valuations, negative weight", "no w-valuation for w < 0"),
            "alpha_0": _rec("infinite", "torus valuations, weight zero"),
            "depth_0": _rec(0, "torus valuations, weight zero"),
            "width_0": _rec(1, "torus valuations, weight zero"),
        },
        ("torus_lattice", "point", "gadic"),
        f"witnesses use q = {DEFAULT_Q}",
    ),
    CatalogEntry(
        "graded_elliptic", "graded elliptic Q(P_Ω), Ω = x^3+y^3+z^3+λxyz", "Q(P_Ω)", "{-,-}_Ω", 2, 2,
        {
            "faithful_0_count": _rec(2, "faithful-valuation table; graded elliptic classification"),
            "alpha_0": _rec(2, "graded elliptic classification"),
            "has_minus1_valuation": _rec(False, "graded elliptic classification", "α_{-1} = 0"),
            "depth": _rec(0, "graded elliptic depth and width"),
            "width": _rec(1, "graded elliptic depth and width"),
        },
        ("adams",),
        f"λ^3 != -27; witnesses use λ = {DEFAULT_LAMBDA}",
    ),
    CatalogEntry(
        "elliptic", "elliptic Q(P_{Ω-1}), Ω = x^3+y^3+z^3+λxyz", "Q(P_{Ω-1})", "{-,-}_Ω", 2, 1,
        {
            "faithful_0_count": _rec(1, "faithful-valuation table; elliptic classification"),
            "alpha_0": _rec(1, "elliptic classification"),
            "has_minus1_valuation": _rec(False, "elliptic classification", "α_{-1} = 0"),
            "depth": _rec(1, "elliptic depth and width"),
            "width": _rec(1, "elliptic depth and width"),
        },
        ("nu_c", "adams"),
        f"λ^3 != -27; witnesses use λ = {DEFAULT_LAMBDA}",
    ),
    CatalogEntry(
        "higher_genus_graded", "higher genus Q(P_Ω), deg Ω >= 4", "Q(P_Ω)", "{-,-}_Ω", 2, 0,
        {
            "faithful_0_count": _rec(0, "faithful-valuation table; graded higher genus"),
            "has_faithful_0_valuation": _rec(False, "graded higher genus has no faithful 0-valuation"),
            "width_1": _rec("infinite", "higher genus 1-depth and 1-width"),
            "depth_1": _rec("infinite", "higher genus 1-depth and 1-width"),
        },
        ("adams",),
        f"Ω an i.s. potential of degree >= 4; witnesses use Ω = x^{HIGHER_GENUS_D}+y^{HIGHER_GENUS_D}+z^{HIGHER_GENUS_D}",
    ),
    CatalogEntry(
        "higher_genus", "higher genus Q(P_{Ω-1}), deg Ω >= 4", "Q(P_{Ω-1})", "{-,-}_Ω", 2, 0,
        {
            "faithful_0_count": _rec(0, "faithful-valuation table; higher genus fiber"),
            "has_nontrivial_0_valuation": _rec(False, "higher genus fiber has no nontrivial 0-valuation", "no nontrivial 0-valuation"),
            "has_minus1_valuation": _rec(False, "higher genus fiber; w-valuations are w'-valuations for w' >= w",
                                         "a (-1)-valuation would also be a 0-valuation"),
            "alpha_0": _rec(0, "higher genus fiber has no nontrivial 0-valuation"),
            "width_1": _rec("infinite", "higher genus 1-depth and 1-width"),
            "depth_1": _rec("infinite", "higher genus 1-depth and 1-width"),
        },
        ("nu_c", "z_filtration"),
        f"witnesses use Ω = x^{HIGHER_GENUS_D}+y^{HIGHER_GENUS_D}+z^{HIGHER_GENUS_D}, ξ = 1",
    ),
)

ENTRY_KEYS = tuple(e.key for e in _ENTRIES)


def list_entries() -> list[CatalogEntry]:
    return list(_ENTRIES)


def get_entry(key: str) -> CatalogEntry:
    for e in _ENTRIES:
        if e.key == key:
            return e
    raise KeyError(f"unknown catalog entry {key!r}; known: {', '.join(ENTRY_KEYS)}")


# named valuations

@dataclass(frozen=True)
class NamedValuationSpec:
    entry: str
    family: str
    params: tuple = ()  # sorted (name, value) pairs

    @classmethod
    def make(cls, entry: str, family: str, **params) -> "NamedValuationSpec":
        return cls(entry, family, tuple(sorted(params.items())))

    def param(self, name, default=None):
        return dict(self.params).get(name, default)


def build_named_valuation(spec: NamedValuationSpec) -> FilteredContext:
    entry = get_entry(spec.entry)
    fam = spec.family
    if fam not in entry.families:
        raise ValuationError(f"{entry.key} has no family {fam!r}; available: {entry.families}")
    p = spec.param
    if entry.key in ("graded_elliptic", "elliptic"):
        omega = check_elliptic(p("lam", DEFAULT_LAMBDA))
    elif entry.key.startswith("higher_genus"):
        d = int(p("d", HIGHER_GENUS_D))
        if d < 4:
            raise ValuationError("higher genus entries need d >= 4")
        omega = fermat_potential(d)
    else:
        omega = None

    if fam == "adams":
        sign = int(p("sign", 1))
        xi = 0 if entry.key in ("graded_elliptic", "higher_genus_graded") else p("xi", 1)
        if sign == 1 and xi:
            raise ValuationError("Adams^{Id} lives on the graded quotient")
        ctx = adams(omega, sign, xi)
        residue = "drops by one (recorded, graded elliptic classification)" if entry.key == "graded_elliptic" else "not recorded"
    elif fam == "nu_c":
        ctx = nu_c(omega, p("xi", 1))
        residue = "drops by one (recorded, elliptic classification)" if entry.key == "elliptic" else "not recorded"
    elif fam == "z_filtration":
        ctx = fermat_z_filtration(int(p("d", HIGHER_GENUS_D)), p("xi", 1))
        residue = "drops by one (recorded, z-filtration on the Fermat fiber)"
    elif fam == "torus_lattice":
        v = tuple(p("v", (1, 0)))
        if not any(v):
            raise ValuationError("the zero lattice vector gives the trivial valuation")
        ctx = torus_lattice(torus(p("q", DEFAULT_Q)), v)
        residue = "drops by one (recorded, torus lattice classification) when gcd(v) = 1"
    elif fam == "weyl_nu_xi":
        ctx = weyl_nu_xi(p("xi", 0), int(p("w", 0)))
        residue = "drops by one (recorded, Weyl ν_ξ family)"
    elif fam == "weyl_induced":
        ctx = weyl_induced(int(p("w", 0)))
        residue = "not recorded"
    elif fam == "point":
        s = weyl() if entry.key == "weyl" else skew(p("q", DEFAULT_Q))
        ctx = point(s, tuple(p("p", (0, 0))))
        residue = "drops by two (point valuation)"
    elif fam == "gadic":
        s = weyl() if entry.key == "weyl" else skew(p("q", DEFAULT_Q))
        g = p("g", "x")
        g = s.parse(g) if isinstance(g, str) else g
        ctx = gadic(s, g)
        residue = "not recorded"
    else:
        raise ValuationError(f"unknown family {fam!r}")
    return FilteredContext(**{**ctx.__dict__, "recorded": {"residue_dimension": residue,
                                                           "entry": entry.key, "family": fam}})


def named_flags(ctx: FilteredContext) -> dict:
    return faithfulness_flags(ctx)


# computed witnesses

def _sample_poly(rng: random.Random, vars, laurent=False, terms=3, deg=3) -> Poly:
    out = {}
    for _ in range(terms):
        if laurent:
            m = tuple(rng.randint(-deg, deg) for _ in vars)
        else:
            m = tuple(rng.randint(0, deg) for _ in vars)
        out[m] = rng.randint(-3, 3) or 1
    return Poly(vars, out, laurent)


def spot_check(ctx: FilteredContext, pairs: int = 12, seed: int = 0) -> bool:
    """Multiplicativity, ultrametric inequality and the declared w-inequality on random pairs."""
    rng = random.Random(seed)
    vars = ctx.original_vars
    for _ in range(pairs):
        a = _sample_poly(rng, vars, ctx.laurent)
        b = _sample_poly(rng, vars, ctx.laurent)
        va, vb = ctx.value(a), ctx.value(b)
        if va == INF or vb == INF:
            continue
        if ctx.value(a * b) != va + vb:
            return False
        if ctx.value(a + b) < min(va, vb):
            return False
        if ctx.structure is not None and ctx.value(ctx.bracket(a, b)) < va + vb - ctx.w:
            return False
    return True


@dataclass(frozen=True)
class Witness:
    claim: str
    holds: bool
    detail: str


def _witness_weyl_minus1() -> Witness:
    ctx = weyl_nu_xi(0, -1)
    wmin = min_weight_w(ctx)
    ok = wmin == -1 and not is_classical_on_generators(ctx, -1) and spot_check(ctx)
    return Witness("has a nontrivial (-1)-valuation", ok,
                   f"ν_0 with deg(x+y)=1, deg y=-2: generator bound w={wmin}, nonclassical, axioms spot-checked")


def _witness_weyl_zero() -> Witness:
    ctx = weyl_nu_xi(0, 0)
    ok = min_weight_w(ctx) == 0 and spot_check(ctx)
    return Witness("has a nontrivial 0-valuation", ok, "ν_0 at w=0")


def _witness_skew_lattice() -> Witness:
    vs = [(1, 0), (0, 1), (1, 1), (2, -1), (-3, 2)]
    s = torus(DEFAULT_Q)
    ctxs = [torus_lattice(s, v) for v in vs]
    ok = all(min_weight_w(c) == 0 and spot_check(c) for c in ctxs)
    gens = s.gens()
    distinct = len({tuple(c.value(g) for g in gens) for c in ctxs}) == len(vs)
    return Witness("has a Z^2 lattice family of nontrivial 0-valuations", ok and distinct,
                   f"lattice vectors {vs}: each a 0-filtration, pairwise distinct on generators")


def _witness_adams(lam_or_d, graded_elliptic: bool) -> Witness:
    omega = check_elliptic(lam_or_d) if graded_elliptic else fermat_potential(lam_or_d)
    a = adams(omega, 1)
    b = adams(omega, -1)
    wa, wb = min_weight_w(a), min_weight_w(b)
    ok = spot_check(a) and spot_check(b)
    return Witness("has a nontrivial 0-valuation", ok and wa <= 0 and wb <= 0,
                   f"Adams^Id / Adams^-Id on P_Ω: generator bounds w={wa}, {wb}")


def _witness_graded_minus1(d: int) -> Witness:
    a = adams(fermat_potential(d), 1)
    wa = min_weight_w(a)
    return Witness("has a nontrivial (-1)-valuation", wa <= -1 and spot_check(a),
                   f"Adams^Id on P_Ω, deg Ω={d}: generator bound w={wa} <= -1")


def _witness_nu_c(lam) -> Witness:
    ctx = nu_c(check_elliptic(lam), 1)
    ok = min_weight_w(ctx) == 0 and not is_classical_on_generators(ctx, 0) and spot_check(ctx)
    return Witness("has a nontrivial 0-valuation", ok, "ν^c on P_{Ω-1}: nonclassical 0-filtration")


def _witness_higher_genus_fiber(d: int) -> Witness:
    ctx = nu_c(fermat_potential(d), 1)
    z = fermat_z_filtration(d, 1)
    ok = min_weight_w(ctx) == d - 3 and min_weight_w(z) == 1 and spot_check(z)
    return Witness("ν^c has generator bound d-3 > 0; the z-filtration is a 1-filtration", ok,
                   f"deg Ω={d}: ν^c bound {min_weight_w(ctx)}, z-filtration bound {min_weight_w(z)}")


_COMPUTED: dict[tuple[str, str], Callable[[], Witness]] = {
    ("weyl", "has_minus1_valuation"): _witness_weyl_minus1,
    ("weyl", "has_nontrivial_0_valuation"): _witness_weyl_zero,
    ("q_skew", "has_nontrivial_0_valuation"): _witness_skew_lattice,
    ("graded_elliptic", "has_nontrivial_0_valuation"): lambda: _witness_adams(DEFAULT_LAMBDA, True),
    ("elliptic", "has_nontrivial_0_valuation"): lambda: _witness_nu_c(DEFAULT_LAMBDA),
    ("higher_genus_graded", "has_minus1_valuation"): lambda: _witness_graded_minus1(HIGHER_GENUS_D),
    ("higher_genus_graded", "has_nontrivial_0_valuation"): lambda: _witness_graded_minus1(HIGHER_GENUS_D),
}

# recorded fallbacks not attached to a specific row above
_DERIVED_RECORDED = {
    ("graded_elliptic", "has_faithful_0_valuation"): _rec(True, "graded elliptic classification"),
    ("elliptic", "has_faithful_0_valuation"): _rec(True, "elliptic classification"),
    ("weyl", "has_faithful_0_valuation"): _rec(True, "Weyl ν_ξ family"),
    ("q_skew", "has_faithful_0_valuation"): _rec(True, "torus lattice classification"),
    ("higher_genus", "has_faithful_0_valuation"): _rec(False, "higher genus fiber has no nontrivial 0-valuation"),
    ("q_skew", "has_nontrivial_0_valuation"): _rec(True, "torus valuations, weight zero"),
}

INVARIANTS = (
    ("has_minus1_valuation", "admits a nontrivial (-1)-valuation (α_{-1} != 0)"),
    ("alpha_0", "number of nontrivial 0-valuations up to equivalence (α_0)"),
    ("has_nontrivial_0_valuation", "admits a nontrivial 0-valuation"),
    ("faithful_0_count", "number of faithful 0-valuations"),
    ("has_faithful_0_valuation", "admits a faithful 0-valuation"),
)


@lru_cache(maxsize=None)
def _run_witness(entry: str, inv: str) -> Witness:
    return _COMPUTED[(entry, inv)]()


def invariant(entry: CatalogEntry, inv: str) -> Fact | None:
    """Computed witness if one exists and holds, else the recorded fact, else None."""
    if (entry.key, inv) in _COMPUTED:
        w = _run_witness(entry.key, inv)
        if w.holds:
            return Fact(True, "computed", "", w.detail)
    if inv in entry.recorded:
        return entry.recorded[inv]
    return _DERIVED_RECORDED.get((entry.key, inv))


@dataclass
class DistinguisherReport:
    a: str
    b: str
    lines: list[dict]

    @property
    def separated(self) -> bool:
        return bool(self.lines)

    @property
    def has_computed_witness(self) -> bool:
        return any(line["tag"] == "computed-witness" for line in self.lines)

    def to_dict(self) -> dict:
        return {"a": self.a, "b": self.b, "separated": self.separated,
                "computed_witness": self.has_computed_witness, "lines": self.lines}


def distinguisher_report(a: CatalogEntry | str, b: CatalogEntry | str) -> DistinguisherReport:
    a = get_entry(a) if isinstance(a, str) else a
    b = get_entry(b) if isinstance(b, str) else b
    if a.key == b.key:
        raise ValueError("distinguisher needs two different entries")
    lines = []
    for inv, desc in INVARIANTS:
        fa, fb = invariant(a, inv), invariant(b, inv)
        if fa is None or fb is None or fa.value == fb.value:
            continue
        computed = "computed" in (fa.source, fb.source)
        lines.append({
            "invariant": inv, "description": desc,
            "tag": "computed-witness" if computed else "recorded",
            a.key: fa.to_dict(), b.key: fb.to_dict(),
        })
    return DistinguisherReport(a.key, b.key, lines)


__all__ = [
    "CatalogEntry", "DistinguisherReport", "ENTRY_KEYS", "Fact", "NamedValuationSpec", "build_named_valuation",
    "distinguisher_report", "get_entry", "invariant", "list_entries", "named_flags", "spot_check",
    "COUNTABLE", "UNCOUNTABLE",
]
