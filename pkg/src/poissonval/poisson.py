"""Poisson structures on polynomial and Laurent rings.

A structure stores one Poly per generator pair ``i < j``; the bracket of
arbitrary elements is the bilinear derivation extension

    {f, g} = sum_{i<j} (df/dx_i dg/dx_j - df/dx_j dg/dx_i) {x_i, x_j}

which for Laurent monomials reproduces ``{f, x^-1} = -x^-2 {f, x}``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Mapping, Sequence

from .exactpoly import Poly, PolyError, RingMismatch, as_fraction, jacobian_det


class NotPoisson(PolyError):
    """A bracket table failing the Jacobi identity on generators."""


@dataclass(frozen=True)
class PoissonStructure:
    vars: tuple[str, ...]
    table: Mapping[tuple[int, int], Poly]
    laurent: bool = False
    provenance: tuple = ("custom",)
    checked: bool = field(default=True, compare=False)

    def __post_init__(self):
        for (i, j), p in self.table.items():
            if not i < j:
                raise PolyError(f"table keys must satisfy i < j, got {(i, j)}")
            if p.vars != self.vars or p.laurent != self.laurent:
                raise RingMismatch(f"table entry {(i, j)} lives in a different ring")

    @property
    def kind(self) -> str:
        return self.provenance[0]

    @property
    def potential(self) -> Poly | None:
        return self.provenance[1] if self.kind == "potential" else None

    def gens(self) -> tuple[Poly, ...]:
        return Poly.gens(self.vars, self.laurent)

    def gen_bracket(self, i: int, j: int) -> Poly:
        if i == j:
            return Poly.zero(self.vars, self.laurent)
        if i < j:
            return self.table.get((i, j)) or Poly.zero(self.vars, self.laurent)
        return -self.gen_bracket(j, i)

    def bracket(self, f: Poly, g: Poly) -> Poly:
        return bracket(self, f, g)

    def parse(self, text: str) -> Poly:
        from .exactpoly import parse_poly
        return parse_poly(text, self.vars, "laurent" if self.laurent else "polynomial")


def structure_from_potential(omega: Poly) -> PoissonStructure:
    """{x,y} = dΩ/dz, {y,z} = dΩ/dx, {z,x} = dΩ/dy."""
    if omega.nvars != 3:
        raise PolyError(f"a potential needs exactly three variables, got {omega.vars}")
    if omega.laurent:
        raise PolyError("potentials live in polynomial mode")
    x, y, z = omega.vars
    table = {
        (0, 1): omega.diff(z),
        (1, 2): omega.diff(x),
        (0, 2): -omega.diff(y),
    }
    table = {k: v for k, v in table.items() if v}
    return PoissonStructure(omega.vars, table, False, ("potential", omega))


def weyl(vars: Sequence[str] = ("x", "y")) -> PoissonStructure:
    """The Weyl structure {x, y} = 1."""
    vars = tuple(vars)
    if len(vars) != 2:
        raise PolyError("the Weyl structure has two generators")
    return PoissonStructure(vars, {(0, 1): Poly.const(1, vars)}, False, ("weyl",))


def skew(q, vars: Sequence[str] = ("x", "y")) -> PoissonStructure:
    """Polynomial q-skew structure {x, y} = q x y."""
    vars = tuple(vars)
    q = as_fraction(q)
    x, y = Poly.gens(vars)
    table = {(0, 1): (x * y).scale(q)} if q else {}
    return PoissonStructure(vars, table, False, ("skew", q))


def torus(p: Mapping[tuple[int, int], object] | object, m: int = 2,
          vars: Sequence[str] | None = None) -> PoissonStructure:
    """Poisson torus on x_1^{±1}..x_m^{±1} with {x_i, x_j} = p_ij x_i x_j.

    ``p`` is either a mapping on pairs ``(i, j)`` with ``i < j`` (0-based) or a
    single scalar used for ``m = 2``.
    """
    if vars is None:
        vars = tuple(f"x{k + 1}" for k in range(m))
    vars = tuple(vars)
    m = len(vars)
    if not isinstance(p, Mapping):
        if m != 2:
            raise PolyError("a scalar p needs m = 2")
        p = {(0, 1): p}
    g = Poly.gens(vars, laurent=True)
    table = {}
    coeffs = {}
    for (i, j), q in p.items():
        if not (0 <= i < j < m):
            raise PolyError(f"bad torus index pair {(i, j)}")
        q = as_fraction(q)
        coeffs[(i, j)] = q
        if q:
            table[(i, j)] = (g[i] * g[j]).scale(q)
    return PoissonStructure(vars, table, True, ("torus", tuple(sorted(coeffs.items()))))


def custom(vars: Sequence[str], table: Mapping[tuple[int, int], Poly], laurent: bool = False,
           unchecked: bool = False) -> PoissonStructure:
    """Build a structure from an explicit table; Jacobi is verified on generator triples unless ``unchecked``."""
    vars = tuple(vars)
    clean = {}
    for (i, j), v in table.items():
        if i == j:
            if v:
                raise PolyError("diagonal bracket entries must vanish")
            continue
        if i > j:
            i, j, v = j, i, -v
        if v:
            clean[(i, j)] = v
    s = PoissonStructure(vars, clean, laurent, ("custom",), checked=not unchecked)
    if not unchecked:
        for a, b, c in combinations(range(len(vars)), 3):
            g = s.gens()
            r = jacobi_residual(s, g[a], g[b], g[c])
            if r:
                raise NotPoisson(f"Jacobi fails on ({vars[a]}, {vars[b]}, {vars[c]}): {r}")
    return s


def _check_ring(s: PoissonStructure, *ps: Poly):
    for p in ps:
        if p.vars != s.vars or p.laurent != s.laurent:
            raise RingMismatch(f"element over {p.vars} does not belong to the structure's ring {s.vars}")


def bracket(s: PoissonStructure, f: Poly, g: Poly) -> Poly:
    _check_ring(s, f, g)
    result = Poly.zero(s.vars, s.laurent)
    if not f or not g:
        return result
    df = {}
    dg = {}
    for (i, j), pij in s.table.items():
        for k in (i, j):
            if k not in df:
                df[k] = f.diff(s.vars[k])
                dg[k] = g.diff(s.vars[k])
        coef = df[i] * dg[j] - df[j] * dg[i]
        if coef:
            result = result + coef * pij
    return result


def jacobi_residual(s: PoissonStructure, f: Poly, g: Poly, h: Poly) -> Poly:
    return (bracket(s, f, bracket(s, g, h))
            + bracket(s, g, bracket(s, h, f))
            + bracket(s, h, bracket(s, f, g)))


def jacobian_bracket(omega: Poly, f: Poly, g: Poly) -> Poly:
    """Determinant form of the potential bracket, independent of the table route."""
    return jacobian_det(f, g, omega, omega.vars)


def rescale(s: PoissonStructure, e) -> PoissonStructure:
    e = as_fraction(e)
    if not e:
        raise PolyError("rescaling factor must be nonzero")
    table = {k: v.scale(e) for k, v in s.table.items()}
    return PoissonStructure(s.vars, table, s.laurent, ("custom",), checked=s.checked)


def is_poisson_on_generators(s: PoissonStructure) -> bool:
    g = s.gens()
    return all(not jacobi_residual(s, g[a], g[b], g[c])
               for a, b, c in combinations(range(len(g)), 3))


def table_strings(s: PoissonStructure) -> dict[str, str]:
    """Printable ``{a,b}`` entries; potential structures use the cyclic pairs."""
    v = s.vars
    if s.kind == "potential":
        pairs = [(0, 1), (1, 2), (2, 0)]
    else:
        pairs = list(combinations(range(len(v)), 2))
    return {f"{{{v[i]},{v[j]}}}": str(s.gen_bracket(i, j)) for i, j in pairs}


__all__ = [
    "NotPoisson", "PoissonStructure", "bracket", "custom", "is_poisson_on_generators",
    "jacobi_residual", "jacobian_bracket", "rescale", "skew", "structure_from_potential",
    "table_strings", "torus", "weyl",
]
