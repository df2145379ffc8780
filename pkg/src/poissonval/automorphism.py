"""Polynomial maps, ε-morphism checks and Fermat automorphism groups.

Monomial symmetries φ(x_i) = ζ_N^{e_i} x_{σ(i)} are stored as a permutation
plus exponent classes mod N.  All solutions of the Fermat bracket equations

    a1 a2 = sgn(σ) a3^{d-1},  a2 a3 = sgn(σ) a1^{d-1},  a3 a1 = sgn(σ) a2^{d-1}

are roots of unity of order dividing 2d(d-3): dividing two equations gives
(a_i/a_j)^d = 1, and multiplying the cyclic shifts of t = a_1 then yields
t^{d(d-3)} = sgn^d.  The enumeration double-checks this by re-running with
N doubled.

Materialized maps carry an extra variable ``zeta`` reduced modulo the N-th
cyclotomic polynomial, which gives an exact route independent of the
exponent arithmetic.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import gcd
from typing import Sequence

import numpy as np

from .exactpoly import Poly, PolyError, jacobian_det, substitute
from .quotient import MonomialOrder, QuotientRing, exact_quotient, fermat_potential, normal_form

S3 = tuple(permutations(range(3)))  # fixed order: id, (23), (12), (123), (132), (13)
ZETA = "zeta"


def perm_sign(p: Sequence[int]) -> int:
    s = 1
    p = list(p)
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                s = -s
    return s


def perm_name(p: Sequence[int]) -> str:
    return "".join(str(i + 1) for i in p)


# cyclotomic arithmetic

@lru_cache(maxsize=None)
def cyclotomic(n: int) -> tuple[Fraction, ...]:
    """Coefficients (low to high) of the n-th cyclotomic polynomial."""
    t = (ZETA,)
    num = Poly.monomial((n,), t) - 1
    for k in range(1, n):
        if n % k == 0:
            q = exact_quotient(num, Poly(t, dict(((i,), c) for i, c in enumerate(cyclotomic(k)))))
            num = q
    deg = num.total_degree()
    return tuple(num.coefficient((i,)) for i in range(deg + 1))


def _upoly_trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _upoly_divmod(a, b):
    a = _upoly_trim(a)
    b = _upoly_trim(b)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    while len(a) >= len(b) and a:
        c = a[-1] / b[-1]
        k = len(a) - len(b)
        q[k] = c
        for i, bc in enumerate(b):
            a[i + k] -= c * bc
        a = _upoly_trim(a)
    return _upoly_trim(q), a


def _upoly_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _upoly_trim(out)


def _upoly_sub(a, b):
    n = max(len(a), len(b))
    return _upoly_trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


def cyclotomic_inverse(a: Sequence[Fraction], n: int) -> list[Fraction]:
    """Inverse of a (low-to-high coefficients) in Q[ζ]/Φ_n via extended Euclid."""
    m = list(cyclotomic(n))
    r0, r1 = m, _upoly_trim(a)
    s0, s1 = [], [Fraction(1)]
    if not r1:
        raise ZeroDivisionError("zero is not invertible")
    while len(r1) > 1:
        q, r = _upoly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _upoly_sub(s0, _upoly_mul(q, s1))
        if not r1:
            raise ZeroDivisionError("element shares a factor with the cyclotomic polynomial")
    inv = [c / r1[0] for c in s1]
    return _upoly_divmod(inv, m)[1]


@lru_cache(maxsize=None)
def cyclotomic_ring(vars: tuple[str, ...], n: int) -> QuotientRing:
    idx = vars.index(ZETA)
    phi = Poly(vars, {tuple(i if k == idx else 0 for k in range(len(vars))): c
                      for i, c in enumerate(cyclotomic(n))})
    order = MonomialOrder.lex(ZETA, *(v for v in vars if v != ZETA))
    return QuotientRing(vars, phi, order)


# polynomial maps

@dataclass(frozen=True)
class PolyMap:
    """φ(x_i) = images[i]; with ``root_order`` N the images may use ``zeta``, a primitive N-th root of unity."""

    vars: tuple[str, ...]
    images: tuple[Poly, ...]
    root_order: int | None = None

    def __post_init__(self):
        if len(self.images) != len(self.vars):
            raise PolyError("one image per variable")
        ring = self.ring
        for img in self.images:
            if img.vars != ring or img.laurent:
                raise PolyError(f"images must be polynomials over {ring}")

    @property
    def ring(self) -> tuple[str, ...]:
        return self.vars + ((ZETA,) if self.root_order else ())

    @classmethod
    def from_strings(cls, images: Sequence[str], vars: Sequence[str] = ("x", "y", "z")) -> "PolyMap":
        from .exactpoly import parse_poly
        vars = tuple(vars)
        return cls(vars, tuple(parse_poly(s, vars) for s in images))

    @classmethod
    def identity(cls, vars: Sequence[str] = ("x", "y", "z")) -> "PolyMap":
        vars = tuple(vars)
        return cls(vars, Poly.gens(vars))

    def reduce(self, f: Poly) -> Poly:
        if self.root_order is None:
            return f
        return normal_form(cyclotomic_ring(self.ring, self.root_order), f)

    def lift(self, f: Poly) -> Poly:
        """Embed an element over ``vars`` into the map's coefficient ring."""
        return f.embed(self.ring) if f.vars != self.ring else f

    def apply(self, f: Poly) -> Poly:
        if f.vars == self.ring and self.root_order:
            assignment = dict(zip(self.vars, self.images))
            assignment[ZETA] = Poly.var(ZETA, self.ring)
        elif f.vars == self.vars:
            assignment = dict(zip(self.vars, self.images))
        else:
            raise PolyError(f"cannot apply a map on {self.vars} to an element over {f.vars}")
        return self.reduce(substitute(f, assignment))

    def compose(self, other: "PolyMap") -> "PolyMap":
        """(self ∘ other)(x) = self(other(x))."""
        if self.vars != other.vars:
            raise PolyError("maps over different variables")
        n = self.root_order or other.root_order
        if self.root_order and other.root_order and self.root_order != other.root_order:
            raise PolyError("maps use different roots of unity")
        a = self.with_root_order(n)
        b = other.with_root_order(n)
        return PolyMap(a.vars, tuple(a.apply(img) for img in b.images), n)

    def with_root_order(self, n: int | None) -> "PolyMap":
        if n == self.root_order or n is None:
            return self
        if self.root_order is not None:
            raise PolyError("cannot change the root order of a materialized map")
        ring = self.vars + (ZETA,)
        return PolyMap(self.vars, tuple(img.embed(ring) for img in self.images), n)


def map_jacobian(phi: PolyMap) -> Poly:
    if len(phi.vars) != 3:
        raise PolyError("Jacobian determinants need three variables")
    f, g, h = phi.images
    return phi.reduce(jacobian_det(f, g, h, phi.vars))


def _scalar_coeffs(p: Poly, phi: PolyMap) -> list[Fraction] | None:
    """Low-to-high ζ-coefficients if p is free of the map's variables."""
    if phi.root_order is None:
        return [p.constant_value()] if p.is_constant() else None
    zi = phi.ring.index(ZETA)
    out: dict[int, Fraction] = {}
    for m, c in p.terms.items():
        if any(e for k, e in enumerate(m) if k != zi):
            return None
        out[m[zi]] = c
    if not out:
        return []
    return [out.get(i, Fraction(0)) for i in range(max(out) + 1)]


def _from_coeffs(coeffs: Sequence[Fraction], phi: PolyMap) -> Poly:
    ring = phi.ring
    if phi.root_order is None:
        return Poly.const(coeffs[0] if coeffs else 0, ring)
    zi = ring.index(ZETA)
    return Poly(ring, {tuple(i if k == zi else 0 for k in range(len(ring))): c for i, c in enumerate(coeffs)})


def _scalar_str(coeffs: Sequence[Fraction], phi: PolyMap) -> str:
    return str(_from_coeffs(coeffs, phi)) if coeffs else "0"


@dataclass(frozen=True)
class EpsilonReport:
    ok: bool
    hdet: Poly | None = None
    jacobian: Poly | None = None
    pdet: Poly | None = None
    poisson: bool = False
    identity_holds: bool = False
    bracket_check: bool = False
    reason: str = ""

    def to_dict(self) -> dict:
        if not self.ok:
            return {"ok": False, "reason": self.reason}
        return {"ok": True, "hdet": str(self.hdet), "jacobian": str(self.jacobian), "pdet": str(self.pdet),
                "poisson": self.poisson, "hdet_equals_pdet_times_J": self.identity_holds,
                "bracket_check": self.bracket_check}


def epsilon_check(phi: PolyMap, omega: Poly) -> EpsilonReport:
    """Decide whether φ(Ω) = cΩ with J(φ) a nonzero scalar; report c, J and e = c/J."""
    if omega.vars != phi.vars:
        raise PolyError("potential and map must share variables")
    image = phi.apply(omega)
    lifted = phi.lift(omega)
    ref = max(omega.terms, key=lambda m: (sum(m), m))
    zi = phi.ring.index(ZETA) if phi.root_order else None
    coeffs: dict[int, Fraction] = {}
    for m, c in image.terms.items():
        base = tuple(e for k, e in enumerate(m) if k != zi)
        if base == ref:
            coeffs[m[zi] if zi is not None else 0] = c
    c_coeffs = [coeffs.get(i, Fraction(0)) / omega.terms[ref] for i in range(max(coeffs) + 1)] if coeffs else []
    c_poly = _from_coeffs(c_coeffs, phi) if c_coeffs else Poly.zero(phi.ring)
    if not c_poly or phi.reduce(c_poly * lifted) != image:
        return EpsilonReport(False, reason=f"φ(Ω) = {image} is not a scalar multiple of Ω")
    jac = map_jacobian(phi)
    j_coeffs = _scalar_coeffs(jac, phi)
    if j_coeffs is None or not j_coeffs:
        return EpsilonReport(False, reason=f"J(φ) = {jac} is not a nonzero scalar")
    if phi.root_order:
        j_inv = cyclotomic_inverse(j_coeffs, phi.root_order)
    else:
        j_inv = [1 / j_coeffs[0]]
    pdet = phi.reduce(c_poly * _from_coeffs(j_inv, phi))
    one = Poly.const(1, phi.ring)
    identity_holds = phi.reduce(pdet * jac) == c_poly
    # direct check of φ({x_i, x_j}) = e {φ(x_i), φ(x_j)} on generator pairs
    gens = Poly.gens(phi.vars)
    lifted_omega = lifted
    ok_br = True
    for i, j in ((0, 1), (1, 2), (0, 2)):
        lhs = phi.apply(jacobian_det(gens[i], gens[j], omega, phi.vars))
        rhs = phi.reduce(pdet * jacobian_det(phi.images[i], phi.images[j], lifted_omega, phi.vars))
        if lhs != rhs:
            ok_br = False
            break
    return EpsilonReport(True, c_poly, jac, pdet, pdet == one, identity_holds, ok_br)


# monomial symmetries

@dataclass(frozen=True, order=True)
class MonomialSymmetry:
    """φ(x_i) = ζ_N^{e_i} x_{σ(i)}, with σ a tuple of 0-based images."""

    sigma: tuple[int, int, int]
    N: int
    exps: tuple[int, int, int]

    def __post_init__(self):
        if sorted(self.sigma) != [0, 1, 2]:
            raise PolyError(f"{self.sigma} is not a permutation of 0..2")
        if self.N < 1:
            raise PolyError("root order must be positive")
        object.__setattr__(self, "exps", tuple(e % self.N for e in self.exps))

    @classmethod
    def identity(cls, N: int) -> "MonomialSymmetry":
        return cls((0, 1, 2), N, (0, 0, 0))

    @property
    def sign(self) -> int:
        return perm_sign(self.sigma)

    def compose(self, other: "MonomialSymmetry") -> "MonomialSymmetry":
        """(self ∘ other)(x_i) = self(other(x_i))."""
        if self.N != other.N:
            raise PolyError("symmetries use different root orders")
        t, s = other.sigma, self.sigma
        sig = tuple(s[t[i]] for i in range(3))
        ex = tuple(other.exps[i] + self.exps[t[i]] for i in range(3))
        return MonomialSymmetry(sig, self.N, ex)

    def inverse(self) -> "MonomialSymmetry":
        inv = [0, 0, 0]
        for i, si in enumerate(self.sigma):
            inv[si] = i
        ex = tuple(-self.exps[inv[j]] for j in range(3))
        return MonomialSymmetry(tuple(inv), self.N, ex)

    def rescaled(self, N: int) -> "MonomialSymmetry":
        if N % self.N:
            raise PolyError(f"{self.N} does not divide {N}")
        k = N // self.N
        return MonomialSymmetry(self.sigma, N, tuple(k * e for e in self.exps))

    def jacobian_exponent(self) -> int:
        """Exponent of J(φ) = sgn(σ) a1 a2 a3 as a power of ζ_N (N even)."""
        h = self.N // 2 if self.sign < 0 else 0
        return (h + sum(self.exps)) % self.N

    def to_polymap(self, vars: Sequence[str] = ("x", "y", "z")) -> PolyMap:
        vars = tuple(vars)
        ring = vars + (ZETA,)
        imgs = []
        for i in range(3):
            mono = [0] * 4
            mono[self.sigma[i]] = 1
            mono[3] = self.exps[i]
            imgs.append(Poly(ring, {tuple(mono): 1}))
        raw = PolyMap(vars, tuple(imgs), self.N)
        return PolyMap(vars, tuple(raw.reduce(img) for img in imgs), self.N)

    def to_dict(self) -> dict:
        return {"sigma": perm_name(self.sigma), "N": self.N, "exponents": list(self.exps)}


def _sign_exponent(sigma, N: int) -> int:
    if N % 2:
        raise PolyError("root order must be even so that -1 is a power of ζ_N")
    return N // 2 if perm_sign(sigma) < 0 else 0


def symmetry_satisfies(s: MonomialSymmetry, d: int, variant: str = "graded") -> bool:
    N = s.N
    h = _sign_exponent(s.sigma, N)
    e1, e2, e3 = s.exps
    if variant == "graded":
        return ((e1 + e2 - h - (d - 1) * e3) % N == 0
                and (e2 + e3 - h - (d - 1) * e1) % N == 0
                and (e3 + e1 - h - (d - 1) * e2) % N == 0)
    if variant == "fiber":
        return all((d * e) % N == 0 for e in s.exps) and (e1 + e2 + e3 - h) % N == 0
    raise ValueError(f"unknown variant {variant!r}")


def default_root_order(d: int, variant: str) -> int:
    if variant == "graded":
        return 2 * d * (d - 3)
    if variant == "fiber":
        return d * 2 // gcd(d, 2)
    raise ValueError(f"unknown variant {variant!r}")


def _solve_sigma(sigma, d: int, N: int, variant: str) -> np.ndarray:
    h = _sign_exponent(sigma, N)
    e = np.arange(N, dtype=np.int64)
    e1 = e[:, None, None]
    e2 = e[None, :, None]
    e3 = e[None, None, :]
    if variant == "graded":
        mask = (((e1 + e2 - h - (d - 1) * e3) % N == 0)
                & ((e2 + e3 - h - (d - 1) * e1) % N == 0)
                & ((e3 + e1 - h - (d - 1) * e2) % N == 0))
    else:
        mask = (((d * e1) % N == 0) & ((d * e2) % N == 0) & ((d * e3) % N == 0)
                & ((e1 + e2 + e3 - h) % N == 0))
    return np.argwhere(mask)  # row-major: sorted by (e1, e2, e3)


def _thread_count() -> int:
    raw = os.environ.get("POISSONVAL_THREADS")
    if not raw:
        return 1
    try:
        n = int(raw)
    except ValueError:
        raise PolyError(f"POISSONVAL_THREADS must be a positive integer, got {raw!r}") from None
    if n < 1:
        raise PolyError(f"POISSONVAL_THREADS must be a positive integer, got {raw!r}")
    return n


@dataclass
class GroupReport:
    d: int
    variant: str
    N: int
    elements: list[MonomialSymmetry]
    order: int
    identity_subgroup_order: int
    quotient_image: list[tuple[int, int, int]]
    quotient: str
    split: bool
    signed_permutation_section: bool
    claims_verified: bool
    certificates: dict = field(default_factory=dict)

    def to_dict(self, with_elements: bool = False) -> dict:
        out = {
            "d": self.d, "variant": self.variant, "N": self.N, "order": self.order,
            "identity_subgroup_order": self.identity_subgroup_order,
            "quotient": self.quotient, "quotient_image": [perm_name(s) for s in self.quotient_image],
            "split": self.split, "signed_permutation_section": self.signed_permutation_section,
            "claims_verified": self.claims_verified,
            "certificates": self.certificates,
        }
        if with_elements:
            out["elements"] = [e.to_dict() for e in self.elements]
        return out


def quotient_name(image: Sequence[tuple[int, int, int]]) -> str:
    n = len(image)
    if n == 6:
        return "S3"
    if n == 3:
        return "C3"
    if n == 2:
        return "C2"
    return "1"


def enumerate_fermat(d: int, variant: str = "graded", N: int | None = None,
                     threads: int | None = None) -> GroupReport:
    """All monomial symmetries of x^d + y^d + z^d in the given variant.

    ``graded`` solves the bracket equations (Poisson automorphisms of P_Ω);
    ``fiber`` requires φ(Ω) = Ω and J(φ) = 1 (automorphisms of P_{Ω-ξ}).
    """
    if d < 4:
        raise PolyError("enumeration needs d >= 4")
    if variant not in ("graded", "fiber"):
        raise ValueError(f"unknown variant {variant!r}")
    N = N or default_root_order(d, variant)
    threads = threads or _thread_count()
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            found = list(pool.map(lambda s: _solve_sigma(s, d, N, variant), S3))
    else:
        found = [_solve_sigma(s, d, N, variant) for s in S3]
    elements = [MonomialSymmetry(s, N, tuple(int(v) for v in row))
                for s, rows in zip(S3, found) for row in rows]
    image = [s for s, rows in zip(S3, found) if len(rows)]
    ident = len(found[0])
    by_sigma = {s: [e for e in elements if e.sigma == s] for s in image}
    split = find_section(by_sigma, image) is not None
    signed = all(
        MonomialSymmetry(s, N, (_sign_exponent(s, N),) * 3) in set(by_sigma[s]) for s in image)
    return GroupReport(d, variant, N, elements, len(elements), ident, image, quotient_name(image),
                       split, signed, d >= 5)


def _order_of(e: MonomialSymmetry, limit: int) -> int:
    ident = MonomialSymmetry.identity(e.N)
    cur = e
    for k in range(1, limit + 1):
        if cur == ident:
            return k
        cur = cur.compose(e)
    return 0


def find_section(by_sigma: dict, image: Sequence[tuple[int, int, int]]):
    """Elements forming a subgroup that maps isomorphically onto the σ-image, or None."""
    img = set(image)
    if len(img) == 1:
        return []
    three = (1, 2, 0)
    two = next((s for s in img if perm_sign(s) < 0), None)
    c_lifts = [e for e in by_sigma.get(three, []) if _order_of(e, 3) == 3] if three in img else []
    if len(img) == 3:
        return [c_lifts[0]] if c_lifts else None
    t_lifts = [e for e in by_sigma.get(two, []) if _order_of(e, 2) == 2] if two else []
    if len(img) == 2:
        return [t_lifts[0]] if t_lifts else None
    for c in c_lifts:
        cinv = c.inverse()
        for t in t_lifts:
            if t.compose(c).compose(t) == cinv:
                return [c, t]
    return None


# verification

def _arrays(elems: Sequence[MonomialSymmetry]):
    sig = np.array([S3.index(e.sigma) for e in elems], dtype=np.int64)
    ex = np.array([e.exps for e in elems], dtype=np.int64).reshape(-1, 3)
    return sig, ex


_PERM = np.array(S3, dtype=np.int64)
_COMPOSE = np.array([[S3.index(tuple(S3[a][S3[b][i]] for i in range(3))) for b in range(6)] for a in range(6)])


def _codes(sig, ex, N):
    return ((sig * N + ex[..., 0]) * N + ex[..., 1]) * N + ex[..., 2]


def _compose_all(sa, ea, sb, eb, N):
    """Pairwise products a ∘ b, broadcast over leading axes."""
    sig = _COMPOSE[sa, sb]
    tb = _PERM[sb]  # σ_b as index arrays
    ea_perm = np.take_along_axis(np.broadcast_to(ea, np.broadcast_shapes(ea.shape, eb.shape)).copy(),
                                 np.broadcast_to(tb, np.broadcast_shapes(ea.shape, eb.shape)), axis=-1)
    return sig, (eb + ea_perm) % N


def group_verify(report: GroupReport, counterexample: dict | None = None) -> bool:
    """Closure, identity, inverses, normality of the Jacobian-1 part and quotient orders."""
    elems = report.elements
    N = report.N
    cert = {} if counterexample is None else counterexample
    if not elems:
        cert["reason"] = "empty"
        return False
    sig, ex = _arrays(elems)
    codes = _codes(sig, ex, N)
    if len(np.unique(codes)) != len(codes):
        cert["reason"] = "duplicate elements"
        return False
    code_set = np.sort(codes)
    if _codes(np.array(0), np.zeros(3, dtype=np.int64), N) not in set(codes.tolist()):
        cert["reason"] = "identity missing"
        return False
    sa, sb = sig[:, None], sig[None, :]
    ea, eb = ex[:, None, :], ex[None, :, :]
    csig, cex = _compose_all(sa, ea, sb, eb, N)
    prod = _codes(csig, cex, N)
    member = np.isin(prod, code_set)
    if not member.all():
        a, b = map(int, np.argwhere(~member)[0])
        cert.update(reason="closure", a=elems[a].to_dict(), b=elems[b].to_dict())
        return False
    for e in elems:
        if e.inverse() not in set(elems):
            cert.update(reason="inverse", a=e.to_dict())
            return False
    # identity-σ subgroup and the σ-image
    image = sorted({e.sigma for e in elems}, key=S3.index)
    kernel = [e for e in elems if e.sigma == (0, 1, 2)]
    if len(elems) != len(kernel) * len(image) or quotient_name(image) != report.quotient:
        cert["reason"] = "quotient order mismatch"
        return False
    if not _is_normal(elems, kernel, N):
        cert["reason"] = "identity-σ subgroup not normal"
        return False
    # Jacobian-1 (fiber) part, normal with quotient the J-image
    fiber = [e for e in elems if e.jacobian_exponent() == 0 and all((report.d * x) % N == 0 for x in e.exps)]
    jvals = {e.jacobian_exponent() for e in elems} if report.variant == "graded" else {0}
    if report.variant == "graded":
        if not _is_normal(elems, fiber, N):
            cert["reason"] = "fiber subgroup not normal"
            return False
        jker = [e for e in elems if e.jacobian_exponent() == 0]
        if len(elems) != len(jker) * len(jvals):
            cert["reason"] = "Jacobian image order mismatch"
            return False
    report.certificates.update(
        closure=True, inverses=True, identity=True, kernel_normal=True,
        fiber_order=len(fiber), jacobian_image_order=len(jvals),
    )
    return True


def _is_normal(group, sub, N) -> bool:
    if not sub:
        return False
    sub_codes = np.sort(_codes(*_arrays(sub), N))
    gs, ge = _arrays(group)
    hs, he = _arrays(sub)
    ginv = [g.inverse() for g in group]
    is_, ie = _arrays(ginv)
    # g h g^-1
    s1, e1 = _compose_all(gs[:, None], ge[:, None, :], hs[None, :], he[None, :, :], N)
    s2, e2 = _compose_all(s1, e1, is_[:, None], ie[:, None, :], N)
    return bool(np.isin(_codes(s2, e2, N), sub_codes).all())


def embed_fiber(fiber: GroupReport, graded: GroupReport) -> list[MonomialSymmetry]:
    return [e.rescaled(graded.N) for e in fiber.elements]


@dataclass(frozen=True)
class GenusBounds:
    d: int
    genus: int
    hurwitz: int
    order_bound: int
    consistent: bool

    def to_dict(self) -> dict:
        return {"d": self.d, "genus": self.genus, "hurwitz": self.hurwitz,
                "bound": self.order_bound, "consistent": self.consistent}


def genus_and_bounds(d: int) -> GenusBounds:
    if d < 4:
        raise PolyError("bounds are stated for d >= 4")
    g = (d - 1) * (d - 2) // 2
    hurwitz = 84 * (g - 1)
    bound = 42 * d * (d - 3) ** 2
    return GenusBounds(d, g, hurwitz, bound, (d - 3) * hurwitz == bound)


def fermat(d: int) -> Poly:
    return fermat_potential(d)
