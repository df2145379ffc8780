"""Independent reference computations used only by the tests."""

from fractions import Fraction
from itertools import product

import numpy as np

from poissonval.exactpoly import Poly
from poissonval.linalg import rank


def monomials_of_degree(n: int, k: int):
    return [m for m in product(range(k + 1), repeat=n) if sum(m) == k]


def jacobian_algebra_dimension(omega: Poly) -> int | None:
    """dim Q[x,y,z]/(Ω_x, Ω_y, Ω_z) by linear algebra in each degree.

    The partials are homogeneous of degree e = d - 1; the ideal in degree k is
    spanned by monomial multiples of degree k - e.  For an isolated singularity
    the quotient vanishes above degree 3(d - 2); returns None if it does not.
    """
    parts = [omega.diff(v) for v in omega.vars]
    e = omega.total_degree() - 1
    top = 3 * (e - 1)
    total = 0
    for k in range(top + 2):
        monos = monomials_of_degree(3, k)
        idx = {m: i for i, m in enumerate(monos)}
        rows = []
        if k >= e:
            for s in monomials_of_degree(3, k - e):
                for p in parts:
                    row = [Fraction(0)] * len(monos)
                    for m, c in p.terms.items():
                        row[idx[tuple(a + b for a, b in zip(m, s))]] += c
                    rows.append(row)
        dim = len(monos) - (rank(rows, len(monos)) if rows else 0)
        if k == top + 1:
            return total if dim == 0 else None
        total += dim
    return total


def fermat_symmetry_count(d: int, variant: str, N: int) -> int:
    """Brute-force count of monomial maps a_i x_{σ(i)} with a_i = exp(2πi e_i/N).

    Conditions are checked numerically at random complex points:
    graded: {φx_i, φx_j} = φ({x_i, x_j}) for the Jacobian bracket;
    fiber: the same plus φ(Ω) = Ω.
    """
    from itertools import permutations
    rs = np.random.default_rng(7)
    pts = rs.normal(size=(3, 3)) + 1j * rs.normal(size=(3, 3))

    def grad_omega(p):
        return d * p ** (d - 1)

    roots = np.exp(2j * np.pi * np.arange(N) / N)
    count = 0
    for sigma in permutations(range(3)):
        P = np.zeros((3, 3))
        for i, s in enumerate(sigma):
            P[i, s] = 1
        for e in product(range(N), repeat=3):
            a = roots[list(e)]
            M = a[:, None] * P  # φ(p) = M @ p
            ok = True
            for p in pts:
                q = M @ p
                if variant == "fiber" and abs(np.sum(q ** d) - np.sum(p ** d)) > 1e-6:
                    ok = False
                    break
                g = grad_omega(p)
                for i, j in ((0, 1), (1, 2), (2, 0)):
                    lhs = np.linalg.det(np.array([M[i], M[j], g]))
                    k = 3 - i - j
                    sgn = 1 if (i, j) in ((0, 1), (1, 2), (2, 0)) else -1
                    rhs = sgn * grad_omega(q)[k]
                    if abs(lhs - rhs) > 1e-6 * (1 + abs(rhs)):
                        ok = False
                        break
                if not ok:
                    break
            count += ok
    return count
