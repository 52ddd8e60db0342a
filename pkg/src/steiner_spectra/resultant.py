"""Symmetric hyperdeterminants via the Macaulay resultant of the gradient system.

Contracting an order-k dimension-n symmetric hypermatrix with a variable
vector k-1 times yields n homogeneous forms of degree k-1; their resultant
is the symmetric hyperdeterminant.  The Macaulay construction computes it
as det(M)/det(M') at the critical degree, with an integer change of
variables as fallback when the minor M' degenerates.

Dispatch: k = 2 is an ordinary determinant, n = 2 uses the banded
Sylvester formula, and everything else within the desk-scale cap
(n <= 4, k-1 <= 5) goes through the Macaulay matrix.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement

from .exact import (
    IntMatrix,
    _is_prime_trial,
    char_poly_exact,
    char_poly_mod,
    det_exact,
)
from .hypermatrix import SymmetricHypermatrix, multinomial_weight, multisets
from .sylvester2 import hyperdet_dim2

MAX_VARS = 4
MAX_DEGREE = 5

# Macaulay-to-hyperdet normalization, calibrated against the k=2 determinant
# and the n=2 Sylvester formula (both reproduced entrywise by the Macaulay
# matrix), then frozen.
MACAULAY_SIGN = 1


class DegenerateConstructionError(RuntimeError):
    pass


# a polynomial is a dict {exponent tuple: integer coefficient}
Polynomial = dict


@dataclass(frozen=True)
class HomogeneousSystem:
    """n integer forms, all homogeneous of the same degree, in n variables."""

    nvars: int
    degree: int
    polys: tuple

    def __post_init__(self):
        if self.nvars < 1:
            raise ValueError("need at least one variable")
        if self.degree < 1:
            raise ValueError("degree must be at least 1")
        if len(self.polys) != self.nvars:
            raise ValueError("polynomial count must equal variable count")
        for p in self.polys:
            for expo, c in p.items():
                if len(expo) != self.nvars or any(e < 0 for e in expo):
                    raise ValueError(f"bad exponent vector {expo}")
                if sum(expo) != self.degree:
                    raise ValueError(f"monomial {expo} is not of degree {self.degree}")
                if not isinstance(c, int) or c == 0:
                    raise ValueError("coefficients must be nonzero integers")


def gradient_system(a: SymmetricHypermatrix) -> HomogeneousSystem:
    """The forms (contract(a, x))_i, i = 1..n, expanded symbolically."""
    n, k = a.dim, a.order
    polys = []
    for i in range(1, n + 1):
        poly: Polynomial = {}
        for ms in multisets(n, k - 1):
            c = multinomial_weight(ms) * a.entry((i,) + ms)
            if c == 0:
                continue
            expo = tuple(ms.count(v) for v in range(1, n + 1))
            poly[expo] = poly.get(expo, 0) + c
        polys.append({e: c for e, c in poly.items() if c != 0})
    return HomogeneousSystem(n, k - 1, tuple(polys))


def _monomials(nvars: int, total: int) -> list:
    """Exponent vectors of the given total degree, graded lex, largest first."""
    out = []
    for spots in combinations_with_replacement(range(nvars), total):
        expo = [0] * nvars
        for s in spots:
            expo[s] += 1
        out.append(tuple(expo))
    return sorted(out, reverse=True)


def _class_index(m, d: int) -> int:
    for i, e in enumerate(m):
        if e >= d:
            return i
    raise AssertionError(f"no coordinate of {m} reaches {d}")


def _is_reduced(m, d: int) -> bool:
    return sum(1 for e in m if e >= d) == 1


def macaulay_matrix(s: HomogeneousSystem) -> tuple[IntMatrix, list]:
    """The Macaulay matrix at the critical degree and the reduced-row flags.

    Rows and columns are indexed by the degree-D monomials, D = n(d-1)+1;
    the row of monomial m is (m / x_i^d) * F_i where i is the least index
    with x_i^d dividing m.
    """
    n, d = s.nvars, s.degree
    mons = _monomials(n, n * (d - 1) + 1)
    col = {m: j for j, m in enumerate(mons)}
    rows = []
    reduced = []
    for m in mons:
        i = _class_index(m, d)
        quotient = list(m)
        quotient[i] -= d
        row = [0] * len(mons)
        for expo, c in s.polys[i].items():
            target = tuple(q + e for q, e in zip(quotient, expo))
            row[col[target]] = c
        rows.append(row)
        reduced.append(_is_reduced(m, d))
    return IntMatrix(rows), reduced


def _macaulay_size(s: HomogeneousSystem) -> int:
    """Row count of the Macaulay matrix without building it."""
    n, d = s.nvars, s.degree
    return math.comb(n * (d - 1) + 1 + n - 1, n - 1)


def _macaulay_ratio(s: HomogeneousSystem):
    """det(M)/det(M') for one Macaulay layout, or None when M' is singular."""
    matrix, reduced = macaulay_matrix(s)
    keep = [i for i, r in enumerate(reduced) if not r]
    if not keep:
        return Fraction(det_exact(matrix))
    # minor first: when it is singular the full determinant is never needed
    minor = IntMatrix([[matrix[i, j] for j in keep] for i in keep])
    det_minor = det_exact(minor)
    if det_minor == 0:
        return None
    return Fraction(det_exact(matrix), det_minor)


def _linear_form(row, nvars: int) -> Polynomial:
    out = {}
    for j, c in enumerate(row):
        if c != 0:
            expo = tuple(1 if t == j else 0 for t in range(nvars))
            out[expo] = c
    return out


def _poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    out: Polynomial = {}
    for ea, ca in p.items():
        for eb, cb in q.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            c = out.get(e, 0) + ca * cb
            if c:
                out[e] = c
            elif e in out:
                del out[e]
    return out


def substitute(s: HomogeneousSystem, t_rows) -> HomogeneousSystem:
    """Apply the change of variables x_i = sum_j T[i][j] y_j to every form."""
    n = s.nvars
    forms = [_linear_form(t_rows[i], n) for i in range(n)]
    new_polys = []
    for p in s.polys:
        out: Polynomial = {}
        for expo, c in p.items():
            term = {tuple([0] * n): c}
            for i, e in enumerate(expo):
                for _ in range(e):
                    term = _poly_mul(term, forms[i])
            for ee, cc in term.items():
                v = out.get(ee, 0) + cc
                if v:
                    out[ee] = v
                elif ee in out:
                    del out[ee]
        new_polys.append(out)
    return HomogeneousSystem(n, s.degree, tuple(new_polys))


MAX_SUBSTITUTIONS = 8

# past this many Macaulay rows a failed substitution costs a dense exact
# determinant each, so the modular perturbation route wins outright
SUBSTITUTION_MAX_ROWS = 400

# size cap for the characteristic-polynomial fallback (quartic cost)
GCP_CHARPOLY_MAX = 80


def _gcp_constant(s: HomogeneousSystem) -> Fraction | None:
    """Resultant via diagonal perturbation when the plain minor is singular.

    Perturbing F_i by t*x_i^d adds t on the diagonal of both M and M', so
    det(M + tI)/det(M' + tI) is a polynomial in t whose constant term is
    the resultant.  Constant term = 0 when ord_t det(M+tI) exceeds
    ord_t det(M'+tI), else the ratio of trailing coefficients.  Exact but
    quartic in the matrix size, hence capped.
    """
    matrix, reduced = macaulay_matrix(s)
    if matrix.rows > GCP_CHARPOLY_MAX:
        return None
    neg = IntMatrix([[-x for x in matrix.row(i)] for i in range(matrix.rows)])
    p = char_poly_exact(neg, max_size=GCP_CHARPOLY_MAX).coeffs
    keep = [i for i, r in enumerate(reduced) if not r]
    if keep:
        minor = IntMatrix([[-matrix[i, j] for j in keep] for i in keep])
        q = char_poly_exact(minor, max_size=GCP_CHARPOLY_MAX).coeffs
    else:
        q = (1,)
    ord_p = next(i for i, c in enumerate(p) if c != 0)
    ord_q = next(i for i, c in enumerate(q) if c != 0)
    if ord_p < ord_q:
        raise ArithmeticError("perturbed Macaulay ratio is not a polynomial")
    if ord_p > ord_q:
        return Fraction(0)
    return Fraction(p[ord_p], q[ord_q])


def _modular_primes():
    """Descending primes just below 2**25, the char_poly_mod ceiling."""
    p = (1 << 25) - 1
    while p > (1 << 24):
        if _is_prime_trial(p):
            yield p
        p -= 2
    raise ArithmeticError("prime pool exhausted")  # pragma: no cover


def _gcp_constant_modular(s: HomogeneousSystem) -> Fraction:
    """Chinese-remainder version of the diagonal perturbation, any size.

    det(tI + M) = C(t) * det(tI + M') holds in Z[t] with both sides monic,
    so reducing mod p keeps the identity intact for every prime: the
    trailing-coefficient extraction returns Res mod p with no unusable
    primes.  Remaindering past 2 * max(1, ||M||_inf)^(N - N') pins the
    integer, since the constant term of C is a product of N - N'
    eigenvalues of M.
    """
    matrix, reduced = macaulay_matrix(s)
    keep = [i for i, r in enumerate(reduced) if not r]
    neg = IntMatrix([[-x for x in matrix.row(i)] for i in range(matrix.rows)])
    neg_minor = (
        IntMatrix([[-matrix[i, j] for j in keep] for i in keep]) if keep else None
    )
    norm = max(sum(abs(x) for x in matrix.row(i)) for i in range(matrix.rows))
    bound = max(1, norm) ** (matrix.rows - len(keep))
    residue, modulus = 0, 1
    for p in _modular_primes():
        pp = char_poly_mod(neg, p)
        qq = char_poly_mod(neg_minor, p) if neg_minor is not None else (1,)
        ord_p = next(i for i, c in enumerate(pp) if c)
        ord_q = next(i for i, c in enumerate(qq) if c)
        if ord_p < ord_q:  # impossible when the Z[t] identity holds
            raise ArithmeticError("perturbed Macaulay ratio is not a polynomial")
        if ord_p > ord_q:
            c = 0
        else:
            c = pp[ord_p] * pow(qq[ord_q], p - 2, p) % p
        residue += modulus * ((c - residue) * pow(modulus, -1, p) % p)
        modulus *= p
        if modulus > 2 * bound:
            break
    if residue > modulus // 2:
        residue -= modulus
    return Fraction(residue)


def macaulay_resultant(s: HomogeneousSystem, rng: random.Random | None = None):
    """Exact resultant of the system; integer for integer inputs.

    When the non-reduced minor is singular, falls back to the exact
    diagonal-perturbation route (small sizes), then to random invertible
    integer substitutions T with the det(T)^(d^n) correction, and finally
    to the modular diagonal perturbation, which cannot fail but costs a
    charpoly per prime.  The last resort matters: some vanishing systems
    keep a singular minor under every linear substitution.
    """
    if s.nvars > MAX_VARS or s.degree > MAX_DEGREE:
        raise ValueError(
            f"resultant capped at n <= {MAX_VARS}, degree <= {MAX_DEGREE}; "
            f"got n={s.nvars}, degree={s.degree}"
        )
    if any(not p for p in s.polys):
        return 0  # a vanishing form forces a nontrivial common root
    ratio = _macaulay_ratio(s)
    if ratio is None:
        ratio = _gcp_constant(s)
    if ratio is None and _macaulay_size(s) <= SUBSTITUTION_MAX_ROWS:
        if rng is None:
            rng = random.Random(0)
        try:
            ratio = _resultant_by_substitution(s, rng)
        except DegenerateConstructionError:
            ratio = None
    if ratio is None:
        ratio = _gcp_constant_modular(s)
    if ratio.denominator == 1:
        return int(ratio)
    return ratio


def _resultant_by_substitution(s: HomogeneousSystem, rng: random.Random) -> Fraction:
    n = s.nvars
    for _ in range(MAX_SUBSTITUTIONS):
        t_rows = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
        det_t = det_exact(IntMatrix(t_rows))
        if det_t == 0:
            continue
        ratio = _macaulay_ratio(substitute(s, t_rows))
        if ratio is not None:
            return ratio / Fraction(det_t) ** (s.degree**n)
    raise DegenerateConstructionError("degenerate construction")


def _as_matrix(a: SymmetricHypermatrix) -> IntMatrix:
    n = a.dim
    return IntMatrix([[a.entry((i, j)) for j in range(1, n + 1)] for i in range(1, n + 1)])


def hyperdet_route(a: SymmetricHypermatrix) -> str:
    """Which computation serves hyperdet(a): matrix-det, sylvester, or macaulay."""
    if a.order == 2:
        return "matrix-det"
    if a.dim == 2:
        return "sylvester"
    if a.dim <= MAX_VARS and a.order - 1 <= MAX_DEGREE:
        return "macaulay"
    raise ValueError(
        f"hyperdet supports k = 2, n = 2, or n <= {MAX_VARS} with "
        f"k - 1 <= {MAX_DEGREE}; got n={a.dim}, k={a.order}"
    )


def hyperdet(a: SymmetricHypermatrix, rng: random.Random | None = None):
    """Qi's symmetric hyperdeterminant, exact.

    Coincides with the ordinary determinant at k = 2 and with the
    dimension-2 Sylvester formula at n = 2.
    """
    route = hyperdet_route(a)
    if route == "matrix-det":
        return det_exact(_as_matrix(a))
    if route == "sylvester":
        return hyperdet_dim2(a)
    return MACAULAY_SIGN * macaulay_resultant(gradient_system(a), rng=rng)
