"""Knot signatures for two-bridge knots, exactly.

The route is classical plumbing data: expand p/q* (q* the even
representative of q or p-q) as an even continued fraction

    p/q* = 2b_1 - 1/(2b_2 - 1/( ... - 1/(2b_k)))

and form the symmetric tridiagonal matrix with diagonal (2b_1, ..., 2b_k)
and off-diagonal 1.  Its signature is the knot signature (up to the
mirror convention fixed by choosing the even representative) and its
determinant is +-p, which is asserted on every call as a corruption
check.  Eigenvalue counts are exact: negative eigenvalues are counted by
Sturm's method on the characteristic polynomial.

For the four double twist families the signatures are known in closed
form (2, 0, 2-2n, 2n); signature_family provides them for
cross-validation against the matrix computation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import UniPoly, poly_gcd
from .realroots import cauchy_bound, count_in_interval
from .twobridge import DoubleTwist, KnotId


class SignatureError(RuntimeError):
    """Internal consistency failure (e.g. |det| != p): upstream bug."""


@dataclass(frozen=True, slots=True)
class EvenCF:
    """Even continued fraction expansion: all entries even and nonzero.

    Evaluating entries (e_1, ..., e_k) as e_1 - 1/(e_2 - 1/(...)) must
    reproduce p/q* exactly; for knot inputs k is even (asserted where
    the expansion is produced).
    """

    entries: tuple[int, ...]

    def __post_init__(self):
        if not self.entries:
            raise ValueError("even continued fraction must have at least one entry")
        for e in self.entries:
            if e == 0 or e % 2 != 0:
                raise ValueError(f"entries must be nonzero even integers, got {e}")

    def value(self) -> Fraction:
        acc = Fraction(self.entries[-1])
        for e in reversed(self.entries[:-1]):
            acc = e - 1 / acc
        return acc

    def __len__(self) -> int:
        return len(self.entries)


@dataclass(frozen=True, slots=True)
class SymMatrix:
    """Dense symmetric matrix of exact integers."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        k = len(self.rows)
        for row in self.rows:
            if len(row) != k:
                raise ValueError("matrix must be square")
        for i in range(k):
            for j in range(i):
                if self.rows[i][j] != self.rows[j][i]:
                    raise ValueError(f"matrix not symmetric at ({i}, {j})")

    @property
    def dim(self) -> int:
        return len(self.rows)

    def is_tridiagonal(self) -> bool:
        return all(
            self.rows[i][j] == 0
            for i in range(self.dim)
            for j in range(self.dim)
            if abs(i - j) > 1
        )


def even_cf(k: KnotId) -> EvenCF:
    """Even continued fraction of p/q*, q* the even one of {q, p-q}.

    Each step takes the nearest even integer 2b to the current value
    (never a tie: a tie would force a common factor) and recurses on the
    reciprocal of the remainder; the remainder strictly shrinks, so the
    expansion terminates.  The result is round-trip checked against
    p/q* and must have even length for a knot.
    """
    p, q = k.p, k.q
    q_star = q if q % 2 == 0 else p - q
    entries: list[int] = []
    num, den = p, q_star
    while True:
        if den < 0:
            num, den = -num, -den
        # nearest integer to num/(2*den); exact half-values cannot occur
        # for coprime inputs
        b2 = 2 * ((num + den) // (2 * den))
        entries.append(b2)
        rem = b2 * den - num
        if rem == 0:
            break
        num, den = den, rem
    cf = EvenCF(tuple(entries))
    if cf.value() != Fraction(p, q_star):
        raise SignatureError(f"even continued fraction of {p}/{q_star} failed its round-trip check")
    if len(entries) % 2 != 0:
        raise SignatureError(
            f"even continued fraction of {p}/{q_star} has odd length {len(entries)}; "
            "expected even length for a knot"
        )
    return cf


def goeritz_like_matrix(cf: EvenCF) -> SymMatrix:
    """Symmetric tridiagonal matrix: diagonal = cf entries, off-diagonal 1."""
    k = len(cf)
    rows = [
        tuple(
            cf.entries[i] if i == j else (1 if abs(i - j) == 1 else 0)
            for j in range(k)
        )
        for i in range(k)
    ]
    return SymMatrix(tuple(rows))


def _tridiagonal_charpoly(m: SymMatrix) -> UniPoly:
    """det(lambda*I - M) by cofactor expansion along the last row."""
    prev: list[int] = [1]
    cur: list[int] = [-m.rows[0][0], 1]
    for i in range(1, m.dim):
        a = m.rows[i][i]
        b2 = m.rows[i][i - 1] ** 2
        nxt = [0] * (len(cur) + 1)
        for j, c in enumerate(cur):
            nxt[j + 1] += c
            nxt[j] -= a * c
        for j, c in enumerate(prev):
            nxt[j] -= b2 * c
        prev, cur = cur, nxt
    return UniPoly(cur)


def _faddeev_leverrier_charpoly(m: SymMatrix) -> UniPoly:
    """det(lambda*I - M) by the trace recursion; fine for small matrices."""
    k = m.dim
    a = [[Fraction(v) for v in row] for row in m.rows]
    coeffs = [Fraction(0)] * (k + 1)
    coeffs[k] = Fraction(1)
    work = [[Fraction(0)] * k for _ in range(k)]
    for step in range(1, k + 1):
        for i in range(k):
            work[i][i] += coeffs[k - step + 1]
        prod = [
            [sum(a[i][t] * work[t][j] for t in range(k)) for j in range(k)]
            for i in range(k)
        ]
        tr = sum(prod[i][i] for i in range(k))
        coeffs[k - step] = -tr / step
        work = prod
    return UniPoly(coeffs)


def charpoly(m: SymMatrix) -> UniPoly:
    """Monic characteristic polynomial det(lambda*I - M), exact."""
    if m.dim == 0:
        raise ValueError("empty matrix")
    if m.is_tridiagonal():
        return _tridiagonal_charpoly(m)
    return _faddeev_leverrier_charpoly(m)


def tridiagonal_det(m: SymMatrix) -> int:
    """Determinant by the continuant recurrence (tridiagonal only)."""
    if not m.is_tridiagonal():
        raise ValueError("continuant determinant requires a tridiagonal matrix")
    prev, cur = 1, m.rows[0][0]
    for i in range(1, m.dim):
        prev, cur = cur, m.rows[i][i] * cur - m.rows[i][i - 1] ** 2 * prev
    return cur


def matrix_signature(m: SymMatrix) -> int:
    """(#positive - #negative eigenvalues) of a nonsingular symmetric
    integer matrix, computed exactly as dim - 2 * (#negative roots of the
    characteristic polynomial).

    Negative roots are counted by Sturm's method on (-B, 0) with B past
    the Cauchy bound.  An unreduced tridiagonal matrix has simple
    eigenvalues, so the distinct-root count is already the multiplicity
    count; otherwise multiplicities are recovered by stripping repeated
    factors with gcd levels.
    """
    chi = charpoly(m)
    if chi(0) == 0:
        raise SignatureError("singular matrix: signature of a degenerate form is undefined here")
    bound = cauchy_bound(chi) + 1
    simple = m.is_tridiagonal() and all(
        m.rows[i][i - 1] != 0 for i in range(1, m.dim)
    )
    neg = count_in_interval(chi, -bound, 0)
    if not simple:
        level = poly_gcd(chi, chi.derivative())
        while level.degree >= 1:
            neg += count_in_interval(level, -bound, 0)
            level = poly_gcd(level, level.derivative())
    return m.dim - 2 * neg


@dataclass(frozen=True, slots=True)
class TwoBridgeSignature:
    """Signature data of b(p, q) under the q*-even convention.

    sigma_abs is presentation- and mirror-invariant; sigma_signed depends
    on the convention and should only be compared within it.
    """

    sigma_abs: int
    sigma_signed: int
    cf: EvenCF
    determinant: int


def signature_two_bridge(k: KnotId) -> TwoBridgeSignature:
    """Signature of b(p, q) via the even continued fraction matrix.

    Raises SignatureError when |det| != p, which would mean the expansion
    or the matrix construction is corrupted.
    """
    cf = even_cf(k)
    m = goeritz_like_matrix(cf)
    det = tridiagonal_det(m)
    if abs(det) != k.p:
        raise SignatureError(
            f"|det| = {abs(det)} != p = {k.p} for {k}: continued-fraction matrix is inconsistent"
        )
    signed = matrix_signature(m)
    return TwoBridgeSignature(
        sigma_abs=abs(signed), sigma_signed=signed, cf=cf, determinant=det
    )


def signature_family(d: DoubleTwist) -> int:
    """Known signature of each double twist family."""
    if d.family == "EE":
        return 2
    if d.family == "EN":
        return 0
    if d.family == "OE":
        return 2 - 2 * d.n
    return 2 * d.n
