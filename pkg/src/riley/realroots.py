"""Exact real root counting and isolation via Sturm sequences.

Counts are always of *distinct* real roots: the chain is built from the
squarefree part of the input, so multiplicities never inflate a count.
Internally the chain lives on integer coefficient lists produced by
positive rescaling (primitive pseudo-remainder sequences); a positive
rescale preserves every sign in the sequence, hence every variation
count, while keeping coefficients far smaller than naive rational
remainders would.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import (
    Scalar,
    UniPoly,
    _int_coeffs,
    _int_derivative,
    _int_gcd,
    _int_prem_pos,
    _int_primitive,
)

DEFAULT_ISOLATION_WIDTH = Fraction(1, 64)


@dataclass(frozen=True, slots=True)
class SturmChain:
    """Sturm chain of the squarefree part of a polynomial.

    polys[0] is the squarefree part, polys[1] its derivative, and each
    later element is the negated remainder of the two before it; every
    element is stored rescaled by a positive rational to integer,
    content-1 form.  The last element is a nonzero constant and degrees
    strictly decrease along the chain.
    """

    polys: tuple[UniPoly, ...]


@dataclass(frozen=True, slots=True)
class RootCount:
    """Number of distinct real roots, with optional isolating intervals.

    The intervals (when present) are pairwise disjoint open rational
    intervals, each containing exactly one root of the squarefree part.
    """

    total_real: int
    intervals: tuple[tuple[Fraction, Fraction], ...] | None = None


def _int_squarefree(f: list[int]) -> list[int]:
    """Squarefree part of a primitive integer coefficient list."""
    if len(f) - 1 < 1:
        return list(f)
    g = _int_gcd(f, _int_derivative(f))
    if len(g) == 1:
        return list(f)
    q, r = divmod(UniPoly(f), UniPoly(g))
    assert r.is_zero()
    return _int_primitive(_int_coeffs(q))


def _sign(v: int) -> int:
    return (v > 0) - (v < 0)


def _variations(signs: list[int]) -> int:
    count = 0
    prev = 0
    for s in signs:
        if s == 0:
            continue
        if prev and s != prev:
            count += 1
        prev = s
    return count


def _sign_at_rational(poly: list[int], num: int, den: int) -> int:
    """Sign of the polynomial at num/den (den > 0) via the homogeneous
    integer evaluation sum c_i * num^i * den^(d-i)."""
    acc = poly[-1]
    dpow = 1
    for i in range(len(poly) - 2, -1, -1):
        dpow *= den
        acc = acc * num + poly[i] * dpow
    return _sign(acc)


class _IntChain:
    """Integer Sturm chain with sign-variation queries."""

    def __init__(self, f: UniPoly):
        if f.is_zero():
            raise ValueError("Sturm chain of the zero polynomial is undefined")
        if f.degree < 1:
            raise ValueError("Sturm chain of a constant polynomial is undefined")
        sf = _int_squarefree(_int_primitive(_int_coeffs(f)))
        chain = [sf, _int_primitive(_int_derivative(sf))]
        while True:
            rem = _int_prem_pos(chain[-2], chain[-1])
            if not rem:
                break
            chain.append([-c for c in _int_primitive(rem)])
        assert len(chain[-1]) == 1, "chain of a squarefree polynomial ends in a constant"
        self.chain = chain

    def variations_at(self, v: Fraction) -> int:
        num, den = v.numerator, v.denominator
        return _variations([_sign_at_rational(p, num, den) for p in self.chain])

    def variations_at_inf(self, positive: bool) -> int:
        signs = []
        for poly in self.chain:
            s = _sign(poly[-1])
            if not positive and (len(poly) - 1) % 2 == 1:
                s = -s
            signs.append(s)
        return _variations(signs)

    def sign_at(self, v: Fraction) -> int:
        return _sign_at_rational(self.chain[0], v.numerator, v.denominator)

    def count_all(self) -> int:
        return self.variations_at_inf(False) - self.variations_at_inf(True)

    def count_open(self, lo: Fraction, hi: Fraction) -> int:
        """Distinct roots in (lo, hi); endpoints must not be roots."""
        return self.variations_at(lo) - self.variations_at(hi)


def sturm_chain(f: UniPoly) -> SturmChain:
    """Sturm chain of squarefree_part(f); f must be nonzero, non-constant."""
    return SturmChain(tuple(UniPoly(p) for p in _IntChain(f).chain))


def count_real_roots(f: UniPoly) -> RootCount:
    """Number of distinct real roots of f (no intervals computed)."""
    if f.is_zero():
        raise ValueError("root count of the zero polynomial is undefined")
    if f.degree < 1:
        return RootCount(0)
    return RootCount(_IntChain(f).count_all())


def count_in_interval(f: UniPoly, lo: Scalar, hi: Scalar) -> int:
    """Number of distinct roots of f in the open interval (lo, hi).

    Raises ValueError when an endpoint is a root: nudge the rational
    endpoint slightly and retry.
    """
    lo, hi = Fraction(lo), Fraction(hi)
    if not lo < hi:
        raise ValueError(f"empty interval: lo={lo} must be < hi={hi}")
    if f.is_zero():
        raise ValueError("root count of the zero polynomial is undefined")
    if f.degree < 1:
        return 0
    for v in (lo, hi):
        if f(v) == 0:
            raise ValueError(
                f"endpoint {v} is a root of the polynomial; nudge the rational endpoint"
            )
    return _IntChain(f).count_open(lo, hi)


def cauchy_bound(f: UniPoly) -> Fraction:
    """1 + max |a_i / a_d|: every real root lies strictly inside (-B, B)."""
    if f.is_zero() or f.degree < 1:
        raise ValueError("Cauchy bound requires a non-constant polynomial")
    lead = abs(f.leading)
    return 1 + max(abs(c) / lead for c in f.coeffs[:-1])


def isolate_roots(f: UniPoly, max_width: Fraction = DEFAULT_ISOLATION_WIDTH) -> RootCount:
    """Disjoint rational isolating intervals via Sturm-guided bisection.

    Starts from the Cauchy bound and bisects until each interval holds
    exactly one root of the squarefree part and is no wider than
    max_width.  Midpoints that land exactly on a root are enclosed by a
    shrinking symmetric interval instead of nudged ad hoc.
    """
    chain = _IntChain(f)
    total = chain.count_all()
    if total == 0:
        return RootCount(0, ())
    bound = cauchy_bound(f)
    intervals: list[tuple[Fraction, Fraction]] = []

    def enclose_root_at(mid: Fraction, radius: Fraction) -> tuple[Fraction, Fraction]:
        w = radius
        while True:
            lo, hi = mid - w, mid + w
            if (
                chain.sign_at(lo) != 0
                and chain.sign_at(hi) != 0
                and chain.count_open(lo, hi) == 1
            ):
                return lo, hi
            w /= 2

    def split(lo: Fraction, hi: Fraction, cnt: int) -> None:
        if cnt == 0:
            return
        if cnt == 1 and hi - lo <= max_width:
            intervals.append((lo, hi))
            return
        mid = (lo + hi) / 2
        if chain.sign_at(mid) == 0:
            inner = enclose_root_at(mid, min(max_width, hi - mid) / 2)
            intervals.append(inner)
            split(lo, inner[0], chain.count_open(lo, inner[0]))
            split(inner[1], hi, chain.count_open(inner[1], hi))
            return
        left = chain.count_open(lo, mid)
        split(lo, mid, left)
        split(mid, hi, cnt - left)

    split(-bound, bound, total)
    intervals.sort()
    assert len(intervals) == total
    return RootCount(total, tuple(intervals))
