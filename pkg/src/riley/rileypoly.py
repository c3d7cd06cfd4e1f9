"""Riley polynomials of two-bridge knots, by two independent routes.

General route: a nonabelian SL(2,C) representation of the knot group of
b(p, q) sends the meridians to

    rho(a) = [[s, 1], [0, 1/s]]      rho(b) = [[s, 0], [2-y, 1/s]]

(s != 0, y != 2), and the defining relation rho(w a) = rho(b w) reduces
to one polynomial condition.  With W = rho(w) the candidate used here is

    Phi~(s, y) = W11 + (1/s - s) * W12,

which is symmetric under s -> 1/s and therefore rewrites exactly as a
polynomial Phi(x, y) in x = s + 1/s and y.  Here x is the meridian
trace and y = tr rho(a b^-1).  Because the reduction formula is not
rederived here, every construction machine-checks it: the entries of
rho(w a) - rho(b w) must all vanish wherever Phi~ vanishes (checked by
exact divisibility at s = 1 and at random rational s), and any failure
raises instead of returning a possibly-wrong polynomial.

Closed-form route: for a double twist knot the Riley polynomial is
S_n(t) - mu * S_{n-1}(t) with family-specific t and mu built from
Chebyshev polynomials in y.  The two routes share nothing but the
normalization step, so their exact agreement (see verifier.cross_validate)
is a meaningful check of both.

Normalization: Riley polynomials are defined up to units, so results are
scaled to integer coefficients with content 1 and sign chosen to make
the leading y-coefficient positive at x = 2.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .chebyshev import cheb_poly
from .exact import (
    BiPoly,
    SymLaurent,
    UniPoly,
    squarefree_part,
    symmetrize_to_xy,
    compose,
)
from .twobridge import DoubleTwist, KnotId, SchubertWord, schubert_word

_VALIDATION_POINTS = 20


class RileyValidationError(RuntimeError):
    """The reduction to a single polynomial failed its validation contract
    for some word; the computed candidate must not be used."""


@dataclass(frozen=True, slots=True)
class Mat2Sym:
    """2x2 matrix over SymLaurent entries (Laurent in s, polynomial in y)."""

    a11: SymLaurent
    a12: SymLaurent
    a21: SymLaurent
    a22: SymLaurent

    @classmethod
    def identity(cls) -> "Mat2Sym":
        one, zero = SymLaurent.one(), SymLaurent.zero()
        return cls(one, zero, zero, one)

    def __matmul__(self, other: "Mat2Sym") -> "Mat2Sym":
        return Mat2Sym(
            self.a11 * other.a11 + self.a12 * other.a21,
            self.a11 * other.a12 + self.a12 * other.a22,
            self.a21 * other.a11 + self.a22 * other.a21,
            self.a21 * other.a12 + self.a22 * other.a22,
        )

    def __sub__(self, other: "Mat2Sym") -> "Mat2Sym":
        return Mat2Sym(
            self.a11 - other.a11,
            self.a12 - other.a12,
            self.a21 - other.a21,
            self.a22 - other.a22,
        )

    def det(self) -> SymLaurent:
        return self.a11 * self.a22 - self.a12 * self.a21

    def trace(self) -> SymLaurent:
        return self.a11 + self.a22

    def entries(self) -> tuple[SymLaurent, SymLaurent, SymLaurent, SymLaurent]:
        return (self.a11, self.a12, self.a21, self.a22)


_TWO_MINUS_Y = UniPoly([2, -1])


def rho_generator(gen: str, exponent: int) -> Mat2Sym:
    """Image of a generator letter; inverses via the adjugate (det = 1)."""
    if gen not in ("a", "b") or exponent not in (1, -1):
        raise ValueError(f"invalid letter ({gen!r}, {exponent})")
    s, s_inv = SymLaurent.s_power(1), SymLaurent.s_power(-1)
    zero, one = SymLaurent.zero(), SymLaurent.one()
    if gen == "a":
        if exponent == 1:
            return Mat2Sym(s, one, zero, s_inv)
        return Mat2Sym(s_inv, -one, zero, s)
    low = SymLaurent.from_y(_TWO_MINUS_Y)
    if exponent == 1:
        return Mat2Sym(s, zero, low, s_inv)
    return Mat2Sym(s_inv, zero, -low, s)


def word_matrix(w: SchubertWord) -> Mat2Sym:
    """Left-to-right product of generator images over the word.

    The determinant must be exactly 1 (every generator image is
    unimodular); this is asserted symbolically for short words and by
    exact evaluation at several rational s for long ones, where the full
    symbolic product would be needlessly expensive.
    """
    result = Mat2Sym.identity()
    for gen, exp in w.letters:
        result = result @ rho_generator(gen, exp)
    if len(w) <= 24:
        if result.det() != SymLaurent.one():
            raise RileyValidationError(f"word matrix determinant differs from 1 for word {w.compact()}")
    else:
        for s0 in (Fraction(1), Fraction(2), Fraction(-3, 2)):
            d = (
                result.a11.eval_s(s0) * result.a22.eval_s(s0)
                - result.a12.eval_s(s0) * result.a21.eval_s(s0)
            )
            if d != UniPoly.const(1):
                raise RileyValidationError(
                    f"word matrix determinant differs from 1 at s={s0} for word {w.compact()}"
                )
    return result


@dataclass(frozen=True, slots=True)
class RileyPoly:
    """A normalized Riley polynomial and which construction produced it."""

    phi_xy: BiPoly
    source: str  # "general" | "closed_form"


def normalize_bipoly(phi: BiPoly) -> BiPoly:
    """Scale to integer coefficients with content 1, sign fixed so the
    leading y-coefficient is positive at x = 2."""
    if phi.is_zero():
        raise ValueError("cannot normalize the zero polynomial")
    den = 1
    for c in phi.coeffs:
        for v in c.coeffs:
            den = den * v.denominator // math.gcd(den, v.denominator)
    num = 0
    for c in phi.coeffs:
        for v in c.coeffs:
            num = math.gcd(num, int(v * den))
    phi = phi * Fraction(den, num)
    lead = phi.leading_y(Fraction(2))
    if lead == 0:
        raise ValueError("leading y-coefficient vanishes at x = 2; sign normalization undefined")
    if lead < 0:
        phi = -phi
    return phi


def normalize_parabolic(phi: UniPoly) -> UniPoly:
    """Univariate analogue: integer coefficients, content 1, leading > 0."""
    if phi.is_zero():
        raise ValueError("cannot normalize the zero polynomial")
    den = 1
    for v in phi.coeffs:
        den = den * v.denominator // math.gcd(den, v.denominator)
    num = 0
    for v in phi.coeffs:
        num = math.gcd(num, int(v * den))
    phi = phi * Fraction(den, num)
    return -phi if phi.leading < 0 else phi


def _reduction_candidate(wmat: Mat2Sym) -> SymLaurent:
    return wmat.a11 + SymLaurent({-1: 1, 1: -1}) * wmat.a12


def _relation_defect(wmat: Mat2Sym) -> Mat2Sym:
    """rho(w a) - rho(b w); must vanish exactly on the zero set of the
    reduction candidate."""
    return wmat @ rho_generator("a", 1) - rho_generator("b", 1) @ wmat


def _check_common_divisor(phi_y: UniPoly, entries: list[UniPoly], where: str) -> None:
    if phi_y.is_zero():
        raise RileyValidationError(f"reduction candidate vanishes identically {where}")
    sf = squarefree_part(phi_y)
    for e in entries:
        if e.is_zero():
            continue
        if not (e % sf).is_zero():
            raise RileyValidationError(
                f"relation defect entry is not divisible by the reduction candidate {where}"
            )


def _riley_from_word(word: SchubertWord, label: object, seed: int) -> RileyPoly:
    """Shared general-route pipeline: product, reduction, validation,
    rewrite to (x, y), normalization."""
    wmat = word_matrix(word)
    phi_tilde = _reduction_candidate(wmat)

    bad = phi_tilde.asymmetry_exponent()
    if bad is not None:
        raise RileyValidationError(
            f"reduction candidate for {label} is not symmetric under s -> 1/s "
            f"(first offending s-exponent: {bad}); refusing to guess a unit multiple"
        )

    defect = _relation_defect(wmat)
    # (i) exact divisibility at s = 1 (the parabolic slice).
    phi_1 = phi_tilde.eval_s(1)
    if phi_1.is_zero():
        raise RileyValidationError(f"reduction candidate for {label} vanishes at s = 1")
    for e in (entry.eval_s(1) for entry in defect.entries()):
        if not e.is_zero() and not (e % phi_1).is_zero():
            raise RileyValidationError(
                f"relation defect for {label} is not divisible by the candidate at s = 1"
            )
    # (ii) zero-set containment at random rational s, via y-variable gcds.
    rng = random.Random(seed)
    done = 0
    while done < _VALIDATION_POINTS:
        s0 = Fraction(rng.randint(1, 12), rng.randint(1, 12))
        if rng.random() < 0.5:
            s0 = -s0
        phi_s0 = phi_tilde.eval_s(s0)
        if phi_s0.is_zero() or phi_s0.degree < 1:
            continue
        _check_common_divisor(
            phi_s0, [e.eval_s(s0) for e in defect.entries()], f"at s = {s0} for {label}"
        )
        done += 1

    return RileyPoly(normalize_bipoly(symmetrize_to_xy(phi_tilde)), "general")


def riley_general(k: KnotId) -> RileyPoly:
    """Riley polynomial from the symbolic matrix product over the relator.

    Always-on validation: (i) at s = 1 the candidate must divide all four
    entries of rho(w a) - rho(b w); (ii) the same divisibility (of
    squarefree parts, i.e. zero-set containment) must hold at 20 random
    rational s; (iii) the candidate must be symmetric under s -> 1/s.
    Any failure raises RileyValidationError: a silently wrong polynomial
    is never returned.
    """
    return _riley_from_word(schubert_word(k), k, k.p * 2654435761 + k.q)


# ---------------------------------------------------------------------------
# Parabolic fast path: substituting s = 1 from the start keeps every
# matrix entry in Z[y], so the whole word product runs over plain integer
# coefficient lists.  This is what the large conjecture scans use.
# ---------------------------------------------------------------------------


def _zadd(a: list[int], b: list[int]) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    while out and out[-1] == 0:
        out.pop()
    return out


def _zsub(a: list[int], b: list[int]) -> list[int]:
    out = list(a) + [0] * (len(b) - len(a))
    for i, c in enumerate(b):
        out[i] -= c
    while out and out[-1] == 0:
        out.pop()
    return out


def _zmul_two_minus_y(a: list[int]) -> list[int]:
    """Multiply by (2 - y)."""
    if not a:
        return []
    out = [0] * (len(a) + 1)
    for i, c in enumerate(a):
        out[i] += 2 * c
        out[i + 1] -= c
    while out and out[-1] == 0:
        out.pop()
    return out


def _zmul(a: list[int], b: list[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    while out and out[-1] == 0:
        out.pop()
    return out


def _parabolic_word_product(word: SchubertWord) -> tuple[list[int], list[int], list[int], list[int]]:
    """Product of the generator images at s = 1 over Z[y] coefficient lists.

    Every letter acts by a column operation, so each step costs O(degree)
    integer operations.
    """
    w11, w12, w21, w22 = [1], [], [], [1]
    for gen, exp in word.letters:
        if gen == "a":
            if exp == 1:
                w12 = _zadd(w12, w11)
                w22 = _zadd(w22, w21)
            else:
                w12 = _zsub(w12, w11)
                w22 = _zsub(w22, w21)
        else:
            if exp == 1:
                w11 = _zadd(w11, _zmul_two_minus_y(w12))
                w21 = _zadd(w21, _zmul_two_minus_y(w22))
            else:
                w11 = _zsub(w11, _zmul_two_minus_y(w12))
                w21 = _zsub(w21, _zmul_two_minus_y(w22))
    return w11, w12, w21, w22


def riley_parabolic(k: KnotId) -> UniPoly:
    """Riley polynomial of the parabolic slice x = 2, normalized.

    Equals riley_general(k).phi_xy evaluated at x = 2, up to the sign and
    content normalization, but is computed directly over Z[y].  The same
    validation idea as the general route runs here (cheaply): at s = 1
    the relation defect reduces to the single divisibility
    w11 | w21 - (2-y)*w12, plus the exact determinant identity.
    """
    word = schubert_word(k)
    w11, w12, w21, w22 = _parabolic_word_product(word)
    if _zsub(_zmul(w11, w22), _zmul(w12, w21)) != [1]:
        raise RileyValidationError(f"parabolic word matrix for {k} has determinant != 1")
    phi = UniPoly(w11)
    defect = UniPoly(_zsub(w21, _zmul_two_minus_y(w12)))
    if not defect.is_zero() and not (defect % phi).is_zero():
        raise RileyValidationError(
            f"parabolic relation defect for {k} is not divisible by the candidate"
        )
    return normalize_parabolic(phi)


# ---------------------------------------------------------------------------
# Closed forms for double twist knots.
# ---------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class ClosedFormParams:
    """The pair (t, mu) with Phi = S_n(t) - mu * S_{n-1}(t)."""

    t: BiPoly
    mu: BiPoly
    family: DoubleTwist


def _y_poly(p: UniPoly) -> BiPoly:
    """Embed a polynomial in y as a BiPoly with constant x-coefficients."""
    return BiPoly([UniPoly.const(c) for c in p.coeffs])


_Y_MINUS_2 = BiPoly([-2, 1])
# y + 2 - x^2
_Y_PLUS_2_MINUS_X2 = BiPoly([UniPoly([2, 0, -1]), UniPoly.const(1)])
_X2 = BiPoly.from_x(UniPoly([0, 0, 1]))


def closed_form_params(d: DoubleTwist) -> ClosedFormParams:
    """Exact (t, mu) for a double twist family.

    With u = y + 2 - x^2 and S_k = S_k(y):

      EE: t = 2 + (y-2) u S_{m-1}^2        mu = 1 + u S_{m-1} (S_m - S_{m-1})
      EN: t as EE                          mu = 1 - u S_{m-1} (S_{m-1} - S_{m-2})
      OE: t = x^2 - y - (y-2) u S_m S_{m-1}  mu = 1 - u S_m (S_m - S_{m-1})
      ON: t as OE                          mu = 1 + u S_{m-1} (S_m - S_{m-1})
    """
    m = d.m
    u = _Y_PLUS_2_MINUS_X2
    s_m = _y_poly(cheb_poly(m))
    s_m1 = _y_poly(cheb_poly(m - 1))
    s_m2 = _y_poly(cheb_poly(m - 2))
    if d.family in ("EE", "EN"):
        t = 2 + _Y_MINUS_2 * u * s_m1 * s_m1
        if d.family == "EE":
            mu = 1 + u * s_m1 * (s_m - s_m1)
        else:
            mu = 1 - u * s_m1 * (s_m1 - s_m2)
    else:
        t = _X2 - BiPoly.y() - _Y_MINUS_2 * u * s_m * s_m1
        if d.family == "OE":
            mu = 1 - u * s_m * (s_m - s_m1)
        else:
            mu = 1 + u * s_m1 * (s_m - s_m1)
    return ClosedFormParams(t=t, mu=mu, family=d)


def riley_closed_form(d: DoubleTwist) -> RileyPoly:
    """Closed-form Riley polynomial S_n(t) - mu * S_{n-1}(t), normalized.

    t and mu are built once and composed with the explicit Chebyshev
    polynomials; no matrix product is involved, keeping this route
    independent of the general one.
    """
    params = closed_form_params(d)
    n = d.n
    phi = compose(cheb_poly(n), params.t) - params.mu * compose(cheb_poly(n - 1), params.t)
    return RileyPoly(normalize_bipoly(phi), "closed_form")
