import random
from fractions import Fraction

import pytest

from riley.exact import (
    BiPoly,
    SymLaurent,
    SymmetryError,
    UniPoly,
    compose,
    format_rational,
    parse_rational,
    poly_gcd,
    squarefree_part,
    symmetrize_to_xy,
)

Y = UniPoly.gen()


def rand_poly(rng, max_deg=12, small=False):
    deg = rng.randint(0, max_deg)
    bound = 20 if small else 2**63
    coeffs = [
        Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
        for _ in range(deg + 1)
    ]
    return UniPoly(coeffs)


def test_mul_difference_of_squares():
    assert (Y + 1) * (Y - 1) == Y * Y - 1


def test_add_identity_and_cancellation():
    p = UniPoly([3, -3, 1])
    assert p + UniPoly.zero() == p
    assert UniPoly([3, -3, 1]) + UniPoly([-3, 3]) == UniPoly([0, 0, 1])


def test_ring_axioms_randomized():
    rng = random.Random(20240811)
    for _ in range(25):
        a, b, c = (rand_poly(rng) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a


def test_divrem_exact_factor():
    q, r = divmod(Y * Y - 1, Y - 1)
    assert q == Y + 1 and r.is_zero()


def test_divrem_long_division():
    q, r = divmod(Y * Y, Y + 1)
    assert q == Y - 1 and r == UniPoly.const(1)


def test_divrem_degree_rule():
    q, r = divmod(UniPoly.const(7), Y)
    assert q.is_zero() and r == UniPoly.const(7)


def test_divrem_by_zero_raises():
    with pytest.raises(ZeroDivisionError):
        divmod(Y, UniPoly.zero())


def test_divrem_random_roundtrip():
    rng = random.Random(7)
    for _ in range(40):
        a = rand_poly(rng, 10, small=True)
        b = rand_poly(rng, 5, small=True)
        if b.is_zero():
            continue
        q, r = divmod(a, b)
        assert q * b + r == a
        assert r.is_zero() or r.degree < b.degree


def test_gcd_examples():
    assert poly_gcd(Y * Y - 1, Y - 1) == Y - 1
    p = UniPoly([4, 2])
    assert poly_gcd(p, UniPoly.zero()) == p.monic()
    assert poly_gcd(Y * Y + 1, Y * Y - 1) == UniPoly.const(1)


def test_gcd_both_zero_raises():
    with pytest.raises(ValueError):
        poly_gcd(UniPoly.zero(), UniPoly.zero())


def test_gcd_common_factor_randomized():
    rng = random.Random(99)
    for _ in range(20):
        a = rand_poly(rng, 6, small=True)
        b = rand_poly(rng, 6, small=True)
        g = rand_poly(rng, 4, small=True)
        if a.is_zero() or b.is_zero() or g.degree < 1:
            continue
        d = poly_gcd(a * g, b * g)
        _, r = divmod(d, g.monic())
        assert r.is_zero(), "gcd(a*g, b*g) must be divisible by monic(g)"


def test_squarefree_examples():
    assert squarefree_part((Y - 1) * (Y - 1)) == Y - 1
    p = UniPoly([3, -3, 1])
    assert squarefree_part(p) == p.monic()
    assert squarefree_part((Y - 1) * (Y - 1) * (Y - 2)) == (Y - 1) * (Y - 2)


def test_squarefree_zero_raises():
    with pytest.raises(ValueError):
        squarefree_part(UniPoly.zero())


def test_squarefree_coprime_with_derivative():
    rng = random.Random(5)
    for _ in range(20):
        a = rand_poly(rng, 8, small=True)
        if a.degree < 1:
            continue
        sf = squarefree_part(a)
        if sf.degree < 1:
            continue
        assert poly_gcd(sf, sf.derivative()) == UniPoly.const(1)


def test_eval():
    assert UniPoly([3, -3, 1])(2) == 1
    from riley.chebyshev import cheb_poly

    assert cheb_poly(4)(2) == 5


def test_eval_bi_trefoil():
    # x^2 - 1 - y at x = 2 (hand matrix product: W11 + (1/s - s) W12 for
    # w = ab is s^2 + s^-2 + 1 - y, i.e. x^2 - 1 - y)
    phi = BiPoly([UniPoly([-1, 0, 1]), UniPoly.const(-1)])
    assert phi.eval_x(2) == UniPoly([3, -1])


def test_compose_square():
    z2 = UniPoly([0, 0, 1])
    inner = BiPoly([1, 1])  # y + 1
    assert compose(z2, inner) == BiPoly([1, 2, 1])


def test_compose_identity():
    z = UniPoly.gen()
    t = BiPoly([UniPoly([2, 0, -1]), UniPoly([0, 1])])
    assert compose(z, t) == t


def test_compose_constant():
    assert compose(UniPoly.const(5), BiPoly([1, 2, 3])) == BiPoly.const(5)


def test_bipoly_subs_y():
    # (y^2 + x) at y := x - 1  ->  (x-1)^2 + x = x^2 - x + 1
    p = BiPoly([UniPoly.gen(), UniPoly.zero(), UniPoly.const(1)])
    assert p.subs_y(UniPoly([-1, 1])) == UniPoly([1, -1, 1])


def test_symmetrize_examples():
    x = UniPoly.gen()
    assert symmetrize_to_xy(SymLaurent({1: 1, -1: 1})) == BiPoly.from_x(x)
    c = Fraction(5)
    assert symmetrize_to_xy(SymLaurent({2: 1, 0: c, -2: 1})) == BiPoly.from_x(
        UniPoly([c - 2, 0, 1])
    )
    assert symmetrize_to_xy(SymLaurent({0: UniPoly.gen()})) == BiPoly.y()


def test_symmetrize_asymmetric_raises_with_exponent():
    f = SymLaurent({2: 1, -2: 2})
    with pytest.raises(SymmetryError) as exc:
        symmetrize_to_xy(f)
    assert exc.value.exponent == 2


def _rand_symmetric(rng) -> SymLaurent:
    half = {
        rng.randint(1, 4): UniPoly([rng.randint(-5, 5) for _ in range(rng.randint(1, 3))])
        for _ in range(rng.randint(1, 3))
    }
    terms = dict(half)
    for k, v in half.items():
        terms[-k] = v
    terms[0] = UniPoly([rng.randint(-5, 5) for _ in range(rng.randint(1, 3))])
    return SymLaurent(terms)


def test_symmetrize_is_ring_homomorphism():
    rng = random.Random(13)
    for _ in range(20):
        f, g = _rand_symmetric(rng), _rand_symmetric(rng)
        assert symmetrize_to_xy(f * g) == symmetrize_to_xy(f) * symmetrize_to_xy(g)
        assert symmetrize_to_xy(f + g) == symmetrize_to_xy(f) + symmetrize_to_xy(g)


def test_symmetrize_exactness_via_eval():
    # the rewrite must be exactly equal at x = s + 1/s
    rng = random.Random(31)
    for _ in range(10):
        f = _rand_symmetric(rng)
        s0 = Fraction(rng.randint(1, 9), rng.randint(1, 9))
        x0 = s0 + 1 / s0
        assert symmetrize_to_xy(f).eval_x(x0) == f.eval_s(s0)


def test_symlaurent_eval_s():
    f = SymLaurent({-2: UniPoly.gen(), 1: 3})
    assert f.eval_s(Fraction(1, 2)) == UniPoly([Fraction(3, 2), 4])


def test_rational_formatting():
    assert parse_rational("3/2") == Fraction(3, 2)
    assert parse_rational("-7") == Fraction(-7)
    assert format_rational(Fraction(3, 2)) == "3/2"
    assert format_rational(Fraction(5)) == "5/1"


def test_bipoly_json_roundtrip():
    p = BiPoly([UniPoly([Fraction(1, 2), 0, -1]), UniPoly.const(3)])
    d = p.to_json_dict()
    assert d["y_degree"] == 1
    assert d["coeffs"][0] == ["1/2", "0/1", "-1/1"]
    assert BiPoly.from_json_dict(d) == p
