import io
import json
import math
from fractions import Fraction

import pytest

from riley.realroots import count_real_roots
from riley.rileypoly import riley_parabolic
from riley.twobridge import DoubleTwist, KnotId
from riley.verifier import (
    ConjectureRecord,
    check_conjecture,
    check_theorem1,
    check_theorem2,
    cross_validate,
    emit_report,
    enumerate_knots,
    record_fields,
    scan_conjecture,
    sweep_theorem1,
    sweep_theorem2,
)


def test_check_conjecture_examples():
    r = check_conjecture(KnotId(3, 1))
    assert (r.sigma_abs, r.real_roots, r.holds) == (2, 1, True)
    assert r.parabolic_degree == 1

    r = check_conjecture(KnotId(5, 2))
    assert (r.sigma_abs, r.real_roots, r.holds) == (0, 0, True)

    r = check_conjecture(KnotId(7, 5))
    assert (r.sigma_abs, r.real_roots, r.holds) == (2, 1, True)


def test_enumerate_knots_small():
    assert [str(k) for k in enumerate_knots(7)] == [
        "b(3,1)", "b(5,1)", "b(5,2)", "b(7,1)", "b(7,2)", "b(7,3)",
    ]
    assert [str(k) for k in enumerate_knots(3)] == ["b(3,1)"]


def test_enumerate_knots_deduplicates_inverses():
    # at p = 11, q = 4 has inverse 3, so only (11,3) appears
    qs = [k.q for k in enumerate_knots(11) if k.p == 11]
    assert qs == [1, 2, 3, 5]


def test_scan_small():
    res = scan_conjecture(7)
    assert [str(r.knot) for r in res.records] == [
        "b(3,1)", "b(5,1)", "b(5,2)", "b(7,1)", "b(7,2)", "b(7,3)",
    ]
    assert all(r.holds for r in res.records)
    assert res.failures == []
    assert res.violations == []

    res = scan_conjecture(3)
    assert len(res.records) == 1


def test_scan_parallel_matches_serial():
    serial = scan_conjecture(25, jobs=1)
    parallel = scan_conjecture(25, jobs=2)
    strip = lambda recs: [
        (r.knot, r.sigma_abs, r.parabolic_degree, r.real_roots, r.holds) for r in recs
    ]
    assert strip(serial.records) == strip(parallel.records)


def test_scan_rejects_tiny_pmax():
    with pytest.raises(ValueError):
        scan_conjecture(2)


def test_conjecture_data_is_presentation_invariant():
    # mirrors and inverses carry the same (|sigma|, root count) data,
    # which is what justifies scanning one representative per window
    from riley.signature import signature_two_bridge

    for p in range(3, 22, 2):
        for q in range(1, p):
            if math.gcd(p, q) != 1:
                continue
            base = KnotId(p, q)
            for other in (base.mirror(), KnotId(p, pow(q, -1, p))):
                assert (
                    count_real_roots(riley_parabolic(base)).total_real
                    == count_real_roots(riley_parabolic(other)).total_real
                )
                assert (
                    signature_two_bridge(base).sigma_abs
                    == signature_two_bridge(other).sigma_abs
                )


def test_check_theorem1_at_two():
    ee, en = check_theorem1(1, 1, 2)
    assert ee.in_range is True and ee.expected == "==1"
    assert ee.observed_roots == 1 and ee.holds
    assert en.expected == "==0" and en.observed_roots == 0 and en.holds


def test_check_theorem1_range_certificates():
    ee, _ = check_theorem1(2, 3, Fraction(2) - Fraction(1, 96))
    assert ee.in_range is True  # (2 - 1/96)^2 > 4 - 1/6 exactly
    ee, _ = check_theorem1(1, 1, Fraction(3, 2))
    assert ee.in_range is False  # 9/4 < 3
    ee, _ = check_theorem1(1, 1, Fraction(5, 2))
    assert ee.in_range is False  # beyond 2


def test_check_theorem2_examples():
    oe, on = check_theorem2(1, 1, 2)
    assert on.expected == ">=1" and on.observed_roots >= 1 and on.holds
    assert oe.expected == ">=0" and oe.holds
    assert oe.in_range is True

    _, on = check_theorem2(1, 2, Fraction(5, 2))
    assert on.expected == ">=2" and on.observed_roots >= 2 and on.holds


def test_check_theorem2_uncertified_below_two():
    oe, on = check_theorem2(1, 1, Fraction(9, 5))
    assert oe.in_range is None and on.in_range is None


def test_sweeps_hold():
    recs = sweep_theorem1(2, 2)
    assert len(recs) == 16  # 4 grid points x 2 x0 x 2 families
    assert all(r.holds and r.in_range for r in recs)

    recs = sweep_theorem2(2, 2, x0s=[2, Fraction(5, 2)])
    assert len(recs) == 16
    assert all(r.holds for r in recs)


def test_cross_validate_examples():
    assert cross_validate(DoubleTwist("EE", 1, 1)) is True
    assert cross_validate(DoubleTwist("EN", 1, 1)) is True
    assert cross_validate(DoubleTwist("OE", 2, 1)) is True
    assert cross_validate(DoubleTwist("ON", 1, 2)) is True


def test_cross_validate_counts_across_q_conventions():
    # OE(1,1) presents b(5,3); the canonical form b(5,2) builds a different
    # polynomial, but root counts at x = 2 agree
    from riley.rileypoly import riley_closed_form

    closed = riley_closed_form(DoubleTwist("OE", 1, 1)).phi_xy.eval_x(2)
    general = riley_parabolic(KnotId(5, 2))
    assert (
        count_real_roots(closed).total_real
        == count_real_roots(general).total_real
        == 0
    )


def test_record_fields_jsonl_schema():
    rec = check_conjecture(KnotId(3, 1))
    fields = record_fields(rec)
    assert list(fields) == ["knot", "sigma_abs", "degree", "real_roots", "holds"]
    assert fields["knot"] == "b(3,1)"


def test_counterexample_flagging():
    fake = ConjectureRecord(
        knot=KnotId(3, 1), sigma_abs=4, parabolic_degree=1, real_roots=1,
        holds=False, timing_ms=0.0,
    )
    fields = record_fields(fake)
    assert fields["flag"] == "counterexample-candidate"
    text = emit_report([fake], format="csv")
    assert text.splitlines()[1].endswith("counterexample-candidate")


def test_emit_report_jsonl():
    rec = check_conjecture(KnotId(3, 1))
    text = emit_report([rec], format="jsonl")
    lines = text.splitlines()
    assert len(lines) == 1
    parsed = json.loads(lines[0])
    assert parsed == {
        "knot": "b(3,1)", "sigma_abs": 2, "degree": 1, "real_roots": 1, "holds": True,
    }


def test_emit_report_empty():
    assert emit_report([], format="jsonl") == ""
    assert emit_report([], format="csv") == ""


def test_emit_report_csv_header():
    recs = scan_conjecture(5).records
    text = emit_report(recs, format="csv")
    lines = text.splitlines()
    assert lines[0] == "knot,sigma_abs,degree,real_roots,holds,flag"
    assert lines[1] == "b(3,1),2,1,1,true,"


def test_emit_report_theorem_records():
    recs = sweep_theorem2(1, 1, x0s=[Fraction(9, 5)])
    text = emit_report(recs, format="jsonl")
    row = json.loads(text.splitlines()[0])
    assert row["x0"] == "9/5"
    assert row["in_range"] == "uncertified"


def test_emit_report_to_file_and_stream(tmp_path):
    recs = scan_conjecture(7).records
    path = tmp_path / "out.jsonl"
    emit_report(recs, format="jsonl", destination=path)
    buf = io.StringIO()
    emit_report(recs, format="jsonl", destination=buf)
    assert path.read_text() == buf.getvalue()
    assert len(path.read_text().splitlines()) == 6


def test_emit_report_bad_format():
    with pytest.raises(ValueError):
        emit_report([], format="xml")


def test_report_determinism():
    a = emit_report(scan_conjecture(31, jobs=1).records, format="jsonl")
    b = emit_report(scan_conjecture(31, jobs=2).records, format="jsonl")
    assert a == b
