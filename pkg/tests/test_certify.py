import random
from fractions import Fraction

import pytest

from conftest import mat4_is_pm_identity, mat4_mul, random_sl2
from slcert.certify import (
    FINITE_ORDER,
    IDENTITY,
    INCONCLUSIVE,
    INFINITE_ORDER,
    MINUS_IDENTITY,
    REASON_HYPERBOLIC,
    REASON_IRRATIONAL_ROTATION,
    REASON_NONCONSTANT_TRACE,
    REASON_PARABOLIC,
    certify_word,
    kernel_witness,
    nonconjugacy_witness,
    order_certificate,
    run_theorem_suite,
    verify_lemma_degrees,
)
from slcert.exact import Mat2, Poly
from slcert.rep import SURFACE_GENUS2, SURFACE_PUNCTURED_TORUS
from slcert.words import (
    abelianize,
    commutator,
    free_reduce,
    inverse_word,
    word_pow,
)


def test_order_certificate_examples():
    assert order_certificate(Mat2(1, -9, 0, 1)).reason == REASON_PARABOLIC
    cert = order_certificate(Mat2(0, -1, 1, 0))
    assert cert.verdict == FINITE_ORDER and cert.order == 2
    m = Mat2(Poly((4,)), Poly((Fraction(-3, 4), -3)), Fraction(-4, 3), Poly((Fraction(1, 2), 1)))
    cert = order_certificate(m)
    assert cert.verdict == INFINITE_ORDER
    assert cert.reason == REASON_NONCONSTANT_TRACE
    assert order_certificate(Mat2.identity()).verdict == IDENTITY
    assert order_certificate(-Mat2.identity()).verdict == MINUS_IDENTITY


def test_order_certificate_decision_table():
    # trace 0 -> order 2; trace +-1 -> order 3; |trace| in (1,2) -> irrational
    assert order_certificate(Mat2(0, -1, 1, 0)).order == 2
    assert order_certificate(Mat2(0, -1, 1, 1)).order == 3
    assert order_certificate(Mat2(0, -1, 1, -1)).order == 3
    half = order_certificate(Mat2(0, -1, 1, Fraction(1, 2)))
    assert half.verdict == INFINITE_ORDER
    assert half.reason == REASON_IRRATIONAL_ROTATION
    hyp = order_certificate(Mat2(2, 0, 0, Fraction(1, 2)))
    assert hyp.reason == REASON_HYPERBOLIC


def test_order_certificate_rejects_non_unimodular():
    with pytest.raises(ValueError, match="determinant"):
        order_certificate(Mat2(2, 0, 0, 1))


def test_order_certificate_against_powering():
    rng = random.Random(97)
    samples = [random_sl2(rng) for _ in range(300)]
    # seed elliptic representatives conjugated by random matrices
    for c in (0, 1, -1, 2):
        base = (Fraction(0), Fraction(-1), Fraction(1), Fraction(c))
        for _ in range(40):
            g = random_sl2(rng)
            ginv = (g[3], -g[1], -g[2], g[0])
            samples.append(mat4_mul(mat4_mul(g, base), ginv))
    for m4 in samples:
        cert = order_certificate(Mat2(*m4))
        power = m4
        orders = []
        for k in range(1, 13):
            if mat4_is_pm_identity(power):
                orders.append(k)
            power = mat4_mul(power, m4)
        if cert.verdict == FINITE_ORDER:
            assert orders and orders[0] == cert.order
        elif cert.verdict in (IDENTITY, MINUS_IDENTITY):
            assert mat4_is_pm_identity(m4)
        else:
            assert not orders


def test_certify_kernel_witness_words(genus2_rep, torus_rep):
    w = commutator(commutator("x", "y"), commutator("xx", "y"))
    for rep in (genus2_rep, torus_rep):
        cert = certify_word(rep, w)
        assert cert.verdict == IDENTITY
    assert certify_word(genus2_rep, "x").verdict != IDENTITY


def test_certify_examples(genus2_rep, torus_rep):
    cert = certify_word(torus_rep, "xxy")
    assert cert.verdict == INFINITE_ORDER and cert.reason == REASON_HYPERBOLIC
    assert cert.trace.constant_value() == Fraction(-145, 12)
    cert = certify_word(genus2_rep, "ax")
    assert cert.verdict == INFINITE_ORDER
    assert cert.reason == REASON_NONCONSTANT_TRACE
    assert cert.trace == Poly((Fraction(9, 2), 1))
    cert = certify_word(genus2_rep, word_pow("xyXY", 2))
    assert cert.verdict == INFINITE_ORDER and cert.reason == REASON_PARABOLIC


def test_certify_rejects_empty(genus2_rep):
    with pytest.raises(ValueError, match="empty"):
        certify_word(genus2_rep, "xX")


def test_certify_rejects_out_of_scope(torus_rep):
    with pytest.raises(ValueError, match="out of scope"):
        certify_word(torus_rep, "ax")


def test_certify_amalgam_collapse(genus2_rep):
    # c written on side A times c^-1 written on side B is the identity element
    w = "abAB" + inverse_word("xyXY")
    assert certify_word(genus2_rep, w).verdict == IDENTITY


def test_certify_absorbs_boundary_syllables(genus2_rep):
    # a (c_B) b is really the side-A word a c_A b; hypothesis checking
    # must not see a B syllable here
    cert = certify_word(genus2_rep, "a" + "xyXY" + "b")
    assert cert.verdict == INFINITE_ORDER


def test_certify_absorbs_boundary_powers_in_mixed_words(genus2_rep):
    # the leading c_A^2 syllable is absorbed into the B side, after which the
    # remaining alternating word satisfies the lemma hypotheses
    w = "abABabAB" + "x" + "a" + "y"
    cert = certify_word(genus2_rep, w)
    assert cert.verdict == INFINITE_ORDER
    assert cert.reason == REASON_NONCONSTANT_TRACE


def test_certify_inconclusive_non_hyperbolic_b_syllable(genus2_rep):
    # xYXy = [x, y^-1] is parabolic (trace 2) but not a literal power of
    # [x, y], so it survives absorption and fails the hyperbolicity
    # hypothesis; the pipeline must refuse to conclude rather than guess
    w = "a" + "xYXy" + "b" + "y"
    cert = certify_word(genus2_rep, w)
    assert cert.verdict == INCONCLUSIVE
    assert "not hyperbolic" in (cert.detail or "")


def test_certify_conjugation_invariance(genus2_rep):
    rng = random.Random(53)
    words = ["ax", "xxy", "ab", word_pow("xyXY", 2), "axby"]
    for w in words:
        base = certify_word(genus2_rep, w)
        for _ in range(4):
            g = free_reduce(
                "".join(rng.choice("abxyABXY") for _ in range(rng.randint(1, 5)))
            )
            conj = free_reduce(g + w + inverse_word(g))
            cert = certify_word(genus2_rep, conj)
            assert cert.verdict == base.verdict
            assert cert.trace == base.trace


def test_certify_power_coherence(genus2_rep):
    for w in ("ax", "xxy", "xyXY", "a"):
        assert certify_word(genus2_rep, w).verdict == INFINITE_ORDER
        for k in range(1, 6):
            assert certify_word(genus2_rep, word_pow(w, k)).verdict != IDENTITY


def test_certify_verdict_invariant_under_absorption(genus2_rep):
    # same element written with and without boundary syllables
    pairs = [
        ("a" + "xyXY" + "b", "a" + "abAB" + "b"),
        ("abAB" + "y", "xyXY" + "y"),
    ]
    for u, v in pairs:
        cu = certify_word(genus2_rep, u)
        cv = certify_word(genus2_rep, v)
        assert cu.verdict == cv.verdict


# --- lemma degrees ----------------------------------------------------------


def test_lemma_degrees_l1_example(genus2_rep):
    reports = verify_lemma_degrees(genus2_rep, trials=50, max_l=1, rng_seed=7)
    assert all(r.l == 1 for r in reports)
    assert all(r.conforms for r in reports)
    assert all(r.degrees[3] == 1 for r in reports)


def test_lemma_degrees_sample(genus2_rep):
    reports = verify_lemma_degrees(genus2_rep, trials=200, max_l=5, rng_seed=7)
    assert len(reports) == 200
    assert all(r.hypothesis_ok for r in reports)
    assert all(r.conforms for r in reports)
    again = verify_lemma_degrees(genus2_rep, trials=200, max_l=5, rng_seed=7)
    assert reports == again  # deterministic given the seed
    other = verify_lemma_degrees(genus2_rep, trials=200, max_l=5, rng_seed=8)
    assert reports != other


def test_lemma_degrees_negative_injection(genus2_rep):
    reports = verify_lemma_degrees(
        genus2_rep, trials=120, max_l=3, rng_seed=7, allow_bad_hypotheses=True
    )
    flagged = [r for r in reports if not r.hypothesis_ok]
    assert flagged, "injection produced no hypothesis-violating samples"
    clean = [r for r in reports if r.hypothesis_ok]
    assert all(r.conforms for r in clean)
    # the violating samples must include degree-bound breakage: that is the
    # point of the hypotheses
    assert any(not r.conforms for r in flagged)


def test_lemma_degrees_requires_genus2(torus_rep):
    with pytest.raises(ValueError, match="genus"):
        verify_lemma_degrees(torus_rep, 1, 1, 0)


# --- witnesses and the suite -------------------------------------------------


def test_kernel_witness(genus2_rep, torus_rep):
    for rep in (genus2_rep, torus_rep):
        word, cert = kernel_witness(rep)
        assert cert.verdict == IDENTITY
        assert free_reduce(word) != ""
        assert abelianize(word) == (0, 0)


def test_kernel_witness_independent_of_twist(default_params):
    # independent oracle: multiply the constant phi_B images by hand
    a, b = default_params.alpha, default_params.beta
    x = (a, Fraction(0), Fraction(0), 1 / a)
    y = (b, Fraction(1), Fraction(0), 1 / b)
    inv = lambda m: (m[3], -m[1], -m[2], m[0])
    images = {"x": x, "y": y, "X": inv(x), "Y": inv(y)}
    word = commutator(commutator("x", "y"), commutator("xx", "y"))
    out = (Fraction(1), Fraction(0), Fraction(0), Fraction(1))
    for ch in word:
        out = mat4_mul(out, images[ch])
    assert out == (1, 0, 0, 1)


def test_nonconjugacy_witness_genus2(default_params):
    witness = nonconjugacy_witness(default_params, SURFACE_GENUS2)
    assert witness.word == "ax"
    assert witness.trace == Poly((Fraction(9, 2), 1))
    assert witness.trace.degree >= 1


def test_nonconjugacy_witness_torus(default_params):
    witness = nonconjugacy_witness(default_params, SURFACE_PUNCTURED_TORUS)
    assert witness.word == "y"
    expected = default_params.beta + 1 / default_params.beta
    assert witness.trace == Poly((expected,))
    assert "beta" in witness.rationale


def test_boundary_rejected_as_nonconjugacy_witness(genus2_rep):
    # [x,y] maps to a constant matrix: useless for separating the family
    from slcert.rep import evaluate

    assert evaluate(genus2_rep, "xyXY").trace().is_constant()


def test_run_theorem_suite_small(genus2_rep):
    report = run_theorem_suite(genus2_rep, 6)
    assert report.failures == []
    assert report.kernel_certificate.verdict == IDENTITY
    assert all(row.certificate.verdict == INFINITE_ORDER for row in report.rows)
    # powers are budgeted: |k| * len(word) <= max_len
    for row in report.rows:
        assert abs(row.power) * len(row.word) <= 6
    # deterministic ordering
    keys = [(len(r.word), r.word, r.power) for r in report.rows]
    assert keys == sorted(keys)


def test_run_theorem_suite_torus(torus_rep):
    report = run_theorem_suite(torus_rep, 8)
    assert report.failures == []
    assert all(set(row.word) <= set("xyXY") for row in report.rows)


def test_suite_includes_mirror_classes(genus2_rep):
    report = run_theorem_suite(genus2_rep, 4)
    words = {row.word for row in report.rows}
    assert "a" in words and "aab" in words and "abAB" in words


def test_report_json_schema(genus2_rep):
    data = run_theorem_suite(genus2_rep, 4).to_json()
    assert set(data) == {
        "params",
        "surface",
        "max_len",
        "kernel_witness",
        "nonconjugacy",
        "scc_results",
        "failures",
        "timing_ms",
    }
    assert data["params"] == {"alpha": "2", "beta": "-3"}
    assert data["kernel_witness"]["verdict"] == "identity"
    row = data["scc_results"][0]
    assert set(row) == {"word", "kind", "power", "trace_poly", "verdict", "reason"}
