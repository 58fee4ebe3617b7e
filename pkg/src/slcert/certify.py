"""Finite-order certificates and the full theorem run.

The order decision for an image matrix M over Q[t] with det 1 rests on two
exact facts.  First, a finite-order isometry of the hyperbolic plane is
elliptic with trace 2cos(pi p/q), an algebraic number; a non-constant trace
polynomial takes transcendental values at every transcendental t, so it
certifies infinite order outright.  Second, when the trace is a constant
rational c, Niven's theorem pins down the only c of the form 2cos(rational*pi)
as 0, +-1, +-2, giving a finite decision table: |c| > 2 hyperbolic, c = +-2
parabolic or the identity, c = 0 order two, c = +-1 order three, and any
other |c| < 2 an irrational rotation of infinite order.

Mixed words (letters from both sides) are first rewritten to the alternating
shape a_1 b_1 ... a_l b_l with no syllable in the amalgamating subgroup; the
degree bookkeeping behind the non-constant-trace outcome needs every side-A
syllable image to move infinity (nonzero 2,1 entry) and every side-B syllable
image to be hyperbolic, so those hypotheses are checked per word and failure
is reported as inconclusive rather than resolved.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field, replace

from .exact import Mat2, Poly
from .rep import (
    Params,
    Representation,
    SURFACE_GENUS2,
    SURFACE_PUNCTURED_TORUS,
    build_representation,
    evaluate,
)
from .scc import SccClass, enumerate_scc_classes
from .words import (
    A_SIDE,
    B_SIDE,
    Syllable,
    abelianize,
    absorb_c_syllables,
    commutator,
    cyclic_reduce,
    format_word,
    free_reduce,
    to_syllables,
    word_pow,
)

IDENTITY = "identity"
MINUS_IDENTITY = "minus-identity"
FINITE_ORDER = "finite-order"
INFINITE_ORDER = "infinite-order"
INCONCLUSIVE = "inconclusive"

REASON_NONCONSTANT_TRACE = "non-constant-trace"
REASON_HYPERBOLIC = "hyperbolic"
REASON_PARABOLIC = "parabolic"
REASON_IRRATIONAL_ROTATION = "irrational-rotation"

KERNEL_WITNESS_TEXT = "[[x,y],[x^2,y]]"


@dataclass(frozen=True)
class Certificate:
    word: str
    trace: Poly
    trace_constant: bool
    verdict: str
    order: int | None = None
    reason: str | None = None
    detail: str | None = None

    def is_psl2_identity(self) -> bool:
        return self.verdict in (IDENTITY, MINUS_IDENTITY)

    def to_json(self) -> dict:
        out: dict = {
            "word": format_word(self.word),
            "trace_poly": self.trace.to_json(),
            "trace_constant": self.trace_constant,
            "verdict": self.verdict,
        }
        if self.order is not None:
            out["order"] = self.order
        if self.reason is not None:
            out["reason"] = self.reason
        if self.detail is not None:
            out["detail"] = self.detail
        return out


def order_certificate(m: Mat2) -> Certificate:
    """Decide the PSL(2) order class of a det-1 matrix over Q[t]."""
    if m.det() != Poly.const(1):
        raise ValueError(f"matrix has determinant {m.det()}, expected 1")
    tr = m.trace()
    if not tr.is_constant():
        return Certificate("", tr, False, INFINITE_ORDER, reason=REASON_NONCONSTANT_TRACE)
    c = tr.constant_value()
    if abs(c) > 2:
        return Certificate("", tr, True, INFINITE_ORDER, reason=REASON_HYPERBOLIC)
    if abs(c) == 2:
        if m.is_identity():
            return Certificate("", tr, True, IDENTITY)
        if (-m).is_identity():
            return Certificate("", tr, True, MINUS_IDENTITY)
        return Certificate("", tr, True, INFINITE_ORDER, reason=REASON_PARABOLIC)
    if c == 0:
        return Certificate("", tr, True, FINITE_ORDER, order=2)  # m^2 = -I
    if abs(c) == 1:
        return Certificate("", tr, True, FINITE_ORDER, order=3)  # m^3 = -+I
    return Certificate("", tr, True, INFINITE_ORDER, reason=REASON_IRRATIONAL_ROTATION)


def _const_image(rep: Representation, word: str) -> Mat2:
    out = Mat2.identity()
    for ch in word:
        m = rep.const_images[ch.lower()]
        out = out * (m.inverse() if ch.isupper() else m)
    return out


def _lemma_form(sylls: list[Syllable]) -> list[Syllable]:
    """Cyclically rotate an absorbed syllable list into a_1 b_1 ... a_l b_l.

    Rotation conjugates the group element, which changes neither trace nor
    order, so verdicts are unaffected.  Merging the wrap-around pair can
    expose new C-power syllables; those are re-absorbed.
    """
    while True:
        if len(sylls) <= 1:
            return sylls
        if sylls[0].side == sylls[-1].side:
            merged = Syllable(sylls[0].side, sylls[-1].word + sylls[0].word)
            sylls = absorb_c_syllables([merged] + sylls[1:-1])
            continue
        if sylls[0].side != A_SIDE:
            sylls = sylls[1:] + [sylls[0]]
            continue
        return sylls


def certify_word(rep: Representation, w: str) -> Certificate:
    """Certify one word: reduce, absorb boundary powers, decide order.

    Single-side words go straight to the order decision.  Mixed words are
    rotated into alternating form; if some side-A syllable image has zero
    2,1 entry or some side-B syllable image is not hyperbolic, the verdict
    is inconclusive (never a silent pass).
    """
    reduced = free_reduce(w)
    if not reduced:
        raise ValueError("empty word after free reduction")
    for ch in reduced:
        if ch.lower() not in rep.generators:
            raise ValueError(
                f"generator {ch.lower()!r} out of scope for surface {rep.surface}"
            )
    core, _ = cyclic_reduce(reduced)
    sylls = _lemma_form(absorb_c_syllables(to_syllables(core)))
    word_now = "".join(s.word for s in sylls)
    if not word_now:
        # the amalgam relation collapsed the whole word: it is the identity
        return replace(order_certificate(Mat2.identity()), word=w)
    sides = {s.side for s in sylls}
    if len(sides) == 2:
        failure = None
        for index, syl in enumerate(sylls):
            image = _const_image(rep, syl.word)
            if syl.side == A_SIDE and image.e21 == Poly():
                failure = (
                    f"A-syllable {index} ({format_word(syl.word)}) "
                    "has zero 2,1 entry"
                )
                break
            if syl.side == B_SIDE:
                tr = image.trace().constant_value()
                if abs(tr) <= 2:
                    failure = (
                        f"B-syllable {index} ({format_word(syl.word)}) "
                        f"is not hyperbolic (trace {tr})"
                    )
                    break
        if failure is not None:
            trace = evaluate(rep, word_now).trace()
            return Certificate(
                w, trace, trace.is_constant(), INCONCLUSIVE, detail=failure
            )
    return replace(order_certificate(evaluate(rep, word_now)), word=w)


# --- Lemma degree verification ---------------------------------------------


@dataclass(frozen=True)
class DegreeReport:
    word: str
    l: int
    degrees: tuple[int, int, int, int]
    hypothesis_ok: bool
    conforms: bool

    def to_json(self) -> dict:
        return {
            "word": format_word(self.word),
            "l": self.l,
            "degrees": list(self.degrees),
            "hypothesis_ok": self.hypothesis_ok,
            "conforms": self.conforms,
        }


def _degree_conforms(l: int, degrees: tuple[int, int, int, int]) -> bool:
    d11, d12, d21, d22 = degrees
    return d22 == l and d12 <= l and d11 <= l - 1 and d21 <= l - 1


def _a_part_pool(rep: Representation, max_letters: int = 3) -> list[str]:
    """Short side-A words whose images have nonzero 2,1 entry."""
    pool: list[str] = []
    frontier = [""]
    for _ in range(max_letters):
        frontier = [
            w + ch
            for w in frontier
            for ch in "abAB"
            if not w or w[-1] != ch.swapcase()
        ]
        pool.extend(frontier)
    zero = Poly()
    return [w for w in pool if _const_image(rep, w).e21 != zero]


def verify_lemma_degrees(
    rep: Representation,
    trials: int,
    max_l: int,
    rng_seed: int,
    allow_bad_hypotheses: bool = False,
) -> list[DegreeReport]:
    """Sample alternating words and record entry degrees of their images.

    For l syllable pairs the 2,2 entry must have degree exactly l, the 1,2
    entry at most l, and the other two at most l-1.  Side-A parts are drawn
    from short words that move infinity; side-B parts from the hyperbolic
    SCC family.  With allow_bad_hypotheses, some side-A parts are replaced
    by boundary powers (zero 2,1 entry) and flagged hypothesis_ok = False.
    """
    if rep.surface != SURFACE_GENUS2:
        raise ValueError("degree verification needs the glued genus-2 surface")
    rng = random.Random(rng_seed)
    a_pool = _a_part_pool(rep)
    b_pool = [c.canonical for c in enumerate_scc_classes(6) if c.kind == "type3"]
    reports: list[DegreeReport] = []
    for _ in range(trials):
        l = rng.randint(1, max_l)
        bad_index = rng.randrange(l) if allow_bad_hypotheses and rng.random() < 0.5 else None
        parts: list[str] = []
        ok = True
        for i in range(l):
            if i == bad_index:
                parts.append("abAB" * rng.randint(1, 2))
                ok = False
            else:
                parts.append(rng.choice(a_pool))
            parts.append(rng.choice(b_pool))
        word = "".join(parts)
        m = evaluate(rep, word)
        degrees = tuple(entry.degree for entry in m.entries())
        reports.append(
            DegreeReport(word, l, degrees, ok, _degree_conforms(l, degrees))
        )
    return reports


# --- theorem witnesses ------------------------------------------------------


def kernel_witness(rep: Representation) -> tuple[str, Certificate]:
    """The double commutator [[x,y],[x^2,y]]: nontrivial, yet maps to I.

    Both commutators land in the upper-triangular unipotent subgroup, which
    is abelian, so their commutator is exactly the identity matrix; the word
    itself is nontrivial in the free group (checked), witnessing
    non-injectivity.  Its homology class is zero and it is not claimed to be
    a power of a simple closed curve.
    """
    w = commutator(commutator("x", "y"), commutator("xx", "y"))
    assert free_reduce(w), "kernel witness collapsed in the free group"
    assert abelianize(w, "xy") == (0, 0)
    cert = certify_word(rep, w)
    return w, cert


@dataclass(frozen=True)
class NonConjugacyWitness:
    word: str
    trace: Poly
    rationale: str

    def to_json(self) -> dict:
        return {
            "word": format_word(self.word),
            "trace_poly": self.trace.to_json(),
            "rationale": self.rationale,
        }


def nonconjugacy_witness(
    params: Params, surface: str, search_max_len: int = 6
) -> NonConjugacyWitness:
    """A word separating the members of the uncountable family.

    On the glued surface, a word whose trace polynomial is non-constant does
    it: trace is a conjugation invariant and a degree-d polynomial takes any
    single value at most d times, so distinct transcendental t give pairwise
    non-conjugate representations.  On the punctured torus the generator y
    already separates: its trace beta + 1/beta is injective in beta > 1, so
    varying beta yields uncountably many non-conjugate representations.
    """
    if surface == SURFACE_PUNCTURED_TORUS:
        rep = build_representation(params, surface)
        return NonConjugacyWitness(
            "y",
            evaluate(rep, "y").trace(),
            "trace(y) = beta + 1/beta separates distinct beta > 1; "
            "fixing alpha and varying beta gives uncountably many "
            "non-conjugate representations",
        )
    rep = build_representation(params, surface)
    for length in range(2, search_max_len + 1):
        for word in _mixed_words(length):
            tr = evaluate(rep, word).trace()
            if tr.degree >= 1:
                return NonConjugacyWitness(
                    word,
                    tr,
                    "non-constant trace polynomial: a degree-d polynomial "
                    "takes each value at most d times, so transcendental "
                    "t-values give pairwise non-conjugate representations",
                )
    raise RuntimeError(f"no non-constant trace word of length <= {search_max_len}")


def _mixed_words(length: int):
    """Freely reduced words of given length using both sides, a-side first."""

    def extend(word: str):
        if len(word) == length:
            if {ch.lower() for ch in word} & {"a", "b"} and {
                ch.lower() for ch in word
            } & {"x", "y"}:
                yield word
            return
        for ch in "axbyABXY":
            if word and word[-1] == ch.swapcase():
                continue
            yield from extend(word + ch)

    yield from extend("")


# --- the full run -----------------------------------------------------------


@dataclass(frozen=True)
class SuiteRow:
    word: str
    kind: str
    power: int
    certificate: Certificate

    def to_json(self) -> dict:
        return {
            "word": format_word(self.word),
            "kind": self.kind,
            "power": self.power,
            "trace_poly": self.certificate.trace.to_json(),
            "verdict": self.certificate.verdict,
            "reason": self.certificate.reason,
        }


@dataclass(frozen=True)
class Report:
    params: Params
    surface: str
    max_len: int
    kernel_word: str
    kernel_certificate: Certificate
    nonconjugacy: NonConjugacyWitness
    rows: list[SuiteRow] = field(repr=False)
    failures: list[str]
    timing_ms: int

    def to_json(self) -> dict:
        return {
            "params": {"alpha": str(self.params.alpha), "beta": str(self.params.beta)},
            "surface": self.surface,
            "max_len": self.max_len,
            "kernel_witness": {
                "word": format_word(self.kernel_word),
                "verdict": self.kernel_certificate.verdict,
            },
            "nonconjugacy": self.nonconjugacy.to_json(),
            "scc_results": [row.to_json() for row in self.rows],
            "failures": list(self.failures),
            "timing_ms": self.timing_ms,
        }


def _mirror_to_a_side(word: str) -> str:
    return word.translate(str.maketrans("xyXY", "abAB"))


def run_theorem_suite(rep: Representation, max_len: int) -> Report:
    """Certify every enumerable SCC class power up to the length budget.

    Verifies the kernel witness (non-injectivity), that every power w^k of
    every enumerated class with |k| * len(w) <= max_len has infinite order
    (no simple closed curve power in the kernel), and emits the
    non-conjugacy witness for the uncountability clause.  Any identity,
    finite-order or inconclusive verdict on a class power is a failure.

    On the glued surface the side-A mirror classes (x -> a, y -> b) are
    certified as well; mixed-letter curves have no syntactic enumeration and
    are certified individually via certify_word.
    """
    start = time.monotonic()
    failures: list[str] = []

    kw, kcert = kernel_witness(rep)
    if kcert.verdict != IDENTITY:
        failures.append(f"kernel witness verdict {kcert.verdict}, expected identity")

    witness = nonconjugacy_witness(rep.params, rep.surface)
    if rep.surface == SURFACE_GENUS2 and witness.trace.degree < 1:
        failures.append("non-conjugacy witness trace is constant")

    classes = enumerate_scc_classes(max_len)
    jobs: list[tuple[str, SccClass]] = [(c.canonical, c) for c in classes]
    if rep.surface == SURFACE_GENUS2:
        jobs += [(_mirror_to_a_side(c.canonical), c) for c in classes]

    rows: list[SuiteRow] = []
    for word, cls in jobs:
        max_power = max_len // len(word)
        for k in range(-max_power, max_power + 1):
            if k == 0:
                continue
            cert = certify_word(rep, word_pow(word, k))
            rows.append(SuiteRow(word, cls.kind, k, cert))
            if cert.verdict != INFINITE_ORDER:
                failures.append(
                    f"{format_word(word)}^{k}: verdict {cert.verdict} "
                    f"({cert.detail or cert.reason})"
                )
    rows.sort(key=lambda r: (len(r.word), r.word, r.power))
    elapsed_ms = int((time.monotonic() - start) * 1000)
    return Report(
        rep.params,
        rep.surface,
        max_len,
        kw,
        kcert,
        witness,
        rows,
        failures,
        elapsed_ms,
    )
