"""Simple closed curves on the once-punctured torus, as words in F(x, y).

Up to free homotopy these fall into three families: a generator x or y (and
inverses), the boundary commutator [x, y], and, after flipping generator
signs and possibly interchanging x and y, the primitive classes

    x^{n_1} y x^{n_2} y ... x^{n_s} y      n_i in {n, n+1}

whose run pattern (n_1 .. n_s) is a balanced cyclic sequence with
gcd(sum n_i, s) = 1 -- equivalently a rotation of the Christoffel word of
slope (sum n_i)/s.  Nonseparating classes are exactly the primitive elements
of the free group, which gives us an independent check: Whitehead's algorithm
decides primitivity by pure length reduction, knowing nothing about patterns,
and the two classifications are required to agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .exact import Rational
from .rep import Params
from .words import cyclic_reduce, free_reduce, inverse_word

LETTER_ORDER = {ch: i for i, ch in enumerate("abxyABXY")}

KIND_GENERATOR = "generator"
KIND_BOUNDARY = "boundary"
KIND_TYPE3 = "type3"

TYPE1 = "type1"
TYPE2 = "type2"
TYPE3 = "type3"
NOT_SCC = "not-scc"

BOUNDARY_WORD = "xyXY"


@dataclass(frozen=True)
class SccClass:
    """One free-homotopy class: canonical word plus its classification."""

    canonical: str
    kind: str
    n: int | None = None
    pattern: tuple[int, ...] | None = None

    def __len__(self) -> int:
        return len(self.canonical)

    def to_json(self) -> dict:
        out: dict = {"canonical": self.canonical, "kind": self.kind}
        if self.kind == KIND_TYPE3:
            out["n"] = self.n
            out["pattern"] = list(self.pattern or ())
        return out


def _rotations(w: str):
    for i in range(len(w)):
        yield w[i:] + w[:i]


def canonical_cyclic(w: str) -> str:
    """Lexicographically least rotation of w or w^-1 (order x < y < X < Y)."""
    if not w:
        return w
    key = lambda v: [LETTER_ORDER[ch] for ch in v]
    candidates = list(_rotations(w)) + list(_rotations(inverse_word(w)))
    return min(candidates, key=key)


def _flip(w: str, flip_x: bool, flip_y: bool) -> str:
    out = []
    for ch in w:
        low = ch.lower()
        if (low == "x" and flip_x) or (low == "y" and flip_y) or (
            low == "a" and flip_x
        ) or (low == "b" and flip_y):
            out.append(ch.swapcase())
        else:
            out.append(ch)
    return "".join(out)


def canonical_class(w: str) -> str:
    """Canonical form under rotation, inversion and generator sign flips."""
    core, _ = cyclic_reduce(free_reduce(w))
    if not core:
        return ""
    key = lambda v: [LETTER_ORDER[ch] for ch in v]
    return min(
        (
            canonical_cyclic(_flip(core, fx, fy))
            for fx in (False, True)
            for fy in (False, True)
        ),
        key=key,
    )


# --- classification against the syntactic forms ---------------------------


def _run_structure(w: str, separator: str) -> list[int] | None:
    """Cyclic run lengths of the non-separator letter between separators.

    Requires w to use only the two lowercase letters, contain both, and have
    every separator occurrence isolated (no two adjacent, cyclically).
    Returns the runs in order of appearance, or None if w does not fit.
    """
    other = "y" if separator == "x" else "x"
    if set(w) != {"x", "y"}:
        return None
    # rotate so position 0 starts a run of `other` right after a separator
    start = None
    for i, ch in enumerate(w):
        if ch == other and w[i - 1] == separator:
            start = i
            break
    if start is None:
        return None
    v = w[start:] + w[:start]
    runs: list[int] = []
    i = 0
    while i < len(v):
        if v[i] != other:
            return None  # two adjacent separators
        j = i
        while j < len(v) and v[j] == other:
            j += 1
        if j >= len(v) or v[j] != separator:
            return None
        runs.append(j - i)
        i = j + 1
    return runs


def classify_B_word(w: str) -> tuple[str, int | None, tuple[int, ...] | None]:
    """Match a cyclically reduced word in F(x, y) against the SCC forms.

    Returns (type, n, pattern): type1 for a single generator letter, type2
    for the boundary class, type3 with the x-run pattern for the primitive
    family, and not-scc otherwise.  The pattern is reported as scanned from
    the given word; symmetry moves (sign flips, x/y interchange) and cyclic
    rotation are applied only to recognize the form.

    Run lengths in {n, n+1} with coprime totals are necessary but not
    sufficient (x^2yx^2yxyxyxy has primitive homology yet is imprimitive),
    so a candidate must coincide cyclically with the Christoffel word of its
    letter counts, the unique embedded arrangement.
    """
    core, _ = cyclic_reduce(free_reduce(w))
    if not core:
        return (NOT_SCC, None, None)
    if len(core) == 1:
        return (TYPE1, None, None)
    if canonical_cyclic(core) == canonical_cyclic(BOUNDARY_WORD):
        return (TYPE2, None, None)
    for fx in (False, True):
        for fy in (False, True):
            v = _flip(core, fx, fy)
            if not v.islower():
                continue
            for separator in ("y", "x"):
                runs = _run_structure(v, separator)
                if runs is None:
                    continue
                if max(runs) - min(runs) > 1:
                    continue
                if gcd(sum(runs), len(runs)) != 1:
                    continue  # proper power in homology, not embedded
                counts = (v.count("x"), v.count("y"))
                if canonical_cyclic(v) != canonical_cyclic(
                    christoffel_word(*counts)
                ):
                    continue  # right letter counts, wrong arrangement
                return (TYPE3, min(runs), tuple(runs))
    return (NOT_SCC, None, None)


# --- Whitehead's algorithm: the independent primitivity oracle ------------


def _whitehead_moves() -> list[dict[str, str]]:
    """The rank-2 type II Whitehead automorphisms as letter substitutions."""
    moves = []
    for multiplier in "xXyY":
        z = "y" if multiplier.lower() == "x" else "x"
        m_inv = multiplier.swapcase()
        for image in (z + multiplier, m_inv + z, m_inv + z + multiplier):
            moves.append({z: image, z.swapcase(): inverse_word(image)})
    return moves


_MOVES = _whitehead_moves()


def _apply_move(w: str, move: dict[str, str]) -> str:
    out = "".join(move.get(ch, ch) for ch in w)
    core, _ = cyclic_reduce(free_reduce(out))
    return core


def whitehead_is_primitive(w: str) -> bool:
    """Decide whether w is part of a free basis of F(x, y).

    Greedy cyclic-length reduction over the Whitehead moves, with a
    breadth-first sweep of the equal-length orbit whenever no move shortens
    the current word (peak reduction guarantees a shortening move exists off
    minimum, so the sweep is belt and braces).  Primitive iff the minimum
    cyclic length in the orbit is 1.
    """
    core, _ = cyclic_reduce(free_reduce(w))
    if not core:
        return False
    current = canonical_cyclic(core)
    while True:
        if len(current) == 1:
            return True
        # greedy: any strictly shorter image restarts from there
        frontier = {current}
        seen = set()
        shorter = None
        while frontier and shorter is None:
            word = frontier.pop()
            seen.add(word)
            for move in _MOVES:
                image = canonical_cyclic(_apply_move(word, move))
                if len(image) < len(word):
                    shorter = image
                    break
                if len(image) == len(word) and image not in seen:
                    frontier.add(image)
            if len(seen) > 50_000:
                raise RuntimeError(f"whitehead orbit blow-up at {w!r}")
        if shorter is None:
            return False
        current = shorter


# --- enumeration -----------------------------------------------------------


def christoffel_word(p: int, q: int) -> str:
    """The primitive word with abelianization (p, q), p + q letters.

    For p >= q this is prod_i x^{m_i} y with m_i = floor(i p / q) -
    floor((i-1) p / q); for p < q the roles of x and y are swapped.  Requires
    p, q >= 1 coprime.
    """
    if p < 1 or q < 1 or gcd(p, q) != 1:
        raise ValueError(f"need coprime p, q >= 1, got ({p}, {q})")
    if p < q:
        return christoffel_word(q, p).translate(str.maketrans("xy", "yx"))
    return "".join("x" * (i * p // q - (i - 1) * p // q) + "y" for i in range(1, q + 1))


def _class_record(word: str) -> SccClass:
    canonical = canonical_class(word)
    kind, n, pattern = classify_B_word(canonical)
    assert kind == TYPE3, f"enumerated word {word!r} fell out of the family"
    return SccClass(canonical, KIND_TYPE3, n, pattern)


def enumerate_scc_classes(max_len: int) -> list[SccClass]:
    """All SCC classes of cyclic length <= max_len, canonically deduplicated.

    Classes are unique up to rotation, inversion and generator sign flips
    (x and y are *not* interchanged: x^2 y and x y^2 are distinct classes).
    Sorted by length then canonical word.
    """
    if max_len < 1:
        raise ValueError("max_len must be >= 1")
    out = [
        SccClass("x", KIND_GENERATOR),
        SccClass("y", KIND_GENERATOR),
    ]
    if max_len >= 4:
        out.append(SccClass(canonical_class(BOUNDARY_WORD), KIND_BOUNDARY))
    for total in range(2, max_len + 1):
        for p in range(1, total):
            q = total - p
            if gcd(p, q) == 1:
                out.append(_class_record(christoffel_word(p, q)))
    out.sort(key=lambda c: (len(c.canonical), c.canonical))
    return out


def type3_trace(params: Params, s_exp: int, k_exp: int) -> Rational:
    """alpha^s * beta^k + alpha^-s * beta^-k, the trace of a type-3 image."""
    if s_exp == 0 or k_exp == 0:
        raise ValueError("type-3 exponents must both be nonzero")
    value = params.alpha**s_exp * params.beta**k_exp
    return value + 1 / value
