"""Words in the surface group, stored as plain strings.

A word is a string over "abxy" and their inverses "ABXY" (uppercase is the
inverse of lowercase, so "xyXY" is the commutator [x, y]).  Generators a, b
belong to the side-A subsurface and x, y to the side-B one; the separating
curve is c = [a, b] = [x, y], the single relation identifying the two free
groups inside the amalgam.

Everything here is a pure function from strings (or syllable lists) to the
same; nothing mutates.
"""

from __future__ import annotations

from typing import NamedTuple

GENERATORS = "abxy"
ALPHABET = "abxyABXY"

A_SIDE = "A"
B_SIDE = "B"

C_WORD = {A_SIDE: "abAB", B_SIDE: "xyXY"}


class ParseError(ValueError):
    """Raised on malformed word text; `offset` is the failing byte position."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"syntax error at offset {offset}: {message}")
        self.offset = offset


class Syllable(NamedTuple):
    side: str
    word: str


def invert_letter(ch: str) -> str:
    return ch.swapcase()


def inverse_word(w: str) -> str:
    return w[::-1].swapcase()


def side_of(ch: str) -> str:
    return A_SIDE if ch in "abAB" else B_SIDE


def free_reduce(w: str) -> str:
    """Cancel adjacent inverse pairs until none remain."""
    out: list[str] = []
    for ch in w:
        if out and out[-1] == ch.swapcase():
            out.pop()
        else:
            out.append(ch)
    return "".join(out)


def commutator(u: str, v: str) -> str:
    return free_reduce(u + v + inverse_word(u) + inverse_word(v))


def word_pow(w: str, k: int) -> str:
    if k < 0:
        return free_reduce(inverse_word(w) * (-k))
    return free_reduce(w * k)


def parse_word(text: str) -> str:
    """Parse word text into a freely reduced word.

    Grammar: word := term+ ; term := gen exp? | '[' word ',' word ']' ;
    gen is a single letter of "abxyABXY"; exp := '^' '-'? digit+ .
    The bracket form is commutator sugar: [u, v] = u v u^-1 v^-1.
    """
    letters, pos = _parse_sequence(text, 0, stop="")
    if pos != len(text):
        raise ParseError(f"unexpected {text[pos]!r}", pos)
    return free_reduce(letters)


def _parse_sequence(text: str, pos: int, stop: str) -> tuple[str, int]:
    out: list[str] = []
    saw_term = False
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text) or text[pos] in stop:
            break
        ch = text[pos]
        if ch == "[":
            lhs, pos = _parse_sequence(text, pos + 1, stop=",")
            if pos >= len(text) or text[pos] != ",":
                raise ParseError("expected ',' in commutator", pos)
            rhs, pos = _parse_sequence(text, pos + 1, stop="]")
            if pos >= len(text) or text[pos] != "]":
                raise ParseError("expected ']' closing commutator", pos)
            pos += 1
            out.append(commutator(lhs, rhs))
            saw_term = True
            continue
        if ch not in ALPHABET:
            if ch.isalpha():
                raise ParseError(f"unknown generator {ch!r}", pos)
            raise ParseError(f"unexpected {ch!r}", pos)
        pos += 1
        exp = 1
        if pos < len(text) and text[pos] == "^":
            exp, pos = _parse_exponent(text, pos + 1)
        if exp < 0:
            ch, exp = ch.swapcase(), -exp
        out.append(ch * exp)
        saw_term = True
    if not saw_term:
        raise ParseError("expected a generator or '['", pos)
    return "".join(out), pos


def _parse_exponent(text: str, pos: int) -> tuple[int, int]:
    sign = 1
    if pos < len(text) and text[pos] == "-":
        sign = -1
        pos += 1
    start = pos
    while pos < len(text) and text[pos].isdigit():
        pos += 1
    if pos == start:
        raise ParseError("expected digits after '^'", pos)
    return sign * int(text[start:pos]), pos


def format_word(w: str) -> str:
    """Compact rendering with run exponents; parse_word(format_word(w)) == w."""
    out: list[str] = []
    i = 0
    while i < len(w):
        j = i
        while j < len(w) and w[j] == w[i]:
            j += 1
        run = j - i
        out.append(w[i] if run == 1 else f"{w[i]}^{run}")
        i = j
    return "".join(out)


def cyclic_reduce(w: str) -> tuple[str, str]:
    """Split a freely reduced word as conjugator * core * conjugator^-1.

    The core is cyclically reduced (its first letter is not the inverse of
    its last).
    """
    core = w
    conj: list[str] = []
    while len(core) >= 2 and core[0] == core[-1].swapcase():
        conj.append(core[0])
        core = core[1:-1]
    return core, "".join(conj)


def to_syllables(w: str) -> list[Syllable]:
    """Group a word into maximal same-side runs, in order."""
    sylls: list[Syllable] = []
    for ch in w:
        s = side_of(ch)
        if sylls and sylls[-1].side == s:
            sylls[-1] = Syllable(s, sylls[-1].word + ch)
        else:
            sylls.append(Syllable(s, ch))
    return sylls


def syllable_word(sylls: list[Syllable]) -> str:
    return free_reduce("".join(s.word for s in sylls))


def c_power_of(syl: Syllable) -> int | None:
    """The k with syl = c^k on its side (k != 0), or None.

    Membership in C = <c> for a single-side word means literal equality of
    reduced words with c^k or c^-k; no search is involved.
    """
    w = syl.word
    if len(w) % 4 != 0 or not w:
        return None
    k = len(w) // 4
    c = C_WORD[syl.side]
    if w == c * k:
        return k
    if w == inverse_word(c) * k:
        return -k
    return None


def _other_side(side: str) -> str:
    return B_SIDE if side == A_SIDE else A_SIDE


def _remerge(sylls: list[Syllable]) -> list[Syllable]:
    """Merge adjacent same-side syllables and drop empty ones, to fixpoint."""
    while True:
        out: list[Syllable] = []
        changed = False
        for s in sylls:
            w = free_reduce(s.word)
            if not w:
                changed = True
                continue
            if out and out[-1].side == s.side:
                prev = out.pop()
                out.append(Syllable(s.side, prev.word + w))
                changed = True
            else:
                out.append(Syllable(s.side, w))
        sylls = out
        if not changed:
            return sylls


def absorb_c_syllables(sylls: list[Syllable]) -> list[Syllable]:
    """Eliminate syllables lying in the amalgamating subgroup C.

    A syllable equal to c^k is the same group element written on either
    side (c = [a,b] = [x,y] in the amalgam), so it can be rewritten on the
    opposite side and merged into its neighbours.  Each absorption strictly
    decreases the syllable count; the result has no C-power syllable unless
    it is a single syllable.
    """
    sylls = _remerge(sylls)
    while len(sylls) > 1:
        for i, syl in enumerate(sylls):
            k = c_power_of(syl)
            if k is not None:
                other = _other_side(syl.side)
                rewritten = Syllable(other, word_pow(C_WORD[other], k))
                sylls = _remerge(sylls[:i] + [rewritten] + sylls[i + 1 :])
                break
        else:
            break
    return sylls


def abelianize(w: str, gens: str = "xy") -> tuple[int, ...]:
    """Exponent-sum vector of w over the given generator set."""
    return tuple(w.count(g) - w.count(g.upper()) for g in gens)
