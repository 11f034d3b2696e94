"""Words in the two twist generators.

A word is a finite sequence of letters over {a, b, a^-1, b^-1}.  In text
form, lowercase ``a``/``b`` are the generators and uppercase ``A``/``B``
their inverses; ``^`` raises a letter or parenthesized group to an integer
power.  Concatenation never reduces implicitly; call :func:`free_reduce`
explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Tuple

# A letter is (generator, sign) with generator in {"a", "b"}, sign in {+1, -1}.
Letter = Tuple[str, int]

GENERATORS = ("a", "b")

# Hard cap on expansion size so (ab)^k with a huge k fails loudly.
MAX_LETTERS = 10**6


class WordSyntaxError(ValueError):
    """Raised on malformed word text; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class WordSizeError(ValueError):
    """Raised when an expansion would exceed MAX_LETTERS."""


@dataclass(frozen=True)
class TwistWord:
    """Immutable word over the twist generators."""

    letters: Tuple[Letter, ...]

    def __post_init__(self):
        for gen, sign in self.letters:
            if gen not in GENERATORS or sign not in (1, -1):
                raise ValueError(f"bad letter {(gen, sign)!r}")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __str__(self) -> str:
        return print_word(self)

    def __mul__(self, other: "TwistWord") -> "TwistWord":
        return concat(self, other)

    def inverse(self) -> "TwistWord":
        return invert(self)

    def reduced(self) -> "TwistWord":
        return free_reduce(self)

    def is_reduced(self) -> bool:
        ls = self.letters
        return all(
            ls[i][0] != ls[i + 1][0] or ls[i][1] == ls[i + 1][1]
            for i in range(len(ls) - 1)
        )

    def pow(self, n: int) -> "TwistWord":
        if n < 0:
            return invert(self).pow(-n)
        if n * len(self.letters) > MAX_LETTERS:
            raise WordSizeError(
                f"power expands to {n * len(self.letters)} letters (cap {MAX_LETTERS})"
            )
        return TwistWord(self.letters * n)


EMPTY = TwistWord(())


def word(letters: Iterable[Letter]) -> TwistWord:
    return TwistWord(tuple(letters))


_LETTER_FOR_CHAR = {"a": ("a", 1), "b": ("b", 1), "A": ("a", -1), "B": ("b", -1)}
_CHAR_FOR_LETTER = {v: k for k, v in _LETTER_FOR_CHAR.items()}


def print_word(w: TwistWord) -> str:
    """Canonical text form: one character per letter, empty string for the
    empty word."""
    return "".join(_CHAR_FOR_LETTER[l] for l in w.letters)


def parse_word(text: str) -> TwistWord:
    """Parse word text into the literal (unreduced) letter sequence.

    Grammar: word := term* ; term := letter | "(" word ")" ["^" int]
    | letter "^" int ; letter := "a"|"b"|"A"|"B".  Whitespace is ignored.
    Empty input denotes the empty word (so parsing inverts print_word).
    """
    letters: list[Letter] = []
    pos = _parse_into(text, 0, letters, depth=0)
    if pos != len(text):
        raise WordSyntaxError(f"unexpected character {text[pos]!r}", pos)
    return TwistWord(tuple(letters))


def _skip_ws(text: str, pos: int) -> int:
    while pos < len(text) and text[pos].isspace():
        pos += 1
    return pos


def _parse_int(text: str, pos: int) -> tuple[int, int]:
    start = pos
    if pos < len(text) and text[pos] == "-":
        pos += 1
    digits = pos
    while pos < len(text) and text[pos].isdigit():
        pos += 1
    if pos == digits:
        raise WordSyntaxError("missing exponent after '^'", start)
    return int(text[start:pos]), pos


def _parse_into(text: str, pos: int, out: list[Letter], depth: int) -> int:
    """Parse terms into ``out`` until end of input or an unmatched ')'."""
    while True:
        pos = _skip_ws(text, pos)
        if pos >= len(text):
            return pos
        ch = text[pos]
        if ch == ")":
            if depth == 0:
                raise WordSyntaxError("unbalanced ')'", pos)
            return pos
        if ch == "(":
            open_pos = pos
            inner: list[Letter] = []
            pos = _parse_into(text, pos + 1, inner, depth + 1)
            if pos >= len(text) or text[pos] != ")":
                raise WordSyntaxError("unbalanced '('", open_pos)
            pos = _skip_ws(text, pos + 1)
            exp = 1
            if pos < len(text) and text[pos] == "^":
                exp, pos = _parse_int(text, pos + 1)
            _append_power(out, inner, exp)
        elif ch in _LETTER_FOR_CHAR:
            letter = _LETTER_FOR_CHAR[ch]
            pos = _skip_ws(text, pos + 1)
            exp = 1
            if pos < len(text) and text[pos] == "^":
                exp, pos = _parse_int(text, pos + 1)
            _append_power(out, [letter], exp)
        else:
            raise WordSyntaxError(f"unexpected character {ch!r}", pos)


def _append_power(out: list[Letter], base: list[Letter], exp: int) -> None:
    if exp < 0:
        base = [(g, -s) for g, s in reversed(base)]
        exp = -exp
    if len(out) + exp * len(base) > MAX_LETTERS:
        raise WordSizeError(
            f"expansion exceeds the {MAX_LETTERS}-letter cap"
        )
    out.extend(base * exp)


def free_reduce(w: TwistWord) -> TwistWord:
    """The unique reduced word freely equal to w (stack cancellation)."""
    stack: list[Letter] = []
    for gen, sign in w.letters:
        if stack and stack[-1][0] == gen and stack[-1][1] == -sign:
            stack.pop()
        else:
            stack.append((gen, sign))
    return TwistWord(tuple(stack))


def invert(w: TwistWord) -> TwistWord:
    return TwistWord(tuple((g, -s) for g, s in reversed(w.letters)))


def concat(u: TwistWord, v: TwistWord) -> TwistWord:
    return TwistWord(u.letters + v.letters)


@dataclass(frozen=True)
class XSpec:
    """One of the four X-forms: (T_aT_b)^k or (T_bT_a)^k with k an integer."""

    form: str  # "ab" or "ba"
    k: int

    def __post_init__(self):
        if self.form not in ("ab", "ba"):
            raise ValueError(f"form must be 'ab' or 'ba', got {self.form!r}")


def expand_xform(x: XSpec) -> TwistWord:
    """The literal word (ab)^k or (ba)^k; inverse expansion for k < 0."""
    base = parse_word(x.form)
    return base.pow(x.k)
