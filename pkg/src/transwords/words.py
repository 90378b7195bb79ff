"""Finite words, exponent bounds and the admissibility gate.

Words are plain tuples of letter indices ``0..k-1``.  The alphabet size is
passed alongside whenever it matters; a word never carries it.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Word = tuple  # tuple[int, ...]

MAX_ALPHABET = 36
_DIGITS = "0123456789abcdefghijklmnopqrstuvwxyz"
_CODE = {c: i for i, c in enumerate(_DIGITS)}


class WordError(ValueError):
    """Malformed word, alphabet or argument."""


class UnsupportedParameters(ValueError):
    """(k, bound) lies outside the admissible set."""


class Undecided(RuntimeError):
    """A finite window or work budget ran out before a question was settled."""


class ResourceLimit(RuntimeError):
    """A requested computation exceeds a configured size cap."""


@dataclass(frozen=True)
class PowerBound:
    """Exponent threshold ``alpha`` or ``alpha+``.

    A word violates ``PowerBound(a)`` when it has a factor of exponent
    ``>= a``; it violates ``PowerBound(a, plus=True)`` when some factor has
    exponent ``> a``.
    """

    alpha: Fraction
    plus: bool = False

    def __post_init__(self):
        a = Fraction(self.alpha)
        if a < 1:
            raise WordError(f"exponent bound must be >= 1, got {a}")
        object.__setattr__(self, "alpha", a)

    @classmethod
    def parse(cls, text: str) -> "PowerBound":
        m = re.fullmatch(r"\s*(\d+)(?:/(\d+))?(\+)?\s*", text)
        if m is None:
            raise WordError(f"malformed exponent {text!r}; expected N, N/D, N+ or N/D+")
        num, den, plus = m.groups()
        if den is not None and int(den) == 0:
            raise WordError(f"zero denominator in {text!r}")
        alpha = Fraction(int(num), int(den) if den else 1)
        return cls(alpha, plus is not None)

    def __str__(self) -> str:
        return f"{self.alpha}{'+' if self.plus else ''}"


def in_upsilon(k: int, bound: PowerBound) -> bool:
    """Whether the construction applies to ``k`` letters under ``bound``."""
    if bound.plus:
        return k >= 3 and bound.alpha >= 2
    return (k == 3 and bound.alpha > 2) or (k > 3 and bound.alpha >= 2)


def require_upsilon(k: int, bound: PowerBound) -> None:
    if not in_upsilon(k, bound):
        raise UnsupportedParameters(
            f"(k={k}, {bound}) is not admissible: need k>=3 with 2+ or more, "
            "k=3 with alpha>2, or k>3 with alpha>=2"
        )


def check_alphabet(k: int) -> None:
    if not 1 <= k <= MAX_ALPHABET:
        raise WordError(f"alphabet size must be in 1..{MAX_ALPHABET}, got {k}")


def make_word(letters: Iterable[int], k: int | None = None) -> Word:
    w = tuple(int(a) for a in letters)
    if k is not None:
        check_alphabet(k)
        for a in w:
            if not 0 <= a < k:
                raise WordError(f"letter {a} outside alphabet of size {k}")
    return w


def decode(text: str, k: int | None = None) -> Word:
    """Canonical text ``0-9a-z`` to a word."""
    try:
        w = tuple(_CODE[c] for c in text.strip().lower())
    except KeyError as exc:
        raise WordError(f"bad letter {exc.args[0]!r} in {text!r}") from None
    return make_word(w, k)


def encode(w: Sequence[int]) -> str:
    return "".join(_DIGITS[a] for a in w)


def reverse(w: Sequence[int]) -> Word:
    return tuple(reversed(w))


def occur(w: Sequence[int], f: Sequence[int]) -> int:
    """Number of (possibly overlapping) occurrences of nonempty ``f`` in ``w``."""
    f = tuple(f)
    if not f:
        raise WordError("occur is defined only for nonempty factors")
    w = tuple(w)
    m = len(f)
    return sum(1 for i in range(len(w) - m + 1) if w[i : i + m] == f)


def prefixes(w: Sequence[int]) -> set:
    w = tuple(w)
    return {w[:i] for i in range(len(w) + 1)}


def suffixes(w: Sequence[int]) -> set:
    w = tuple(w)
    return {w[i:] for i in range(len(w) + 1)}


def factors(w: Sequence[int]) -> set:
    w = tuple(w)
    n = len(w)
    out = {()}
    out.update(w[i:j] for i in range(n) for j in range(i + 1, n + 1))
    return out
