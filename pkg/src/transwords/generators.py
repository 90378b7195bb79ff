"""Lazy infinite words.

A right-infinite word is a memoized stream: ``prefix(n)`` grows an internal
``bytearray`` on demand and never rewrites letters already produced.  A
left-infinite word is stored as its reversal, so ``suffix(n)`` is the mirror
of a right-infinite prefix.

Factor queries on an infinite word are answered from finite prefixes.  For a
uniformly recurrent word every factor shows up in every long enough window,
so a positive answer is found by scanning a growing prefix; a negative answer
is accepted only once two successive window doublings leave the relevant
extension set unchanged.  Running past the window cap raises ``Undecided``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence

import numpy as np

from .words import PowerBound, Undecided, Word, WordError, require_upsilon

WINDOW_START = 256
WINDOW_CAP = 1 << 22


class RightInfiniteWord:
    """Base class for lazily produced right-infinite words."""

    def __init__(self, alphabet: Iterable[int], uniformly_recurrent: bool = False):
        self.alphabet = frozenset(alphabet)
        self.uniformly_recurrent = uniformly_recurrent
        self._memo = bytearray()

    def _grow(self, n: int) -> None:
        """Append letters to ``self._memo`` until it holds at least ``n``."""
        raise NotImplementedError

    def _ensure(self, n: int) -> None:
        if len(self._memo) < n:
            self._grow(n)
            if len(self._memo) < n:
                raise RuntimeError(f"{type(self).__name__} failed to produce {n} letters")

    def prefix(self, n: int) -> Word:
        if n < 0:
            raise WordError("prefix length must be nonnegative")
        self._ensure(n)
        return tuple(self._memo[:n])

    def prefix_bytes(self, n: int) -> bytes:
        self._ensure(n)
        return bytes(self._memo[:n])

    def __getitem__(self, i: int) -> int:
        self._ensure(i + 1)
        return self._memo[i]

    def reversed(self) -> "LeftInfiniteWord":
        return LeftInfiniteWord(self)


class LeftInfiniteWord:
    """A left-infinite word, held as the right-infinite word read backwards."""

    def __init__(self, mirror: RightInfiniteWord):
        self.mirror = mirror

    @property
    def alphabet(self) -> frozenset:
        return self.mirror.alphabet

    @property
    def uniformly_recurrent(self) -> bool:
        return self.mirror.uniformly_recurrent

    def suffix(self, n: int) -> Word:
        return self.mirror.prefix(n)[::-1]

    def reversed(self) -> RightInfiniteWord:
        return self.mirror


@dataclass(frozen=True)
class Morphism:
    images: tuple  # images[a] is the nonempty word a maps to

    def __post_init__(self):
        imgs = tuple(tuple(img) for img in self.images)
        k = len(imgs)
        for a, img in enumerate(imgs):
            if not img:
                raise WordError(f"image of {a} is empty")
            if any(not 0 <= b < k for b in img):
                raise WordError(f"image of {a} leaves the alphabet")
        object.__setattr__(self, "images", imgs)

    @property
    def k(self) -> int:
        return len(self.images)

    def apply(self, w: Sequence[int]) -> Word:
        return tuple(b for a in w for b in self.images[a])

    def prolongable(self, seed: int) -> bool:
        img = self.images[seed]
        return len(img) >= 2 and img[0] == seed

    def reachable(self, seed: int) -> frozenset:
        seen = {seed}
        todo = [seed]
        while todo:
            for b in self.images[todo.pop()]:
                if b not in seen:
                    seen.add(b)
                    todo.append(b)
        return frozenset(seen)

    def is_primitive(self, letters: Iterable[int]) -> bool:
        """Primitivity of the incidence matrix restricted to ``letters``."""
        idx = sorted(letters)
        pos = {a: i for i, a in enumerate(idx)}
        m = np.zeros((len(idx), len(idx)), dtype=bool)
        for a in idx:
            for b in self.images[a]:
                if b in pos:
                    m[pos[a], pos[b]] = True
        # Wielandt: a primitive n x n matrix has a positive power at (n-1)^2 + 1
        power = m.copy()
        for _ in range((len(idx) - 1) ** 2 + 1):
            if power.all():
                return True
            power = (power.astype(np.int64) @ m.astype(np.int64)) > 0
        return bool(power.all())


class FixedPointWord(RightInfiniteWord):
    def __init__(self, morphism: Morphism, seed: int):
        if not 0 <= seed < morphism.k:
            raise WordError(f"seed {seed} outside the alphabet")
        if not morphism.prolongable(seed):
            raise WordError(f"morphism is not prolongable at {seed}")
        letters = morphism.reachable(seed)
        super().__init__(letters, uniformly_recurrent=morphism.is_primitive(letters))
        self.morphism = morphism
        self.seed = seed
        self._memo.extend(morphism.images[seed])
        self._cursor = 1

    def _grow(self, n: int) -> None:
        images = [bytes(img) for img in self.morphism.images]
        memo = self._memo
        while len(memo) < n:
            memo.extend(images[memo[self._cursor]])
            self._cursor += 1


class CompositeWord(RightInfiniteWord):
    """The finite word ``lead`` followed by the right-infinite ``tail``."""

    def __init__(self, lead: Sequence[int], tail: RightInfiniteWord):
        lead = tuple(lead)
        super().__init__(tail.alphabet | set(lead), uniformly_recurrent=False)
        self.lead = lead
        self.tail = tail
        self._memo.extend(lead)

    def _grow(self, n: int) -> None:
        self._memo[len(self.lead) :] = self.tail.prefix_bytes(n - len(self.lead))


class RelabeledWord(RightInfiniteWord):
    def __init__(self, base: RightInfiniteWord, mapping: Mapping[int, int]):
        super().__init__(
            (mapping[a] for a in base.alphabet),
            uniformly_recurrent=base.uniformly_recurrent,
        )
        self.base = base
        self.mapping = dict(mapping)
        self._table = bytes(self.mapping.get(a, 0) for a in range(256))

    def _grow(self, n: int) -> None:
        start = len(self._memo)
        self._memo.extend(self.base.prefix_bytes(n)[start:].translate(self._table))


def fixed_point(morphism: Morphism, seed: int) -> FixedPointWord:
    return FixedPointWord(morphism, seed)


THUE_MORSE = Morphism(((0, 1), (1, 0)))
THETA = Morphism(((0, 1, 2), (0, 2), (1,)))


def thue_morse() -> FixedPointWord:
    """Fixed point of 0 -> 01, 1 -> 10 starting with 0 (overlap-free)."""
    return FixedPointWord(THUE_MORSE, 0)


def theta_word() -> FixedPointWord:
    """Fixed point of 0 -> 012, 1 -> 02, 2 -> 1 starting with 0 (square-free)."""
    return FixedPointWord(THETA, 0)


def relabel(t: RightInfiniteWord, mapping: Mapping[int, int]) -> RelabeledWord:
    mapping = {int(a): int(b) for a, b in mapping.items()}
    if not t.alphabet <= mapping.keys():
        missing = sorted(t.alphabet - mapping.keys())
        raise WordError(f"relabel map does not cover letters {missing}")
    images = [mapping[a] for a in t.alphabet]
    if len(set(images)) != len(images):
        raise WordError("relabel map is not injective on the word's alphabet")
    if any(not 0 <= b < 256 for b in mapping.values()):
        raise WordError("relabel targets must be letters")
    return RelabeledWord(t, mapping)


def base_word_avoiding(
    k: int, bound: PowerBound, avoid: int, must_contain: Optional[int] = None
) -> RelabeledWord:
    """A power-free right-infinite word over the alphabet without ``avoid``.

    Thue-Morse on two letters when ``k == 3``, otherwise the square-free
    ternary fixed point of theta.  Targets are the smallest remaining letters
    in increasing order; ``must_contain`` replaces the largest of them when it
    would otherwise be left out.
    """
    require_upsilon(k, bound)
    if not 0 <= avoid < k:
        raise WordError(f"letter {avoid} outside alphabet of size {k}")
    if must_contain is not None:
        if not 0 <= must_contain < k:
            raise WordError(f"letter {must_contain} outside alphabet of size {k}")
        if must_contain == avoid:
            raise WordError("must_contain equals the avoided letter")
    base = thue_morse() if k == 3 else theta_word()
    size = len(base.alphabet)
    rest = [a for a in range(k) if a != avoid]
    targets = rest[:size]
    if must_contain is not None and must_contain not in targets:
        targets = sorted(targets[: size - 1] + [must_contain])
    return relabel(base, dict(enumerate(targets)))


def _recurrent_source(t: RightInfiniteWord) -> RightInfiniteWord:
    if t.uniformly_recurrent:
        return t
    tail = getattr(t, "tail", None)
    if tail is not None and tail.uniformly_recurrent:
        return tail
    raise WordError("factor queries need a uniformly recurrent word or a head+tail composite")


def _windows(m: int, cap: int):
    w = max(WINDOW_START, 8 * m)
    while w <= cap:
        yield w
        w *= 2


def _following_letters(buf: bytes, f: bytes) -> frozenset:
    out = set()
    i = buf.find(f)
    m = len(f)
    while i != -1:
        if i + m < len(buf):
            out.add(buf[i + m])
        i = buf.find(f, i + 1)
    return frozenset(out)


def _preceding_letters(buf: bytes, f: bytes) -> frozenset:
    out = set()
    i = buf.find(f, 1)
    while i != -1:
        out.add(buf[i - 1])
        i = buf.find(f, i + 1)
    return frozenset(out)


def _longest_occurring_prefix(buf: bytes, f: bytes) -> int:
    lo, hi = 0, len(f)
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if f[:mid] in buf:
            lo = mid
        else:
            hi = mid - 1
    return lo


def factor_in(t: RightInfiniteWord, f: Sequence[int], cap: int = WINDOW_CAP) -> bool:
    """Whether ``f`` is a (recurrent) factor of ``t``.

    For a head+tail composite the question is asked of the tail, whose
    factors are exactly the composite's recurrent factors.
    """
    src = _recurrent_source(t)
    f = tuple(f)
    if not f:
        return True
    if not set(f) <= src.alphabet:
        return False
    fb = bytes(f)
    history = []
    for w in _windows(len(f), cap):
        buf = src.prefix_bytes(w)
        if fb in buf:
            return True
        # the longest prefix of f seen so far, and what may follow it
        lo = _longest_occurring_prefix(buf, fb)
        state = (lo, _following_letters(buf, fb[:lo]) if lo else frozenset(buf))
        history.append(state)
        if len(history) >= 3 and history[-1] == history[-2] == history[-3]:
            return False
    raise Undecided(f"factor query of length {len(f)} unsettled at window cap {cap}")


def left_extensions(t: RightInfiniteWord, s: Sequence[int], cap: int = WINDOW_CAP) -> list:
    """Letters ``a`` with ``a s`` a factor of ``t``, ascending."""
    src = _recurrent_source(t)
    sb = bytes(s)
    history = []
    for w in _windows(len(sb) + 1, cap):
        buf = src.prefix_bytes(w)
        ext = _preceding_letters(buf, sb) if sb else frozenset(buf)
        history.append(ext)
        if len(history) >= 3 and history[-1] == history[-2] == history[-3]:
            return sorted(ext)
    raise Undecided(f"left extensions of a length-{len(sb)} factor unsettled at window cap {cap}")


class _LeftLimitMirror(RightInfiniteWord):
    """Reversal of a left-infinite word whose suffixes are all factors of ``t``.

    Letter ``i`` of this stream is letter ``i`` counted from the right end of
    the left-infinite word.  Extension goes leftward, smallest letter first,
    with backtracking on dead ends.
    """

    def __init__(self, t: RightInfiniteWord, cap: int = WINDOW_CAP):
        super().__init__(t.alphabet, uniformly_recurrent=t.uniformly_recurrent)
        self.source = t
        self.cap = cap
        self._choices: list = []  # remaining candidates per position

    def _grow(self, n: int) -> None:
        memo = self._memo
        while len(memo) < n:
            s = bytes(reversed(memo))
            cands = left_extensions(self.source, s, self.cap)
            while not cands:
                if not self._choices:
                    raise Undecided("left-infinite limit: no factor extends leftward")
                cands = self._choices.pop()
                memo.pop()
            memo.append(cands[0])
            self._choices.append(cands[1:])


def left_limit(t: RightInfiniteWord, cap: int = WINDOW_CAP) -> LeftInfiniteWord:
    """A left-infinite word all of whose factors are recurrent factors of ``t``."""
    if not t.uniformly_recurrent:
        raise WordError("left_limit needs a uniformly recurrent word")
    return LeftInfiniteWord(_LeftLimitMirror(t, cap))
