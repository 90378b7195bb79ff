"""Finite-depth stand-ins for left/right extendability.

Whether a power-free word extends forever is not decidable by search, so
every answer here is tied to a depth: a word is either extendable to the
requested depth (with the extension as witness), provably stuck before it,
or the search budget ran out.
"""

from __future__ import annotations

import enum
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional, Sequence

from .generators import CompositeWord, RightInfiniteWord, base_word_avoiding
from .repetition import is_power_free, violating_suffix_period
from .words import (
    PowerBound,
    ResourceLimit,
    Undecided,
    Word,
    WordError,
    check_alphabet,
    make_word,
    require_upsilon,
    reverse,
)

ENUMERATE_CAP = 40
PROBE_DEPTH = 64
DFS_BUDGET = 2_000_000
STREAM_SLACK = 32
PIVOT_WINDOW = 256


class NotExtendable(ValueError):
    """The word has no power-free extension of the probed depth."""


class Status(str, enum.Enum):
    EXTENDABLE = "extendable-to-depth"
    NOT_EXTENDABLE = "not-extendable"
    UNDECIDED = "undecided"


@dataclass(frozen=True)
class ExtendVerdict:
    status: Status
    depth: int
    witness: Optional[Word] = None  # the extension letters only


def _dfs(start: bytes, k: int, bound: PowerBound, depth: int, budget: int):
    """Lexicographically first power-free extension of ``start`` by ``depth`` letters.

    Returns the extension, ``None`` when the search space is exhausted, and
    raises ``Undecided`` when more than ``budget`` nodes were visited.
    """
    buf = bytearray(start)
    base = len(buf)
    nxt = [0]
    nodes = 0
    while True:
        level = len(buf) - base
        if level == depth:
            return tuple(buf[base:])
        a = nxt[-1]
        if a >= k:
            nxt.pop()
            if not nxt:
                return None
            buf.pop()
            continue
        nxt[-1] = a + 1
        nodes += 1
        if nodes > budget:
            raise Undecided(f"extension search exceeded {budget} nodes")
        buf.append(a)
        if violating_suffix_period(buf, bound) is None:
            nxt.append(0)
        else:
            buf.pop()


def _enumerate_from(first: int, k: int, bound: PowerBound, n: int) -> list:
    out = []
    buf = bytearray([first])
    if violating_suffix_period(buf, bound) is not None:
        return out
    nxt = [0]
    while nxt:
        if len(buf) == n:
            out.append(tuple(buf))
            nxt.pop()
            buf.pop()
            continue
        a = nxt[-1]
        if a >= k:
            nxt.pop()
            buf.pop()
            continue
        nxt[-1] = a + 1
        buf.append(a)
        if violating_suffix_period(buf, bound) is None:
            nxt.append(0)
        else:
            buf.pop()
    return out


def enumerate_words(
    k: int, bound: PowerBound, n: int, cap: int = ENUMERATE_CAP, jobs: int = 1
) -> list:
    """All power-free words of length ``n`` over ``k`` letters, sorted."""
    check_alphabet(k)
    if n > cap:
        raise ResourceLimit(f"enumeration length {n} exceeds cap {cap}")
    if n < 0:
        raise WordError("length must be nonnegative")
    if n == 0:
        return [()]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = pool.map(_enumerate_from, range(k), [k] * k, [bound] * k, [n] * k)
            return [w for part in parts for w in part]
    return [w for a in range(k) for w in _enumerate_from(a, k, bound, n)]


def right_extendable(
    w: Sequence[int], k: int, bound: PowerBound, depth: int = PROBE_DEPTH, budget: int = DFS_BUDGET
) -> ExtendVerdict:
    w = make_word(w, k)
    if not is_power_free(w, bound):
        raise WordError("right_extendable needs a power-free word")
    try:
        ext = _dfs(bytes(w), k, bound, depth, budget)
    except Undecided:
        return ExtendVerdict(Status.UNDECIDED, depth)
    if ext is None:
        return ExtendVerdict(Status.NOT_EXTENDABLE, depth)
    return ExtendVerdict(Status.EXTENDABLE, depth, ext)


def left_extendable(
    w: Sequence[int], k: int, bound: PowerBound, depth: int = PROBE_DEPTH, budget: int = DFS_BUDGET
) -> ExtendVerdict:
    v = right_extendable(reverse(w), k, bound, depth, budget)
    if v.witness is None:
        return v
    return ExtendVerdict(v.status, v.depth, reverse(v.witness))


class ExtensionStream(RightInfiniteWord):
    """A power-free right-infinite continuation of ``u`` found by search.

    Letters are committed only once a further ``slack`` letters of verified
    continuation exist behind them; backtracking into committed letters is
    reported as ``Undecided``.
    """

    def __init__(self, u: Word, k: int, bound: PowerBound, slack: int = STREAM_SLACK,
                 budget: int = DFS_BUDGET):
        super().__init__(range(k), uniformly_recurrent=False)
        self.u = u
        self.k = k
        self.bound = bound
        self.slack = slack
        self.budget = budget
        self._buf = bytearray(u)
        self._next = [0]  # next candidate letter per open search level
        self._memo.extend(u)

    def _grow(self, n: int) -> None:
        buf, nxt, k = self._buf, self._next, self.k
        frozen = len(self._memo)
        target = n + self.slack
        nodes = 0
        while len(buf) < target:
            a = nxt[-1]
            if a >= k:
                nxt.pop()
                if not nxt or len(buf) <= frozen:
                    raise Undecided(f"extension search backtracked into committed letter {len(buf) - 1}")
                buf.pop()
                continue
            nxt[-1] = a + 1
            nodes += 1
            if nodes > self.budget:
                raise Undecided(f"extension search exceeded {self.budget} nodes")
            buf.append(a)
            if violating_suffix_period(buf, self.bound) is None:
                nxt.append(0)
            else:
                buf.pop()
        self._memo.extend(buf[frozen:n])


def extension_stream(
    u: Sequence[int], k: int, bound: PowerBound, slack: int = STREAM_SLACK,
    probe_depth: int = PROBE_DEPTH, budget: int = DFS_BUDGET,
) -> ExtensionStream:
    u = make_word(u, k)
    verdict = right_extendable(u, k, bound, probe_depth, budget)
    if verdict.status is Status.NOT_EXTENDABLE:
        raise NotExtendable(f"no power-free extension of depth {probe_depth}")
    return ExtensionStream(u, k, bound, slack, budget)


class StructuredInfiniteWord(CompositeWord):
    """``head + (pivot,) + tail`` with ``pivot`` absent from the tail.

    The tail is uniformly recurrent, so the recurrent factors of the whole
    word are exactly the factors of the tail.
    """

    def __init__(self, head: Sequence[int], pivot: int, tail: RightInfiniteWord, gamma=None):
        if not tail.uniformly_recurrent:
            raise WordError("structured word needs a uniformly recurrent tail")
        if pivot in tail.alphabet:
            raise WordError("pivot letter occurs in the tail")
        head = tuple(head)
        super().__init__(head + (pivot,), tail)
        self.head = head
        self.pivot = pivot
        self.gamma = gamma  # the witness the head was built from, if any


def choose_pivot(window: Sequence[int], x: int) -> int:
    """Most frequent letter of ``window``, ties to the smallest, avoiding ``x`` if possible."""
    counts = Counter(window)
    ranked = sorted(counts, key=lambda a: (-counts[a], a))
    others = [a for a in ranked if a != x]
    if not others:
        raise Undecided("probe window shows no letter other than the target")
    return others[0]


def force_recurrent_letter(
    u: Sequence[int], x: int, k: int, bound: PowerBound, *,
    probe_depth: int = PROBE_DEPTH, slack: int = STREAM_SLACK,
    pivot_window: int = PIVOT_WINDOW, window_start: int = 32,
    window_cap: int = 1 << 16, budget: int = DFS_BUDGET,
) -> StructuredInfiniteWord:
    """A power-free right-infinite word starting with ``u`` in which ``x`` recurs.

    A pivot ``y`` frequent in a search continuation of ``u`` is spliced onto
    a base word avoiding ``y`` that contains ``x``.
    """
    from .gamma import build_gamma_windowed

    require_upsilon(k, bound)
    if not 0 <= x < k:
        raise WordError(f"letter {x} outside alphabet of size {k}")
    u = make_word(u, k)
    stream = extension_stream(u, k, bound, slack, probe_depth, budget)
    y = choose_pivot(stream.prefix(pivot_window), x)
    tail = base_word_avoiding(k, bound, avoid=y, must_contain=x)
    wit = build_gamma_windowed(u, stream, y, tail, k, bound, window_start, window_cap)
    return StructuredInfiniteWord(wit.w1 + wit.w2, y, tail, gamma=wit)
