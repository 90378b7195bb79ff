"""Fractional repetitions: exponents, power-freeness and boundary squares.

Two checkers live here.  The fast one walks each period ``p`` once and
measures maximal runs of ``w[i] == w[i + p]`` (longest common extensions of
the word with itself shifted by ``p``); a run of ``L`` matches is a factor of
length ``p + L`` with period ``p``.  The naive one looks at every start and
every period with direct slice comparison and shares no code with the fast
path, so the two can be cross-checked.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .words import PowerBound, Word, WordError

# below this length the pure-Python scan beats numpy call overhead
_NUMPY_MIN = 96


@dataclass(frozen=True)
class ExponentReport:
    max_exponent: Fraction
    witness_period: int
    witness_span: tuple  # (start, end), end exclusive

    def witness(self, w: Sequence[int]) -> Word:
        s, e = self.witness_span
        return tuple(w[s:e])


@dataclass(frozen=True)
class PiWitness:
    """A boundary square: ``r r`` is a suffix of ``u + v_prefix`` longer than ``v_prefix``."""

    r: Word
    v_prefix: Word


def violates(bound: PowerBound, beta) -> bool:
    beta = Fraction(beta)
    return beta > bound.alpha if bound.plus else beta >= bound.alpha


def min_violating_length(bound: PowerBound, period: int) -> int:
    """Shortest length of a factor with ``period`` whose exponent violates ``bound``."""
    a = bound.alpha * period
    if bound.plus:
        return math.floor(a) + 1
    return math.ceil(a)


def word_exponent(w: Sequence[int]) -> Fraction:
    """``|w|`` over the shortest period of ``w`` (via the KMP border array)."""
    w = tuple(w)
    n = len(w)
    if n == 0:
        raise WordError("exponent of the empty word is undefined")
    border = [0] * n
    k = 0
    for i in range(1, n):
        while k and w[i] != w[k]:
            k = border[k - 1]
        if w[i] == w[k]:
            k += 1
        border[i] = k
    return Fraction(n, n - border[-1])


def _as_array(w: Sequence[int]) -> np.ndarray:
    return np.asarray(w, dtype=np.int16)


def _longest_run(eq: np.ndarray) -> tuple:
    """(length, start) of the first longest run of True in ``eq``; (0, 0) if none."""
    if not eq.any():
        return 0, 0
    padded = np.concatenate(([0], eq.view(np.int8), [0]))
    d = np.diff(padded)
    starts = np.flatnonzero(d == 1)
    ends = np.flatnonzero(d == -1)
    lengths = ends - starts
    j = int(np.argmax(lengths))
    return int(lengths[j]), int(starts[j])


def _runs_py(w: tuple, p: int) -> tuple:
    best, best_start = 0, 0
    run = 0
    for i in range(len(w) - p):
        if w[i] == w[i + p]:
            run += 1
            if run > best:
                best, best_start = run, i - run + 1
        else:
            run = 0
    return best, best_start


def max_factor_exponent(w: Sequence[int]) -> ExponentReport:
    """Largest exponent over all nonempty factors, with the attaining factor.

    Ties go to the smallest start, then the smallest period.
    """
    w = tuple(w)
    n = len(w)
    if n == 0:
        raise WordError("empty word has no nonempty factors")
    arr = _as_array(w) if n >= _NUMPY_MIN else None
    best = (Fraction(1), 0, 1, 0)  # (exponent, start, period, run)
    for p in range(1, n):
        if Fraction(n, p) < best[0]:
            break
        if arr is not None:
            run, start = _longest_run(arr[p:] == arr[:-p])
        else:
            run, start = _runs_py(w, p)
        e = Fraction(p + run, p)
        if e > best[0] or (e == best[0] and start < best[1]):
            best = (e, start, p, run)
    e, s, p, run = best
    return ExponentReport(e, p, (s, s + p + run))


def is_power_free(w: Sequence[int], bound: PowerBound) -> bool:
    w = tuple(w)
    n = len(w)
    if n == 0:
        return True
    arr = _as_array(w) if n >= _NUMPY_MIN else None
    for p in range(1, n + 1):
        need = min_violating_length(bound, p)
        if need > n:
            break
        run_needed = need - p
        if run_needed <= 0:
            return False
        if arr is not None:
            eq = arr[p:] == arr[:-p]
            if run_needed == 1:
                if eq.any():
                    return False
                continue
            # a run of length >= run_needed exists iff some window sum hits it
            c = np.concatenate(([0], np.cumsum(eq, dtype=np.int32)))
            if (c[run_needed:] - c[:-run_needed]).max(initial=0) >= run_needed:
                return False
        else:
            run = 0
            for i in range(n - p):
                if w[i] == w[i + p]:
                    run += 1
                    if run >= run_needed:
                        return False
                else:
                    run = 0
    return True


def violating_suffix_period(w, bound: PowerBound) -> Optional[int]:
    """A period ``p`` such that some suffix of ``w`` with period ``p`` violates ``bound``.

    Only suffixes are examined, which is all that changes when a letter is
    appended to a power-free word.  ``w`` may be bytes, bytearray or a
    sequence of letters.
    """
    b = w if isinstance(w, (bytes, bytearray)) else bytes(w)
    n = len(b)
    if n == 0:
        return None
    if min_violating_length(bound, 1) <= 1:
        return 1
    last = b[-1]
    j = b.rfind(last, 0, n - 1)
    while j != -1:
        p = n - 1 - j
        need = min_violating_length(bound, p)
        if need > n:
            return None
        if b[n - need : n - p] == b[n - need + p :]:
            return p
        j = b.rfind(last, 0, j)
    return None


def naive_max_exponent(w: Sequence[int]) -> Fraction:
    """Reference maximum exponent: every factor, shortest period by brute force."""
    w = tuple(w)
    n = len(w)
    if n == 0:
        raise WordError("empty word has no nonempty factors")
    best = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n + 1):
            length = j - i
            for p in range(1, length + 1):
                if all(w[q] == w[q + p] for q in range(i, j - p)):
                    break
            e = Fraction(length, p)
            if e > best:
                best = e
    return best


def naive_is_power_free(w: Sequence[int], bound: PowerBound) -> bool:
    """Reference checker: for every start and period, compare the shortest
    violating factor with its own shift directly."""
    b = bytes(w)
    n = len(b)
    for p in range(1, n + 1):
        need = min_violating_length(bound, p)
        if need > n:
            break
        for i in range(n - need + 1):
            if b[i : i + need - p] == b[i + p : i + need]:
                return False
    return True


def find_pi_witness(u: Sequence[int], v: Sequence[int]) -> Optional[PiWitness]:
    """First boundary square of ``u`` against prefixes of ``v``.

    Searches prefixes of ``v`` shortest first, then squares ``rr`` with the
    shortest ``r``.  ``None`` means ``u v`` is power-free for every bound
    with ``alpha >= 2`` whenever ``u`` and ``v`` are.
    """
    u = tuple(u)
    v = tuple(v)
    for m in range(1, len(v) + 1):
        s = u + v[:m]
        total = len(s)
        for half in range(m // 2 + 1, total // 2 + 1):
            if s[total - 2 * half : total - half] == s[total - half :]:
                return PiWitness(s[total - half :], v[:m])
    return None


def assert_concat_safe(u: Sequence[int], v: Sequence[int], bound: PowerBound) -> bool:
    """Whether ``u v`` is power-free, short-circuiting on an empty boundary-square set."""
    if find_pi_witness(u, v) is None:
        return True
    return is_power_free(tuple(u) + tuple(v), bound)
