"""Splice witnesses: tuples ``(w1, w2, x, g, t)`` that make ``w1 w2 x t`` power-free.

``t`` is a power-free right-infinite word without the letter ``x``.  The
witness conditions are all finite except power-freeness of ``t`` and absence
of ``x`` from it; those come from the generator's declared alphabet and a
window check.

The construction locates the longest prefix ``x g`` of ``x t`` that recurs in
a given infinite word, pushes every non-recurrent occurrence of ``x g y``
into ``w1``, and stops ``w2`` at the first later occurrence of ``x g`` after
``x`` has been seen more often than in ``w1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .extendability import StructuredInfiniteWord
from .generators import (
    WINDOW_CAP,
    CompositeWord,
    LeftInfiniteWord,
    RightInfiniteWord,
    factor_in,
)
from .repetition import is_power_free
from .words import PowerBound, Undecided, Word, WordError, make_word, occur, reverse

CHECK_WINDOW = 512
OMEGA_CAP = 1024

PROPERTY_NAMES = (
    "words over the alphabet",
    "x is a letter",
    "w1 w2 x g power-free",
    "t power-free",
    "t avoids x",
    "g prefix of t",
    "x g y occurs once in w2 x g y",
    "occur(w2, x) >= occur(w1, x)",
)


@dataclass(frozen=True)
class GammaReport:
    properties: tuple  # eight booleans, in PROPERTY_NAMES order
    strict_count: bool  # occur(w2, x) > occur(w1, x)
    y: Optional[int] = None

    @property
    def valid(self) -> bool:
        return all(self.properties)

    def lines(self) -> list:
        return [
            f"property {i}: {'true' if ok else 'false'}  # {name}"
            for i, (ok, name) in enumerate(zip(self.properties, PROPERTY_NAMES), 1)
        ]


@dataclass
class GammaWitness:
    w1: Word
    w2: Word
    x: int
    g: Word
    t: RightInfiniteWord
    report: Optional[GammaReport] = None
    diagnostics: dict = field(default_factory=dict)

    @property
    def finite_part(self) -> Word:
        return self.w1 + self.w2 + (self.x,) + self.g

    def left_form(self) -> dict:
        """Components read right to left, for witnesses built on reversed words."""
        return {"w1": reverse(self.w1), "w2": reverse(self.w2), "g": reverse(self.g)}


def check_gamma(
    w: GammaWitness, k: int, bound: PowerBound, window: int = CHECK_WINDOW
) -> GammaReport:
    t = w.t
    p1 = all(0 <= a < k for a in w.w1 + w.w2 + w.g)
    p2 = 0 <= w.x < k
    p3 = p1 and p2 and is_power_free(w.finite_part, bound)
    horizon = len(w.finite_part) + window
    probe = t.prefix(horizon)
    p4 = t.alphabet <= set(range(k)) and is_power_free(probe, bound)
    if w.x not in t.alphabet:
        p5 = True
    elif w.x in probe:
        p5 = False
    else:
        raise Undecided("t declares x in its alphabet but the window shows none")
    p6 = probe[: len(w.g)] == w.g
    y = probe[len(w.g)]
    xgy = (w.x,) + w.g + (y,)
    p7 = occur(w.w2 + xgy, xgy) == 1
    n1, n2 = w.w1.count(w.x), w.w2.count(w.x)
    report = GammaReport((p1, p2, p3, p4, p5, p6, p7, n2 >= n1), n2 > n1, y)
    w.report = report
    return report


def splice(w: GammaWitness, k: int, bound: PowerBound) -> CompositeWord:
    """``w1 w2 x t`` as a lazy word; rejects witnesses that fail any property."""
    report = check_gamma(w, k, bound)
    if not report.valid:
        bad = [i for i, ok in enumerate(report.properties, 1) if not ok]
        raise WordError(f"invalid splice witness: properties {bad} fail")
    return CompositeWord(w.w1 + w.w2 + (w.x,), w.t)


class _StructuredView:
    """Exact recurrence for ``head + pivot + tail`` words."""

    def __init__(self, ubar: StructuredInfiniteWord, cap: int):
        self.word = ubar
        self.cap = cap
        self.lead = len(ubar.lead)

    def prefix(self, n: int) -> Word:
        return self.word.prefix(n)

    def is_recurrent(self, f: Word) -> bool:
        return factor_in(self.word.tail, f, self.cap)

    def is_factor(self, f: Word) -> bool:
        if bytes(f) in self.word.prefix_bytes(self.lead + len(f)):
            return True
        return self.is_recurrent(f)

    def occurrence_region(self, f: Word) -> bytes:
        # non-recurrent occurrences cannot start inside the tail
        return self.word.prefix_bytes(self.lead - 1 + len(f))

    def find(self, f: Word, start: int, pred) -> int:
        fb = bytes(f)
        n = max(1024, 4 * (start + len(f)))
        while n <= self.cap:
            buf = self.word.prefix_bytes(n)
            j = buf.find(fb, start)
            while j != -1:
                if pred(buf, j):
                    return j
                j = buf.find(fb, j + 1)
            n *= 2
        raise Undecided(f"no suitable occurrence of a length-{len(f)} factor below {self.cap}")


class _WindowView:
    """Recurrence estimated on a finite prefix: a factor counts as recurrent
    when it occurs in the second half of the window."""

    def __init__(self, word: RightInfiniteWord, n: int):
        self.buf = word.prefix_bytes(n)
        self.late = self.buf[n // 2 :]

    def prefix(self, n: int) -> Word:
        return tuple(self.buf[:n])

    def is_recurrent(self, f: Word) -> bool:
        return bytes(f) in self.late

    def is_factor(self, f: Word) -> bool:
        return bytes(f) in self.buf

    def occurrence_region(self, f: Word) -> bytes:
        return self.buf

    def find(self, f: Word, start: int, pred) -> int:
        fb = bytes(f)
        j = self.buf.find(fb, start)
        while j != -1:
            if pred(self.buf, j):
                return j
            j = self.buf.find(fb, j + 1)
        raise Undecided("window too short for the second splice block")


def _construct(target: Word, view, x: int, t: RightInfiniteWord, omega_cap: int) -> GammaWitness:
    def xt(m: int) -> Word:
        return (x,) + t.prefix(m - 1)

    if not view.is_recurrent((x,)):
        raise WordError(f"letter {x} is not recurrent in the extended word")
    diag = {}
    finite_at = None
    length = 1
    while length <= omega_cap:
        if not view.is_factor(xt(length)):
            finite_at = length
            break
        length *= 2
    diag["omega_probe"] = finite_at if finite_at is not None else f">{omega_cap}"

    if finite_at is None:
        # every probed prefix of x t occurs: take g as long as the target
        diag["branch"] = "infinite"
        g = t.prefix(len(target))
        xg = (x,) + g
        j = view.find(xg, 0, lambda buf, j: True)
        w1, w2 = (), view.prefix(j)
    else:
        diag["branch"] = "finite"
        m = 1
        while m + 1 < finite_at and view.is_recurrent(xt(m + 1)):
            m += 1
        g = t.prefix(m - 1)
        xg = (x,) + g
        xgy = xt(m + 1)
        region = view.occurrence_region(xgy)
        fb = bytes(xgy)
        end = 0
        j = region.find(fb)
        while j != -1:
            end = j + len(fb)
            j = region.find(fb, j + 1)
        w1 = tuple(region[:end])
        n1 = w1.count(x)
        lo = len(w1)
        need_end = len(target)

        def ok(buf, j):
            return j + len(xg) >= need_end and buf.count(bytes([x]), lo, j) > n1

        j = view.find(xg, lo, ok)
        w2 = view.prefix(j)[lo:]
        diag["recurrent_prefix_length"] = m
    return GammaWitness(w1, w2, x, g, t, diagnostics=diag)


def build_gamma(
    target_prefix: Sequence[int], ubar: StructuredInfiniteWord, x: int, t: RightInfiniteWord,
    k: int, bound: PowerBound, omega_cap: int = OMEGA_CAP, window_cap: int = WINDOW_CAP,
) -> GammaWitness:
    """Witness ``(w1, w2, x, g, t)`` with ``target_prefix`` a prefix of ``w1 w2 x g``."""
    target = make_word(target_prefix, k)
    if not isinstance(ubar, StructuredInfiniteWord):
        raise WordError("build_gamma needs a head+pivot+tail word; use build_gamma_windowed for streams")
    if x in t.alphabet:
        raise WordError(f"t contains the splice letter {x}")
    if ubar.prefix(len(target)) != target:
        raise WordError("target is not a prefix of the extended word")
    wit = _construct(target, _StructuredView(ubar, window_cap), x, t, omega_cap)
    return _validated(wit, target, k, bound)


def build_gamma_windowed(
    target_prefix: Sequence[int], stream: RightInfiniteWord, x: int, t: RightInfiniteWord,
    k: int, bound: PowerBound, window_start: int = 32, window_cap: int = 1 << 16,
    omega_cap: int = OMEGA_CAP,
) -> GammaWitness:
    """Like ``build_gamma`` for a word whose recurrent factors are unknown.

    Recurrence is estimated on growing prefixes of ``stream``; every
    candidate is validated, so a poor estimate only costs a larger window.
    """
    target = make_word(target_prefix, k)
    if x in t.alphabet:
        raise WordError(f"t contains the splice letter {x}")
    if stream.prefix(len(target)) != target:
        raise WordError("target is not a prefix of the stream")
    n = max(window_start, 8 * len(target))
    last = None
    while n <= window_cap:
        try:
            wit = _construct(target, _WindowView(stream, n), x, t, omega_cap)
            wit = _validated(wit, target, k, bound)
            wit.diagnostics["window"] = n
            return wit
        except (Undecided, WordError) as exc:
            last = exc
        n *= 2
    raise Undecided(f"no splice witness within a {window_cap}-letter window: {last}")


def _validated(wit: GammaWitness, target: Word, k: int, bound: PowerBound) -> GammaWitness:
    report = check_gamma(wit, k, bound)
    if not report.valid:
        bad = [i for i, ok in enumerate(report.properties, 1) if not ok]
        raise WordError(f"constructed witness fails properties {bad}")
    if wit.finite_part[: len(target)] != target:
        raise WordError("constructed witness does not cover the target")
    return wit


def build_gamma_reversed(
    target_suffix: Sequence[int], vbar: LeftInfiniteWord, x: int, tbar: LeftInfiniteWord,
    k: int, bound: PowerBound, omega_cap: int = OMEGA_CAP, window_cap: int = WINDOW_CAP,
) -> GammaWitness:
    """Mirror of ``build_gamma`` for left-infinite words.

    The witness is returned in reversed coordinates, i.e. it is valid for
    ``tbar.reversed()``.  With ``L = witness.left_form()`` the left-infinite
    word ``tbar x L["w2"] L["w1"]`` is power-free and ``L["g"] x L["w2"] L["w1"]``
    ends with ``target_suffix``.
    """
    return build_gamma(
        reverse(target_suffix), vbar.reversed(), x, tbar.reversed(), k, bound,
        omega_cap, window_cap,
    )
