"""Transition words: given ``u`` and ``v``, find ``w`` with ``u w v`` power-free.

Both ends are first normalized so that one letter ``x`` recurs in an infinite
power-free extension of each.  Splicing against a base word ``t`` that avoids
``x`` gives a right-infinite ``u~ x t`` starting with ``u`` and a left-infinite
``tbar x v~`` ending with ``v``, where every factor of ``tbar`` recurs in
``t``.  The result is ``u~ x h p x v~`` with ``p`` a long suffix of ``tbar``
and ``h p`` the shortest prefix of ``t`` that ends in ``p`` with ``|h| > |p|``.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field, fields
from typing import Optional, Sequence

from . import generators
from .extendability import (
    DFS_BUDGET,
    PIVOT_WINDOW,
    PROBE_DEPTH,
    STREAM_SLACK,
    NotExtendable,
    StructuredInfiniteWord,
    force_recurrent_letter,
)
from .gamma import OMEGA_CAP, GammaWitness, build_gamma, build_gamma_reversed
from .generators import LeftInfiniteWord, RightInfiniteWord, base_word_avoiding, left_limit
from .repetition import is_power_free, violating_suffix_period
from .words import (
    PowerBound,
    Undecided,
    Word,
    WordError,
    decode,
    encode,
    make_word,
    require_upsilon,
    reverse,
)


class StageError(RuntimeError):
    """A pipeline stage failed; ``stage`` names it."""

    def __init__(self, stage: str, cause: Exception):
        super().__init__(f"{stage}: {cause}")
        self.stage = stage
        self.cause = cause


class InternalError(RuntimeError):
    """A constructed word failed its final verification."""


@dataclass(frozen=True)
class Config:
    probe_depth: int = PROBE_DEPTH
    stream_slack: int = STREAM_SLACK
    pivot_window: int = PIVOT_WINDOW
    search_budget: int = DFS_BUDGET
    window_cap: int = generators.WINDOW_CAP
    stream_window_start: int = 32
    stream_window_cap: int = 1 << 16
    omega_cap: int = OMEGA_CAP
    letter: Optional[int] = None  # the shared letter x; default is the largest


@dataclass
class Sides:
    u_tilde: Word
    v_tilde: Word
    x: int
    t: RightInfiniteWord
    tbar: LeftInfiniteWord
    right: GammaWitness
    left: GammaWitness  # reversed coordinates


@dataclass
class TransitionCertificate:
    k: int
    bound: PowerBound
    u: Word
    v: Word
    w: Word
    full_word: Word
    x: int
    u_tilde: Word
    v_tilde: Word
    h: Word
    p: Word
    g_right: Word
    g_left: Word
    checks: dict = field(default_factory=dict)
    config: Config = field(default_factory=Config)

    @property
    def verified(self) -> bool:
        return bool(self.checks) and all(self.checks.values())

    def to_text(self) -> str:
        lines = [f"k: {self.k}", f"alpha: {self.bound}"]
        for key in ("u", "v", "w", "full_word"):
            lines.append(f"{key}: {encode(getattr(self, key))}")
        lines.append(f"x: {encode((self.x,))}")
        for key in ("u_tilde", "v_tilde", "h", "p", "g_right", "g_left"):
            lines.append(f"{key}: {encode(getattr(self, key))}")
        for key, val in asdict(self.config).items():
            lines.append(f"config.{key}: {'none' if val is None else val}")
        for key, ok in self.checks.items():
            lines.append(f"check.{key}: {'true' if ok else 'false'}")
        lines.append(f"verified: {'true' if self.verified else 'false'}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "TransitionCertificate":
        kv = {}
        for line in text.splitlines():
            if not line.strip():
                continue
            key, _, val = line.partition(":")
            kv[key.strip()] = val.strip()
        k = int(kv["k"])
        conf = {}
        for f in fields(Config):
            raw = kv.get(f"config.{f.name}")
            if raw is not None:
                conf[f.name] = None if raw == "none" else int(raw)
        words = {key: decode(kv[key], k) for key in
                 ("u", "v", "w", "full_word", "u_tilde", "v_tilde", "h", "p", "g_right", "g_left")}
        checks = {key[6:]: val == "true" for key, val in kv.items() if key.startswith("check.")}
        return cls(k=k, bound=PowerBound.parse(kv["alpha"]), x=decode(kv["x"], k)[0],
                   checks=checks, config=Config(**conf), **words)


def choose_p(tbar: LeftInfiniteWord, lengths: Sequence[int]) -> Word:
    """Shortest suffix of ``tbar`` longer than every entry of ``lengths``."""
    return tbar.suffix(max(lengths) + 1)


def choose_h(t: RightInfiniteWord, p: Sequence[int], cap: int = generators.WINDOW_CAP) -> Word:
    """Shortest prefix ``h`` of ``t`` with ``h p`` a prefix of ``t`` and ``|h| > |p|``."""
    pb = bytes(p)
    n = max(generators.WINDOW_START, 8 * (len(pb) + 1))
    while n <= cap:
        j = t.prefix_bytes(n).find(pb, len(pb) + 1)
        if j != -1:
            return t.prefix(j)
        n *= 2
    raise Undecided(f"no occurrence of p beyond position {len(pb)} below {cap}")


class TransitionBuilder:
    """Runs the construction for one ``(k, bound)``, caching per-side work.

    The right side depends only on ``u`` and the left side only on ``v``, so
    a builder reused across many pairs does each side once.
    """

    def __init__(self, k: int, bound: PowerBound, config: Config = Config()):
        require_upsilon(k, bound)
        self.k = k
        self.bound = bound
        self.config = config
        self.x = config.letter if config.letter is not None else k - 1
        if not 0 <= self.x < k:
            raise WordError(f"letter {self.x} outside alphabet of size {k}")
        self.t = base_word_avoiding(k, bound, avoid=self.x)
        self.tbar = left_limit(self.t, config.window_cap)
        self._right: dict = {}
        self._left: dict = {}

    def _normalize(self, w: Word) -> StructuredInfiniteWord:
        c = self.config
        return force_recurrent_letter(
            w, self.x, self.k, self.bound, probe_depth=c.probe_depth, slack=c.stream_slack,
            pivot_window=c.pivot_window, window_start=c.stream_window_start,
            window_cap=c.stream_window_cap, budget=c.search_budget,
        )

    def right_side(self, u: Sequence[int]) -> GammaWitness:
        u = make_word(u, self.k)
        if u not in self._right:
            try:
                ubar = self._normalize(u)
                wit = build_gamma(u, ubar, self.x, self.t, self.k, self.bound,
                                  self.config.omega_cap, self.config.window_cap)
                wit.diagnostics["normalization"] = ubar.gamma
                self._right[u] = wit
            except NotExtendable as exc:
                raise NotExtendable(f"u is not right-extendable: {exc}") from exc
            except (WordError, Undecided) as exc:
                raise StageError("right side", exc) from exc
        return self._right[u]

    def left_side(self, v: Sequence[int]) -> GammaWitness:
        v = make_word(v, self.k)
        if v not in self._left:
            try:
                ubar = self._normalize(reverse(v))
                wit = build_gamma_reversed(v, LeftInfiniteWord(ubar), self.x, self.tbar, self.k,
                                           self.bound, self.config.omega_cap, self.config.window_cap)
                wit.diagnostics["normalization"] = ubar.gamma
                self._left[v] = wit
            except NotExtendable as exc:
                raise NotExtendable(f"v is not left-extendable: {exc}") from exc
            except (WordError, Undecided) as exc:
                raise StageError("left side", exc) from exc
        return self._left[v]

    def assemble_sides(self, u: Sequence[int], v: Sequence[int]) -> Sides:
        right = self.right_side(u)
        left = self.left_side(v)
        return Sides(
            u_tilde=right.w1 + right.w2,
            v_tilde=reverse(left.w1 + left.w2),
            x=self.x, t=self.t, tbar=self.tbar, right=right, left=left,
        )

    def build(self, u: Sequence[int], v: Sequence[int]) -> TransitionCertificate:
        u = make_word(u, self.k)
        v = make_word(v, self.k)
        for name, w in (("u", u), ("v", v)):
            if not is_power_free(w, self.bound):
                raise WordError(f"{name} is not {self.bound}-power-free")
        sides = self.assemble_sides(u, v)
        x = sides.x
        ux = sides.u_tilde + (x,)
        xv = (x,) + sides.v_tilde
        try:
            p = choose_p(self.tbar, (len(ux), len(xv), len(u), len(v)))
            h = choose_h(self.t, p, self.config.window_cap)
        except Undecided as exc:
            raise StageError("middle block", exc) from exc
        full = ux + h + p + xv
        if len(full) < len(u) + len(v):
            raise InternalError("assembled word shorter than |u| + |v|")
        w = full[len(u) : len(full) - len(v)]
        checks = {
            "power_free": is_power_free(full, self.bound),
            "u_prefix": full[: len(u)] == u,
            "v_suffix": full[len(full) - len(v) :] == v,
            "p_long": len(p) > max(len(ux), len(xv), len(u), len(v)),
            "h_longer_than_p": len(h) > len(p),
            "hp_avoids_x": x not in h + p,
            "concatenation": u + w + v == full,
        }
        cert = TransitionCertificate(
            k=self.k, bound=self.bound, u=u, v=v, w=w, full_word=full, x=x,
            u_tilde=sides.u_tilde, v_tilde=sides.v_tilde, h=h, p=p,
            g_right=sides.right.g, g_left=reverse(sides.left.g),
            checks=checks, config=self.config,
        )
        if not cert.verified:
            failed = [key for key, ok in checks.items() if not ok]
            raise InternalError(f"certificate checks failed: {failed}")
        return cert


def assemble_sides(u, v, k: int, bound: PowerBound, config: Config = Config()) -> Sides:
    return TransitionBuilder(k, bound, config).assemble_sides(u, v)


def build_transition(u, v, k: int, bound: PowerBound, config: Config = Config()) -> TransitionCertificate:
    return TransitionBuilder(k, bound, config).build(u, v)


def minimal_transition_oracle(
    u: Sequence[int], v: Sequence[int], k: int, bound: PowerBound, max_len: int
) -> Optional[Word]:
    """Shortest, then lexicographically first, ``w`` with ``u w v`` power-free."""
    u = make_word(u, k)
    v = make_word(v, k)
    if not is_power_free(u, bound):
        return None

    def closes(buf: bytearray) -> bool:
        ext = bytearray(buf)
        for a in v:
            ext.append(a)
            if violating_suffix_period(ext, bound) is not None:
                return False
        return True

    for length in range(max_len + 1):
        buf = bytearray(u)
        base = len(buf)
        nxt = [0]
        while nxt:
            if len(buf) - base == length:
                if closes(buf):
                    return tuple(buf[base:])
                nxt.pop()
                if not nxt:
                    break
                buf.pop()
                continue
            a = nxt[-1]
            if a >= k:
                nxt.pop()
                if nxt:
                    buf.pop()
                continue
            nxt[-1] = a + 1
            buf.append(a)
            if violating_suffix_period(buf, bound) is None:
                nxt.append(0)
            else:
                buf.pop()
    return None
