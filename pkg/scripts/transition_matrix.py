"""Build transition words for every pair of short extendable words.

    python3 scripts/transition_matrix.py --max-len 3 --case 3:2+ --case 4:2
"""

import argparse
import statistics
import time

from transwords.extendability import Status, enumerate_words, left_extendable, right_extendable
from transwords.repetition import naive_is_power_free
from transwords.transition import TransitionBuilder
from transwords.words import PowerBound, encode


def run_case(k, bound, max_len, depth, naive):
    words = [w for n in range(max_len + 1) for w in enumerate_words(k, bound, n)]
    us = [w for w in words if right_extendable(w, k, bound, depth).status is Status.EXTENDABLE]
    vs = [w for w in words if left_extendable(w, k, bound, depth).status is Status.EXTENDABLE]
    builder = TransitionBuilder(k, bound)
    lengths, failures = [], []
    t0 = time.perf_counter()
    for u in us:
        for v in vs:
            try:
                cert = builder.build(u, v)
            except Exception as exc:
                failures.append(f"{encode(u)}|{encode(v)}: {exc}")
                continue
            if naive and not naive_is_power_free(cert.full_word, bound):
                failures.append(f"{encode(u)}|{encode(v)}: naive check failed")
            lengths.append(len(cert.w))
    secs = time.perf_counter() - t0
    print(f"k={k} bound={bound}: {len(lengths)}/{len(us) * len(vs)} pairs, "
          f"|w| min/median/max = {min(lengths)}/{statistics.median(lengths)}/{max(lengths)}, {secs:.1f}s")
    for line in failures[:10]:
        print("  failure", line)
    return not failures


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--case", action="append", default=[], help="K:BOUND, e.g. 3:5/2")
    ap.add_argument("--max-len", type=int, default=3)
    ap.add_argument("--depth", type=int, default=64)
    ap.add_argument("--naive", action="store_true", help="re-check each word with the cubic checker")
    args = ap.parse_args()
    cases = args.case or ["3:2+", "3:5/2", "4:2"]
    ok = True
    for case in cases:
        k, _, b = case.partition(":")
        ok &= run_case(int(k), PowerBound.parse(b), args.max_len, args.depth, args.naive)
    raise SystemExit(0 if ok else 1)


if __name__ == "__main__":
    main()
