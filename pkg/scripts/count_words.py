"""Count power-free words by length, e.g. ``python3 scripts/count_words.py 3 7/4+ 30``."""

import sys
import time

from transwords.extendability import enumerate_words
from transwords.words import PowerBound


def main(argv):
    k, bound, top = int(argv[0]), PowerBound.parse(argv[1]), int(argv[2])
    for n in range(1, top + 1):
        t0 = time.perf_counter()
        count = len(enumerate_words(k, bound, n))
        print(f"{n:3d} {count:10d}  ({time.perf_counter() - t0:.2f}s)")
        if count == 0:
            break


if __name__ == "__main__":
    main(sys.argv[1:] or ["3", "2", "20"])
