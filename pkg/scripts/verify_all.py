"""Run every verification check over a conductor range with timing."""
from __future__ import annotations

import sys
import time
from dataclasses import dataclass

from specdist.verify import Tolerances, run_checks


@dataclass
class Config:
    lo: int = 1
    hi: int = 200


def main(cfg: Config) -> int:
    ok = True
    t0 = time.perf_counter()
    for res in run_checks(range(cfg.lo, cfg.hi + 1), Tolerances()):
        print(res.line())
        ok &= res.passed
    print(f"{'all passed' if ok else 'FAILED'} in {time.perf_counter() - t0:.1f}s")
    return 0 if ok else 1


if __name__ == "__main__":
    args = [int(a) for a in sys.argv[1:3]]
    sys.exit(main(Config(*args)))
