"""Tabulate SD(Phi_n) against both upper bounds over a conductor range.

    python3 scripts/sweep_table.py --lo 3 --hi 120 --jobs 4 --csv out.csv
"""
from __future__ import annotations

import argparse
from dataclasses import dataclass

from specdist.sweep import sweep, to_csv


@dataclass
class SweepConfig:
    lo: int = 3
    hi: int = 100
    jobs: int = 1
    csv: str | None = None


def parse() -> SweepConfig:
    cfg = SweepConfig()
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, val in vars(cfg).items():
        p.add_argument(f"--{name}", type=type(val) if val is not None else str, default=val)
    return SweepConfig(**vars(p.parse_args()))


def main(cfg: SweepConfig) -> None:
    rows = sweep(range(cfg.lo, cfg.hi + 1), jobs=cfg.jobs)
    print(f"{'n':>4} {'phi':>4} {'rad':>4} {'sd':>10} {'hong-pan':>12} {'yu-gu':>12} {'hp/sd':>8}")
    for r in rows:
        print(f"{r.n:4d} {r.phi_n:4d} {r.rad_n:4d} {r.sd:10.6f} {r.hong_pan_bound:12.6g} "
              f"{r.yu_gu_bound:12.6g} {r.hong_pan_bound / r.sd:8.3g}")
    worst = max(rows, key=lambda r: r.sd)
    print(f"\nlargest sd in range: n={worst.n} sd={worst.sd:.6f}")
    if cfg.csv:
        with open(cfg.csv, "w", encoding="utf-8") as fh:
            fh.write(to_csv(rows))


if __name__ == "__main__":
    main(parse())
