"""Compare two closed forms for the eigenvalues of [[2, -b], [-b, 2c]]
against Jacobi on the admissible (b, c) grid, and show the h(x^k) scaling."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from specdist.gramform import quadratic_power_gram
from specdist.linalg import jacobi_eigenvalues
from specdist.verify import quadratic_typo_rows


@dataclass
class Config:
    tol: float = 1e-10
    k_values: tuple[int, ...] = (1, 2, 3, 4)
    b: int = 1
    c: int = 1


def main(cfg: Config = Config()) -> None:
    rows = list(quadratic_typo_rows())
    fixed = np.array([r[5] for r in rows])
    printed = np.array([r[6] for r in rows])
    print(f"grid points: {len(rows)}")
    print(f"1+c +/- sqrt(b^2+(c-1)^2):  max err {fixed.max():.2e}, "
          f"{int((fixed <= cfg.tol).sum())} within {cfg.tol:g}")
    print(f"1+c +/- sqrt(b^2+c^2+2c+1): max err {printed.max():.2e}, "
          f"min err {printed.min():.2e}, {int((printed <= cfg.tol).sum())} within {cfg.tol:g}")

    print(f"\nh = x^2 + {cfg.b}x + {cfg.c}: spectrum of the h(x^k) Gram matrix")
    for k in cfg.k_values:
        spec = jacobi_eigenvalues(quadratic_power_gram(cfg.b, cfg.c, k)).eigenvalues
        print(f"  k={k}: " + " ".join(f"{x:.6f}" for x in spec))


if __name__ == "__main__":
    main()
