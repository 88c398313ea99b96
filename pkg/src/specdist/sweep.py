"""Per-conductor sweep rows and their CSV / JSON serializations."""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import astuple, dataclass, fields

from .numtheory import euler_phi, radical
from .spectral import sd_cyclotomic

CSV_HEADER = "n,phi,rad,sd,sd_rad,lambda_min,lambda_max,abs_disc,hp_bound,yg_bound"


@dataclass(frozen=True)
class SweepRow:
    n: int
    phi_n: int
    rad_n: int
    sd: float
    sd_of_rad: float
    lambda_min: float
    lambda_max: float
    abs_disc: int
    hong_pan_bound: float
    yu_gu_bound: float


def sweep_row(n: int) -> SweepRow:
    rep = sd_cyclotomic(n)
    rad = radical(n)
    sd_rad = rep.sd if rad == n else sd_cyclotomic(rad, bounds=False).sd
    return SweepRow(n, euler_phi(n), rad, rep.sd, sd_rad, rep.lambda_min, rep.lambda_max,
                    rep.abs_disc, rep.hong_pan_bound, rep.yu_gu_bound)


def sweep(ns, jobs: int = 1) -> list[SweepRow]:
    """Rows for every conductor in ``ns``, in input order for any ``jobs``."""
    ns = list(ns)
    if jobs <= 1 or len(ns) <= 1:
        return [sweep_row(n) for n in ns]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(sweep_row, ns))


def _fmt(value) -> str:
    if isinstance(value, int):
        return str(value)
    return format(value, ".12g")


def to_csv(rows) -> str:
    lines = [CSV_HEADER]
    lines += [",".join(_fmt(v) for v in astuple(row)) for row in rows]
    return "\n".join(lines) + "\n"


def to_json(rows) -> str:
    # Hand-rolled so floats carry exactly the 12 significant digits the CSV has.
    names = [f.name for f in fields(SweepRow)]
    objs = []
    for row in rows:
        body = ", ".join(f'"{k}": {_fmt(v)}' for k, v in zip(names, astuple(row)))
        objs.append("  {" + body + "}")
    if not objs:
        return "[]\n"
    return "[\n" + ",\n".join(objs) + "\n]\n"
