"""Indicator tables over a grid of input overlaps, serialized as CSV or JSON."""
from __future__ import annotations

import csv
import io
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import astuple, dataclass, field, fields

from .copiers import CopierFamily, make_copier
from .exceptions import DomainError
from .infomeasures import binary_info_from_q, holevo_two_state, i1_baseline, ih_baseline

BASELINE_TAG = "input"
FIELDS = ("f", "copier", "i1", "i1_ratio", "ih", "f_local", "q", "r", "q_h")
DIGITS = 12


@dataclass(frozen=True)
class SweepRecord:
    f: float
    copier: str
    i1: float
    i1_ratio: float
    ih: float
    f_local: float
    q: float
    r: float
    q_h: float

    def as_dict(self) -> dict:
        return {k.name: getattr(self, k.name) for k in fields(self)}


@dataclass(frozen=True)
class SweepConfig:
    f_min: float = 0.0
    f_max: float = 1.0
    steps: int = 101
    copiers: tuple[CopierFamily, ...] = tuple(CopierFamily)
    output_path: str | None = None
    format: str = "csv"
    include_baselines: bool = False
    jobs: int = field(default=1, compare=False)

    def __post_init__(self):
        if not (0.0 <= self.f_min <= self.f_max <= 1.0):
            raise DomainError(f"need 0 <= f_min <= f_max <= 1, got [{self.f_min}, {self.f_max}]")
        if int(self.steps) != self.steps or self.steps < 2:
            raise DomainError(f"steps must be an integer >= 2, got {self.steps!r}")
        if self.format not in ("csv", "json"):
            raise DomainError(f"format must be csv or json, got {self.format!r}")
        if self.jobs < 1:
            raise DomainError(f"jobs must be >= 1, got {self.jobs!r}")
        object.__setattr__(self, "copiers", tuple(CopierFamily.parse(c) for c in self.copiers))

    def grid(self) -> list[float]:
        return f_grid(self.f_min, self.f_max, self.steps)


def f_grid(f_min: float, f_max: float, steps: int) -> list[float]:
    """Uniform grid including both endpoints; ``i/(n-1)`` style so 0..1 hits round decimals."""
    n = steps - 1
    return [(f_min * (n - i) + f_max * i) / n for i in range(steps)]


def evaluate(f: float, copier) -> SweepRecord:
    out = make_copier(copier, f)
    i1 = binary_info_from_q(out.q)
    base = i1_baseline(f)
    return SweepRecord(
        f=float(f),
        copier=out.family.value,
        i1=i1,
        i1_ratio=i1 / base if base > 0 else 1.0,
        ih=holevo_two_state(out.copy1, out.copy2),
        f_local=out.local_fidelity,
        q=out.q,
        r=out.r,
        q_h=out.q_h,
    )


def baseline_record(f: float) -> SweepRecord:
    return SweepRecord(
        f=float(f), copier=BASELINE_TAG,
        i1=i1_baseline(f), i1_ratio=1.0, ih=ih_baseline(f),
        f_local=1.0, q=math.sqrt(1 - f), r=1.0, q_h=math.sqrt(f),
    )


def _rows_at(args) -> list[SweepRecord]:
    f, copiers, baselines = args
    rows = [evaluate(f, c) for c in copiers]
    if baselines:
        rows.append(baseline_record(f))
    return rows


def run_sweep(config: SweepConfig) -> list[SweepRecord]:
    tasks = [(f, config.copiers, config.include_baselines) for f in config.grid()]
    if config.jobs > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            chunks = list(pool.map(_rows_at, tasks))
    else:
        chunks = [_rows_at(t) for t in tasks]
    rows = [row for chunk in chunks for row in chunk]
    return sorted(rows, key=lambda rec: (rec.f, rec.copier))


def format_number(x: float) -> str:
    if not math.isfinite(x):
        raise DomainError(f"non-finite value {x!r} in sweep output")
    text = f"{x:.{DIGITS}g}"
    return "0" if text == "-0" else text


def _serialized(rec: SweepRecord) -> list[str]:
    return [v if isinstance(v, str) else format_number(v) for v in astuple(rec)]


def to_csv(records) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(FIELDS)
    for rec in records:
        writer.writerow(_serialized(rec))
    return buf.getvalue()


def to_json(records) -> str:
    items = [
        {k: (v if k == "copier" else float(v)) for k, v in zip(FIELDS, _serialized(rec))}
        for rec in records
    ]
    return json.dumps(items, indent=1) + "\n"


def render(records, fmt: str = "csv") -> str:
    return to_csv(records) if fmt == "csv" else to_json(records)


def parse_csv(text: str) -> list[SweepRecord]:
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    if tuple(header) != FIELDS:
        raise DomainError(f"unexpected CSV header {header!r}")
    return [SweepRecord(float(r[0]), r[1], *map(float, r[2:])) for r in reader]


def write_sweep(config: SweepConfig) -> str:
    """Run the sweep and write it to ``config.output_path`` (or just return it)."""
    text = render(run_sweep(config), config.format)
    if config.output_path is not None:
        with open(config.output_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    return text
