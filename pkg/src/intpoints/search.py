"""Parameter sweeps over the family-5 and family-8 curves.

For every parameter tuple the family curve is built, reduced, and the
multiples nP of P = (0, 0) for n <= nmax are computed on the reduced curve.
A curve is a candidate when some n >= min_n gives an integral nP and P has
no finite order.  Candidates are deduplicated on the reduced coefficients
(weaker than a minimal-model check) and emitted in parameter order, so the
output does not depend on the number of workers.
"""
from __future__ import annotations

import itertools
import json
import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Iterator, Optional

from .curve import O, Affine, Curve, _add, _require_nonsingular, pretty_curve, reduce
from .families import PARAM_TYPES, FamilyRejected, build

log = logging.getLogger(__name__)

SEARCH_FAMILIES = (5, 8)
DEDUP_NOTE = "deduplicated on reduced coefficient tuple (a,b,c,d,e); not a minimal-model equivalence"

_ORIGIN = Affine(Fraction(0), Fraction(0))


def param_names(family: int) -> tuple[str, ...]:
    return PARAM_TYPES[family]._fields


@dataclass
class SearchConfig:
    family: int
    ranges: dict[str, tuple[int, int]]
    nmax: int = 35
    min_n: int = 15
    out: Optional[Path] = None
    workers: int = 1

    def validate(self) -> None:
        """Raise ValueError on a malformed config.  lo > hi is a valid, empty range."""
        if self.family not in SEARCH_FAMILIES:
            raise ValueError(f"family must be one of {SEARCH_FAMILIES}, got {self.family}")
        names = param_names(self.family)
        if set(self.ranges) != set(names):
            raise ValueError(f"family {self.family} needs ranges for exactly {', '.join(names)}; "
                             f"got {', '.join(sorted(self.ranges)) or 'none'}")
        for name, rng in self.ranges.items():
            if len(rng) != 2 or not all(isinstance(v, int) for v in rng):
                raise ValueError(f"range for {name} must be two integers, got {rng!r}")
        if not (self.nmax >= self.min_n >= 1):
            raise ValueError(f"need nmax >= min_n >= 1, got nmax={self.nmax}, min_n={self.min_n}")
        if self.workers < 1:
            raise ValueError(f"workers must be >= 1, got {self.workers}")

    def axes(self) -> list[range]:
        return [range(lo, hi + 1) for lo, hi in (self.ranges[n] for n in param_names(self.family))]

    def size(self) -> int:
        total = 1
        for ax in self.axes():
            total *= len(ax)
        return total


@dataclass(frozen=True)
class CandidateRecord:
    family: int
    params: tuple[int, ...]
    curve: Curve  # reduced
    g: int
    multiples: tuple[int, ...]
    torsion_order: Optional[int] = None

    @property
    def highest(self) -> int:
        return max(self.multiples)

    @property
    def count(self) -> int:
        return len(self.multiples)

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "params": [str(v) for v in self.params],
            "curve": {k: str(v) for k, v in zip("abcde", self.curve.coeffs)},
            "g": str(self.g),
            "multiples": list(self.multiples),
            "highest": self.highest,
            "count": self.count,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "CandidateRecord":
        rec = cls(
            family=int(obj["family"]),
            params=tuple(int(v) for v in obj["params"]),
            curve=Curve(*(int(obj["curve"][k]) for k in "abcde")),
            g=int(obj["g"]),
            multiples=tuple(int(n) for n in obj["multiples"]),
        )
        if obj.get("highest", rec.highest) != rec.highest or obj.get("count", rec.count) != rec.count:
            raise ValueError(f"inconsistent highest/count in record {obj!r}")
        return rec


@dataclass
class SearchStats:
    scanned: int = 0
    rejected: Counter = field(default_factory=Counter)
    torsion: int = 0
    below_threshold: int = 0
    duplicates: int = 0
    emitted: int = 0

    def merge(self, other: "SearchStats") -> None:
        self.scanned += other.scanned
        self.rejected.update(other.rejected)
        self.torsion += other.torsion
        self.below_threshold += other.below_threshold
        self.duplicates += other.duplicates
        self.emitted += other.emitted

    def to_json(self) -> dict:
        return {
            "scanned": self.scanned,
            "rejected": dict(sorted(self.rejected.items())),
            "torsion": self.torsion,
            "below_threshold": self.below_threshold,
            "duplicates": self.duplicates,
            "emitted": self.emitted,
        }


def integral_multiples(E: Curve, nmax: int) -> tuple[tuple[int, ...], Optional[int]]:
    """The n in [1, nmax] with n(0,0) integral, and the order of (0,0) if it is <= nmax."""
    if E.e != 0:
        raise ValueError(f"(0,0) is not on {E}: e must be 0")
    _require_nonsingular(E)
    found = []
    Q = O
    for n in range(1, nmax + 1):
        Q = _add(E, Q, _ORIGIN)
        if Q is O:
            return tuple(found), n
        if Q.x.denominator == 1 and Q.y.denominator == 1:
            found.append(n)
    return tuple(found), None


def evaluate(family: int, params, nmax: int, min_n: int, stats: SearchStats) -> Optional[CandidateRecord]:
    """Build, reduce and test one parameter tuple; updates ``stats`` with the outcome."""
    stats.scanned += 1
    try:
        fc = build(family, params)
    except FamilyRejected as exc:
        stats.rejected[exc.reason] += 1
        return None
    if "unreduced_gcd" in fc.flags:
        stats.rejected["unreduced_gcd"] += 1
        return None
    g, reduced = reduce(fc.curve)
    found, torsion = integral_multiples(reduced, nmax)
    if torsion is not None:
        stats.torsion += 1
        return None
    if not found or found[-1] < min_n:
        stats.below_threshold += 1
        return None
    return CandidateRecord(family, tuple(params), reduced, g, found)


def _chunks(total: int, workers: int) -> list[tuple[int, int]]:
    if total == 0:
        return []
    n = min(total, workers * 4)
    step, extra = divmod(total, n)
    bounds, start = [], 0
    for i in range(n):
        stop = start + step + (1 if i < extra else 0)
        bounds.append((start, stop))
        start = stop
    return bounds


def _run_chunk(args) -> tuple[list[CandidateRecord], SearchStats]:
    family, axes, nmax, min_n, start, stop = args
    stats = SearchStats()
    out = []
    for params in itertools.islice(itertools.product(*axes), start, stop):
        rec = evaluate(family, params, nmax, min_n, stats)
        if rec is not None:
            out.append(rec)
    return out, stats


def run_search(cfg: SearchConfig, stats: Optional[SearchStats] = None) -> Iterator[CandidateRecord]:
    """Yield deduplicated candidates in lexicographic parameter order."""
    cfg.validate()
    if stats is None:
        stats = SearchStats()
    axes = cfg.axes()
    jobs = [(cfg.family, axes, cfg.nmax, cfg.min_n, lo, hi) for lo, hi in _chunks(cfg.size(), cfg.workers)]
    seen = set()

    def merge(results):
        for recs, chunk_stats in results:
            stats.merge(chunk_stats)
            for rec in recs:
                if rec.curve.coeffs in seen:
                    stats.duplicates += 1
                    continue
                seen.add(rec.curve.coeffs)
                stats.emitted += 1
                yield rec

    if cfg.workers == 1 or len(jobs) <= 1:
        yield from merge(map(_run_chunk, jobs))
    else:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            # map preserves submission order, which is what keeps output deterministic
            yield from merge(pool.map(_run_chunk, jobs))


def write_jsonl(records: Iterable[CandidateRecord], path: Path) -> int:
    path = Path(path)
    n = 0
    try:
        with path.open("w", encoding="utf-8") as fh:
            for rec in records:
                fh.write(json.dumps(rec.to_json(), separators=(",", ":")) + "\n")
                n += 1
    except OSError as exc:
        raise OSError(f"cannot write candidates to {path}: {exc.strerror or exc}") from exc
    return n


def read_jsonl(path: Path) -> list[CandidateRecord]:
    path = Path(path)
    try:
        with path.open(encoding="utf-8") as fh:
            lines = [(i, line) for i, line in enumerate(fh, 1) if line.strip()]
    except OSError as exc:
        raise OSError(f"cannot read candidates from {path}: {exc.strerror or exc}") from exc
    records = []
    for i, line in lines:
        try:
            records.append(CandidateRecord.from_json(json.loads(line)))
        except (ValueError, KeyError, TypeError) as exc:
            raise ValueError(f"{path}:{i}: bad record: {exc}") from exc
    return records


def write_meta(cfg: SearchConfig, stats: SearchStats, path: Path) -> None:
    meta = {
        "family": cfg.family,
        "ranges": {k: list(cfg.ranges[k]) for k in param_names(cfg.family)},
        "nmax": cfg.nmax,
        "min_n": cfg.min_n,
        "dedup": DEDUP_NOTE,
        "stats": stats.to_json(),
    }
    Path(path).write_text(json.dumps(meta, indent=2) + "\n", encoding="utf-8")


def verify_record(rec: CandidateRecord, nmax: int = 35) -> bool:
    """Recompute the multiples from the stored curve."""
    found, torsion = integral_multiples(rec.curve, nmax)
    return torsion is None and found == rec.multiples


def rank_records(records: Iterable[CandidateRecord], key: str = "highest", top: Optional[int] = None) -> list[CandidateRecord]:
    """Sort descending by ``highest`` or ``count``; ties go to the smaller coefficient tuple."""
    if key not in ("highest", "count"):
        raise ValueError(f"rank key must be 'highest' or 'count', got {key!r}")
    ranked = sorted(records, key=lambda r: (-getattr(r, key), r.curve.coeffs))
    return ranked if top is None else ranked[:max(top, 0)]


def render_table(records: Iterable[CandidateRecord]) -> str:
    rows = [(pretty_curve(r.curve), ", ".join(map(str, r.multiples))) for r in records]
    header = ("Curve", "Integral Multiples of (0,0)")
    width = max([len(header[0])] + [len(c) for c, _ in rows])
    lines = [f"{header[0]:<{width}} | {header[1]}", "-" * width + "-+-" + "-" * len(header[1])]
    lines += [f"{c:<{width}} | {m}" for c, m in rows]
    return "\n".join(lines)
