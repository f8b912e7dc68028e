"""Exhaustive census of oriented graphs by generalized skew spectrum.

Phase 1 walks a contiguous slice of the code space. Each unseen code is
expanded into its relabeling orbit; the orbit minimum is the canonical
form of the class, and one entry ``(canon, digest, fingerprint)`` is
emitted per class touched. Phase 2 merges entries from all shards, buckets
classes by fingerprint and resolves certificates and mate counts inside
each bucket. Output is sorted by canonical string, so it does not depend
on how the code space was sharded.
"""

from __future__ import annotations

import json
import logging
import os
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, fields
from functools import lru_cache
from pathlib import Path
from typing import IO, Iterable, Iterator, Optional

import numpy as np

from .characterization import (
    AuditResult,
    certificate_lemma_audit,
    fn_membership,
    last_invariant_factor,
    pairwise_level_audit,
    wdgss_criterion,
)
from .errors import InputError, NotControllableError, NotCospectralMateError, UnsupportedError
from .graph_core import (
    MAX_ENUM_ORDER,
    OrientedGraph,
    canonical_form,
    code_to_compact,
    enumerate_codes,
    from_compact,
    is_isomorphic,
    orbit_codes,
    transpose,
)
from .spectral import (
    QCertificate,
    fingerprint,
    generalized_cospectral,
    is_controllable,
    recover_q,
    walk_matrix,
)

log = logging.getLogger(__name__)

CHECKPOINT_EVERY = 5000  # orbits between checkpoint writes


# ------------------------------------------------------------------ phase 1

@dataclass(frozen=True, order=True)
class ClassEntry:
    canon: str
    digest: str
    fingerprint: str  # SpectralFingerprint.serialize()


def _entry_for(n: int, canon_code: int) -> ClassEntry:
    canon = code_to_compact(n, canon_code)
    fp = fingerprint(from_compact(canon))
    return ClassEntry(canon, fp.digest(), fp.serialize())


def _checkpoint_paths(directory: Path, n: int, shards: int, index: int) -> tuple[Path, Path]:
    stem = f"n{n}-shard{index}of{shards}"
    return directory / f"{stem}.ckpt", directory / f"{stem}.entries.jsonl"


def _write_checkpoint(directory: Path, n, shards, index, counter: int, entries: dict) -> None:
    ckpt, data = _checkpoint_paths(directory, n, shards, index)
    tmp = data.with_suffix(".tmp")
    with open(tmp, "w") as fh:
        for e in sorted(entries.values()):
            fh.write(json.dumps(asdict(e)) + "\n")
    os.replace(tmp, data)
    ckpt.write_text(f"{counter}\n")


def census_shard(
    n: int,
    shards: int = 1,
    index: int = 0,
    checkpoint_dir: Optional[os.PathLike] = None,
    resume: bool = False,
) -> list[ClassEntry]:
    """Phase 1: one entry per isomorphism class met in the shard's code slice."""
    codes = enumerate_codes(n, shards, index)
    lo, hi = codes.start, codes.stop
    entries: dict[str, ClassEntry] = {}
    start = lo
    ckdir = Path(checkpoint_dir) if checkpoint_dir is not None else None
    if ckdir is not None:
        ckdir.mkdir(parents=True, exist_ok=True)
        ckpt, data = _checkpoint_paths(ckdir, n, shards, index)
        if resume and ckpt.exists():
            start = int(ckpt.read_text().strip()) + 1
            for e in read_entries(data.open()):
                entries[e.canon] = e
            log.info("shard %d/%d resumed at code %d", index, shards, start)

    seen = np.zeros(hi - lo, dtype=bool)
    pos = start - lo
    since_ckpt = 0
    while pos < hi - lo:
        if seen[pos]:
            nxt = np.argmin(seen[pos:])
            if seen[pos + nxt]:
                break
            pos += int(nxt)
        orbit = orbit_codes(n, lo + pos)
        inside = orbit[(orbit >= lo) & (orbit < hi)] - lo
        seen[inside] = True
        canon_code = int(orbit.min())
        canon = code_to_compact(n, canon_code)
        if canon not in entries:
            entries[canon] = _entry_for(n, canon_code)
        since_ckpt += 1
        if ckdir is not None and since_ckpt >= CHECKPOINT_EVERY:
            _write_checkpoint(ckdir, n, shards, index, lo + pos, entries)
            since_ckpt = 0
        pos += 1
    if ckdir is not None:
        _write_checkpoint(ckdir, n, shards, index, hi - 1, entries)
    return sorted(entries.values())


def write_entries(entries: Iterable[ClassEntry], fh: IO[str]) -> None:
    for e in entries:
        fh.write(json.dumps(asdict(e)) + "\n")


def read_entries(fh: IO[str]) -> Iterator[ClassEntry]:
    for lineno, line in enumerate(fh, 1):
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
            yield ClassEntry(str(obj["canon"]), str(obj["digest"]), str(obj["fingerprint"]))
        except (ValueError, KeyError, TypeError) as exc:
            raise InputError(f"line {lineno}: malformed shard entry ({exc})") from None


# ------------------------------------------------------------------ records

@dataclass(frozen=True)
class CensusRecord:
    canon: str
    n: int
    controllable: bool
    det_walk: str
    in_fn: bool
    odd_primes: list
    k: int
    bound: int
    fingerprint_digest: str
    mate_class_count: int
    mate_levels: list
    self_transpose: bool
    wdgss_by_criterion: bool
    mates: list = field(default_factory=list)
    bound_violation: bool = False
    audit_failures: list = field(default_factory=list)

    @property
    def flagged(self) -> bool:
        return self.bound_violation or bool(self.audit_failures)


_RECORD_FIELDS = {f.name: f for f in fields(CensusRecord)}
_REQUIRED = [f.name for f in fields(CensusRecord)][:13]
_TYPES = {
    "canon": str, "n": int, "controllable": bool, "det_walk": str, "in_fn": bool,
    "odd_primes": list, "k": int, "bound": int, "fingerprint_digest": str,
    "mate_class_count": int, "mate_levels": list, "self_transpose": bool,
    "wdgss_by_criterion": bool, "mates": list, "bound_violation": bool,
    "audit_failures": list,
}


def record_to_json(r: CensusRecord) -> str:
    return json.dumps(asdict(r))


def record_from_json(line: str) -> CensusRecord:
    obj = json.loads(line)
    if not isinstance(obj, dict):
        raise ValueError("record is not an object")
    missing = [k for k in _REQUIRED if k not in obj]
    if missing:
        raise ValueError(f"missing fields {missing}")
    unknown = set(obj) - set(_RECORD_FIELDS)
    if unknown:
        raise ValueError(f"unknown fields {sorted(unknown)}")
    for k, v in obj.items():
        t = _TYPES[k]
        if t is int and (isinstance(v, bool) or not isinstance(v, int)):
            raise ValueError(f"field {k!r} must be an integer")
        if not isinstance(v, t):
            raise ValueError(f"field {k!r} must be {t.__name__}")
    for k in ("det_walk",):
        int(obj[k])
    for k in ("odd_primes", "mate_levels"):
        if not all(isinstance(x, str) for x in obj[k]):
            raise ValueError(f"field {k!r} must hold decimal strings")
        [int(x) for x in obj[k]]
    return CensusRecord(**obj)


def export_records(records: Iterable[CensusRecord], destination) -> int:
    """Write records one JSON object per line; returns the count written."""
    count = 0
    own = isinstance(destination, (str, os.PathLike))
    fh = open(destination, "w") if own else destination
    try:
        for r in records:
            fh.write(record_to_json(r) + "\n")
            count += 1
    finally:
        if own:
            fh.close()
    return count


def import_records(source) -> list[CensusRecord]:
    own = isinstance(source, (str, os.PathLike))
    fh = open(source) if own else source
    out = []
    try:
        for lineno, line in enumerate(fh, 1):
            if not line.strip():
                continue
            try:
                out.append(record_from_json(line))
            except (ValueError, TypeError) as exc:
                raise InputError(f"line {lineno}: malformed record ({exc})") from None
    finally:
        if own:
            fh.close()
    return out


# ------------------------------------------------------------------ phase 2

@dataclass
class CensusResult:
    n: int
    records: list[CensusRecord]
    certificates: dict[str, list[QCertificate]]
    audits: list[tuple[str, AuditResult]]
    buckets: list[list[str]]

    @property
    def violations(self) -> list[CensusRecord]:
        return [r for r in self.records if r.bound_violation]

    @property
    def flagged(self) -> list[CensusRecord]:
        return [r for r in self.records if r.flagged]


def _analyze_class(canon: str, bucket: list[str]):
    g = from_compact(canon)
    report = fn_membership(g)
    controllable = report.det_walk != 0
    st_canon = canonical_form(transpose(g))
    self_transpose = st_canon == canon
    wd = wdgss_criterion(g, report)
    assert wd.self_transpose == self_transpose
    mates = [c for c in bucket if c != canon]
    certs: list[QCertificate] = []
    failures: list[str] = []
    audits: list[tuple[str, AuditResult]] = []
    if controllable:
        for other in mates:
            try:
                certs.append(recover_q(g, from_compact(other)))
            except (NotControllableError, NotCospectralMateError) as exc:
                failures.append(f"certificate_failed[{other}]: {exc}")
    levels = sorted(c.level for c in certs)
    bound_violation = report.is_member and len(mates) > report.bound
    if report.is_member:
        dn = last_invariant_factor(walk_matrix(g))
        for cert in certs:
            audit = certificate_lemma_audit(cert, report, dn)
            audits.append((canon, audit))
            failures += [f"{name}[{canonical_form(cert.target)}]" for name in audit.failures()]
            if cert.level <= 1:
                failures.append(f"trivial_level_for_mate[{canonical_form(cert.target)}]")
        for i in range(len(certs)):
            for j in range(i + 1, len(certs)):
                audit = pairwise_level_audit(certs[i], certs[j])
                audits.append((canon, audit))
                failures += [f"pairwise:{name}" for name in audit.failures()]
        if len(set(levels)) != len(levels):
            failures.append("mate_levels_not_distinct")
    if wd.verdict == "wdgss_by_criterion" and mates != [st_canon]:
        failures.append("wdgss_mate_is_not_transpose")
    record = CensusRecord(
        canon=canon,
        n=g.n,
        controllable=controllable,
        det_walk=str(report.det_walk),
        in_fn=report.is_member,
        odd_primes=[str(p) for p in report.odd_primes],
        k=report.k,
        bound=report.bound,
        fingerprint_digest=fingerprint(g).digest(),
        mate_class_count=len(mates),
        mate_levels=[str(x) for x in levels],
        self_transpose=self_transpose,
        wdgss_by_criterion=wd.verdict == "wdgss_by_criterion",
        mates=mates,
        bound_violation=bound_violation,
        audit_failures=failures,
    )
    return record, certs, audits


def merge_entries(n: int, entries: Iterable[ClassEntry]) -> CensusResult:
    """Phase 2: bucket classes by spectrum and build one record per class."""
    by_canon: dict[str, ClassEntry] = {}
    for e in entries:
        prev = by_canon.setdefault(e.canon, e)
        if prev != e:
            raise InputError(f"conflicting entries for {e.canon}")
    by_digest: dict[str, dict[str, list[str]]] = defaultdict(lambda: defaultdict(list))
    for canon in sorted(by_canon):
        e = by_canon[canon]
        # exact split inside a digest bucket guards against hash collisions
        by_digest[e.digest][e.fingerprint].append(canon)
    buckets = sorted(
        members for group in by_digest.values() for members in group.values()
    )
    records, certificates, audits = [], {}, []
    for bucket in buckets:
        for canon in bucket:
            rec, certs, aud = _analyze_class(canon, bucket)
            records.append(rec)
            certificates[canon] = certs
            audits.extend(aud)
    records.sort(key=lambda r: r.canon)
    return CensusResult(n, records, certificates, audits, buckets)


def _shard_job(args):
    n, shards, index, ckdir, resume = args
    return census_shard(n, shards, index, ckdir, resume)


def run_census(
    n: int,
    shards: int = 1,
    workers: int = 1,
    checkpoint_dir: Optional[os.PathLike] = None,
    resume: bool = False,
) -> CensusResult:
    """Run every shard (in parallel when ``workers > 1``) and merge."""
    if not 1 <= n <= MAX_ENUM_ORDER:
        raise UnsupportedError(f"census supports 1 <= n <= {MAX_ENUM_ORDER}, got {n}")
    jobs = [(n, shards, i, checkpoint_dir, resume) for i in range(shards)]
    if workers > 1 and shards > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_shard_job, jobs))
    else:
        parts = [_shard_job(j) for j in jobs]
    return merge_entries(n, (e for part in parts for e in part))


@lru_cache(maxsize=None)
def class_entries(n: int) -> tuple[ClassEntry, ...]:
    return tuple(census_shard(n))


# ------------------------------------------------------------- mate search

@dataclass(frozen=True)
class MateClassReport:
    """Mate classes of ``representative``; ``members`` excludes it."""

    representative: str
    members: tuple[str, ...]
    certificates: tuple[QCertificate, ...]
    audits: tuple[AuditResult, ...] = ()

    @property
    def levels(self) -> tuple[int, ...]:
        return tuple(c.level for c in self.certificates)

    @property
    def audits_passed(self) -> bool:
        return all(a.passed for a in self.audits)


def _audits_for(source: OrientedGraph, certs: list[QCertificate]) -> list[AuditResult]:
    report = fn_membership(source)
    if not report.is_member:
        return []
    dn = last_invariant_factor(walk_matrix(source))
    out = [certificate_lemma_audit(c, report, dn) for c in certs]
    for i in range(len(certs)):
        for j in range(i + 1, len(certs)):
            out.append(pairwise_level_audit(certs[i], certs[j]))
    return out


def find_mates(d: OrientedGraph) -> MateClassReport:
    """All non-isomorphic generalized cospectral mates of ``d`` (n <= 6)."""
    if d.n > MAX_ENUM_ORDER:
        raise UnsupportedError(
            f"exhaustive mate search needs n <= {MAX_ENUM_ORDER}; use verify_candidate_mate"
        )
    fp = fingerprint(d).serialize()
    canon = canonical_form(d)
    members = tuple(e.canon for e in class_entries(d.n) if e.fingerprint == fp and e.canon != canon)
    source = from_compact(canon)
    certs = []
    if is_controllable(source):
        certs = [recover_q(source, from_compact(m)) for m in members]
    return MateClassReport(canon, members, tuple(certs), tuple(_audits_for(source, certs)))


def verify_candidate_mate(d: OrientedGraph, c: OrientedGraph) -> MateClassReport:
    """Confirm ``c`` is a mate of ``d``; include both transposes' classes."""
    if d.n != c.n:
        raise InputError(f"graphs have different orders ({d.n} vs {c.n})")
    if not generalized_cospectral(d, c):
        raise NotCospectralMateError("candidate does not share the generalized skew spectrum")
    if is_isomorphic(d, c) is not None:
        raise NotCospectralMateError("candidate is isomorphic to the source graph")
    canon = canonical_form(d)
    members, graphs = [], []
    for g in (c, transpose(d), transpose(c)):
        cf = canonical_form(g)
        if cf != canon and cf not in members:
            members.append(cf)
            graphs.append(g)
    certs = [recover_q(d, g) for g in graphs]
    return MateClassReport(canon, tuple(members), tuple(certs), tuple(_audits_for(d, certs)))
