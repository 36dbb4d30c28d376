"""Bounded worker pool with deterministic collection order.

Work is split into ordered chunks; results are concatenated (or counts
summed) in chunk order, so output is byte-identical whatever the pool size.
The default degree comes from MAPSTRATA_JOBS, overridden by an explicit
``jobs`` argument.
"""

from __future__ import annotations

import os
from multiprocessing import get_context

ENV_JOBS = "MAPSTRATA_JOBS"


def effective_jobs(jobs=None):
    if jobs is None:
        env = os.environ.get(ENV_JOBS, "")
        jobs = int(env) if env.isdigit() else 1
    return max(1, int(jobs))


def split_ranges(total, parts):
    """Split range(total) into at most ``parts`` contiguous (start, stop)."""
    parts = max(1, min(parts, total)) if total else 1
    step, extra = divmod(total, parts)
    ranges = []
    start = 0
    for i in range(parts):
        stop = start + step + (1 if i < extra else 0)
        if stop > start:
            ranges.append((start, stop))
        start = stop
    return ranges or [(0, 0)]


def _chunks(items, parts):
    bounds = split_ranges(len(items), parts)
    return [items[a:b] for a, b in bounds]


def map_chunks(fn, shared, items, jobs):
    """fn(shared, chunk) over ordered chunks of items; results concatenated."""
    jobs = effective_jobs(jobs)
    chunks = _chunks(items, jobs)
    if jobs <= 1 or len(chunks) <= 1:
        out = []
        for chunk in chunks:
            out.extend(fn(shared, chunk))
        return out
    with get_context("fork").Pool(len(chunks)) as pool:
        results = pool.starmap(fn, [(shared, chunk) for chunk in chunks])
    out = []
    for r in results:
        out.extend(r)
    return out


def merge_counts(fn, chunk_args, jobs):
    """fn(args) -> dict of counts, per chunk; merged by summation."""
    jobs = effective_jobs(jobs)
    if jobs <= 1 or len(chunk_args) <= 1:
        results = [fn(a) for a in chunk_args]
    else:
        with get_context("fork").Pool(min(jobs, len(chunk_args))) as pool:
            results = pool.map(fn, chunk_args)
    merged = {}
    for counts in results:
        for k, v in counts.items():
            merged[k] = merged.get(k, 0) + v
    return merged
