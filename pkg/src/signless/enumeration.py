"""Isomorphism-free generation of small graphs.

Classes are grown one vertex at a time by canonical augmentation (see
:func:`signless._canon.extend_parent`).  Every class on ``n - 1`` vertices
is kept in memory as a one-word certificate (12346 words at ``n - 1 = 8``);
the last level is streamed parent by parent so filters and downstream
work never hold the full output.
"""

from __future__ import annotations

import functools
import multiprocessing
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterator, Optional

import numpy as np
from numba import njit

from . import _canon
from .graphcore import Graph, count_edges, is_connected, to_graph6

MAX_ENUM_N = 10
MAX_LABELED_N = 7


@dataclass(frozen=True)
class EnumSpec:
    n: int
    connected_only: bool = False
    m_min: Optional[int] = None
    m_max: Optional[int] = None

    def __post_init__(self):
        if not 1 <= self.n <= MAX_ENUM_N:
            raise ValueError(f"n={self.n} outside 1..{MAX_ENUM_N}")
        top = self.n * (self.n - 1) // 2
        lo, hi = self.bounds()
        if self.m_min is not None and self.m_min < 0:
            raise ValueError("m_min must be nonnegative")
        if self.m_max is not None and self.m_max > top:
            raise ValueError(f"m_max={self.m_max} exceeds {top}")
        if lo > hi:
            raise ValueError(f"m_min={lo} exceeds m_max={hi}")

    def bounds(self) -> tuple[int, int]:
        top = self.n * (self.n - 1) // 2
        lo = 0 if self.m_min is None else self.m_min
        hi = top if self.m_max is None else self.m_max
        return lo, hi

    def matches(self, g: Graph) -> bool:
        lo, hi = self.bounds()
        m = count_edges(g)
        return (g.n == self.n and lo <= m <= hi
                and (not self.connected_only or is_connected(g)))

    def to_dict(self) -> dict:
        return {"n": self.n, "connected_only": self.connected_only,
                "m_min": self.m_min, "m_max": self.m_max}


def graph_from_cert(cert: int, n: int) -> Graph:
    return Graph(n, tuple(int(x) for x in _canon.decode(np.int64(cert), n)))


def cert_to_graph6(cert: int, n: int) -> str:
    return to_graph6(graph_from_cert(cert, n))


def canonical_form(g: Graph) -> str:
    """graph6 of the canonical representative of the isomorphism class of ``g``."""
    if g.n > _canon.MAX_CANON_N:
        raise ValueError(f"canonical_form supports n <= {_canon.MAX_CANON_N}, got {g.n}")
    return cert_to_graph6(int(_canon.canonical_cert(g.rows(), g.n)), g.n)


@functools.lru_cache(maxsize=None)
def all_classes(n: int) -> np.ndarray:
    """Certificates of every class on ``n`` vertices, in generation order."""
    if n == 1:
        return np.zeros(1, np.int64)
    if n > MAX_ENUM_N:
        raise ValueError(f"n={n} outside 1..{MAX_ENUM_N}")
    out = _canon.extend_level(all_classes(n - 1), n - 1)
    out.setflags(write=False)
    return out


@njit(cache=True)
def _extend_chunk(parents, np_, m_min, m_max, connected_only):
    n = np_ + 1
    chunks = []
    total = 0
    for p in range(parents.shape[0]):
        mp = _canon.popcount(parents[p])
        lo = max(0, m_min - mp)
        hi = min(np_, m_max - mp)
        if lo > hi:
            continue
        ch = _canon.extend_parent(parents[p], np_, lo, hi)
        keep = np.ones(ch.shape[0], np.bool_)
        if connected_only:
            for i in range(ch.shape[0]):
                keep[i] = _canon.is_connected_rows(_canon.decode(ch[i], n), n)
        sel = ch[keep]
        chunks.append(sel)
        total += sel.shape[0]
    res = np.empty(total, np.int64)
    k = 0
    for c in chunks:
        res[k:k + c.shape[0]] = c
        k += c.shape[0]
    return res


def _root_certs(spec: EnumSpec) -> np.ndarray:
    # n = 1 has no parent level
    lo, hi = spec.bounds()
    return np.zeros(1 if lo <= 0 <= hi else 0, np.int64)


def chunk_parents(n: int, nchunks: int) -> list[np.ndarray]:
    parents = all_classes(n - 1)
    return [c for c in np.array_split(parents, max(1, nchunks)) if c.size]


def extend_chunk(parents: np.ndarray, spec: EnumSpec) -> np.ndarray:
    """Certificates of the classes of ``spec`` whose canonical parent is in ``parents``."""
    lo, hi = spec.bounds()
    return _extend_chunk(parents, spec.n - 1, lo, hi, spec.connected_only)


def warm_kernels() -> None:
    """Compile the kernels in this process so forked workers inherit them."""
    from .spectral import MAX_SWEEPS, extremes_from_certs

    _extend_chunk(all_classes(2), 2, 0, 3, True)
    extremes_from_certs(np.zeros(1, np.int64), 2, 1e-12, MAX_SWEEPS)


def pool(jobs: int) -> ProcessPoolExecutor:
    # fork keeps the compiled kernels and cached levels; without the warm-up
    # every worker would load or compile them again
    warm_kernels()
    return ProcessPoolExecutor(max_workers=jobs,
                               mp_context=multiprocessing.get_context("fork"))


def _chunk_job(args):
    parents, spec = args
    return extend_chunk(parents, spec)


def iter_cert_chunks(spec: EnumSpec, jobs: int = 1, chunks_per_job: int = 8) -> Iterator[np.ndarray]:
    """Yield certificate arrays in deterministic order for any ``jobs``."""
    if spec.n == 1:
        yield _root_certs(spec)
        return
    if jobs <= 1:
        for parents in chunk_parents(spec.n, 64):
            yield extend_chunk(parents, spec)
        return
    tasks = [(p, spec) for p in chunk_parents(spec.n, jobs * chunks_per_job)]
    with pool(jobs) as ex:
        yield from ex.map(_chunk_job, tasks)


def enumerate_graphs(spec: EnumSpec, visit: Optional[Callable[[Graph], None]] = None,
                     jobs: int = 1) -> int:
    """Visit one canonical representative per matching class; return the count."""
    count = 0
    for certs in iter_cert_chunks(spec, jobs):
        if visit is not None:
            for c in certs:
                visit(graph_from_cert(int(c), spec.n))
        count += len(certs)
    return count


def iter_graphs(spec: EnumSpec, jobs: int = 1) -> Iterator[Graph]:
    for certs in iter_cert_chunks(spec, jobs):
        for c in certs:
            yield graph_from_cert(int(c), spec.n)


def enumerate_labeled(n: int, visit: Optional[Callable[[Graph], None]] = None) -> int:
    """Visit every labeled graph on ``n`` vertices (all edge subsets)."""
    if not 1 <= n <= MAX_LABELED_N:
        raise ValueError(f"labeled enumeration supports 1 <= n <= {MAX_LABELED_N}")
    npairs = n * (n - 1) // 2
    if visit is not None:
        for bits in range(1 << npairs):
            visit(graph_from_cert(bits, n))
    return 1 << npairs


def labeled_class_set(n: int, connected_only: bool) -> set[int]:
    """Canonical certificates reached by brute force over labeled graphs."""
    if not 1 <= n <= MAX_LABELED_N:
        raise ValueError(f"labeled enumeration supports 1 <= n <= {MAX_LABELED_N}")
    return set(np.unique(_canon.labeled_class_certs(n, connected_only)).tolist())
