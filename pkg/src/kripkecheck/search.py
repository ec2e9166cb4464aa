"""Bounded exhaustive searches over the model stream.

The stream of :func:`~kripkecheck.enumeration.enumerate_models` is cut into
chunks: one chunk per (world count, domain size, frame, valuation of the
first predicate).  A *scanner* examines one chunk and returns the models it
flags.  Chunks are consumed in stream order whether they run in this process
or in a worker pool, so counts and the reported first hit do not depend on
``jobs``.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Iterable, Iterator, Optional, Protocol

from .enumeration import Bounds, constant_valuations, element_names, enumerate_frames, monotone_valuations
from .forcing import EvaluationError, compile_formula
from .model import Frame, KripkeModel, model_to_dict
from .syntax import Formula, format_formula, free_variables, predicate_symbols

__all__ = [
    "Chunk",
    "ChunkData",
    "Scanner",
    "Refuter",
    "SearchReport",
    "plan_chunks",
    "run_search",
    "check_validity",
]


@dataclass(frozen=True)
class Chunk:
    n: int
    m: int
    frame_index: int
    head: Optional[int]  # valuation index of the first predicate; None if no predicates
    offset: int  # stream index of the chunk's first model
    size: int


@lru_cache(maxsize=1024)
def _valuations(frame: Frame, m: int, constant: bool) -> tuple:
    domain = element_names(m)
    gen = constant_valuations if constant else monotone_valuations
    return tuple(gen(frame, domain))


@dataclass
class ChunkData:
    chunk: Chunk
    frame: Frame
    domain: tuple
    preds: tuple  # sorted predicate names
    lists: list  # admissible valuations per predicate; the first is pinned to the head

    def models(self) -> Iterator[tuple[int, KripkeModel]]:
        frame, domain, preds = self.frame, self.domain, self.preds
        for i, vals in enumerate(product(*self.lists)):
            yield i, KripkeModel(frame, domain, dict(zip(preds, vals)))


def _materialize(shape: str, preds: tuple, constant: frozenset, chunk: Chunk) -> ChunkData:
    frame = enumerate_frames(chunk.n, shape)[chunk.frame_index]
    lists = [list(_valuations(frame, chunk.m, p in constant)) for p in preds]
    if lists:
        lists[0] = [lists[0][chunk.head]]
    return ChunkData(chunk, frame, element_names(chunk.m), preds, lists)


def plan_chunks(bounds: Bounds, language: Iterable[str], constant: Iterable[str] = ()) -> list[Chunk]:
    preds = sorted(language)
    constant = set(constant)
    chunks, offset = [], 0
    for n in range(1, bounds.max_worlds + 1):
        frames = enumerate_frames(n, bounds.shape)
        for m in range(1, bounds.max_domain + 1):
            for fi, frame in enumerate(frames):
                k = len(frame.upsets())
                sizes = [k if p in constant else k ** m for p in preds]
                rest = 1
                for s in sizes[1:]:
                    rest *= s
                heads = range(sizes[0]) if preds else [None]
                for h in heads:
                    chunks.append(Chunk(n, m, fi, h, offset, rest))
                    offset += rest
    return chunks


class Scanner(Protocol):
    def __call__(self, data: ChunkData, limit: Optional[int]) -> tuple[int, list]:
        """Return ``(models_checked, [(local_index, model), ...])``.

        Stops after ``limit`` hits when ``limit`` is not None; in that case
        ``models_checked`` counts up to and including the last hit.
        """


@dataclass(frozen=True)
class Refuter:
    """Flags models whose base does not force ``formula``."""

    formula: Formula

    def __call__(self, data: ChunkData, limit):
        holds = compile_formula(self.formula)
        hits = []
        for i, model in data.models():
            if not holds(model, model.base, {}):
                hits.append((i, model))
                if limit is not None and len(hits) >= limit:
                    return i + 1, hits
        return data.chunk.size, hits


def _scan(args):
    shape, preds, constant, chunk, scanner, limit = args
    return scanner(_materialize(shape, preds, constant, chunk), limit)


def run_search(
    bounds: Bounds,
    language: Iterable[str],
    scanner: Scanner,
    *,
    constant: Iterable[str] = (),
    limit: Optional[int] = None,
    jobs: int = 1,
) -> tuple[int, list[tuple[int, KripkeModel]]]:
    """Scan the bounded stream; return models checked and ``(stream index, model)`` hits."""
    preds = tuple(sorted(language))
    constant = frozenset(constant)
    chunks = plan_chunks(bounds, preds, constant)
    tasks = ((bounds.shape, preds, constant, c, scanner, limit) for c in chunks)
    checked, hits = 0, []

    def consume(chunk, result) -> bool:
        nonlocal checked
        n_checked, found = result
        if limit is not None and len(hits) + len(found) >= limit:
            found = found[: limit - len(hits)]
            n_checked = found[-1][0] + 1
        checked += n_checked
        hits.extend((chunk.offset + i, model) for i, model in found)
        return limit is not None and len(hits) >= limit

    if jobs <= 1:
        for chunk, task in zip(chunks, tasks):
            if consume(chunk, _scan(task)):
                break
        return checked, hits

    window = 4 * jobs
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        pending = []
        it = zip(chunks, tasks)
        for chunk, task in it:
            pending.append((chunk, pool.submit(_scan, task)))
            if len(pending) < window:
                continue
            chunk0, fut = pending.pop(0)
            if consume(chunk0, fut.result()):
                break
        else:
            while pending:
                chunk0, fut = pending.pop(0)
                if consume(chunk0, fut.result()):
                    break
        for _, fut in pending:
            fut.cancel()
    return checked, hits


@dataclass
class SearchReport:
    formula: str
    bounds: Bounds
    models_checked: int
    counterexamples: int
    first_counterexample: Optional[KripkeModel]
    elapsed_ms: int
    hits: list = field(default_factory=list, repr=False)  # (stream index, model)

    @property
    def first_index(self) -> Optional[int]:
        return self.hits[0][0] if self.hits else None

    def to_dict(self) -> dict:
        first = self.first_counterexample
        return {
            "formula": self.formula,
            "bounds": self.bounds.to_dict(),
            "models_checked": self.models_checked,
            "counterexamples": self.counterexamples,
            "first_counterexample": model_to_dict(first) if first is not None else None,
            "elapsed_ms": self.elapsed_ms,
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)


def _report(label: str, bounds: Bounds, started: float, checked: int, hits: list) -> SearchReport:
    return SearchReport(
        formula=label,
        bounds=bounds,
        models_checked=checked,
        counterexamples=len(hits),
        first_counterexample=hits[0][1] if hits else None,
        elapsed_ms=int((time.perf_counter() - started) * 1000),
        hits=hits,
    )


def check_validity(
    formula: Formula,
    bounds: Bounds,
    language: Optional[Iterable[str]] = None,
    *,
    constant: Iterable[str] = (),
    limit: Optional[int] = None,
    jobs: int = 1,
) -> SearchReport:
    """Evaluate ``formula`` at the base of every model within ``bounds``.

    ``language`` defaults to the formula's own predicate symbols; predicates
    listed in ``constant`` only range over domain-constant valuations.  With
    ``limit`` the search stops after that many countermodels.
    """
    if free_variables(formula):
        raise EvaluationError(f"not a sentence: {format_formula(formula)}")
    language = predicate_symbols(formula) if language is None else frozenset(language)
    missing = predicate_symbols(formula) - language
    if missing:
        raise EvaluationError(f"predicates {sorted(missing)} are not in the language")
    unknown = set(constant) - language
    if unknown:
        raise EvaluationError(f"constant predicates {sorted(unknown)} are not in the language")
    started = time.perf_counter()
    checked, hits = run_search(bounds, language, Refuter(formula), constant=constant, limit=limit, jobs=jobs)
    return _report(format_formula(formula), bounds, started, checked, hits)
