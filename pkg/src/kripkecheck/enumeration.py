"""Exhaustive streams of finite frames, valuations and models.

Everything here is deterministic.  Models are emitted in ascending
``(worlds, domain size)`` order, then by frame index, then by valuation
index, where the valuation tuple is ordered lexicographically with the
alphabetically first predicate most significant.  A monotone valuation is
encoded, per domain element, by the up-set of worlds where the element
belongs to the predicate; up-sets are ordered smallest first.
"""

from __future__ import annotations

import string
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable, Iterator, Literal

from .model import Frame, KripkeModel, chain

__all__ = [
    "Bounds",
    "element_names",
    "monotone_valuations",
    "constant_valuations",
    "enumerate_posets",
    "enumerate_frames",
    "enumerate_linear_models",
    "enumerate_models",
    "valuation_lists",
    "count_models",
]

Shape = Literal["linear", "all_posets"]


@dataclass(frozen=True)
class Bounds:
    max_worlds: int
    max_domain: int
    shape: Shape = "all_posets"

    def __post_init__(self):
        if self.max_worlds < 1 or self.max_domain < 1:
            raise ValueError("bounds must be at least 1")
        if self.shape not in ("linear", "all_posets"):
            raise ValueError(f"unknown shape {self.shape!r}")

    def to_dict(self) -> dict:
        return {"max_worlds": self.max_worlds, "max_domain": self.max_domain, "shape": self.shape}


def element_names(m: int) -> tuple[str, ...]:
    letters = string.ascii_lowercase
    return tuple(letters[i] if i < len(letters) else f"a{i}" for i in range(m))


def _from_upsets(frame: Frame, domain: tuple, choice: tuple) -> dict:
    return {w: frozenset(a for a, up in zip(domain, choice) if w in up) for w in frame.worlds}


def monotone_valuations(frame: Frame, domain: Iterable[str]) -> Iterator[dict]:
    """Every monotone valuation over ``frame`` and ``domain``, each once."""
    domain = tuple(domain)
    ups = frame.upsets()
    for choice in product(ups, repeat=len(domain)):
        yield _from_upsets(frame, domain, choice)


def constant_valuations(frame: Frame, domain: Iterable[str]) -> Iterator[dict]:
    """Monotone valuations whose value at each world is empty or the whole domain."""
    full = frozenset(domain)
    empty = frozenset()
    for up in frame.upsets():
        yield {w: full if w in up else empty for w in frame.worlds}


@lru_cache(maxsize=None)
def enumerate_posets(n: int) -> tuple[Frame, ...]:
    """Every labeled partial order on ``w0..w(n-1)`` having ``w0`` as least element.

    The relation among ``w1..w(n-1)`` runs through all bitmasks over the
    ordered pairs in ascending order; those that are strict partial orders
    are kept.  Index 0 is therefore the frame where ``w1..w(n-1)`` form an
    antichain.
    """
    if n < 1:
        raise ValueError("need at least one world")
    worlds = tuple(f"w{i}" for i in range(n))
    top = worlds[1:]
    pairs = [(u, v) for u in top for v in top if u != v]
    frames = []
    for mask in range(1 << len(pairs)):
        rel = {pairs[i] for i in range(len(pairs)) if mask >> i & 1}
        if any((v, u) in rel for u, v in rel):
            continue
        if any((u, w) not in rel for u, v in rel for v2, w in rel if v == v2 and u != w):
            continue
        order = frozenset(rel) | {(w, w) for w in worlds} | {(worlds[0], w) for w in top}
        frames.append(Frame(worlds, order, worlds[0]))
    return tuple(frames)


def enumerate_frames(n: int, shape: Shape) -> tuple[Frame, ...]:
    return (chain(n),) if shape == "linear" else enumerate_posets(n)


def valuation_lists(frame: Frame, domain: tuple, language: Iterable[str], constant: Iterable[str] = ()) -> list:
    """Per predicate (sorted by name), the list of admissible valuations."""
    constant = set(constant)
    return [
        list(constant_valuations(frame, domain) if p in constant else monotone_valuations(frame, domain))
        for p in sorted(language)
    ]


def _models_on(frame: Frame, domain: tuple, language, constant) -> Iterator[KripkeModel]:
    preds = sorted(language)
    lists = valuation_lists(frame, domain, preds, constant)
    for vals in product(*lists):
        yield KripkeModel(frame, domain, dict(zip(preds, vals)))


def enumerate_linear_models(n: int, m: int, language: Iterable[str], constant: Iterable[str] = ()) -> Iterator[KripkeModel]:
    """All models on the chain of ``n`` worlds with a domain of ``m`` elements."""
    if n < 1 or m < 1:
        raise ValueError("need at least one world and one element")
    yield from _models_on(chain(n), element_names(m), tuple(language), tuple(constant))


def enumerate_models(bounds: Bounds, language: Iterable[str], constant: Iterable[str] = ()) -> Iterator[KripkeModel]:
    language, constant = tuple(language), tuple(constant)
    for n in range(1, bounds.max_worlds + 1):
        for m in range(1, bounds.max_domain + 1):
            for frame in enumerate_frames(n, bounds.shape):
                yield from _models_on(frame, element_names(m), language, constant)


def count_models(bounds: Bounds, language: Iterable[str], constant: Iterable[str] = ()) -> int:
    """Length of ``enumerate_models(bounds, language, constant)`` without building it."""
    language, constant = sorted(language), set(constant)
    total = 0
    for n in range(1, bounds.max_worlds + 1):
        for frame in enumerate_frames(n, bounds.shape):
            k = len(frame.upsets())
            for m in range(1, bounds.max_domain + 1):
                size = 1
                for p in language:
                    size *= k if p in constant else k ** m
                total += size
    return total

