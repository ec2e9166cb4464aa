"""Finite constant-domain Kripke models.

A :class:`Frame` is a finite partial order of named worlds with a least
element (the base).  A :class:`KripkeModel` adds a nonempty domain shared by
all worlds and, for each predicate symbol, a monotone valuation mapping every
world to the set of domain elements satisfying the predicate there.

Models are plain immutable values.  Constructors do not check invariants;
:func:`validate` reports violations as data, and the loaders
(:meth:`Frame.from_pairs`, :func:`load_model`) raise :class:`ModelError` on
inputs that cannot even be represented.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Iterable, Mapping

__all__ = [
    "ModelError",
    "Frame",
    "KripkeModel",
    "Valuation",
    "transitive_closure",
    "chain",
    "validate",
    "is_linear",
    "restrict_upset",
    "expand",
    "reduct",
    "is_monotone",
    "model_to_dict",
    "model_from_dict",
    "load_model",
    "dump_model",
]

# world name -> set of element names
Valuation = Mapping[str, frozenset]


class ModelError(ValueError):
    pass


def transitive_closure(worlds: Iterable[str], pairs: Iterable[tuple[str, str]]) -> frozenset:
    """Reflexive-transitive closure of ``pairs`` over ``worlds``."""
    worlds = list(worlds)
    succ = {w: {w} for w in worlds}
    for u, v in pairs:
        if u not in succ or v not in succ:
            raise ModelError(f"order mentions unknown world in pair ({u},{v})")
        succ[u].add(v)
    changed = True
    while changed:
        changed = False
        for u in worlds:
            reach = set(succ[u])
            for v in succ[u]:
                reach |= succ[v]
            if reach != succ[u]:
                succ[u] = reach
                changed = True
    return frozenset((u, v) for u in worlds for v in succ[u])


@dataclass(frozen=True)
class Frame:
    """Worlds, a reflexive order relation on them, and the base world."""

    worlds: tuple[str, ...]
    order: frozenset  # of (u, v) pairs meaning u <= v; reflexive
    base: str

    @classmethod
    def from_pairs(cls, worlds: Iterable[str], pairs: Iterable[tuple[str, str]], base: str) -> Frame:
        """Build a frame from strict pairs, closing them reflexively and transitively.

        Raises :class:`ModelError` for unknown worlds, duplicate names and
        cycles; a frame that loads may still have a base that is not
        minimal, which :func:`validate` reports.
        """
        worlds = tuple(worlds)
        if len(set(worlds)) != len(worlds):
            raise ModelError("duplicate world names")
        order = transitive_closure(worlds, pairs)
        for u, v in order:
            if u != v and (v, u) in order:
                raise ModelError(f"order has a cycle through {u} and {v}")
        return cls(worlds, order, base)

    def leq(self, u: str, v: str) -> bool:
        return (u, v) in self.order

    @cached_property
    def _up(self) -> dict:
        return {w: tuple(v for v in self.worlds if (w, v) in self.order) for w in self.worlds}

    def up(self, w: str) -> tuple[str, ...]:
        """Worlds ``v`` with ``w <= v``, in frame order."""
        try:
            return self._up[w]
        except KeyError:
            raise ModelError(f"unknown world {w!r}") from None

    def covers(self) -> list[tuple[str, str]]:
        """Hasse diagram edges, in frame order."""
        strict = [(u, v) for u in self.worlds for v in self.worlds if u != v and (u, v) in self.order]
        return [
            (u, v)
            for u, v in strict
            if not any(w not in (u, v) and (u, w) in self.order and (w, v) in self.order for w in self.worlds)
        ]

    def upsets(self) -> list[frozenset]:
        """All upward-closed sets of worlds, smallest first, ties broken by frame order."""
        return list(self._upsets)

    @cached_property
    def _upsets(self) -> tuple[frozenset, ...]:
        index = {w: i for i, w in enumerate(self.worlds)}
        found = []
        for bits in product((False, True), repeat=len(self.worlds)):
            chosen = frozenset(w for w, b in zip(self.worlds, bits) if b)
            if all(v in chosen for w in chosen for v in self.up(w)):
                found.append(chosen)
        found.sort(key=lambda s: (len(s), sorted(index[w] for w in s)))
        return tuple(found)


def chain(n: int) -> Frame:
    """The chain w0 < w1 < ... < w(n-1)."""
    worlds = tuple(f"w{i}" for i in range(n))
    order = frozenset((worlds[i], worlds[j]) for i in range(n) for j in range(i, n))
    return Frame(worlds, order, worlds[0])


@dataclass(frozen=True)
class KripkeModel:
    frame: Frame
    domain: tuple[str, ...]
    valuations: Mapping[str, Valuation] = field(default_factory=dict)

    @property
    def worlds(self) -> tuple[str, ...]:
        return self.frame.worlds

    @property
    def order(self) -> frozenset:
        return self.frame.order

    @property
    def base(self) -> str:
        return self.frame.base

    @property
    def language(self) -> frozenset:
        return frozenset(self.valuations)

    def up(self, w: str) -> tuple[str, ...]:
        return self.frame.up(w)

    def value(self, pred: str, world: str) -> frozenset:
        return self.valuations[pred][world]

    def __str__(self):
        return json.dumps(model_to_dict(self))


# -- checks -------------------------------------------------------------------

def is_monotone(frame: Frame, valuation: Valuation) -> bool:
    return all(valuation[u] <= valuation[v] for u, v in frame.order)


def validate(m: KripkeModel) -> list[str]:
    """Every violated model invariant, as messages; empty means valid."""
    problems = []
    worlds, order = m.worlds, m.order
    world_set = set(worlds)
    if len(world_set) != len(worlds):
        problems.append("duplicate world names")
    if len(set(m.domain)) != len(m.domain):
        problems.append("duplicate domain elements")
    if not m.domain:
        problems.append("domain is empty")
    if not worlds:
        problems.append("no worlds")
    stray = sorted({w for pair in order for w in pair} - world_set)
    if stray:
        problems.append(f"order mentions unknown worlds {stray}")
    for w in worlds:
        if (w, w) not in order:
            problems.append(f"order not reflexive at {w}")
    for u, v in product(worlds, repeat=2):
        if u != v and (u, v) in order and (v, u) in order and worlds.index(u) < worlds.index(v):
            problems.append(f"order not antisymmetric at ({u},{v})")
    for u, v, w in product(worlds, repeat=3):
        if (u, v) in order and (v, w) in order and (u, w) not in order:
            problems.append(f"order not transitive at ({u},{v},{w})")
    if m.base not in world_set:
        problems.append(f"base {m.base} is not a world")
    elif any((m.base, w) not in order for w in worlds):
        problems.append("base not minimum")
    elements = set(m.domain)
    for pred in sorted(m.valuations):
        val = m.valuations[pred]
        missing = [w for w in worlds if w not in val]
        if missing:
            problems.append(f"valuation for {pred} missing worlds {missing}")
            continue
        extra = sorted(set(val) - world_set)
        if extra:
            problems.append(f"valuation for {pred} mentions unknown worlds {extra}")
        for w in worlds:
            outside = sorted(set(val[w]) - elements)
            if outside:
                problems.append(f"valuation for {pred} at {w} mentions unknown elements {outside}")
        for u, v in product(worlds, repeat=2):
            if u != v and (u, v) in order and not set(val[u]) <= set(val[v]):
                problems.append(f"valuation for {pred} not monotone at ({u},{v})")
    return problems


def is_linear(m: KripkeModel | Frame) -> bool:
    frame = m.frame if isinstance(m, KripkeModel) else m
    return all((u, v) in frame.order or (v, u) in frame.order for u, v in product(frame.worlds, repeat=2))


# -- constructions ------------------------------------------------------------

def restrict_upset(m: KripkeModel, w: str) -> KripkeModel:
    """The submodel on the worlds above ``w``, with ``w`` as its base."""
    kept = m.up(w)
    keep = set(kept)
    frame = Frame(kept, frozenset(p for p in m.order if p[0] in keep and p[1] in keep), w)
    valuations = {p: {v: val[v] for v in kept} for p, val in m.valuations.items()}
    return KripkeModel(frame, m.domain, valuations)


def expand(m: KripkeModel, pred: str, valuation: Valuation) -> KripkeModel:
    """``m`` with one more predicate symbol interpreted by ``valuation``."""
    if pred in m.valuations:
        raise ModelError(f"predicate {pred} already interpreted")
    val = {w: frozenset(valuation.get(w, ())) for w in m.worlds}
    if not is_monotone(m.frame, val):
        raise ModelError(f"valuation for {pred} is not monotone")
    return KripkeModel(m.frame, m.domain, {**m.valuations, pred: val})


def reduct(m: KripkeModel, language: Iterable[str]) -> KripkeModel:
    """Forget every predicate symbol outside ``language``."""
    keep = set(language)
    return KripkeModel(m.frame, m.domain, {p: v for p, v in m.valuations.items() if p in keep})


# -- JSON ---------------------------------------------------------------------

def model_to_dict(m: KripkeModel) -> dict:
    rank = {a: i for i, a in enumerate(m.domain)}
    return {
        "worlds": list(m.worlds),
        "base": m.base,
        "order": [list(pair) for pair in m.frame.covers()],
        "domain": list(m.domain),
        "valuation": {
            p: {w: sorted(m.valuations[p][w], key=rank.__getitem__) for w in m.worlds}
            for p in sorted(m.valuations)
        },
    }


def model_from_dict(data: Mapping) -> KripkeModel:
    """Build a model from its JSON object form.

    Missing world keys in a valuation mean the empty set.  Raises
    :class:`ModelError` when the object is malformed; invariant checks are
    left to :func:`validate`.
    """
    try:
        worlds = [str(w) for w in data["worlds"]]
        base = str(data["base"])
        pairs = [(str(u), str(v)) for u, v in data.get("order", [])]
        domain = tuple(str(a) for a in data["domain"])
        raw = data.get("valuation", {})
        valuations = {}
        for pred, per_world in raw.items():
            unknown = set(per_world) - set(worlds)
            if unknown:
                raise ModelError(f"valuation for {pred} mentions unknown worlds {sorted(unknown)}")
            valuations[str(pred)] = {w: frozenset(str(a) for a in per_world.get(w, ())) for w in worlds}
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, ModelError):
            raise
        raise ModelError(f"malformed model object: {exc!r}") from exc
    return KripkeModel(Frame.from_pairs(worlds, pairs, base), domain, valuations)


def load_model(path) -> KripkeModel:
    with open(path, encoding="utf-8") as fh:
        return model_from_dict(json.load(fh))


def dump_model(m: KripkeModel, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(model_to_dict(m), fh, indent=2)
        fh.write("\n")
