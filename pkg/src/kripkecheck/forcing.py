"""The forcing relation on finite constant-domain Kripke models.

:func:`forces` is the reference evaluator: a direct structural recursion
over the seven clauses (atoms, ``false``, the three connectives, two
quantifiers), where implication looks at every world above the current one
and both quantifiers range over the whole constant domain.

:func:`compile_formula` produces an equivalent evaluator as nested closures.
It performs the same recursion with the node dispatch done once, up front,
and is what the exhaustive searches use.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, Mapping

from .model import KripkeModel
from .syntax import (
    And,
    Atom,
    Bottom,
    Exists,
    Forall,
    Formula,
    Implies,
    Or,
    format_formula,
    free_variables,
    predicate_symbols,
)

__all__ = [
    "EvaluationError",
    "forces",
    "valid_in_model",
    "compile_formula",
    "Evaluator",
]

Assignment = Mapping[str, str]
Evaluator = Callable[[KripkeModel, str, dict], bool]


class EvaluationError(ValueError):
    """Raised when a forcing query is ill-formed for the given model."""


def _check_query(m: KripkeModel, world: str, env: Assignment, phi: Formula) -> None:
    if world not in m.frame._up:
        raise EvaluationError(f"unknown world {world!r}")
    unbound = free_variables(phi) - set(env)
    if unbound:
        raise EvaluationError(f"unbound free variables {sorted(unbound)} in {format_formula(phi)}")
    unknown = predicate_symbols(phi) - m.language
    if unknown:
        raise EvaluationError(f"unknown predicates {sorted(unknown)}")
    domain = set(m.domain)
    stray = {x: a for x, a in env.items() if a not in domain}
    if stray:
        raise EvaluationError(f"assignment targets outside the domain: {stray}")


def forces(m: KripkeModel, world: str, phi: Formula, assignment: Assignment | None = None) -> bool:
    """Whether ``world`` forces ``phi`` in ``m`` under ``assignment``."""
    env = dict(assignment or {})
    _check_query(m, world, env, phi)
    return _forces(m, world, env, phi)


def _forces(m: KripkeModel, w: str, env: dict, phi: Formula) -> bool:
    match phi:
        case Atom(pred, var):
            return env[var] in m.valuations[pred][w]
        case Bottom():
            return False
        case And(lhs, rhs):
            return _forces(m, w, env, lhs) and _forces(m, w, env, rhs)
        case Or(lhs, rhs):
            return _forces(m, w, env, lhs) or _forces(m, w, env, rhs)
        case Implies(lhs, rhs):
            return all(not _forces(m, v, env, lhs) or _forces(m, v, env, rhs) for v in m.up(w))
        case Exists(var, body):
            return any(_forces(m, w, {**env, var: a}, body) for a in m.domain)
        case Forall(var, body):
            return all(_forces(m, w, {**env, var: a}, body) for a in m.domain)
    raise TypeError(f"not a formula: {phi!r}")


def valid_in_model(m: KripkeModel, phi: Formula) -> bool:
    """Whether the sentence ``phi`` is forced at the base of ``m``."""
    if free_variables(phi):
        raise EvaluationError(f"not a sentence: {format_formula(phi)}")
    return forces(m, m.base, phi)


@lru_cache(maxsize=256)
def compile_formula(phi: Formula) -> Evaluator:
    """Closure-compiled evaluator ``f(model, world, env) -> bool``.

    No argument checking is done; callers guarantee the query is
    well-formed.  ``env`` is never mutated.
    """
    match phi:
        case Atom(pred, var):
            def atom(m, w, env):
                return env[var] in m.valuations[pred][w]
            return atom
        case Bottom():
            return lambda m, w, env: False
        case And(lhs, rhs):
            f, g = compile_formula(lhs), compile_formula(rhs)
            return lambda m, w, env: f(m, w, env) and g(m, w, env)
        case Or(lhs, rhs):
            f, g = compile_formula(lhs), compile_formula(rhs)
            return lambda m, w, env: f(m, w, env) or g(m, w, env)
        case Implies(lhs, Bottom()):
            f = compile_formula(lhs)

            def negation(m, w, env):
                for v in m.frame._up[w]:
                    if f(m, v, env):
                        return False
                return True
            return negation
        case Implies(lhs, rhs):
            f, g = compile_formula(lhs), compile_formula(rhs)

            def implication(m, w, env):
                for v in m.frame._up[w]:
                    if f(m, v, env) and not g(m, v, env):
                        return False
                return True
            return implication
        case Exists(var, body):
            f = compile_formula(body)

            def exists(m, w, env):
                inner = dict(env)
                for a in m.domain:
                    inner[var] = a
                    if f(m, w, inner):
                        return True
                return False
            return exists
        case Forall(var, body):
            f = compile_formula(body)

            def forall(m, w, env):
                inner = dict(env)
                for a in m.domain:
                    inner[var] = a
                    if not f(m, w, inner):
                        return False
                return True
            return forall
    raise TypeError(f"not a formula: {phi!r}")
