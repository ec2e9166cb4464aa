"""The interpolant for Gamma -> Delta and its bounded verification.

Gamma speaks about P, Q, R and Delta about P, Q, S; Theta uses only the
shared symbols P and Q.  Over linear models Gamma -> Theta holds, over all
models Theta -> Delta holds, while Gamma -> Theta fails on some non-linear
model.  This module checks each of those facts exhaustively within finite
bounds, and cross-checks the first-order descriptions of "some expansion by
R forces Gamma" and "every expansion by S forces Delta" against brute-force
search over the expansions.

Delta's propositional letter S is represented by a unary predicate that is
only ever given domain-constant valuations (empty or everything at each
world), with its argument bound by a vacuous outer quantifier.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Optional

from .enumeration import Bounds, constant_valuations, enumerate_models, monotone_valuations
from .forcing import compile_formula, valid_in_model
from .model import Frame, KripkeModel, expand, is_linear
from .search import ChunkData, SearchReport, _report, check_validity, run_search
from .syntax import Formula, Implies, format_formula, parse, predicate_symbols

__all__ = [
    "GAMMA",
    "THETA",
    "DELTA",
    "THETA_LEFT",
    "THETA_RIGHT",
    "GAMMA_TO_THETA",
    "THETA_TO_DELTA",
    "NAMED_FORMULAS",
    "reference_countermodel",
    "fo_char_gamma",
    "fo_char_delta",
    "exists_expansion",
    "forall_expansions",
    "LemmaVerdict",
    "verify_lemma",
    "check_gamma_implies_theta",
    "check_theta_implies_delta",
    "find_cd_countermodel_gamma_theta",
    "GammaThetaScanner",
]

GAMMA = parse("forall x. exists y. (P(y) & (Q(y) -> R(x))) & ~forall x. R(x)")
THETA = parse("forall x. (~P(x) | exists y. (P(y) & (Q(y) -> P(x)))) & ~forall x. (~P(x) | Q(x))")
DELTA = parse("forall z. ((forall x. (P(x) -> (Q(x) | S(z)))) -> S(z))")

# The quantifier prefix of the strings above scopes over the final negated
# conjunct as well; on a nonempty domain that is equivalent to closing the
# first conjunct off.  The conjuncts of THETA, bracketed the narrow way:
THETA_LEFT = parse("forall x. (~P(x) | exists y. (P(y) & (Q(y) -> P(x))))")
THETA_RIGHT = parse("~forall x. (~P(x) | Q(x))")

GAMMA_TO_THETA = Implies(GAMMA, THETA)
THETA_TO_DELTA = Implies(THETA, DELTA)

NAMED_FORMULAS = {
    "gamma": GAMMA,
    "theta": THETA,
    "delta": DELTA,
    "gamma_to_theta": GAMMA_TO_THETA,
    "theta_to_delta": THETA_TO_DELTA,
}


def reference_countermodel() -> KripkeModel:
    """Four worlds, three elements: u, v, t pairwise incomparable above w0.

    Gamma is forced at w0 for a suitable R while Theta is not: ``a`` enters
    P at u, and each candidate witness in P(w0) is refuted by one of v, t.
    """
    worlds = ("w0", "u", "v", "t")
    frame = Frame.from_pairs(worlds, [("w0", "u"), ("w0", "v"), ("w0", "t")], "w0")
    p = {"w0": {"b", "c"}, "u": {"a", "b", "c"}, "v": {"b", "c"}, "t": {"b", "c"}}
    q = {"w0": set(), "u": set(), "v": {"b"}, "t": {"c"}}
    valuations = {
        "P": {w: frozenset(s) for w, s in p.items()},
        "Q": {w: frozenset(s) for w, s in q.items()},
    }
    return KripkeModel(frame, ("a", "b", "c"), valuations)


def _require_pq(m: KripkeModel) -> None:
    if m.language != {"P", "Q"}:
        raise ValueError(f"expected a model over {{P, Q}}, got {sorted(m.language)}")


def fo_char_gamma(m: KripkeModel) -> bool:
    """Every world w has some a in P(base) with a not in Q(w)."""
    _require_pq(m)
    base_p = m.value("P", m.base)
    return all(base_p - m.value("Q", w) for w in m.worlds)


def fo_char_delta(m: KripkeModel) -> bool:
    """Every world w has some a in P(w) with a not in Q(w)."""
    _require_pq(m)
    return all(m.value("P", w) - m.value("Q", w) for w in m.worlds)


def _expansions(m: KripkeModel, constant_valued: bool):
    gen = constant_valuations if constant_valued else monotone_valuations
    return gen(m.frame, m.domain)


def exists_expansion(m: KripkeModel, pred: str, phi: Formula, constant_valued: bool = False) -> Optional[dict]:
    """First valuation of ``pred`` whose expansion of ``m`` forces ``phi`` at the base."""
    for v in _expansions(m, constant_valued):
        if valid_in_model(expand(m, pred, v), phi):
            return v
    return None


def forall_expansions(m: KripkeModel, pred: str, phi: Formula, constant_valued: bool = False) -> Optional[dict]:
    """First valuation of ``pred`` whose expansion fails ``phi``; None if all succeed."""
    for v in _expansions(m, constant_valued):
        if not valid_in_model(expand(m, pred, v), phi):
            return v
    return None


@dataclass(frozen=True)
class LemmaVerdict:
    model_index: int
    fo_gamma: bool
    so_gamma: bool
    fo_delta: bool
    so_delta: bool

    @property
    def consistent(self) -> bool:
        return self.fo_gamma == self.so_gamma and self.fo_delta == self.so_delta


def verify_lemma(bounds: Bounds) -> list[LemmaVerdict]:
    """Compare both first-order characterizations with brute force on every {P, Q} model."""
    verdicts = []
    for i, m in enumerate(enumerate_models(bounds, ("P", "Q"))):
        verdicts.append(
            LemmaVerdict(
                model_index=i,
                fo_gamma=fo_char_gamma(m),
                so_gamma=exists_expansion(m, "R", GAMMA) is not None,
                fo_delta=fo_char_delta(m),
                so_delta=forall_expansions(m, "S", DELTA, constant_valued=True) is None,
            )
        )
    return verdicts


def check_gamma_implies_theta(bounds: Bounds, *, jobs: int = 1) -> SearchReport:
    """Evaluate Gamma -> Theta on every model over {P, Q, R} within ``bounds``."""
    return check_validity(GAMMA_TO_THETA, bounds, ("P", "Q", "R"), jobs=jobs)


@dataclass(frozen=True)
class ThetaDeltaScanner:
    """Finds models over {P, Q, S} whose base does not force Theta -> Delta.

    The base sees every world, so the implication holds iff Delta holds
    wherever Theta does.  Theta does not mention S, so the worlds forcing it
    are computed once per {P, Q} reduct, and reducts where it holds nowhere
    are accepted without looking at S.  The two sides can be swapped out,
    as long as the antecedent does not mention S.
    """

    antecedent: Formula = THETA
    consequent: Formula = DELTA

    def __call__(self, data: ChunkData, limit):
        assert data.preds == ("P", "Q", "S") and "S" not in predicate_symbols(self.antecedent)
        theta = compile_formula(self.antecedent)
        delta = compile_formula(self.consequent)
        frame, domain = data.frame, data.domain
        p_vals, q_vals, s_vals = data.lists
        hits = []
        i = 0
        for p in p_vals:
            for q in q_vals:
                reduct = KripkeModel(frame, domain, {"P": p, "Q": q})
                theta_worlds = [w for w in frame.worlds if theta(reduct, w, {})]
                if not theta_worlds:
                    i += len(s_vals)
                    continue
                for s in s_vals:
                    model = KripkeModel(frame, domain, {"P": p, "Q": q, "S": s})
                    if not all(delta(model, w, {}) for w in theta_worlds):
                        hits.append((i, model))
                        if limit is not None and len(hits) >= limit:
                            return i + 1, hits
                    i += 1
        return data.chunk.size, hits


def check_theta_implies_delta(bounds: Bounds, *, jobs: int = 1) -> SearchReport:
    """Evaluate Theta -> Delta on every model over {P, Q, S}, S domain-constant."""
    started = time.perf_counter()
    checked, hits = run_search(bounds, ("P", "Q", "S"), ThetaDeltaScanner(), constant=("S",), jobs=jobs)
    return _report(format_formula(THETA_TO_DELTA), bounds, started, checked, hits)


@dataclass(frozen=True)
class GammaThetaScanner:
    """Finds models over {P, Q, R} whose base forces Gamma but not Theta.

    R is the last predicate of the stream, so each {P, Q} reduct owns a
    contiguous run of R-expansions.  Theta does not mention R, so it is
    evaluated once per reduct.  With ``prune`` set, a reduct is skipped
    unless its base also forces the right conjunct of Theta: Gamma implies
    that conjunct in every model, so no R can produce a hit there.
    """

    prune: bool = True

    def __call__(self, data: ChunkData, limit):
        assert data.preds == ("P", "Q", "R")
        gamma = compile_formula(GAMMA)
        theta = compile_formula(THETA)
        theta_right = compile_formula(THETA_RIGHT)
        frame, domain = data.frame, data.domain
        p_vals, q_vals, r_vals = data.lists
        per_reduct = len(r_vals)
        hits = []
        i = 0
        for p in p_vals:
            for q in q_vals:
                reduct = KripkeModel(frame, domain, {"P": p, "Q": q})
                base = frame.base
                if (self.prune and not theta_right(reduct, base, {})) or theta(reduct, base, {}):
                    i += per_reduct
                    continue
                for r in r_vals:
                    model = KripkeModel(frame, domain, {"P": p, "Q": q, "R": r})
                    if gamma(model, base, {}):
                        hits.append((i, model))
                        if limit is not None and len(hits) >= limit:
                            return i + 1, hits
                    i += 1
        return data.chunk.size, hits


def find_cd_countermodel_gamma_theta(
    bounds: Bounds, *, limit: Optional[int] = 1, prune: bool = True, jobs: int = 1
) -> SearchReport:
    """Search models over {P, Q, R} for one forcing Gamma but not Theta at the base.

    Stops after ``limit`` countermodels (``None`` for all of them).  Every
    countermodel found must be non-linear; a linear one raises
    ``AssertionError`` since it would refute Gamma -> Theta over linear models.
    """
    started = time.perf_counter()
    checked, hits = run_search(bounds, ("P", "Q", "R"), GammaThetaScanner(prune), limit=limit, jobs=jobs)
    for index, model in hits:
        if is_linear(model):
            raise AssertionError(f"linear countermodel at stream index {index}")
    return _report(format_formula(GAMMA_TO_THETA), bounds, started, checked, hits)
