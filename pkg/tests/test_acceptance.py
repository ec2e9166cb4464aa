"""Acceptance criteria, one check per criterion.

Run under pytest (a PASS/FAIL line per criterion is printed in the terminal
summary) or directly with ``python tests/test_acceptance.py``.
"""

import random
import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from generators import all_assignments, random_formula, random_model  # noqa: E402
from oracles import classical_eval  # noqa: E402

from kripkecheck.enumeration import Bounds, element_names, enumerate_models, enumerate_posets, monotone_valuations  # noqa: E402
from kripkecheck.forcing import forces, valid_in_model  # noqa: E402
from kripkecheck.interpolation import (  # noqa: E402
    GAMMA,
    THETA,
    check_gamma_implies_theta,
    check_theta_implies_delta,
    exists_expansion,
    fo_char_gamma,
    find_cd_countermodel_gamma_theta,
    reference_countermodel,
    verify_lemma,
)
from kripkecheck.model import chain, expand, is_linear, validate  # noqa: E402
from kripkecheck.syntax import And, Atom, Exists, Forall, Implies, Or, BOTTOM, format_formula, free_variables, parse  # noqa: E402

SEED = 20240611


def linear_gamma_theta():
    started = time.perf_counter()
    report = check_gamma_implies_theta(Bounds(3, 3, "linear"))
    seconds = time.perf_counter() - started
    assert report.models_checked == sum(((n + 1) ** m) ** 3 for n in (1, 2, 3) for m in (1, 2, 3))
    assert report.counterexamples == 0
    assert seconds < 120, f"took {seconds:.1f}s"
    return f"{report.models_checked} linear models, 0 counterexamples, {seconds:.1f}s"


def theta_delta_posets():
    report = check_theta_implies_delta(Bounds(4, 2))
    assert report.counterexamples == 0
    return f"{report.models_checked} models, 0 counterexamples"


def lemma_equivalence():
    verdicts = verify_lemma(Bounds(3, 2))
    mismatches = [v.model_index for v in verdicts if not v.consistent]
    assert not mismatches, f"mismatches at {mismatches[:5]}"
    return f"{len(verdicts)} models, 0 mismatches"


def cd_countermodel():
    m = reference_countermodel()
    assert validate(m) == []
    assert fo_char_gamma(m)
    r = exists_expansion(m, "R", GAMMA)
    assert r is not None and forces(expand(m, "R", r), m.base, GAMMA)
    assert not valid_in_model(m, THETA)
    assert not is_linear(m)
    report = find_cd_countermodel_gamma_theta(Bounds(4, 3))
    assert report.counterexamples >= 1
    assert all(not is_linear(hit) for _, hit in report.hits)
    return f"fixture confirmed; search found a non-linear countermodel at stream index {report.first_index}"


def persistence():
    rng = random.Random(SEED)
    checked = 0
    for _ in range(10_000):
        m = random_model(rng, 4, 3)
        phi = random_formula(rng, 5)
        for env in all_assignments(free_variables(phi), m.domain):
            forced = {w: forces(m, w, phi, env) for w in m.worlds}
            for w in m.worlds:
                if forced[w]:
                    bad = [v for v in m.up(w) if not forced[v]]
                    assert not bad, (format_formula(phi), w, bad, env)
            checked += 1
    return f"10000 models, {checked} (model, formula, assignment) triples"


def classical_oracle():
    rng = random.Random(SEED)
    sentences = [random_formula(rng, 4, bound=()) for _ in range(300)]
    models = list(enumerate_models(Bounds(1, 3), ("P", "Q")))
    for m in models:
        ext = {p: m.value(p, m.base) for p in ("P", "Q")}
        for phi in sentences:
            assert valid_in_model(m, phi) == classical_eval(m.domain, ext, phi, {}), format_formula(phi)
    return f"{len(models)} one-world models x {len(sentences)} sentences agree"


def counting_identities():
    for n in range(1, 5):
        for m in range(1, 5):
            got = sum(1 for _ in monotone_valuations(chain(n), element_names(m)))
            assert got == (n + 1) ** m, (n, m, got)
    sizes = [len(enumerate_posets(n)) for n in range(1, 5)]
    assert sizes == [1, 1, 3, 19], sizes
    return "chain counts (n+1)^m for n,m <= 4; posets 1, 1, 3, 19"


def _random_ast(rng, depth):
    names = ("P", "Q", "R", "Foo", "p1", "x_2")
    variables = ("x", "y", "z", "v1", "elem")
    if depth == 0 or rng.random() < 0.15:
        return BOTTOM if rng.random() < 0.1 else Atom(rng.choice(names), rng.choice(variables))
    kind = rng.randrange(5)
    if kind < 3:
        return (And, Or, Implies)[kind](_random_ast(rng, depth - 1), _random_ast(rng, depth - 1))
    return (Exists, Forall)[kind - 3](rng.choice(variables), _random_ast(rng, depth - 1))


def parser_roundtrip():
    rng = random.Random(SEED)
    for _ in range(10_000):
        phi = _random_ast(rng, rng.randint(0, 7))
        assert parse(format_formula(phi)) == phi, format_formula(phi)
    return "10000 ASTs round-trip"


CRITERIA = [
    ("1 linear Gamma -> Theta, worlds <= 3, domain <= 3", linear_gamma_theta),
    ("2 Theta -> Delta on posets, worlds <= 4, domain <= 2", theta_delta_posets),
    ("3 lemma equivalence, worlds <= 3, domain <= 2", lemma_equivalence),
    ("4 CD countermodel to Gamma -> Theta", cd_countermodel),
    ("5 persistence on 10000 random models", persistence),
    ("6 classical oracle on one-world models", classical_oracle),
    ("7 counting identities", counting_identities),
    ("8 parser round-trip on 10000 ASTs", parser_roundtrip),
]

RESULTS: dict[str, tuple[bool, str]] = {}


@pytest.mark.parametrize("name, check", CRITERIA, ids=[name.split()[0] for name, _ in CRITERIA])
def test_criterion(name, check):
    try:
        detail = check()
    except AssertionError as exc:
        RESULTS[name] = (False, str(exc) or "assertion failed")
        raise
    RESULTS[name] = (True, detail)


if __name__ == "__main__":
    failed = 0
    for name, check in CRITERIA:
        try:
            print(f"PASS  {name}: {check()}", flush=True)
        except AssertionError as exc:
            failed += 1
            print(f"FAIL  {name}: {exc}", flush=True)
    sys.exit(1 if failed else 0)
