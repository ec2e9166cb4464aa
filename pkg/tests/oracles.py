"""Independent reference computations used to check the package.

None of these reuse the package's evaluator or enumerators.
"""

from itertools import combinations, product

from kripkecheck.syntax import And, Atom, Bottom, Exists, Forall, Implies, Or


def classical_eval(domain, ext, phi, env):
    """Tarskian truth in the structure (domain, ext) with material implication."""
    if isinstance(phi, Atom):
        return env[phi.var] in ext[phi.pred]
    if isinstance(phi, Bottom):
        return False
    if isinstance(phi, And):
        return classical_eval(domain, ext, phi.lhs, env) and classical_eval(domain, ext, phi.rhs, env)
    if isinstance(phi, Or):
        return classical_eval(domain, ext, phi.lhs, env) or classical_eval(domain, ext, phi.rhs, env)
    if isinstance(phi, Implies):
        return (not classical_eval(domain, ext, phi.lhs, env)) or classical_eval(domain, ext, phi.rhs, env)
    if isinstance(phi, Exists):
        return any(classical_eval(domain, ext, phi.body, dict(env, **{phi.var: a})) for a in domain)
    if isinstance(phi, Forall):
        return all(classical_eval(domain, ext, phi.body, dict(env, **{phi.var: a})) for a in domain)
    raise TypeError(phi)


def subsets(items):
    items = list(items)
    return [frozenset(c) for r in range(len(items) + 1) for c in combinations(items, r)]


def brute_monotone_valuations(worlds, leq, domain):
    """Filter all world -> subset maps down to the monotone ones."""
    found = []
    for values in product(subsets(domain), repeat=len(worlds)):
        val = dict(zip(worlds, values))
        if all(val[u] <= val[v] for u in worlds for v in worlds if leq(u, v)):
            found.append(val)
    return found


def brute_posets_with_minimum(n):
    """Strict orders on range(n) in which 0 is below every other point."""
    points = range(n)
    pairs = [(i, j) for i in points for j in points if i != j]
    found = []
    for bits in product((0, 1), repeat=len(pairs)):
        rel = {p for p, b in zip(pairs, bits) if b}
        if any((j, i) in rel for i, j in rel):
            continue
        if any((i, k) not in rel for i, j in rel for j2, k in rel if j == j2 and i != k):
            continue
        if any((0, j) not in rel for j in points if j):
            continue
        found.append(frozenset(rel))
    return found
