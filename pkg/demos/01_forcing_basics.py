# %% [markdown]
# # Forcing in a two-world model
#
# A constant-domain Kripke model: two worlds w0 <= w1, one element `a`.
# P becomes true of `a` only at the later world.

# %%
from kripkecheck import KripkeModel, chain, forces, parse

m = KripkeModel(chain(2), ("a",), {"P": {"w0": frozenset(), "w1": frozenset({"a"})}})
print(m)

# %% [markdown]
# Implication and negation look at every later world, so excluded middle
# fails at the base: P(a) is not yet true, but ~P(a) is ruled out by w1.

# %%
for text in ["P(x)", "~P(x)", "P(x) | ~P(x)", "~~P(x)"]:
    print(f"{text:15} w0: {forces(m, 'w0', parse(text), {'x': 'a'})!s:6} "
          f"w1: {forces(m, 'w1', parse(text), {'x': 'a'})}")

# %% [markdown]
# Quantifiers range over the whole (constant) domain at every world.

# %%
print(forces(m, "w0", parse("exists x. ~~P(x)")))
print(forces(m, "w0", parse("~~exists x. P(x)")))

# %% [markdown]
# On chains the linearity scheme holds; on a fork it can fail.  A bounded
# search finds the smallest failing model.

# %%
from kripkecheck import Bounds, check_validity

lin = parse("forall x. forall y. (P(x) -> Q(y)) | (Q(y) -> P(x))")
print(check_validity(lin, Bounds(3, 1, "linear")).counterexamples)
report = check_validity(lin, Bounds(3, 1), limit=1)
print(report.first_counterexample)
