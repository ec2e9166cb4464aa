# %% [markdown]
# # Gamma -> Theta fails once linearity is dropped
#
# The reference countermodel has a base below three incomparable worlds.
# It forces Gamma (after a suitable choice of R) but not Theta.

# %%
from kripkecheck import (
    GAMMA, THETA, Bounds, expand, exists_expansion, fo_char_gamma,
    find_cd_countermodel_gamma_theta, is_linear, reference_countermodel, valid_in_model,
)

m = reference_countermodel()
print(m)
print("linear:", is_linear(m))
print("first-order Gamma condition:", fo_char_gamma(m))

r = exists_expansion(m, "R", GAMMA)
print("R =", {w: sorted(s) for w, s in r.items()})
print("expansion forces Gamma:", valid_in_model(expand(m, "R", r), GAMMA))
print("forces Theta:", valid_in_model(m, THETA))

# %% [markdown]
# Searching all posets with at most four worlds and three elements finds
# the same model (up to world names) as the first countermodel.  Smaller
# bounds find none.  This takes a few seconds.

# %%
report = find_cd_countermodel_gamma_theta(Bounds(4, 3))
print(report.models_checked, "models examined")
print(report.first_counterexample)
