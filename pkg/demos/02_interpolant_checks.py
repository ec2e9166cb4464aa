# %% [markdown]
# # Gamma, Theta and Delta at small bounds
#
# Gamma mentions P, Q, R; Delta mentions P, Q, S; Theta only P and Q.
# Over linear models Gamma entails Theta, and Theta entails Delta over all
# posets once S is read as a proposition (a domain-constant predicate).

# %%
from kripkecheck import (
    DELTA, GAMMA, THETA, Bounds, check_gamma_implies_theta, check_theta_implies_delta,
    format_formula, verify_lemma,
)

for name, phi in [("Gamma", GAMMA), ("Theta", THETA), ("Delta", DELTA)]:
    print(f"{name}: {format_formula(phi)}")

# %%
print(check_gamma_implies_theta(Bounds(3, 2, "linear")).to_json())

# %%
print(check_theta_implies_delta(Bounds(3, 2)).to_json())

# %% [markdown]
# The second-order readings of Gamma (exists R) and Delta (forall S) have
# first-order characterizations over the shared language.  Brute force over
# every expansion agrees with them.

# %%
verdicts = verify_lemma(Bounds(3, 2))
print(len(verdicts), "models,", sum(not v.consistent for v in verdicts), "mismatches")
print(sum(v.fo_gamma for v in verdicts), "satisfy the Gamma side")
