# %% [markdown]
# # Weighted designs from nonsingular minors
#
# Allowing signed weights, any k leading eigenvectors can be integrated
# by exactly k vertices: pick rows of the eigenvector matrix that form a
# nonsingular k-by-k minor and solve for the weights.

# %%
import numpy as np

from graphdesigns import Design, catalog_get, design_strength, find_minor_design, spectrum

g = catalog_get("petersen")
s = spectrum(g)
sol = find_minor_design(s, 5)
print("vertices", sol.subset, "weights", np.round(sol.weights, 4))
print("residual", sol.residual, "all positive:", sol.positive)

# %%
rep = design_strength(s, Design.weighted(g, sol.subset, sol.weights))
print("strength of the weighted design:", rep.strength)

# %% [markdown]
# The weights may be negative, in which case the growth bound does not
# apply.  Every k works on every catalogue graph:

# %%
worst = max(find_minor_design(s, k).residual for k in range(1, g.n + 1))
print("worst residual over k = 1..10:", worst)
