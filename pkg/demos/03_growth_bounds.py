# %% [markdown]
# # How fast a design's neighbourhoods grow
#
# If a positively weighted design integrates every eigenvector whose
# frequency exceeds lambda, the radius-k neighbourhood of the design must
# contain at least ``min(lambda^(-2k), n) / 2`` vertices.  Equal weights
# and the sum of squared weights give sharper forms.

# %%
from graphdesigns import Design, catalog_get, check_theorem, growth_profile, spectrum

g = catalog_get("dyck")
s = spectrum(g)
d = Design.equal(g, [0, 3, 7, 10, 14, 17, 20, 29])
cert = check_theorem(g, s, d)
print(f"lambda = {cert.lam:.4f} ({cert.lam_source}); passed: {cert.passed}")
for row in cert.rows:
    print(f"  radius {row.k}: observed {row.observed:3d}  general {row.general:7.2f}  "
          f"equal {row.equal:7.2f}  sharp {row.sharp:7.2f}")

# %% [markdown]
# The observed ball sizes come from a breadth-first search; the bound is
# checked radius by radius up to the design's eccentricity.

# %%
print(growth_profile(g, d.subset).sizes)
