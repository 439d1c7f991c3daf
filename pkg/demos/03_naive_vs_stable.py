# %% [markdown]
# # Why not just keep sums of powers?
#
# The textbook one-pass approach keeps S_k = sum(x**k) and expands them into
# central moments at the end.  With a large mean and a small spread, those
# sums are huge and nearly equal, and their difference is rounding noise.

# %%
import numpy as np

from streammoments import MomentAccumulator, twopass_central_moments
from streammoments.oracles import naive_central_moments

data = [1e9, 1e9 + 1, 1e9 + 2]   # deviations -1, 0, 1: variance is exactly 2/3
_, naive = naive_central_moments(data, 2)
print("naive  variance", naive[0] / 3)
print("stable variance", MomentAccumulator.from_values(data, 2).variance())

# %% [markdown]
# The same at scale: a million Gaussian values around 1e9.

# %%
rng = np.random.default_rng(20080917)
big = (1e9 + rng.standard_normal(10**6)).tolist()
_, truth = twopass_central_moments(big, 4)
_, naive = naive_central_moments(big, 4)
stable = MomentAccumulator.from_values(big, 4)
n = len(big)
print(f"two-pass variance {truth[0] / n:.9f}")
print(f"stable   variance {stable.variance():.9f}")
print(f"naive    variance {naive[0] / n:.9g}")

# %% [markdown]
# The CLI runs this comparison too: `streammoments compare`.
