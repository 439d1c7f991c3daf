# %% [markdown]
# # Chunked accumulation and merge
#
# Accumulators built over separate pieces of a stream combine exactly into
# the accumulator of the whole stream, up to rounding.  That is all a
# parallel reduction needs.

# %%
import numpy as np

from streammoments import MomentAccumulator, accumulate_chunks, chunk, merge, merge_many

rng = np.random.default_rng(1)
data = rng.lognormal(0.0, 0.5, 200_000).tolist()

sequential = MomentAccumulator.from_values(data)
pieces = [MomentAccumulator.from_values(c) for c in chunk(data, 25_000)]
folded = merge_many(pieces)

for name, a, b in zip(("M2", "M3", "M4"), sequential.central_sums, folded.central_sums):
    print(f"{name}: sequential {a:.12e}  merged {b:.12e}")

# %% [markdown]
# The empty accumulator is an exact identity, and the fold order is fixed
# (left to right), so the result does not depend on how many workers ran.

# %%
assert merge(sequential, MomentAccumulator(4)) == sequential
if __name__ == "__main__":  # worker processes re-import this file on spawn platforms
    pooled = accumulate_chunks(chunk(data, 25_000), order=4, jobs=2)
    assert pooled == folded
    print("worker count does not change the result")
