# %% [markdown]
# # Counting the arithmetic in one update
#
# `count_update_ops` feeds values through the real update code with the
# state held in counted floats, so the tally is of the code that ships.

# %%
from streammoments.flops import count_update_ops

values = [0.3, -1.2, 4.5, 2.0]
for path, order in [("order4", 4), ("generic", 4), ("generic", 2), ("generic", 8)]:
    counter, updates = count_update_ops(values, order, path)
    per = counter.per_update(updates)
    print(f"{path:>7} order {order}: {per['flops']:g} FLOPs, {per['divs']:g} division per update")

# %% [markdown]
# The order-4 update costs 25 operations with a single division; the
# division produces delta / n, and every higher power reuses it.
