"""Average encode+decode cost grows linearly with message length.

Random words almost never need more than a couple of repairs, and the
window scan is a handful of vectorized passes, so doubling n roughly
doubles wall time.
"""

import time

import numpy as np

from lpacodes import Word, decode, derive_params, encode

rng = np.random.default_rng(2)

print(f"{'n':>9} {'l':>3} {'ms/word':>9} {'repairs/word':>13}")
previous = None
for n in (10**4, 3 * 10**4, 10**5, 3 * 10**5, 10**6):
    params = derive_params(2, n, 4)
    # warm-up outside the clock
    w = Word(rng.integers(0, 2, size=n, dtype=np.int64), 2)
    decode(encode(w, params)[0], params)

    words, busy, repairs = 30, 0.0, 0
    for _ in range(words):
        x = Word(rng.integers(0, 2, size=n, dtype=np.int64), 2)
        t0 = time.perf_counter()
        y, trace = encode(x, params)
        out = decode(y, params)
        busy += time.perf_counter() - t0
        repairs += len(trace.steps)
        assert out == x
    per_word = busy / words * 1e3
    note = ""
    if previous is not None:
        note = f"   ({per_word / previous:.1f}x over previous row)"
    print(f"{n:>9} {params.l:>3} {per_word:>9.3f} {repairs / words:>13.2f}{note}")
    previous = per_word
