"""Deterministic RNG stream derivation.

Every random draw in the package flows from one master seed through
`substream`, so any pipeline stage can be re-run (or parallelized across
samples) and still produce bit-identical output.
"""

import numpy as np

# Stream domains; keep values stable, they are part of reproducibility.
DOM_SAMPLE = 0      # topology + fading of one dataset sample
DOM_RANDOM_ALLOC = 1
DOM_INIT = 2        # weight initialization
DOM_SHUFFLE = 3     # epoch shuffles
DOM_DROPOUT = 4


def substream(master_seed: int, *key: int) -> np.random.Generator:
    """Independent generator for (master_seed, key...). Same args, same bits."""
    ss = np.random.SeedSequence(entropy=int(master_seed), spawn_key=tuple(int(k) for k in key))
    return np.random.default_rng(ss)
