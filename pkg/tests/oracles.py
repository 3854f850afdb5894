"""Independent reference implementations used only as test oracles."""
import numpy as np


def straight_line_orbit(x, y, mu1, mu2, gamma1, gamma2, length):
    out = []
    for _ in range(length):
        nx = mu1 * x * (1 - x) + gamma1 * y ** 2
        ny = mu2 * y * (1 - y) + gamma2 * (x ** 2 + x * y)
        x, y = nx, ny
        out.append((x, y))
    return out


def brute_force_sort_index(seq):
    """Selection-style index sort: repeatedly take the smallest unused value, lowest index on ties."""
    remaining = list(range(len(seq)))
    order = []
    while remaining:
        best = remaining[0]
        for idx in remaining[1:]:
            if seq[idx] < seq[best]:
                best = idx
        order.append(best)
        remaining.remove(best)
    return order


def sdm_by_definition(column):
    n = len(column)
    m = [[0] * n for _ in range(n)]
    for r in range(n):
        for c in range(n):
            if r < c:
                m[r][c] = (column[r] - column[c] + 256) % 256
            elif r > c:
                m[r][c] = (column[c] - column[r] + 256) % 256
    return m


def naive_kpa(plains, ciphers, seed):
    """Full O(L^2 n^2) scan over all unconsumed cipher positions for every plain position.

    Shares only the documented random-draw protocol with the indexed attack.
    """
    plains = [np.asarray(p, dtype=np.int64) for p in plains]
    ciphers = [np.asarray(c, dtype=np.int64) for c in ciphers]
    n = len(plains)
    length = len(plains[0])
    pairs = [(r, c) for r in range(n) for c in range(r + 1, n)]
    cipher_sdm = np.stack([(ciphers[r] - ciphers[c]) % 256 for r, c in pairs], axis=1)
    rng = np.random.default_rng(seed)
    draws = rng.random(length)
    used = np.zeros(length, dtype=bool)
    v = np.full(length, -1, dtype=np.int64)
    deferred = []
    for i in range(length):
        target = np.array([(plains[r][i] - plains[c][i]) % 256 for r, c in pairs])
        match = np.all(cipher_sdm == target, axis=1) & ~used
        cands = np.flatnonzero(match)
        if len(cands) == 0:
            deferred.append(i)
            continue
        j = cands[int(draws[i] * len(cands))]
        v[i] = j
        used[j] = True
    if deferred:
        v[deferred] = rng.permutation(np.flatnonzero(~used))
    k = (ciphers[0][v] - plains[0]) % 256
    return v, k
