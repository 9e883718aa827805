"""Independent brute-force references used by the tests."""

from itertools import combinations

BLUE, RED = "blue", "red"


def trivial_words(n, gens=(1, 2)):
    """All words of length ``n`` over ``gens`` and their inverses that freely reduce to 1."""
    letters = [(g, s) for g in gens for s in (1, -1)]
    out = []

    def go(word, stack):
        left = n - len(word)
        if len(stack) > left:
            return
        if left == 0:
            out.append(tuple(word))
            return
        for x in letters:
            if stack and stack[-1] == (x[0], -x[1]):
                go(word + [x], stack[:-1])
            else:
                go(word + [x], stack + [x])

    go([], [])
    return out


CODE = {(BLUE, 1, 1): "a", (BLUE, 1, -1): "b", (BLUE, 2, 1): "c", (BLUE, 2, -1): "d",
        (RED, 1, 1): "e", (RED, 1, -1): "f", (RED, 2, 1): "g", (RED, 2, -1): "h"}
LETTER = {v: k for k, v in CODE.items()}


def cyclic_reducing_words(max_len):
    """One representative per rotation class of words over two blue and two red
    generators whose blue and red projections are both trivial."""
    cache = {n: trivial_words(n) for n in range(0, max_len + 1, 2)}
    for total in range(0, max_len + 1, 2):
        for nb in range(0, total + 1, 2):
            blues = ["".join(CODE[(BLUE, g, s)] for g, s in w) for w in cache[nb]]
            reds = ["".join(CODE[(RED, g, s)] for g, s in w) for w in cache[total - nb]]
            for pos in combinations(range(total), nb):
                mask = [False] * total
                for i in pos:
                    mask[i] = True
                for bw in blues:
                    for rw in reds:
                        ib, ir = iter(bw), iter(rw)
                        w = "".join(next(ib) if m else next(ir) for m in mask)
                        if all(w <= w[i:] + w[:i] for i in range(1, total)):
                            yield tuple(LETTER[x] for x in w)


def all_matchings(positions, word):
    """Perfect matchings of ``positions`` pairing each letter with an inverse letter."""
    if not positions:
        yield []
        return
    first, rest = positions[0], positions[1:]
    c, g, s = word[first]
    for k, other in enumerate(rest):
        if word[other] == (c, g, -s):
            for m in all_matchings(rest[:k] + rest[k + 1 :], word):
                yield [(first, other)] + m


def crosses(p, q):
    a, b = sorted(p)
    c, d = sorted(q)
    return (a < c < b) != (a < d < b)


def planar(m):
    return all(not crosses(m[i], m[j]) for i in range(len(m)) for j in range(i + 1, len(m)))


_planar_cache = {}


def planar_matchings(projection):
    """Non-crossing inverse matchings of a one-colour word, as index pairs into it."""
    if projection not in _planar_cache:
        ms = [m for m in all_matchings(list(range(len(projection))), projection) if planar(m)]
        _planar_cache[projection] = ms
    return _planar_cache[projection]


def brute_disk_area(word):
    """Minimum number of linked blue/red pairs over all non-crossing inverse matchings."""
    blue = [i for i, x in enumerate(word) if x[0] == BLUE]
    red = [i for i, x in enumerate(word) if x[0] == RED]
    bms = [[(blue[i], blue[j]) for i, j in m] for m in planar_matchings(tuple(word[i] for i in blue))]
    rms = [[(red[i], red[j]) for i, j in m] for m in planar_matchings(tuple(word[i] for i in red))]
    return min(sum(crosses(p, q) for p in bm for q in rm) for bm in bms for rm in rms)
