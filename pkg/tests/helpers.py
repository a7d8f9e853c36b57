"""Shared test utilities: random tree shapes, random path multisets, and
brute-force decomposition search used as an independent cross-check."""

from itertools import combinations, combinations_with_replacement

from grasshilb import PathMultiset, Tree, caterpillar, parse_tree


def random_tree_text(n_leaves, rng):
    """Nested-parentheses text for a random tree shape with n_leaves leaves.

    Every recursive split produces a 3-valent shape, so the result always
    parses.
    """
    def build(k):
        if k == 1:
            return "*"
        split = rng.randint(1, k - 1)
        return "(%s,%s)" % (build(split), build(k - split))

    if n_leaves < 2:
        raise ValueError("need at least 2 leaves")
    split = rng.randint(1, n_leaves - 1)
    return "(%s,%s)" % (build(split), build(n_leaves - split))


def random_tree(n_leaves, rng):
    return parse_tree(random_tree_text(n_leaves, rng))


def random_multiset(n_leaves, rng, max_paths=6):
    """A uniform-ish random multiset of leaf pairs, not necessarily
    canonical."""
    pairs = list(combinations(range(1, n_leaves + 1), 2))
    count = rng.randint(0, max_paths)
    counts = {}
    for _ in range(count):
        pair = rng.choice(pairs)
        counts[pair] = counts.get(pair, 0) + 1
    return PathMultiset.from_dict(counts)


def all_multisets(n_leaves, max_paths):
    """Every multiset of at most max_paths leaf pairs."""
    pairs = list(combinations(range(1, n_leaves + 1), 2))
    for size in range(max_paths + 1):
        for combo in combinations_with_replacement(pairs, size):
            counts = {}
            for pair in combo:
                counts[pair] = counts.get(pair, 0) + 1
            yield PathMultiset.from_dict(counts)


def brute_force_decompositions(tree, values):
    """All path multisets summing to the given edge vector, found by
    backtracking with no canonicity filter.  Independent of decompose()."""
    pairs = list(combinations(range(1, tree.n_leaves + 1), 2))
    paths = [tree.path(i, j).indicator for i, j in pairs]
    found = []

    def recurse(idx, residual, counts):
        if not any(residual):
            found.append(dict(counts))
            return
        if idx == len(pairs):
            return
        recurse(idx + 1, residual, counts)
        path = paths[idx]
        current = list(residual)
        mult = 0
        while all(c >= p for c, p in zip(current, path)):
            current = [c - p for c, p in zip(current, path)]
            mult += 1
            counts[pairs[idx]] = mult
            recurse(idx + 1, tuple(current), counts)
        counts.pop(pairs[idx], None)

    recurse(0, tuple(values), {})
    return found
