"""Brute-force baselines.

Nothing here imports the fast paths. Group arithmetic is redone from the
index convention alone: cyclic groups are Z_n; a product group over p with
second-component width w stores (first, second) at first' * w + second',
where a multiplicative component value v is stored as v - 1.
"""

from __future__ import annotations

import math
from itertools import combinations, product

from .errors import SizeExceeded

SIDON_LIMIT = 64
TUPLE_LIMIT = 128
COUNT_LIMIT = 1 << 12
CYCLIC_SEARCH_LIMIT = 60
INTERVAL_SEARCH_LIMIT = 40


class NaiveGroup:
    """Element arithmetic by explicit pairs; slow on purpose."""

    def __init__(self, variant: str, n: int):
        self.variant = variant
        self.n = n
        kinds = {"cyclic": None, "addadd": "++", "addmul": "+*", "mulmul": "**"}
        self.kinds = kinds[variant]
        if self.kinds is None:
            self.order = n
        else:
            sizes = [n if c == "+" else n - 1 for c in self.kinds]
            self.order = sizes[0] * sizes[1]
            self.width = sizes[1]

    def _split(self, x):
        i, j = x // self.width, x % self.width
        a = i + (1 if self.kinds[0] == "*" else 0)
        b = j + (1 if self.kinds[1] == "*" else 0)
        return a, b

    def _join(self, a, b):
        i = a - (1 if self.kinds[0] == "*" else 0)
        j = b - (1 if self.kinds[1] == "*" else 0)
        return i * self.width + j

    def add(self, x, y):
        if self.kinds is None:
            return (x + y) % self.n
        xa, xb = self._split(x)
        ya, yb = self._split(y)
        comps = []
        for kind, u, v in zip(self.kinds, (xa, xb), (ya, yb)):
            comps.append((u * v) % self.n if kind == "*" else (u + v) % self.n)
        return self._join(*comps)

    def neg(self, x):
        # search for the inverse instead of computing it
        zero = self.zero()
        for y in range(self.order):
            if self.add(x, y) == zero:
                return y
        raise AssertionError("no inverse")

    def zero(self):
        if self.kinds is None:
            return 0
        return self._join(*(1 if c == "*" else 0 for c in self.kinds))

    def sub(self, x, y):
        return self.add(x, self.neg(y))


def oracle_sidon(elements, variant: str, n: int) -> bool:
    """Test a + b = c + d  =>  {a, b} = {c, d} over all quadruples."""
    elements = list(elements)
    if len(elements) > SIDON_LIMIT:
        raise SizeExceeded(f"oracle limited to {SIDON_LIMIT} elements")
    grp = NaiveGroup(variant, n)
    for a, b, c, d in product(elements, repeat=4):
        if grp.add(a, b) == grp.add(c, d) and sorted((a, b)) != sorted((c, d)):
            return False
    return True


def oracle_tuple_set(elements, variant: str, n: int, z: int) -> list[tuple[int, int, int]]:
    """All (a1, a2, a3) with z = a1 - a2 + a3, by scanning A^3."""
    elements = list(elements)
    if len(elements) > TUPLE_LIMIT:
        raise SizeExceeded(f"oracle limited to {TUPLE_LIMIT} elements")
    if z in elements:
        raise ValueError(f"{z} belongs to the set")
    grp = NaiveGroup(variant, n)
    negs = {a: grp.neg(a) for a in elements}
    out = []
    for a1, a2, a3 in product(elements, repeat=3):
        if grp.add(grp.add(a1, negs[a2]), a3) == z:
            out.append((a1, a2, a3))
    return sorted(out)


def oracle_count_c4(n: int, edges) -> int:
    """Number of 4-cycle subgraphs: sum over pairs of C(codegree, 2), halved."""
    if n > COUNT_LIMIT:
        raise SizeExceeded(f"oracle limited to {COUNT_LIMIT} vertices")
    adj = [set() for _ in range(n)]
    for u, v in edges:
        if u != v:
            adj[u].add(v)
            adj[v].add(u)
    total = 0
    for u, v in combinations(range(n), 2):
        c = len(adj[u] & adj[v])
        total += c * (c - 1) // 2
    assert total % 2 == 0
    return total // 2


def oracle_sum_graph_edges(elements, variant: str, n: int) -> list[tuple[int, int]]:
    """Edges {x, y}, x < y, with x + y in the set, by scanning all pairs."""
    grp = NaiveGroup(variant, n)
    if grp.order > COUNT_LIMIT:
        raise SizeExceeded(f"oracle limited to {COUNT_LIMIT} vertices")
    members = set(elements)
    return [(x, y) for x, y in combinations(range(grp.order), 2) if grp.add(x, y) in members]


def _cyclic_search(n: int, interval: bool):
    """Depth-first search for a largest Sidon set.

    In Z_n every Sidon set can be translated to contain 0; in [1, n] the
    minimum can be translated to 1. Each node keeps only the candidates that
    are still compatible with the chosen elements, and a branch is cut when
    all of them together could not beat the best size found.
    """
    best: list[int] = []

    def diff(a, b):
        return a - b if interval else (a - b) % n

    def new_diffs(chosen, used, c):
        out = set()
        for a in chosen:
            for d in (diff(c, a), diff(a, c)):
                if d in used or d in out:
                    return None
                out.add(d)
        return out

    # k elements need k(k-1) distinct nonzero differences (half that in [1, n])
    slots = n - 1
    ceiling = max(k for k in range(1, n + 2) if (k * (k - 1) // (2 if interval else 1)) <= slots)

    def extend(chosen, used, cands):
        nonlocal best
        if len(chosen) > len(best):
            best = list(chosen)
        for i, c in enumerate(cands):
            if len(best) >= ceiling or len(chosen) + len(cands) - i <= len(best):
                return
            added = new_diffs(chosen, used, c)
            chosen.append(c)
            used |= added
            rest = [c2 for c2 in cands[i + 1:] if new_diffs(chosen, used, c2) is not None]
            extend(chosen, used, rest)
            chosen.pop()
            used -= added

    first = 1 if interval else 0
    last = n if interval else n - 1
    chosen = [first]
    used: set[int] = set()
    cands = [c for c in range(first + 1, last + 1) if new_diffs(chosen, used, c) is not None]
    extend(chosen, used, cands)
    return len(best), best


def oracle_max_sidon(n: int, interval: bool = False) -> tuple[int, list[int]]:
    """Largest Sidon set in Z_n (or in [1, n] if ``interval``) with a witness."""
    limit = INTERVAL_SEARCH_LIMIT if interval else CYCLIC_SEARCH_LIMIT
    if n > limit:
        raise SizeExceeded(f"exhaustive search limited to n <= {limit}")
    if n < 1:
        return 0, []
    return _cyclic_search(n, interval)


def sidon_size_bound(order: int) -> float:
    return math.sqrt(order) + 0.5
