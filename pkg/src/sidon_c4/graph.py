"""Sum graphs G_{X,A}: x ~ y iff x != y and x + y lies in A.

The neighbourhood of x is {a - x : a in A} minus x itself, so the graph is
stored as an ``(|X|, |A|)`` neighbour table with -1 marking the slot where
a - x = x (x is then an absolute vertex).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from . import formulas
from .constructions import SidonSet
from .errors import EdgeExists, NotC4Free, SameVertex, UnsupportedProvenance, check_budget
from .group import GroupSpec

# entries per batch in the vectorised sweeps
_CHUNK = 1 << 22


@dataclass(frozen=True, eq=False)
class SumGraph:
    group: GroupSpec
    set: SidonSet
    nbr: np.ndarray = field(repr=False)
    members: np.ndarray = field(repr=False)
    absolute: tuple[int, ...]
    edge_count: int

    @property
    def n(self) -> int:
        return self.group.order

    def has_edge(self, x: int, y: int) -> bool:
        return x != y and bool(self.members[self.group.op(x, y)])

    def neighbors(self, x: int) -> list[int]:
        row = self.nbr[x]
        return sorted(int(v) for v in row[row >= 0])

    @cached_property
    def degrees(self) -> np.ndarray:
        return (self.nbr >= 0).sum(axis=1)

    def edges(self) -> list[tuple[int, int]]:
        x = np.repeat(np.arange(self.n), self.nbr.shape[1])
        y = self.nbr.ravel()
        keep = y > x
        pairs = np.stack([x[keep], y[keep]], axis=1)
        pairs = pairs[np.lexsort((pairs[:, 1], pairs[:, 0]))]
        return [(int(u), int(v)) for u, v in pairs]

    def adjacency_matrix(self) -> np.ndarray:
        check_budget("graph", self.n)
        adj = np.zeros((self.n, self.n), dtype=bool)
        x = np.repeat(np.arange(self.n), self.nbr.shape[1])
        y = self.nbr.ravel()
        keep = y >= 0
        adj[x[keep], y[keep]] = True
        return adj


def build_sum_graph(s: SidonSet) -> SumGraph:
    g = s.group
    n = g.order
    check_budget("graph", n)
    a = s.array
    x = g.elements()
    if len(a):
        nbr = g.diff(a[None, :], x[:, None]).astype(np.int64)
    else:
        nbr = np.empty((n, 0), dtype=np.int64)
    nbr[nbr == x[:, None]] = -1
    members = np.zeros(n, dtype=bool)
    members[a] = True
    absolute = tuple(int(v) for v in np.flatnonzero(members[g.double(x)]))

    deg = (nbr >= 0).sum(axis=1)
    twice_edges = int(deg.sum())
    if twice_edges != n * len(a) - len(absolute):
        raise AssertionError("handshake identity violated")
    expect = np.full(n, len(a))
    expect[list(absolute)] = len(a) - 1
    if not np.array_equal(deg, expect):
        raise AssertionError("degree spectrum violated")
    nbr.setflags(write=False)
    members.setflags(write=False)
    return SumGraph(g, s, nbr, members, absolute, twice_edges // 2)


def absolute_vertices(G: SumGraph) -> list[int]:
    return list(G.absolute)


def _batches(n: int, per_item: int):
    size = max(1, _CHUNK // max(1, per_item))
    for start in range(0, n, size):
        yield np.arange(start, min(n, start + size))


def _padded(G: SumGraph) -> np.ndarray:
    """Neighbour table with -1 replaced by a sentinel vertex n whose own row is all n."""
    n, k = G.nbr.shape
    pad = np.full((n + 1, k), n, dtype=np.int32)
    pad[:n] = np.where(G.nbr >= 0, G.nbr, n)
    return pad


def _two_step(G: SumGraph, xs: np.ndarray, pad: np.ndarray | None = None) -> np.ndarray:
    """Endpoints of walks x-u-v, shape (B, k*k); the sentinel n marks dead slots.

    Walks returning to x itself (v = x) are kept; callers discard them.
    """
    if pad is None:
        pad = _padded(G)
    k = pad.shape[1]
    return pad[pad[xs]].reshape(len(xs), k * k)


def is_c4_free(G: SumGraph) -> bool:
    """No two distinct vertices share two neighbours."""
    return c4_witness(G) is None


def c4_witness(G: SumGraph):
    """A pair (x, y) with at least two common neighbours, or None."""
    n, k = G.nbr.shape
    if k < 2:
        return None
    pad = _padded(G)
    width = n + 1
    for xs in _batches(n, max(k * k, width)):
        v = _two_step(G, xs, pad)
        keys = v + (np.arange(len(xs), dtype=np.int32) * width)[:, None]
        counts = np.bincount(keys.ravel(), minlength=len(xs) * width).reshape(len(xs), width)
        counts[:, n] = 0
        counts[np.arange(len(xs)), xs] = 0
        hit = np.flatnonzero(counts > 1)
        if len(hit):
            b, y = divmod(int(hit[0]), width)
            return int(xs[b]), y
    return None


def new_c4_count(G: SumGraph, x: int, y: int) -> int:
    """Number of 4-cycles in G + {x, y}, i.e. paths x-u-v-y in G."""
    if x == y:
        raise SameVertex("x and y coincide")
    if G.has_edge(x, y):
        raise EdgeExists(f"{{{x}, {y}}} is already an edge")
    in_ny = np.zeros(G.n + 1, dtype=bool)   # sentinel slot n stays False
    row = G.nbr[y]
    in_ny[row[row >= 0]] = True
    in_ny[x] = False
    return int(in_ny[_two_step(G, np.array([x]))[0]].sum())


def new_c4_count_matrix(G: SumGraph) -> np.ndarray:
    """Entry [x, y] counts walks x-u-v-y with v != x.

    On a non-edge x != y this equals new_c4_count(G, x, y); entries on
    edges and the diagonal carry no meaning.
    """
    check_budget("pairs", G.n)
    n, k = G.nbr.shape
    out = np.zeros((n, n), dtype=np.int64)
    if k == 0:
        return out
    pad = _padded(G)
    width = n + 1
    for xs in _batches(n, k ** 3 + width):
        v = _two_step(G, xs, pad)
        v = np.where(v == xs[:, None], n, v)
        w = pad[v].reshape(len(xs), -1)
        keys = w + (np.arange(len(xs)) * width)[:, None]
        counts = np.bincount(keys.ravel(), minlength=len(xs) * width)
        out[xs] = counts.reshape(len(xs), width)[:, :n]
    return out


def non_edges(G: SumGraph) -> list[tuple[int, int]]:
    x, y = np.triu_indices(G.n, 1)
    keep = ~G.members[G.group.op(x, y)]
    return list(zip(x[keep].tolist(), y[keep].tolist()))


def unsaturated_pairs(G: SumGraph, limit: int | None = None) -> list[tuple[int, int]]:
    """Non-adjacent pairs x < y joined by no path of length three."""
    n, k = G.nbr.shape
    out: list[tuple[int, int]] = []
    pad = _padded(G)
    cols = pad[:n]
    for xs in _batches(n, max(k * k, 4 * n)):
        rows = np.arange(len(xs))[:, None]
        reach = np.zeros((len(xs), n + 1), dtype=bool)
        reach[rows, _two_step(G, xs, pad)] = True
        # a hit on x itself would need y ~ x, which non-edges exclude
        reach[:, n] = False
        adj = np.zeros((len(xs), n + 1), dtype=bool)
        adj[rows, pad[xs]] = True
        open_ = (np.arange(n)[None, :] > xs[:, None]) & ~adj[:, :n]
        # dense passes while most pairs are open, then chase the stragglers
        j = 0
        while j < min(k, 3) and open_.any():
            open_ &= ~reach[:, cols[:, j]]
            j += 1
        b, y = np.nonzero(open_)
        for jj in range(j, k):
            if not len(b):
                break
            hit = reach[b, cols[y, jj]]
            b, y = b[~hit], y[~hit]
        out.extend(zip(xs[b].tolist(), y.tolist()))
        if limit is not None and len(out) >= limit:
            return out[:limit]
    return out


def is_c4_saturated(G: SumGraph) -> bool:
    """C4-free, and every missing edge would close a 4-cycle."""
    if not is_c4_free(G):
        raise NotC4Free("saturation is only defined for C4-free graphs")
    return not unsaturated_pairs(G, limit=1)


def extremal_check(G: SumGraph) -> dict:
    """Compare |P| and |E| against the family's closed forms."""
    prov = G.set.provenance
    want_e = formulas.edge_count(prov)
    want_p = formulas.absolute_count(prov)
    if want_e is None:
        raise UnsupportedProvenance(f"no edge formula for {prov}")
    report = {
        "family": str(prov),
        "n": G.n,
        "absolute": {"observed": len(G.absolute), "expected": want_p},
        "edges": {"observed": G.edge_count, "expected": want_e},
        "match": len(G.absolute) == want_p and G.edge_count == want_e,
    }
    if prov.family == "singer":
        q = prov.params[0]
        known = formulas.KNOWN_TURAN.get(G.n)
        if q > 13:
            report["turan"] = {"status": "equal", "value": want_e,
                               "source": "upper bound for prime powers q > 13"}
        elif known is not None:
            report["turan"] = {"status": "equal" if known == G.edge_count else "below",
                               "value": known, "source": "exhaustive search, n <= 21"}
        else:
            report["turan"] = {"status": "lower-bound", "value": G.edge_count}
    return report


def edge_list(G: SumGraph) -> str:
    lines = [f"# sumgraph {G.set.provenance} n={G.n} m={G.edge_count}"]
    lines += [f"{u} {v}" for u, v in G.edges()]
    return "\n".join(lines) + "\n"


def to_json(G: SumGraph) -> str:
    doc = {
        "schema": 1,
        "provenance": str(G.set.provenance),
        "group": G.group.header(),
        "n": G.n,
        "m": G.edge_count,
        "set": list(G.set.elements),
        "absolute": list(G.absolute),
        "edges": [list(e) for e in G.edges()],
    }
    return json.dumps(doc, indent=1, sort_keys=True) + "\n"
