"""Difference sets, deficiency, tuple sets T(z) and maximality."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .constructions import SidonSet
from .errors import ConstructionFailure, DecompositionMismatch, UnsupportedProvenance, ZInSet
from .group import GroupSpec


@dataclass(frozen=True)
class DifferenceProfile:
    group: GroupSpec
    diff_set: np.ndarray = field(repr=False)  # bool membership of A - A

    @property
    def punctured(self) -> list[int]:
        """A - A without the identity."""
        mask = self.diff_set.copy()
        mask[self.group.identity] = False
        return np.flatnonzero(mask).tolist()

    @property
    def size(self) -> int:
        return int(self.diff_set.sum())

    @property
    def deficiency(self) -> int:
        return self.group.order - self.size

    @property
    def complement(self) -> list[int]:
        return np.flatnonzero(~self.diff_set).tolist()


def difference_profile(s: SidonSet) -> DifferenceProfile:
    g = s.group
    mask = np.zeros(g.order, dtype=bool)
    if len(s):
        a = s.array
        mask[g.diff(a[:, None], a[None, :]).ravel()] = True
    mask.setflags(write=False)
    prof = DifferenceProfile(g, mask)
    assert prof.deficiency == len(prof.complement)
    return prof


def complement_characterization(s: SidonSet) -> list[int]:
    """Closed-form prediction of X minus (A - A without the identity).

    The identity is always part of the prediction; compare against
    ``difference_profile(s).complement + [identity]``.
    """
    g = s.group
    fam, params = s.provenance.family, s.provenance.params
    x = g.elements()
    if fam == "bose-chowla":
        q, h = params
        if h != 2:
            raise UnsupportedProvenance("closed form known only for h = 2")
        pred = x[x % (q + 1) == 0]
    elif fam == "singer":
        pred = np.array([g.identity])
    elif fam == "ruzsa":
        p = params[0]
        pred = x[(x % p == 0) | (x % (p - 1) == 0)]
    elif fam in ("cart1", "cart2", "cart3"):
        a, b = g.decode(x)
        if fam == "cart1":
            pred = x[a == 0]
        elif fam == "cart2":
            pred = x[(a == 0) | (b == 1)]
        else:
            pred = x[(a == 1) | (b == 1) | (a == b)]
    else:
        raise UnsupportedProvenance(f"no closed form for {s.provenance}")
    return sorted(int(v) for v in pred)


def complement_matches(s: SidonSet) -> bool:
    prof = difference_profile(s)
    observed = sorted(prof.complement + [s.group.identity])
    return observed == complement_characterization(s)


class DifferenceIndex:
    """Maps each nonzero difference of a Sidon set to its unique ordered pair.

    ``first[d], second[d]`` hold (a, b) with a - b = d, or -1 when d is not a
    difference.
    """

    def __init__(self, s: SidonSet):
        g = s.group
        n = g.order
        self.set = s
        self.first = np.full(n, -1, dtype=np.int64)
        self.second = np.full(n, -1, dtype=np.int64)
        a = s.array
        k = len(a)
        if k >= 2:
            d = g.diff(a[:, None], a[None, :])
            off = ~np.eye(k, dtype=bool)
            dv = d[off]
            if len(np.unique(dv)) != len(dv):
                raise ConstructionFailure("difference index needs a Sidon set")
            rows, cols = np.nonzero(off)
            self.first[dv] = a[rows]
            self.second[dv] = a[cols]
        self.members = np.zeros(n, dtype=bool)
        self.members[a] = True

    def tuple_counts(self) -> np.ndarray:
        """|T(z)| for every z in the group (entries for z in A are -1)."""
        g = self.set.group
        a = self.set.array
        z = g.elements()
        if len(a) == 0:
            counts = np.zeros(len(z), dtype=np.int64)
        else:
            d = g.diff(z[:, None], a[None, :])
            counts = (self.first[d] >= 0).sum(axis=1)
        counts[self.members] = -1
        return counts


@dataclass
class TupleSet:
    z: int
    tuples: list[tuple[int, int, int]]

    def __len__(self) -> int:
        return len(self.tuples)


def tuple_set(s: SidonSet, z: int, index: DifferenceIndex | None = None) -> TupleSet:
    """All (a1, a2, a3) in A^3 with z = a1 - a2 + a3, in O(|A|)."""
    if z in s:
        raise ZInSet(f"{z} belongs to the set")
    idx = index if index is not None else DifferenceIndex(s)
    g = s.group
    out = []
    for a1 in s.elements:
        d = g.diff(z, a1)
        a3 = idx.first[d]
        if a3 >= 0:
            out.append((a1, int(idx.second[d]), int(a3)))
    return TupleSet(int(z), out)


GENUINE, FOLD_X, FOLD_Y, MEET = "a", "b", "c", "d"


def classify_degenerate(s: SidonSet, t: TupleSet, x: int, y: int) -> list[frozenset[str]]:
    """Label the walk x, a1-x, a3-y, y generated by each tuple of T(x+y).

    Each label is a set drawn from {"b", "c", "d"}: "b" when a1 - x = x,
    "c" when a3 - y = y, "d" when a1 - x = a3 - y. An empty set means the
    tuple gives a genuine path of length three (class "a").
    """
    g = s.group
    if x == y:
        raise DecompositionMismatch("x and y must differ")
    if g.op(x, y) != t.z:
        raise DecompositionMismatch(f"x + y != {t.z}")
    labels = []
    for a1, _a2, a3 in t.tuples:
        u = g.diff(a1, x)
        v = g.diff(a3, y)
        flags = set()
        if u == x:
            flags.add(FOLD_X)
        if v == y:
            flags.add(FOLD_Y)
        if u == v:
            flags.add(MEET)
        labels.append(frozenset(flags))
    return labels


def genuine_count(labels: list[frozenset[str]]) -> int:
    return sum(1 for lab in labels if not lab)


def degenerate_profile(s: SidonSet, x: np.ndarray, y: np.ndarray,
                       index: DifferenceIndex | None = None) -> dict[str, np.ndarray]:
    """Vectorised :func:`classify_degenerate` over many pairs at once.

    Returns per-pair counts: ``size`` (|T(x+y)|), ``genuine``, ``b``, ``c``,
    ``d`` (tuples carrying each flag) and ``degenerate`` (tuples with any flag).
    """
    g = s.group
    idx = index if index is not None else DifferenceIndex(s)
    a = s.array
    x = np.asarray(x, dtype=np.int64)[:, None]
    y = np.asarray(y, dtype=np.int64)[:, None]
    z = g.op(x, y)
    a1 = np.broadcast_to(a[None, :], (len(x), len(a)))
    d = g.diff(z, a1)
    a3 = idx.first[d]
    present = a3 >= 0
    a3 = np.where(present, a3, 0)
    u = g.diff(a1, x)
    v = g.diff(a3, y)
    fb = present & (u == x)
    fc = present & (v == y)
    fd = present & (u == v)
    any_flag = fb | fc | fd
    return {
        "size": present.sum(axis=1),
        "genuine": (present & ~any_flag).sum(axis=1),
        "b": fb.sum(axis=1),
        "c": fc.sum(axis=1),
        "d": fd.sum(axis=1),
        "degenerate": any_flag.sum(axis=1),
    }


def extension_candidates(s: SidonSet) -> np.ndarray:
    """Every z outside A for which A + {z} is still a Sidon set."""
    g = s.group
    n = g.order
    a = s.array
    z = g.elements()
    ok = np.ones(n, dtype=bool)
    ok[a] = False
    if len(a) == 0:
        return z[ok]
    prof = difference_profile(s)
    forward = g.diff(z[:, None], a[None, :])   # z - a
    backward = g.diff(a[None, :], z[:, None])  # a - z
    # new differences hitting old ones
    ok &= ~prof.diff_set[forward].any(axis=1)
    ok &= ~prof.diff_set[backward].any(axis=1)
    # z - a = a' - z, which also catches z - a of order two
    sums = np.zeros(n, dtype=bool)
    sums[g.op(a[:, None], a[None, :]).ravel()] = True
    ok &= ~sums[g.double(z)]
    return z[ok]


def is_maximal(s: SidonSet) -> bool:
    """True iff no element of X outside A can be added keeping the Sidon property."""
    return len(extension_candidates(s)) == 0
