"""The six Sidon set families and the plain-text set file format."""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Optional

import numpy as np

from .errors import (
    AlphaOutOfRange,
    ConstructionFailure,
    NotOdd,
    NotPrime,
    NotPrimitive,
    ParseError,
    check_budget,
)
from .field import is_prime, is_primitive_root, make_field, prime_power, smallest_primitive_root
from .group import GroupSpec

FAMILIES = ("bose-chowla", "singer", "ruzsa", "cart1", "cart2", "cart3", "custom")


@dataclass(frozen=True)
class Provenance:
    family: str
    params: tuple[int, ...] = ()

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")

    def __str__(self) -> str:
        if not self.params:
            return self.family
        return f"{self.family}({','.join(map(str, self.params))})"

    @classmethod
    def parse(cls, text: str) -> "Provenance":
        text = text.strip()
        if "(" not in text:
            return cls(text)
        family, _, rest = text.partition("(")
        return cls(family, tuple(int(v) for v in rest.rstrip(")").split(",")))

    def expected_size(self) -> Optional[int]:
        f, a = self.family, self.params
        if f == "bose-chowla":
            return a[0]
        if f == "singer":
            return a[0] + 1
        if f in ("ruzsa", "cart2"):
            return a[0] - 1
        if f == "cart1":
            return a[0]
        if f == "cart3":
            return a[0] - 2
        return None


@dataclass(frozen=True)
class SidonSet:
    """A subset of a group plus where it came from.

    Only the named constructions guarantee the Sidon property; ``custom``
    sets are accepted as-is so that callers can check them.
    """

    group: GroupSpec
    elements: tuple[int, ...]
    provenance: Provenance = Provenance("custom")

    def __post_init__(self):
        elems = tuple(sorted(int(x) for x in self.elements))
        if len(set(elems)) != len(elems):
            raise ValueError("set elements must be distinct")
        if elems and not (0 <= elems[0] and elems[-1] < self.group.order):
            raise ValueError("set element outside the group")
        object.__setattr__(self, "elements", elems)
        want = self.provenance.expected_size()
        if want is not None and want != len(elems):
            raise ConstructionFailure(
                f"{self.provenance} should have {want} elements, got {len(elems)}"
            )

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x) -> bool:
        return int(x) in set(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @property
    def array(self) -> np.ndarray:
        return np.array(self.elements, dtype=np.int64)

    @property
    def is_sidon(self) -> bool:
        return verify_sidon(self)


def verify_sidon(s: SidonSet) -> bool:
    """True iff the differences a - b over ordered pairs a != b are all distinct."""
    k = len(s)
    if k < 2:
        return True
    a = s.array
    d = s.group.diff(a[:, None], a[None, :])
    off = d[~np.eye(k, dtype=bool)]
    seen = np.zeros(s.group.order, dtype=np.int64)
    np.add.at(seen, off, 1)
    return bool(seen.max() <= 1)


def _finish(group: GroupSpec, elements: Iterable[int], prov: Provenance) -> SidonSet:
    s = SidonSet(group, tuple(elements), prov)
    if not verify_sidon(s):
        raise ConstructionFailure(f"{prov} did not produce a Sidon set")
    return s


def _odd_prime(p: int) -> None:
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if p == 2:
        raise NotOdd("p must be an odd prime")


def _bose_chowla_logs(q: int, h: int) -> list[int]:
    if h < 2:
        raise ValueError("h must be at least 2")
    p, k = prime_power(q)
    check_budget("field", q ** h)
    f = make_field(p, k * h)
    theta = f.primitive
    subfield = f.frobenius_fixed(q)
    if len(subfield) != q:
        raise ConstructionFailure(f"found {len(subfield)} elements fixed by x -> x^{q}")
    return [f.log(f.add(theta, a)) for a in subfield]


def bose_chowla(q: int, h: int = 2) -> SidonSet:
    """{log(theta + a) : a in F_q} inside Z_{q^h - 1}."""
    logs = _bose_chowla_logs(q, h)
    return _finish(GroupSpec.cyclic(q ** h - 1), logs, Provenance("bose-chowla", (q, h)))


def singer(q: int) -> SidonSet:
    """Bose-Chowla with h = 3 reduced mod q^2 + q + 1, plus 0."""
    n = q * q + q + 1
    reduced = [x % n for x in _bose_chowla_logs(q, 3)]
    if 0 in reduced or len(set(reduced)) != q:
        raise ConstructionFailure("reduction mod q^2+q+1 collided")
    return _finish(GroupSpec.cyclic(n), [0] + reduced, Provenance("singer", (q,)))


def ruzsa(p: int, theta: Optional[int] = None) -> SidonSet:
    """{i p - theta^i (p - 1) mod p^2 - p : 1 <= i <= p - 1}."""
    _odd_prime(p)
    if theta is None:
        theta = smallest_primitive_root(p)
    if not is_primitive_root(theta, p):
        raise NotPrimitive(f"{theta} is not a primitive root mod {p}")
    theta %= p
    n = p * p - p
    elems = [(i * p - pow(theta, i, p) * (p - 1)) % n for i in range(1, p)]
    return _finish(GroupSpec.cyclic(n), elems, Provenance("ruzsa", (p, theta)))


def cartesian1(p: int) -> SidonSet:
    """The parabola {(a, a^2)} in F_p x F_p."""
    _odd_prime(p)
    g = GroupSpec.addadd(p)
    return _finish(g, [g.encode(a, a * a) for a in range(p)], Provenance("cart1", (p,)))


def cartesian2(p: int) -> SidonSet:
    """The diagonal {(a, a) : a != 0} in (F_p,+) x (F_p*,.)."""
    _odd_prime(p)
    g = GroupSpec.addmul(p)
    return _finish(g, [g.encode(a, a) for a in range(1, p)], Provenance("cart2", (p,)))


def cartesian3(p: int, alpha: int = 1) -> SidonSet:
    """{(a - alpha, a) : a in F_p*, a != alpha} in F_p* x F_p*."""
    _odd_prime(p)
    if not 1 <= alpha <= p - 1:
        raise AlphaOutOfRange(f"alpha must lie in 1..{p - 1}")
    g = GroupSpec.mulmul(p)
    elems = [g.encode(a - alpha, a) for a in range(1, p) if a != alpha]
    return _finish(g, elems, Provenance("cart3", (p, alpha)))


def construct(family: str, q: Optional[int] = None, h: int = 2, p: Optional[int] = None,
              theta: Optional[int] = None, alpha: int = 1) -> SidonSet:
    """Dispatch on a family name as used by the CLI."""
    def need(value, name):
        if value is None:
            raise ValueError(f"{family} needs --{name}")
        return value

    if family == "bose-chowla":
        return bose_chowla(need(q, "q"), h)
    if family == "singer":
        return singer(need(q, "q"))
    if family == "ruzsa":
        return ruzsa(need(p, "p"), theta)
    if family == "cart1":
        return cartesian1(need(p, "p"))
    if family == "cart2":
        return cartesian2(need(p, "p"))
    if family == "cart3":
        return cartesian3(need(p, "p"), alpha)
    raise ValueError(f"unknown family {family!r}")


def from_provenance(prov: Provenance) -> SidonSet:
    f, a = prov.family, prov.params
    if f == "bose-chowla":
        return bose_chowla(*a)
    if f == "singer":
        return singer(*a)
    if f == "ruzsa":
        return ruzsa(*a)
    if f == "cart1":
        return cartesian1(*a)
    if f == "cart2":
        return cartesian2(*a)
    if f == "cart3":
        return cartesian3(*a)
    raise ValueError("custom sets have no recipe")


# -- file format -------------------------------------------------------

def dumps(s: SidonSet) -> str:
    lines = [f"# provenance {s.provenance}", s.group.header()]
    lines += [str(x) for x in s.elements]
    return "\n".join(lines) + "\n"


def loads(text: str) -> SidonSet:
    """Parse a set file. Lines starting with '#' are comments; the first
    other line is the group header, then one element index per line."""
    group = None
    elems = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if group is None:
            group = GroupSpec.parse(line)
            continue
        try:
            elems.append(int(line))
        except ValueError:
            raise ParseError(f"line {lineno}: not an integer: {line!r}") from None
    if group is None:
        raise ParseError("missing group header")
    try:
        return SidonSet(group, tuple(elems))
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def load(path) -> SidonSet:
    return loads(Path(path).read_text())


def size_bound(s: SidonSet) -> float:
    """sqrt(|X|) + 1/2, a strict upper bound on the size of any Sidon set."""
    return math.sqrt(s.group.order) + 0.5
