"""The four ambient abelian groups, with dense integer indexing.

``cyclic``  Z_n
``addadd``  (F_p,+) x (F_p,+)
``addmul``  (F_p,+) x (F_p*,.)
``mulmul``  (F_p*,.) x (F_p*,.)

Product groups index the pair (first, second) row-major. A multiplicative
component with value v in 1..p-1 is stored as v-1, so every component range
starts at 0. All operations accept ints or numpy integer arrays.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

import numpy as np

from .errors import NotPrime, ParseError
from .field import is_prime

Elem = Union[int, np.ndarray]

VARIANTS = ("cyclic", "addadd", "addmul", "mulmul")


def _unwrap(x):
    return int(x) if np.ndim(x) == 0 else x


@dataclass(frozen=True)
class GroupSpec:
    variant: str
    n: int
    _inv: np.ndarray = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise ValueError(f"unknown group variant {self.variant!r}")
        if self.variant == "cyclic":
            if self.n < 1:
                raise ValueError("cyclic group order must be positive")
        elif not is_prime(self.n):
            raise NotPrime(f"{self.n} is not prime")
        if self.variant != "cyclic":
            p = self.n
            inv = np.zeros(p, dtype=np.int64)
            inv[1:] = [pow(v, p - 2, p) for v in range(1, p)]
            object.__setattr__(self, "_inv", inv)

    @classmethod
    def cyclic(cls, n: int) -> "GroupSpec":
        return cls("cyclic", n)

    @classmethod
    def addadd(cls, p: int) -> "GroupSpec":
        return cls("addadd", p)

    @classmethod
    def addmul(cls, p: int) -> "GroupSpec":
        return cls("addmul", p)

    @classmethod
    def mulmul(cls, p: int) -> "GroupSpec":
        return cls("mulmul", p)

    @classmethod
    def parse(cls, text: str) -> "GroupSpec":
        """Parse a header such as ``group cyclic 7``."""
        parts = text.split()
        if len(parts) != 3 or parts[0] != "group" or parts[1] not in VARIANTS:
            raise ParseError(f"bad group header {text!r}")
        try:
            return cls(parts[1], int(parts[2]))
        except ValueError as exc:
            raise ParseError(f"bad group header {text!r}: {exc}") from exc

    def header(self) -> str:
        return f"group {self.variant} {self.n}"

    @property
    def p(self) -> int:
        return self.n

    @property
    def order(self) -> int:
        n = self.n
        return {
            "cyclic": n,
            "addadd": n * n,
            "addmul": n * (n - 1),
            "mulmul": (n - 1) ** 2,
        }[self.variant]

    @property
    def identity(self) -> int:
        # (0), (0,0), (0,1) and (1,1) all land on index 0
        return 0

    # -- components --------------------------------------------------

    @property
    def _mult(self) -> tuple[bool, bool]:
        return {
            "addadd": (False, False),
            "addmul": (False, True),
            "mulmul": (True, True),
        }[self.variant]

    @property
    def _width(self) -> int:
        # number of stored values of the second component
        return self.n - 1 if self._mult[1] else self.n

    def encode(self, first: Elem, second: Elem = None) -> Elem:
        """Index of a pair given by component values (a residue for cyclic)."""
        if self.variant == "cyclic":
            return _unwrap(np.asarray(first) % self.n)
        m1, m2 = self._mult
        a = np.asarray(first) % self.n
        b = np.asarray(second) % self.n
        if (m1 and np.any(a == 0)) or (m2 and np.any(b == 0)):
            raise ValueError("multiplicative component cannot be zero")
        return _unwrap((a - m1) * self._width + (b - m2))

    def decode(self, x: Elem) -> tuple[Elem, Elem]:
        """Component values of an index (product groups only)."""
        if self.variant == "cyclic":
            raise TypeError("cyclic elements have no components")
        m1, m2 = self._mult
        a, b = np.divmod(np.asarray(x), self._width)
        return _unwrap(a + m1), _unwrap(b + m2)

    def elements(self) -> np.ndarray:
        return np.arange(self.order, dtype=np.int64)

    def pairs(self) -> list[tuple[int, int]]:
        a, b = self.decode(self.elements())
        return list(zip(a.tolist(), b.tolist()))

    # -- operations --------------------------------------------------

    def op(self, x: Elem, y: Elem) -> Elem:
        if self.variant == "cyclic":
            return _unwrap((np.asarray(x) + np.asarray(y)) % self.n)
        p = self.n
        m1, m2 = self._mult
        a1, b1 = self.decode(x)
        a2, b2 = self.decode(y)
        a = (np.asarray(a1) * a2) % p if m1 else (np.asarray(a1) + a2) % p
        b = (np.asarray(b1) * b2) % p if m2 else (np.asarray(b1) + b2) % p
        return self.encode(a, b)

    def inv(self, x: Elem) -> Elem:
        if self.variant == "cyclic":
            return _unwrap((-np.asarray(x)) % self.n)
        p = self.n
        m1, m2 = self._mult
        a, b = self.decode(x)
        a = self._inv[a] if m1 else (-np.asarray(a)) % p
        b = self._inv[b] if m2 else (-np.asarray(b)) % p
        return self.encode(a, b)

    def diff(self, x: Elem, y: Elem) -> Elem:
        """x - y, i.e. x composed with the inverse of y."""
        return self.op(x, self.inv(y))

    def double(self, x: Elem) -> Elem:
        return self.op(x, x)

    def format(self, x: int) -> str:
        if self.variant == "cyclic":
            return str(x)
        a, b = self.decode(x)
        return f"({a},{b})"
