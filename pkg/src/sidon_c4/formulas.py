"""Closed-form values for each construction family.

Every function takes a :class:`Provenance` and returns an int, or None when
the family has no closed form for that quantity.
"""

from __future__ import annotations

from typing import Optional

from .constructions import Provenance


def _sign(p: int) -> int:
    # (-1)^((p-1)/2)
    return 1 if p % 4 == 1 else -1


def is_square_mod(a: int, p: int) -> bool:
    return pow(a % p, (p - 1) // 2, p) == 1


def group_order(prov: Provenance) -> Optional[int]:
    f, a = prov.family, prov.params
    if f == "bose-chowla":
        q, h = a
        return q ** h - 1
    if f == "singer":
        q = a[0]
        return q * q + q + 1
    if f in ("ruzsa", "cart2"):
        return a[0] * (a[0] - 1)
    if f == "cart1":
        return a[0] ** 2
    if f == "cart3":
        return (a[0] - 1) ** 2
    return None


def deficiency(prov: Provenance) -> Optional[int]:
    f, a = prov.family, prov.params
    if f == "singer":
        return 0
    if f == "bose-chowla":
        return a[0] - 2 if a[1] == 2 else None
    if f in ("ruzsa", "cart2"):
        return 2 * a[0] - 3
    if f == "cart1":
        return a[0] - 1
    if f == "cart3":
        return 3 * a[0] - 6
    return None


def absolute_count(prov: Provenance) -> Optional[int]:
    """Number of vertices z with z + z in A.

    For cart3 the tabulated value p - 4 - (-1)^((p-1)/2) holds when alpha is
    a quadratic residue; for a non-residue alpha the count is
    p - 2 + (-1)^((p-1)/2).
    """
    f, a = prov.family, prov.params
    if f == "singer":
        return a[0] + 1
    if f == "bose-chowla":
        q, h = a
        if h != 2:
            return None
        return q if q % 2 == 0 else q - 1
    if f in ("ruzsa", "cart2"):
        return a[0] - 1
    if f == "cart1":
        return a[0]
    if f == "cart3":
        p, alpha = a
        if is_square_mod(alpha, p):
            return p - 4 - _sign(p)
        return p - 2 + _sign(p)
    return None


def edge_count(prov: Provenance) -> Optional[int]:
    f, a = prov.family, prov.params
    if f == "singer":
        q = a[0]
        return q * (q + 1) ** 2 // 2
    if f == "bose-chowla":
        q, h = a
        if h != 2:
            return None
        return (q ** 3 - 2 * q) // 2 if q % 2 == 0 else (q ** 3 - 2 * q + 1) // 2
    if f in ("ruzsa", "cart2"):
        p = a[0]
        return (p ** 3 - 2 * p * p + 1) // 2
    if f == "cart1":
        p = a[0]
        return (p ** 3 - p) // 2
    if f == "cart3":
        p, alpha = a
        if is_square_mod(alpha, p):
            return (p ** 3 - 4 * p * p + 4 * p + 2 + _sign(p)) // 2
        return ((p - 1) ** 2 * (p - 2) - absolute_count(prov)) // 2
    return None


def triples_bound(prov: Provenance) -> Optional[int]:
    """Lower bound on |T(z)| valid for every z outside the set."""
    f, a = prov.family, prov.params
    if f == "bose-chowla":
        return a[0] - 1 if a[1] == 2 else None
    if f == "singer":
        return a[0] + 1
    if f in ("ruzsa", "cart2"):
        return a[0] - 3
    if f == "cart1":
        return a[0] - 1
    if f == "cart3":
        return a[0] - 5
    return None


def triples_exact(prov: Provenance) -> bool:
    """Whether the bound above is attained by every z (zero deficiency)."""
    return prov.family == "singer"


def new_c4_bound(prov: Provenance) -> Optional[int]:
    """Guaranteed number of new 4-cycles created by adding any one edge."""
    t = triples_bound(prov)
    return None if t is None else t - 3


def saturation_guaranteed(prov: Provenance) -> bool:
    t = triples_bound(prov)
    return t is not None and t >= 4


# ex(n, C4) for the orders of the smallest Singer graphs, from the
# exhaustive computations for n <= 21.
KNOWN_TURAN = {7: 9, 13: 24, 21: 50}
