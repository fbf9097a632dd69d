import random

import pytest

from sidon_c4 import constructions as c
from sidon_c4.constructions import Provenance, SidonSet
from sidon_c4.errors import (
    AlphaOutOfRange,
    ConstructionFailure,
    NotOdd,
    NotPrime,
    NotPrimePower,
    NotPrimitive,
    ParseError,
)
from sidon_c4.group import GroupSpec
from sidon_c4.oracle import oracle_sidon

QS = [2, 3, 4, 5, 7, 8, 9, 11, 13]
PS = [3, 5, 7, 11, 13]


def family_sweep():
    for q in QS:
        yield c.bose_chowla(q)
        yield c.singer(q)
    for q in (2, 3, 4):
        yield c.bose_chowla(q, 3)
    for p in PS:
        yield c.ruzsa(p)
        yield c.cartesian1(p)
        yield c.cartesian2(p)
        for alpha in range(1, p):
            yield c.cartesian3(p, alpha)


def pairs(s):
    return sorted(s.group.decode(x) for x in s.elements)


def test_bose_chowla_examples():
    assert c.bose_chowla(2).elements == (1, 2)
    assert c.bose_chowla(2, 3).elements == (1, 3)
    s = c.bose_chowla(3)
    assert s.group == GroupSpec.cyclic(8) and len(s) == 3


def test_singer_examples():
    assert c.singer(2).elements == (0, 1, 3)
    s = c.singer(3)
    assert s.group.order == 13 and len(s) == 4


def test_ruzsa_examples():
    assert c.ruzsa(3, 2).elements == (4, 5)
    s = c.ruzsa(5, 2)
    assert s.group.order == 20 and len(s) == 4
    assert oracle_sidon(s.elements, "cyclic", 20)
    assert len(c.ruzsa(7, 3)) == 6


def test_cartesian_examples():
    assert pairs(c.cartesian1(3)) == [(0, 0), (1, 1), (2, 1)]
    assert len(c.cartesian1(5)) == 5
    assert pairs(c.cartesian2(3)) == [(1, 1), (2, 2)]
    assert pairs(c.cartesian3(5, 1)) == [(1, 2), (2, 3), (3, 4)]
    assert pairs(c.cartesian3(3, 1)) == [(1, 2)]


def test_every_construction_is_sidon_by_oracle():
    for s in family_sweep():
        assert c.verify_sidon(s), s.provenance
        assert len(s) == s.provenance.expected_size()
        if len(s) <= 16:
            assert oracle_sidon(s.elements, s.group.variant, s.group.n), s.provenance


def test_verify_sidon_small_cases():
    z7 = GroupSpec.cyclic(7)
    assert c.verify_sidon(SidonSet(z7, (0, 1, 3)))
    assert not c.verify_sidon(SidonSet(z7, (0, 1, 2)))
    assert c.verify_sidon(SidonSet(z7, (4,)))
    assert not c.verify_sidon(SidonSet(GroupSpec.cyclic(10), (1, 2, 3)))


def test_verify_sidon_random_differential():
    rng = random.Random(7)
    for _ in range(300):
        variant = rng.choice(["cyclic", "addadd", "addmul", "mulmul"])
        n = rng.randrange(2, 40) if variant == "cyclic" else rng.choice([3, 5, 7])
        g = GroupSpec(variant, n)
        k = rng.randrange(0, min(g.order, 8) + 1)
        s = SidonSet(g, tuple(rng.sample(range(g.order), k)))
        assert c.verify_sidon(s) == oracle_sidon(s.elements, variant, n)


def test_parameter_errors():
    with pytest.raises(NotPrimePower):
        c.singer(6)
    with pytest.raises(NotPrimePower):
        c.bose_chowla(10)
    with pytest.raises(NotPrime):
        c.ruzsa(9)
    with pytest.raises(NotOdd):
        c.cartesian1(2)
    with pytest.raises(NotPrimitive):
        c.ruzsa(7, 2)
    with pytest.raises(AlphaOutOfRange):
        c.cartesian3(7, 7)
    with pytest.raises(AlphaOutOfRange):
        c.cartesian3(7, 0)


def test_family_size_enforced():
    with pytest.raises(ConstructionFailure):
        SidonSet(GroupSpec.cyclic(7), (0, 1), Provenance("singer", (2,)))


def test_set_validation():
    z7 = GroupSpec.cyclic(7)
    with pytest.raises(ValueError):
        SidonSet(z7, (0, 0, 1))
    with pytest.raises(ValueError):
        SidonSet(z7, (0, 7))
    assert SidonSet(z7, (3, 0, 1)).elements == (0, 1, 3)


def test_provenance_strings():
    for s in family_sweep():
        assert Provenance.parse(str(s.provenance)) == s.provenance
        assert c.from_provenance(s.provenance) == s
    assert str(Provenance("singer", (2,))) == "singer(2)"


def test_file_roundtrip():
    for s in (c.singer(3), c.cartesian2(7), c.cartesian3(11, 2)):
        text = c.dumps(s)
        back = c.loads(text)
        assert back.group == s.group and back.elements == s.elements
        assert back.provenance.family == "custom"


def test_file_format():
    text = c.dumps(c.singer(2))
    assert text.splitlines()[1:] == ["group cyclic 7", "0", "1", "3"]
    s = c.loads("group cyclic 7\n0\n1\n\n# note\n3\n")
    assert s.elements == (0, 1, 3)


@pytest.mark.parametrize("text", ["", "0\n1\n", "group cyclic 7\nx\n", "group cyclic 7\n9\n",
                                  "group cyclic 7\n1\n1\n"])
def test_file_errors(text):
    with pytest.raises(ParseError):
        c.loads(text)


def test_size_bound_holds():
    for s in family_sweep():
        assert len(s) < c.size_bound(s)
