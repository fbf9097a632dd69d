import json

import pytest

from sidon_c4 import constructions as c
from sidon_c4.constructions import SidonSet
from sidon_c4.group import GroupSpec
from sidon_c4.verify import verify

INSTANCES = [c.singer(2), c.singer(4), c.bose_chowla(3), c.bose_chowla(5), c.bose_chowla(4, 3),
             c.ruzsa(7), c.cartesian1(5), c.cartesian2(7), c.cartesian3(11, 2), c.cartesian3(7, 3)]


@pytest.mark.parametrize("s", INSTANCES, ids=lambda s: str(s.provenance))
@pytest.mark.parametrize("level", ["lemmas", "full"])
def test_constructions_pass(s, level):
    rep = verify(s, level)
    assert rep.ok, [(f.name, f.expected, f.observed) for f in rep.failures()]


def test_singer4_full():
    rep = verify(c.singer(4), "full")
    assert rep.get("edge-count").observed == 50
    assert rep.get("turan").passed and not rep.get("turan").diagnostic
    assert rep.get("c4-saturated").observed is True
    names = {ch.name for ch in rep.checks}
    assert {"oracle-sidon", "oracle-tuple-sets", "oracle-edges", "oracle-new-c4"} <= names


def test_cart3_triples_reported():
    ch = verify(c.cartesian3(11, 2)).get("triples-bound")
    assert ch.expected == ">= 6" and ch.passed


def test_non_sidon_fails():
    rep = verify(SidonSet(GroupSpec.cyclic(7), (0, 1, 2)))
    assert not rep.ok
    assert [ch.name for ch in rep.checks] == ["sidon"]


def test_non_maximal_custom_set():
    rep = verify(SidonSet(GroupSpec.cyclic(7), (0, 1)))
    assert rep.ok
    assert rep.get("maximal").observed is False and rep.get("maximal").diagnostic
    assert rep.get("c4-saturated").observed is False


def test_small_parameters_are_diagnostic():
    # the saturation guarantee needs |T(z)| >= 4; below it the outcome is only reported
    rep = verify(c.bose_chowla(3))
    assert rep.get("c4-saturated").diagnostic
    assert rep.ok


def test_json_schema_and_meta():
    rep = verify(c.singer(3))
    doc = json.loads(rep.to_json())
    assert doc["schema"] == 1 and "meta" in doc and doc["all_pass"]
    bare = rep.to_json(meta=False)
    assert "meta" not in json.loads(bare)
    assert bare == verify(c.singer(3)).to_json(meta=False)
    for ch in doc["checks"]:
        assert set(ch) == {"name", "anchor", "expected", "observed", "passed", "diagnostic"}


def test_unknown_level():
    with pytest.raises(ValueError):
        verify(c.singer(2), "everything")
