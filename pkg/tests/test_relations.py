import pytest

from mldelab import relations


def test_catalog_shape():
    labels = [r.label for r in relations.RELATIONS]
    assert len(labels) == len(set(labels))
    groups = {r.group for r in relations.RELATIONS}
    assert groups == set("abcdefg")


def test_quarantine_is_exactly_documented():
    assert sorted(relations.QUARANTINED_LABELS) == ["e.5", "f.8"]


def test_all_relations(relation_reports):
    failed = [r["label"] for r in relation_reports if r["status"] == "failed"]
    assert failed == []
    quarantined = sorted(r["label"] for r in relation_reports
                         if r["status"].startswith("quarantined"))
    assert quarantined == ["e.5", "f.8"]
    verified = [r for r in relation_reports if r["status"] == "verified"]
    assert len(verified) == len(relation_reports) - 2


def test_group_orders():
    assert all(relations.GROUP_ORDERS[g] == 50 for g in "abcd")
    assert all(relations.GROUP_ORDERS[g] == 25 for g in "efg")


def test_single_relation_and_lookup():
    r = relations.get_relation("a.1")
    rep = relations.verify_relation(r, 30)
    assert rep["status"] == "verified"
    with pytest.raises(KeyError):
        relations.get_relation("z.9")
