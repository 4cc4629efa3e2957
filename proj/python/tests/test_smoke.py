import os
from fractions import Fraction
from pathlib import Path

import pytest

import actcond

FIXTURES = Path(os.environ.get("ACTCOND_FIXTURES", Path(__file__).resolve().parents[2] / "tests" / "fixtures"))
Q1 = "(p => a | true)"
Q2 = "(f | c && !s)"


@pytest.fixture(scope="module")
def birds():
    return actcond.parse_belief_base((FIXTURES / "birds.kb").read_text())


@pytest.fixture(scope="module")
def kb(birds):
    return actcond.KnowledgeBase(birds)


def test_parse(birds):
    assert len(birds) == 20
    assert "r10" in birds
    assert str(birds["r10"]) == "(f | c && s)"
    assert actcond.parse_formula("(a && !b) || c") == "a && !b || c"
    with pytest.raises(actcond.SyntaxError):
        actcond.parse_conditional("(a | b")


def test_partition_and_answers(birds):
    layers, vacuous = actcond.z_partition(birds)
    assert layers[1] == ["r7", "r9", "r11", "r19"]
    assert layers[2] == ["r10"]
    assert vacuous == []
    q2 = actcond.parse_conditional(Q2)
    assert actcond.answer(birds.subset(["r9", "r11"]), q2) == "no"
    assert actcond.answer(birds.subset(["r9"]), q2) == "unknown"
    assert actcond.focus(birds, q2) == ["r1", "r2", "r7", "r8", "r9", "r10", "r11", "r19"]


def test_inconsistent_base():
    clash = actcond.parse_belief_base("(b | a)\n(!b | a)\n")
    assert not actcond.is_consistent(clash)
    with pytest.raises(actcond.InconsistentBase):
        actcond.KnowledgeBase(clash)
    with pytest.raises(actcond.Error):
        actcond.z_partition(clash)


def test_activation(kb):
    assert kb.association("r9", "r10") == Fraction(2, 3)
    assert len(kb.edges) == 22
    labels = kb.labels(Q2)
    assert labels["l"] == (Fraction(4, 151), 3)
    assert labels["k"] == (Fraction(0), None)
    rows = {row["id"]: row for row in kb.activation(Q1)}
    assert rows["r3"]["weighting"] == Fraction(2, 3)
    assert round(float(rows["r3"]["total"]), 2) == 2.41
    with pytest.raises(actcond.SignatureMismatch):
        kb.labels("(zz | a)")


def test_session_workflow(kb):
    session = actcond.Session(kb)
    first = session.ask(Q1, theta="2.3", delta=Fraction(1, 5))
    assert first["response"] == "yes"
    assert first["steps"][0] == (Fraction(23, 10), ["r1", "r2", "r3", "r6"], "yes")
    assert session.levels["r10"] == Fraction(4, 15)

    second = session.ask(Q2, theta="2.3", delta="0.2")
    assert second["response"] == "no"
    assert second["memory"] == ["r1", "r2", "r9", "r10", "r11"]
    assert session.query_count == 2
    assert session.dumps().startswith("#session queries=2 base=" + kb.fingerprint + "\nr1\t36/25\n")

    restored = actcond.Session(kb, session.levels, session.query_count)
    assert restored.levels == session.levels
    session.reset()
    assert session.levels == kb.initial_levels


def test_bad_config(kb):
    session = actcond.Session(kb)
    with pytest.raises(actcond.RangeError):
        session.ask(Q1, theta=1, schedule=[1, 2, 0])
    with pytest.raises(actcond.RangeError):
        session.ask(Q1, theta=1, delta=1)
    assert session.query_count == 0
