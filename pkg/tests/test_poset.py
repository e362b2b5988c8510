import json
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from whitney import (
    CycleError,
    OracleBoundError,
    Poset,
    PosetError,
    WhitneyTable,
    chain,
    delete_element,
    enumerate_ideals,
    fence,
    load_poset,
    minimal_elements,
    poset_from_covers,
    to_dot,
    whitney_oracle,
)
from whitney import poset as poset_mod
from helpers import fib, isomorphic, random_poset


@st.composite
def posets(draw):
    return random_poset(draw, st)


def antichain(n):
    return Poset([f"e{i}" for i in range(n)])


def test_construction_examples():
    P = poset_from_covers(["z1", "z2", "z3"], [("z1", "z2"), ("z3", "z2")])
    assert P == fence(3)
    Q = poset_from_covers(["a"], [])
    assert len(Q) == 1 and Q.covers == ()
    with pytest.raises(CycleError) as err:
        poset_from_covers(["a", "b"], [("a", "b"), ("b", "a")])
    assert set(err.value.cycle) >= {"a", "b"}


def test_validation_errors():
    with pytest.raises(PosetError):
        Poset(["a", "a"])
    with pytest.raises(PosetError):
        Poset(["a"], [("a", "b")])
    with pytest.raises(CycleError):
        Poset(["a"], [("a", "a")])
    with pytest.raises(CycleError):
        Poset(["a", "b", "c"], [("a", "b"), ("b", "c"), ("c", "a")])


def test_redundant_covers_reduced():
    P = Poset(["a", "b", "c"], [("a", "b"), ("b", "c"), ("a", "c")])
    assert set(P.covers) == {("a", "b"), ("b", "c")}
    assert P.less("a", "c") and not P.less("c", "a")


def test_minimal_elements():
    assert minimal_elements(fence(5)) == ["z1", "z3", "z5"]
    assert minimal_elements(chain(3)) == ["c1"]
    assert sorted(minimal_elements(antichain(4))) == ["e0", "e1", "e2", "e3"]


def test_delete_element():
    assert isomorphic(delete_element(fence(5), "z5"), fence(4))
    assert len(delete_element(Poset(["x"]), "x")) == 0
    Q = delete_element(fence(3), "z2")
    assert sorted(Q.elements) == ["z1", "z3"] and Q.covers == ()
    with pytest.raises(PosetError):
        delete_element(fence(3), "nope")


def test_delete_keeps_order_through_removed_element():
    P = chain(3)
    Q = P.delete("c2")
    assert Q.covers == (("c1", "c3"),)


def test_enumerate_ideals_fence3():
    got = {frozenset(I) for I in enumerate_ideals(fence(3))}
    want = {frozenset(s) for s in [(), ("z1",), ("z3",), ("z1", "z3"), ("z1", "z2", "z3")]}
    assert got == want
    assert [set(I) for I in enumerate_ideals(Poset([]))] == [set()]
    for n in range(6):
        assert len(list(enumerate_ideals(chain(n)))) == n + 1


def test_oracle_examples():
    assert whitney_oracle(antichain(2)).counts == (1, 2, 1)
    assert whitney_oracle(fence(3)).counts == (1, 2, 1, 1)
    assert whitney_oracle(fence(5)).counts == (1, 3, 3, 3, 2, 1)
    assert whitney_oracle(Poset([])).counts == (1,)


def test_fence_totals_are_fibonacci():
    for n in range(26):
        assert whitney_oracle(fence(n)).total == fib(n + 2)


def test_oracle_bounds():
    with pytest.raises(OracleBoundError):
        whitney_oracle(fence(31))
    with pytest.raises(OracleBoundError):
        whitney_oracle(fence(10), max_ideals=100)
    with pytest.raises(OracleBoundError):
        list(enumerate_ideals(fence(10), max_ideals=100))
    assert whitney_oracle(fence(10), max_ideals=144).total == 144


def test_kernels_agree():
    if poset_mod._oracle_ext is None:
        pytest.skip("compiled kernel not built")
    for P in (fence(18), chain(7), antichain(9), Poset([])):
        assert whitney_oracle(P, kernel="cython") == whitney_oracle(P, kernel="python")


def test_pure_python_env_switch(monkeypatch):
    monkeypatch.setenv("WHITNEY_PURE_PYTHON", "1")
    assert poset_mod.kernel_name(5) == "python"
    assert whitney_oracle(fence(5)).counts == (1, 3, 3, 3, 2, 1)


def brute_ideals(P):
    out = set()
    for r in range(len(P) + 1):
        for sub in combinations(P.elements, r):
            s = set(sub)
            if all(a in s for a, b in P.covers if b in s):
                out.add(frozenset(s))
    return out


@settings(max_examples=150, deadline=None)
@given(posets())
def test_ideals_match_subset_brute_force(P):
    ideals = [frozenset(I) for I in enumerate_ideals(P)]
    assert len(ideals) == len(set(ideals))
    assert set(ideals) == brute_ideals(P)
    for I in ideals:
        for a, b in P.covers:
            assert b not in I or a in I
    table = whitney_oracle(P)
    assert table.total == len(ideals)
    assert all(table.get(k) == sum(len(I) == k for I in ideals) for k in range(len(P) + 1))
    py = whitney_oracle(P, kernel="python")
    assert py == table


@settings(max_examples=100, deadline=None)
@given(posets())
def test_covers_irredundant_and_closure(P):
    covers = set(P.covers)
    for a, b in covers:
        # no other path from a to b
        assert not any(P.less(a, c) and P.less(c, b) for c in P.elements)
    for a in P.elements:
        for b in P.elements:
            assert not (P.less(a, b) and P.less(b, a))
    ext = P.linear_extension()
    pos = {e: i for i, e in enumerate(ext)}
    assert all(pos[a] < pos[b] for a, b in covers)


@settings(max_examples=50, deadline=None)
@given(P=posets())
def test_json_round_trip(tmp_path_factory, P):
    assert Poset.from_json(json.loads(json.dumps(P.to_json()))) == P
    path = tmp_path_factory.mktemp("p") / "poset.json"
    path.write_text(json.dumps(P.to_json()))
    assert load_poset(path) == P


def test_load_poset_errors(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"covers": []}')
    with pytest.raises(PosetError):
        load_poset(bad)
    bad.write_text("not json")
    with pytest.raises(PosetError):
        load_poset(bad)


def test_whitney_table_json():
    t = whitney_oracle(fence(5))
    doc = json.loads(json.dumps(t.to_json()))
    assert doc["counts"] == ["1", "3", "3", "3", "2", "1"]
    assert WhitneyTable.from_json(doc) == t
    assert t.get(-1) == 0 and t.get(99) == 0


def test_dot_export():
    dot = to_dot(fence(3), "Z3")
    assert dot.startswith('digraph "Z3"')
    assert dot.count("->") == 2
    assert '"z1" -> "z2"' in dot
    assert "rank=same" in dot
