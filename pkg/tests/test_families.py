import pytest

from whitney import (
    AP,
    FAP,
    Crown,
    Fence,
    PosetError,
    asymmetric_peak,
    chain,
    crown,
    family_from_json,
    fap,
    fence,
    star_compose,
    whitney_oracle,
)
from helpers import isomorphic


def test_fence_shapes():
    assert fence(0).elements == ()
    assert whitney_oracle(fence(0)).counts == (1,)
    assert len(fence(1)) == 1 and fence(1).covers == ()
    assert set(fence(4).covers) == {("z1", "z2"), ("z3", "z2"), ("z3", "z4")}
    assert whitney_oracle(fence(5)).counts == (1, 3, 3, 3, 2, 1)
    for n in range(12):
        assert len(fence(n).minimal_elements()) == (n + 1) // 2
    with pytest.raises(PosetError):
        fence(-1)


def test_crown_shapes():
    C = crown(2)
    assert set(C.minimal_elements()) == {"zeta0", "zeta2"}
    for lo in ("zeta0", "zeta2"):
        assert set(C.upper_covers(lo)) == {"zeta1", "zeta3"}
    assert whitney_oracle(C).counts == (1, 2, 1, 2, 1)
    C3 = crown(3)
    assert len(C3) == 6
    for e in C3.elements:
        assert sum(e in c for c in C3.covers) == 2
    for n in range(2, 8):
        C = crown(n)
        assert len(C.minimal_elements()) == n and len(C.maximal_elements()) == n
        assert len(C.covers) == (4 if n == 2 else 2 * n)
    with pytest.raises(PosetError):
        crown(1)


def test_crown_is_a_cycle_graph():
    import networkx as nx
    for n in range(3, 8):
        g = nx.Graph(crown(n).covers)
        assert nx.is_isomorphic(g, nx.cycle_graph(2 * n))


def test_asymmetric_peak():
    P = asymmetric_peak(1, 1)
    assert len(P) == 3
    assert set(P.lower_covers("omega")) == {"a1", "b1"}
    assert whitney_oracle(asymmetric_peak(2, 1)).counts == (1, 2, 2, 1, 1)
    for mu in range(1, 5):
        for nu in range(1, 5):
            assert len(asymmetric_peak(mu, nu)) == mu + nu + 1
    with pytest.raises(PosetError):
        asymmetric_peak(0, 2)


def test_star_examples():
    S = star_compose(chain(1, "a"), "a1", chain(1, "b"), "b1")
    assert isomorphic(S, asymmetric_peak(1, 1))
    for v in range(6):
        Z = star_compose(fence(2 * v + 1), f"z{2 * v + 1}", fence(1), "z1")
        assert isomorphic(Z, fence(2 * v + 3))


def test_star_counts_and_errors():
    P1, P2 = fence(4), crown(3)
    S = star_compose(P1, "z1", P2, "zeta2")
    assert len(S) == len(P1) + len(P2) + 1
    assert len(S.covers) == len(P1.covers) + len(P2.covers) + 2
    with pytest.raises(PosetError):
        star_compose(P1, "z2", P2, "zeta2")  # z2 is not minimal
    with pytest.raises(PosetError):
        star_compose(P1, "q", P2, "zeta2")


def test_fap_sizes_and_pieces():
    P = fap(7, 10, 6, 7)
    assert len(P) == 31
    for w, x, y, z in [(3, 1, 1, 3), (5, 2, 3, 5), (7, 3, 2, 3)]:
        P = fap(w, x, y, z)
        assert len(P) == w + x + y + z + 1
        p1 = P.induced([f"a{i}" for i in range(1, w - 1)])
        assert isomorphic(p1, fence(w - 2))
        p2 = P.induced([f"a{w}"] + [f"b{i}" for i in range(1, x + 1)] + ["omega"]
                       + [f"c{i}" for i in range(1, y + 1)] + ["d1"])
        assert isomorphic(p2, asymmetric_peak(x + 1, y + 1))
        p3 = P.induced([f"d{i}" for i in range(3, z + 1)])
        assert isomorphic(p3, fence(z - 2))
    for bad in [(4, 1, 1, 3), (3, 1, 1, 4), (1, 1, 1, 3), (3, 0, 1, 3)]:
        with pytest.raises(PosetError):
            fap(*bad)


def test_fap_double_decomposition():
    for w in (3, 5, 7):
        for z in (3, 5, 7):
            for x, y in [(1, 1), (2, 3), (3, 1)]:
                p1 = fence(w - 2).relabel(lambda e: "p1" + e)
                p2 = asymmetric_peak(x + 1, y + 1)
                p3 = fence(z - 2).relabel(lambda e: "p3" + e)
                # P1 hangs off its last element a_{w-2}, P3 off its first
                left = star_compose(star_compose(p1, f"p1z{w - 2}", p2, "a1", new="tA"),
                                    "b1", p3, "p3z1", new="tD")
                right = star_compose(p1, f"p1z{w - 2}",
                                     star_compose(p2, "b1", p3, "p3z1", new="tD"), "a1", new="tA")
                target = fap(w, x, y, z)
                assert isomorphic(left, target)
                assert isomorphic(right, target)


def test_family_records():
    for fam in (Fence(5), Crown(3), AP(2, 1), FAP(3, 1, 1, 3)):
        assert family_from_json(fam.to_json()) == fam
        assert family_from_json({**fam.to_json(), "counts": []}) == fam
    assert Fence(5).to_json() == {"family": "fence", "n": 5}
    assert Fence(4).poset() == fence(4)
    with pytest.raises(PosetError):
        family_from_json({"family": "torus", "n": 1})
