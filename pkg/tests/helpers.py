import networkx as nx

from whitney import Poset


def hasse(P: Poset) -> nx.DiGraph:
    g = nx.DiGraph()
    g.add_nodes_from(P.elements)
    g.add_edges_from(P.covers)
    return g


def isomorphic(P: Poset, Q: Poset) -> bool:
    return nx.is_isomorphic(hasse(P), hasse(Q))


def fib(n):
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def lucas(n):
    a, b = 2, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def random_poset(draw, st, max_size=8, prefix="p"):
    """Hypothesis helper: a random DAG on up to max_size labelled elements."""
    n = draw(st.integers(0, max_size))
    elems = [f"{prefix}{i}" for i in range(n)]
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    perm = draw(st.permutations(elems))  # shuffle so element order is not a linear extension
    return Poset(perm, [(elems[i], elems[j]) for i, j in chosen])
