import pytest

from indseq.canonical import canonical
from indseq.enumeration import count_graphs, enumerate_graphs, is_max_code
from indseq.errors import BudgetExceeded
from indseq.graph_core import Graph, complete, complete_bipartite, cycle

from oracles import all_labeled_graphs, brute_canonical


def dedup_oracle(n: int) -> set[bytes]:
    """Classes on n vertices by vertex extension plus canonical() dedup."""
    level = {canonical(Graph(1, (0,)))}
    reps = {Graph(1, (0,))}
    for m in range(2, n + 1):
        nxt = {}
        for g in reps:
            for col in range(1 << (m - 1)):
                h = Graph(m, tuple(r | ((col >> i & 1) << (m - 1)) for i, r in enumerate(g.adj)) + (col,))
                nxt.setdefault(canonical(h), h)
        reps = set(nxt.values())
        level = set(nxt)
    return level


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_counts_against_permutation_oracle(n):
    expected = len({brute_canonical(g) for g in all_labeled_graphs(n)})
    assert count_graphs(n) == expected


@pytest.mark.parametrize("n, known", [(6, 156), (7, 1044)])
def test_counts_against_dedup_oracle(n, known):
    codes = [canonical(g) for g in enumerate_graphs(n)]
    assert len(codes) == len(set(codes)) == known
    assert set(codes) == dedup_oracle(n)


def test_small_counts():
    assert [count_graphs(n) for n in range(1, 8)] == [1, 2, 4, 11, 34, 156, 1044]


def test_min_degree_filter():
    brute = {brute_canonical(g) for g in all_labeled_graphs(4) if min(g.degrees()) >= 1}
    assert len(brute) == 7
    assert count_graphs(4, 1) == 7


@pytest.mark.parametrize("n", [2, 3, 5, 7])
def test_only_complete_graph_at_max_degree(n):
    graphs = list(enumerate_graphs(n, n - 1))
    assert len(graphs) == 1 and canonical(graphs[0]) == canonical(complete(n))


def test_contains_c5_and_k23():
    codes = {canonical(g) for g in enumerate_graphs(5, 2)}
    assert canonical(cycle(5)) in codes and canonical(complete_bipartite(2, 3)) in codes


def test_every_output_is_max_code():
    assert all(is_max_code(g.adj) for g in enumerate_graphs(6))


def test_deterministic_order():
    assert list(enumerate_graphs(6, 1)) == list(enumerate_graphs(6, 1))


@pytest.mark.parametrize("k", [1, 2, 3, 5])
def test_shards_partition_the_stream(k):
    full = list(enumerate_graphs(7, 1))
    shards = [list(enumerate_graphs(7, 1, shard=(i, k))) for i in range(k)]
    assert sum(len(s) for s in shards) == len(full)
    assert sorted(g.adj for s in shards for g in s) == sorted(g.adj for g in full)


def test_budget():
    with pytest.raises(BudgetExceeded):
        next(enumerate_graphs(9))
    with pytest.raises(BudgetExceeded):
        next(enumerate_graphs(11, max_n=11))
