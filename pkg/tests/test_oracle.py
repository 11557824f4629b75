import math
import random
from itertools import combinations

import pytest

from induced_trees import (
    BudgetExceededError,
    Graph,
    OracleBudget,
    admissible_naive,
    is_induced_tree,
    max_induced_tree_exact,
    max_tree_through_vertex_exact,
    solve_exact,
)
from induced_trees.generators import (
    dyadic_bipartite,
    ms_layered,
    ms_through_vertex,
    random_triangle_free,
)


def complete_graph(n):
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle_graph(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def random_graph(n, p, rng):
    return Graph(
        n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    )


def brute_force_max_tree(g, containing=None):
    best = 0
    for k in range(1, g.n + 1):
        for s in combinations(range(g.n), k):
            if containing is not None and containing not in s:
                continue
            if is_induced_tree(g, s):
                best = max(best, k)
    return best


def random_instance(rng, max_a=8, max_b=12):
    a = rng.randint(1, max_a)
    items = []
    for _ in range(rng.randint(1, max_b)):
        degree = rng.randint(1, a)
        items.append((rng.uniform(0.0, 1.0), rng.sample(range(a), degree)))
    from induced_trees import WeightedBipartiteInstance

    return WeightedBipartiteInstance(a, items)


class TestMaxInducedTree:
    def test_clique_has_only_edges(self):
        size, witness = max_induced_tree_exact(complete_graph(5))
        assert size == 2
        assert is_induced_tree(complete_graph(5), witness)

    def test_tree_input_is_its_own_maximum(self):
        star = Graph(7, [(0, i) for i in range(1, 7)])
        size, witness = max_induced_tree_exact(star)
        assert size == 7 and witness == frozenset(range(7))

    def test_c6_is_five(self):
        # drop any single vertex of the 6-cycle: an induced P5 remains
        size, witness = max_induced_tree_exact(cycle_graph(6))
        assert size == 5
        assert is_induced_tree(cycle_graph(6), witness)

    def test_budget_on_vertices_is_hard(self):
        with pytest.raises(BudgetExceededError, match="budget"):
            max_induced_tree_exact(ms_layered(5), OracleBudget(max_vertices=20))

    def test_time_budget_is_hard(self):
        g = random_triangle_free(24, 0.2, 5)
        with pytest.raises(BudgetExceededError, match="time limit"):
            max_induced_tree_exact(
                g, OracleBudget(max_vertices=30, time_limit=1e-9)
            )

    def test_growth_matches_subset_filtering(self):
        rng = random.Random(6)
        for _ in range(25):
            n = rng.randint(1, 12)
            g = random_graph(n, rng.random(), rng)
            size, witness = max_induced_tree_exact(g)
            assert size == brute_force_max_tree(g)
            assert is_induced_tree(g, witness) and len(witness) == size


class TestMaxTreeThroughVertex:
    def test_star_center_takes_everything(self):
        star = Graph(6, [(0, i) for i in range(1, 6)])
        size, witness = max_tree_through_vertex_exact(star, 0)
        assert size == 6

    def test_layered_through_vertex_bound_is_m(self):
        g, v = ms_through_vertex(4)
        size, witness = max_tree_through_vertex_exact(g, v)
        assert size == 4
        assert v in witness

    def test_clique_through_any_vertex(self):
        size, _ = max_tree_through_vertex_exact(complete_graph(4), 2)
        assert size == 2

    def test_never_exceeds_global_maximum(self):
        rng = random.Random(8)
        for _ in range(25):
            n = rng.randint(1, 9)
            g = random_graph(n, rng.random(), rng)
            global_size, _ = max_induced_tree_exact(g)
            for v in range(n):
                through, witness = max_tree_through_vertex_exact(g, v)
                assert through <= global_size
                assert through == brute_force_max_tree(g, containing=v)
                assert v in witness


class TestAdmissibleNaive:
    def test_single_star(self):
        from induced_trees import WeightedBipartiteInstance

        inst = WeightedBipartiteInstance(1, [(4.0, [0]), (1.0, [0])])
        sel = admissible_naive(inst)
        assert sel.value == pytest.approx(3.0, rel=1e-12)

    def test_budget_enforced(self):
        from induced_trees import WeightedBipartiteInstance

        inst = WeightedBipartiteInstance(25, [(1.0, [i]) for i in range(25)])
        with pytest.raises(BudgetExceededError):
            admissible_naive(inst)

    def test_matches_solver_on_dyadic(self):
        inst = dyadic_bipartite(2)
        assert admissible_naive(inst, alpha=1.0).value == solve_exact(inst, alpha=1.0).value

    def test_matches_solver_on_random_instances(self):
        rng = random.Random(12)
        for _ in range(60):
            inst = random_instance(rng)
            alpha = rng.choice([0.5, 0.8, 1.0])
            naive = admissible_naive(inst, alpha=alpha)
            exact = solve_exact(inst, alpha=alpha)
            assert math.isclose(naive.value, exact.value, rel_tol=1e-12, abs_tol=1e-12)
