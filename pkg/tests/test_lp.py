import random
from fractions import Fraction

import pytest

from l1homology.errors import MalformedProgram
from l1homology.lp import LinearProgram, Status, dump_lp, solve

import oracles


def random_bounded_program(rng: random.Random):
    """At most 6 variables and 4 rows; the last row caps the sum of all variables."""
    n = rng.randint(1, 6)
    m = rng.randint(0, 3)
    A = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(m)]
    b = [rng.randint(-4, 6) for _ in range(m)]
    A.append([1] * n)
    b.append(rng.randint(0, 6))
    c = [Fraction(rng.randint(-4, 4), rng.randint(1, 2)) for _ in range(n)]
    return c, A, b


def assert_certified(lp, sol):
    assert sol.status is Status.OPTIMAL
    assert all(r == 0 for r in lp.residual(sol.primal))
    assert all(x >= 0 for x in sol.primal)
    assert sum(ci * xi for ci, xi in zip(lp.c, sol.primal)) == sol.value
    assert all(s >= 0 for s in lp.dual_slack(sol.dual))
    assert sum(bi * yi for bi, yi in zip(lp.b, sol.dual)) == sol.value


def test_single_equality():
    sol = solve(LinearProgram([1], [[1]], [1]))
    assert sol.status is Status.OPTIMAL and sol.value == 1


def test_infeasible():
    assert solve(LinearProgram([1], [[1]], [-1])).status is Status.INFEASIBLE


def test_two_vertex_example():
    # feasible vertices are (2, 0) with value 2 and (0, 1) with value 1
    lp = LinearProgram([1, 1], [[1, 2]], [2])
    sol = solve(lp)
    assert sol.value == 1 and sol.primal == (0, 1)
    assert oracles.vertex_enumeration([1, 1], [[1, 2]], [2]) == 1
    assert_certified(lp, sol)


def test_unbounded():
    assert solve(LinearProgram([-1, 0], [[1, -1]], [0])).status is Status.UNBOUNDED


def test_redundant_rows_keep_dual_valid():
    lp = LinearProgram([1, 1, 1], [[1, 1, 0], [1, 1, 0], [0, 1, 1]], [1, 1, 2])
    sol = solve(lp)
    assert sol.value == 2
    assert_certified(lp, sol)


def test_degenerate_program_terminates():
    # a classic cycling example for Dantzig's rule, in equality form with slacks
    c = [Fraction(-3, 4), 150, Fraction(-1, 50), 6, 0, 0, 0]
    A = [
        [Fraction(1, 4), -60, Fraction(-1, 25), 9, 1, 0, 0],
        [Fraction(1, 2), -90, Fraction(-1, 50), 3, 0, 1, 0],
        [0, 0, 1, 0, 0, 0, 1],
    ]
    lp = LinearProgram(c, A, [0, 0, 1])
    sol = solve(lp)
    assert sol.value == Fraction(-1, 20)
    assert_certified(lp, sol)


def test_sparse_and_dense_rows_agree():
    dense = LinearProgram([1, 2, 0], [[1, 0, 1], [0, 1, -1]], [3, 1])
    sparse = LinearProgram([1, 2, 0], [{0: 1, 2: 1}, {1: 1, 2: -1}], [3, 1])
    assert dense == sparse
    assert solve(dense) == solve(sparse)


def test_malformed_programs():
    with pytest.raises(MalformedProgram):
        LinearProgram([1, 2], [[1]], [1])
    with pytest.raises(MalformedProgram):
        LinearProgram([1], [[1]], [1, 2])
    with pytest.raises(MalformedProgram):
        LinearProgram([1], [{3: 1}], [1])


def test_deterministic():
    rng = random.Random(11)
    for _ in range(20):
        c, A, b = random_bounded_program(rng)
        assert solve(LinearProgram(c, A, b)) == solve(LinearProgram(c, A, b))


@pytest.mark.parametrize("seed", range(5))
def test_matches_vertex_enumeration(seed):
    rng = random.Random(1000 + seed)
    for _ in range(20):
        c, A, b = random_bounded_program(rng)
        lp = LinearProgram(c, A, b)
        sol = solve(lp)
        expected = oracles.vertex_enumeration(c, A, b)
        if expected is None:
            assert sol.status is Status.INFEASIBLE
        else:
            assert sol.value == expected
            assert_certified(lp, sol)


def test_dump_format():
    text = dump_lp(LinearProgram([1, Fraction(1, 2)], [[1, -2]], [3]))
    assert text == "min\nc: 1/1 1/2\nA|b: 1/1 -2/1 | 3/1\n"
