"""Backend equivalence: the compiled kernels must agree with the pure-Python
fallback bit for bit."""

from itertools import permutations

import pytest

from strandtrace import _kernels_py, kernels

HAVE_COMPILED = kernels.BACKEND == "compiled"

CENSUS_CASES = [
    (1, []),
    (3, []),
    (4, [(1, 4)]),
    (4, [(1, 2), (2, 3), (3, 4)]),
    (4, [(1, 3), (2, 4)]),
    (4, [(2, 3), (1, 2), (3, 4), (2, 3)]),
    (5, [(1, 2), (3, 5)]),
    (6, [(1, 4), (3, 6)]),
    (11, [(1, 3), (9, 11)]),  # wide enough to exercise the dict path
]

RESTRICTED_CASES = [
    (1, [0]),
    (4, [0, 0, 1, 2]),
    (4, [0, 0, 0, 0]),
    (5, [0, 0, 1, 3, 3]),
    (6, [0, 0, 0, 1, 3, 4]),
    (6, [0, 1, 2, 3, 4, 5]),
    (4, [0, 0, 4, 0]),  # unsatisfiable bound
]

COLORING_CASES = [
    (1, [], 3),
    (4, [(1, 2), (2, 3), (3, 4)], 2),
    (4, [(1, 2), (2, 3), (3, 4)], 3),
    (3, [(1, 2), (1, 3), (2, 3)], 3),
    (5, [], 4),
    (5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)], 3),
]


def test_python_census_hand_values():
    assert _kernels_py.colored_census(3, []) == {(1, 2, 3): 1}
    assert _kernels_py.colored_census(2, [(1, 2)]) == {(1, 2): 1, (2, 1): 1}
    two = _kernels_py.colored_census(2, [(1, 2), (1, 2)])
    assert two == {(1, 2): 2, (2, 1): 2}


def test_python_restricted_against_itertools():
    n, bounds = 5, [0, 0, 1, 3, 3]
    expected = {}
    for sigma in permutations(range(1, n + 1)):
        if all(sigma[k] > bounds[k] for k in range(n)):
            ct = _kernels_py._cycle_type(sigma)
            expected[ct] = expected.get(ct, 0) + 1
    assert _kernels_py.restricted_census(n, bounds) == expected


def test_python_coloring_against_product():
    from itertools import product

    n, edges, m = 4, [(1, 2), (2, 3), (3, 4)], 3
    expected = sum(
        1
        for colors in product(range(m), repeat=n)
        if all(colors[a - 1] != colors[b - 1] for a, b in edges)
    )
    assert _kernels_py.count_colorings(n, edges, m) == expected


@pytest.mark.skipif(not HAVE_COMPILED, reason="compiled kernels not built")
@pytest.mark.parametrize("n,crossings", CENSUS_CASES)
def test_census_backends_agree(n, crossings):
    assert kernels.colored_census(n, crossings) == _kernels_py.colored_census(n, crossings)


@pytest.mark.skipif(not HAVE_COMPILED, reason="compiled kernels not built")
@pytest.mark.parametrize("n,bounds", RESTRICTED_CASES)
def test_restricted_backends_agree(n, bounds):
    assert kernels.restricted_census(n, bounds) == _kernels_py.restricted_census(n, bounds)


@pytest.mark.skipif(not HAVE_COMPILED, reason="compiled kernels not built")
@pytest.mark.parametrize("n,edges,m", COLORING_CASES)
def test_coloring_backends_agree(n, edges, m):
    assert kernels.count_colorings(n, edges, m) == _kernels_py.count_colorings(n, edges, m)


@pytest.mark.skipif(not HAVE_COMPILED, reason="compiled kernels not built")
def test_census_backends_agree_exhaustively_on_small_diagrams():
    from itertools import product as iproduct

    alphabet = [(i, j) for i in range(1, 4) for j in range(i + 1, 5)]
    for length in range(0, 3):
        for crossings in iproduct(alphabet, repeat=length):
            a = kernels.colored_census(4, list(crossings))
            b = _kernels_py.colored_census(4, list(crossings))
            assert a == b, crossings
