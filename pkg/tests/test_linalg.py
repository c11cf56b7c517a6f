from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from vnum.linalg import bareiss_rank, dense_rank, rank

matrices = st.integers(1, 7).flatmap(
    lambda cols: st.lists(st.lists(st.integers(-3, 3), min_size=cols, max_size=cols), min_size=1, max_size=7)
)


def fraction_rank(rows):
    a = [[Fraction(x) for x in r] for r in rows]
    r = 0
    for c in range(len(a[0])):
        piv = next((i for i in range(r, len(a)) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(len(a)):
            if i != r and a[i][c]:
                f = a[i][c] / a[r][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
    return r


def mod_rank(rows, p):
    a = [[x % p for x in r] for r in rows]
    r = 0
    for c in range(len(a[0])):
        piv = next((i for i in range(r, len(a)) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = pow(a[r][c], -1, p)
        for i in range(len(a)):
            if i != r and a[i][c]:
                f = a[i][c] * inv % p
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[r])]
        r += 1
    return r


@settings(max_examples=200)
@given(matrices)
def test_rational_rank_matches_fractions(m):
    want = fraction_rank(m)
    assert dense_rank(m) == want
    assert bareiss_rank(m) == want


@settings(max_examples=200)
@given(matrices, st.sampled_from([2, 3, 5, 7]))
def test_modular_rank(m, p):
    assert dense_rank(m, p) == mod_rank(m, p)


def test_characteristic_matters():
    # det = 2: full rank over Q, rank 1 over F_2
    m = [[1, 1], [1, -1]]
    assert dense_rank(m) == 2
    assert dense_rank(m, 2) == 1


def test_empty_and_zero_rows():
    assert rank([]) == 0
    assert rank([{}, {0: 0}]) == 0
