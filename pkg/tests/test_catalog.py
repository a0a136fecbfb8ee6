from itertools import product

import pytest

from ltsemi.catalog import (
    A2_NAMES,
    A2_TABLE,
    KEYS,
    catalog,
    catalog_entries,
    compose,
    enumerate_semigroups,
    random_transformation_semigroups,
    transformation_subsemigroup,
)
from ltsemi.decision import is_locally_testable
from ltsemi.errors import ClosureTooLarge, SemigroupError
from ltsemi.identities import min_level
from ltsemi.semigroup import find_nonassociative_triple, format_semigroup, parse_semigroup

RULES = [("aba", "a"), ("bab", "b"), ("aa", "a"), ("bb", "0")]


def rewrite(word):
    """Normal form in <a, b | aba = a, bab = b, aa = a, bb = 0>, 0 absorbing."""
    changed = True
    while changed:
        if "0" in word:
            return "0"
        changed = False
        for lhs, rhs in RULES:
            if lhs in word:
                word = word.replace(lhs, rhs, 1)
                changed = True
                break
    return word


def test_a2_table_from_presentation():
    names = list(A2_NAMES)
    for i, x in enumerate(names):
        for j, y in enumerate(names):
            assert rewrite(x + y) == names[A2_TABLE[i][j]], (x, y)


def test_catalog_keys_build():
    for key in KEYS:
        entry = catalog(key)
        assert entry.semigroup.order >= 1


def test_catalog_errors():
    with pytest.raises(SemigroupError):
        catalog("nope")
    with pytest.raises(SemigroupError):
        catalog("leftzero", 0)
    with pytest.raises(SemigroupError):
        catalog("a2", 3)


def test_catalog_shapes():
    S = catalog("chain-semilattice", 3).semigroup
    assert S.table == ((0, 0, 0), (0, 1, 1), (0, 1, 2))
    ul = catalog("ul").semigroup
    u, e, i = 0, 1, 2
    assert all(ul.mul(u, x) == x == ul.mul(x, u) for x in ul.elements)
    assert ul.mul(e, i) == e and ul.mul(i, e) == i
    ur = catalog("ur").semigroup
    assert ur.mul(e, i) == i and ur.mul(i, e) == e


@pytest.mark.parametrize("entry", catalog_entries(5), ids=lambda e: e.name)
def test_expected_values(entry):
    S = entry.semigroup
    assert find_nonassociative_triple(S.table) is None
    lt, lvl = entry.expected
    assert is_locally_testable(S).locally_testable == lt
    assert min_level(S, "B", 12) == lvl


def recount(order):
    """Associative tables counted with the bracketing scan in a different order."""
    count = 0
    k = order
    for flat in product(range(k), repeat=k * k):
        t = [flat[i * k:(i + 1) * k] for i in range(k)]
        if all(t[i][t[j][m]] == t[t[i][j]][m]
               for m in range(k) for j in range(k) for i in range(k)):
            count += 1
    return count


@pytest.mark.parametrize("order", [1, 2, 3])
def test_enumeration_counts(order):
    tables = [S.table for S in enumerate_semigroups(order)]
    assert len(tables) == recount(order)
    assert len(tables) == {1: 1, 2: 8, 3: 113}[order]
    assert tables == sorted(tables)
    assert len(set(tables)) == len(tables)
    for S in enumerate_semigroups(order):
        assert parse_semigroup(format_semigroup(S)).table == S.table


def test_enumeration_refuses_order_4():
    with pytest.raises(SemigroupError):
        next(enumerate_semigroups(4))


def test_swap_closure():
    S, ids = transformation_subsemigroup(2, [(1, 0)])
    assert S.order == 2
    assert ids == [0]
    assert S.table == ((1, 0), (0, 1))


def test_constant_maps_compose_to_right_zero():
    c1, c2 = (0, 0, 0), (1, 1, 1)
    assert compose(c1, c2) == c2
    S, ids = transformation_subsemigroup(3, [c1, c2])
    assert S.table == ((0, 1), (0, 1))
    assert S.table == catalog("rightzero", 2).semigroup.table


def test_degree3_fixture():
    S, ids = transformation_subsemigroup(3, [(0, 0, 1), (1, 1, 0), (0, 1, 1)])
    assert find_nonassociative_triple(S.table) is None
    assert S.order == 5
    v = is_locally_testable(S)
    assert not v.locally_testable
    assert min_level(S, "B") is None


def test_closure_cap():
    with pytest.raises(ClosureTooLarge):
        transformation_subsemigroup(4, [(1, 2, 3, 0), (1, 0, 2, 3)], cap=10)
    with pytest.raises(SemigroupError):
        transformation_subsemigroup(2, [(0, 2)])


def test_random_sample_is_seeded():
    a = [S.table for _, S, _ in random_transformation_semigroups(20, seed=4)]
    b = [S.table for _, S, _ in random_transformation_semigroups(20, seed=4)]
    assert a == b and len(a) == 20


def test_transformation_tables_associative():
    for gens, S, ids in random_transformation_semigroups(60, seed=9, max_order=10):
        assert find_nonassociative_triple(S.table) is None
        for g, i in zip(gens, ids):
            assert S.names[i] == "[" + " ".join(map(str, g)) + "]"
