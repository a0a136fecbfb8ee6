import pytest

from ltsemi.catalog import (
    catalog,
    catalog_entries,
    enumerate_semigroups,
    random_transformation_semigroups,
    transformation_subsemigroup,
)


def small_corpus():
    return [S for k in (1, 2, 3) for S in enumerate_semigroups(k)]


def transformation_corpus(count=150, seed=7, max_order=8):
    seen = set()
    out = []
    for _, S, _ in random_transformation_semigroups(20 * count, seed=seed, degrees=(3, 4),
                                                     max_order=max_order):
        if S.table in seen or S.order < 2:
            continue
        seen.add(S.table)
        out.append(S)
        if len(out) == count:
            break
    return out


# order-4 fixtures where one bound of the level formula is the unique maximum
LEFT_DIVISOR_GENS = [(1, 3, 2, 3), (3, 2, 2, 3)]
RIGHT_DIVISOR_GENS = [(2, 1, 1), (0, 0, 0)]
# residue element b with b*c in SES and (bc)b != (bc)^2 b
IDEAL_FACTOR_GENS = [(0, 0, 0, 1), (0, 1, 3, 1)]


@pytest.fixture(scope="session")
def corpus():
    return small_corpus()


@pytest.fixture(scope="session")
def tcorpus():
    return transformation_corpus()


@pytest.fixture(scope="session")
def everything(corpus, tcorpus):
    return corpus + [e.semigroup for e in catalog_entries(4)] + tcorpus


@pytest.fixture
def a2():
    return catalog("a2").semigroup


@pytest.fixture
def ul():
    return catalog("ul").semigroup


@pytest.fixture
def ur():
    return catalog("ur").semigroup


@pytest.fixture
def n2():
    return catalog("null", 2).semigroup


@pytest.fixture
def z2():
    return catalog("cyclic", 2).semigroup


@pytest.fixture
def left_divisor_fixture():
    return transformation_subsemigroup(4, LEFT_DIVISOR_GENS)[0]


@pytest.fixture
def right_divisor_fixture():
    return transformation_subsemigroup(3, RIGHT_DIVISOR_GENS)[0]


@pytest.fixture
def ideal_factor_fixture():
    return transformation_subsemigroup(4, IDEAL_FACTOR_GENS)[0]
