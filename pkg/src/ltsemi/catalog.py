"""Named example semigroups and small test corpora."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product
from typing import Iterator, Optional, Sequence

from .errors import ClosureTooLarge, SemigroupError
from .semigroup import Semigroup

# rows for a, b, ab, ba, 0 of <a, b | aba = a, bab = b, aa = a, bb = 0>
A2_TABLE = (
    (0, 2, 2, 0, 4),
    (3, 4, 1, 4, 4),
    (0, 4, 2, 4, 4),
    (3, 1, 1, 3, 4),
    (4, 4, 4, 4, 4),
)
A2_NAMES = ("a", "b", "ab", "ba", "0")


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    semigroup: Semigroup
    # (locally_testable, B-level or None) and where the values come from
    expected: Optional[tuple] = None
    provenance: Optional[str] = None


def _a2():
    return Semigroup(A2_TABLE, names=A2_NAMES, generators=(0, 1))


def _left_zero(k):
    return Semigroup([[i] * k for i in range(k)], generators=range(k), check=False)


def _right_zero(k):
    return Semigroup([list(range(k)) for _ in range(k)], generators=range(k), check=False)


def _null(k):
    # zero is the last element
    z = k - 1
    names = [f"a{i}" for i in range(1, k)] + ["0"]
    return Semigroup([[z] * k for _ in range(k)], names=names,
                     generators=range(max(k - 1, 1)), check=False)


def _chain_semilattice(k):
    return Semigroup([[min(i, j) for j in range(k)] for i in range(k)],
                     generators=range(k), check=False)


def _cyclic(k):
    return Semigroup([[(i + j) % k for j in range(k)] for i in range(k)],
                     generators=(1 % k,), check=False)


def _monogenic(index):
    # element i is a^(i+1); a^index = a^(index+1)
    def power(e):
        return min(e, index) - 1
    names = ["a"] + [f"a^{i}" for i in range(2, index + 1)]
    return Semigroup([[power(i + j + 2) for j in range(index)] for i in range(index)],
                     names=names, generators=(0,), check=False)


def _ul():
    # u is the identity, e and i are left zeroes
    return Semigroup([[0, 1, 2], [1, 1, 1], [2, 2, 2]], names=("u", "e", "i"),
                     generators=(0, 1, 2))


def _ur():
    return Semigroup([[0, 1, 2], [1, 1, 2], [2, 1, 2]], names=("u", "e", "i"),
                     generators=(0, 1, 2))


SIZED = {"leftzero", "rightzero", "null", "chain-semilattice", "cyclic", "monogenic"}
KEYS = ("a2", "trivial", "leftzero", "rightzero", "null", "chain-semilattice",
        "cyclic", "ul", "ur", "monogenic")


def catalog(name: str, size: Optional[int] = None) -> CatalogEntry:
    if name not in KEYS:
        raise SemigroupError(f"unknown catalog key {name!r}; known: {', '.join(KEYS)}")
    if name in SIZED:
        if size is None:
            size = 2
        if size < 1:
            raise SemigroupError(f"size must be at least 1, got {size}")
    elif size is not None:
        raise SemigroupError(f"catalog entry {name!r} takes no size")
    label = f"{name}({size})" if size is not None else name

    if name == "a2":
        return CatalogEntry(label, _a2(), (True, 2), "literature")
    if name == "trivial":
        return CatalogEntry(label, Semigroup([[0]], generators=(0,)), (True, 1), "trivial")
    if name == "ul":
        return CatalogEntry(label, _ul(), (False, None), "literature")
    if name == "ur":
        return CatalogEntry(label, _ur(), (False, None), "literature")
    if name == "chain-semilattice":
        return CatalogEntry(label, _chain_semilattice(size), (True, 1), "literature")
    if name == "cyclic":
        expected = (True, 1) if size == 1 else (False, None)
        return CatalogEntry(label, _cyclic(size), expected, "literature")
    if name in ("leftzero", "rightzero", "null"):
        build = {"leftzero": _left_zero, "rightzero": _right_zero, "null": _null}[name]
        expected = (True, 1) if size == 1 else (True, 2)
        return CatalogEntry(label, build(size), expected, "derived")
    # monogenic: a..a^(index) with a^index idempotent
    return CatalogEntry(label, _monogenic(size), (True, size), "derived")


def catalog_entries(max_size: int = 5) -> list[CatalogEntry]:
    """Every catalog key, sized ones at sizes 1..max_size."""
    out = []
    for key in KEYS:
        if key in SIZED:
            out.extend(catalog(key, n) for n in range(1, max_size + 1))
        else:
            out.append(catalog(key))
    return out


def _associative(rows, k):
    for i in range(k):
        ri = rows[i]
        for j in range(k):
            rij = rows[ri[j]]
            rj = rows[j]
            for m in range(k):
                if rij[m] != ri[rj[m]]:
                    return False
    return True


def enumerate_semigroups(order: int) -> Iterator[Semigroup]:
    """All associative tables on 0..order-1, in lexicographic order."""
    if not 1 <= order <= 3:
        raise SemigroupError(f"exhaustive enumeration supports orders 1..3, not {order}")
    k = order
    for flat in product(range(k), repeat=k * k):
        rows = [flat[i * k:(i + 1) * k] for i in range(k)]
        if _associative(rows, k):
            yield Semigroup(rows, check=False)


def compose(f: Sequence[int], g: Sequence[int]) -> tuple:
    """Apply f, then g."""
    return tuple(g[x] for x in f)


def transformation_subsemigroup(degree: int, generators, cap: int = 64):
    """Close maps on 0..degree-1 under composition (left to right action).

    Returns the Cayley table as a Semigroup and the element id of each
    generator, in the order given.
    """
    gens = [tuple(int(x) for x in g) for g in generators]
    if not gens:
        raise SemigroupError("need at least one generator")
    for g in gens:
        if len(g) != degree or any(not 0 <= x < degree for x in g):
            raise SemigroupError(f"{list(g)} is not a total map on 0..{degree - 1}")
    elements = list(dict.fromkeys(gens))
    index = {x: n for n, x in enumerate(elements)}
    if len(elements) > cap:
        raise ClosureTooLarge(f"closure exceeds cap {cap}")
    n = 0
    while n < len(elements):
        x = elements[n]
        for g in gens:
            y = compose(x, g)
            if y not in index:
                if len(elements) >= cap:
                    raise ClosureTooLarge(f"closure exceeds cap {cap}")
                index[y] = len(elements)
                elements.append(y)
        n += 1
    table = [[index[compose(x, y)] for y in elements] for x in elements]
    names = ["[" + " ".join(map(str, x)) + "]" for x in elements]
    gen_ids = [index[g] for g in gens]
    S = Semigroup(table, names=names, generators=dict.fromkeys(gen_ids), check=False)
    return S, gen_ids


def random_transformation_semigroups(count: int, seed: int = 0, degrees=(2, 3, 4),
                                     max_order: int = 8, max_gens: int = 3,
                                     attempts: int = 100000):
    """Seeded sample of transformation semigroups with at most ``max_order``
    elements. Yields (generators, Semigroup, generator ids)."""
    rng = random.Random(seed)
    found = 0
    for _ in range(attempts):
        if found >= count:
            return
        d = rng.choice(degrees)
        ngens = rng.randint(1, max_gens)
        gens = [tuple(rng.randrange(d) for _ in range(d)) for _ in range(ngens)]
        try:
            S, ids = transformation_subsemigroup(d, gens, cap=max_order)
        except ClosureTooLarge:
            continue
        found += 1
        yield gens, S, ids
