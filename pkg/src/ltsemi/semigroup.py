"""Finite semigroups as multiplication tables, plus the structural pieces
(idempotents, power profiles, product chains, zero blocks) that the decision
and level algorithms are built from.

Elements are the dense ids ``0..k-1``; ``S.table[i][j]`` is the product
``i*j``.
"""

from __future__ import annotations

from dataclasses import InitVar, dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import AssociativityError, InvariantError, ParseError


def find_nonassociative_triple(table) -> Optional[tuple[int, int, int]]:
    """First triple ``(i, j, m)`` in lexicographic order with
    ``(ij)m != i(jm)``, or None if the table is associative."""
    t = np.asarray(table, dtype=np.intp)
    # left[i, j, m] = t[t[i, j], m];  right[i, j, m] = t[i, t[j, m]]
    left = t[t]
    right = t[:, t]
    bad = np.argwhere(left != right)
    if len(bad) == 0:
        return None
    i, j, m = bad[0]
    return int(i), int(j), int(m)


@dataclass(frozen=True)
class Semigroup:
    """An immutable, validated multiplication table.

    ``names`` are display strings only; ``generators`` is an optional
    generating set used by word-level tools. Pass ``check=False`` to skip the
    cubic associativity scan for tables that are associative by construction.
    """

    table: tuple
    names: Optional[tuple] = None
    generators: Optional[tuple] = None
    check: InitVar[bool] = True

    def __post_init__(self, check):
        rows = tuple(tuple(int(x) for x in row) for row in self.table)
        k = len(rows)
        if k == 0:
            raise ValueError("a semigroup needs at least one element")
        for i, row in enumerate(rows):
            if len(row) != k:
                raise ValueError(f"row {i} has {len(row)} entries, expected {k}")
            for j, x in enumerate(row):
                if not 0 <= x < k:
                    raise ValueError(f"entry ({i},{j}) = {x} is outside 0..{k - 1}")
        object.__setattr__(self, "table", rows)
        if self.names is not None:
            names = tuple(str(s) for s in self.names)
            if len(names) != k:
                raise ValueError(f"{len(names)} names given for {k} elements")
            object.__setattr__(self, "names", names)
        if self.generators is not None:
            gens = tuple(int(g) for g in self.generators)
            if any(not 0 <= g < k for g in gens):
                raise ValueError("generator id out of range")
            object.__setattr__(self, "generators", gens)
        if check:
            bad = find_nonassociative_triple(rows)
            if bad is not None:
                raise AssociativityError(bad)

    @property
    def order(self) -> int:
        return len(self.table)

    def __len__(self):
        return len(self.table)

    @property
    def elements(self) -> range:
        return range(len(self.table))

    def mul(self, x: int, y: int) -> int:
        return self.table[x][y]

    def name(self, x: int) -> str:
        return self.names[x] if self.names is not None else str(x)

    def array(self) -> np.ndarray:
        return np.array(self.table, dtype=np.intp)


def parse_semigroup(text: str, check: bool = True) -> Semigroup:
    """Read the ``.sgp`` text format.

    Lines starting with ``#`` and blank lines are ignored. The first
    significant line is the order k, the next k lines are table rows, and an
    optional final ``names: ...`` line labels the elements.
    """
    lines = [
        (n, line.strip())
        for n, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.strip().startswith("#")
    ]
    if not lines:
        raise ParseError("empty input: expected the order k")
    lineno, first = lines[0]
    try:
        k = int(first)
    except ValueError:
        raise ParseError(f"expected an integer order, got {first!r}", lineno) from None
    if k < 1:
        raise ParseError(f"order must be positive, got {k}", lineno)
    body = lines[1:]
    if len(body) < k:
        raise ParseError(f"expected {k} table rows, found {len(body)}",
                         body[-1][0] if body else lineno)
    rows = []
    for lineno, line in body[:k]:
        parts = line.split()
        try:
            row = [int(p) for p in parts]
        except ValueError:
            raise ParseError(f"non-integer entry in row {line!r}", lineno) from None
        if len(row) != k:
            raise ParseError(f"row has {len(row)} entries, expected {k}", lineno)
        for x in row:
            if not 0 <= x < k:
                raise ParseError(f"entry {x} is outside 0..{k - 1}", lineno)
        rows.append(row)
    names = None
    rest = body[k:]
    if rest:
        lineno, line = rest[0]
        if not line.startswith("names:") or len(rest) > 1:
            bad = rest[0] if not line.startswith("names:") else rest[1]
            raise ParseError(f"unexpected line {bad[1]!r}", bad[0])
        names = line[len("names:"):].split()
        if len(names) != k:
            raise ParseError(f"{len(names)} names given for {k} elements", lineno)
    try:
        return Semigroup(rows, names=names, check=check)
    except AssociativityError as exc:
        i, j, m = exc.triple
        raise AssociativityError(exc.triple, f"table is not associative: "
                                 f"({i}*{j})*{m} != {i}*({j}*{m})") from None


def format_semigroup(S: Semigroup, comment: Optional[str] = None) -> str:
    out = []
    if comment:
        out.extend(f"# {line}" for line in comment.splitlines())
    out.append(str(S.order))
    width = len(str(S.order - 1))
    for row in S.table:
        out.append(" ".join(str(x).rjust(width) for x in row))
    if S.names is not None:
        out.append("names: " + " ".join(S.names))
    return "\n".join(out) + "\n"


def multiply_word(S: Semigroup, word: Sequence[int]) -> int:
    if len(word) == 0:
        raise ValueError("cannot evaluate the empty word in a semigroup")
    t = S.table
    it = iter(word)
    x = next(it)
    for y in it:
        x = t[x][y]
    return x


def idempotents(S: Semigroup) -> list[int]:
    t = S.table
    return [e for e in S.elements if t[e][e] == e]


@dataclass(frozen=True)
class PowerProfile:
    """The sequence a, a^2, ... enters a cycle at ``a^index`` of length
    ``period``. For ``period == 1``, ``index`` is the least t with
    ``a^t = a^(t+1)`` and ``m`` is the largest m with ``a^(m+1) != a^(m+2)``
    (None when a is idempotent or the cycle is nontrivial)."""

    element: int
    index: int
    period: int
    powers: tuple  # a^1 .. a^(index + period - 1)

    @property
    def aperiodic(self) -> bool:
        return self.period == 1

    @property
    def m(self) -> Optional[int]:
        if self.period != 1 or self.index < 2:
            return None
        return self.index - 2

    def power(self, t: int) -> int:
        """a^t for any t >= 1."""
        if t < 1:
            raise ValueError("powers start at 1")
        if t <= len(self.powers):
            return self.powers[t - 1]
        return self.powers[self.index - 1 + (t - self.index) % self.period]


def power_profile(S: Semigroup, a: int) -> PowerProfile:
    t = S.table
    seen = {}
    powers = []
    x = a
    while x not in seen:
        seen[x] = len(powers) + 1
        powers.append(x)
        x = t[x][a]
    index = seen[x]
    return PowerProfile(a, index, len(powers) + 1 - index, tuple(powers))


def products(S: Semigroup, left: Iterable[int], right: Iterable[int]) -> set[int]:
    t = S.table
    right = list(right)
    return {t[x][y] for x in left for y in right}


@dataclass(frozen=True)
class ProductChain:
    """``levels[m-1]`` is the set of products of exactly m elements;
    the chain is constant from ``stable_exponent`` on and equals S*E*S there."""

    levels: tuple
    stable_exponent: int
    ses: frozenset
    residue: frozenset

    def prod(self, m: int) -> frozenset:
        if m < 1:
            raise ValueError("products have at least one factor")
        return self.levels[min(m, self.stable_exponent) - 1]


def ses_set(S: Semigroup, E: Optional[Iterable[int]] = None) -> frozenset:
    """S*E*S computed as (S*E)*S."""
    if E is None:
        E = idempotents(S)
    se = products(S, S.elements, E)
    return frozenset(products(S, se, S.elements))


def product_chain(S: Semigroup) -> ProductChain:
    everything = frozenset(S.elements)
    levels = [everything]
    while True:
        nxt = frozenset(products(S, levels[-1], S.elements))
        if nxt == levels[-1]:
            break
        levels.append(nxt)
    ses = ses_set(S)
    if ses != levels[-1]:
        raise InvariantError(
            f"stable product set {sorted(levels[-1])} differs from S*E*S {sorted(ses)}")
    return ProductChain(tuple(levels), len(levels), ses, everything - ses)


@dataclass(frozen=True)
class IdempotentBlocks:
    """Idempotents listed so that each maximal left-zero (``side='left'``,
    ef = e) or right-zero (``side='right'``, ef = f) subsemigroup is a
    contiguous run ``ordering[start:stop]``."""

    ordering: tuple
    boundaries: tuple
    side: str

    def blocks(self) -> list[tuple]:
        return [self.ordering[a:b] for a, b in self.boundaries]

    def block_index(self) -> dict:
        return {e: n for n, (a, b) in enumerate(self.boundaries)
                for e in self.ordering[a:b]}


def zero_blocks(S: Semigroup, side: str = "left") -> IdempotentBlocks:
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")
    t = S.table
    E = idempotents(S)
    if side == "left":
        related = lambda e, f: t[e][f] == e and t[f][e] == f  # noqa: E731
    else:
        related = lambda e, f: t[e][f] == f and t[f][e] == e  # noqa: E731
    placed = set()
    ordering, boundaries = [], []
    for e in E:
        if e in placed:
            continue
        start = len(ordering)
        for f in E:
            if f not in placed and (f == e or related(e, f)):
                placed.add(f)
                ordering.append(f)
        boundaries.append((start, len(ordering)))
    return IdempotentBlocks(tuple(ordering), tuple(boundaries), side)


def subsemigroup(S: Semigroup, elements: Iterable[int]) -> Semigroup:
    """Restriction of S to a multiplicatively closed subset, relabelled
    0..n-1 in ascending id order."""
    elts = sorted(set(elements))
    pos = {x: n for n, x in enumerate(elts)}
    t = S.table
    try:
        rows = [[pos[t[x][y]] for y in elts] for x in elts]
    except KeyError:
        raise ValueError("subset is not closed under multiplication") from None
    names = [S.name(x) for x in elts]
    return Semigroup(rows, names=names, check=False)


def generated_by(S: Semigroup, gens: Iterable[int]) -> frozenset:
    """Subsemigroup generated by ``gens``."""
    t = S.table
    gens = list(dict.fromkeys(gens))
    seen = set(gens)
    frontier = list(gens)
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = t[x][g]
                if y not in seen:
                    seen.add(y)
                    new.append(y)
        frontier = new
    return frozenset(seen)
