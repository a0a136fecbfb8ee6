"""Deciding local testability.

Two independent routes: :func:`is_locally_testable` runs the quadratic
pipeline (identities on S*E*S, then idempotent pairs sharing a unit) and
:func:`is_locally_testable_semilattice` checks that every local monoid eSe is
a semilattice. They must always agree.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Optional, Union

from .semigroup import (
    IdempotentBlocks,
    Semigroup,
    idempotents,
    power_profile,
    ses_set,
    zero_blocks,
)


@dataclass(frozen=True)
class IdentityViolation:
    identity: str
    substitution: tuple
    lhs: int
    rhs: int
    kind: str = "identity-violation"


@dataclass(frozen=True)
class CommonUnit:
    """Distinct idempotents ``e``, ``i`` in one left- or right-zero block,
    both fixed on either side by the idempotent ``unit``."""

    e: int
    i: int
    unit: int
    side: str
    kind: str = "common-unit"


@dataclass(frozen=True)
class NontrivialSubgroup:
    element: int
    period: int
    kind: str = "nontrivial-subgroup"


@dataclass(frozen=True)
class SemilatticeFailure:
    e: int
    x: int
    y: int
    kind: str = "semilattice-failure"


Witness = Union[IdentityViolation, CommonUnit, NontrivialSubgroup, SemilatticeFailure]


@dataclass(frozen=True)
class Verdict:
    locally_testable: bool
    method: str
    witness: Optional[Witness] = None

    def __post_init__(self):
        if self.locally_testable == (self.witness is not None):
            raise ValueError("a negative verdict needs a witness and a positive one none")

    def to_dict(self) -> dict:
        w = None
        if self.witness is not None:
            w = asdict(self.witness)
            if "substitution" in w:
                w["substitution"] = list(w["substitution"])
        return {"locally_testable": self.locally_testable, "method": self.method,
                "witness": w}


def describe_witness(S: Semigroup, w: Witness) -> str:
    n = S.name
    if isinstance(w, NontrivialSubgroup):
        return (f"nontrivial subgroup: powers of {n(w.element)} "
                f"cycle with period {w.period}")
    if isinstance(w, CommonUnit):
        return (f"{n(w.e)} and {n(w.i)} are distinct {w.side} zeroes "
                f"with common unit {n(w.unit)}")
    if isinstance(w, IdentityViolation):
        sub = ", ".join(n(x) for x in w.substitution)
        return f"identity {w.identity} fails at ({sub}): {n(w.lhs)} != {n(w.rhs)}"
    if isinstance(w, SemilatticeFailure):
        if w.x == w.y:
            return f"{n(w.x)} in {n(w.e)}S{n(w.e)} is not idempotent"
        return f"{n(w.x)} and {n(w.y)} in {n(w.e)}S{n(w.e)} do not commute"
    raise TypeError(w)


def check_ses_identities(S: Semigroup, ses) -> Optional[IdentityViolation]:
    """x^2 = x^3 and xyx = xyxyx on the ideal ``ses``."""
    t = S.table
    elts = sorted(ses)
    for x in elts:
        x2 = t[x][x]
        x3 = t[x2][x]
        if x2 != x3:
            return IdentityViolation("x^2=x^3", (x,), x2, x3)
    for x in elts:
        tx = t[x]
        for y in elts:
            xyx = t[tx[y]][x]
            xyxyx = t[t[xyx][y]][x]
            if xyx != xyxyx:
                return IdentityViolation("xyx=xyxyx", (x, y), xyx, xyxyx)
    return None


def common_unit_violation(S: Semigroup, blocks: IdempotentBlocks) -> Optional[CommonUnit]:
    """Two distinct idempotents of one zero block sharing a two-sided unit."""
    t = S.table
    where = blocks.block_index()
    for f in blocks.ordering:
        seen = {}
        for e in blocks.ordering:
            if t[f][e] == e and t[e][f] == e:
                b = where[e]
                if b in seen:
                    return CommonUnit(seen[b], e, f, blocks.side)
                seen[b] = e
    return None


def subgroup_witness(S: Semigroup) -> Optional[NontrivialSubgroup]:
    for a in S.elements:
        p = power_profile(S, a)
        if p.period > 1:
            return NontrivialSubgroup(a, p.period)
    return None


def is_locally_testable(S: Semigroup) -> Verdict:
    w = subgroup_witness(S)
    if w is None:
        E = idempotents(S)
        w = check_ses_identities(S, ses_set(S, E))
    if w is None:
        w = common_unit_violation(S, zero_blocks(S, "left"))
    if w is None:
        w = common_unit_violation(S, zero_blocks(S, "right"))
    return Verdict(w is None, "algorithm-1", w)


def local_monoid(S: Semigroup, e: int) -> list[int]:
    t = S.table
    return sorted({t[t[e][s]][e] for s in S.elements})


def is_locally_testable_semilattice(S: Semigroup) -> Verdict:
    t = S.table
    for e in idempotents(S):
        ese = local_monoid(S, e)
        for x in ese:
            if t[x][x] != x:
                return Verdict(False, "semilattice", SemilatticeFailure(e, x, x))
        for n, x in enumerate(ese):
            for y in ese[n + 1:]:
                if t[x][y] != t[y][x]:
                    return Verdict(False, "semilattice", SemilatticeFailure(e, x, y))
    return Verdict(True, "semilattice")
