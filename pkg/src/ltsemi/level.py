"""Exact level of local testability (B-sense: prefixes and suffixes of
length k-1, factors of length k).

For a locally testable S with residue G = S \\ SES the level is
``max(n, l, r) + 1`` where

* ``n`` comes from the periodicity identities: every a in G contributes
  ``m(a)*|a| + 1``, every factorisation a = bc in G with
  ``a^(m+1) b != a^(m+2) b`` contributes ``(|b|+|c|)*m(a) + |b| + 1``, and
  every b in G with some c in S such that bc lies in SES and
  ``(bc) b != (bc)^2 b`` contributes ``|b| + 1`` (the same term with m = 0);
* ``l`` (``r``) is ``|g| + 1`` maximised over g in G that left (right) divide
  two distinct idempotents of one left (right) zero block.

``|g|`` is the largest number of irreducible factors of g.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .decision import is_locally_testable
from .errors import InvariantError, NotLocallyTestable
from .semigroup import (
    IdempotentBlocks,
    ProductChain,
    Semigroup,
    power_profile,
    product_chain,
    zero_blocks,
)


@dataclass(frozen=True)
class GeneratorLevels:
    g1: frozenset
    level_of: dict
    tiers: tuple


def generator_levels(S: Semigroup, chain: ProductChain) -> GeneratorLevels:
    t = S.table
    G = chain.residue
    if not G:
        raise ValueError("residue S \\ SES is empty; no generator levels to compute")
    G_sorted = sorted(G)
    G2 = {t[b][c] for b in G_sorted for c in G_sorted}
    g1 = frozenset(G - G2)
    rest = sorted(G - g1)
    g1_sorted = sorted(g1)
    tiers = [g1]
    level_of = {g: 1 for g in g1}
    # G_{i+1} = G1*G_i minus (G \ G1)*G_i; products landing in SES are dropped
    while len(level_of) < len(G):
        cur = sorted(tiers[-1])
        up = {t[g][x] for g in g1_sorted for x in cur}
        blocked = {t[h][x] for h in rest for x in cur}
        nxt = frozenset((up - blocked) & G)
        if not nxt or any(x in level_of for x in nxt):
            raise InvariantError(
                f"generator level recurrence stalled at tier {len(tiers)}")
        for x in nxt:
            level_of[x] = len(tiers) + 1
        tiers.append(nxt)
    return GeneratorLevels(g1, level_of, tuple(tiers))


@dataclass(frozen=True)
class ElementRecord:
    element: int
    m: int
    length: int
    power_term: int
    factor_term: Optional[int] = None
    factorization: Optional[tuple] = None
    # b = element, c = ideal_partner, bc in SES
    ideal_term: Optional[int] = None
    ideal_partner: Optional[int] = None

    @property
    def contribution(self) -> int:
        return max(x for x in (self.power_term, self.factor_term, self.ideal_term)
                   if x is not None)


@dataclass(frozen=True)
class DivisorRecord:
    generator: int
    side: str
    pair: tuple
    value: int


@dataclass(frozen=True)
class LevelBreakdown:
    n_bound: int
    l_bound: int
    r_bound: int
    level: int
    elements: tuple = ()
    divisors: tuple = ()
    generator_levels: Optional[dict] = field(default=None, compare=False)

    def to_dict(self) -> dict:
        return {
            "level": self.level,
            "n_bound": self.n_bound,
            "l_bound": self.l_bound,
            "r_bound": self.r_bound,
            "elements": [
                {"element": r.element, "m": r.m, "length": r.length,
                 "power_term": r.power_term, "factor_term": r.factor_term,
                 "factorization": list(r.factorization) if r.factorization else None,
                 "ideal_term": r.ideal_term, "ideal_partner": r.ideal_partner}
                for r in self.elements
            ],
            "divisors": [
                {"generator": d.generator, "side": d.side, "pair": list(d.pair),
                 "value": d.value}
                for d in self.divisors
            ],
        }


def alpha_bound(S: Semigroup, levels: GeneratorLevels) -> tuple[int, list[ElementRecord]]:
    """Largest n at which some periodicity identity still fails."""
    t = S.table
    G = sorted(levels.level_of)
    size = levels.level_of
    profiles = {}
    for a in G:
        p = power_profile(S, a)
        if p.m is None:
            raise ValueError(f"element {a} of the residue has no finite m(a)")
        profiles[a] = p
    best = {}
    for b in G:
        tb = t[b]
        for c in G:
            a = tb[c]
            if a not in size:
                continue
            p = profiles[a]
            m = p.m
            # a^(m+1) b vs a^(m+2) b
            if t[p.power(m + 1)][b] != t[p.power(m + 2)][b]:
                term = (size[b] + size[c]) * m + size[b] + 1
                if a not in best or term > best[a][0]:
                    best[a] = (term, (b, c))
    records = []
    for a in G:
        m = profiles[a].m
        term, fac = best.get(a, (None, None))
        # a as the left factor b of a product landing in the ideal
        ideal = partner = None
        ta = t[a]
        for c in S.elements:
            x = ta[c]
            if x not in size and t[x][a] != t[t[x][x]][a]:
                ideal, partner = size[a] + 1, c
                break
        records.append(ElementRecord(a, m, size[a], m * size[a] + 1, term, fac,
                                     ideal, partner))
    return max(r.contribution for r in records), records


def divisor_bound(S: Semigroup, levels: GeneratorLevels,
                  blocks: IdempotentBlocks) -> tuple[int, list[DivisorRecord]]:
    """``|g| + 1`` maximised over residue elements g dividing two idempotents
    of one zero block (on the left for left blocks, right for right)."""
    t = S.table
    where = blocks.block_index()
    records = []
    for g in sorted(levels.level_of):
        if blocks.side == "left":
            divided = {t[g][x] for x in S.elements}
        else:
            divided = {t[x][g] for x in S.elements}
        seen = {}
        for e in sorted(divided):
            b = where.get(e)
            if b is None:
                continue
            if b in seen:
                records.append(DivisorRecord(g, blocks.side, (seen[b], e),
                                             levels.level_of[g] + 1))
                break
            seen[b] = e
    return max((r.value for r in records), default=0), records


def satisfies_b1(S: Semigroup) -> bool:
    t = S.table
    return all(t[x][x] == x for x in S.elements) and all(
        t[x][y] == t[y][x] for x in S.elements for y in S.elements)


def level(S: Semigroup) -> LevelBreakdown:
    verdict = is_locally_testable(S)
    if not verdict.locally_testable:
        raise NotLocallyTestable(verdict)
    chain = product_chain(S)
    if not chain.residue:
        return LevelBreakdown(0, 0, 0, 1 if satisfies_b1(S) else 2)
    levels = generator_levels(S, chain)
    n, elements = alpha_bound(S, levels)
    l, left = divisor_bound(S, levels, zero_blocks(S, "left"))
    r, right = divisor_bound(S, levels, zero_blocks(S, "right"))
    return LevelBreakdown(n, l, r, max(n, l, r) + 1, tuple(elements),
                          tuple(left + right), dict(levels.level_of))
