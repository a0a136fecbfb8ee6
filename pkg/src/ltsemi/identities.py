"""Brute-force identity checks used as ground truth.

Variables in an identity range over all of S, so a block of r consecutive
variables ranges over the set of products of exactly r elements. Each check
quantifies over those product sets instead of raw variable tuples, which is
equivalent and much cheaper.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .semigroup import (
    ProductChain,
    Semigroup,
    generated_by,
    idempotents,
    multiply_word,
    product_chain,
)


@dataclass(frozen=True)
class IdentityInstance:
    identity: str
    substitution: tuple
    lhs: int
    rhs: int


def _chain(S, chain):
    return chain if chain is not None else product_chain(S)


def alpha_parameters(n: int, r: int) -> tuple[int, int]:
    """(p, m) with p = (n-1) mod r and m = (n-p-1)/r."""
    p = (n - 1) % r
    return p, (n - p - 1) // r


def holds_alpha(S: Semigroup, n: int, r: int,
                chain: Optional[ProductChain] = None) -> tuple[bool, Optional[IdentityInstance]]:
    """(x1..xr)^(m+1) x1..xp = (x1..xr)^(m+2) x1..xp."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if not 1 <= r <= n:
        raise ValueError(f"r must lie in 1..{n}, got {r}")
    chain = _chain(S, chain)
    t = S.table
    p, m = alpha_parameters(n, r)
    name = f"alpha(n={n},r={r})"
    if p == 0:
        for a in sorted(chain.prod(r)):
            lhs = a
            for _ in range(m):
                lhs = t[lhs][a]
            rhs = t[lhs][a]
            if lhs != rhs:
                return False, IdentityInstance(name, (a,), lhs, rhs)
        return True, None
    cs = sorted(chain.prod(r - p))
    for b in sorted(chain.prod(p)):
        for c in cs:
            a = t[b][c]
            x = a
            for _ in range(m):
                x = t[x][a]
            lhs = t[x][b]
            rhs = t[t[x][a]][b]
            if lhs != rhs:
                return False, IdentityInstance(name, (b, c), lhs, rhs)
    return True, None


def alpha_words(n: int, r: int, substitution: Sequence[int]) -> tuple[list, list]:
    """Element words for both sides of an alpha instance."""
    p, m = alpha_parameters(n, r)
    if p == 0:
        (a,) = substitution
        return [a] * (m + 1), [a] * (m + 2)
    b, c = substitution
    return [b, c] * (m + 1) + [b], [b, c] * (m + 2) + [b]


def holds_gamma(S: Semigroup, n: int,
                chain: Optional[ProductChain] = None) -> tuple[bool, Optional[IdentityInstance]]:
    """XyXzX = XzXyX with X a product of n-1 variables."""
    if n < 2:
        raise ValueError("the gamma identity needs n >= 2")
    chain = _chain(S, chain)
    t = S.table
    elts = list(S.elements)
    for a in sorted(chain.prod(n - 1)):
        ta = t[a]
        # aya, then (aya)za and (aza)ya
        aya = [t[ta[y]][a] for y in elts]
        for y in elts:
            for z in elts:
                lhs = t[t[aya[y]][z]][a]
                rhs = t[t[aya[z]][y]][a]
                if lhs != rhs:
                    return False, IdentityInstance(f"gamma(n={n})", (a, y, z), lhs, rhs)
    return True, None


def holds_beta(S: Semigroup, n: int,
               chain: Optional[ProductChain] = None) -> tuple[bool, Optional[IdentityInstance]]:
    """t1 XyXzX t2 = t1 XzXyX t2 with X a product of n-1 variables."""
    if n < 2:
        raise ValueError("the beta identity needs n >= 2")
    chain = _chain(S, chain)
    t = S.table
    elts = list(S.elements)
    checked = set()
    for a in sorted(chain.prod(n - 1)):
        ta = t[a]
        aya = [t[ta[y]][a] for y in elts]
        for y in elts:
            for z in elts:
                u = t[t[aya[y]][z]][a]
                v = t[t[aya[z]][y]][a]
                if u == v or (u, v) in checked:
                    continue
                checked.add((u, v))
                for t1 in elts:
                    lu, lv = t[t1][u], t[t1][v]
                    for t2 in elts:
                        lhs, rhs = t[lu][t2], t[lv][t2]
                        if lhs != rhs:
                            return False, IdentityInstance(
                                f"beta(n={n})", (t1, a, y, z, t2), lhs, rhs)
    return True, None


def holds_b1(S: Semigroup) -> tuple[bool, Optional[IdentityInstance]]:
    t = S.table
    for x in S.elements:
        if t[x][x] != x:
            return False, IdentityInstance("b1-idempotent", (x,), x, t[x][x])
    for x in S.elements:
        for y in S.elements:
            if t[x][y] != t[y][x]:
                return False, IdentityInstance("b1-commutative", (x, y), t[x][y], t[y][x])
    return True, None


def holds_eq1_third(S: Semigroup, elements=None) -> tuple[bool, Optional[IdentityInstance]]:
    """xyxzx = xzxyx with all variables in ``elements`` (default: S)."""
    t = S.table
    elts = sorted(elements) if elements is not None else list(S.elements)
    for x in elts:
        for y in elts:
            xyx = t[t[x][y]][x]
            for z in elts:
                xzx = t[t[x][z]][x]
                lhs, rhs = t[t[xyx][z]][x], t[t[xzx][y]][x]
                if lhs != rhs:
                    return False, IdentityInstance("eq1-third", (x, y, z), lhs, rhs)
    return True, None


def in_variety_B(S: Semigroup, n: int, chain: Optional[ProductChain] = None) -> bool:
    if n < 1:
        raise ValueError("n must be at least 1")
    if n == 1:
        return holds_b1(S)[0]
    chain = _chain(S, chain)
    return (all(holds_alpha(S, n, r, chain)[0] for r in range(1, n + 1))
            and holds_gamma(S, n, chain)[0])


def in_variety_T(S: Semigroup, n: int, chain: Optional[ProductChain] = None) -> bool:
    if n < 2:
        raise ValueError("no identity basis is available for T_1; use n >= 2")
    chain = _chain(S, chain)
    return (all(holds_alpha(S, n, r, chain)[0] for r in range(1, n + 1))
            and holds_beta(S, n, chain)[0])


def holds_alpha_all(S: Semigroup, n: int, chain: Optional[ProductChain] = None) -> bool:
    chain = _chain(S, chain)
    return all(holds_alpha(S, n, r, chain)[0] for r in range(1, n + 1))


def min_level(S: Semigroup, sense: str = "B", cap: Optional[int] = None) -> Optional[int]:
    """Least n <= cap with S in B_n (or T_n); None if there is none.

    T-sense levels start at 2.
    """
    if sense not in ("B", "T"):
        raise ValueError(f"sense must be 'B' or 'T', not {sense!r}")
    if cap is None:
        cap = 2 * S.order + 2
    chain = product_chain(S)
    test = in_variety_B if sense == "B" else in_variety_T
    for n in range(1 if sense == "B" else 2, cap + 1):
        if test(S, n, chain):
            return n
    return None


def is_locally_idempotent(S: Semigroup) -> tuple[bool, Optional[tuple]]:
    """Every exe with e idempotent is idempotent; witness (e, x) otherwise."""
    t = S.table
    for e in idempotents(S):
        te = t[e]
        for x in S.elements:
            y = t[te[x]][e]
            if t[y][y] != y:
                return False, (e, x)
    return True, None


@dataclass(frozen=True)
class WordSignature:
    prefix: tuple
    suffix: tuple
    factors: frozenset


def signature_lengths(n: int, sense: str) -> tuple[int, int]:
    if sense == "B":
        return n - 1, n
    if sense == "T":
        return n, n
    raise ValueError(f"sense must be 'B' or 'T', not {sense!r}")


def word_signature(word: Sequence, n: int, sense: str = "B") -> WordSignature:
    """Prefix and suffix of length d (the whole word if shorter) and the set
    of all factors of length f, with (d, f) = (n-1, n) for B and (n, n) for T."""
    d, f = signature_lengths(n, sense)
    w = tuple(word)
    prefix = w[:d]
    suffix = w[len(w) - d:] if len(w) > d else w
    factors = frozenset(w[j:j + f] for j in range(len(w) - f + 1)) if f > 0 else frozenset()
    return WordSignature(prefix, suffix, factors)


def word_probe(S: Semigroup, generator_map, n: int, max_len: int = 8,
               sense: str = "B") -> Optional[tuple[tuple, tuple]]:
    """Look for two words of length <= max_len with equal level-n signatures
    but different values. Returns the first such pair, or None.

    ``generator_map`` is a mapping or a sequence of (letter, element) pairs.
    Finding nothing does not prove n-testability.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    pairs = list(generator_map.items()) if hasattr(generator_map, "items") else list(generator_map)
    letters = [a for a, _ in pairs]
    if len(set(letters)) != len(letters):
        raise ValueError("duplicate letters in generator map")
    image = dict(pairs)
    if generated_by(S, image.values()) != frozenset(S.elements):
        raise ValueError("generator images do not generate the semigroup")
    t = S.table
    buckets = {}
    layer = {(a,): image[a] for a in letters}
    for length in range(1, max_len + 1):
        for word, value in layer.items():
            sig = word_signature(word, n, sense)
            prev = buckets.setdefault(sig, (word, value))
            if prev[1] != value:
                return prev[0], word
        if length == max_len:
            break
        layer = {w + (a,): t[v][image[a]] for w, v in layer.items() for a in letters}
    return None


def evaluate(S: Semigroup, generator_map, word: Sequence) -> int:
    image = dict(generator_map.items() if hasattr(generator_map, "items") else generator_map)
    return multiply_word(S, [image[a] for a in word])
