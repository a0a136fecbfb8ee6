"""Complete DFAs and their transition semigroups."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .catalog import transformation_subsemigroup
from .errors import ParseError


@dataclass(frozen=True)
class Dfa:
    state_count: int
    alphabet: tuple
    transitions: dict
    start: Optional[int] = field(default=None, compare=False)
    accept: Optional[frozenset] = field(default=None, compare=False)

    def __post_init__(self):
        for a in self.alphabet:
            row = self.transitions[a]
            if len(row) != self.state_count or any(
                    not 0 <= s < self.state_count for s in row):
                raise ValueError(f"letter {a!r} is not a total map on the states")


def _states(parts, n, lineno, what):
    try:
        ids = [int(p) for p in parts]
    except ValueError:
        raise ParseError(f"non-integer state in {what}", lineno) from None
    for s in ids:
        if not 0 <= s < n:
            raise ParseError(f"unknown state {s} in {what} (states are 0..{n - 1})", lineno)
    return ids


def parse_dfa(text: str) -> Dfa:
    """Read the ``.dfa`` format: ``states: N``, then one
    ``letter X: t0 ... t(N-1)`` line per letter. ``start:`` and ``accept:``
    lines are accepted and kept but play no role in the analysis."""
    n = None
    transitions = {}
    start = accept = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, rest = line.partition(":")
        if not sep:
            raise ParseError(f"expected 'key: value', got {line!r}", lineno)
        key, parts = key.strip(), rest.split()
        if key == "states":
            if n is not None:
                raise ParseError("duplicate 'states' line", lineno)
            try:
                n = int(rest)
            except ValueError:
                raise ParseError(f"bad state count {rest.strip()!r}", lineno) from None
            if n < 1:
                raise ParseError("a DFA needs at least one state", lineno)
            continue
        if n is None:
            raise ParseError("'states: N' must come first", lineno)
        if key.startswith("letter"):
            letter = key[len("letter"):].strip()
            if not letter:
                raise ParseError("missing letter name", lineno)
            if letter in transitions:
                raise ParseError(f"duplicate letter {letter!r}", lineno)
            if len(parts) != n:
                raise ParseError(f"letter {letter!r} maps {len(parts)} states, "
                                 f"expected {n}", lineno)
            transitions[letter] = tuple(_states(parts, n, lineno, f"letter {letter!r}"))
        elif key == "start":
            (start,) = _states(parts, n, lineno, "start") if len(parts) == 1 else (None,)
            if start is None:
                raise ParseError("start takes exactly one state", lineno)
        elif key == "accept":
            accept = frozenset(_states(parts, n, lineno, "accept"))
        else:
            raise ParseError(f"unknown key {key!r}", lineno)
    if n is None:
        raise ParseError("missing 'states: N' line")
    if not transitions:
        raise ParseError("no letters defined")
    return Dfa(n, tuple(transitions), transitions, start, accept)


def transition_semigroup(d: Dfa, cap: int = 256):
    """Semigroup of transformations induced by nonempty words, with the
    element id of each letter."""
    maps = [d.transitions[a] for a in d.alphabet]
    S, ids = transformation_subsemigroup(d.state_count, maps, cap=cap)
    return S, dict(zip(d.alphabet, ids))
