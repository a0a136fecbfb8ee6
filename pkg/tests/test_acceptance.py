"""Acceptance criteria, one test each. Run with ``pytest tests/test_acceptance.py -s``
to see a PASS/FAIL line per criterion."""
import time

import pytest

from conftest import transformation_corpus
from ltsemi.automaton import parse_dfa, transition_semigroup
from ltsemi.catalog import catalog, catalog_entries, enumerate_semigroups
from ltsemi.decision import (
    NontrivialSubgroup,
    common_unit_violation,
    is_locally_testable,
    is_locally_testable_semilattice,
)
from ltsemi.identities import (
    holds_alpha,
    holds_alpha_all,
    holds_eq1_third,
    in_variety_B,
    min_level,
    word_probe,
)
from ltsemi.level import alpha_bound, generator_levels, level
from ltsemi.semigroup import idempotents, product_chain, zero_blocks


def report(number, title, ok, detail=""):
    line = f"criterion {number} {'PASS' if ok else 'FAIL'}: {title}"
    if detail:
        line += f" ({detail})"
    print("\n" + line)
    return ok


@pytest.fixture(scope="module")
def small():
    return [S for k in (1, 2, 3) for S in enumerate_semigroups(k)]


@pytest.fixture(scope="module")
def lt_corpus(small):
    """LT tables of order <= 3, every catalog entry, and seeded transformation
    semigroups of order <= 8."""
    start = time.perf_counter()
    lt_small = [S for S in small if is_locally_testable(S).locally_testable]
    entries = [e.semigroup for e in catalog_entries(5)]
    sampled = [S for S in transformation_corpus(400, seed=2024, max_order=8)
               if is_locally_testable(S).locally_testable][:150]
    lt_entries = [S for S in entries if is_locally_testable(S).locally_testable]
    return lt_small, entries, lt_entries, sampled, time.perf_counter() - start


def test_criterion_1_decision_agreement():
    start = time.perf_counter()
    counts, bad = {}, []
    for k in (1, 2, 3):
        for S in enumerate_semigroups(k):
            counts[k] = counts.get(k, 0) + 1
            a = is_locally_testable(S).locally_testable
            b = is_locally_testable_semilattice(S).locally_testable
            c = any(in_variety_B(S, n) for n in range(1, 9))
            if not a == b == c:
                bad.append(S.table)
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 60
    report(1, "decision routes agree on all tables of order <= 3", ok,
           f"counts {counts}, {len(bad)} disagreements, {elapsed:.1f}s")
    assert not bad
    assert elapsed < 60


def test_criterion_2_level_agreement(lt_corpus):
    lt_small, entries, lt_entries, sampled, build = lt_corpus
    start = time.perf_counter() - build
    corpus = lt_small + entries + sampled
    mismatches = []
    checked = 0
    for S in corpus:
        if not is_locally_testable(S).locally_testable:
            # catalog entries that are not LT have no level; the oracle must agree
            if min_level(S, "B", 12) is not None:
                mismatches.append(S.table)
            continue
        checked += 1
        if level(S).level != min_level(S, "B", 12):
            mismatches.append(S.table)
    elapsed = time.perf_counter() - start
    ok = not mismatches and elapsed < 300 and len(sampled) >= 100
    report(2, "level equals the B-sense oracle", ok,
           f"{checked} LT semigroups, {len(sampled)} sampled transformation semigroups, "
           f"{len(mismatches)} mismatches, {elapsed:.1f}s")
    assert len(sampled) >= 100
    assert all(S.order <= 8 for S in sampled)
    assert not mismatches
    assert elapsed < 300


def test_criterion_3_catalog_ground_truth():
    expected = [("a2", None, True, 2), ("chain-semilattice", 3, True, 1),
                ("ul", None, False, None), ("ur", None, False, None), ("null", 2, True, 2)]
    expected += [("cyclic", k, False, None) for k in range(2, 6)]
    expected += [(side, k, True, 2) for side in ("leftzero", "rightzero") for k in range(2, 6)]
    wrong = []
    for name, size, lt, lvl in expected:
        S = catalog(name, size).semigroup
        got_lt = is_locally_testable(S).locally_testable
        got_level = level(S).level if got_lt else None
        if (got_lt, got_level) != (lt, lvl):
            wrong.append((name, size, got_lt, got_level))
    report(3, "catalog ground truth", not wrong, f"{len(expected)} entries, wrong: {wrong}")
    assert not wrong


def lemma3_premise(S):
    t = S.table
    els = S.elements
    if {t[x][y] for x in els for y in els} != set(els):
        return False
    if any(t[x][x] != t[t[x][x]][x] for x in els):
        return False
    return all(t[t[x][y]][x] == t[t[t[t[x][y]][x]][y]][x] for x in els for y in els)


def test_criterion_4_lemma_properties(small):
    a_bad, b_bad, c_bad, c_count = [], [], [], 0
    for S in small:
        t = S.table
        ch = product_chain(S)
        E = idempotents(S)
        ses = {t[t[x][e]][y] for x in S.elements for e in E for y in S.elements}
        if ch.prod(ch.stable_exponent) != ses:
            a_bad.append(S.table)
        cap = 12
        b, tt = min_level(S, "B", cap), min_level(S, "T", cap)
        if b is not None and tt is not None:
            if not (tt <= max(b, 2) and b <= tt + 1):
                b_bad.append((S.table, b, tt))
        if lemma3_premise(S):
            c_count += 1
            third = holds_eq1_third(S)[0]
            no_pair = all(common_unit_violation(S, zero_blocks(S, side)) is None
                          for side in ("left", "right"))
            if third != no_pair:
                c_bad.append(S.table)
    ok = not (a_bad or b_bad or c_bad)
    report(4, "ideal chain, variety sandwich and common-unit equivalence", ok,
           f"(a) {len(a_bad)}, (b) {len(b_bad)}, (c) {len(c_bad)} exceptions "
           f"over {len(small)} tables, {c_count} meeting the premise of (c)")
    assert not a_bad and not b_bad and not c_bad


def test_criterion_5_alpha_sharpness(lt_corpus):
    lt_small, _, lt_entries, sampled, _ = lt_corpus
    bad, checked = [], 0
    for S in lt_small + lt_entries + sampled:
        ch = product_chain(S)
        if not ch.residue:
            continue
        checked += 1
        n, _ = alpha_bound(S, generator_levels(S, ch))
        fails_at_n = n >= 1 and not all(holds_alpha(S, n, r)[0] for r in range(1, n + 1))
        if not (fails_at_n or n == 0) or not holds_alpha_all(S, n + 1):
            bad.append((S.table, n))
    n2 = level(catalog("null", 2).semigroup).level
    ok = not bad and n2 == 2
    report(5, "alpha bound is sharp and the null semigroup has level 2", ok,
           f"{checked} semigroups with residue, {len(bad)} exceptions, N2 level {n2}")
    assert not bad
    assert n2 == 2


PROBES = [
    ("a2", None, {"a": 0, "b": 1}),
    ("null", 2, {"a": 0}),
    ("leftzero", 2, {"a": 0, "b": 1}),
    ("chain-semilattice", 3, {"a": 0, "b": 1, "c": 2}),
]


def test_criterion_6_word_probe():
    results, bad = [], []
    for name, size, gens in PROBES:
        S = catalog(name, size).semigroup
        lvl = level(S).level
        at = word_probe(S, gens, lvl, 8, "B")
        below = word_probe(S, gens, lvl - 1, 8, "B") if lvl >= 2 else "skipped"
        results.append((name, lvl, at is None, below is not None))
        if at is not None or below is None:
            bad.append(name)
    report(6, "word probe agrees with the computed level", not bad,
           "; ".join(f"{n} level {l}" for n, l, _, _ in results))
    assert not bad


def best_time(S, repeats=5):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        is_locally_testable(S)
        level(S)
        best = min(best, time.perf_counter() - start)
    return best


def test_criterion_7_quadratic_scaling():
    lines, ok = [], True
    for name in ("leftzero", "chain-semilattice"):
        times = {k: best_time(catalog(name, k).semigroup) for k in (50, 100, 200)}
        r1, r2 = times[100] / times[50], times[200] / times[100]
        ok = ok and times[200] < 1 and r1 <= 6 and r2 <= 6
        lines.append(f"{name}: {times[200] * 1000:.1f}ms at 200, ratios {r1:.2f} {r2:.2f}")
    report(7, "check plus level scales quadratically", ok, "; ".join(lines))
    assert ok


def test_criterion_8_dfa_path():
    cases = {
        "swap": "states: 2\nletter a: 1 0\n",
        "one-state": "states: 1\nletter a: 0\n",
        "degree-3": "states: 3\nletter a: 0 0 1\nletter b: 1 1 0\nletter c: 0 1 1\n",
    }
    out = {}
    for key, text in cases.items():
        S, _ = transition_semigroup(parse_dfa(text))
        v = is_locally_testable(S)
        out[key] = (S, v, level(S).level if v.locally_testable else None)
    swap_ok = (not out["swap"][1].locally_testable
               and isinstance(out["swap"][1].witness, NontrivialSubgroup))
    one_ok = out["one-state"][1].locally_testable and out["one-state"][2] == 1
    S, v, lvl = out["degree-3"]
    oracle = min_level(S, "B", 12)
    fixture_ok = v.locally_testable == (oracle is not None) and lvl == oracle
    ok = swap_ok and one_ok and fixture_ok
    report(8, "automaton inputs", ok,
           f"swap {swap_ok}, one-state {one_ok}, degree-3 order {S.order} "
           f"verdict {v.locally_testable} level {lvl} oracle {oracle}")
    assert ok
