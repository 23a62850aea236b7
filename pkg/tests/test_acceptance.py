"""Acceptance criteria, one test each.

Every test records a single PASS/FAIL line through ``record_criterion``;
the lines are repeated in a summary section at the end of the pytest run.
"""

import itertools
import random
import time

import numpy as np
import pytest

from trimulti.constructors import Branch, ConstructionCertificate, realize, replay
from trimulti.generate import bench_realize, generate_valid_sequence
from trimulti.multigraph import check_triangular, degree_array
from trimulti.oracle import exists_simple_realization, exists_triangular_realization, proposition_census
from trimulti.sequence import alternating_sum, canonicalize, check_erdos_gallai, check_triangular_conditions
from trimulti.errors import NotRealizable


def _verified(g, degrees):
    return (np.array_equal(degree_array(g), np.asarray(degrees, dtype=np.int64))
            and check_triangular(g).is_triangular)


def test_soundness_sweep(record_criterion):
    start = time.perf_counter()
    failures = []
    for seed in range(1, 10_001):
        s = generate_valid_sequence(seed, (3, 200), (4, 50))
        try:
            g, _ = realize(s)
        except Exception as exc:  # noqa: BLE001 - any failure counts against the sweep
            failures.append((seed, repr(exc)))
            continue
        if not _verified(g, s.degrees):
            failures.append((seed, "verification"))
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 10.0
    record_criterion(1, "soundness sweep over 10,000 generated sequences", ok,
                     f"{10_000 - len(failures)}/10000 verified in {elapsed:.2f} s")
    assert not failures, failures[:5]
    assert elapsed < 10.0


def _branch_fixtures():
    even_d4 = generate_valid_sequence(7, (8, 8), (4, 12), accept=lambda s: alternating_sum(s) == 4)
    even_split = generate_valid_sequence(7, (10, 10), (4, 12), accept=lambda s: alternating_sum(s) == 6)
    return [
        (Branch.FanOdd, (4, 4, 4), "fan"),
        (Branch.FanEvenK1, (6, 4, 4, 4), "auto"),
        (Branch.FanEvenKGt1, (15, 5, 4, 4, 4, 4), "auto"),
        (Branch.CycleSquareOdd, (4, 4, 4, 4, 4), "cycle-square"),
        (Branch.CycleSquareD0, (5, 5, 4, 4, 4, 4), "auto"),
        (Branch.CycleSquareD2, (6, 4, 4, 4, 4, 4), "auto"),
        (Branch.CycleSquareD4, tuple(even_d4.tolist()), "auto"),
        (Branch.SmallN4D0, (4, 4, 4, 4), "auto"),
        (Branch.SplitOdd, (6, 4, 4, 4, 4, 4, 4, 4, 4), "auto"),
        (Branch.SplitEven, tuple(even_split.tolist()), "auto"),
    ]


def test_branch_coverage_and_replay(record_criterion):
    problems, hit = [], set()
    for branch, seq, how in _branch_fixtures():
        g, cert = realize(seq, original_order=False, construction=how)
        hit.add(cert.branch)
        if cert.branch is not branch:
            problems.append(f"{seq}: got {cert.branch.value}, wanted {branch.value}")
        if not _verified(g, seq):
            problems.append(f"{seq}: verification")
        again = replay(ConstructionCertificate.from_dict(cert.to_dict()))
        same = all(np.array_equal(getattr(again, a), getattr(g, a)) for a in ("u", "v", "m"))
        if not (same and again.n == g.n):
            problems.append(f"{seq}: replay differs")
    expected = {b for b in Branch if b is not Branch.SmallN3}
    ok = not problems and hit == expected
    record_criterion(2, "every construction branch hit, verified and replayed", ok,
                     f"{len(hit)} branches" + ("; " + "; ".join(problems) if problems else ""))
    assert ok, problems


def test_iff_at_small_scale(record_criterion):
    start = time.perf_counter()
    mismatches, total = [], 0
    for n in range(3, 6):
        for d in itertools.combinations_with_replacement((6, 5, 4), n):
            total += 1
            cond = check_triangular_conditions(canonicalize(d)).triangular_ok
            try:
                realize(d)
                built = True
            except NotRealizable:
                built = False
            found = exists_triangular_realization(d).exists
            if not (cond == built == found):
                mismatches.append((d, cond, built, found))
    elapsed = time.perf_counter() - start
    ok = not mismatches and elapsed < 60.0
    record_criterion(3, "conditions, construction and exhaustive search agree for n in 3..5", ok,
                     f"{total} sequences in {elapsed:.2f} s")
    assert ok, mismatches


def test_cubic_census(record_criterion):
    start = time.perf_counter()
    rows = proposition_census(8)
    elapsed = time.perf_counter() - start
    table = {r.n: r.exists for r in rows}
    ok = table == {n: n % 4 == 0 for n in range(3, 9)} and elapsed < 120.0
    record_criterion(4, "all-3 sequences realizable exactly when 4 divides n (n <= 8)", ok,
                     f"{sorted(n for n, e in table.items() if e)} exist, {elapsed:.2f} s")
    assert ok, table


def test_erdos_gallai_agreement(record_criterion):
    rng = random.Random(20240601)
    disagreements, graphical = [], 0
    for _ in range(500):
        n = rng.randint(1, 7)
        d = sorted((rng.randint(1, 6) for _ in range(n)), reverse=True)
        eg = bool(check_erdos_gallai(d).erdos_gallai_ok)
        found = exists_simple_realization(d).exists
        graphical += found
        if eg != found:
            disagreements.append(d)
    ok = not disagreements
    record_criterion(5, "graphicality test agrees with simple-graph search on 500 sequences", ok,
                     f"{graphical} graphical, {500 - graphical} not")
    assert ok, disagreements


def _violator(rng, kind):
    """Descending sequence (n <= 5, sum <= 40) failing exactly one of parity and the d1 bound."""
    while True:
        n = rng.randint(2, 5)
        d = sorted((rng.randint(1, 12) for _ in range(n)), reverse=True)
        odd = sum(d) % 2 == 1
        over = d[0] > sum(x - 1 for x in d[1:])
        if sum(d) <= 40 and (kind == "parity") == odd and (kind == "d1_bound") == over:
            return d


def test_necessary_conditions(record_criterion):
    rng = random.Random(7)
    wrong = []
    cases = [_violator(rng, kind) for kind in ("parity", "d1_bound") for _ in range(100)]
    for d in cases:
        if exists_triangular_realization(d).exists:
            wrong.append(d)
    ok = not wrong and len(cases) == 200
    record_criterion(6, "200 sequences breaking parity or the d1 bound have no realization", ok,
                     f"{len(cases) - len(wrong)}/{len(cases)} rejected")
    assert ok, wrong


@pytest.mark.slow
def test_linear_time_at_one_million(record_criterion):
    n = 10**6
    report = bench_realize(n, trials=3, seed=1)
    ok = report.median_seconds < 1.0 and report.max_pairs <= 2 * n + 1
    record_criterion(7, "realize at n = 10^6 under 1 s with at most 2n+1 pairs", ok,
                     f"median {report.median_seconds:.3f} s, {report.max_pairs} pairs, "
                     f"branches {sorted(set(report.branches))}")
    assert ok
