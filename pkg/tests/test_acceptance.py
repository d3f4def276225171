"""Exit criteria for the package, one test per criterion.

The terminal summary prints a PASS/FAIL line for each.
"""

import time
from math import gcd

import pytest

from oracles import cube_difference_pairs, power_sum_pairs, sieve_factor
from taxicab import registry
from taxicab.arith import Factorization
from taxicab.cabtaxi import cabtaxi_order, decompose_difference
from taxicab.cli import main
from taxicab.cubeform import (
    Divisibility,
    decompose,
    forbidden_divisor_scan,
    lemma1_divisibility,
    median_bounds,
    median_congruence_ok,
)
from taxicab.identities import CATALOG, gaussian_quintic, sweep
from taxicab.taxisearch import SearchCheckpoint, search_range, taxicab_lower_bound

LIMIT = 10**6
R6 = 24153319581254312065344
W5 = 48988659276962496


def run_cli(capsys, *argv):
    code = main(list(argv))
    out, _ = capsys.readouterr()
    return code, out


@pytest.fixture(scope="module")
def cube_sums():
    return power_sum_pairs(LIMIT, 3)


def test_criterion_1_appendix_reproduction(capsys):
    """1. verify confirms every Appendix decomposition of T7..T14 exactly, < 5 s"""
    labels = [f"T{k}" for k in range(7, 15)]
    start = time.perf_counter()
    outputs = [run_cli(capsys, "verify", "--entry", label) for label in labels]
    elapsed = time.perf_counter() - start
    assert [o for o in outputs] == [(0, f"OK {label}\n") for label in labels]
    t7 = registry.resolve("T7")
    assert t7.value == 24885189317885898975235988544 and t7.ways == 7
    assert t7.pairs[0] == (58798362, 2919526806)
    assert registry.resolve("T14").ways == 14
    for k, label in zip(range(7, 15), labels):
        e = registry.resolve(label)
        assert e.ways == len(e.pairs) == k
        assert all(x**3 + y**3 == e.value for x, y in e.pairs)
    assert elapsed < 5.0


def test_criterion_2_multiplier_reproduction(capsys):
    """2. W5 over [2,79] hits only M=79; R6 over [2,101] first hits M=101; rows 127..7549 confirmed"""
    code, out = run_cli(capsys, "search", "--seed", "W5", "--from", "2", "--to", "79")
    assert (code, out) == (0, f"FOUND M=79 ways=6 value={R6}\n")

    start = time.perf_counter()
    hits = search_range(registry.entry_record("R6"), 2, 101, workers=4)
    assert time.perf_counter() - start <= 30 * 60
    assert [M for M, _ in hits] == [101]
    assert hits[0][1].value == registry.resolve("T7").value

    chain = [("T7", 127, "T8"), ("T8", 139, "T9"), ("T9", 377, "T10"), ("T10", 727, "T11"),
             ("T11", 2971, "T12"), ("T12", 4327, "T13"), ("T13", 7549, "T14")]
    for seed, M, target in chain:
        e = registry.resolve(target)
        code, out = run_cli(capsys, "search", "--seed", seed, "--from", str(M), "--to", str(M))
        assert (code, out) == (0, f"FOUND M={M} ways={e.ways} value={e.value}\n"), target


def test_criterion_3a_sum_oracle(spf_million, cube_sums):
    """3a. decompose(N,3) equals brute force for every N <= 10^6, both parities, <= 10 min"""
    start = time.perf_counter()
    assert [(d.x, d.y) for d in decompose(513, 3)] == [(1, 8)]
    assert [(d.x, d.y) for d in decompose(4104, 3)] == [(2, 16), (9, 15)]
    mismatches = []
    for N in range(2, LIMIT + 1):
        f = sieve_factor(N, spf_million)
        if N % 2:
            f[2] = f.get(2, 0) + 3
        got = [(d.x, d.y) for d in decompose(N, 3, Factorization.from_dict(f))]
        if got != cube_sums.get(N, []):
            mismatches.append(N)
    assert mismatches == []
    assert time.perf_counter() - start <= 600


def test_criterion_3b_difference_oracle(spf_million):
    """3b. decompose_difference equals brute force for every N <= 10^6, <= 10 min"""
    start = time.perf_counter()
    brute = cube_difference_pairs(LIMIT)
    mismatches = []
    for N in range(1, LIMIT + 1):
        F = Factorization.from_dict(sieve_factor(N, spf_million))
        if [(d.x, d.y) for d in decompose_difference(N, F)] != brute.get(N, []):
            mismatches.append(N)
    assert mismatches == []
    assert time.perf_counter() - start <= 600


def test_criterion_4_lemma_properties(spf_million, cube_sums):
    """4. Lemmas 1, 2, 4, 5 hold for every even N <= 10^6 with cubic decompositions"""
    violations = []
    for N in range(2, LIMIT + 1, 2):
        pairs = cube_sums.get(N)
        if lemma1_divisibility(N, 3) is Divisibility.DIVISIBLE_VIOLATION and pairs:
            violations.append((N, "3|N without 9|N"))
        if not pairs:
            continue
        F = Factorization.from_dict(sieve_factor(N, spf_million))
        scan = forbidden_divisor_scan(F, 3)
        lo, hi = median_bounds(N, 3)
        for x, y in pairs:
            m, h = (x + y) // 2, (y - x) // 2
            if not median_congruence_ok(m, N, 3):
                violations.append((N, "median mod 3"))
            if N % 3 and (N // (2 * m)) % 3 != 1:
                violations.append((N, "N/(2m) mod 3"))
            if N % 3 == 0 and N % 9:
                violations.append((N, "3|N without 9|N"))
            if not lo <= m <= hi or N % m:
                violations.append((N, "median bounds"))
            if gcd(m, h) == 1:
                if (m - h) % 2 and not median_congruence_ok(m, N, 3, strict=True):
                    violations.append((N, "median mod 12"))
                if not scan.admits_median(m):
                    violations.append((N, "forbidden prime"))
    assert violations == []


def test_criterion_5_lower_bound():
    """5. Lemma 3 bound stays below 1729, 87539319 and every registry T_k, increasing in k"""
    assert taxicab_lower_bound(3, 2) <= 1729
    assert taxicab_lower_bound(3, 3) <= 87539319
    values = []
    for k in range(2, 15):
        bound = taxicab_lower_bound(3, k)
        assert bound <= registry.resolve(f"T{k}").value
        values.append(bound)
    assert all(a < b for a, b in zip(values, values[1:]))


def test_criterion_6_identities():
    """6. all 14 catalog identities hold exactly on |params| <= 20; quintic (2,1) gives 3800, <= 1 min"""
    start = time.perf_counter()
    assert len(CATALOG) == 14
    for name in CATALOG:
        cases = sweep(name, 20)
        assert all(c.holds for c in cases), name
        assert sum(not c.degenerate for c in cases) > len(cases) // 2
    assert gaussian_quintic(2, 1)[1] == 3800
    assert time.perf_counter() - start <= 60


def test_criterion_7_cabtaxi_claims():
    """7. cabtaxi order of T7, T8 is at least k+2 and of 125*R6 at least 10"""
    for label, k in (("T7", 7), ("T8", 8)):
        start = time.perf_counter()
        e = registry.resolve(label)
        assert cabtaxi_order(e.value, registry.entry_factorization(label)) >= k + 2
        assert time.perf_counter() - start <= 30 * 60
    F = registry.entry_factorization("R6") * Factorization(((5, 3),))
    assert cabtaxi_order(125 * R6, F) >= 10


def test_criterion_8_determinism(capsys, tmp_path):
    """8. search over [2,79] from W5 is byte-identical for 1, 2, 8 workers and across resume at M=40"""
    args = ["search", "--seed", "W5", "--from", "2", "--to", "79"]
    outputs = {w: run_cli(capsys, *args, "--workers", str(w)) for w in (1, 2, 8)}
    assert outputs[1] == outputs[2] == outputs[8]
    assert outputs[1][0] == 0

    class Interrupt(Exception):
        pass

    def stop_before_40(M, rec):
        if M == 39:
            raise Interrupt

    path = tmp_path / "w5.ckpt"
    with pytest.raises(Interrupt):
        search_range(registry.entry_record("W5"), 2, 79, checkpoint_path=path, on_result=stop_before_40)
    assert SearchCheckpoint.load(path).next_multiplier == 40
    resumed = run_cli(capsys, *args, "--checkpoint", str(path))
    assert resumed == outputs[1]
    assert SearchCheckpoint.load(path).next_multiplier == 80
