import pytest

from oracles import cube_pairs_of, float_root, power_sum_pairs
from taxicab.arith import factorize
from taxicab.cubeform import decompose
from taxicab.registry import entry_record
from taxicab.taxisearch import (
    CheckpointMismatch,
    InvalidSeed,
    SearchCheckpoint,
    TaxicabRecord,
    candidate_medians,
    extend_record,
    max_multiplier_bound,
    median_lcm_check,
    record_from_value,
    search_range,
    search_step,
    taxicab_lower_bound,
)

W5 = 48988659276962496
R6 = 24153319581254312065344


@pytest.fixture(scope="module")
def w5():
    return record_from_value(W5, label="W5")


@pytest.fixture(scope="module")
def r6():
    return entry_record("R6")


def _record(value):
    return record_from_value(value)


def test_record_from_value(w5):
    assert w5.ways == 5
    assert w5.medians == tuple(sorted(w5.medians))
    w5.validate()


def test_validate_rejects_bad_records(w5):
    with pytest.raises(InvalidSeed):
        TaxicabRecord(W5, 3, 5, w5.medians[:-1] + (w5.medians[-1] + 3,), w5.factorization).validate()
    with pytest.raises(InvalidSeed):
        TaxicabRecord(W5, 3, 4, w5.medians, w5.factorization).validate()
    with pytest.raises(InvalidSeed):
        TaxicabRecord(W5, 3, 5, w5.medians, factorize(4104)).validate()
    with pytest.raises(InvalidSeed):
        TaxicabRecord(W5, 3, 5, w5.medians, w5.factorization, "W5", W5, (2,)).validate()


def test_max_multiplier_bound_examples():
    f = factorize
    assert max_multiplier_bound(TaxicabRecord(8, 3, 0, (), f(8))) == 8
    assert max_multiplier_bound(TaxicabRecord(1000, 3, 0, (), f(1000))) == 200
    bound = max_multiplier_bound(TaxicabRecord(W5, 3, 0, (), f(W5)))
    assert bound == 267769042044 == 2 * float_root(W5**2, 3)


def test_taxicab_lower_bound_examples():
    # frozen from a 60-digit mpmath evaluation, floored
    assert taxicab_lower_bound(3, 2) == 1065
    assert taxicab_lower_bound(3, 3) == 8525
    assert taxicab_lower_bound(5, 2) == 447314
    assert taxicab_lower_bound(7, 2) == 455065494
    assert taxicab_lower_bound(5, 2) <= W5
    values = [taxicab_lower_bound(3, k) for k in range(2, 20)]
    assert values == sorted(set(values))
    with pytest.raises(ValueError):
        taxicab_lower_bound(4, 2)


def test_lower_bound_below_brute_force_taxicabs():
    # smallest even numbers with k cube-pair representations
    brute = power_sum_pairs(10**9, 3)
    for k in (2, 3):
        smallest = min(N for N, p in brute.items() if N % 2 == 0 and len(p) >= k)
        assert taxicab_lower_bound(3, k) <= smallest


def test_median_lcm_check(w5, r6):
    four = _record(4104)
    assert four.medians == (9, 12) and median_lcm_check(four)
    assert median_lcm_check(TaxicabRecord(16, 3, 1, (2,), factorize(16)))
    assert median_lcm_check(r6)
    assert median_lcm_check(w5)


def test_search_step_examples(w5, r6):
    hit = search_step(w5, 79)
    assert hit.ways == 6 and hit.value == R6
    assert hit.chain == (79,) and hit.seed_value == W5
    assert search_step(w5, 2) is None
    t7 = search_step(r6, 101)
    assert t7.ways == 7
    assert t7.pairs()[0] == (58798362, 2919526806)


def test_search_step_lifting_and_soundness(w5):
    hit = search_step(w5, 79)
    assert {79 * m for m in w5.medians} <= set(hit.medians)
    assert [d.m for d in decompose(hit.value, 3, hit.factorization)] == list(hit.medians)
    hit.validate()


def test_search_step_against_brute_force():
    seed = _record(4104)
    for M in range(2, 61):
        N = M**3 * 4104
        expected = cube_pairs_of(N)
        hit = search_step(seed, M)
        if len(expected) > 2:
            assert hit is not None and hit.pairs() == expected
        else:
            assert hit is None


def test_split_and_plain_candidates_agree(r6):
    for M in (2, 6, 30, 79, 101):
        assert candidate_medians(r6, M, split=False) == candidate_medians(r6, M, split=True)


def test_search_step_requires_cubes():
    rec = TaxicabRecord(2 * 3**5, 5, 1, (3,), factorize(2 * 3**5))
    with pytest.raises(InvalidSeed):
        search_step(rec, 2)


def test_search_range_examples(w5, r6):
    hits = search_range(w5, 2, 79)
    assert [(M, rec.value) for M, rec in hits] == [(79, R6)]
    assert search_range(w5, 2, 10) == []
    hits = search_range(r6, 2, 101)
    assert [(M, rec.ways) for M, rec in hits] == [(101, 7)]


def test_search_range_prime_only(w5):
    seen = []
    search_range(w5, 70, 90, prime_only=True, on_result=lambda M, rec: seen.append(M))
    assert seen == [71, 73, 79, 83, 89]


def test_search_range_rejects_bad_range(w5):
    with pytest.raises(ValueError):
        search_range(w5, 1, 5)
    with pytest.raises(ValueError):
        search_range(w5, 2, max_multiplier_bound(w5) + 1)


def test_search_range_workers_identical(w5):
    serial = search_range(w5, 2, 100)
    parallel = search_range(w5, 2, 100, workers=3)
    assert serial == parallel


def test_checkpoint_text_round_trip():
    cp = SearchCheckpoint(W5, 3, 80, [(79, 123), (79, 456)])
    text = cp.to_text()
    assert text.splitlines()[:3] == [f"seed={W5}", "power=3", "next_multiplier=80"]
    assert text.splitlines()[3] == "found 79 123"
    assert SearchCheckpoint.from_text(text) == cp


@pytest.mark.parametrize(
    "text",
    ["seed=1\npower=3\n", "power=3\nseed=1\nnext_multiplier=2\n", "seed=1\npower=3\nnext_multiplier=1\n",
     "seed=1\npower=3\nnext_multiplier=5\nlost 2 3\n"],
)
def test_checkpoint_rejects_malformed(text):
    with pytest.raises(ValueError):
        SearchCheckpoint.from_text(text)


def test_checkpoint_file_is_atomic(tmp_path):
    path = tmp_path / "run.ckpt"
    SearchCheckpoint(W5, 3, 2).save(path)
    SearchCheckpoint(W5, 3, 9, [(5, 7)]).save(path)
    assert SearchCheckpoint.load(path).next_multiplier == 9
    assert [p.name for p in tmp_path.iterdir()] == ["run.ckpt"]


def test_checkpoint_mismatch(w5):
    with pytest.raises(CheckpointMismatch):
        search_range(w5, 2, 10, SearchCheckpoint(W5 + 2, 3, 2))
    with pytest.raises(CheckpointMismatch):
        search_range(w5, 2, 10, SearchCheckpoint(W5, 5, 2))


class Interrupt(Exception):
    pass


def _interrupt_at(stop_after):
    def hook(M, rec):
        if M == stop_after:
            raise Interrupt

    return hook


def test_interrupt_and_resume_replays_hits(w5, tmp_path):
    path = tmp_path / "w5.ckpt"
    full = search_range(w5, 2, 100)
    with pytest.raises(Interrupt):
        search_range(w5, 2, 100, checkpoint_path=path, on_result=_interrupt_at(85))
    cp = SearchCheckpoint.load(path)
    assert cp.next_multiplier == 86
    assert {M for M, _ in cp.found} == {79}
    resumed = search_range(w5, 2, 100, cp, checkpoint_path=path)
    assert resumed == full
    assert SearchCheckpoint.load(path).next_multiplier == 101


def test_resume_from_finished_checkpoint(w5):
    cp = SearchCheckpoint(W5, 3, 2)
    first = search_range(w5, 2, 80, cp)
    again = search_range(w5, 2, 80, cp)
    assert first == again and cp.next_multiplier == 81


def test_extend_record_validates(w5):
    hit = search_step(w5, 79)
    new = [m for m in hit.medians if m not in {79 * x for x in w5.medians}]
    assert extend_record(w5, 79, new) == hit
    with pytest.raises(InvalidSeed):
        extend_record(w5, 79, [new[0] + 3])
