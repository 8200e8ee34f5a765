"""Genus-bounded enumeration, records, serialization, verification."""

import io
import json

import pytest

from nsg import (
    BoundTooLargeError,
    CensusRecord,
    ExceptionClass,
    MalformedRecordError,
    StarReport,
    StarVerdict,
    enumerate_records,
    enumerate_semigroups,
    make_semigroup,
    natural_numbers,
    read_records,
    record_for,
    record_to_doc,
    summarize,
    verify_star,
    work_ceiling,
    write_records,
)
from nsg.census import DEFAULT_WORK_CEILING, ENV_WORK_CEILING, RECORD_FIELDS

from oracles import naive_semigroups

KNOWN_COUNTS = [1, 1, 2, 4, 7, 12, 23, 39, 67]


def test_genus_two_census():
    found = {s.generators for s in enumerate_semigroups(2)}
    assert found == {(1,), (2, 3), (2, 5), (3, 4, 5)}


def test_walk_yields_each_semigroup_once():
    seen = [s.generators for s in enumerate_semigroups(6)]
    assert len(seen) == len(set(seen))
    assert len(seen) == sum(KNOWN_COUNTS[:7])


@pytest.mark.parametrize("genus", range(0, 7))
def test_census_matches_gap_subset_oracle(genus):
    ours = sorted(
        s.generators for s in enumerate_semigroups(6) if s.genus == genus
    )
    oracle = sorted(gens for _, gens in naive_semigroups(genus))
    assert ours == oracle


def test_enumerate_rejects_bad_bounds():
    with pytest.raises(ValueError):
        list(enumerate_semigroups(-1))
    with pytest.raises(BoundTooLargeError):
        list(enumerate_semigroups(DEFAULT_WORK_CEILING + 1))
    with pytest.raises(BoundTooLargeError):
        enumerate_records(5, ceiling=4)


def test_work_ceiling_env_override(monkeypatch):
    assert work_ceiling() == DEFAULT_WORK_CEILING
    monkeypatch.setenv(ENV_WORK_CEILING, "3")
    assert work_ceiling() == 3
    with pytest.raises(BoundTooLargeError):
        enumerate_records(4)
    monkeypatch.setenv(ENV_WORK_CEILING, "17")
    assert work_ceiling() == 17
    monkeypatch.setenv(ENV_WORK_CEILING, "many")
    with pytest.raises(ValueError):
        work_ceiling()


def test_record_for_golden():
    record = record_for(make_semigroup([2, 3]))
    assert record.generators == (2, 3)
    assert record.genus == 1
    assert record.frobenius == 1
    assert record.is_ci
    assert record.star.verdict is StarVerdict.FAILED
    assert record.star.d_max == 6
    assert record.exception is ExceptionClass.TWO_GENERATED_WITH_TWO

    record = record_for(natural_numbers())
    assert record.star.d_max is None
    assert record.exception is ExceptionClass.UNDEFINED


def test_records_are_canonically_ordered():
    records = enumerate_records(5)
    keys = [(r.genus, r.generators) for r in records]
    assert keys == sorted(keys)
    assert len(records) == sum(KNOWN_COUNTS[:6])


def test_parallel_enumeration_matches_sequential():
    sequential = enumerate_records(7)
    parallel = enumerate_records(7, jobs=2)
    assert parallel == sequential


def test_round_trip_through_file(tmp_path):
    records = enumerate_records(4)
    path = tmp_path / "census.ndjson"
    assert write_records(records, path) == len(records)
    assert list(read_records(path)) == records


def test_round_trip_through_file_objects():
    records = enumerate_records(3)
    buffer = io.StringIO()
    write_records(records, buffer)
    buffer.seek(0)
    assert list(read_records(buffer)) == records


def test_blank_lines_are_skipped():
    records = enumerate_records(2)
    buffer = io.StringIO()
    lines = [json.dumps(record_to_doc(r)) for r in records]
    text = lines[0] + "\n\n" + "\n".join(lines[1:]) + "\n\n"
    assert list(read_records(io.StringIO(text))) == records


def test_malformed_records_name_the_line():
    good = json.dumps(record_to_doc(enumerate_records(1)[1]))
    with pytest.raises(MalformedRecordError, match="line 2"):
        list(read_records(io.StringIO(good + "\nnot json\n")))
    with pytest.raises(MalformedRecordError, match="line 1.*missing"):
        list(read_records(io.StringIO('{"generators": [2, 3]}\n')))
    with pytest.raises(MalformedRecordError, match="line 1"):
        list(read_records(io.StringIO("[1, 2, 3]\n")))
    bad_verdict = good.replace('"failed"', '"maybe"')
    with pytest.raises(MalformedRecordError, match="line 2"):
        list(read_records(io.StringIO(good + "\n" + bad_verdict + "\n")))


def test_record_doc_field_order():
    doc = record_to_doc(enumerate_records(1)[1])
    assert tuple(doc) == RECORD_FIELDS


def test_margin_is_reconstructed_on_read():
    records = enumerate_records(4)
    buffer = io.StringIO()
    write_records(records, buffer)
    buffer.seek(0)
    for original, loaded in zip(records, read_records(buffer)):
        assert loaded.star.margin == original.star.margin


def test_verify_star_trivial_bound():
    summary = verify_star(0)
    assert summary.total == 1
    assert summary.ci_count == 1
    assert summary.per_genus == (1,)
    assert summary.exceptions_found == ()
    assert summary.counterexamples == ()


def test_verify_star_small_bound():
    summary = verify_star(4)
    assert summary.bound == 4
    assert summary.total == 15
    assert summary.per_genus == (1, 1, 2, 4, 7)
    assert summary.exceptions_found == (
        (2, 3),
        (2, 5),
        (2, 7),
        (3, 4),
        (2, 9),
        (3, 5),
    )
    assert summary.counterexamples == ()


def test_known_counts_through_genus_eight():
    summary = verify_star(8)
    assert summary.per_genus == tuple(KNOWN_COUNTS)
    assert summary.counterexamples == ()


def test_summarize_flags_verdict_tag_disagreement():
    records = enumerate_records(2)
    forged = CensusRecord(
        generators=(3, 4, 5),
        genus=2,
        frobenius=2,
        embedding_dim=3,
        is_ci=False,
        star=StarReport(frobenius=2, d_max=8, verdict=StarVerdict.FAILED, margin=-4),
        exception=ExceptionClass.SATISFIES,
    )
    summary = summarize(list(records) + [forged], 2)
    assert summary.counterexamples == ((3, 4, 5),)
