import json

import pytest

from lib.harness import CaseSpec, enumerate_cases, run_case, verify
from lib.perm_core import Permutation, ReducedWord

EXAMPLE_V = "12534"
EXAMPLE_WORD = (4, 3, 2, 1, 4, 3, 2, 3, 4)


def _worked_spec(**kwargs):
    return CaseSpec(n=5, v=Permutation.parse(EXAMPLE_V), word=ReducedWord(EXAMPLE_WORD, 5), **kwargs)


def test_enumerate_n2():
    cases = enumerate_cases(CaseSpec(n=2))
    assert len(cases) == 3
    assert [case.index for case in cases] == [0, 1, 2]


def test_pinned_case():
    (case,) = enumerate_cases(_worked_spec())
    assert str(case.v) == EXAMPLE_V
    assert case.word.letters == EXAMPLE_WORD


def test_pinned_word_must_be_unipeak():
    with pytest.raises(ValueError):
        enumerate_cases(CaseSpec(n=3, word=ReducedWord((1, 2, 1), 3)))


def test_sampling_is_deterministic():
    spec = CaseSpec(n=3, sample=5, seed=4)
    first = enumerate_cases(spec)
    assert len(first) == 5
    assert first == enumerate_cases(spec)
    indices = [case.index for case in first]
    assert indices == sorted(indices)


def test_exhaustive_guard():
    with pytest.raises(ValueError):
        CaseSpec(n=6)


def test_spec_checks_sizes():
    with pytest.raises(ValueError):
        CaseSpec(n=3, v=Permutation.identity(2))


def test_run_case_turns_errors_into_failures():
    case = enumerate_cases(CaseSpec(n=2))[-1]
    index, results = run_case(case, ("appearance", "quiver"), trials=2, seed=1)
    assert index == case.index
    assert all(outcome.ok for outcome, _ in results.values())


def test_verify_appearance_n3():
    report = verify(CaseSpec(n=3, trials=3), ["appearance", "m_unitriangular"])
    assert report.ok
    assert report.exit_code == 0
    assert report.checks["appearance"].passed == report.cases


def test_verify_worked_example():
    report = verify(_worked_spec(trials=3), ["variables", "quiver", "strip_maps", "base_case"])
    assert report.ok
    assert report.cases == 1


def test_verify_without_checks():
    report = verify(CaseSpec(n=2), [])
    assert report.ok
    assert report.checks == {}


def test_unknown_check():
    with pytest.raises(ValueError):
        verify(CaseSpec(n=2), ["appearance", "nonsense"])


def test_report_json_without_timing_is_deterministic():
    spec = CaseSpec(n=3, trials=3)
    first = verify(spec, ["stability", "hollow_relation"]).to_json(include_timing=False)
    second = verify(spec, ["hollow_relation", "stability"]).to_json(include_timing=False)
    assert first == second
    data = json.loads(first)
    assert list(data["checks"]) == ["stability", "hollow_relation"]
    assert "seconds" not in data["checks"]["stability"]


def test_parallel_matches_serial():
    spec = CaseSpec(n=3, trials=3)
    serial = verify(spec, ["quiver", "lec_counts"]).to_dict(include_timing=False)
    parallel = verify(spec, ["quiver", "lec_counts"], jobs=2).to_dict(include_timing=False)
    assert serial == parallel


def test_factorization_sweep():
    report = verify(CaseSpec(n=3, trials=3), ["factorization", "translation"])
    assert report.ok
    assert report.cases == 0
    assert report.checks["factorization"].cases > 0


def test_calibration_tallies():
    report = verify(CaseSpec(n=3, trials=2), ["calibration"])
    assert report.ok
    summary = report.checks["calibration"].to_dict(include_timing=False)
    assert summary["passing_orientations"]["000"] == report.cases


@pytest.mark.parametrize("check", ["hollow_relation", "spread_boundary", "exchange_ratio", "strip_maps"])
def test_structural_checks_pass_n3(check):
    report = verify(CaseSpec(n=3, trials=3), [check])
    assert report.ok, report.checks[check].to_dict(include_timing=False)
    assert report.checks[check].passed == report.cases


@pytest.mark.parametrize("v, letters", [
    ("1243", (3, 2, 3)),
    ("2143", (2, 1, 3, 2)),
])
def test_structural_checks_pass_on_pinned_n4_cases(v, letters):
    spec = CaseSpec(n=4, v=Permutation.parse(v), word=ReducedWord(letters, 4), trials=5)
    checks = ["hollow_relation", "spread_boundary", "exchange_ratio", "strip_maps", "variables", "quiver"]
    report = verify(spec, checks)
    assert report.cases == 1
    assert report.ok, {name: summary.to_dict(include_timing=False) for name, summary in report.checks.items()}
