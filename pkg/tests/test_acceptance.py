"""Acceptance suite: one test per criterion, each printing its pass/fail line."""

import pytest

from splitmw import acceptance


def _run(number, capsys):
    result = acceptance.run_criterion(number)
    with capsys.disabled():
        print(f"\n{result.line()}")
    assert result.passed, result.detail


def test_criterion_1_rank1_closed_form(capsys):
    _run(1, capsys)


def test_criterion_2_minimal_basis_counts(capsys):
    _run(2, capsys)


def test_criterion_3_rank2_computer_check(capsys):
    _run(3, capsys)


def test_criterion_4_rank2_coefficients(capsys):
    _run(4, capsys)


def test_criterion_5_duality_and_direct_sums(capsys):
    _run(5, capsys)


def test_criterion_6_engine_equivalence(capsys):
    _run(6, capsys)


def test_criterion_7_orientation_oracles(capsys):
    _run(7, capsys)


def test_criterion_8_certificate_trees(capsys):
    _run(8, capsys)


def test_criterion_9_split_recognition_fixtures(capsys):
    _run(9, capsys)


def test_unknown_criterion_rejected():
    with pytest.raises(ValueError):
        acceptance.run_criterion(10)
