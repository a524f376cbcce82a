"""Acceptance gate: every criterion runs at its stated budget and prints
one pass/fail line.  The same claims back ``bolkit verify-paper``."""

import time

import pytest

from bolkit.verify import VerificationSuite


@pytest.fixture(scope="module")
def suite():
    return VerificationSuite()


def run_claim(suite, number, claim_id, budget_s):
    fn = {cid: f for cid, _, f in suite.claim_definitions()}[claim_id]
    t0 = time.monotonic()
    passed, details = fn()
    elapsed = time.monotonic() - t0
    status = "PASS" if passed and elapsed < budget_s else "FAIL"
    print(f"ACCEPTANCE {number} {claim_id}: {status} ({elapsed:.1f}s) {details}")
    assert passed, details
    assert elapsed < budget_s, f"{claim_id} took {elapsed:.1f}s, budget {budget_s}s"


def test_criterion_01_example_fixture(suite):
    run_claim(suite, 1, "sec3-example-fixture", 1.0)


def test_criterion_02_order12_example(suite):
    run_claim(suite, 2, "sec5-order12-example", 1.0)


def test_criterion_03_order16_semidirect(suite):
    run_claim(suite, 3, "sec5-order16-semidirect", 1.0)


def test_criterion_04_q9_family(suite):
    t0 = time.monotonic()
    run_claim(suite, 4, "sec6-q9-family", 60.0)
    remaining = 60.0 - (time.monotonic() - t0)
    run_claim(suite, 4, "sec6-19-noniso", remaining)


def test_criterion_05_exceptional(suite):
    t0 = time.monotonic()
    run_claim(suite, 5, "sec6-exceptional", 5.0)
    remaining = 5.0 - (time.monotonic() - t0)
    run_claim(suite, 5, "sec5-21-total", remaining)


def test_criterion_06_coprime3_order16(suite):
    run_claim(suite, 6, "sec3-coprime3-order16", 30.0)


def test_criterion_07_commutant_properties(suite):
    run_claim(suite, 7, "sec2-commutant-props", 60.0)


def test_criterion_08_condition_oracle(suite):
    run_claim(suite, 8, "sec4-condition-oracle", 60.0)


def test_criterion_09_order8_oracle(suite):
    run_claim(suite, 9, "sec5-order8-oracle", 600.0)


def test_criterion_10_free_parameter_formula(suite):
    run_claim(suite, 10, "sec6-free-params", 5.0)


def test_criterion_11_tiny_iso_oracle(suite):
    run_claim(suite, 11, "tiny-iso-oracle", 60.0)
