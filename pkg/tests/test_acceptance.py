"""Golden acceptance checks, one test per criterion.

Each test calls the same runner the ``selftest`` CLI subcommand uses and
prints a single PASS/FAIL line (visible with ``pytest -s`` or on failure).

Three criteria fail by design and the failures are kept red on purpose:

* criterion 4 -- 13 of the 116 pinned small-radius table entries disagree
  with the recomputed coefficients by more than the stated 1.5e-4 (first
  offender: d=1 rr square part at r^0, pinned -0.0002 vs computed ~1e-16).
  The recomputation is validated independently against a multiprecision
  integral oracle in test_asymptotics.py, so the table entries themselves
  are the odd ones out.
* criterion 7 -- the d=1 large-radius residual decays two powers faster
  than the stated window (the next series row vanishes identically), so the
  measured log-log slopes sit near -10, outside -8 +/- 1.
* criterion 11 -- the boundary-term scan only decays with the cut radius in
  d=1; for d >= 2 the large-radius scaling ell^(2d-3-u) grows, which an
  independent multiprecision oracle confirms.

Weakening the tolerances until these pass would hide real information, so
they stay as honest failures.
"""

import pytest

from casimir_harmonic.cli import CRITERIA, run_criterion


def _check(index):
    ok, line = run_criterion(index)
    print("criterion_%02d %s: %s" % (index, "PASS" if ok else "FAIL", line))
    assert ok, line


def test_c01_bulk_energy_quadrature():
    _check(1)


def test_c02_bulk_energy_closed_forms():
    _check(2)


def test_c03_pipeline_cross_agreement():
    _check(3)


def test_c04_small_r_coefficient_tables():
    _check(4)


def test_c05_stress_profile_pins():
    _check(5)


def test_c06_conformal_split_reconstruction():
    _check(6)


def test_c07_large_r_decay_slopes():
    _check(7)


def test_c08_scale_constant_and_even_d():
    _check(8)


def test_c09_special_function_pins():
    _check(9)


def test_c10_spectral_oracle():
    _check(10)


def test_c11_boundary_term_decay():
    _check(11)


def test_criteria_table_is_complete():
    assert sorted(CRITERIA) == list(range(1, 12))
    for index, (title, runner) in CRITERIA.items():
        assert callable(runner), index
        assert title
