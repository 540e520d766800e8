import json

import numpy as np
import pytest

from drcss.finite_field import make_field
from drcss.orthomatrix import (
    NonUnimodularError,
    OrthoMatrix,
    PaprReport,
    character_matrix,
    dft_matrix,
    example_matrix_q5,
    max_column_papr,
    papr,
    validate_orthogonality,
)


def test_character_matrix_prime_field_is_dft():
    for q in (5, 7):
        mat = character_matrix(make_field(q))
        assert mat.label == "character"
        for i in range(q):
            for j in range(q):
                assert mat.exponents[i][j] == (i * j) % q
        assert mat.exponents == dft_matrix(q).exponents


def test_character_matrix_q4_is_binary():
    mat = character_matrix(make_field(2, 2))
    assert mat.p == 2
    assert set(e for row in mat.exponents for e in row) <= {0, 1}
    assert validate_orthogonality(mat).exact


def test_dft_matrix_requires_prime():
    with pytest.raises(ValueError):
        dft_matrix(4)


def test_example_matrix_entries(example_psi):
    assert example_psi.exponents[1] == (0, 1, 2, 4, 3)
    assert example_psi.exponents[2][3] == 3
    assert example_psi.label == "example_q5"
    report = validate_orthogonality(example_psi)
    assert report.ok and report.exact
    assert report.worst_residual < 1e-12


@pytest.mark.parametrize("p,n", [(2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (7, 2)])
def test_character_matrix_exact_orthogonality(p, n):
    report = validate_orthogonality(character_matrix(make_field(p, n)))
    assert report.ok and report.exact and not report.failures


def test_identical_columns_fail_validation():
    mat = OrthoMatrix(q=2, p=2, exponents=((0, 0), (0, 0)), label="user")
    report = validate_orthogonality(mat)
    assert not report.ok and not report.exact
    assert report.failures == ((0, 1),)
    assert report.worst_residual == pytest.approx(2.0)


def test_orthomatrix_validation_errors():
    with pytest.raises(ValueError):
        OrthoMatrix(q=2, p=2, exponents=((0,), (0, 1)))
    with pytest.raises(ValueError):
        OrthoMatrix(q=2, p=2, exponents=((0, 2), (0, 1)))


def test_orthomatrix_json_round_trip(example_psi):
    text = example_psi.to_json()
    again = OrthoMatrix.from_json(text)
    assert again == example_psi
    assert again.to_json() == text


def test_orthomatrix_json_reduces_out_of_range_exponents():
    payload = {"q": 2, "p": 2, "label": "user", "exponents": [[0, 3], [0, 1]]}
    with pytest.warns(UserWarning):
        mat = OrthoMatrix.from_json(json.dumps(payload))
    assert mat.exponents == ((0, 1), (0, 1))


def test_papr_coherent_sum():
    assert papr(np.ones(5)) == pytest.approx(5.0, abs=1e-12)
    assert papr(np.ones(4), oversampling=4) == pytest.approx(4.0, abs=1e-12)


def test_papr_dft_columns_hit_peak():
    mat = dft_matrix(5).to_complex()
    for j in range(5):
        assert papr(mat[:, j], oversampling=64) == pytest.approx(5.0, abs=1e-9)


def test_papr_matches_dense_grid_oracle():
    rng = np.random.default_rng(11)
    for _ in range(5):
        u = np.exp(2j * np.pi * rng.random(8))
        coarse = papr(u, oversampling=16)
        t = np.arange(16 * 8 * 64) / (16 * 8 * 64.0)
        signal = np.exp(2j * np.pi * np.outer(t, np.arange(8))) @ u
        dense = np.max(np.abs(signal) ** 2) / 8
        assert coarse <= dense + 1e-9
        assert papr(u, oversampling=1024) == pytest.approx(dense, rel=1e-4)


def test_papr_monotone_in_oversampling():
    rng = np.random.default_rng(3)
    for _ in range(10):
        u = np.exp(2j * np.pi * rng.random(rng.integers(3, 17)))
        for level in (4, 8, 16, 32, 64):
            assert papr(u, 2 * level) >= papr(u, level) - 1e-12


def test_papr_at_least_one():
    rng = np.random.default_rng(5)
    for _ in range(20):
        u = np.exp(2j * np.pi * rng.random(12))
        assert papr(u) >= 1.0 - 1e-12


def test_papr_input_validation():
    with pytest.raises(NonUnimodularError):
        papr(np.array([1.0, 0.5]))
    with pytest.raises(ValueError):
        papr(np.ones(4), oversampling=0)
    with pytest.raises(ValueError):
        papr(np.array([]))


def test_max_column_papr_snapping_and_report(reference_sets):
    mat = reference_sets["T4"].matrices[1].to_complex()
    report = max_column_papr(mat, oversampling=64, snap_multiple=4)
    assert report.oversampling == 64  # already a multiple of 4
    assert report.max_papr == pytest.approx(4.0, abs=1e-9)
    report5 = max_column_papr(np.ones((3, 2)), oversampling=64, snap_multiple=5)
    assert report5.oversampling == 65


def test_papr_report_csv():
    report = PaprReport(per_column=(1.0, 2.5), max_papr=2.5, oversampling=64)
    lines = report.to_csv().strip().splitlines()
    assert lines[0] == "column_index,papr"
    assert lines[1].startswith("0,1.0")
    assert len(lines) == 3
