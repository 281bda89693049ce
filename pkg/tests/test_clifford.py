"""Gamma matrix construction, pairing symmetries, quartic identities."""

import numpy as np
import pytest

from cealg import (
    BadIndices,
    Unsupported,
    antisym_gamma,
    build_clifford,
    check_clifford,
    quartic_fierz_check,
)
from cealg.clifford import octonion_left_mults, spin9_gammas


def test_octonion_left_mults_composition_property():
    mats = octonion_left_mults()
    assert np.array_equal(mats[0], np.eye(8, dtype=np.int64))
    for i in range(1, 8):
        assert np.array_equal(mats[i].T, -mats[i])
    for i in range(8):
        for j in range(8):
            s = mats[i] @ mats[j].T + mats[j] @ mats[i].T
            want = 2 * (1 if i == j else 0) * np.eye(8, dtype=np.int64)
            assert np.array_equal(s, want)


def test_spin9_system():
    gammas = spin9_gammas()
    assert len(gammas) == 9
    ident = np.eye(16, dtype=np.int64)
    for i, gi in enumerate(gammas):
        assert np.array_equal(gi, gi.T)
        for j, gj in enumerate(gammas):
            s = gi @ gj + gj @ gi
            assert np.array_equal(s, 2 * (1 if i == j else 0) * ident)


def test_d3_rep_matches_fixed_basis():
    rep = build_clifford(3)
    assert rep.n_spin == 2
    assert rep.gammas[0].tolist() == [[0, 1], [-1, 0]]
    assert rep.gammas[1].tolist() == [[0, 1], [1, 0]]
    assert rep.gammas[2].tolist() == [[1, 0], [0, -1]]
    assert rep.charge_conj.tolist() == [[0, 1], [-1, 0]]
    assert check_clifford(rep).ok


def test_d11_rep_anticommutators():
    rep = build_clifford(11)
    assert rep.n_spin == 32
    ident = np.eye(32, dtype=np.int64)
    for a in range(11):
        for b in range(a, 11):
            s = rep.gammas[a] @ rep.gammas[b] + rep.gammas[b] @ rep.gammas[a]
            want = 2 * (rep.eta[a] if a == b else 0) * ident
            assert np.array_equal(s, want)
    assert check_clifford(rep).ok


def test_unsupported_dimension():
    with pytest.raises(Unsupported):
        build_clifford(12)
    with pytest.raises(Unsupported):
        build_clifford(11, (11, 0))


def test_pairing_symmetry_flags_d11():
    rep = build_clifford(11)
    assert antisym_gamma(rep, (3,)).symmetry == "symmetric"
    assert antisym_gamma(rep, (0, 7)).symmetry == "symmetric"
    assert antisym_gamma(rep, (1, 2, 3, 4, 5)).symmetry == "symmetric"
    assert antisym_gamma(rep, (0, 1, 2)).symmetry == "antisymmetric"
    assert antisym_gamma(rep, (2, 4, 6, 8)).symmetry == "antisymmetric"
    assert antisym_gamma(rep, ()).symmetry == "antisymmetric"  # C itself


def test_antisym_gamma_index_validation():
    rep = build_clifford(11)
    with pytest.raises(BadIndices):
        antisym_gamma(rep, (3, 1))
    with pytest.raises(BadIndices):
        antisym_gamma(rep, (0, 11))


def test_check_clifford_negative_control():
    rep = build_clifford(11)
    rep.gammas[4][7, :] = -rep.gammas[4][7, :]
    bad = check_clifford(rep)
    assert not bad.ok
    assert "anticommutator" in bad.details


def test_quartic_closure_identities():
    assert quartic_fierz_check(build_clifford(3), "mu4-closure").ok
    assert quartic_fierz_check(build_clifford(11), "mu4-closure").ok


def test_quartic_negative_controls():
    rep = build_clifford(11)
    assert not quartic_fierz_check(rep, "mu4-closure", p_substitute=3).ok
    assert not quartic_fierz_check(rep, "mu4-closure", p_substitute=1).ok


def test_mu7_relation_constant():
    rep = quartic_fierz_check(build_clifford(11), "mu7-relation")
    assert rep.ok
    assert rep.pinned["c"] == "15/1"


def test_mu7_relation_d3_degenerate():
    rep = quartic_fierz_check(build_clifford(3), "mu7-relation")
    assert rep.ok
    assert rep.pinned["c"] is None


def test_gamma_json_export():
    rep = build_clifford(3)
    data = rep.to_json()
    assert data["gammas"][0] == [[0, 1], [-1, 0]]
    assert data["n_spin"] == 2
