"""Smoke tests for the python bindings."""

import numpy as np
import pytest

import pbosc


def test_family_matrices():
    fam = pbosc.build_family(2)
    assert fam.s == 2 and fam.dim == 3
    np.testing.assert_allclose(
        fam.a, [[0, 1, 0], [0, 0, np.sqrt(2)], [0, 0, 0]], atol=1e-15
    )
    np.testing.assert_allclose(fam.A, np.diag([1.0, 1.0, -2.0]), atol=1e-15)
    comm = fam.a @ fam.a_dag - fam.a_dag @ fam.a
    np.testing.assert_allclose(comm, fam.A, atol=1e-12)
    assert set(fam.derived) == {"M", "M_dag", "K", "F", "F_dag"}


def test_build_family_rejects_bad_s():
    with pytest.raises(ValueError):
        pbosc.build_family(0)


def test_closure_dimension_law():
    for s in range(1, 5):
        fam = pbosc.build_family(s)
        basis = pbosc.close_algebra([fam.a, fam.a_dag, fam.A])
        assert basis.dimension() == (s + 1) ** 2 - 1
        cert = pbosc.certify_su(basis)
        assert cert["pass"]


def test_structure_constants_su2():
    fam = pbosc.build_family(1)
    basis = pbosc.close_algebra([fam.a, fam.a_dag, fam.A])
    f = pbosc.structure_constants(basis)
    assert f.shape == (3, 3, 3)
    assert f[0, 1, 2] == pytest.approx(1.0, abs=1e-12)
    np.testing.assert_allclose(f, -np.swapaxes(f, 0, 1), atol=1e-12)


def test_gellmann():
    lambdas = pbosc.gellmann_from_family(pbosc.build_family(2))
    assert len(lambdas) == 8
    for a, la in enumerate(lambdas):
        for b, lb in enumerate(lambdas):
            expected = 2.0 if a == b else 0.0
            assert np.trace(la.conj().T @ lb) == pytest.approx(expected, abs=1e-10)
    assert len(pbosc.generalized_gellmann(4)) == 15


def test_phase_vacuum_is_random_phase():
    basis = pbosc.build_phase_basis(7, 0.0)
    vacuum = np.zeros(8, dtype=complex)
    vacuum[0] = 1.0
    probs = pbosc.phase_distribution(vacuum, basis)
    np.testing.assert_allclose(probs, np.full(8, 1 / 8), atol=1e-12)
    u = pbosc.matrix_exponential(1j * basis.phase_op)
    np.testing.assert_allclose(u.conj().T @ u, np.eye(8), atol=1e-9)


def test_susy_nilpotence_and_relations():
    rep = pbosc.build_susy_rep(2, 12)
    assert np.max(np.abs(rep.Q @ rep.Q)) == 0.0
    report = pbosc.verify_susy_algebra(rep)
    assert all(row["pass"] for row in report)


def test_jc_hamiltonian_forms_agree():
    params = pbosc.JcParams(omega=1.1, omega0=0.7, g=0.3 + 0.2j, k=2)
    rep = pbosc.build_susy_rep(2, 10)
    direct = pbosc.jc_hamiltonian_direct(params, 10)
    rewritten = pbosc.jc_hamiltonian_susy_form(params, rep)
    assert np.max(np.abs(direct - rewritten)) < 1e-11


def test_quasialgebra_cell_and_energy():
    cell = pbosc.quasialgebra_cell(1, 2)
    assert cell.C == 3
    energy, restricted = pbosc.susy_pb_hamiltonian(cell, 1.0)
    assert energy == pytest.approx(1.5)
    np.testing.assert_allclose(restricted, 1.5 * np.eye(2), atol=1e-12)
    assert pbosc.binomial(6, 3) == 20


def test_hermitian_eigensystem():
    values, vectors = pbosc.hermitian_eigensystem(np.diag([1.0, 1.0, -2.0]))
    np.testing.assert_allclose(values, [-2.0, 1.0, 1.0], atol=1e-14)
    np.testing.assert_allclose(vectors.conj().T @ vectors, np.eye(3), atol=1e-9)
