"""Truncated-oscillator operator algebra toolkit.

Operator families at finite cutoff, su(n) Lie-closure certification,
the phase-operator formalism, and the supersymmetric block sector.
"""

from ._core import (  # noqa: F401
    CertificationFailure,
    ClosureNotReached,
    DimensionError,
    DomainError,
    HermiticityError,
    JcParams,
    LadderNotApplicable,
    LieBasis,
    NormalizationError,
    NumericError,
    OscillatorFamily,
    PhaseBasis,
    Provenance,
    QuasiAlgebraCell,
    SusyRep,
    Tolerance,
    TraceError,
    __version__,
    anticommutator,
    binomial,
    bosonic_limit_report,
    build_family,
    build_phase_basis,
    build_susy_rep,
    certify_su,
    certify_su_report,
    check_ladder_relations,
    close_algebra,
    commutator,
    derive_ladder,
    gellmann_from_family,
    generalized_gellmann,
    group_element,
    hermitian_eigensystem,
    hs_inner,
    jc_hamiltonian_direct,
    jc_hamiltonian_susy_form,
    lie_basis_from_hermitian,
    matrix_exponential,
    nprime_eigen_check,
    number_phase_commutator,
    phase_distribution,
    phase_state,
    quasialgebra_cell,
    quasialgebra_check,
    structure_constants,
    susy_pb_hamiltonian,
    verify_susy_algebra,
)
