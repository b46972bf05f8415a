#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pbosc/cli.hpp"
#include "pbosc/lie_closure.hpp"
#include "pbosc/phase.hpp"
#include "pbosc/susy.hpp"

namespace py = pybind11;
using namespace pbosc;

namespace {

py::list relation_report_to_list(const RelationReport& report) {
  py::list out;
  for (const auto& check : report.checks) {
    py::dict row;
    row["name"] = check.name;
    row["residual"] = check.residual;
    row["tolerance"] = check.tolerance;
    row["pass"] = check.pass;
    row["scope"] = check.scope;
    if (check.observed_coefficient) {
      row["observed_coefficient"] = *check.observed_coefficient;
    }
    out.append(std::move(row));
  }
  return out;
}

py::dict certificate_to_dict(const SuCertificate& cert) {
  py::dict out;
  out["n"] = cert.n;
  out["dimension"] = cert.dimension;
  out["pass"] = cert.pass;
  py::list clauses;
  for (const auto& clause : cert.clauses) {
    py::dict row;
    row["clause"] = clause.name;
    row["pass"] = clause.pass;
    row["residual"] = clause.residual;
    row["tolerance"] = clause.tolerance;
    clauses.append(std::move(row));
  }
  out["clauses"] = std::move(clauses);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Truncated-oscillator operator algebra: operator families, "
            "su(n) Lie closure, phase-operator formalism, and the "
            "supersymmetric sector.";
  m.attr("__version__") = cli::kToolVersion;

  py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<HermiticityError>(m, "HermiticityError",
                                           PyExc_ValueError);
  py::register_exception<TraceError>(m, "TraceError", PyExc_ValueError);
  py::register_exception<NormalizationError>(m, "NormalizationError",
                                             PyExc_ValueError);
  py::register_exception<LadderNotApplicable>(m, "LadderNotApplicable",
                                              PyExc_ValueError);
  py::register_exception<ClosureNotReached>(m, "ClosureNotReached",
                                            PyExc_RuntimeError);
  py::register_exception<CertificationFailure>(m, "CertificationFailure",
                                               PyExc_RuntimeError);
  py::register_exception<NumericError>(m, "NumericError", PyExc_RuntimeError);

  py::class_<Tolerance>(m, "Tolerance")
      .def(py::init<>())
      .def(py::init([](double abs_tol, double rel_tol) {
             return Tolerance{abs_tol, rel_tol};
           }),
           py::arg("abs_tol") = 1e-12, py::arg("rel_tol") = 1e-9)
      .def_readwrite("abs_tol", &Tolerance::abs_tol)
      .def_readwrite("rel_tol", &Tolerance::rel_tol);

  // linalg
  m.def("commutator", &commutator, py::arg("x"), py::arg("y"));
  m.def("anticommutator", &anticommutator, py::arg("x"), py::arg("y"));
  m.def("hs_inner", &hs_inner, py::arg("x"), py::arg("y"));
  m.def(
      "hermitian_eigensystem",
      [](const CMatrix& x) {
        const Eigensystem sys = hermitian_eigensystem(x);
        return py::make_tuple(sys.eigenvalues, sys.eigenvectors);
      },
      py::arg("x"),
      "Eigenvalues (ascending) and phase-fixed orthonormal eigenvectors.");
  m.def("matrix_exponential", &matrix_exponential, py::arg("x"));

  // pb_operators
  py::class_<Provenance>(m, "Provenance")
      .def_readonly("expression", &Provenance::expression)
      .def_readonly("coefficient", &Provenance::coefficient)
      .def_readonly("residual", &Provenance::residual);

  py::class_<OscillatorFamily>(m, "OscillatorFamily")
      .def_readonly("s", &OscillatorFamily::s)
      .def_readonly("dim", &OscillatorFamily::dim)
      .def_readonly("a", &OscillatorFamily::a)
      .def_readonly("a_dag", &OscillatorFamily::a_dag)
      .def_readonly("A", &OscillatorFamily::A)
      .def_readonly("derived", &OscillatorFamily::derived)
      .def_readonly("provenance", &OscillatorFamily::provenance)
      .def("has_ladder", &OscillatorFamily::has_ladder)
      .def("number_op", &OscillatorFamily::number_op);

  m.def("build_family", &build_family, py::arg("s"));
  m.def("derive_ladder", &derive_ladder, py::arg("family"));
  m.def(
      "check_ladder_relations",
      [](const OscillatorFamily& family) {
        return relation_report_to_list(check_ladder_relations(family));
      },
      py::arg("family"));
  m.def(
      "bosonic_limit_report",
      [](const std::vector<int>& s_list, int window) {
        py::list out;
        for (const auto& row : bosonic_limit_report(s_list, window)) {
          py::dict d;
          d["s"] = row.s;
          d["a_block_residual"] = row.a_block_residual;
          d["ladder_block_residual"] = row.ladder_block_residual;
          out.append(std::move(d));
        }
        return out;
      },
      py::arg("s_list"), py::arg("window"));

  // lie_closure
  py::class_<LieBasis>(m, "LieBasis")
      .def_readonly("dim_space", &LieBasis::dim_space)
      .def_readonly("basis", &LieBasis::basis)
      .def_readonly("generated_from", &LieBasis::generated_from)
      .def_readonly("closure_rounds", &LieBasis::closure_rounds)
      .def("dimension", &LieBasis::dimension);

  m.def(
      "close_algebra",
      [](const std::vector<CMatrix>& generators, int max_rounds) {
        return close_algebra(generators, Tolerance{}, max_rounds);
      },
      py::arg("generators"), py::arg("max_rounds") = 16);
  m.def("lie_basis_from_hermitian",
        [](const std::vector<CMatrix>& elements) {
          return lie_basis_from_hermitian(elements);
        },
        py::arg("elements"));
  m.def(
      "certify_su",
      [](const LieBasis& basis) { return certificate_to_dict(certify_su(basis)); },
      py::arg("basis"));
  m.def(
      "certify_su_report",
      [](const LieBasis& basis) {
        return certificate_to_dict(certify_su_report(basis));
      },
      py::arg("basis"));
  m.def(
      "structure_constants",
      [](const LieBasis& basis) {
        const StructureConstants sc = structure_constants(basis);
        const int d = sc.dimension;
        py::array_t<double> f({d, d, d});
        std::copy(sc.f.begin(), sc.f.end(), f.mutable_data());
        return f;
      },
      py::arg("basis"),
      "f[a][b][c] for generators rescaled to tr(T_a T_b) = delta_ab / 2.");
  m.def("gellmann_from_family", &gellmann_from_family, py::arg("family"));
  m.def("generalized_gellmann", &generalized_gellmann, py::arg("n"));
  m.def(
      "group_element",
      [](const CMatrix& hermitian_combo) { return group_element(hermitian_combo); },
      py::arg("hermitian_combo"));

  // phase
  py::class_<PhaseBasis>(m, "PhaseBasis")
      .def_readonly("s", &PhaseBasis::s)
      .def_readonly("theta0", &PhaseBasis::theta0)
      .def_readonly("thetas", &PhaseBasis::thetas)
      .def_readonly("states", &PhaseBasis::states)
      .def_readonly("phase_op", &PhaseBasis::phase_op);

  m.def("phase_state", &phase_state, py::arg("s"), py::arg("theta"));
  m.def("build_phase_basis", &build_phase_basis, py::arg("s"),
        py::arg("theta0") = 0.0);
  m.def("number_phase_commutator", &number_phase_commutator, py::arg("basis"));
  m.def(
      "phase_distribution",
      [](const CVector& state, const PhaseBasis& basis) {
        return phase_distribution(state, basis);
      },
      py::arg("state"), py::arg("basis"));

  // susy
  py::class_<SusyRep>(m, "SusyRep")
      .def_readonly("k", &SusyRep::k)
      .def_readonly("D", &SusyRep::D)
      .def_readonly("window", &SusyRep::window)
      .def_readonly("N", &SusyRep::N)
      .def_readonly("Nprime", &SusyRep::Nprime)
      .def_readonly("Q", &SusyRep::Q)
      .def_readonly("Q_dag", &SusyRep::Q_dag)
      .def_readonly("sigma_z", &SusyRep::sigma_z)
      .def_readonly("projector_W", &SusyRep::projector_W)
      .def("total_dim", &SusyRep::total_dim);

  py::class_<JcParams>(m, "JcParams")
      .def(py::init([](double omega, double omega0, Complex g, int k) {
             return JcParams{omega, omega0, g, k};
           }),
           py::arg("omega"), py::arg("omega0"), py::arg("g"), py::arg("k"))
      .def_readwrite("omega", &JcParams::omega)
      .def_readwrite("omega0", &JcParams::omega0)
      .def_readwrite("g", &JcParams::g)
      .def_readwrite("k", &JcParams::k)
      .def("delta", &JcParams::delta);

  py::class_<QuasiAlgebraCell>(m, "QuasiAlgebraCell")
      .def_readonly("m", &QuasiAlgebraCell::m)
      .def_readonly("k", &QuasiAlgebraCell::k)
      .def_readonly("C", &QuasiAlgebraCell::C);

  m.def("binomial", &binomial, py::arg("n"), py::arg("k"));
  m.def("build_susy_rep", &build_susy_rep, py::arg("k"), py::arg("D"));
  m.def(
      "verify_susy_algebra",
      [](const SusyRep& rep) {
        return relation_report_to_list(verify_susy_algebra(rep));
      },
      py::arg("rep"));
  m.def("jc_hamiltonian_direct", &jc_hamiltonian_direct, py::arg("params"),
        py::arg("D"));
  m.def("jc_hamiltonian_susy_form", &jc_hamiltonian_susy_form,
        py::arg("params"), py::arg("rep"));
  m.def("quasialgebra_cell", &quasialgebra_cell, py::arg("m"), py::arg("k"));
  m.def(
      "nprime_eigen_check",
      [](int k, int m, int D) {
        const NprimeCheck check = nprime_eigen_check(k, m, D);
        py::dict out;
        out["m"] = check.m;
        out["k"] = check.k;
        out["expected"] = check.expected;
        out["top_residual"] = check.top_residual;
        out["bottom_residual"] = check.bottom_residual;
        out["pass"] = check.pass;
        return out;
      },
      py::arg("k"), py::arg("m"), py::arg("D"));
  m.def(
      "quasialgebra_check",
      [](const QuasiAlgebraCell& cell, int D) {
        return relation_report_to_list(quasialgebra_check(cell, D));
      },
      py::arg("cell"), py::arg("D"));
  m.def(
      "susy_pb_hamiltonian",
      [](const QuasiAlgebraCell& cell, double Omega) {
        const SusyPbHamiltonian h = susy_pb_hamiltonian(cell, Omega);
        return py::make_tuple(h.energy, h.restricted_h);
      },
      py::arg("cell"), py::arg("Omega"));
}
