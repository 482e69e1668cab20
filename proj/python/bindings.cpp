#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "semiroots/inversion.hpp"
#include "semiroots/perturbation.hpp"
#include "semiroots/residue.hpp"
#include "semiroots/verify.hpp"

namespace py = pybind11;
using namespace semiroots;

namespace {

Poly to_poly(const std::vector<Cplx>& c) { return Poly(c); }
std::vector<Cplx> coeffs(const Poly& p) { return p.coeffs(); }

py::dict one_shift_dict(const OneShiftSolution& s, const PositivityEntry& e) {
  py::dict d;
  d["label"] = s.label;
  d["alpha"] = s.alpha;
  d["beta"] = s.beta;
  d["sigma"] = s.sigma;
  d["valid"] = s.valid;
  d["coincident"] = s.coincident;
  d["real"] = e.is_real;
  d["positive"] = e.is_positive;
  return d;
}

py::dict two_shift_dict(const TwoShiftSolution& s, const PositivityEntry& e) {
  py::dict d;
  d["label"] = s.label;
  d["alpha"] = s.alpha;
  d["beta"] = s.beta;
  d["gamma"] = s.gamma;
  d["delta"] = s.delta;
  d["r"] = s.r;
  d["real"] = e.is_real;
  d["positive"] = e.is_positive;
  return d;
}

TwoShiftFamily family(const std::string& name) {
  const auto f = two_shift_family_from_string(name);
  if (!f) throw py::value_error("unknown family " + name);
  return *f;
}

}  // namespace

PYBIND11_MODULE(_semiroots, m) {
  m.doc() = "Stieltjes transforms of semicircle perturbations";

  py::register_exception<Error>(m, "SemirootsError");

  m.def("sqrt_branch", [](Cplx w, double c) { return sqrt_branch(w, SemicircleParam(c)); }, py::arg("w"), py::arg("c"));
  m.def("rho", [](Cplx w, double c) { return rho(w, SemicircleParam(c)); }, py::arg("w"), py::arg("c"));

  py::class_<AlgebraicStieltjes>(m, "Transform")
      .def(py::init([](const std::vector<Cplx>& F, Cplx kappa, const std::vector<Cplx>& G, double c) {
             return AlgebraicStieltjes(to_poly(F), kappa, to_poly(G), SemicircleParam(c));
           }),
           py::arg("F"), py::arg("kappa"), py::arg("G"), py::arg("c"))
      .def_property_readonly("F", [](const AlgebraicStieltjes& s) { return coeffs(s.F()); })
      .def_property_readonly("kappa", &AlgebraicStieltjes::kappa)
      .def_property_readonly("G", [](const AlgebraicStieltjes& s) { return coeffs(s.G()); })
      .def_property_readonly("c", &AlgebraicStieltjes::c)
      .def("__call__", [](const AlgebraicStieltjes& s, Cplx w) { return s(w); })
      .def("series", [](const AlgebraicStieltjes& s, int order) {
             const auto x = series_of(s, order);
             std::vector<Cplx> out;
             for (int k = 1; k <= order; ++k) out.push_back(x.s(k));
             return out;
           }, "Coefficients s_1 .. s_order of the expansion at infinity.")
      .def("jacobi", [](const AlgebraicStieltjes& s, int depth) {
             const auto j = extract_jacobi(series_of(s, 2 * depth + 2), depth);
             return py::make_tuple(j.a, j.bsq);
           })
      .def("decompose", [](const AlgebraicStieltjes& s) {
             const DensitySpec d = decompose_measure(s);
             py::dict out;
             out["Q"] = coeffs(d.Q);
             std::vector<std::pair<double, double>> atoms;
             for (const auto& a : d.atoms) atoms.emplace_back(a.location, a.weight);
             out["atoms"] = atoms;
             out["continuum_mass"] = d.Q.is_zero() ? 0.0 : continuum_mass(d);
             out["total_mass"] = total_mass(d);
             return out;
           });

  m.def("semicircle", &AlgebraicStieltjes::semicircle, py::arg("c"));
  m.def("two_rho", &two_rho, py::arg("c"));
  m.def("shift", [](const AlgebraicStieltjes& s, Cplx alpha, Cplx beta) { return shift_once(s, {alpha, beta}); },
        py::arg("transform"), py::arg("alpha"), py::arg("beta"));
  m.def("two_shift", &two_shift_closed, py::arg("alpha"), py::arg("beta"), py::arg("gamma"), py::arg("delta"), py::arg("c"));
  m.def("haagerup", &haagerup_algebraic, py::arg("r"), py::arg("lam"));
  m.def("eval_cfrac", [](const std::vector<double>& a, const std::vector<double>& bsq, double tail_c, Cplx w) {
          JacobiParams j{a, bsq, tail_c > 0.0 ? Tail::semicircular(tail_c) : Tail::truncated()};
          return eval_cfrac(j, w);
        }, py::arg("a"), py::arg("bsq"), py::arg("tail_c"), py::arg("w"));

  m.def("one_shift_from_roots", [](Cplx a, Cplx b, double c) {
          const auto set = one_shift_from_roots(a, b, c);
          const auto rep = classify_positivity(set);
          py::list out;
          for (size_t i = 0; i < set.solutions.size(); ++i) out.append(one_shift_dict(set.solutions[i], rep.per_solution[i]));
          return out;
        }, py::arg("a"), py::arg("b"), py::arg("c"));
  m.def("two_shift_from_roots", [](Cplx zeta, double c, const std::string& fam, Cplx free) {
          const auto f = family(fam);
          const auto sols = is_degree3(f) ? two_shift_deg3(zeta, c, f, free) : two_shift_even_quartic(zeta, c, f, free);
          const auto rep = classify_positivity(sols);
          py::list out;
          for (size_t i = 0; i < sols.size(); ++i) out.append(two_shift_dict(sols[i], rep.per_solution[i]));
          return out;
        }, py::arg("zeta"), py::arg("c"), py::arg("family"), py::arg("free") = Cplx{});

  m.def("density_transform", [](const std::vector<Cplx>& Q, double c) { return stieltjes_from_density(to_poly(Q), c).to_algebraic(); },
        py::arg("Q"), py::arg("c"));
  m.def("normalize_density", [](const std::vector<Cplx>& Q, double c) { return normalize_density(to_poly(Q), c); },
        py::arg("Q"), py::arg("c"));

  m.def("perturbed_resolvent", [](double c, int n, const std::vector<std::tuple<int, double, double>>& steps, Cplx w) {
          std::vector<PerturbStep> st;
          for (const auto& [k, p, q] : steps) st.push_back({k, p, q});
          return resolvent00(apply_steps(semicircle_matrix(c, n), st), w);
        }, py::arg("c"), py::arg("n"), py::arg("steps"), py::arg("w"));
  m.def("one_shift_perturbation", [](double c, double alpha, double beta) {
          const auto s = one_shift_perturbation(c, alpha, beta);
          return std::make_tuple(s.k, s.p, s.q);
        }, py::arg("c"), py::arg("alpha"), py::arg("beta"));

  m.def("run_checks", [](std::uint64_t seed) {
          py::list out;
          for (const auto& r : run_all_checks({seed})) {
            py::dict d;
            d["id"] = r.id;
            d["name"] = r.name;
            d["pass"] = r.pass;
            d["detail"] = r.detail;
            out.append(d);
          }
          return out;
        }, py::arg("seed") = VerifyOptions{}.seed);
}
