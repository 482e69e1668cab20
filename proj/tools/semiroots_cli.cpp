#include <cmath>
#include <functional>
#include <optional>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "problem.hpp"
#include "semiroots/inversion.hpp"
#include "semiroots/perturbation.hpp"
#include "semiroots/residue.hpp"
#include "semiroots/verify.hpp"

using namespace semiroots;
using cli::Fields;
using cli::json;
using cli::ValidationError;

namespace {

struct Options {
  std::string input = "-";
  std::string out;
  double tol = 1e-9;
  std::optional<int> depth;
  std::optional<int> grid;
  std::uint64_t seed = VerifyOptions{}.seed;
  bool paper_signs = false;
  bool input_given = false;
};

double quadrature_tol(const Options& o) { return std::max(1e-13, 0.1 * o.tol); }

json header(const std::string& command, const Options& o) {
  json h;
  h["command"] = command;
  h["tolerances"] = {{"tol", o.tol}, {"quadrature_abs_tol", quadrature_tol(o)}, {"root_merge_rel", RootFinderConfig{}.merge_rel}};
  return h;
}

json read_input(const Options& o) {
  std::string text;
  if (o.input == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(o.input);
    if (!in) throw ValidationError(o.input + ": cannot open");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  return cli::parse_document(text, o.input == "-" ? "<stdin>" : o.input);
}

void write_csv(const Options& o, const std::string& csv) {
  std::ofstream f(o.out);
  if (!f) throw ValidationError(o.out + ": cannot write");
  f << csv;
}

double real_or_throw(Cplx z, double tol, const std::string& what) {
  if (std::abs(z.imag()) > tol * (1.0 + std::abs(z))) throw Error(ErrorKind::NotReal, what + " is not real");
  return z.real();
}

json cmd_expand(const json& doc, const Options& o) {
  Fields f(doc, "");
  const AlgebraicStieltjes s = cli::parse_transform(f.object("transform"));
  const int file_depth = f.integer_or("depth", 4);
  const bool allow_complex = f.boolean_or("complex", false);
  f.done();
  const int depth = o.depth.value_or(file_depth);
  if (depth < 1) throw ValidationError("depth must be at least 1");

  const ComplexJacobi j = extract_jacobi_complex(series_of(s, 2 * depth + 2), depth);
  json out = header("expand", o);
  out["depth"] = depth;
  json a = json::array(), bsq = json::array();
  for (int k = 0; k < depth; ++k) {
    if (allow_complex) {
      a.push_back(cli::cplx_json(j.a[k]));
      bsq.push_back(cli::cplx_json(j.bsq[k]));
    } else {
      a.push_back(real_or_throw(j.a[k], o.tol, "a_" + std::to_string(k)));
      bsq.push_back(real_or_throw(j.bsq[k], o.tol, "b_" + std::to_string(k) + "^2"));
    }
  }
  out["a"] = a;
  out["bsq"] = bsq;
  if (!allow_complex) {
    bool positive = true;
    for (const auto& b : bsq) positive = positive && b.get<double>() > 0.0;
    out["positive"] = positive;
  }
  return out;
}

json cmd_shift(const json& doc, const Options& o) {
  Fields f(doc, "");
  const double c = f.num("c");
  if (!(c > 0.0)) throw ValidationError("c: must be positive");
  const ShiftStep inner = cli::parse_step(f.object("inner"));
  std::vector<ShiftStep> outer;
  if (f.has("outer")) {
    const json& v = f.raw("outer");
    if (!v.is_array()) throw ValidationError("outer: expected an array");
    for (size_t i = 0; i < v.size(); ++i) outer.push_back(cli::parse_step(Fields(v[i], "outer[" + std::to_string(i) + "]")));
  }
  const auto points = f.has("points") ? f.cplx_list("points") : std::vector<Cplx>{};
  f.done();

  const AlgebraicStieltjes s = shift_chain(inner, outer, c);
  const ComplexJacobi data = chain_jacobi_data(inner, outer, c);
  json out = header("shift", o);
  out["F"] = cli::poly_json(s.F());
  out["kappa"] = cli::cplx_json(s.kappa());
  out["G"] = cli::poly_json(s.G());
  json levels = json::array();
  for (size_t k = 0; k < data.a.size(); ++k) levels.push_back({{"a", cli::cplx_json(data.a[k])}, {"bsq", cli::cplx_json(data.bsq[k])}});
  out["levels"] = levels;
  out["tail_c"] = c;
  json vals = json::array();
  for (Cplx w : points) {
    Cplx direct = -w + sqrt_branch(w, SemicircleParam(c));
    direct = shift_value(direct, inner, w);
    for (const auto& st : outer) direct = shift_value(direct, st, w);
    const Cplx v = s(w);
    vals.push_back({{"w", cli::cplx_json(w)}, {"value", cli::cplx_json(v)}, {"composed", cli::cplx_json(direct)},
                    {"abs_diff", std::abs(v - direct)}});
  }
  if (!points.empty()) out["values"] = vals;
  return out;
}

json positivity_json(const PositivityEntry& e) {
  json p = {{"real", e.is_real}, {"positive", e.is_positive}};
  p["predicted"] = e.predicted ? json(*e.predicted) : json(nullptr);
  p["notes"] = e.reasons;
  return p;
}

json summary_json(const PositivityReport& r) {
  json s = {{"total", r.total}, {"real", r.real}, {"positive", r.positive}};
  s["expected_positive"] = r.expected_positive ? json(*r.expected_positive) : json(nullptr);
  s["consistent"] = r.consistent();
  return s;
}

json cmd_invert_roots(const json& doc, const Options& o) {
  Fields f(doc, "");
  const std::string mode = f.str("mode");
  const double c = f.num("c");
  if (!(c > 0.0)) throw ValidationError("c: must be positive");
  json out = header("invert-roots", o);
  out["mode"] = mode;

  if (mode == "one-shift") {
    const auto roots = f.cplx_list("roots");
    f.done();
    if (roots.size() != 2) throw ValidationError("roots: one-shift needs exactly two roots");
    const auto set = one_shift_from_roots(roots[0], roots[1], c);
    const auto rep = classify_positivity(set);
    out["case"] = set.case_label;
    out["degenerate"] = set.degenerate;
    json sols = json::array();
    for (size_t i = 0; i < set.solutions.size(); ++i) {
      const auto& s = set.solutions[i];
      json js = {{"label", s.label}, {"alpha", cli::cplx_json(s.alpha)}, {"beta", cli::cplx_json(s.beta)},
                 {"sigma", cli::cplx_json(s.sigma)}, {"valid", s.valid}, {"coincident", s.coincident},
                 {"residual", s.residual}};
      if (!s.reason.empty()) js["reason"] = s.reason;
      js["positivity"] = positivity_json(rep.per_solution[i]);
      sols.push_back(js);
    }
    out["solutions"] = sols;
    out["summary"] = summary_json(rep);
    return out;
  }
  if (mode == "deg1") {
    const auto roots = f.cplx_list("roots");
    f.done();
    if (roots.size() != 1) throw ValidationError("roots: deg1 needs exactly one root");
    const auto [x, y] = one_shift_deg1(roots[0], c);
    out["solutions"] = json::array({{{"alpha", cli::cplx_json(x)}, {"beta", cli::cplx_json(0.5)}},
                                    {{"alpha", cli::cplx_json(y)}, {"beta", cli::cplx_json(0.5)}}});
    return out;
  }
  if (mode == "deg4" || mode == "deg3") {
    const Cplx zeta = f.cplx("zeta");
    const std::string fam_name = f.str("family");
    const Cplx free = f.has("free") ? f.cplx("free") : Cplx{};
    f.done();
    const auto fam = two_shift_family_from_string(fam_name);
    if (!fam) throw ValidationError("family: unknown family '" + fam_name + "'");
    if (is_degree3(*fam) != (mode == "deg3"))
      throw Error(ErrorKind::WrongFamily, "family " + fam_name + " does not belong to mode " + mode);
    const auto sols = mode == "deg3" ? two_shift_deg3(zeta, c, *fam, free) : two_shift_even_quartic(zeta, c, *fam, free);
    const auto rep = classify_positivity(sols);
    json arr = json::array();
    for (size_t i = 0; i < sols.size(); ++i) {
      const auto& s = sols[i];
      json js = {{"label", s.label},
                 {"alpha", cli::cplx_json(s.alpha)},
                 {"beta", cli::cplx_json(s.beta)},
                 {"gamma", cli::cplx_json(s.gamma)},
                 {"delta", cli::cplx_json(s.delta)},
                 {"Delta", cli::cplx_json(s.Delta)}};
      if (s.free_param) js["free"] = {{"name", s.free_param->first}, {"value", cli::cplx_json(s.free_param->second)}};
      if (mode == "deg3") {
        js["r"] = cli::cplx_json(s.r);
        js["remaining_root"] = cli::cplx_json(remaining_root(s));
      }
      js["positivity"] = positivity_json(rep.per_solution[i]);
      arr.push_back(js);
    }
    out["family"] = fam_name;
    out["solutions"] = arr;
    out["summary"] = summary_json(rep);
    return out;
  }
  throw ValidationError("mode: expected one-shift, deg1, deg3 or deg4");
}

json cmd_density(const json& doc, const Options& o) {
  Fields f(doc, "");
  const AlgebraicStieltjes s = cli::parse_transform(f.object("transform"));
  const int file_grid = f.integer_or("grid", 201);
  f.done();
  const int n = o.grid.value_or(file_grid);
  if (n < 2) throw ValidationError("grid must have at least 2 points");

  const DensitySpec d = decompose_measure(s);
  const double e = d.c.edge();
  std::ostringstream csv;
  csv << "t,density\n";
  json samples = json::array();
  double trap = 0.0, prev = 0.0;
  const double h = 2.0 * e / (n - 1);
  for (int k = 0; k < n; ++k) {
    const double t = k == n - 1 ? e : -e + h * k;
    const double v = d.Q.is_zero() ? 0.0 : d.density(t);
    if (k) trap += 0.5 * h * (v + prev);
    prev = v;
    csv << cli::format_double(t) << ',' << cli::format_double(v) << '\n';
    samples.push_back({t, v});
  }
  double atom_sum = 0.0;
  json atoms = json::array();
  for (const auto& a : d.atoms) {
    atoms.push_back({{"location", a.location}, {"weight", a.weight}});
    atom_sum += a.weight;
  }

  json out = header("density", o);
  out["c"] = d.c.value();
  out["support"] = {-e, e};
  out["grid"] = n;
  out["Q"] = cli::poly_json(d.Q);
  out["atoms"] = atoms;
  out["continuum_mass_trapezoid"] = trap;
  QuadratureConfig qc;
  qc.abs_tol = quadrature_tol(o);
  out["continuum_mass_quadrature"] = d.Q.is_zero() ? 0.0 : continuum_mass(d, qc);
  out["atom_weight"] = atom_sum;
  out["total_mass_trapezoid"] = trap + atom_sum;
  if (o.out.empty()) {
    out["samples"] = samples;
  } else {
    write_csv(o, csv.str());
    out["csv"] = o.out;
  }
  return out;
}

json cmd_residue(const json& doc, const Options& o) {
  Fields f(doc, "");
  const double c = f.num("c");
  if (!(c > 0.0)) throw ValidationError("c: must be positive");
  const Poly Q = f.poly("Q");
  const auto points = f.has("points") ? f.cplx_list("points") : std::vector<Cplx>{};
  const bool quad = f.boolean_or("quadrature", true);
  f.done();

  const ResidueTransform t = stieltjes_from_density(Q, c);
  json out = header("residue", o);
  out["residue_polynomial"] = cli::poly_json(t.residue_poly());
  json poles = json::array();
  for (const auto& p : t.poles())
    poles.push_back({{"zeta", cli::cplx_json(p.zeta)}, {"multiplicity", p.multiplicity}, {"q", cli::poly_json(p.q)}});
  out["poles"] = poles;
  const AlgebraicStieltjes alg = t.to_algebraic();
  out["algebraic"] = {{"F", cli::poly_json(alg.F())}, {"kappa", cli::cplx_json(alg.kappa())}, {"G", cli::poly_json(alg.G())}};
  try {
    out["normalization"] = normalize_density(Q, c);
  } catch (const Error& e) {
    out["normalization"] = nullptr;
    out["normalization_note"] = e.what();
  }
  json vals = json::array();
  DensitySpec spec;
  spec.c = SemicircleParam(c);
  spec.Q = Q;
  spec.signed_mode = true;
  QuadratureConfig qc;
  qc.abs_tol = quadrature_tol(o);
  for (Cplx w : points) {
    json row = {{"w", cli::cplx_json(w)}, {"value", cli::cplx_json(t(w))}};
    if (quad) {
      const Cplx q = stieltjes_numeric(spec, w, qc);
      row["quadrature"] = cli::cplx_json(q);
      row["abs_diff"] = std::abs(q - t(w));
    }
    vals.push_back(row);
  }
  if (!points.empty()) out["values"] = vals;
  return out;
}

json cmd_perturb(const json& doc, const Options& o) {
  Fields f(doc, "");
  const double c = f.num("c");
  if (!(c > 0.0)) throw ValidationError("c: must be positive");
  const int N = f.integer_or("N", 400);
  const auto points = f.has("points") ? f.cplx_list("points") : std::vector<Cplx>{Cplx(0.0, 2.0)};

  int specs = 0;
  for (const char* k : {"one_shift", "two_shift", "chain", "steps"}) specs += f.has(k) ? 1 : 0;
  if (specs != 1) throw ValidationError("give exactly one of one_shift, two_shift, chain, steps");

  std::vector<PerturbStep> steps;
  std::function<Cplx(Cplx)> analytic;
  std::string source;
  auto literal = [&](const LiteralStep& l) {
    if (l.p.imag() != 0.0 || l.q.imag() != 0.0)
      throw Error(ErrorKind::NotReal, "printed parameters give complex (p, q) at level " + std::to_string(l.k) + ": q = " +
                                          cli::format_double(l.q.real()) + " + " + cli::format_double(l.q.imag()) + "i");
    return PerturbStep{l.k, l.p.real(), l.q.real()};
  };
  if (f.has("one_shift")) {
    Fields g = f.object("one_shift");
    const double alpha = g.num("alpha"), beta = g.num("beta");
    g.done();
    steps = {o.paper_signs ? literal(paper_literal_one(c, alpha, beta)) : one_shift_perturbation(c, alpha, beta)};
    const auto s = shift_once(two_rho(c), {alpha, beta});
    analytic = [s](Cplx w) { return s(w); };
    source = "one-shift closed form";
  } else if (f.has("two_shift")) {
    Fields g = f.object("two_shift");
    const double alpha = g.num("alpha"), beta = g.num("beta"), gamma = g.num("gamma"), delta = g.num("delta");
    g.done();
    if (o.paper_signs) {
      const auto [l0, l1] = paper_literal_two(c, alpha, beta, gamma, delta);
      steps = {literal(l0), literal(l1)};
    } else {
      const auto [s0, s1] = two_shift_perturbation(c, alpha, beta, gamma, delta);
      steps = {s0, s1};
    }
    const auto s = two_shift_closed(alpha, beta, gamma, delta, c);
    analytic = [s](Cplx w) { return s(w); };
    source = "two-shift closed form";
  } else if (f.has("chain")) {
    if (o.paper_signs) throw ValidationError("--paper-signs applies to one_shift and two_shift only");
    Fields g = f.object("chain");
    const ShiftStep inner = cli::parse_step(g.object("inner"));
    std::vector<ShiftStep> outer;
    if (g.has("outer")) {
      const json& v = g.raw("outer");
      if (!v.is_array()) throw ValidationError("chain.outer: expected an array");
      for (size_t i = 0; i < v.size(); ++i) outer.push_back(cli::parse_step(Fields(v[i], "chain.outer[" + std::to_string(i) + "]")));
    }
    g.done();
    steps = n_shift_perturbation(c, inner, outer);
    const auto s = assemble_FG(mobius_chain(outer), inner, c);
    analytic = [s](Cplx w) { return s(w); };
    source = "chain closed form";
  } else {
    if (o.paper_signs) throw ValidationError("--paper-signs applies to one_shift and two_shift only");
    const json& v = f.raw("steps");
    if (!v.is_array()) throw ValidationError("steps: expected an array");
    for (size_t i = 0; i < v.size(); ++i) {
      Fields g(v[i], "steps[" + std::to_string(i) + "]");
      steps.push_back({g.integer("k"), g.num("p"), g.num("q")});
      g.done();
    }
    source = "continued fraction of the perturbed levels over a semicircular tail";
  }
  f.done();
  for (const auto& st : steps)
    if (st.k < 0 || st.k + 2 > N) throw ValidationError("perturbation level " + std::to_string(st.k) + " does not fit N = " + std::to_string(N));
  if (N < 2) throw ValidationError("N must be at least 2");

  const TriJacobi m = apply_steps(semicircle_matrix(c, N), steps);
  if (!analytic) {
    int top = 0;
    for (const auto& st : steps) top = std::max(top, st.k + 2);
    JacobiParams j;
    for (int k = 0; k < top; ++k) {
      j.a.push_back(m.diag[k]);
      j.bsq.push_back(m.offdiag[k] * m.offdiag[k]);
    }
    j.tail = Tail::semicircular(c);
    analytic = [j](Cplx w) { return eval_cfrac(j, w); };
  }

  std::ostringstream csv;
  csv << "w_re,w_im,resolvent_re,resolvent_im,analytic_re,analytic_im,abs_diff\n";
  json rows = json::array();
  double worst = 0.0;
  for (Cplx w : points) {
    const Cplx r = resolvent00(m, w);
    const Cplx a = analytic(w);
    const double d = std::abs(r - a);
    worst = std::max(worst, d);
    csv << cli::format_double(w.real()) << ',' << cli::format_double(w.imag()) << ',' << cli::format_double(r.real()) << ','
        << cli::format_double(r.imag()) << ',' << cli::format_double(a.real()) << ',' << cli::format_double(a.imag()) << ','
        << cli::format_double(d) << '\n';
    rows.push_back({{"w", cli::cplx_json(w)}, {"resolvent", cli::cplx_json(r)}, {"analytic", cli::cplx_json(a)}, {"abs_diff", d}});
  }

  json out = header("perturb", o);
  out["N"] = N;
  out["paper_signs"] = o.paper_signs;
  json js = json::array();
  for (const auto& st : steps) js.push_back({{"k", st.k}, {"p", st.p}, {"q", st.q}});
  out["steps"] = js;
  out["analytic"] = source;
  out["max_abs_diff"] = worst;
  if (o.out.empty()) {
    out["rows"] = rows;
  } else {
    write_csv(o, csv.str());
    out["csv"] = o.out;
  }
  return out;
}

json cmd_verify(const json& doc, const Options& o, bool& all_pass) {
  std::vector<int> ids;
  if (!doc.is_null()) {
    Fields f(doc, "");
    if (f.has("criteria")) {
      const json& v = f.raw("criteria");
      if (!v.is_array()) throw ValidationError("criteria: expected an array");
      for (const auto& x : v) {
        if (!x.is_number_integer() || x.get<int>() < 1 || x.get<int>() > 9) throw ValidationError("criteria: ids run from 1 to 9");
        ids.push_back(x.get<int>());
      }
    }
    f.done();
  }
  if (ids.empty())
    for (int k = 1; k <= 9; ++k) ids.push_back(k);
  VerifyOptions vo;
  vo.seed = o.seed;
  json out = header("verify", o);
  out["seed"] = o.seed;
  json res = json::array();
  all_pass = true;
  for (int id : ids) {
    const auto r = run_check(id, vo);
    all_pass = all_pass && r.pass;
    res.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
  }
  out["results"] = res;
  out["all_pass"] = all_pass;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stieltjes transforms of semicircle perturbations: expansions, shifts, root inversion, densities"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--input", o.input, "problem file, or - for stdin");
  app.add_option("--out", o.out, "CSV output path for grid results");
  app.add_option("--tol", o.tol, "comparison tolerance")->check(CLI::PositiveNumber);
  app.add_option("--depth", o.depth, "number of Jacobi levels for expand");
  app.add_option("--grid", o.grid, "grid size for density");
  app.add_option("--seed", o.seed, "seed for verify");
  app.add_flag("--paper-signs", o.paper_signs, "use the perturbation parameters exactly as printed");

  std::string command;
  const std::pair<const char*, const char*> commands[] = {
      {"expand", "Jacobi parameters of a transform"},
      {"shift", "apply shift steps to 2 rho"},
      {"invert-roots", "shift parameters from the roots of the denominator"},
      {"density", "density samples, mass and atoms"},
      {"residue", "transform of a density 1/Q via residues"},
      {"perturb", "resolvent of a finitely perturbed semicircle matrix"},
      {"verify", "run the built-in consistency checks"},
  };
  for (const auto& [name, help] : commands)
    app.add_subcommand(name, help)->callback([&command, name] { command = name; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 3;
  }
  o.input_given = app.count("--input") > 0;

  try {
    json out;
    int rc = 0;
    if (command == "verify") {
      bool all = false;
      out = cmd_verify(o.input_given ? read_input(o) : json(nullptr), o, all);
      rc = all ? 0 : 4;
    } else {
      const json doc = read_input(o);
      if (command == "expand") out = cmd_expand(doc, o);
      else if (command == "shift") out = cmd_shift(doc, o);
      else if (command == "invert-roots") out = cmd_invert_roots(doc, o);
      else if (command == "density") out = cmd_density(doc, o);
      else if (command == "residue") out = cmd_residue(doc, o);
      else out = cmd_perturb(doc, o);
    }
    std::cout << cli::dump(out);
    return rc;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.kind() == ErrorKind::InvalidArgument) return 3;
    return e.kind() == ErrorKind::Inconsistent ? 4 : 2;
  } catch (const json::exception& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}
