#include "problem.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "semiroots/residue.hpp"
#include "semiroots/verify.hpp"

namespace cli {

using namespace semiroots;

json parse_document(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    size_t line = 1, col = 1;
    for (size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    // the library message starts with "[json.exception.parse_error.101] parse error at line ..."
    std::string msg = e.what();
    const auto colon = msg.find("syntax error");
    if (colon != std::string::npos) msg = msg.substr(colon);
    throw ValidationError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + msg);
  }
}

Fields::Fields(const json& j, std::string path) : j_(j), path_(std::move(path)) {
  if (!j_.is_object()) throw ValidationError(path_ + ": expected an object");
}

std::string Fields::path(const char* key) const { return path_.empty() ? key : path_ + "." + key; }

bool Fields::has(const char* key) const { return j_.contains(key); }

const json& Fields::raw(const char* key) {
  if (!j_.contains(key)) throw ValidationError(path(key) + ": missing field");
  used_.insert(key);
  return j_.at(key);
}

double Fields::num(const char* key) {
  const json& v = raw(key);
  if (!v.is_number()) throw ValidationError(path(key) + ": expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ValidationError(path(key) + ": not finite");
  return x;
}

double Fields::num_or(const char* key, double fallback) { return has(key) ? num(key) : fallback; }

int Fields::integer(const char* key) {
  const json& v = raw(key);
  if (!v.is_number_integer()) throw ValidationError(path(key) + ": expected an integer");
  return v.get<int>();
}

int Fields::integer_or(const char* key, int fallback) { return has(key) ? integer(key) : fallback; }

bool Fields::boolean_or(const char* key, bool fallback) {
  if (!has(key)) return fallback;
  const json& v = raw(key);
  if (!v.is_boolean()) throw ValidationError(path(key) + ": expected true or false");
  return v.get<bool>();
}

std::string Fields::str(const char* key) {
  const json& v = raw(key);
  if (!v.is_string()) throw ValidationError(path(key) + ": expected a string");
  return v.get<std::string>();
}

std::string Fields::str_or(const char* key, const std::string& fallback) { return has(key) ? str(key) : fallback; }

Cplx to_cplx(const json& v, const std::string& path) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) return {v[0].get<double>(), v[1].get<double>()};
  throw ValidationError(path + ": expected a number or [re, im]");
}

Cplx Fields::cplx(const char* key) { return to_cplx(raw(key), path(key)); }

std::vector<Cplx> Fields::cplx_list(const char* key) {
  const json& v = raw(key);
  if (!v.is_array()) throw ValidationError(path(key) + ": expected an array");
  std::vector<Cplx> out;
  for (size_t i = 0; i < v.size(); ++i) out.push_back(to_cplx(v[i], path(key) + "[" + std::to_string(i) + "]"));
  return out;
}

Poly Fields::poly(const char* key) {
  const auto c = cplx_list(key);
  if (c.empty()) throw ValidationError(path(key) + ": empty coefficient list");
  return Poly(c);
}

Fields Fields::object(const char* key) { return Fields(raw(key), path(key)); }

void Fields::done() const {
  for (auto it = j_.begin(); it != j_.end(); ++it)
    if (!used_.count(it.key())) throw ValidationError(path(it.key().c_str()) + ": unknown field");
}

ShiftStep parse_step(Fields f) {
  ShiftStep s{f.cplx("alpha"), f.cplx("beta")};
  f.done();
  return s;
}

namespace {

std::vector<ShiftStep> parse_steps(const json& v, const std::string& path) {
  if (!v.is_array()) throw ValidationError(path + ": expected an array");
  std::vector<ShiftStep> out;
  for (size_t i = 0; i < v.size(); ++i) out.push_back(parse_step(Fields(v[i], path + "[" + std::to_string(i) + "]")));
  return out;
}

double positive_c(Fields& f) {
  const double c = f.num("c");
  if (!(c > 0.0)) throw ValidationError(f.path("c") + ": must be positive");
  return c;
}

}  // namespace

AlgebraicStieltjes parse_transform(Fields f) {
  const std::string kind = f.str("kind");
  if (kind == "semicircle") {
    const double c = positive_c(f);
    f.done();
    return AlgebraicStieltjes::semicircle(c);
  }
  if (kind == "haagerup") {
    const double r = f.num("r");
    const double lambda = f.num("lambda");
    f.done();
    if (!(r > 0.0 && r < 1.0)) throw ValidationError("r must lie in (0, 1)");
    if (lambda == 0.0 || std::abs(std::abs(lambda) - 1.0) < 1e-12) throw ValidationError("lambda must avoid 0 and +-1");
    return haagerup_algebraic(r, lambda);
  }
  if (kind == "algebraic") {
    const double c = positive_c(f);
    const Poly F = f.poly("F");
    const Cplx kappa = f.cplx("kappa");
    const Poly G = f.poly("G");
    f.done();
    return AlgebraicStieltjes(F, kappa, G, SemicircleParam(c));
  }
  if (kind == "shift_chain") {
    const double c = positive_c(f);
    const ShiftStep inner = parse_step(f.object("inner"));
    const auto outer = f.has("outer") ? parse_steps(f.raw("outer"), f.path("outer")) : std::vector<ShiftStep>{};
    f.done();
    return shift_chain(inner, outer, c);
  }
  if (kind == "density") {
    const double c = positive_c(f);
    const Poly Q = f.poly("Q");
    const bool normalize = f.boolean_or("normalize", false);
    std::vector<Atom> atoms;
    if (f.has("atoms")) {
      const json& a = f.raw("atoms");
      if (!a.is_array()) throw ValidationError(f.path("atoms") + ": expected an array");
      for (size_t i = 0; i < a.size(); ++i) {
        Fields af(a[i], f.path("atoms") + "[" + std::to_string(i) + "]");
        atoms.push_back({af.num("location"), af.num("weight")});
        af.done();
      }
    }
    const bool signed_mode = f.boolean_or("signed", false);
    f.done();
    const Poly q = normalize ? Q * normalize_density(Q, c) : Q;
    if (atoms.empty()) return stieltjes_from_density(q, c).to_algebraic();
    return atom_extension(q, c, atoms, signed_mode).transform;
  }
  throw ValidationError(f.path("kind") + ": unknown transform kind '" + kind + "'");
}

json cplx_json(Cplx z) { return json::array({z.real(), z.imag()}); }

json poly_json(const Poly& p) {
  json out = json::array();
  for (const Cplx& c : p.coeffs()) out.push_back(cplx_json(c));
  return out;
}

std::string format_double(double x) {
  if (!std::isfinite(x)) return "null";
  if (x == 0.0) x = 0.0;  // no negative zero
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", x);
  return buf;
}

namespace {

void dump_into(const json& j, std::string& out, int indent) {
  const std::string pad(static_cast<size_t>(indent + 2), ' ');
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += pad + json(it.key()).dump() + ": ";
        dump_into(it.value(), out, indent + 2);
      }
      out += "\n" + std::string(static_cast<size_t>(indent), ' ') + "}";
      return;
    }
    case json::value_t::array: {
      // arrays of scalars stay on one line
      const bool flat = std::all_of(j.begin(), j.end(), [](const json& v) {
        return v.is_primitive() || (v.is_array() && std::all_of(v.begin(), v.end(), [](const json& u) { return u.is_primitive(); }));
      });
      if (j.empty()) {
        out += "[]";
        return;
      }
      if (flat) {
        out += "[";
        for (size_t i = 0; i < j.size(); ++i) {
          if (i) out += ", ";
          dump_into(j[i], out, indent);
        }
        out += "]";
        return;
      }
      out += "[\n";
      for (size_t i = 0; i < j.size(); ++i) {
        if (i) out += ",\n";
        out += pad;
        dump_into(j[i], out, indent + 2);
      }
      out += "\n" + std::string(static_cast<size_t>(indent), ' ') + "]";
      return;
    }
    case json::value_t::number_float:
      out += format_double(j.get<double>());
      return;
    default:
      out += j.dump();
  }
}

}  // namespace

std::string dump(const json& j) {
  std::string out;
  dump_into(j, out, 0);
  out += "\n";
  return out;
}

}  // namespace cli
