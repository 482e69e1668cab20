#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "semiroots/shift.hpp"
#include "semiroots/stieltjes.hpp"

namespace cli {

using json = nlohmann::ordered_json;
using semiroots::Cplx;
using semiroots::Poly;

// Bad input: malformed JSON, a missing or unknown field, a value of the wrong type.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses a whole document, reporting syntax errors with line and column.
json parse_document(const std::string& text, const std::string& source);

/// Typed access to the fields of one JSON object. Every field has to be
/// consumed before `done()`, which rejects whatever is left.
class Fields {
 public:
  Fields(const json& j, std::string path);

  bool has(const char* key) const;
  const json& raw(const char* key);
  double num(const char* key);
  double num_or(const char* key, double fallback);
  int integer(const char* key);
  int integer_or(const char* key, int fallback);
  bool boolean_or(const char* key, bool fallback);
  std::string str(const char* key);
  std::string str_or(const char* key, const std::string& fallback);
  Cplx cplx(const char* key);
  Poly poly(const char* key);
  std::vector<Cplx> cplx_list(const char* key);
  Fields object(const char* key);
  std::string path(const char* key) const;

  void done() const;

 private:
  const json& j_;
  std::string path_;
  std::set<std::string> used_;
};

Cplx to_cplx(const json& v, const std::string& path);

semiroots::ShiftStep parse_step(Fields f);

/// A transform description: semicircle, the (r, lambda) family, explicit
/// (F, kappa, G), a shift chain over 2 rho, or a density with optional atoms.
semiroots::AlgebraicStieltjes parse_transform(Fields f);

json cplx_json(Cplx z);
json poly_json(const Poly& p);

/// Fixed layout: two-space indent, keys in insertion order, floats with 17
/// significant digits in lowercase scientific notation.
std::string dump(const json& j);
std::string format_double(double x);

}  // namespace cli
