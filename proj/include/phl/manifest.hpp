#pragma once

// Structured-text chart descriptions: a manifest names a coordinate chart,
// its field, its variables and a sparse table of Christoffel polynomials.
// Validation errors carry the offending key so batch users can fix inputs.

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "phl/parse.hpp"
#include "phl/tensor.hpp"

namespace phl {

class ManifestError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Manifest {
  std::string name;
  int dim = 0;
  std::string field;  // "rational" or "gaussian"
  std::vector<std::string> vars;
  std::map<std::string, std::string> gamma;  // "k,i,j" (1-based) -> polynomial
  int order = 0;
  std::string base_point = "origin";
};

namespace detail {

inline std::vector<int> parse_gamma_key(const std::string& key, int dim) {
  std::vector<int> out;
  std::stringstream ss(key);
  std::string part;
  while (std::getline(ss, part, ',')) {
    size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(part, &used);
    } catch (const std::exception&) {
      throw ManifestError("manifest gamma key \"" + key + "\": expected three integers");
    }
    if (used != part.size())
      throw ManifestError("manifest gamma key \"" + key + "\": expected three integers");
    out.push_back(v);
  }
  if (out.size() != 3)
    throw ManifestError("manifest gamma key \"" + key + "\": expected three indices k,i,j");
  for (int v : out)
    if (v < 1 || v > dim)
      throw ManifestError("manifest gamma key \"" + key + "\": index out of range for dim " +
                          std::to_string(dim));
  return out;
}

}  // namespace detail

inline Manifest parse_manifest(const nlohmann::json& j) {
  if (!j.is_object()) throw ManifestError("manifest: top level must be an object");
  Manifest m;
  if (!j.contains("name") || !j["name"].is_string())
    throw ManifestError("manifest: \"name\" must be a string");
  m.name = j["name"].get<std::string>();
  if (!j.contains("dim") || !j["dim"].is_number_integer())
    throw ManifestError("manifest: \"dim\" must be an integer");
  m.dim = j["dim"].get<int>();
  if (m.dim < 1) throw ManifestError("manifest: \"dim\" must be at least 1");
  if (m.dim > 8)
    throw ManifestError("manifest: \"dim\" exceeds the supported maximum of 8 variables");
  m.field = j.value("field", std::string("rational"));
  if (m.field != "rational" && m.field != "gaussian")
    throw ManifestError("manifest: \"field\" must be \"rational\" or \"gaussian\"");
  if (!j.contains("order") || !j["order"].is_number_integer())
    throw ManifestError("manifest: \"order\" must be an integer");
  m.order = j["order"].get<int>();
  if (m.order < 1) throw ManifestError("manifest: \"order\" must be at least 1");

  if (j.contains("vars")) {
    if (!j["vars"].is_array())
      throw ManifestError("manifest: \"vars\" must be an array of names");
    for (const auto& v : j["vars"]) {
      if (!v.is_string()) throw ManifestError("manifest: \"vars\" entries must be strings");
      m.vars.push_back(v.get<std::string>());
    }
  } else {
    m.vars = default_var_names(m.dim);
  }
  if (static_cast<int>(m.vars.size()) != m.dim)
    throw ManifestError("manifest: \"vars\" must list exactly dim = " +
                        std::to_string(m.dim) + " names");
  for (size_t a = 0; a < m.vars.size(); ++a) {
    if (m.vars[a].empty()) throw ManifestError("manifest: variable names must be nonempty");
    for (size_t b = a + 1; b < m.vars.size(); ++b)
      if (m.vars[a] == m.vars[b])
        throw ManifestError("manifest: duplicate variable name \"" + m.vars[a] + "\"");
    if (m.field == "gaussian" && m.vars[a] == "i")
      throw ManifestError(
          "manifest: variable \"i\" conflicts with the imaginary unit over the gaussian "
          "field");
  }

  if (j.contains("gamma")) {
    if (!j["gamma"].is_object())
      throw ManifestError("manifest: \"gamma\" must map \"k,i,j\" keys to polynomials");
    std::map<std::string, std::string> canonical;
    for (const auto& [key, val] : j["gamma"].items()) {
      std::vector<int> kij = detail::parse_gamma_key(key, m.dim);
      if (!val.is_string())
        throw ManifestError("manifest gamma[\"" + key + "\"]: value must be a polynomial string");
      // Charts are torsion-free: "k,i,j" and "k,j,i" name the same entry.
      std::string canon = std::to_string(kij[0]) + "," +
                          std::to_string(std::min(kij[1], kij[2])) + "," +
                          std::to_string(std::max(kij[1], kij[2]));
      auto it = canonical.find(canon);
      std::string text = val.get<std::string>();
      if (it != canonical.end() && it->second != text)
        throw ManifestError("manifest gamma[\"" + key + "\"]: conflicts with entry \"" +
                            canon + "\" (charts are torsion-free)");
      canonical[canon] = text;
      m.gamma[key] = text;
    }
  }
  if (j.contains("base_point")) {
    if (!j["base_point"].is_string() || j["base_point"].get<std::string>() != "origin")
      throw ManifestError("manifest: \"base_point\" must be \"origin\" (charts are centered)");
  }
  return m;
}

inline Manifest load_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ManifestError("manifest: cannot open file \"" + path + "\"");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ManifestError("manifest \"" + path + "\": " + e.what());
  }
  return parse_manifest(j);
}

// Realize the chart: every declared Christoffel polynomial parsed over the
// declared field, undeclared entries zero.
template <class F>
ConnectionChart<F> manifest_connection(const Manifest& m) {
  ConnectionChart<F> conn(m.dim, m.order, m.vars);
  for (const auto& [key, poly] : m.gamma) {
    std::vector<int> kij = detail::parse_gamma_key(key, m.dim);
    try {
      Jet<F> val = jet_from_polynomial<F>(poly, m.vars, m.order);
      conn.G(kij[0] - 1, kij[1] - 1, kij[2] - 1) = val;
      conn.G(kij[0] - 1, kij[2] - 1, kij[1] - 1) = val;  // torsion-free symmetrization
    } catch (const ParseError& e) {
      throw ManifestError("manifest gamma[\"" + key + "\"]: " + std::string(e.what()));
    } catch (const std::domain_error& e) {
      throw ManifestError("manifest gamma[\"" + key + "\"]: " + std::string(e.what()));
    }
  }
  return conn;
}

}  // namespace phl
