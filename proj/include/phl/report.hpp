#pragma once

// Machine-readable reports: ordered key/value trees with arrays, rationals
// as exact "p/q" strings, tensors shown by component in a fixed index order.
// Identical inputs must serialize byte-identically, so everything below
// iterates in deterministic order and never touches floating point.

#include <algorithm>
#include <string>
#include <vector>

#include "json.hpp"
#include "phl/classify.hpp"
#include "phl/cone.hpp"
#include "phl/holonomy.hpp"
#include "phl/projective.hpp"
#include "phl/tensor.hpp"

namespace phl {

using ojson = nlohmann::ordered_json;

namespace detail {

inline std::string slot_name(Slot s) { return s == Slot::Up ? "up" : "lo"; }

template <class F>
ojson matrix_json(const Mat<F>& m) {
  ojson rows = ojson::array();
  for (int i = 0; i < m.rows; ++i) {
    ojson row = ojson::array();
    for (int j = 0; j < m.cols; ++j) row.push_back(to_string(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace detail

// Component table of a tensor, truncated to `show_degree` for readability.
// Zero components are omitted; an exactly-zero tensor reports only the flag.
template <class F>
ojson tensor_json(const TensorJet<F>& t, const std::vector<std::string>& vars,
                  int show_degree = 2) {
  ojson o;
  o["zero"] = t.is_zero();
  if (t.is_zero()) return o;
  ojson slots = ojson::array();
  for (Slot s : t.slots) slots.push_back(detail::slot_name(s));
  o["slots"] = slots;
  int d = std::min(show_degree, t.order());
  o["shown_to_degree"] = d;
  ojson comps = ojson::object();
  std::vector<int> idx(t.slots.size(), 0);
  do {
    Jet<F> shown = t.at(idx).truncated(d);
    if (shown.is_zero()) continue;
    std::string key;
    for (size_t s = 0; s < idx.size(); ++s) {
      if (s) key += ",";
      key += std::to_string(idx[s] + 1);
    }
    comps[key] = jet_to_string(shown, vars);
  } while (next_index(idx, t.dim));
  o["components"] = comps;
  return o;
}

template <class F>
ojson echo_json(const ConnectionChart<F>& conn, const std::string& target) {
  ojson o;
  o["target"] = target;
  o["field"] = FieldInfo<F>::name();
  o["dim"] = conn.dim;
  o["order"] = conn.order;
  o["vars"] = conn.var_names;
  return o;
}

template <class F>
ojson inspect_json(const ConnectionChart<F>& conn, const std::string& target) {
  ojson o;
  o["command"] = "inspect";
  o["input"] = echo_json(conn, target);
  ProjectiveData<F> pd = projective_data(conn);
  TensorJet<F> ric = ricci(conn);
  const auto& vars = conn.var_names;
  o["ricci"] = tensor_json(ric, vars);
  o["ricci_symmetric"] = is_symmetric2(ric);
  o["rho"] = tensor_json(pd.rho, vars);
  o["rho_nondegenerate_at_origin"] =
      rank_field(value_matrix(pd.rho)) == conn.dim;
  EinsteinCheck<F> ec = is_einstein(conn);
  o["einstein"] = ec.einstein;
  if (!ec.einstein) o["einstein_reason"] = ec.reason;
  o["projective_weyl"] = tensor_json(pd.weyl, vars);
  o["cotton_york"] = tensor_json(pd.cy, vars);
  return o;
}

template <class F>
ojson cone_json(const ConeChart<F>& cc, const std::string& target) {
  ojson o;
  o["command"] = "cone";
  o["input"] = echo_json(cc.base, target);
  o["kind"] = cone_kind_name(cc.kind);
  o["cone_dim"] = cc.cone.dim;
  o["cone_order"] = cc.cone.order;
  o["cone_vars"] = cc.cone.var_names;
  o["torsion_zero"] = torsion(cc.cone).is_zero();
  o["ricci_zero"] = cc.cone.order >= 1 ? ricci(cc.cone).is_zero() : true;
  if (cc.kind == ConeKind::Complex) {
    TensorJet<F> j = complex_cone_structure(cc);
    o["complex_structure_parallel"] = covariant_derivative(j, cc.cone).is_zero();
  }
  if (cc.kind == ConeKind::Symplectic && cc.omega0) {
    o["symplectic_form_scale_identity"] = cone_scale_identity_holds(cc, *cc.omega0);
  }
  return o;
}

inline ojson classification_json(const ClassificationReport& rep) {
  ojson o;
  o["label"] = rep.label;
  o["dimension"] = rep.dimension;
  o["fiber_dim"] = rep.fiber_dim;
  o["trace_free"] = rep.trace_free;
  o["sym_form_space_dim"] = static_cast<int>(rep.sym_forms.size());
  o["antisym_form_space_dim"] = static_cast<int>(rep.antisym_forms.size());
  o["commutant_dim"] = rep.commutant_dim;
  o["commutant_type"] = rep.commutant_type;
  if (rep.signature)
    o["signature"] = std::to_string(rep.signature->first) + "," +
                     std::to_string(rep.signature->second);
  ojson sf = ojson::array();
  for (const auto& s : rep.sym_forms) sf.push_back(detail::matrix_json(s));
  o["sym_forms"] = sf;
  ojson af = ojson::array();
  for (const auto& s : rep.antisym_forms) af.push_back(detail::matrix_json(s));
  o["antisym_forms"] = af;
  o["evidence"] = rep.evidence;
  return o;
}

template <class F>
ojson holonomy_json(const ConeChart<F>& cc, const HolonomyResult<F>& hol,
                    const std::string& target) {
  ojson o = cone_json(cc, target);
  o["command"] = "holonomy";
  o["fiber_dim"] = cc.cone.dim;
  o["dims_by_depth"] = hol.dims_by_depth;
  o["dimension"] = hol.algebra.dim();
  o["stabilized"] = hol.stabilized;
  if (hol.stabilized) o["stabilized_at_depth"] = hol.stabilized_at;
  o["max_depth_used"] = hol.max_depth_used;
  ojson gens = ojson::array();
  for (const auto& p : hol.algebra.provenance()) {
    ojson g;
    if (p.depth < 0) {
      g["from"] = "bracket";
    } else {
      g["from"] = "curvature";
      g["depth"] = p.depth;
      ojson dv = ojson::array();
      for (int v : p.deriv) dv.push_back(v + 1);
      g["deriv_directions"] = dv;
      g["h"] = p.h + 1;
      g["j"] = p.j + 1;
    }
    gens.push_back(g);
  }
  o["generators"] = gens;
  return o;
}

inline void attach_classification(ojson& o, const HolonomyResult<Rat>& hol) {
  o["classification"] = classification_json(classify(hol.algebra));
}

inline void attach_classification(ojson& o, const HolonomyResult<GaussRat>& hol) {
  (void)hol;
  ojson c;
  c["label"] = "unsupported for gaussian field";
  c["note"] = "classification tables cover real matrix algebras; dimensions above are exact";
  o["classification"] = c;
}

inline std::string render_report(const ojson& o) { return o.dump(2) + "\n"; }

}  // namespace phl
