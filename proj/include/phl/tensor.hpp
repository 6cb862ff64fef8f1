#pragma once

// Connections on a coordinate chart and the tensor calculus on top of them:
// torsion, curvature, Ricci, covariant derivatives of arbitrary tensors, and
// the Einstein / volume-preservation checks.  Everything is valued in
// truncated jets, so every equality below is exact at the retained order.

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "phl/field.hpp"
#include "phl/jet.hpp"
#include "phl/linalg.hpp"

namespace phl {

enum class Slot { Up, Lo };

// Dense tensor with jet components.  Slots are listed in notation order, so
// R_{hj}{}^k{}_l is stored with slots (Lo, Lo, Up, Lo) and component index
// (h, j, k, l).
template <class F>
struct TensorJet {
  int dim = 0;
  std::vector<Slot> slots;
  std::vector<Jet<F>> comp;

  TensorJet() = default;
  TensorJet(int d, std::vector<Slot> s, int order)
      : dim(d), slots(std::move(s)) {
    size_t n = 1;
    for (size_t k = 0; k < slots.size(); ++k) n *= static_cast<size_t>(dim);
    comp.assign(n, Jet<F>::zero(dim, order));
  }

  int rank() const { return static_cast<int>(slots.size()); }
  int order() const { return comp.empty() ? 0 : comp[0].order(); }

  size_t flat(const std::vector<int>& idx) const {
    size_t f = 0;
    for (size_t p = 0; p < idx.size(); ++p) f = f * dim + idx[p];
    return f;
  }
  Jet<F>& at(const std::vector<int>& idx) { return comp[flat(idx)]; }
  const Jet<F>& at(const std::vector<int>& idx) const { return comp[flat(idx)]; }

  Jet<F>& at(int i) { return comp[i]; }
  const Jet<F>& at(int i) const { return comp[i]; }
  Jet<F>& at(int i, int j) { return comp[static_cast<size_t>(i) * dim + j]; }
  const Jet<F>& at(int i, int j) const { return comp[static_cast<size_t>(i) * dim + j]; }
  Jet<F>& at(int i, int j, int k) {
    return comp[(static_cast<size_t>(i) * dim + j) * dim + k];
  }
  const Jet<F>& at(int i, int j, int k) const {
    return comp[(static_cast<size_t>(i) * dim + j) * dim + k];
  }
  Jet<F>& at(int i, int j, int k, int l) {
    return comp[((static_cast<size_t>(i) * dim + j) * dim + k) * dim + l];
  }
  const Jet<F>& at(int i, int j, int k, int l) const {
    return comp[((static_cast<size_t>(i) * dim + j) * dim + k) * dim + l];
  }

  bool is_zero() const {
    for (const auto& c : comp)
      if (!c.is_zero()) return false;
    return true;
  }

  TensorJet truncated(int new_order) const {
    TensorJet t(dim, slots, new_order);
    for (size_t k = 0; k < comp.size(); ++k) t.comp[k] = comp[k].truncated(new_order);
    return t;
  }

  friend TensorJet operator+(const TensorJet& x, const TensorJet& y) {
    TensorJet r = x;
    for (size_t k = 0; k < r.comp.size(); ++k) r.comp[k] += y.comp[k];
    return r;
  }
  friend TensorJet operator-(const TensorJet& x, const TensorJet& y) {
    TensorJet r = x;
    for (size_t k = 0; k < r.comp.size(); ++k) r.comp[k] -= y.comp[k];
    return r;
  }
  friend bool operator==(const TensorJet& x, const TensorJet& y) {
    return x.dim == y.dim && x.slots == y.slots && x.comp == y.comp;
  }
};

// Odometer over rank-many indices in {0..dim-1}.
inline bool next_index(std::vector<int>& idx, int dim) {
  for (int p = static_cast<int>(idx.size()) - 1; p >= 0; --p) {
    if (++idx[p] < dim) return true;
    idx[p] = 0;
  }
  return false;
}

// Values at the chart origin of a rank-2 tensor, as a scalar matrix.
template <class F>
Mat<F> value_matrix(const TensorJet<F>& t) {
  Mat<F> m(t.dim, t.dim);
  for (int i = 0; i < t.dim; ++i)
    for (int j = 0; j < t.dim; ++j) m.at(i, j) = t.at(i, j).value();
  return m;
}

template <class F>
bool is_symmetric2(const TensorJet<F>& t) {
  for (int i = 0; i < t.dim; ++i)
    for (int j = 0; j < i; ++j)
      if (!(t.at(i, j) == t.at(j, i))) return false;
  return true;
}

template <class F>
bool is_antisymmetric2(const TensorJet<F>& t) {
  for (int i = 0; i < t.dim; ++i)
    for (int j = 0; j <= i; ++j) {
      Jet<F> s = t.at(i, j) + t.at(j, i);
      if (!s.is_zero()) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// Connections.

template <class F>
struct ConnectionChart {
  int dim = 0;
  int order = 0;
  std::vector<std::string> var_names;
  std::vector<Jet<F>> gamma;  // Γ^k_{ij} at [k][i][j], row-major

  ConnectionChart() = default;
  ConnectionChart(int d, int ord, std::vector<std::string> names)
      : dim(d), order(ord), var_names(std::move(names)) {
    gamma.assign(static_cast<size_t>(d) * d * d, Jet<F>::zero(d, ord));
  }

  Jet<F>& G(int k, int i, int j) {
    return gamma[(static_cast<size_t>(k) * dim + i) * dim + j];
  }
  const Jet<F>& G(int k, int i, int j) const {
    return gamma[(static_cast<size_t>(k) * dim + i) * dim + j];
  }

  ConnectionChart truncated(int new_order) const {
    ConnectionChart c(dim, new_order, var_names);
    for (size_t k = 0; k < gamma.size(); ++k) c.gamma[k] = gamma[k].truncated(new_order);
    return c;
  }
};

inline std::vector<std::string> default_var_names(int dim) {
  std::vector<std::string> v;
  for (int k = 1; k <= dim; ++k) v.push_back("x" + std::to_string(k));
  return v;
}

template <class F>
TensorJet<F> torsion(const ConnectionChart<F>& conn) {
  TensorJet<F> t(conn.dim, {Slot::Up, Slot::Lo, Slot::Lo}, conn.order);
  for (int k = 0; k < conn.dim; ++k)
    for (int i = 0; i < conn.dim; ++i)
      for (int j = 0; j < conn.dim; ++j) t.at(k, i, j) = conn.G(k, i, j) - conn.G(k, j, i);
  return t;
}

template <class F>
bool has_torsion(const ConnectionChart<F>& conn) {
  for (int k = 0; k < conn.dim; ++k)
    for (int i = 0; i < conn.dim; ++i)
      for (int j = 0; j < i; ++j) {
        Jet<F> d = conn.G(k, i, j) - conn.G(k, j, i);
        if (!d.is_zero()) return true;
      }
  return false;
}

// R_{hj}{}^k{}_l = d_h Γ^k_{jl} − d_j Γ^k_{hl} + Γ^k_{hm} Γ^m_{jl} − Γ^k_{jm} Γ^m_{hl}.
// Result order = input order − 1, slots (h, j, k up, l).
template <class F>
TensorJet<F> curvature(const ConnectionChart<F>& conn) {
  if (has_torsion(conn)) throw std::domain_error("curvature: connection has torsion");
  if (conn.order < 1) throw std::domain_error("curvature: jet order exhausted");
  int n = conn.dim, out = conn.order - 1;
  ConnectionChart<F> g = conn.truncated(out);
  TensorJet<F> r(n, {Slot::Lo, Slot::Lo, Slot::Up, Slot::Lo}, out);
  for (int h = 0; h < n; ++h)
    for (int j = 0; j < h; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          Jet<F> v = jet_partial(conn.G(k, j, l), h) - jet_partial(conn.G(k, h, l), j);
          for (int m = 0; m < n; ++m)
            v += jet_mul(g.G(k, h, m), g.G(m, j, l)) - jet_mul(g.G(k, j, m), g.G(m, h, l));
          r.at(h, j, k, l) = v;
          r.at(j, h, k, l) = -v;
        }
  return r;
}

// Ricci trace Ric_{jl} = R_{kj}{}^k{}_l.
template <class F>
TensorJet<F> ricci_of(const TensorJet<F>& curv) {
  int n = curv.dim;
  TensorJet<F> ric(n, {Slot::Lo, Slot::Lo}, curv.order());
  for (int j = 0; j < n; ++j)
    for (int l = 0; l < n; ++l) {
      Jet<F> v = Jet<F>::zero(n, curv.order());
      for (int k = 0; k < n; ++k) v += curv.at(k, j, k, l);
      ric.at(j, l) = v;
    }
  return ric;
}

template <class F>
TensorJet<F> ricci(const ConnectionChart<F>& conn) {
  return ricci_of(curvature(conn));
}

// Covariant derivative with the new covariant slot placed first:
// (∇t)_{h I} = d_h t_I + Σ_up Γ^{i_p}_{hm} t^{..m..} − Σ_lo Γ^m_{h i_p} t_{..m..}.
template <class F>
TensorJet<F> covariant_derivative(const TensorJet<F>& t, const ConnectionChart<F>& conn) {
  if (t.order() < 1) throw std::domain_error("covariant_derivative: jet order exhausted");
  int n = t.dim;
  int out = t.order() - 1;
  if (conn.order < out) out = conn.order;
  ConnectionChart<F> g = conn.truncated(out);
  TensorJet<F> tt = t.truncated(out);

  std::vector<Slot> oslots;
  oslots.push_back(Slot::Lo);
  for (Slot s : t.slots) oslots.push_back(s);
  TensorJet<F> r(n, oslots, out);

  std::vector<int> idx(t.slots.size(), 0);
  if (t.slots.empty()) {
    for (int h = 0; h < n; ++h) r.at(h) = jet_partial(t.at(0), h).truncated(out);
    return r;
  }
  do {
    const Jet<F>& base = t.at(idx);
    for (int h = 0; h < n; ++h) {
      Jet<F> v = jet_partial(base, h).truncated(out);
      std::vector<int> jdx = idx;
      for (size_t p = 0; p < t.slots.size(); ++p) {
        int saved = jdx[p];
        if (t.slots[p] == Slot::Up) {
          for (int m = 0; m < n; ++m) {
            jdx[p] = m;
            v += jet_mul(g.G(saved, h, m), tt.at(jdx));
          }
        } else {
          for (int m = 0; m < n; ++m) {
            jdx[p] = m;
            v -= jet_mul(g.G(m, h, saved), tt.at(jdx));
          }
        }
        jdx[p] = saved;
      }
      std::vector<int> full;
      full.push_back(h);
      for (int q : idx) full.push_back(q);
      r.at(full) = v;
    }
  } while (next_index(idx, n));
  return r;
}

// Volume preservation for a torsion-free connection is symmetry of Ricci.
template <class F>
bool is_volume_preserving(const ConnectionChart<F>& conn) {
  return is_symmetric2(ricci(conn));
}

template <class F>
struct EinsteinCheck {
  bool einstein = false;
  std::string reason;               // empty when einstein
  std::optional<Jet<F>> coefficient;  // Ric = coefficient · metric, when a metric is given
};

// Einstein in the sense used throughout: Ric symmetric, parallel at the
// retained order and nondegenerate at the base point.  When a candidate
// metric is supplied and Ric is exactly a constant multiple of it, the
// multiple is reported.
template <class F>
EinsteinCheck<F> is_einstein(const ConnectionChart<F>& conn,
                             const TensorJet<F>* metric = nullptr) {
  EinsteinCheck<F> out;
  if (has_torsion(conn)) {
    out.reason = "has torsion";
    return out;
  }
  if (conn.order < 2) {
    out.reason = "jet order too low to decide";
    return out;
  }
  TensorJet<F> ric = ricci(conn);
  if (!is_symmetric2(ric)) {
    out.reason = "ricci asymmetric";
    return out;
  }
  if (!covariant_derivative(ric, conn).is_zero()) {
    out.reason = "ricci not parallel at retained order";
    return out;
  }
  if (rank_field(value_matrix(ric)) != conn.dim) {
    out.reason = "ricci degenerate at base point";
    return out;
  }
  out.einstein = true;
  if (metric != nullptr) {
    // Find the constant c with Ric = c·metric, if one exists exactly.
    for (int i = 0; i < conn.dim && !out.coefficient; ++i)
      for (int j = 0; j < conn.dim; ++j)
        if (!is_zero(metric->at(i, j).value())) {
          F c = ric.at(i, j).value() / metric->at(i, j).value();
          bool ok = true;
          int ord = std::min(ric.order(), metric->order());
          for (size_t k = 0; k < ric.comp.size() && ok; ++k) {
            Jet<F> d = ric.comp[k].truncated(ord) - c * metric->comp[k].truncated(ord);
            ok = d.is_zero();
          }
          if (ok) out.coefficient = Jet<F>::constant(conn.dim, ric.order(), c);
          break;
        }
  }
  return out;
}

}  // namespace phl
