#pragma once

// Projective invariants of a torsion-free connection: the rho tensor, the
// projective Weyl tensor, the Cotton-York tensor, projective changes by a
// one-form, and the tractor curvature endomorphisms on the split fiber
// (tangent ⊕ line, line slot last).

#include <stdexcept>
#include <utility>
#include <vector>

#include "phl/tensor.hpp"

namespace phl {

template <class F>
using OneFormJet = std::vector<Jet<F>>;  // component count = dim

// P_{hj} = −(n/(n²−1))·Ric_{hj} − (1/(n²−1))·Ric_{jh}, n = dim.
// Equivalently Ric_{jl} = P_{lj} − n·P_{jl}.
template <class F>
TensorJet<F> rho_of_ricci(const TensorJet<F>& ric) {
  int n = ric.dim;
  if (n <= 1) throw std::domain_error("rho: dimension must be at least 2");
  F cn = frac<F>(-n, n * n - 1);
  F c1 = frac<F>(-1, n * n - 1);
  TensorJet<F> p(n, {Slot::Lo, Slot::Lo}, ric.order());
  for (int h = 0; h < n; ++h)
    for (int j = 0; j < n; ++j) p.at(h, j) = cn * ric.at(h, j) + c1 * ric.at(j, h);
  return p;
}

template <class F>
TensorJet<F> rho(const ConnectionChart<F>& conn) {
  return rho_of_ricci(ricci(conn));
}

// W_{hj}{}^k{}_l = R_{hj}{}^k{}_l − P_{hl}δ^k_j − P_{hj}δ^k_l + P_{jl}δ^k_h + P_{jh}δ^k_l.
// Trace-free on every contraction of k with a lower slot.
template <class F>
TensorJet<F> projective_weyl(const ConnectionChart<F>& conn) {
  TensorJet<F> r = curvature(conn);
  TensorJet<F> p = rho_of_ricci(ricci_of(r));
  int n = conn.dim;
  TensorJet<F> w = r;
  for (int h = 0; h < n; ++h)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          Jet<F>& v = w.at(h, j, k, l);
          if (k == j) v -= p.at(h, l);
          if (k == l) v -= p.at(h, j);
          if (k == h) v += p.at(j, l);
          if (k == l) v += p.at(j, h);
        }
  return w;
}

// CY_{hjk} = ∇_h P_{jk} − ∇_j P_{hk}; needs two derivatives of Γ.
template <class F>
TensorJet<F> cotton_york(const ConnectionChart<F>& conn) {
  if (conn.order < 2) throw std::domain_error("cotton_york: jet order exhausted");
  TensorJet<F> p = rho(conn);
  TensorJet<F> dp = covariant_derivative(p, conn);
  int n = conn.dim;
  TensorJet<F> cy(n, {Slot::Lo, Slot::Lo, Slot::Lo}, dp.order());
  for (int h = 0; h < n; ++h)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) cy.at(h, j, k) = dp.at(h, j, k) - dp.at(j, h, k);
  return cy;
}

// Γ'^k_{ij} = Γ^k_{ij} + Υ_i δ^k_j + Υ_j δ^k_i (same projective class).
template <class F>
ConnectionChart<F> change_preferred(const ConnectionChart<F>& conn,
                                    const OneFormJet<F>& upsilon) {
  if (static_cast<int>(upsilon.size()) != conn.dim)
    throw std::invalid_argument("change_preferred: one-form has wrong component count");
  int out = conn.order;
  for (const auto& u : upsilon)
    if (u.order() < out) out = u.order();
  ConnectionChart<F> c = conn.truncated(out);
  for (int k = 0; k < conn.dim; ++k)
    for (int i = 0; i < conn.dim; ++i)
      for (int j = 0; j < conn.dim; ++j) {
        if (k == j) c.G(k, i, j) += upsilon[i].truncated(out);
        if (k == i) c.G(k, i, j) += upsilon[j].truncated(out);
      }
  return c;
}

// rho of change_preferred(base, Υ) for a Ricci-flat torsion-free base,
// computed directly: P_{hj} = ∇_h Υ_j − Υ_h Υ_j.
template <class F>
TensorJet<F> rho_from_ricci_flat_change(const OneFormJet<F>& upsilon,
                                        const ConnectionChart<F>& base) {
  if (!ricci(base).is_zero())
    throw std::domain_error("rho_from_ricci_flat_change: base is not Ricci-flat");
  int n = base.dim;
  int uord = upsilon[0].order();
  for (const auto& u : upsilon)
    if (u.order() < uord) uord = u.order();
  int out = std::min(base.order, uord) - 1;
  TensorJet<F> ups(n, {Slot::Lo}, uord);
  for (int j = 0; j < n; ++j) ups.at(j) = upsilon[j].truncated(uord);
  TensorJet<F> du = covariant_derivative(ups, base).truncated(out);
  TensorJet<F> p(n, {Slot::Lo, Slot::Lo}, out);
  for (int h = 0; h < n; ++h)
    for (int j = 0; j < n; ++j)
      p.at(h, j) = du.at(h, j) -
                   jet_mul(upsilon[h].truncated(out), upsilon[j].truncated(out));
  return p;
}

struct ProjectivePair {
  int h = 0, j = 0;  // h < j
};

// Curvature of the tractor connection in the splitting of conn: for each
// coordinate pair (h, j) an endomorphism of the (dim+1)-dim fiber with the
// Weyl block upper-left, the Cotton-York row at the bottom and zero last
// column.
template <class F>
struct TractorCurvature {
  int dim = 0;  // base dim; matrices are (dim+1) × (dim+1)
  std::vector<ProjectivePair> pairs;
  std::vector<Mat<Jet<F>>> matrices;  // aligned with pairs
};

template <class F>
TractorCurvature<F> tractor_curvature(const ConnectionChart<F>& conn) {
  if (conn.order < 2) throw std::domain_error("tractor_curvature: jet order exhausted");
  int n = conn.dim;
  TensorJet<F> w = projective_weyl(conn).truncated(conn.order - 2);
  TensorJet<F> cy = cotton_york(conn);
  TractorCurvature<F> tc;
  tc.dim = n;
  for (int h = 0; h < n; ++h)
    for (int j = h + 1; j < n; ++j) {
      Mat<Jet<F>> m(n + 1, n + 1, Jet<F>::zero(n, conn.order - 2));
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) m.at(k, l) = w.at(h, j, k, l);
      for (int l = 0; l < n; ++l) m.at(n, l) = cy.at(h, j, l);
      tc.pairs.push_back({h, j});
      tc.matrices.push_back(std::move(m));
    }
  return tc;
}

template <class F>
struct ProjectiveData {
  ConnectionChart<F> conn;
  TensorJet<F> rho, weyl, cy;
};

template <class F>
ProjectiveData<F> projective_data(const ConnectionChart<F>& conn) {
  ProjectiveData<F> d;
  d.conn = conn;
  TensorJet<F> r = curvature(conn);
  d.rho = rho_of_ricci(ricci_of(r));
  d.weyl = projective_weyl(conn);
  d.cy = cotton_york(conn);
  return d;
}

}  // namespace phl
