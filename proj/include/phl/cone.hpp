#pragma once

// Cone connections over a preferred connection: the real projective cone on
// (x.., q), the complex cone on (q, r, z..) and the symplectic cone on
// (q, e, x..), plus product connections and the polynomial identities that
// stand in for preservation of the exponentially-weighted structures.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "phl/projective.hpp"
#include "phl/tensor.hpp"

namespace phl {

template <class F>
struct ConeChart;
template <class F>
bool cone_scale_identity_holds(const ConeChart<F>& cc, const TensorJet<F>& t);

enum class ConeKind { Real, Complex, Symplectic };

inline std::string cone_kind_name(ConeKind k) {
  switch (k) {
    case ConeKind::Real: return "real";
    case ConeKind::Complex: return "complex";
    default: return "symplectic";
  }
}

template <class F>
struct SymplecticConeData {
  TensorJet<F> nu;     // (0,2) antisymmetric, nondegenerate at base point
  TensorJet<F> s;      // (0,2) symmetric
  TensorJet<F> sigma;  // (1,1), s(X,Y) = ν(X, σY)
  TensorJet<F> U;      // (1,0)
  Jet<F> f;            // scalar
};

template <class F>
struct ConeChart {
  ConnectionChart<F> base;
  ConnectionChart<F> cone;
  ConeKind kind = ConeKind::Real;
  int q_index = -1;
  int second_index = -1;  // r (complex) or e (symplectic); -1 otherwise
  std::optional<TensorJet<F>> omega0;  // symplectic cones only
};

namespace detail {

template <class F>
Jet<F> embed_to(const Jet<F>& a, int cone_dim, int offset, int order) {
  std::vector<int> var_map(a.nvars());
  for (int v = 0; v < a.nvars(); ++v) var_map[v] = v + offset;
  return jet_embed(a, cone_dim, var_map, order);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Real projective cone: chart (x¹..xⁿ, q), q last.
//   Γ̂^k_{ij} = Γ^k_{ij},  Γ̂^q_{ij} = P_{ij},  Γ̂^a_{bq} = Γ̂^a_{qb} = δ^a_b.
template <class F>
ConeChart<F> projective_cone(const ConnectionChart<F>& conn) {
  TensorJet<F> p = rho(conn);  // checks torsion via curvature
  if (!is_symmetric2(p))
    throw std::domain_error("preferred connection does not preserve a volume form");
  int n = conn.dim;
  int ord = conn.order - 1;  // order of P
  std::vector<std::string> names = conn.var_names;
  names.push_back("q");
  ConnectionChart<F> cone(n + 1, ord, names);
  Jet<F> one = Jet<F>::constant(n + 1, ord, F(1));
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        cone.G(k, i, j) = detail::embed_to(conn.G(k, i, j).truncated(ord), n + 1, 0, ord);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) cone.G(n, i, j) = detail::embed_to(p.at(i, j), n + 1, 0, ord);
  for (int a = 0; a <= n; ++a) {
    cone.G(a, a, n) = one;
    cone.G(a, n, a) = one;
  }
  // the two assignments above already covered a = q: Γ̂^q_{qq} = 1

  ConeChart<F> cc;
  cc.base = conn;
  cc.cone = std::move(cone);
  cc.kind = ConeKind::Real;
  cc.q_index = n;
  if (cc.cone.order >= 1 && !ricci(cc.cone).is_zero())
    throw std::logic_error("projective_cone: cone failed the Ricci-flatness invariant");
  return cc;
}

// Block product on concatenated coordinates, renamed x1..xN.
template <class F>
ConnectionChart<F> product_connection(const ConnectionChart<F>& a,
                                      const ConnectionChart<F>& b) {
  int n = a.dim + b.dim;
  int ord = std::min(a.order, b.order);
  ConnectionChart<F> c(n, ord, default_var_names(n));
  for (int k = 0; k < a.dim; ++k)
    for (int i = 0; i < a.dim; ++i)
      for (int j = 0; j < a.dim; ++j)
        c.G(k, i, j) = detail::embed_to(a.G(k, i, j).truncated(ord), n, 0, ord);
  for (int k = 0; k < b.dim; ++k)
    for (int i = 0; i < b.dim; ++i)
      for (int j = 0; j < b.dim; ++j)
        c.G(k + a.dim, i + a.dim, j + a.dim) =
            detail::embed_to(b.G(k, i, j).truncated(ord), n, a.dim, ord);
  return c;
}

// ---------------------------------------------------------------------------
// Complex cone over a holomorphic chart: coordinates (q, r, z¹..zᵐ) over the
// gaussian rationals, with J∂_q = ∂_r, J∂_r = −∂_q, J∂_i = i∂_i.
//   Γ̂^k_{ij} = Γ^k_{ij},  Γ̂^q_{ij} = P^ℂ_{ij},  Γ̂^r_{ij} = −i·P^ℂ_{ij},
//   Γ̂^a_{bq} = δ^a_b,     Γ̂^k_{ir} = i·δ^k_i,   Γ̂^q_{rr} = −1,  Γ̂^r_{qr} = 1.
template <class F>
ConeChart<F> complex_cone(const ConnectionChart<F>& conn, const TensorJet<F>& rho_c) {
  if (has_torsion(conn)) throw std::domain_error("complex_cone: connection has torsion");
  if (!is_symmetric2(rho_c))
    throw std::domain_error("complex_cone: rho tensor is not symmetric");
  F iu = FieldInfo<F>::imaginary_unit();
  int m = conn.dim;
  int nc = m + 2;
  int ord = std::min(conn.order - 1, rho_c.order());
  std::vector<std::string> names;
  names.push_back("q");
  names.push_back("r");
  for (const auto& v : conn.var_names) names.push_back(v);

  ConnectionChart<F> cone(nc, ord, names);
  Jet<F> one = Jet<F>::constant(nc, ord, F(1));
  Jet<F> i_one = iu * one;
  for (int k = 0; k < m; ++k)
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        cone.G(k + 2, i + 2, j + 2) =
            detail::embed_to(conn.G(k, i, j).truncated(ord), nc, 2, ord);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Jet<F> pc = detail::embed_to(rho_c.at(i, j).truncated(ord), nc, 2, ord);
      cone.G(0, i + 2, j + 2) = pc;
      cone.G(1, i + 2, j + 2) = -(iu * pc);
    }
  for (int a = 0; a < nc; ++a) {
    cone.G(a, a, 0) = one;
    cone.G(a, 0, a) = one;
  }
  for (int k = 0; k < m; ++k) {
    cone.G(k + 2, k + 2, 1) = i_one;
    cone.G(k + 2, 1, k + 2) = i_one;
  }
  cone.G(0, 1, 1) = -one;

  ConeChart<F> cc;
  cc.base = conn;
  cc.cone = std::move(cone);
  cc.kind = ConeKind::Complex;
  cc.q_index = 0;
  cc.second_index = 1;

  if (!torsion(cc.cone).is_zero())
    throw std::logic_error("complex_cone: cone failed the torsion-freeness invariant");
  if (cc.cone.order >= 1 && !ricci(cc.cone).is_zero())
    throw std::domain_error("complex_cone: supplied rho tensor does not make the cone Ricci-flat");
  return cc;
}

// The coordinate complex structure on the complex cone fiber.
template <class F>
TensorJet<F> complex_cone_structure(const ConeChart<F>& cc) {
  F iu = FieldInfo<F>::imaginary_unit();
  int nc = cc.cone.dim;
  TensorJet<F> j(nc, {Slot::Up, Slot::Lo}, cc.cone.order);
  j.at(1, 0) = Jet<F>::constant(nc, cc.cone.order, F(1));
  j.at(0, 1) = Jet<F>::constant(nc, cc.cone.order, F(0) - F(1));
  for (int k = 2; k < nc; ++k) j.at(k, k) = Jet<F>::constant(nc, cc.cone.order, iu);
  return j;
}

// ---------------------------------------------------------------------------
// Poincaré primitive λ of 2ν on a star-shaped chart: dλ = 2ν, λ(0) = 0.
// Monomial rule: a coefficient c·x^α in ν_{kj} contributes 2c/(|α|+2)·x^{α+e_k}
// to λ_j.
template <class F>
std::vector<Jet<F>> poincare_primitive(const TensorJet<F>& nu, int order) {
  int n = nu.dim;
  std::vector<Jet<F>> lam(n, Jet<F>::zero(n, order));
  const MonomialTable& tab = monomial_table(n, order);
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j) {
      const Jet<F>& c = nu.at(k, j);
      int m = c.ncoeff();
      for (int idx = 0; idx < m; ++idx) {
        if (is_zero(c.coeff(idx))) continue;
        int deg = monomial_table(n, c.order()).degree(idx);
        if (deg + 1 > order) continue;
        std::vector<int> e = monomial_table(n, c.order()).exponents(idx);
        e[k] += 1;
        int target = tab.index_of(e);
        lam[j].coeff(target) += frac<F>(2, deg + 2) * c.coeff(idx);
      }
    }
  return lam;
}

// ---------------------------------------------------------------------------
// Symplectic cone: chart (q, e, x¹..x²ⁿ).  The frame display
//   ∇⃗Q = Id, ∇⃗_X̄Ȳ = (∇_X Y)‾ − ν(X,Y)E − s(X,Y)Q, ∇⃗_X̄E = (σX)‾ + ν(X,U)Q,
//   ∇⃗_E E = −Ū + fQ
// is realized through the lifts X̄ = ∂_i − λ(X)∂_e with dλ = 2ν.
template <class F>
ConeChart<F> symplectic_cone(const ConnectionChart<F>& base,
                             const SymplecticConeData<F>& data) {
  int n = base.dim;
  if (n < 2 || n % 2 != 0)
    throw std::domain_error("symplectic_cone: base dimension must be even and positive");
  if (has_torsion(base)) throw std::domain_error("symplectic_cone: connection has torsion");
  if (!is_antisymmetric2(data.nu))
    throw std::domain_error("symplectic_cone: form is not antisymmetric");
  if (rank_field(value_matrix(data.nu)) != n)
    throw std::domain_error("symplectic_cone: symplectic form is degenerate at the base point");
  if (!covariant_derivative(data.nu, base).is_zero())
    throw std::domain_error("symplectic_cone: base connection does not preserve the symplectic form");

  int ord = std::min({base.order - 1, data.s.order(), data.sigma.order(),
                      data.U.order(), data.f.order()});
  if (ord < 0) throw std::domain_error("symplectic_cone: jet order exhausted");

  // Consistency of the data: s(X,Y) = ν(X, σY).
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Jet<F> acc = Jet<F>::zero(n, ord);
      for (int k = 0; k < n; ++k)
        acc += jet_mul(data.nu.at(i, k).truncated(ord), data.sigma.at(k, j).truncated(ord));
      if (!(acc == data.s.at(i, j).truncated(ord)))
        throw std::invalid_argument("symplectic_cone: sigma is inconsistent with s and nu");
    }

  std::vector<Jet<F>> lam_base = poincare_primitive(data.nu, ord + 1);
  {
    // dλ = 2ν at the retained order; fails only if ν was not closed.
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Jet<F> d = jet_partial(lam_base[j], i) - jet_partial(lam_base[i], j);
        Jet<F> expect = frac<F>(2, 1) * data.nu.at(i, j).truncated(ord);
        if (!(d == expect))
          throw std::domain_error("symplectic_cone: form is not closed at the retained order");
      }
  }

  int nc = n + 2;
  std::vector<std::string> names;
  names.push_back("q");
  names.push_back("e");
  for (const auto& v : base.var_names) names.push_back(v);

  // Everything embedded into the cone chart at the common order.
  auto emb = [&](const Jet<F>& a) { return detail::embed_to(a.truncated(ord), nc, 2, ord); };
  std::vector<Jet<F>> lam(n);
  std::vector<std::vector<Jet<F>>> dlam(n, std::vector<Jet<F>>(n));
  for (int i = 0; i < n; ++i) {
    lam[i] = emb(lam_base[i].truncated(ord));
    for (int j = 0; j < n; ++j)
      dlam[i][j] = emb(jet_partial(lam_base[j], i).truncated(ord));
  }
  auto G = [&](int k, int i, int j) { return emb(base.G(k, i, j)); };
  auto NU = [&](int i, int j) { return emb(data.nu.at(i, j)); };
  auto S = [&](int i, int j) { return emb(data.s.at(i, j)); };
  auto SG = [&](int k, int i) { return emb(data.sigma.at(k, i)); };
  std::vector<Jet<F>> U(n);
  for (int k = 0; k < n; ++k) U[k] = emb(data.U.at(k));
  Jet<F> f = emb(data.f);
  Jet<F> one = Jet<F>::constant(nc, ord, F(1));

  ConnectionChart<F> cone(nc, ord, names);
  for (int a = 0; a < nc; ++a) {
    cone.G(a, a, 0) = one;
    cone.G(a, 0, a) = one;
  }
  // ν(X, U) as a one-form and λ-contractions, precomputed.
  std::vector<Jet<F>> nuU(n, Jet<F>::zero(nc, ord));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) nuU[i] += jet_mul(NU(i, k), U[k]);
  Jet<F> lamU = Jet<F>::zero(nc, ord);
  for (int k = 0; k < n; ++k) lamU += jet_mul(lam[k], U[k]);

  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      // tangent row
      for (int k = 0; k < n; ++k) {
        Jet<F> v = G(k, i, j) + jet_mul(lam[j], SG(k, i)) + jet_mul(lam[i], SG(k, j)) -
                   jet_mul(jet_mul(lam[i], lam[j]), U[k]);
        cone.G(k + 2, i + 2, j + 2) = v;
      }
      // e row
      {
        Jet<F> v = dlam[i][j] - NU(i, j);
        for (int k = 0; k < n; ++k) v -= jet_mul(lam[k], G(k, i, j));
        Jet<F> lsi = Jet<F>::zero(nc, ord), lsj = Jet<F>::zero(nc, ord);
        for (int k = 0; k < n; ++k) {
          lsi += jet_mul(lam[k], SG(k, i));
          lsj += jet_mul(lam[k], SG(k, j));
        }
        v -= jet_mul(lam[j], lsi) + jet_mul(lam[i], lsj);
        v += jet_mul(jet_mul(lam[i], lam[j]), lamU);
        cone.G(1, i + 2, j + 2) = v;
      }
      // q row
      {
        Jet<F> v = -S(i, j) + jet_mul(lam[j], nuU[i]) + jet_mul(lam[i], nuU[j]) +
                   jet_mul(jet_mul(lam[i], lam[j]), f);
        cone.G(0, i + 2, j + 2) = v;
      }
    }
    // (i, e) entries
    for (int k = 0; k < n; ++k) {
      Jet<F> v = SG(k, i) - jet_mul(lam[i], U[k]);
      cone.G(k + 2, i + 2, 1) = v;
      cone.G(k + 2, 1, i + 2) = v;
    }
    {
      Jet<F> v = jet_mul(lam[i], lamU);
      for (int k = 0; k < n; ++k) v -= jet_mul(lam[k], SG(k, i));
      cone.G(1, i + 2, 1) = v;
      cone.G(1, 1, i + 2) = v;
      Jet<F> w = nuU[i] + jet_mul(lam[i], f);
      cone.G(0, i + 2, 1) = w;
      cone.G(0, 1, i + 2) = w;
    }
  }
  // (e, e) entries
  for (int k = 0; k < n; ++k) cone.G(k + 2, 1, 1) = -U[k];
  cone.G(1, 1, 1) = lamU;
  cone.G(0, 1, 1) = f;

  ConeChart<F> cc;
  cc.base = base;
  cc.cone = std::move(cone);
  cc.kind = ConeKind::Symplectic;
  cc.q_index = 0;
  cc.second_index = 1;

  // ω₀ = ν̃ + dq⊗α − α⊗dq with α = de + λ_i dx^i.
  TensorJet<F> w0(nc, {Slot::Lo, Slot::Lo}, ord);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) w0.at(i + 2, j + 2) = NU(i, j);
  w0.at(0, 1) = one;
  w0.at(1, 0) = -one;
  for (int i = 0; i < n; ++i) {
    w0.at(0, i + 2) = lam[i];
    w0.at(i + 2, 0) = -lam[i];
  }
  cc.omega0 = w0;

  if (!torsion(cc.cone).is_zero())
    throw std::logic_error("symplectic_cone: cone failed the torsion-freeness invariant");
  if (cc.cone.order >= 1 && !ricci(cc.cone).is_zero())
    throw std::domain_error("symplectic_cone: supplied data does not yield a Ricci-flat cone");
  if (cc.cone.order >= 1 && !cone_scale_identity_holds(cc, w0))
    throw std::logic_error("symplectic_cone: cone failed the form-preservation invariant");
  return cc;
}

namespace detail {

// Truncated e^{2x_var}: the conformal weight that turns a scale-covariant
// tensor (∇̂t = −2 dq ⊗ t) into an exactly parallel one.
template <class F>
Jet<F> exp_twice_var(int nvars, int order, int var) {
  Jet<F> sum = Jet<F>::constant(nvars, order, F(1));
  if (order < 1) return sum;
  Jet<F> q = Jet<F>::variable(nvars, order, var);
  Jet<F> term = Jet<F>::constant(nvars, order, F(1));
  for (int k = 1; k <= order; ++k) {
    term = jet_mul(term, q);
    term = frac<F>(2, k) * term;
    sum += term;
  }
  return sum;
}

template <class F>
TensorJet<F> scale_tensor(const Jet<F>& w, const TensorJet<F>& t) {
  TensorJet<F> r = t;
  std::vector<int> idx(t.slots.size(), 0);
  do {
    r.at(idx) = jet_mul(w, t.at(idx));
  } while (next_index(idx, t.dim));
  return r;
}

}  // namespace detail

// The exponential-weight identity: a tensor t with ∇̂t = −2 dq ⊗ t is the
// polynomial shadow of a parallel e^{2q}-weighted tensor on the cone.
template <class F>
bool cone_scale_identity_holds(const ConeChart<F>& cc, const TensorJet<F>& t) {
  TensorJet<F> dt = covariant_derivative(t, cc.cone);
  int out = dt.order();
  std::vector<int> idx(t.slots.size(), 0);
  do {
    for (int h = 0; h < cc.cone.dim; ++h) {
      std::vector<int> full;
      full.push_back(h);
      for (int q : idx) full.push_back(q);
      Jet<F> expect = Jet<F>::zero(cc.cone.dim, out);
      if (h == cc.q_index) expect = frac<F>(-2, 1) * t.at(idx).truncated(out);
      if (!(dt.at(full) == expect)) return false;
    }
  } while (next_index(idx, cc.cone.dim));
  return true;
}

// ---------------------------------------------------------------------------
// The canonical data choice making the symplectic cone Ricci-flat, on a base
// of dimension 2n:
//   s = Ric/(2n+2),  σ = ν⁻¹s,  η = trace[Y ↦ ∇_Y σ],
//   U = −ν⁻¹η/(2n+1),  f = (tr ∇U + tr σ²)/(2n).
template <class F>
SymplecticConeData<F> ricci_flat_data(const ConnectionChart<F>& base,
                                      const TensorJet<F>& nu) {
  int n = base.dim;
  if (n < 2 || n % 2 != 0)
    throw std::domain_error("ricci_flat_data: base dimension must be even and at least 2");
  if (!is_antisymmetric2(nu))
    throw std::domain_error("ricci_flat_data: nu is not antisymmetric");
  int nuord = nu.order();
  Mat<Jet<F>> numat(n, n, Jet<F>::zero(n, nuord));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) numat.at(i, j) = nu.at(i, j);
  auto nuinv = inverse_jet_matrix(numat);
  if (!nuinv)
    throw std::domain_error("ricci_flat_data: nu is degenerate at the base point");

  SymplecticConeData<F> data;
  data.nu = nu;

  TensorJet<F> ric = ricci(base);
  int sord = std::min(ric.order(), nuord);
  data.s = TensorJet<F>(n, {Slot::Lo, Slot::Lo}, sord);
  F cs = frac<F>(1, n + 2);  // base dim is 2n, so this is 1/(2n+2)
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) data.s.at(i, j) = cs * ric.at(i, j).truncated(sord);

  // s(X, Y) = ν(X, σY), i.e. s_{ij} = ν_{ik} σ^k_j, so σ = ν⁻¹ s.
  data.sigma = TensorJet<F>(n, {Slot::Up, Slot::Lo}, sord);
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j) {
      Jet<F> acc = Jet<F>::zero(n, sord);
      for (int m = 0; m < n; ++m)
        acc += jet_mul(nuinv->at(k, m).truncated(sord), data.s.at(m, j));
      data.sigma.at(k, j) = acc;
    }

  TensorJet<F> dsigma = covariant_derivative(data.sigma, base);
  int eord = dsigma.order();
  std::vector<Jet<F>> eta(n, Jet<F>::zero(n, eord));
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) eta[j] += dsigma.at(k, k, j);

  data.U = TensorJet<F>(n, {Slot::Up}, eord);
  F cu = frac<F>(-1, n + 1);
  for (int k = 0; k < n; ++k) {
    Jet<F> acc = Jet<F>::zero(n, eord);
    for (int m = 0; m < n; ++m)
      acc += jet_mul(nuinv->at(k, m).truncated(eord), eta[m]);
    data.U.at(k) = cu * acc;
  }

  TensorJet<F> du = covariant_derivative(data.U, base);
  int ford = du.order();
  Jet<F> f = Jet<F>::zero(n, ford);
  for (int k = 0; k < n; ++k) f += du.at(k, k);
  for (int k = 0; k < n; ++k)
    for (int m = 0; m < n; ++m)
      f += jet_mul(data.sigma.at(k, m).truncated(ford), data.sigma.at(m, k).truncated(ford));
  data.f = frac<F>(1, n) * f;
  return data;
}

// ---------------------------------------------------------------------------
// Parallel metric on the cone over an Einstein base (in the weighted sense
// above): h₀ = Ric_base ⊕ (N−1)·dq², N = base dimension.
template <class F>
TensorJet<F> cone_parallel_metric(const ConeChart<F>& cc) {
  if (cc.kind != ConeKind::Real)
    throw std::domain_error("cone_parallel_metric: real cones only");
  EinsteinCheck<F> ch = is_einstein(cc.base);
  if (!ch.einstein)
    throw std::domain_error("cone_parallel_metric: base is not Einstein (" + ch.reason + ")");
  int n = cc.base.dim;
  int ord = cc.cone.order;
  TensorJet<F> ric = ricci(cc.base);
  TensorJet<F> h(n + 1, {Slot::Lo, Slot::Lo}, ord);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      h.at(i, j) = detail::embed_to(ric.at(i, j).truncated(ord), n + 1, 0, ord);
  h.at(n, n) = Jet<F>::constant(n + 1, ord, F(n - 1));
  return h;
}

// ---------------------------------------------------------------------------
// Chart shear (x, q) → (x, q − f): mechanical pullback of a cone connection
// whose Christoffels do not depend on q.  Used to compare the cones of two
// preferred connections differing by the exact one-form df.
template <class F>
ConnectionChart<F> shear_cone_chart(const ConeChart<F>& cc, const Jet<F>& f_base) {
  if (cc.kind != ConeKind::Real)
    throw std::domain_error("shear_cone_chart: real cones only");
  int n = cc.base.dim;
  int nc = n + 1;
  int ord = std::min(cc.cone.order, f_base.order() - 2);
  if (ord < 0) throw std::domain_error("shear_cone_chart: jet order exhausted");

  // df and its derivatives, embedded.
  std::vector<Jet<F>> df(nc, Jet<F>::zero(nc, ord));
  std::vector<std::vector<Jet<F>>> ddf(nc, std::vector<Jet<F>>(nc, Jet<F>::zero(nc, ord)));
  for (int i = 0; i < n; ++i) {
    df[i] = detail::embed_to(jet_partial(f_base, i).truncated(ord), nc, 0, ord);
    for (int j = 0; j < n; ++j)
      ddf[i][j] = detail::embed_to(
          jet_partial(jet_partial(f_base, i), j).truncated(ord), nc, 0, ord);
  }

  // Frame J^m_a: ∂̃_i = ∂_i + f_i ∂_q, ∂̃_q = ∂_q; inverse has −f_i.
  auto Jm = [&](int m, int a) -> Jet<F> {
    if (m == a) return Jet<F>::constant(nc, ord, F(1));
    if (m == n && a < n) return df[a];
    return Jet<F>::zero(nc, ord);
  };
  auto Jinv = [&](int d, int c) -> Jet<F> {
    if (d == c) return Jet<F>::constant(nc, ord, F(1));
    if (d == n && c < n) return -df[c];
    return Jet<F>::zero(nc, ord);
  };
  // ∂_m J^p_b: nonzero only for p = q, b, m < n.
  auto dJ = [&](int m, int p, int b) -> Jet<F> {
    if (p == n && b < n && m < n) return ddf[m][b];
    return Jet<F>::zero(nc, ord);
  };

  ConnectionChart<F> g = cc.cone.truncated(ord);
  ConnectionChart<F> out(nc, ord, cc.cone.var_names);
  for (int a = 0; a < nc; ++a)
    for (int b = 0; b < nc; ++b) {
      // ∇_{∂̃_a} ∂̃_b = Σ J^m_a [ (∂_m J^p_b) ∂_p + J^p_b Γ^c_{mp} ∂_c ]
      std::vector<Jet<F>> comp(nc, Jet<F>::zero(nc, ord));
      for (int m = 0; m < nc; ++m) {
        Jet<F> jma = Jm(m, a);
        if (jma.is_zero()) continue;
        for (int p = 0; p < nc; ++p) {
          Jet<F> t = dJ(m, p, b);
          if (!t.is_zero()) comp[p] += jet_mul(jma, t);
          Jet<F> jpb = Jm(p, b);
          if (jpb.is_zero()) continue;
          Jet<F> w = jet_mul(jma, jpb);
          for (int c = 0; c < nc; ++c) {
            if (g.G(c, m, p).is_zero()) continue;
            comp[c] += jet_mul(w, g.G(c, m, p));
          }
        }
      }
      // Re-express in the sheared frame.
      for (int d = 0; d < nc; ++d) {
        Jet<F> v = Jet<F>::zero(nc, ord);
        for (int c = 0; c < nc; ++c) {
          Jet<F> jv = Jinv(d, c);
          if (!jv.is_zero() && !comp[c].is_zero()) v += jet_mul(jv, comp[c]);
        }
        out.G(d, a, b) = v;
      }
    }
  return out;
}

}  // namespace phl
