#pragma once

// Built-in example charts, each verifying its own expected properties at
// construction time: the flat chart, gnomonic quadric charts (Einstein,
// projectively flat), a non-Einstein deformation of the flat chart, the
// 2-dimensional chart with nonvanishing Cotton-York tensor, a polynomial
// symplectic connection with full cone holonomy, and the complex quadric.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "phl/cone.hpp"
#include "phl/projective.hpp"
#include "phl/tensor.hpp"

namespace phl {

template <class F>
ConnectionChart<F> flat(int dim, int order) {
  if (dim < 1) throw std::domain_error("flat: dimension must be positive");
  return ConnectionChart<F>(dim, order, default_var_names(dim));
}

// Small rational offsets used to move a chart's base point away from a
// symmetry center; distinct salts give distinct points.
inline std::vector<Rat> default_generic_shift(int dim, int salt) {
  static const long primes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59};
  const int np = static_cast<int>(sizeof(primes) / sizeof(primes[0]));
  std::vector<Rat> s(dim);
  for (int i = 0; i < dim; ++i) s[i] = Rat(1, primes[(salt + i) % np]);
  return s;
}

// Levi-Civita connection of a metric jet; used only as an independent oracle
// against closed-form Christoffels.
template <class F>
ConnectionChart<F> levi_civita(const TensorJet<F>& h, std::vector<std::string> names) {
  int n = h.dim;
  int mord = h.order();
  if (mord < 1) throw std::domain_error("levi_civita: jet order exhausted");
  int ord = mord - 1;
  Mat<Jet<F>> hm(n, n, Jet<F>::zero(n, mord));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) hm.at(i, j) = h.at(i, j);
  auto inv = inverse_jet_matrix(hm);
  if (!inv) throw std::domain_error("levi_civita: metric is degenerate at the base point");
  ConnectionChart<F> c(n, ord, std::move(names));
  F half = frac<F>(1, 2);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) {
      std::vector<Jet<F>> bracket(n, Jet<F>::zero(n, ord));
      for (int m = 0; m < n; ++m)
        bracket[m] = jet_partial(h.at(j, m), i) + jet_partial(h.at(i, m), j) -
                     jet_partial(h.at(i, j), m);
      for (int k = 0; k < n; ++k) {
        Jet<F> v = Jet<F>::zero(n, ord);
        for (int m = 0; m < n; ++m)
          v += jet_mul(inv->at(k, m).truncated(ord), bracket[m]);
        c.G(k, i, j) = half * v;
        c.G(k, j, i) = c.G(k, i, j);
      }
    }
  return c;
}

struct QuadricChart {
  ConnectionChart<Rat> conn;
  TensorJet<Rat> metric;
  int s = 0, t = 0;
  std::vector<Rat> shift;
};

// Gnomonic chart on the quadric {g(x,x) = a} in flat signature-(s,t) space,
// centered at a rational chart point v0 (the shift).  Christoffels take the
// closed form Γ^k_{ij} = −(w_i δ^k_j + w_j δ^k_i)/(a+Q) with w = G(v0+v),
// Q = G(v0+v, v0+v), manifestly a projective change of the flat chart.
inline QuadricChart quadric_chart(int s, int t, const Rat& a, int order,
                                  std::vector<Rat> shift = {}) {
  if (s + t < 3) throw std::domain_error("quadric_chart: s + t must be at least 3");
  if (s < 1) throw std::domain_error("quadric_chart: s must be at least 1");
  if (!(Rat(0) < a))
    throw std::domain_error(
        "quadric_chart: parameter a must be positive; for a <= 0 use the "
        "signature-swapped quadric with parameters (t, s, -a)");
  if (order < 2) throw std::domain_error("quadric_chart: order must be at least 2");
  int n = s + t - 1;
  if (shift.empty()) shift.assign(n, Rat(0));
  if (static_cast<int>(shift.size()) != n)
    throw std::invalid_argument("quadric_chart: shift has wrong length");

  std::vector<Rat> gdiag(n, Rat(1));
  for (int i = s - 1; i < n; ++i) gdiag[i] = Rat(-1);

  std::vector<Jet<Rat>> u(n), w(n);
  Jet<Rat> q = Jet<Rat>::zero(n, order);
  for (int i = 0; i < n; ++i) {
    u[i] = Jet<Rat>::variable(n, order, i) + Jet<Rat>::constant(n, order, shift[i]);
    w[i] = gdiag[i] * u[i];
    q += jet_mul(w[i], u[i]);
  }
  Jet<Rat> den = q + Jet<Rat>::constant(n, order, a);
  Jet<Rat> inv = jet_inverse(den);  // throws when the chart point leaves the quadric domain
  Jet<Rat> inv2 = jet_mul(inv, inv);

  QuadricChart out;
  out.s = s;
  out.t = t;
  out.shift = shift;
  out.conn = ConnectionChart<Rat>(n, order, default_var_names(n));
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Jet<Rat> v = Jet<Rat>::zero(n, order);
        if (k == j) v -= w[i];
        if (k == i) v -= w[j];
        if (!v.is_zero()) v = jet_mul(v, inv);
        out.conn.G(k, i, j) = v;
      }
  out.metric = TensorJet<Rat>(n, {Slot::Lo, Slot::Lo}, order);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Jet<Rat> v = -jet_mul(w[i], w[j]);
      if (i == j) v += gdiag[i] * den;
      out.metric.at(i, j) = a * jet_mul(v, inv2);
    }

  // Declared properties, re-verified on every construction.
  if (!projective_weyl(out.conn).is_zero())
    throw std::logic_error("quadric_chart: chart is not projectively flat");
  EinsteinCheck<Rat> ch = is_einstein(out.conn, &out.metric);
  if (!ch.einstein)
    throw std::logic_error("quadric_chart: chart is not Einstein (" + ch.reason + ")");
  auto sig = signature_exact(value_matrix(ricci(out.conn)));
  if (sig != std::make_pair(s - 1, t))
    throw std::logic_error("quadric_chart: Ricci signature mismatch");
  if (!cotton_york(out.conn).is_zero())
    throw std::logic_error("quadric_chart: Cotton-York tensor does not vanish");
  return out;
}

// Flat chart deformed by the exact one-form
//   Υ = −dx₁ + dx₂ + Σ_l x_l dx_l = d(−x₁ + x₂ + ½Σ x_l²),
// giving a projectively flat, non-Einstein connection whose rho tensor is
// nondegenerate at the origin.
template <class F>
ConnectionChart<F> non_einstein_chart(int dim, int order) {
  if (dim < 2) throw std::domain_error("non_einstein_chart: dimension must be at least 2");
  if (order < 2) throw std::domain_error("non_einstein_chart: order must be at least 2");
  ConnectionChart<F> base = flat<F>(dim, order);
  OneFormJet<F> ups(dim);
  for (int i = 0; i < dim; ++i) {
    ups[i] = Jet<F>::variable(dim, order, i);
    if (i == 0) ups[i] -= Jet<F>::constant(dim, order, F(1));
    if (i == 1) ups[i] += Jet<F>::constant(dim, order, F(1));
  }
  ConnectionChart<F> conn = change_preferred(base, ups);
  TensorJet<F> p = rho(conn);
  if (!is_symmetric2(p)) throw std::logic_error("non_einstein_chart: rho is not symmetric");
  if (rank_field(value_matrix(p)) != dim)
    throw std::logic_error("non_einstein_chart: rho is degenerate at the origin");
  if (is_einstein(conn).einstein)
    throw std::logic_error("non_einstein_chart: chart is unexpectedly Einstein");
  return conn;
}

// Two-dimensional chart (x, y) with the single Christoffel ∇_∂x ∂x = y²∂y;
// in two dimensions the projective Weyl tensor vanishes identically and the
// Cotton-York tensor carries the whole obstruction to flatness.
inline ConnectionChart<Rat> cotton_york_2d(int order) {
  if (order < 3) throw std::domain_error("cotton_york_2d: order must be at least 3");
  ConnectionChart<Rat> c(2, order, {"x", "y"});
  Jet<Rat> y = Jet<Rat>::variable(2, order, 1);
  c.G(1, 0, 0) = jet_mul(y, y);
  TensorJet<Rat> ric = ricci(c);
  Jet<Rat> expect = Rat(2) * y.truncated(order - 1);
  if (!(ric.at(0, 0) == expect) || !ric.at(0, 1).is_zero() || !ric.at(1, 0).is_zero() ||
      !ric.at(1, 1).is_zero())
    throw std::logic_error("cotton_york_2d: Ricci tensor has unexpected value");
  return c;
}

struct SymplecticExample {
  ConnectionChart<Rat> conn;
  TensorJet<Rat> nu;
};

// Polynomial symplectic connection on (x¹..x^{2n}): with the standard form
// ν = Σ dx^{2a−1}∧dx^{2a}, set the totally symmetric potential
//   A(∂₁,∂_j,∂_j) = x₁ (j≠1),  A(∂₂,∂_k,∂_k) = x₂ (k∉{1,2})
// and Γ^k_{ij} = −(ν^{-1})^{km} A_{mij}.  Preserves ν; Ricci is 2·dx₁⊙dx₂
// plus higher order.
inline SymplecticExample symplectic_example(int two_n, int order) {
  if (two_n < 4 || two_n % 2 != 0)
    throw std::domain_error("symplectic_example: dimension must be even and at least 4");
  if (order < 2) throw std::domain_error("symplectic_example: order must be at least 2");
  int n = two_n;
  SymplecticExample out;
  out.nu = TensorJet<Rat>(n, {Slot::Lo, Slot::Lo}, order);
  Mat<Rat> numat(n, n);
  for (int a = 0; a + 1 < n; a += 2) {
    out.nu.at(a, a + 1) = Jet<Rat>::constant(n, order, Rat(1));
    out.nu.at(a + 1, a) = Jet<Rat>::constant(n, order, Rat(-1));
    numat.at(a, a + 1) = Rat(1);
    numat.at(a + 1, a) = Rat(-1);
  }
  Mat<Rat> nuinv = *inverse_field(numat);

  // A_{mij}, nonzero entries only.
  Jet<Rat> x1 = Jet<Rat>::variable(n, order, 0);
  Jet<Rat> x2 = Jet<Rat>::variable(n, order, 1);
  auto A = [&](int m, int i, int j) -> Jet<Rat> {
    int a[3] = {m, i, j};
    std::sort(a, a + 3);
    if (a[0] == 0 && a[1] == a[2] && a[1] != 0) return x1;
    if (a[0] == 1 && a[1] == a[2] && a[1] > 1) return x2;
    return Jet<Rat>::zero(n, order);
  };
  out.conn = ConnectionChart<Rat>(n, order, default_var_names(n));
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Jet<Rat> v = Jet<Rat>::zero(n, order);
        for (int m = 0; m < n; ++m) {
          if (nuinv.at(k, m).is_zero()) continue;
          Jet<Rat> am = A(m, i, j);
          if (!am.is_zero()) v -= nuinv.at(k, m) * am;
        }
        out.conn.G(k, i, j) = v;
      }

  if (!covariant_derivative(out.nu, out.conn).is_zero())
    throw std::logic_error("symplectic_example: connection does not preserve the form");
  TensorJet<Rat> ric = ricci(out.conn);
  Mat<Rat> r0 = value_matrix(ric);
  Mat<Rat> expect(n, n);
  expect.at(0, 1) = Rat(1);
  expect.at(1, 0) = Rat(1);
  if (!(r0 == expect))
    throw std::logic_error("symplectic_example: Ricci at the origin has unexpected value");
  TensorJet<Rat> dric = covariant_derivative(ric, out.conn);
  for (size_t c = 0; c < dric.comp.size(); ++c)
    if (!is_zero(dric.comp[c].value()))
      throw std::logic_error("symplectic_example: Ricci derivative does not vanish at origin");
  return out;
}

struct ComplexQuadric {
  ConnectionChart<GaussRat> conn;
  TensorJet<GaussRat> rho_c;
};

// The quadric-chart Christoffel formulas read over the gaussian rationals in
// m holomorphic coordinates, with the complex rho tensor of the Einstein case,
// P^ℂ = Ric/(2(1−m)).
inline ComplexQuadric complex_quadric_chart(int m, int order,
                                            std::vector<Rat> shift = {}) {
  if (m < 2) throw std::domain_error("complex_quadric_chart: m must be at least 2");
  if (order < 2) throw std::domain_error("complex_quadric_chart: order must be at least 2");
  if (shift.empty()) shift.assign(m, Rat(0));
  if (static_cast<int>(shift.size()) != m)
    throw std::invalid_argument("complex_quadric_chart: shift has wrong length");

  std::vector<Jet<GaussRat>> u(m);
  Jet<GaussRat> q = Jet<GaussRat>::zero(m, order);
  for (int i = 0; i < m; ++i) {
    u[i] = Jet<GaussRat>::variable(m, order, i) +
           Jet<GaussRat>::constant(m, order, GaussRat(shift[i]));
    q += jet_mul(u[i], u[i]);
  }
  Jet<GaussRat> den = q + Jet<GaussRat>::constant(m, order, GaussRat(Rat(1)));
  Jet<GaussRat> inv = jet_inverse(den);

  ComplexQuadric out;
  out.conn = ConnectionChart<GaussRat>(m, order, default_var_names(m));
  for (int k = 0; k < m; ++k)
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        Jet<GaussRat> v = Jet<GaussRat>::zero(m, order);
        if (k == j) v -= u[i];
        if (k == i) v -= u[j];
        if (!v.is_zero()) v = jet_mul(v, inv);
        out.conn.G(k, i, j) = v;
      }

  TensorJet<GaussRat> ric = ricci(out.conn);
  if (!is_symmetric2(ric))
    throw std::logic_error("complex_quadric_chart: Ricci is not symmetric");
  if (!projective_weyl(out.conn).is_zero())
    throw std::logic_error("complex_quadric_chart: chart is not projectively flat");
  GaussRat coeff = GaussRat(frac<Rat>(1, 2 * (1 - m)));
  out.rho_c = TensorJet<GaussRat>(m, {Slot::Lo, Slot::Lo}, ric.order());
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) out.rho_c.at(i, j) = coeff * ric.at(i, j);
  return out;
}

}  // namespace phl
