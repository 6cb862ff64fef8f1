#pragma once

// Truncated multivariate jets over an exact field.
//
// A Jet stores the coefficients of a polynomial truncated at a fixed total
// degree (the "order"), centered at the chart's base point; the constant term
// is the value at that point.  Jets never move their base point: catalog
// charts that need a different base point are rebuilt around it instead.
// Binary operations require both operands to carry the same variable count
// and the same order; use truncated() to adjust explicitly.

#include <stdexcept>
#include <string>
#include <vector>

#include "phl/field.hpp"
#include "phl/monomial.hpp"

namespace phl {

template <class F>
class Jet {
 public:
  Jet() = default;
  Jet(int nvars, int order)
      : tab_(&monomial_table(nvars, order)),
        ord_(order),
        c_(tab_->prefix_size(order), F(0)) {}

  static Jet zero(int nvars, int order) { return Jet(nvars, order); }
  static Jet constant(int nvars, int order, const F& v) {
    Jet j(nvars, order);
    j.c_[0] = v;
    return j;
  }
  static Jet variable(int nvars, int order, int var) {
    if (order < 1) throw std::domain_error("Jet::variable: order must be >= 1");
    if (var < 0 || var >= nvars) throw std::domain_error("Jet::variable: bad index");
    Jet j(nvars, order);
    std::vector<int> e(nvars, 0);
    e[var] = 1;
    j.c_[j.tab_->index_of(e)] = F(1);
    return j;
  }

  int nvars() const { return tab_ ? tab_->nvars() : 0; }
  int order() const { return ord_; }
  int ncoeff() const { return static_cast<int>(c_.size()); }
  const MonomialTable& table() const { return *tab_; }

  const F& coeff(int idx) const { return c_[idx]; }
  F& coeff(int idx) { return c_[idx]; }
  // Coefficient of a monomial given by its exponent vector.
  const F& coeff_of(const std::vector<int>& e) const {
    int idx = tab_->index_of(e);
    if (idx < 0 || idx >= ncoeff())
      throw std::domain_error("Jet: monomial outside retained order");
    return c_[idx];
  }

  // Value at the base point.
  const F& value() const { return c_[0]; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (!phl::is_zero(x)) return false;
    return true;
  }

  Jet truncated(int new_order) const {
    if (new_order > ord_)
      throw std::domain_error("Jet::truncated: cannot raise the order");
    if (new_order < 0) throw std::domain_error("Jet::truncated: negative order");
    Jet r(nvars(), new_order);
    for (int i = 0; i < r.ncoeff(); ++i) r.c_[i] = c_[i];
    return r;
  }

  Jet operator-() const {
    Jet r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  Jet& operator+=(const Jet& o) {
    check_shape(o);
    for (int i = 0; i < ncoeff(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  Jet& operator-=(const Jet& o) {
    check_shape(o);
    for (int i = 0; i < ncoeff(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  friend Jet operator+(Jet a, const Jet& b) { a += b; return a; }
  friend Jet operator-(Jet a, const Jet& b) { a -= b; return a; }

  Jet& operator*=(const F& s) {
    for (auto& x : c_) x *= s;
    return *this;
  }
  friend Jet operator*(Jet a, const F& s) { a *= s; return a; }
  friend Jet operator*(const F& s, Jet a) { a *= s; return a; }

  friend Jet operator*(const Jet& a, const Jet& b) { return jet_mul(a, b); }

  friend bool operator==(const Jet& a, const Jet& b) {
    a.check_shape(b);
    for (int i = 0; i < a.ncoeff(); ++i)
      if (a.c_[i] != b.c_[i]) return false;
    return true;
  }
  friend bool operator!=(const Jet& a, const Jet& b) { return !(a == b); }

  void check_shape(const Jet& o) const {
    if (!tab_ || !o.tab_) throw std::invalid_argument("Jet: uninitialized operand");
    if (nvars() != o.nvars() || ord_ != o.ord_)
      throw std::invalid_argument("Jet: operands have mismatched variables or order");
  }

 private:
  const MonomialTable* tab_ = nullptr;
  int ord_ = 0;
  std::vector<F> c_;

  template <class G>
  friend Jet<G> jet_mul(const Jet<G>& a, const Jet<G>& b);
  template <class G>
  friend Jet<G> jet_partial(const Jet<G>& a, int var);
  template <class G>
  friend Jet<G> jet_embed(const Jet<G>& a, int new_nvars,
                          const std::vector<int>& var_map, int new_order);
};

// Truncated product.  Both operands must share variables and order.
template <class F>
Jet<F> jet_mul(const Jet<F>& a, const Jet<F>& b) {
  a.check_shape(b);
  const MonomialTable& t = a.table();
  Jet<F> r(a.nvars(), a.order());
  std::vector<int> nza, nzb;
  nza.reserve(a.ncoeff());
  nzb.reserve(b.ncoeff());
  for (int i = 0; i < a.ncoeff(); ++i)
    if (!is_zero(a.c_[i])) nza.push_back(i);
  for (int j = 0; j < b.ncoeff(); ++j)
    if (!is_zero(b.c_[j])) nzb.push_back(j);
  for (int i : nza) {
    int di = t.degree(i);
    for (int j : nzb) {
      if (di + t.degree(j) > a.order()) continue;
      int k = t.product(i, j);
      r.c_[k] += a.c_[i] * b.c_[j];
    }
  }
  return r;
}

// Partial derivative; the result has order one lower.
template <class F>
Jet<F> jet_partial(const Jet<F>& a, int var) {
  if (a.order() < 1)
    throw std::domain_error("jet_partial: jet order exhausted");
  if (var < 0 || var >= a.nvars())
    throw std::domain_error("jet_partial: bad variable index");
  const MonomialTable& t = a.table();
  Jet<F> r(a.nvars(), a.order() - 1);
  for (int i = 0; i < a.ncoeff(); ++i) {
    if (is_zero(a.c_[i])) continue;
    int e = t.exponents(i)[var];
    if (e == 0) continue;
    int j = t.shift_down(i, var);
    // Graded ordering makes low-degree indices table independent, so j is a
    // valid index of the lower-order table.
    r.c_[j] += a.c_[i] * F(static_cast<long>(e));
  }
  return r;
}

// Multiplicative inverse of a jet with invertible constant term.
template <class F>
Jet<F> jet_inverse(const Jet<F>& a) {
  if (is_zero(a.value()))
    throw std::domain_error("jet_inverse: constant term is zero");
  F u = a.value().inverse();
  // 1/a = u * (1 - z + z^2 - ...) with z = (a - a(0)) * u.
  Jet<F> negz = (Jet<F>::constant(a.nvars(), a.order(), a.value()) - a) * u;
  Jet<F> r = Jet<F>::constant(a.nvars(), a.order(), u);
  Jet<F> t = r;
  for (int k = 1; k <= a.order(); ++k) {
    t = jet_mul(t, negz);
    r += t;
  }
  return r;
}

// Re-index a jet into a larger variable set.  var_map[v] gives the new index
// of old variable v.  new_order must not exceed a.order().
template <class F>
Jet<F> jet_embed(const Jet<F>& a, int new_nvars, const std::vector<int>& var_map,
                 int new_order) {
  if (static_cast<int>(var_map.size()) != a.nvars())
    throw std::invalid_argument("jet_embed: var_map size mismatch");
  if (new_order > a.order())
    throw std::domain_error("jet_embed: cannot raise the order");
  Jet<F> r(new_nvars, new_order);
  const MonomialTable& t = a.table();
  std::vector<int> e(new_nvars, 0);
  for (int i = 0; i < a.ncoeff(); ++i) {
    if (is_zero(a.coeff(i))) continue;
    if (t.degree(i) > new_order) continue;
    std::fill(e.begin(), e.end(), 0);
    const auto& old_e = t.exponents(i);
    for (int v = 0; v < a.nvars(); ++v) e[var_map[v]] = old_e[v];
    r.coeff(r.table().index_of(e)) += a.coeff(i);
  }
  return r;
}

// Deterministic rendering, terms in graded table order.
template <class F>
std::string jet_to_string(const Jet<F>& a, const std::vector<std::string>& vars) {
  if (static_cast<int>(vars.size()) != a.nvars())
    throw std::invalid_argument("jet_to_string: variable name count mismatch");
  std::string out;
  const MonomialTable& t = a.table();
  for (int i = 0; i < a.ncoeff(); ++i) {
    if (is_zero(a.coeff(i))) continue;
    std::string c = to_string(a.coeff(i));
    bool composite = c.find_first_of("+-", 1) != std::string::npos;
    std::string mono;
    for (int v = 0; v < a.nvars(); ++v) {
      int e = t.exponents(i)[v];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars[v];
      if (e > 1) mono += "^" + std::to_string(e);
    }
    std::string term;
    if (mono.empty()) {
      term = composite ? "(" + c + ")" : c;
    } else if (c == "1") {
      term = mono;
    } else if (c == "-1") {
      term = "-" + mono;
    } else {
      term = (composite ? "(" + c + ")" : c) + "*" + mono;
    }
    if (out.empty()) {
      out = term;
    } else if (!term.empty() && term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace phl
