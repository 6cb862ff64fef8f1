#pragma once

// Small dense exact linear algebra: Gauss-Jordan over a field, nullspaces,
// fraction-free integer elimination for rank and span maintenance, Bareiss
// rank as an independent cross-check, and exact signatures of rational
// symmetric forms via congruence diagonalization.

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "phl/field.hpp"
#include "phl/jet.hpp"

namespace phl {

template <class T>
struct Mat {
  int rows = 0, cols = 0;
  std::vector<T> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, T(0)) {}
  Mat(int r, int c, const T& fill)
      : rows(r), cols(c), a(static_cast<size_t>(r) * c, fill) {}

  T& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const T& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = T(1);
    return m;
  }

  Mat transposed() const {
    Mat m(cols, rows);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m.at(j, i) = at(i, j);
    return m;
  }

  friend Mat operator+(const Mat& x, const Mat& y) {
    Mat r(x.rows, x.cols);
    for (size_t k = 0; k < x.a.size(); ++k) r.a[k] = x.a[k] + y.a[k];
    return r;
  }
  friend Mat operator-(const Mat& x, const Mat& y) {
    Mat r(x.rows, x.cols);
    for (size_t k = 0; k < x.a.size(); ++k) r.a[k] = x.a[k] - y.a[k];
    return r;
  }
  friend Mat operator*(const Mat& x, const Mat& y) {
    if (x.cols != y.rows) throw std::invalid_argument("Mat: size mismatch");
    Mat r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
      for (int k = 0; k < x.cols; ++k) {
        if (is_zero(x.at(i, k))) continue;
        for (int j = 0; j < y.cols; ++j) r.at(i, j) += x.at(i, k) * y.at(k, j);
      }
    return r;
  }
  friend Mat operator*(const T& s, Mat m) {
    for (auto& v : m.a) v = s * v;
    return m;
  }
  friend bool operator==(const Mat& x, const Mat& y) {
    if (x.rows != y.rows || x.cols != y.cols) return false;
    for (size_t k = 0; k < x.a.size(); ++k)
      if (x.a[k] != y.a[k]) return false;
    return true;
  }

  bool is_zero_matrix() const {
    for (const auto& v : a)
      if (!is_zero(v)) return false;
    return true;
  }
};

template <class T>
T mat_trace(const Mat<T>& m) {
  T t(0);
  for (int i = 0; i < m.rows; ++i) t += m.at(i, i);
  return t;
}

template <class T>
Mat<T> commutator(const Mat<T>& x, const Mat<T>& y) {
  return x * y - y * x;
}

template <class T>
std::vector<T> mat_vec(const Mat<T>& m) {
  return m.a;
}

template <class T>
Mat<T> vec_mat(const std::vector<T>& v, int n) {
  Mat<T> m(n, n);
  m.a = v;
  return m;
}

// ---------------------------------------------------------------------------
// Field elimination.

// Reduced row echelon form in place; returns pivot column per row.
template <class F>
std::vector<int> rref(Mat<F>& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int p = -1;
    for (int i = r; i < m.rows; ++i)
      if (!is_zero(m.at(i, c))) { p = i; break; }
    if (p < 0) continue;
    for (int j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(r, j));
    F inv = m.at(r, c).inverse();
    for (int j = c; j < m.cols; ++j) m.at(r, j) *= inv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || is_zero(m.at(i, c))) continue;
      F f = m.at(i, c);
      for (int j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class F>
int rank_field(Mat<F> m) {
  return static_cast<int>(rref(m).size());
}

// Basis of the right nullspace {x : m x = 0}.
template <class F>
std::vector<std::vector<F>> nullspace(Mat<F> m) {
  std::vector<int> pivots = rref(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<F>> basis;
  for (int c = 0; c < m.cols; ++c) {
    if (is_pivot[c]) continue;
    std::vector<F> v(m.cols, F(0));
    v[c] = F(1);
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(static_cast<int>(r), c);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class F>
std::optional<Mat<F>> inverse_field(const Mat<F>& m) {
  if (m.rows != m.cols) throw std::invalid_argument("inverse_field: not square");
  int n = m.rows;
  Mat<F> w(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) w.at(i, j) = m.at(i, j);
    w.at(i, n + i) = F(1);
  }
  auto piv = rref(w);
  if (static_cast<int>(piv.size()) != n || piv[n - 1] != n - 1) return std::nullopt;
  Mat<F> r(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r.at(i, j) = w.at(i, n + j);
  return r;
}

// Inverse of a square matrix of jets; pivots need an invertible constant
// term, which exists for every elimination step iff the constant-term matrix
// is invertible.
template <class F>
std::optional<Mat<Jet<F>>> inverse_jet_matrix(const Mat<Jet<F>>& m) {
  if (m.rows != m.cols) throw std::invalid_argument("inverse_jet_matrix: not square");
  int n = m.rows;
  int nv = m.at(0, 0).nvars();
  int ord = m.at(0, 0).order();
  Mat<Jet<F>> w(n, 2 * n, Jet<F>::zero(nv, ord));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) w.at(i, j) = m.at(i, j);
    w.at(i, n + i) = Jet<F>::constant(nv, ord, F(1));
  }
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (!is_zero(w.at(i, c).value())) { p = i; break; }
    if (p < 0) return std::nullopt;
    for (int j = 0; j < 2 * n; ++j) std::swap(w.at(p, j), w.at(c, j));
    Jet<F> inv = jet_inverse(w.at(c, c));
    for (int j = 0; j < 2 * n; ++j) w.at(c, j) = jet_mul(w.at(c, j), inv);
    for (int i = 0; i < n; ++i) {
      if (i == c || w.at(i, c).is_zero()) continue;
      Jet<F> f = w.at(i, c);
      for (int j = 0; j < 2 * n; ++j) w.at(i, j) -= jet_mul(f, w.at(c, j));
    }
  }
  Mat<Jet<F>> r(n, n, Jet<F>::zero(nv, ord));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r.at(i, j) = w.at(i, n + j);
  return r;
}

// ---------------------------------------------------------------------------
// Fraction-free integer elimination.

// Gaussian integer, used so that Q(i) spans can run the same fraction-free
// scheme as Q spans.
struct Zi {
  mpz_class re, im;
  Zi() : re(0), im(0) {}
  Zi(long n) : re(n), im(0) {}
  Zi(mpz_class r, mpz_class i) : re(std::move(r)), im(std::move(i)) {}
  bool is_zero() const { return re == 0 && im == 0; }
  friend Zi operator*(const Zi& a, const Zi& b) {
    return Zi(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  friend Zi operator-(const Zi& a, const Zi& b) {
    return Zi(a.re - b.re, a.im - b.im);
  }
};
inline bool is_zero(const Zi& z) { return z.is_zero(); }
inline bool is_zero(const mpz_class& z) { return z == 0; }

inline void content_accumulate(mpz_class& g, const mpz_class& v) {
  if (v != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), mpz_class(abs(v)).get_mpz_t());
}
inline void content_accumulate(mpz_class& g, const Zi& v) {
  content_accumulate(g, v.re);
  content_accumulate(g, v.im);
}
inline void divide_exact(mpz_class& v, const mpz_class& g) {
  mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}
inline void divide_exact(Zi& v, const mpz_class& g) {
  divide_exact(v.re, g);
  divide_exact(v.im, g);
}

// Divide a row by the gcd of its integer content (keeps entries small while
// staying exact).
template <class R>
void content_normalize(std::vector<R>& row) {
  mpz_class g = 0;
  for (const auto& v : row) content_accumulate(g, v);
  if (g == 0 || g == 1) return;
  for (auto& v : row) divide_exact(v, g);
}

inline std::vector<mpz_class> clear_denominators(const std::vector<Rat>& v) {
  mpz_class l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.den().get_mpz_t());
  std::vector<mpz_class> r(v.size());
  for (size_t k = 0; k < v.size(); ++k) r[k] = v[k].num() * (l / v[k].den());
  return r;
}
inline std::vector<Zi> clear_denominators(const std::vector<GaussRat>& v) {
  mpz_class l = 1;
  for (const auto& x : v) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.re.den().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.im.den().get_mpz_t());
  }
  std::vector<Zi> r(v.size());
  for (size_t k = 0; k < v.size(); ++k)
    r[k] = Zi(v[k].re.num() * (l / v[k].re.den()), v[k].im.num() * (l / v[k].im.den()));
  return r;
}

template <class F>
struct IntegerRingOf;
template <>
struct IntegerRingOf<Rat> {
  using type = mpz_class;
};
template <>
struct IntegerRingOf<GaussRat> {
  using type = Zi;
};

// Incrementally maintained echelon span over the ring R (fraction-free:
// reduction uses cross multiplication followed by content removal).
template <class R>
class SpanBasis {
 public:
  explicit SpanBasis(int ncols) : ncols_(ncols) {}

  int dim() const { return static_cast<int>(rows_.size()); }
  int ncols() const { return ncols_; }

  // Reduce v against the current rows; afterwards v is zero iff it was in
  // the span.
  void reduce(std::vector<R>& v) const {
    for (size_t r = 0; r < rows_.size(); ++r) {
      int p = pivots_[r];
      if (is_zero(v[p])) continue;
      R f = v[p];
      const R& piv = rows_[r][p];
      for (int c = 0; c < ncols_; ++c) v[c] = piv * v[c] - f * rows_[r][c];
      content_normalize(v);
    }
  }

  bool contains(std::vector<R> v) const {
    reduce(v);
    for (const auto& x : v)
      if (!is_zero(x)) return false;
    return true;
  }

  // Returns true when v enlarges the span.
  bool add(std::vector<R> v) {
    if (static_cast<int>(v.size()) != ncols_)
      throw std::invalid_argument("SpanBasis: column count mismatch");
    content_normalize(v);
    reduce(v);
    int p = -1;
    for (int c = 0; c < ncols_; ++c)
      if (!is_zero(v[c])) { p = c; break; }
    if (p < 0) return false;
    size_t at = 0;
    while (at < rows_.size() && pivots_[at] < p) ++at;
    rows_.insert(rows_.begin() + at, std::move(v));
    pivots_.insert(pivots_.begin() + at, p);
    return true;
  }

 private:
  int ncols_;
  std::vector<std::vector<R>> rows_;
  std::vector<int> pivots_;
};

// Rank by Bareiss fraction-free elimination; independent of the field path.
inline int rank_bareiss(Mat<mpz_class> m) {
  int r = 0;
  mpz_class prev = 1;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int p = -1;
    for (int i = r; i < m.rows; ++i)
      if (m.at(i, c) != 0) { p = i; break; }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(r, j));
    for (int i = r + 1; i < m.rows; ++i) {
      for (int j = c + 1; j < m.cols; ++j) {
        mpz_class t = m.at(r, c) * m.at(i, j) - m.at(i, c) * m.at(r, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m.at(i, j) = t;
      }
      m.at(i, c) = 0;
    }
    prev = m.at(r, c);
    ++r;
  }
  return r;
}

inline Mat<mpz_class> integer_matrix(const Mat<Rat>& m) {
  Mat<mpz_class> r(m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i) {
    std::vector<Rat> row(m.cols);
    for (int j = 0; j < m.cols; ++j) row[j] = m.at(i, j);
    auto cleared = clear_denominators(row);
    for (int j = 0; j < m.cols; ++j) r.at(i, j) = cleared[j];
  }
  return r;
}

// ---------------------------------------------------------------------------
// Exact signature of a nondegenerate rational symmetric form, by congruence
// diagonalization.  Throws on degenerate input.
inline std::pair<int, int> signature_exact(Mat<Rat> s) {
  if (s.rows != s.cols) throw std::invalid_argument("signature_exact: not square");
  int n = s.rows;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j)
      if (s.at(i, j) != s.at(j, i))
        throw std::invalid_argument("signature_exact: form is not symmetric");
  std::vector<bool> done(n, false);
  int pos = 0, neg = 0;
  for (int step = 0; step < n; ++step) {
    int k = -1;
    for (int i = 0; i < n; ++i)
      if (!done[i] && !s.at(i, i).is_zero()) { k = i; break; }
    if (k < 0) {
      // No diagonal pivot; manufacture one from a nonzero off-diagonal pair.
      int a = -1, b = -1;
      for (int i = 0; i < n && a < 0; ++i) {
        if (done[i]) continue;
        for (int j = 0; j < n; ++j) {
          if (done[j] || j == i) continue;
          if (!s.at(i, j).is_zero()) { a = i; b = j; break; }
        }
      }
      if (a < 0) throw std::domain_error("signature_exact: degenerate form");
      // Congruence by e_a -> e_a + e_b gives diagonal entry 2*s(a,b).
      for (int j = 0; j < n; ++j) s.at(a, j) += s.at(b, j);
      for (int i = 0; i < n; ++i) s.at(i, a) += s.at(i, b);
      k = a;
    }
    Rat d = s.at(k, k);
    if (d.sign() > 0) ++pos; else ++neg;
    for (int i = 0; i < n; ++i) {
      if (i == k || done[i] || s.at(i, k).is_zero()) continue;
      Rat f = s.at(i, k) / d;
      for (int j = 0; j < n; ++j) s.at(i, j) -= f * s.at(k, j);
      for (int j = 0; j < n; ++j) s.at(j, i) -= f * s.at(j, k);
    }
    done[k] = true;
  }
  return {pos, neg};
}

inline bool is_nondegenerate(const Mat<Rat>& s) {
  return rank_field(s) == s.rows;
}

}  // namespace phl
