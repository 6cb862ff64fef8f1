#pragma once

// Evidence-based identification of a bracket-closed matrix algebra: exact
// invariant bilinear forms, exact commutant (with rational complex or
// quaternionic structures when they exist), trace conditions, and a decision
// tree over dimensions.  Every emitted label is re-verified against its
// defining invariants before being returned.

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "phl/holonomy.hpp"
#include "phl/linalg.hpp"

namespace phl {

struct ClassificationReport {
  int fiber_dim = 0;
  int dimension = 0;
  bool trace_free = false;
  std::vector<Mat<Rat>> sym_forms;      // basis of invariant symmetric forms
  std::vector<Mat<Rat>> antisym_forms;  // basis of invariant antisymmetric forms
  std::optional<std::pair<int, int>> signature;  // of the representative used
  int commutant_dim = 0;
  std::string commutant_type;  // "R", "C", "H" or "other"
  std::vector<Mat<Rat>> complex_structures;  // J candidates found in the commutant
  std::string label = "unrecognized";
  std::vector<std::string> evidence;
};

namespace detail {

inline std::vector<Mat<Rat>> sym_basis_matrices(int n) {
  std::vector<Mat<Rat>> r;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Mat<Rat> m(n, n);
      m.at(i, j) = Rat(1);
      m.at(j, i) = Rat(1);
      r.push_back(std::move(m));
    }
  return r;
}

inline std::vector<Mat<Rat>> antisym_basis_matrices(int n) {
  std::vector<Mat<Rat>> r;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Mat<Rat> m(n, n);
      m.at(i, j) = Rat(1);
      m.at(j, i) = Rat(-1);
      r.push_back(std::move(m));
    }
  return r;
}

// Nullspace of the linear map S ↦ (rows of conditions), with S ranging over
// span(cand).  Conditions: for each A in algebra, cond(A, S) must vanish.
template <class Cond>
std::vector<Mat<Rat>> solve_in_span(const std::vector<Mat<Rat>>& cand,
                                    const std::vector<Mat<Rat>>& algebra, int n,
                                    Cond cond) {
  if (cand.empty()) return {};
  int cols = static_cast<int>(cand.size());
  int block = n * n;
  Mat<Rat> sys(static_cast<int>(algebra.size()) * block, cols);
  for (size_t a = 0; a < algebra.size(); ++a)
    for (int c = 0; c < cols; ++c) {
      Mat<Rat> v = cond(algebra[a], cand[c]);
      for (int e = 0; e < block; ++e) sys.at(static_cast<int>(a) * block + e, c) = v.a[e];
    }
  std::vector<Mat<Rat>> out;
  for (const auto& coeffs : nullspace(sys)) {
    Mat<Rat> s(n, n);
    for (int c = 0; c < cols; ++c)
      for (int e = 0; e < n * n; ++e) s.a[e] += coeffs[c] * cand[c].a[e];
    out.push_back(std::move(s));
  }
  return out;
}

inline Mat<Rat> invariance_defect(const Mat<Rat>& a, const Mat<Rat>& s) {
  return a.transposed() * s + s * a;
}

// Does every algebra element satisfy AᵀS + SA = 0?
inline bool is_invariant_form(const Mat<Rat>& s, const std::vector<Mat<Rat>>& algebra) {
  for (const auto& a : algebra)
    if (!invariance_defect(a, s).is_zero_matrix()) return false;
  return true;
}

// Search span(space) for a nondegenerate representative using small integer
// coefficient combinations.
inline std::optional<Mat<Rat>> nondegenerate_rep(const std::vector<Mat<Rat>>& space) {
  if (space.empty()) return std::nullopt;
  int k = static_cast<int>(space.size());
  std::vector<int> coeff(k, 0);
  // Iterate coefficients in {0,1,2}^k, skipping the zero vector.
  long total = 1;
  for (int i = 0; i < k && total <= 2187; ++i) total *= 3;
  for (long it = 1; it < total; ++it) {
    long v = it;
    for (int i = 0; i < k; ++i) {
      coeff[i] = static_cast<int>(v % 3);
      v /= 3;
    }
    Mat<Rat> s(space[0].rows, space[0].cols);
    for (int i = 0; i < k; ++i)
      if (coeff[i] != 0)
        for (size_t e = 0; e < s.a.size(); ++e) s.a[e] += Rat(coeff[i]) * space[i].a[e];
    if (rank_field(s) == s.rows) return s;
  }
  return std::nullopt;
}

// If d² is an exact negative rational square times the identity, return the
// normalized J = d/r with J² = −Id.
inline std::optional<Mat<Rat>> normalize_complex_structure(const Mat<Rat>& d) {
  int n = d.rows;
  Mat<Rat> d2 = d * d;
  Rat gamma = d2.at(0, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (d2.at(i, j) != ((i == j) ? gamma : Rat(0))) return std::nullopt;
  if (!(gamma.sign() < 0)) return std::nullopt;
  Rat m = -gamma;
  mpz_class rn, rd;
  if (mpz_perfect_square_p(m.num().get_mpz_t()) == 0) return std::nullopt;
  if (mpz_perfect_square_p(m.den().get_mpz_t()) == 0) return std::nullopt;
  mpz_sqrt(rn.get_mpz_t(), m.num().get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), m.den().get_mpz_t());
  Rat r(rn, rd);
  Rat inv = Rat(1) / r;
  Mat<Rat> j = inv * d;
  return j;
}

inline Mat<Rat> traceless_part(const Mat<Rat>& m) {
  Mat<Rat> r = m;
  Rat t = mat_trace(m) / Rat(m.rows);
  for (int i = 0; i < m.rows; ++i) r.at(i, i) -= t;
  return r;
}

inline Rat trace_pairing(const Mat<Rat>& x, const Mat<Rat>& y) {
  return mat_trace(x * y);
}

}  // namespace detail

// Exact solution space of AᵀS + SA = 0 over all basis elements A, split into
// symmetric and antisymmetric parts.
inline std::pair<std::vector<Mat<Rat>>, std::vector<Mat<Rat>>> invariant_bilinear_forms(
    const std::vector<Mat<Rat>>& algebra, int n) {
  auto cond = [](const Mat<Rat>& a, const Mat<Rat>& s) {
    return detail::invariance_defect(a, s);
  };
  if (algebra.empty())
    return {detail::sym_basis_matrices(n), detail::antisym_basis_matrices(n)};
  return {detail::solve_in_span(detail::sym_basis_matrices(n), algebra, n, cond),
          detail::solve_in_span(detail::antisym_basis_matrices(n), algebra, n, cond)};
}

// Exact solution space of [C, A] = 0 for all basis elements A.
inline std::vector<Mat<Rat>> commutant(const std::vector<Mat<Rat>>& algebra, int n) {
  std::vector<Mat<Rat>> cand;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Mat<Rat> m(n, n);
      m.at(i, j) = Rat(1);
      cand.push_back(std::move(m));
    }
  if (algebra.empty()) return cand;
  return detail::solve_in_span(cand, algebra, n,
                               [](const Mat<Rat>& a, const Mat<Rat>& c) {
                                 return commutator(c, a);
                               });
}

// Exact inertia of a nondegenerate symmetric rational form.
inline std::pair<int, int> signature(const Mat<Rat>& form) { return signature_exact(form); }

inline ClassificationReport classify(const std::vector<Mat<Rat>>& algebra, int n) {
  ClassificationReport rep;
  rep.fiber_dim = n;
  rep.dimension = static_cast<int>(algebra.size());
  rep.trace_free = true;
  for (const auto& a : algebra)
    if (!mat_trace(a).is_zero()) rep.trace_free = false;

  auto forms = invariant_bilinear_forms(algebra, n);
  rep.sym_forms = forms.first;
  rep.antisym_forms = forms.second;
  std::vector<Mat<Rat>> comm = commutant(algebra, n);
  rep.commutant_dim = static_cast<int>(comm.size());
  rep.evidence.push_back("dimension " + std::to_string(rep.dimension) + " on fiber " +
                         std::to_string(n));
  rep.evidence.push_back("invariant forms: sym " + std::to_string(rep.sym_forms.size()) +
                         ", antisym " + std::to_string(rep.antisym_forms.size()));
  rep.evidence.push_back("commutant dimension " + std::to_string(rep.commutant_dim));

  if (rep.dimension == 0) {
    rep.label = "trivial";
    rep.commutant_type = "other";
    return rep;
  }

  // Commutant structure: scalars only, a complex line, or quaternions.
  std::vector<Mat<Rat>> structures;  // normalized anticommuting J candidates
  rep.commutant_type = "other";
  if (rep.commutant_dim == 1) {
    rep.commutant_type = "R";
  } else if (rep.commutant_dim == 2) {
    for (const auto& c : comm) {
      Mat<Rat> d = detail::traceless_part(c);
      if (d.is_zero_matrix()) continue;
      auto j = detail::normalize_complex_structure(d);
      if (j) {
        structures.push_back(*j);
        rep.commutant_type = "C";
      }
      break;
    }
  } else if (rep.commutant_dim == 4) {
    // Orthogonalize the traceless parts against the trace form; a genuine
    // quaternionic commutant yields anticommuting complex structures.
    std::vector<Mat<Rat>> ds;
    SpanBasis<mpz_class> seen(n * n);
    for (const auto& c : comm) {
      Mat<Rat> d = detail::traceless_part(c);
      if (d.is_zero_matrix()) continue;
      if (!seen.add(clear_denominators(mat_vec(d)))) continue;
      for (const auto& prev : ds) {
        Rat num = detail::trace_pairing(prev, d);
        Rat den = detail::trace_pairing(prev, prev);
        if (!den.is_zero()) {
          Rat f = num / den;
          for (size_t e = 0; e < d.a.size(); ++e) d.a[e] -= f * prev.a[e];
        }
      }
      if (!d.is_zero_matrix()) ds.push_back(d);
    }
    if (ds.size() == 3) {
      bool ok = true;
      std::vector<Mat<Rat>> js;
      for (const auto& d : ds) {
        auto j = detail::normalize_complex_structure(d);
        if (!j) { ok = false; break; }
        js.push_back(*j);
      }
      if (ok) {
        Mat<Rat> anti = js[0] * js[1] + js[1] * js[0];
        if (anti.is_zero_matrix()) {
          rep.commutant_type = "H";
          structures = js;
        }
      }
    }
  }
  rep.complex_structures = structures;

  // Soundness helper: a label is only emitted when `check` holds on the
  // actual basis.
  auto commutes_with_all = [&](const Mat<Rat>& j) {
    for (const auto& a : algebra)
      if (!commutator(j, a).is_zero_matrix()) return false;
    return true;
  };

  if (rep.commutant_type == "H" && n % 4 == 0) {
    int m = n / 4;
    bool sound = structures.size() == 3;
    for (const auto& j : structures)
      if (!commutes_with_all(j)) sound = false;
    auto s = detail::nondegenerate_rep(rep.sym_forms);
    if (sound && s && rep.dimension == m * (2 * m + 1) &&
        detail::is_invariant_form(*s, algebra)) {
      auto sig = signature_exact(*s);
      if (sig.first % 4 == 0 && sig.second % 4 == 0) {
        int p = sig.first / 4, q = sig.second / 4;
        if (p < q) std::swap(p, q);
        rep.signature = {p, q};
        rep.label = "sp(" + std::to_string(p) + "," + std::to_string(q) + ")";
        rep.evidence.push_back("quaternionic commutant with invariant metric");
        return rep;
      }
    }
  }

  if (rep.commutant_type == "C" && !structures.empty() && n % 2 == 0) {
    const Mat<Rat>& j = structures[0];
    int m = n / 2;
    if (commutes_with_all(j)) {
      bool ctracefree = true;
      for (const auto& a : algebra)
        if (!mat_trace(a).is_zero() || !mat_trace(j * a).is_zero()) ctracefree = false;
      // Real forms that are complex-bilinear: JᵀS = SJ.
      auto cbilinear = [&](const std::vector<Mat<Rat>>& space) {
        std::vector<Mat<Rat>> out;
        if (!space.empty()) {
          std::vector<Mat<Rat>> probe = {j};
          out = detail::solve_in_span(space, probe, n,
                                      [](const Mat<Rat>& jj, const Mat<Rat>& s) {
                                        return jj.transposed() * s - s * jj;
                                      });
        }
        return out;
      };
      std::vector<Mat<Rat>> csym = cbilinear(rep.sym_forms);
      std::vector<Mat<Rat>> canti = cbilinear(rep.antisym_forms);
      rep.evidence.push_back("complex-bilinear forms: sym " + std::to_string(csym.size()) +
                             ", antisym " + std::to_string(canti.size()));

      if (ctracefree && rep.dimension == 2 * (m * m - 1) && rep.sym_forms.empty() &&
          rep.antisym_forms.empty()) {
        rep.label = "sl(" + std::to_string(m) + ",C)";
        return rep;
      }
      if (ctracefree && rep.dimension == m * (m - 1)) {
        auto s = detail::nondegenerate_rep(csym);
        if (s && detail::is_invariant_form(*s, algebra)) {
          rep.label = "so(" + std::to_string(m) + ",C)";
          return rep;
        }
      }
      if (ctracefree && rep.dimension == m * (m + 1) && m % 2 == 0) {
        auto s = detail::nondegenerate_rep(canti);
        if (s && detail::is_invariant_form(*s, algebra)) {
          rep.label = "sp(" + std::to_string(m) + ",C)";
          return rep;
        }
      }
      if (ctracefree && rep.dimension == m * m - 1) {
        // Hermitian case: invariant symmetric form with JᵀSJ = S.
        std::vector<Mat<Rat>> probe = {j};
        auto herm = detail::solve_in_span(rep.sym_forms, probe, n,
                                          [](const Mat<Rat>& jj, const Mat<Rat>& s) {
                                            return jj.transposed() * s * jj - s;
                                          });
        auto srep = detail::nondegenerate_rep(herm);
        if (srep && detail::is_invariant_form(*srep, algebra)) {
          auto sig = signature_exact(*srep);
          if (sig.first % 2 == 0 && sig.second % 2 == 0) {
            int p = sig.first / 2, q = sig.second / 2;
            if (p < q) std::swap(p, q);
            rep.signature = {p, q};
            rep.label = "su(" + std::to_string(p) + "," + std::to_string(q) + ")";
            return rep;
          }
        }
      }
    }
  }

  if (rep.commutant_type == "R") {
    if (rep.sym_forms.size() == 1 && rep.antisym_forms.empty() &&
        rep.dimension == n * (n - 1) / 2) {
      Mat<Rat> s = rep.sym_forms[0];
      if (rank_field(s) == n && detail::is_invariant_form(s, algebra)) {
        auto sig = signature_exact(s);
        if (sig.first < sig.second) {
          sig = {sig.second, sig.first};
          rep.evidence.push_back("representative negated to put the larger inertia first");
        }
        rep.signature = sig;
        rep.label = "so(" + std::to_string(sig.first) + "," + std::to_string(sig.second) + ")";
        return rep;
      }
    }
    if (rep.antisym_forms.size() == 1 && rep.sym_forms.empty() && n % 2 == 0 &&
        rep.dimension == n * (n + 1) / 2) {
      const Mat<Rat>& s = rep.antisym_forms[0];
      if (rank_field(s) == n && detail::is_invariant_form(s, algebra)) {
        rep.label = "sp(" + std::to_string(n) + ",R)";
        return rep;
      }
    }
    if (rep.sym_forms.empty() && rep.antisym_forms.empty() && rep.trace_free &&
        rep.dimension == n * n - 1) {
      rep.label = "sl(" + std::to_string(n) + ",R)";
      return rep;
    }
  }

  rep.label = "unrecognized";
  return rep;
}

inline ClassificationReport classify(const EndoSet<Rat>& algebra) {
  return classify(algebra.basis(), algebra.fiber_dim());
}

}  // namespace phl
