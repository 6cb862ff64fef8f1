#pragma once

// Infinitesimal holonomy at the chart base point: evaluate the curvature
// endomorphisms and their iterated covariant derivatives at the origin, then
// close the span under commutators with exact fraction-free rank arithmetic.

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "phl/linalg.hpp"
#include "phl/tensor.hpp"

namespace phl {

struct GeneratorProvenance {
  int depth = 0;
  std::vector<int> deriv;  // derivative directions, outermost first
  int h = 0, j = 0;        // curvature slot pair
};

template <class F>
class EndoSet {
 public:
  explicit EndoSet(int fiber_dim)
      : fiber_dim_(fiber_dim), span_(fiber_dim * fiber_dim) {}

  int fiber_dim() const { return fiber_dim_; }
  int dim() const { return span_.dim(); }
  const std::vector<Mat<F>>& basis() const { return basis_; }
  const std::vector<GeneratorProvenance>& provenance() const { return provenance_; }

  bool contains(const Mat<F>& m) const {
    return span_.contains(clear_denominators(mat_vec(m)));
  }

  // Add m; when it enlarges the span, record it (and its provenance) as a
  // basis element and return true.
  bool add(const Mat<F>& m, const GeneratorProvenance& prov = {}) {
    if (!span_.add(clear_denominators(mat_vec(m)))) return false;
    basis_.push_back(m);
    provenance_.push_back(prov);
    return true;
  }

  // Close under commutators.  New elements inherit the provenance depth -1
  // (bracket products, not curvature values).
  void close_under_brackets() {
    size_t head = cursor_;
    while (head < basis_.size()) {
      Mat<F> b = basis_[head];  // copy: adds below may reallocate the vector
      for (size_t k = 0; k < basis_.size(); ++k) {
        if (k == head) continue;
        Mat<F> c = commutator(b, basis_[k]);
        GeneratorProvenance prov;
        prov.depth = -1;
        add(c, prov);
      }
      ++head;
    }
    cursor_ = head;
  }

 private:
  int fiber_dim_;
  std::vector<Mat<F>> basis_;
  std::vector<GeneratorProvenance> provenance_;
  SpanBasis<typename IntegerRingOf<F>::type> span_;
  size_t cursor_ = 0;  // basis elements already fully bracketed
};

template <class F>
bool verify_bracket_closed(const EndoSet<F>& s) {
  const auto& b = s.basis();
  for (size_t i = 0; i < b.size(); ++i)
    for (size_t j = i + 1; j < b.size(); ++j)
      if (!s.contains(commutator(b[i], b[j]))) return false;
  return true;
}

template <class F>
EndoSet<F> lie_closure(const std::vector<Mat<F>>& gens, int fiber_dim) {
  EndoSet<F> s(fiber_dim);
  for (const auto& g : gens) {
    s.add(g);
    s.close_under_brackets();
  }
  return s;
}

// All endomorphism values (∇^k R)(∂_h, ∂_j; ∂_{z_1}..∂_{z_k}) at the base
// point for k = 0..depth, with provenance.
template <class F>
struct CurvatureEndos {
  std::vector<Mat<F>> matrices;
  std::vector<GeneratorProvenance> provenance;
};

namespace detail {

template <class F>
void collect_depth_values(const TensorJet<F>& t, int depth, CurvatureEndos<F>& out) {
  int n = t.dim;
  std::vector<int> deriv(depth, 0);
  do {
    for (int h = 0; h < n; ++h)
      for (int j = h + 1; j < n; ++j) {
        Mat<F> m(n, n);
        bool nonzero = false;
        std::vector<int> idx = deriv;
        idx.push_back(h);
        idx.push_back(j);
        idx.push_back(0);
        idx.push_back(0);
        for (int u = 0; u < n; ++u) {
          idx[depth + 2] = u;
          for (int l = 0; l < n; ++l) {
            idx[depth + 3] = l;
            const F& v = t.at(idx).value();
            if (!is_zero(v)) nonzero = true;
            m.at(u, l) = v;
          }
        }
        if (!nonzero) continue;
        GeneratorProvenance prov;
        prov.depth = depth;
        prov.deriv = deriv;
        prov.h = h;
        prov.j = j;
        out.matrices.push_back(std::move(m));
        out.provenance.push_back(std::move(prov));
      }
  } while (!deriv.empty() && next_index(deriv, n));
}

}  // namespace detail

template <class F>
CurvatureEndos<F> curvature_endos(const ConnectionChart<F>& conn, int depth) {
  if (conn.order < depth + 1)
    throw std::domain_error("curvature_endos: jet order exhausted");
  CurvatureEndos<F> out;
  TensorJet<F> t = curvature(conn);
  detail::collect_depth_values(t, 0, out);
  for (int k = 1; k <= depth; ++k) {
    t = covariant_derivative(t, conn);
    detail::collect_depth_values(t, k, out);
  }
  return out;
}

template <class F>
struct HolonomyResult {
  EndoSet<F> algebra;
  std::vector<int> dims_by_depth;  // closure dimension after each depth
  bool stabilized = false;
  int stabilized_at = -1;  // first depth whose dimension matched the previous one
  int max_depth_used = 0;
};

// Close curvature endomorphisms depth by depth until the dimension repeats
// for two consecutive depths or the jet order runs out.  Derivative tensors
// are truncated to the order still needed for deeper evaluations, which keeps
// high-depth sweeps affordable.
template <class F>
HolonomyResult<F> infinitesimal_holonomy(const ConnectionChart<F>& conn,
                                         int max_depth = -1) {
  if (conn.order < 1) throw std::domain_error("infinitesimal_holonomy: jet order exhausted");
  int cap = conn.order - 1;
  if (max_depth >= 0 && max_depth < cap) cap = max_depth;

  HolonomyResult<F> res{EndoSet<F>(conn.dim)};
  TensorJet<F> t = curvature(conn);
  for (int k = 0; k <= cap; ++k) {
    if (k > 0) t = covariant_derivative(t, conn);
    if (t.order() > cap - k) t = t.truncated(cap - k);
    CurvatureEndos<F> vals;
    detail::collect_depth_values(t, k, vals);
    for (size_t g = 0; g < vals.matrices.size(); ++g)
      res.algebra.add(vals.matrices[g], vals.provenance[g]);
    res.algebra.close_under_brackets();
    res.dims_by_depth.push_back(res.algebra.dim());
    res.max_depth_used = k;
    if (k >= 1 && res.dims_by_depth[k] == res.dims_by_depth[k - 1]) {
      res.stabilized = true;
      res.stabilized_at = k;
      break;
    }
  }
  return res;
}

}  // namespace phl
