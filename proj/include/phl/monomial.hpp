#pragma once

// Dense monomial bookkeeping for truncated multivariate polynomials.
//
// A table enumerates all monomials in `nvars` variables of total degree at
// most `order`, sorted by total degree (and deterministically within each
// degree).  Because the ordering is graded, the monomials of degree <= k form
// a prefix of the table for every k <= order, so truncating a jet is a prefix
// copy and no index remapping is ever needed between a table and the tables
// of lower order.

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace phl {

class MonomialTable {
 public:
  static constexpr int kMaxVars = 8;
  // Above this many monomials the dense size*size product table would get
  // large; fall back to hash lookups instead.
  static constexpr int kProductTableLimit = 1600;

  MonomialTable(int nvars, int order) : nvars_(nvars), order_(order) {
    if (nvars < 1 || nvars > kMaxVars)
      throw std::domain_error("MonomialTable: nvars must be in [1,8]");
    if (order < 0 || order > 60)
      throw std::domain_error("MonomialTable: order must be in [0,60]");
    std::vector<int> e(nvars, 0);
    first_of_degree_.assign(order + 2, 0);
    for (int d = 0; d <= order; ++d) {
      first_of_degree_[d] = static_cast<int>(expo_.size());
      emit(e, 0, d);
    }
    first_of_degree_[order + 1] = static_cast<int>(expo_.size());
    size_ = static_cast<int>(expo_.size());
    index_.reserve(size_ * 2);
    deg_.resize(size_);
    for (int i = 0; i < size_; ++i) {
      index_[key(expo_[i])] = i;
      int d = 0;
      for (int v = 0; v < nvars_; ++v) d += expo_[i][v];
      deg_[i] = d;
    }
    dvar_.assign(static_cast<size_t>(size_) * nvars_, -1);
    for (int i = 0; i < size_; ++i) {
      for (int v = 0; v < nvars_; ++v) {
        if (expo_[i][v] > 0) {
          auto e2 = expo_[i];
          e2[v] -= 1;
          dvar_[static_cast<size_t>(i) * nvars_ + v] = index_.at(key(e2));
        }
      }
    }
    if (size_ <= kProductTableLimit) {
      prod_.assign(static_cast<size_t>(size_) * size_, -1);
      for (int i = 0; i < size_; ++i) {
        for (int j = 0; j < size_; ++j) {
          if (deg_[i] + deg_[j] > order_) continue;
          auto e2 = expo_[i];
          for (int v = 0; v < nvars_; ++v) e2[v] += expo_[j][v];
          prod_[static_cast<size_t>(i) * size_ + j] = index_.at(key(e2));
        }
      }
    }
  }

  int nvars() const { return nvars_; }
  int order() const { return order_; }
  int size() const { return size_; }
  // Number of monomials of degree <= ord.
  int prefix_size(int ord) const {
    if (ord < 0) return 0;
    if (ord > order_) throw std::domain_error("MonomialTable: order overflow");
    return first_of_degree_[ord + 1];
  }
  int degree(int idx) const { return deg_[idx]; }
  const std::vector<int>& exponents(int idx) const { return expo_[idx]; }

  // Index of the product monomial, or -1 when it exceeds the table order.
  int product(int i, int j) const {
    if (deg_[i] + deg_[j] > order_) return -1;
    if (!prod_.empty()) return prod_[static_cast<size_t>(i) * size_ + j];
    auto e2 = expo_[i];
    for (int v = 0; v < nvars_; ++v) e2[v] += expo_[j][v];
    return index_.at(key(e2));
  }

  // Index of expo(idx) - e_v, or -1 when the exponent of v is zero.
  int shift_down(int idx, int v) const {
    return dvar_[static_cast<size_t>(idx) * nvars_ + v];
  }

  int index_of(const std::vector<int>& e) const {
    auto it = index_.find(key(e));
    return it == index_.end() ? -1 : it->second;
  }

 private:
  void emit(std::vector<int>& e, int pos, int remaining) {
    if (pos == nvars_ - 1) {
      e[pos] = remaining;
      expo_.push_back(e);
      return;
    }
    for (int k = remaining; k >= 0; --k) {
      e[pos] = k;
      emit(e, pos + 1, remaining - k);
    }
    e[pos] = 0;
  }

  uint64_t key(const std::vector<int>& e) const {
    uint64_t k = 0;
    for (int v = 0; v < nvars_; ++v) k = (k << 8) | static_cast<uint64_t>(e[v]);
    return k;
  }

  int nvars_, order_, size_ = 0;
  std::vector<std::vector<int>> expo_;
  std::vector<int> deg_;
  std::vector<int> first_of_degree_;
  std::unordered_map<uint64_t, int> index_;
  std::vector<int32_t> dvar_;
  std::vector<int32_t> prod_;
};

// Process-wide table cache.  Tables are immutable once built.
inline const MonomialTable& monomial_table(int nvars, int order) {
  static std::map<std::pair<int, int>, std::unique_ptr<MonomialTable>> cache;
  auto k = std::make_pair(nvars, order);
  auto it = cache.find(k);
  if (it == cache.end())
    it = cache.emplace(k, std::make_unique<MonomialTable>(nvars, order)).first;
  return *it->second;
}

}  // namespace phl
