#pragma once

#include <string>
#include <vector>

#include "phl/catalog.hpp"
#include "phl/classify.hpp"
#include "phl/cone.hpp"
#include "phl/field.hpp"
#include "phl/holonomy.hpp"
#include "phl/jet.hpp"
#include "phl/linalg.hpp"
#include "phl/parse.hpp"
#include "phl/projective.hpp"
#include "phl/tensor.hpp"

namespace phl::testing {

// Parse a polynomial into a rational jet.  Keeps the test bodies close to the
// formulas they exercise.
inline Jet<Rat> jr(const std::string& text, const std::vector<std::string>& vars,
                   int order) {
  return jet_from_polynomial<Rat>(text, vars, order);
}

inline Jet<GaussRat> jg(const std::string& text, const std::vector<std::string>& vars,
                        int order) {
  return jet_from_polynomial<GaussRat>(text, vars, order);
}

template <class F>
bool connections_equal(const ConnectionChart<F>& a, const ConnectionChart<F>& b) {
  if (a.dim != b.dim || a.order != b.order) return false;
  for (int k = 0; k < a.dim; ++k)
    for (int i = 0; i < a.dim; ++i)
      for (int j = 0; j < a.dim; ++j)
        if (!(a.G(k, i, j) == b.G(k, i, j))) return false;
  return true;
}

// Small deterministic generator for property tests; identical recipe to the
// acceptance suite so failures reproduce across both.
struct Lcg {
  unsigned long long state;
  explicit Lcg(unsigned long long seed) : state(seed * 2u + 1u) {}
  long next(long lo, long hi) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    unsigned long long span = static_cast<unsigned long long>(hi - lo + 1);
    return lo + static_cast<long>((state >> 33) % span);
  }
};

inline OneFormJet<Rat> random_one_form(int dim, int order, unsigned long long seed) {
  Lcg rng(seed);
  OneFormJet<Rat> ups;
  for (int i = 0; i < dim; ++i) {
    Jet<Rat> u = Jet<Rat>::constant(dim, order, Rat(rng.next(-2, 2), rng.next(1, 3)));
    for (int v = 0; v < dim; ++v) {
      Rat c(rng.next(-2, 2), rng.next(1, 3));
      u += c * Jet<Rat>::variable(dim, order, v);
    }
    ups.push_back(u);
  }
  return ups;
}

}  // namespace phl::testing
