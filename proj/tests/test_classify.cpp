#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>

#include "helpers.hpp"

using namespace phl;

namespace {

Mat<Rat> E(int n, int i, int j, const Rat& v = Rat(1)) {
  Mat<Rat> m(n, n);
  m.at(i, j) = v;
  return m;
}

// Realify a gaussian-rational matrix: coordinate 2p is the real part of the
// complex coordinate p, 2p+1 its imaginary part, so each entry a+bi becomes
// the block [[a,-b],[b,a]].
Mat<Rat> realify(const Mat<GaussRat>& m) {
  Mat<Rat> r(2 * m.rows, 2 * m.cols);
  for (int u = 0; u < m.rows; ++u)
    for (int v = 0; v < m.cols; ++v) {
      const GaussRat& z = m.at(u, v);
      r.at(2 * u, 2 * v) = z.re;
      r.at(2 * u, 2 * v + 1) = -z.im;
      r.at(2 * u + 1, 2 * v) = z.im;
      r.at(2 * u + 1, 2 * v + 1) = z.re;
    }
  return r;
}

Mat<GaussRat> cmat(int n, std::initializer_list<std::tuple<int, int, GaussRat>> entries) {
  Mat<GaussRat> m(n, n);
  for (const auto& [i, j, v] : entries) m.at(i, j) = v;
  return m;
}

using Quat = std::array<Rat, 4>;

// Left multiplication by a quaternion on the basis (1, i, j, k).
void put_quat_block(Mat<Rat>& m, int bu, int bv, const Quat& q) {
  const Rat &a = q[0], &b = q[1], &c = q[2], &d = q[3];
  Rat block[4][4] = {{a, -b, -c, -d}, {b, a, -d, c}, {c, d, a, -b}, {d, -c, b, a}};
  for (int u = 0; u < 4; ++u)
    for (int v = 0; v < 4; ++v) m.at(4 * bu + u, 4 * bv + v) = block[u][v];
}

Quat qconj(const Quat& q) { return {q[0], -q[1], -q[2], -q[3]}; }

ClassificationReport closed_classify(const std::vector<Mat<Rat>>& gens, int n,
                                     int expect_dim) {
  EndoSet<Rat> s = lie_closure(gens, n);
  REQUIRE(s.dim() == expect_dim);  // generators were already bracket-closed
  REQUIRE(verify_bracket_closed(s));
  return classify(s);
}

const GaussRat g1 = GaussRat(Rat(1));
const GaussRat gi = GaussRat::i();

}  // namespace

TEST_CASE("invariant forms and commutant of the empty algebra are everything") {
  ClassificationReport rep = classify({}, 3);
  CHECK(rep.label == "trivial");
  CHECK(rep.dimension == 0);
  CHECK(rep.sym_forms.size() == 6);
  CHECK(rep.antisym_forms.size() == 3);
  CHECK(rep.commutant_dim == 9);
  CHECK(rep.commutant_type == "other");
  CHECK(rep.evidence.front() == "dimension 0 on fiber 3");
}

TEST_CASE("rotation algebra carries a definite invariant metric") {
  std::vector<Mat<Rat>> gens = {E(3, 2, 1) + E(3, 1, 2, Rat(-1)),
                                E(3, 0, 2) + E(3, 2, 0, Rat(-1)),
                                E(3, 1, 0) + E(3, 0, 1, Rat(-1))};
  ClassificationReport rep = closed_classify(gens, 3, 3);
  CHECK(rep.label == "so(3,0)");
  CHECK(rep.trace_free);
  CHECK(rep.commutant_type == "R");
  CHECK(rep.sym_forms.size() == 1);
  CHECK(rep.antisym_forms.empty());
  REQUIRE(rep.signature.has_value());
  CHECK(*rep.signature == std::pair<int, int>(3, 0));
}

TEST_CASE("lorentz algebra keeps its inertia") {
  std::vector<Mat<Rat>> gens = {E(3, 0, 1) + E(3, 1, 0, Rat(-1)),
                                E(3, 0, 2) + E(3, 2, 0),
                                E(3, 1, 2) + E(3, 2, 1)};
  ClassificationReport rep = closed_classify(gens, 3, 3);
  CHECK(rep.label == "so(2,1)");
  REQUIRE(rep.signature.has_value());
  CHECK(*rep.signature == std::pair<int, int>(2, 1));

  // Conjugating by a unimodular matrix must not change the verdict.
  Mat<Rat> t(3, 3);
  t.at(0, 0) = Rat(1);
  t.at(0, 1) = Rat(1);
  t.at(1, 1) = Rat(1);
  t.at(2, 0) = Rat(-2);
  t.at(2, 2) = Rat(1);
  Mat<Rat> tinv = *inverse_field(t);
  std::vector<Mat<Rat>> conj;
  for (const auto& a : gens) conj.push_back(tinv * a * t);
  ClassificationReport crep = closed_classify(conj, 3, 3);
  CHECK(crep.label == "so(2,1)");
  REQUIRE(crep.signature.has_value());
  CHECK(*crep.signature == std::pair<int, int>(2, 1));
}

TEST_CASE("full special linear algebra has no invariant form") {
  std::vector<Mat<Rat>> gens = {E(3, 0, 1), E(3, 1, 0), E(3, 0, 2), E(3, 2, 0),
                                E(3, 1, 2), E(3, 2, 1),
                                E(3, 0, 0) + E(3, 1, 1, Rat(-1)),
                                E(3, 1, 1) + E(3, 2, 2, Rat(-1))};
  ClassificationReport rep = closed_classify(gens, 3, 8);
  CHECK(rep.label == "sl(3,R)");
  CHECK(rep.sym_forms.empty());
  CHECK(rep.antisym_forms.empty());
  CHECK(rep.commutant_type == "R");
}

TEST_CASE("symplectic algebra preserves exactly one antisymmetric form") {
  std::vector<Mat<Rat>> gens;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      gens.push_back(E(4, a, b) + E(4, 2 + b, 2 + a, Rat(-1)));
  for (auto [a, b] : {std::pair<int, int>{0, 0}, {0, 1}, {1, 1}}) {
    gens.push_back(E(4, a, 2 + b) + E(4, b, 2 + a));
    gens.push_back(E(4, 2 + a, b) + E(4, 2 + b, a));
  }
  ClassificationReport rep = closed_classify(gens, 4, 10);
  CHECK(rep.label == "sp(4,R)");
  CHECK(rep.sym_forms.empty());
  CHECK(rep.antisym_forms.size() == 1);
  CHECK(rep.commutant_type == "R");
}

TEST_CASE("realified complex special linear algebra in two variables") {
  std::vector<Mat<GaussRat>> cgens = {
      cmat(2, {{0, 0, g1}, {1, 1, -g1}}), cmat(2, {{0, 1, g1}}), cmat(2, {{1, 0, g1}}),
      cmat(2, {{0, 0, gi}, {1, 1, -gi}}), cmat(2, {{0, 1, gi}}), cmat(2, {{1, 0, gi}})};
  std::vector<Mat<Rat>> gens;
  for (const auto& c : cgens) gens.push_back(realify(c));
  ClassificationReport rep = closed_classify(gens, 4, 6);
  // In two complex variables the special linear and symplectic algebras agree,
  // and the complex symplectic form is detected.
  CHECK(rep.label == "sp(2,C)");
  CHECK(rep.commutant_type == "C");
  REQUIRE(rep.complex_structures.size() == 1);
  const Mat<Rat>& j = rep.complex_structures[0];
  Mat<Rat> minus_id = Rat(-1) * E(4, 0, 0) + Rat(-1) * E(4, 1, 1) +
                      Rat(-1) * E(4, 2, 2) + Rat(-1) * E(4, 3, 3);
  CHECK(j * j == minus_id);
  CHECK(rep.sym_forms.empty());
  CHECK(rep.antisym_forms.size() == 2);
}

TEST_CASE("realified complex rotation algebra") {
  auto l = [&](int a, int b) { return cmat(3, {{a, b, g1}, {b, a, -g1}}); };
  auto il = [&](int a, int b) { return cmat(3, {{a, b, gi}, {b, a, -gi}}); };
  std::vector<Mat<Rat>> gens = {realify(l(0, 1)),  realify(l(0, 2)),  realify(l(1, 2)),
                                realify(il(0, 1)), realify(il(0, 2)), realify(il(1, 2))};
  ClassificationReport rep = closed_classify(gens, 6, 6);
  CHECK(rep.label == "so(3,C)");
  CHECK(rep.commutant_type == "C");
  CHECK(rep.sym_forms.size() == 2);
}

TEST_CASE("compact special unitary algebra on two complex variables") {
  std::vector<Mat<GaussRat>> cgens = {cmat(2, {{0, 0, gi}, {1, 1, -gi}}),
                                      cmat(2, {{0, 1, g1}, {1, 0, -g1}}),
                                      cmat(2, {{0, 1, gi}, {1, 0, gi}})};
  std::vector<Mat<Rat>> gens;
  for (const auto& c : cgens) gens.push_back(realify(c));
  ClassificationReport rep = closed_classify(gens, 4, 3);
  // The commutant is quaternionic, so the label is the rank-one compact
  // symplectic algebra rather than its special-unitary alias.
  CHECK(rep.label == "sp(1,0)");
  CHECK(rep.commutant_type == "H");
  CHECK(rep.complex_structures.size() == 3);
  REQUIRE(rep.signature.has_value());
  CHECK(*rep.signature == std::pair<int, int>(1, 0));
}

TEST_CASE("compact special unitary algebra on three complex variables") {
  std::vector<Mat<GaussRat>> cgens = {
      cmat(3, {{0, 0, gi}, {1, 1, -gi}}),
      cmat(3, {{1, 1, gi}, {2, 2, -gi}}),
      cmat(3, {{0, 1, g1}, {1, 0, -g1}}),
      cmat(3, {{0, 1, gi}, {1, 0, gi}}),
      cmat(3, {{0, 2, g1}, {2, 0, -g1}}),
      cmat(3, {{0, 2, gi}, {2, 0, gi}}),
      cmat(3, {{1, 2, g1}, {2, 1, -g1}}),
      cmat(3, {{1, 2, gi}, {2, 1, gi}})};
  std::vector<Mat<Rat>> gens;
  for (const auto& c : cgens) gens.push_back(realify(c));
  ClassificationReport rep = closed_classify(gens, 6, 8);
  CHECK(rep.label == "su(3,0)");
  CHECK(rep.commutant_type == "C");
  REQUIRE(rep.signature.has_value());
  CHECK(*rep.signature == std::pair<int, int>(3, 0));
}

TEST_CASE("indefinite special unitary algebra") {
  std::vector<Mat<GaussRat>> cgens = {
      cmat(3, {{0, 0, gi}, {1, 1, -gi}}),
      cmat(3, {{0, 0, gi}, {2, 2, -gi}}),
      cmat(3, {{0, 1, g1}, {1, 0, -g1}}),
      cmat(3, {{0, 1, gi}, {1, 0, gi}}),
      cmat(3, {{0, 2, g1}, {2, 0, g1}}),
      cmat(3, {{0, 2, gi}, {2, 0, -gi}}),
      cmat(3, {{1, 2, g1}, {2, 1, g1}}),
      cmat(3, {{1, 2, gi}, {2, 1, -gi}})};
  std::vector<Mat<Rat>> gens;
  for (const auto& c : cgens) gens.push_back(realify(c));
  ClassificationReport rep = closed_classify(gens, 6, 8);
  CHECK(rep.label == "su(2,1)");
  REQUIRE(rep.signature.has_value());
  CHECK(*rep.signature == std::pair<int, int>(2, 1));
}

TEST_CASE("indefinite quaternionic unitary algebra") {
  const Quat qi = {Rat(0), Rat(1), Rat(0), Rat(0)};
  const Quat qj = {Rat(0), Rat(0), Rat(1), Rat(0)};
  const Quat qk = {Rat(0), Rat(0), Rat(0), Rat(1)};
  const Quat q1 = {Rat(1), Rat(0), Rat(0), Rat(0)};
  std::vector<Mat<Rat>> gens;
  for (const Quat& q : {qi, qj, qk}) {
    Mat<Rat> m(8, 8);
    put_quat_block(m, 0, 0, q);
    gens.push_back(m);
    Mat<Rat> d(8, 8);
    put_quat_block(d, 1, 1, q);
    gens.push_back(d);
  }
  for (const Quat& b : {q1, qi, qj, qk}) {
    Mat<Rat> m(8, 8);
    put_quat_block(m, 0, 1, b);
    put_quat_block(m, 1, 0, qconj(b));
    gens.push_back(m);
  }
  ClassificationReport rep = closed_classify(gens, 8, 10);
  CHECK(rep.label == "sp(1,1)");
  CHECK(rep.commutant_type == "H");
  REQUIRE(rep.signature.has_value());
  CHECK(*rep.signature == std::pair<int, int>(1, 1));
}

TEST_CASE("abelian algebra with an irrational complex structure stays honest") {
  Mat<Rat> m(2, 2);
  m.at(0, 1) = Rat(-2);
  m.at(1, 0) = Rat(1);
  ClassificationReport rep = classify({m}, 2);
  CHECK(rep.label == "unrecognized");
  CHECK(rep.dimension == 1);
  CHECK(rep.commutant_dim == 2);
  CHECK(rep.commutant_type == "other");  // square is -2, not a rational square
  CHECK(rep.complex_structures.empty());
}

TEST_CASE("full matrix algebra is rejected for want of trace freedom") {
  std::vector<Mat<Rat>> gens = {E(2, 0, 0), E(2, 0, 1), E(2, 1, 0), E(2, 1, 1)};
  ClassificationReport rep = classify(gens, 2);
  CHECK(rep.label == "unrecognized");
  CHECK_FALSE(rep.trace_free);
  CHECK(rep.commutant_dim == 1);
  CHECK(rep.sym_forms.empty());
  CHECK(rep.antisym_forms.empty());
}

TEST_CASE("signature wrapper matches the exact inertia computation") {
  Mat<Rat> s(2, 2);
  s.at(0, 0) = Rat(2);
  s.at(1, 1) = Rat(-3);
  CHECK(signature(s) == std::pair<int, int>(1, 1));
  Mat<Rat> deg(2, 2);
  deg.at(0, 0) = Rat(1);
  CHECK_THROWS_WITH(signature(deg), "signature_exact: degenerate form");
}

TEST_CASE("endo set overload classifies the closure it was handed") {
  std::vector<Mat<Rat>> partial = {E(3, 2, 1) + E(3, 1, 2, Rat(-1)),
                                   E(3, 0, 2) + E(3, 2, 0, Rat(-1))};
  EndoSet<Rat> s = lie_closure(partial, 3);
  ClassificationReport rep = classify(s);
  CHECK(rep.fiber_dim == 3);
  CHECK(rep.dimension == 3);
  CHECK(rep.label == "so(3,0)");
}
