#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"

using namespace phl;

namespace {

Mat<Rat> E(int n, int i, int j, const Rat& v = Rat(1)) {
  Mat<Rat> m(n, n);
  m.at(i, j) = v;
  return m;
}

Rat trace_of(const Mat<Rat>& m) {
  Rat t(0);
  for (int i = 0; i < m.rows; ++i) t += m.at(i, i);
  return t;
}

}  // namespace

TEST_CASE("endo sets span, deduplicate and close under brackets") {
  EndoSet<Rat> s(2);
  CHECK(s.fiber_dim() == 2);
  CHECK(s.dim() == 0);
  CHECK(s.contains(Mat<Rat>(2, 2)));  // zero endomorphism is always in the span

  CHECK(s.add(E(2, 0, 1)));
  CHECK(s.dim() == 1);
  CHECK(s.contains(E(2, 0, 1, Rat(5, 3))));
  CHECK_FALSE(s.add(E(2, 0, 1, Rat(-2))));  // dependent, not recorded
  CHECK(s.basis().size() == 1);

  CHECK(s.add(E(2, 1, 0)));
  s.close_under_brackets();
  // [e01, e10] = e00 - e11 completes sl(2).
  CHECK(s.dim() == 3);
  Mat<Rat> h(2, 2);
  h.at(0, 0) = Rat(1);
  h.at(1, 1) = Rat(-1);
  CHECK(s.contains(h));
  CHECK(verify_bracket_closed(s));
  CHECK(s.provenance().back().depth == -1);  // bracket products are marked
}

TEST_CASE("lie closure completes a partial rotation algebra") {
  Mat<Rat> lx = E(3, 2, 1) + E(3, 1, 2, Rat(-1));
  Mat<Rat> ly = E(3, 0, 2) + E(3, 2, 0, Rat(-1));
  Mat<Rat> lz = E(3, 1, 0) + E(3, 0, 1, Rat(-1));
  EndoSet<Rat> s = lie_closure<Rat>({lx, ly}, 3);
  CHECK(s.dim() == 3);
  CHECK(s.contains(lz));
  CHECK(verify_bracket_closed(s));
}

TEST_CASE("gaussian endo spans absorb imaginary multiples") {
  EndoSet<GaussRat> s(2);
  Mat<GaussRat> m(2, 2);
  m.at(0, 1) = GaussRat(Rat(1));
  CHECK(s.add(m));
  Mat<GaussRat> im(2, 2);
  im.at(0, 1) = GaussRat(Rat(0), Rat(1));
  CHECK(s.contains(im));
  CHECK_FALSE(s.add(im));
  CHECK(s.dim() == 1);
}

TEST_CASE("curvature endomorphisms of the parabolic cone are frozen") {
  ConeChart<Rat> cc = projective_cone(cotton_york_2d(5));
  REQUIRE(cc.cone.order == 4);

  CurvatureEndos<Rat> d0 = curvature_endos(cc.cone, 0);
  REQUIRE(d0.matrices.size() == 1);
  CHECK(d0.matrices[0] == E(3, 2, 0, Rat(2)));
  CHECK(d0.provenance[0].depth == 0);
  CHECK(d0.provenance[0].deriv.empty());
  CHECK(d0.provenance[0].h == 0);
  CHECK(d0.provenance[0].j == 1);

  CurvatureEndos<Rat> d1 = curvature_endos(cc.cone, 1);
  REQUIRE(d1.matrices.size() == 6);
  // Direction x, pair (x,y): scaling part 2(e00 - e22).
  CHECK(d1.provenance[1].deriv == std::vector<int>{0});
  CHECK(d1.provenance[1].h == 0);
  CHECK(d1.provenance[1].j == 1);
  CHECK(d1.matrices[1] == E(3, 0, 0, Rat(2)) + E(3, 2, 2, Rat(-2)));
  // Direction x, pair (y,q): the fiber insertion pulls back -R(y,x).
  CHECK(d1.provenance[2].h == 1);
  CHECK(d1.provenance[2].j == 2);
  CHECK(d1.matrices[2] == E(3, 2, 0, Rat(2)));
  // Direction y, pair (x,y): 2*e10.
  CHECK(d1.provenance[3].deriv == std::vector<int>{1});
  CHECK(d1.provenance[3].h == 0);
  CHECK(d1.provenance[3].j == 1);
  CHECK(d1.matrices[3] == E(3, 1, 0, Rat(2)));
  // Direction y, pair (x,q): -R(x,y).
  CHECK(d1.provenance[4].h == 0);
  CHECK(d1.provenance[4].j == 2);
  CHECK(d1.matrices[4] == E(3, 2, 0, Rat(-2)));
  // Direction q, pair (x,y): a multiple of the depth-0 value.
  CHECK(d1.provenance[5].deriv == std::vector<int>{2});
  CHECK(d1.provenance[5].h == 0);
  CHECK(d1.provenance[5].j == 1);
  CHECK(d1.matrices[5] == E(3, 2, 0, Rat(-4)));

  CHECK_THROWS_WITH(curvature_endos(cc.cone, 4), "curvature_endos: jet order exhausted");
}

TEST_CASE("holonomy of the parabolic cone grows then stays consistent") {
  ConeChart<Rat> cc = projective_cone(cotton_york_2d(6));
  HolonomyResult<Rat> res = infinitesimal_holonomy(cc.cone);
  REQUIRE(res.dims_by_depth.size() >= 2);
  CHECK(res.dims_by_depth[0] == 1);
  CHECK(res.dims_by_depth[1] == 3);
  CHECK(res.algebra.dim() == res.dims_by_depth.back());
  for (size_t k = 1; k < res.dims_by_depth.size(); ++k)
    CHECK(res.dims_by_depth[k] >= res.dims_by_depth[k - 1]);
  if (res.stabilized) {
    size_t last = res.dims_by_depth.size() - 1;
    CHECK(res.stabilized_at == static_cast<int>(last));
    CHECK(res.dims_by_depth[last] == res.dims_by_depth[last - 1]);
  }
  CHECK(res.max_depth_used == static_cast<int>(res.dims_by_depth.size()) - 1);
  CHECK(verify_bracket_closed(res.algebra));
  // Ricci-flat cones carry a parallel volume form, so every generator is
  // traceless.
  for (const auto& m : res.algebra.basis()) CHECK(trace_of(m) == Rat(0));
  CHECK(res.algebra.contains(E(3, 2, 0)));
  CHECK(res.algebra.contains(E(3, 1, 0)));
}

TEST_CASE("depth cap limits the holonomy sweep") {
  ConeChart<Rat> cc = projective_cone(cotton_york_2d(5));
  HolonomyResult<Rat> res = infinitesimal_holonomy(cc.cone, 0);
  CHECK(res.dims_by_depth == std::vector<int>{1});
  CHECK_FALSE(res.stabilized);
  CHECK(res.stabilized_at == -1);
  CHECK(res.max_depth_used == 0);
  CHECK(res.algebra.dim() == 1);
}

TEST_CASE("projectively flat bases give trivial cone holonomy") {
  HolonomyResult<Rat> q =
      infinitesimal_holonomy(projective_cone(quadric_chart(3, 0, Rat(1), 4).conn).cone);
  CHECK(q.algebra.dim() == 0);
  CHECK(q.stabilized);
  CHECK(q.dims_by_depth == std::vector<int>{0, 0});

  HolonomyResult<Rat> ne =
      infinitesimal_holonomy(projective_cone(non_einstein_chart<Rat>(2, 4)).cone);
  CHECK(ne.algebra.dim() == 0);
  CHECK(ne.stabilized);
}

TEST_CASE("holonomy guards the jet order") {
  ConnectionChart<Rat> c = flat<Rat>(2, 0);
  CHECK_THROWS_WITH(infinitesimal_holonomy(c), "infinitesimal_holonomy: jet order exhausted");
}

TEST_CASE("cone over a product of round quadrics closes to the full rotation algebra") {
  ConnectionChart<Rat> prod =
      product_connection(quadric_chart(3, 0, Rat(1), 5).conn,
                         quadric_chart(3, 0, Rat(1), 5, default_generic_shift(2, 2)).conn);
  ConeChart<Rat> cc = projective_cone(prod);
  HolonomyResult<Rat> res = infinitesimal_holonomy(cc.cone);
  CHECK(res.stabilized);
  CHECK(res.algebra.dim() == 10);
  CHECK(verify_bracket_closed(res.algebra));

  // The algebra must annihilate the parallel cone metric at the base point.
  Mat<Rat> h0 = value_matrix(cone_parallel_metric(cc));
  Mat<Rat> zero(5, 5);
  for (const auto& m : res.algebra.basis())
    CHECK(m.transposed() * h0 + h0 * m == zero);
}
