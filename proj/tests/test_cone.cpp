#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"

using namespace phl;
using phl::testing::connections_equal;
using phl::testing::jr;

namespace {

TensorJet<Rat> standard_nu(int n, int order) {
  TensorJet<Rat> nu(n, {Slot::Lo, Slot::Lo}, order);
  for (int a = 0; a + 1 < n; a += 2) {
    nu.at(a, a + 1) = Jet<Rat>::constant(n, order, Rat(1));
    nu.at(a + 1, a) = Jet<Rat>::constant(n, order, Rat(-1));
  }
  return nu;
}

SymplecticConeData<Rat> zero_data(const TensorJet<Rat>& nu) {
  int n = nu.dim;
  int ord = nu.order();
  SymplecticConeData<Rat> d;
  d.nu = nu;
  d.s = TensorJet<Rat>(n, {Slot::Lo, Slot::Lo}, ord);
  d.sigma = TensorJet<Rat>(n, {Slot::Up, Slot::Lo}, ord);
  d.U = TensorJet<Rat>(n, {Slot::Up}, ord);
  d.f = Jet<Rat>::zero(n, ord);
  return d;
}

}  // namespace

TEST_CASE("cone over the flat chart is flat and shaped as expected") {
  ConeChart<Rat> cc = projective_cone(flat<Rat>(3, 5));
  CHECK(cc.kind == ConeKind::Real);
  CHECK(cc.q_index == 3);
  CHECK(cc.cone.dim == 4);
  CHECK(cc.cone.order == 4);
  CHECK(cc.cone.var_names == std::vector<std::string>{"x1", "x2", "x3", "q"});
  // Only the scaling identities survive: Γ̂^a_{aq} = Γ̂^a_{qa} = 1.
  std::vector<std::string> cv = cc.cone.var_names;
  for (int a = 0; a < 4; ++a) {
    CHECK(cc.cone.G(a, a, 3) == jr("1", cv, 4));
    CHECK(cc.cone.G(a, 3, a) == jr("1", cv, 4));
  }
  CHECK(cc.cone.G(3, 0, 0).is_zero());
  CHECK(curvature(cc.cone).is_zero());
  CHECK_FALSE(has_torsion(cc.cone));
}

TEST_CASE("cone christoffels never depend on the fiber coordinate") {
  std::vector<ConeChart<Rat>> cones;
  cones.push_back(projective_cone(cotton_york_2d(5)));
  SymplecticExample ex = symplectic_example(4, 6);
  cones.push_back(symplectic_cone(ex.conn, ricci_flat_data(ex.conn, ex.nu)));
  for (const auto& cc : cones)
    for (int k = 0; k < cc.cone.dim; ++k)
      for (int i = 0; i < cc.cone.dim; ++i)
        for (int j = 0; j < cc.cone.dim; ++j)
          CHECK(jet_partial(cc.cone.G(k, i, j), cc.q_index).is_zero());
}

TEST_CASE("cone over the parabolic plane chart carries Cotton-York in the fiber row") {
  ConnectionChart<Rat> base = cotton_york_2d(5);
  ConeChart<Rat> cc = projective_cone(base);
  std::vector<std::string> cv = {"x", "y", "q"};
  CHECK(cc.cone.order == 4);
  // Base Christoffels pass through; the fiber row holds rho = −Ric.
  CHECK(cc.cone.G(1, 0, 0) == jr("y^2", cv, 4));
  CHECK(cc.cone.G(2, 0, 0) == jr("-2*y", cv, 4));
  CHECK(cc.cone.G(2, 1, 1).is_zero());

  TensorJet<Rat> r = curvature(cc.cone);
  TensorJet<Rat> cy = cotton_york(base);
  int ord = r.order();
  std::vector<int> idx(4, 0);
  do {
    int h = idx[0], j = idx[1], k = idx[2], l = idx[3];
    Jet<Rat> expect = Jet<Rat>::zero(3, ord);
    if (h < 2 && j < 2 && k == 2 && l < 2)
      expect = detail::embed_to(cy.at(h, j, l).truncated(ord), 3, 0, ord);
    // Weyl block vanishes in two dimensions, fiber column and fiber
    // insertions vanish identically.
    CHECK(r.at(idx) == expect);
  } while (next_index(idx, 3));
  CHECK(ricci(cc.cone).is_zero());
}

TEST_CASE("cones over projectively flat charts are flat") {
  CHECK(curvature(projective_cone(quadric_chart(3, 0, Rat(1), 5).conn).cone).is_zero());
  CHECK(curvature(projective_cone(non_einstein_chart<Rat>(2, 5)).cone).is_zero());
}

TEST_CASE("asymmetric rho blocks the cone construction") {
  // Υ = x₂ dx₁ is not closed, so the changed flat connection preserves no
  // volume form.
  ConnectionChart<Rat> c(2, 4, {"x1", "x2"});
  c.G(0, 0, 0) = jr("2*x2", {"x1", "x2"}, 4);
  c.G(1, 0, 1) = jr("x2", {"x1", "x2"}, 4);
  c.G(1, 1, 0) = jr("x2", {"x1", "x2"}, 4);
  CHECK_THROWS_WITH(projective_cone(c),
                    "preferred connection does not preserve a volume form");
}

TEST_CASE("product connection concatenates blocks and ricci adds blockwise") {
  ConnectionChart<Rat> a = cotton_york_2d(4);
  ConnectionChart<Rat> prod = product_connection(a, a);
  CHECK(prod.dim == 4);
  CHECK(prod.order == 4);
  std::vector<std::string> v4 = {"x1", "x2", "x3", "x4"};
  CHECK(prod.G(1, 0, 0) == jr("x2^2", v4, 4));
  CHECK(prod.G(3, 2, 2) == jr("x4^2", v4, 4));
  CHECK(prod.G(1, 2, 2).is_zero());
  TensorJet<Rat> ric = ricci(prod);
  CHECK(ric.at(0, 0) == jr("2*x2", v4, 3));
  CHECK(ric.at(2, 2) == jr("2*x4", v4, 3));
  CHECK(ric.at(0, 2).is_zero());
  CHECK(ric.at(2, 0).is_zero());
}

TEST_CASE("products of projectively flat factors have vanishing Cotton-York") {
  ConnectionChart<Rat> ne = non_einstein_chart<Rat>(2, 4);
  CHECK(cotton_york(product_connection(ne, ne)).is_zero());
}

TEST_CASE("reconstruction: the cone restricted to base slots is the base connection") {
  QuadricChart q = quadric_chart(2, 1, Rat(1), 5);
  ConeChart<Rat> cc = projective_cone(q.conn);
  int n = q.conn.dim;
  int ord = cc.cone.order;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        CHECK(cc.cone.G(k, i, j) ==
              detail::embed_to(q.conn.G(k, i, j).truncated(ord), n + 1, 0, ord));
}

TEST_CASE("shearing the fiber coordinate matches changing the preferred connection") {
  ConnectionChart<Rat> base = flat<Rat>(2, 6);
  Jet<Rat> f = jr("x1^2 - x1*x2 + 2*x2", {"x1", "x2"}, 6);
  OneFormJet<Rat> df = {jet_partial(f, 0), jet_partial(f, 1)};
  ConeChart<Rat> sheared_source = projective_cone(base);
  ConnectionChart<Rat> sheared = shear_cone_chart(sheared_source, f);
  ConeChart<Rat> changed = projective_cone(change_preferred(base, df));
  CHECK(sheared.order == 4);
  CHECK(connections_equal(sheared, changed.cone));

  CHECK_THROWS_WITH(shear_cone_chart(sheared_source, jr("x1", {"x1", "x2"}, 1)),
                    "shear_cone_chart: jet order exhausted");
}

TEST_CASE("parallel metric on the cone over an Einstein base") {
  QuadricChart q = quadric_chart(3, 0, Rat(1), 5);
  ConeChart<Rat> cc = projective_cone(q.conn);
  TensorJet<Rat> h0 = cone_parallel_metric(cc);
  CHECK(h0.dim == 3);
  // Fiber entry is N − 1 for base dimension N = 2.
  CHECK(h0.at(2, 2) == jr("1", {"x1", "x2", "q"}, 4));
  CHECK(signature_exact(value_matrix(h0)) == std::pair<int, int>(3, 0));
  // ∇̂h₀ = −2 dq ⊗ h₀ exactly, so the e^{2q}-weighted metric is parallel.
  CHECK(cone_scale_identity_holds(cc, h0));
  Jet<Rat> w = detail::exp_twice_var<Rat>(3, cc.cone.order, cc.q_index);
  CHECK(covariant_derivative(detail::scale_tensor(w, h0), cc.cone).is_zero());

  CHECK_THROWS_WITH(cone_parallel_metric(projective_cone(cotton_york_2d(5))),
                    "cone_parallel_metric: base is not Einstein (ricci not parallel "
                    "at retained order)");
}

TEST_CASE("complex cone over the complex quadric is Ricci-flat with parallel J") {
  ComplexQuadric cq = complex_quadric_chart(2, 4);
  ConeChart<GaussRat> cc = complex_cone(cq.conn, cq.rho_c);
  CHECK(cc.kind == ConeKind::Complex);
  CHECK(cc.cone.dim == 4);
  CHECK(cc.q_index == 0);
  CHECK(cc.second_index == 1);
  CHECK(cc.cone.var_names == std::vector<std::string>{"q", "r", "x1", "x2"});
  CHECK_FALSE(has_torsion(cc.cone));
  CHECK(ricci(cc.cone).is_zero());
  TensorJet<GaussRat> j = complex_cone_structure(cc);
  CHECK(covariant_derivative(j, cc.cone).is_zero());
  // J² = −Id on the fiber.
  int nc = cc.cone.dim;
  for (int a = 0; a < nc; ++a)
    for (int b = 0; b < nc; ++b) {
      Jet<GaussRat> acc = Jet<GaussRat>::zero(nc, cc.cone.order);
      for (int m = 0; m < nc; ++m) acc += jet_mul(j.at(a, m), j.at(m, b));
      CHECK(acc == (a == b ? Jet<GaussRat>::constant(nc, cc.cone.order, GaussRat(-1))
                           : Jet<GaussRat>::zero(nc, cc.cone.order)));
    }
}

TEST_CASE("complex cone over the flat chart with zero rho is flat") {
  ConnectionChart<GaussRat> base = flat<GaussRat>(2, 4);
  TensorJet<GaussRat> zero_rho(2, {Slot::Lo, Slot::Lo}, 4);
  ConeChart<GaussRat> cc = complex_cone(base, zero_rho);
  CHECK(curvature(cc.cone).is_zero());
  CHECK(covariant_derivative(complex_cone_structure(cc), cc.cone).is_zero());
}

TEST_CASE("complex cone rejects bad inputs with specific messages") {
  ConnectionChart<GaussRat> tor = flat<GaussRat>(2, 4);
  tor.G(0, 0, 1) = Jet<GaussRat>::variable(2, 4, 0);
  TensorJet<GaussRat> zero_rho(2, {Slot::Lo, Slot::Lo}, 4);
  CHECK_THROWS_WITH(complex_cone(tor, zero_rho), "complex_cone: connection has torsion");

  TensorJet<GaussRat> asym(2, {Slot::Lo, Slot::Lo}, 4);
  asym.at(0, 1) = Jet<GaussRat>::constant(2, 4, GaussRat(1));
  CHECK_THROWS_WITH(complex_cone(flat<GaussRat>(2, 4), asym),
                    "complex_cone: rho tensor is not symmetric");

  ComplexQuadric cq = complex_quadric_chart(2, 4);
  TensorJet<GaussRat> wrong(2, {Slot::Lo, Slot::Lo}, 3);
  CHECK_THROWS_WITH(complex_cone(cq.conn, wrong),
                    "complex_cone: supplied rho tensor does not make the cone Ricci-flat");
}

TEST_CASE("poincare primitive integrates a closed two-form") {
  TensorJet<Rat> nu(2, {Slot::Lo, Slot::Lo}, 3);
  nu.at(0, 1) = jr("1 + x1", {"x1", "x2"}, 3);
  nu.at(1, 0) = jr("-1 - x1", {"x1", "x2"}, 3);
  std::vector<Jet<Rat>> lam = poincare_primitive(nu, 4);
  CHECK(lam[0] == jr("-x2 - 2/3*x1*x2", {"x1", "x2"}, 4));
  CHECK(lam[1] == jr("x1 + 2/3*x1^2", {"x1", "x2"}, 4));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      CHECK(jet_partial(lam[j], i) - jet_partial(lam[i], j) ==
            Rat(2) * nu.at(i, j).truncated(3));
}

TEST_CASE("symplectic cone over flat base with zero data is flat") {
  ConnectionChart<Rat> base = flat<Rat>(2, 5);
  SymplecticConeData<Rat> data = zero_data(standard_nu(2, 5));
  ConeChart<Rat> cc = symplectic_cone(base, data);
  CHECK(cc.kind == ConeKind::Symplectic);
  CHECK(cc.cone.dim == 4);
  CHECK(cc.q_index == 0);
  CHECK(cc.second_index == 1);
  CHECK(cc.cone.var_names == std::vector<std::string>{"q", "e", "x1", "x2"});
  CHECK(curvature(cc.cone).is_zero());
  REQUIRE(cc.omega0.has_value());
  CHECK(cone_scale_identity_holds(cc, *cc.omega0));
}

TEST_CASE("ricci_flat_data realizes the canonical choices on the symplectic example") {
  SymplecticExample ex = symplectic_example(4, 6);
  SymplecticConeData<Rat> data = ricci_flat_data(ex.conn, ex.nu);
  // s = Ric/(2n+2) with 2n = 4.
  TensorJet<Rat> ric = ricci(ex.conn);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK(Rat(6) * data.s.at(i, j) == ric.at(i, j).truncated(data.s.order()));
  // U has no constant term.
  for (int k = 0; k < 4; ++k) CHECK(is_zero(data.U.at(k).value()));

  ConeChart<Rat> cc = symplectic_cone(ex.conn, data);
  CHECK(cc.cone.dim == 6);
  CHECK(cc.cone.order == 3);
  CHECK_FALSE(has_torsion(cc.cone));
  CHECK(ricci(cc.cone).is_zero());
  CHECK(cone_scale_identity_holds(cc, *cc.omega0));

  // Curvature with the Euler direction inserted vanishes.
  TensorJet<Rat> r = curvature(cc.cone);
  int nc = cc.cone.dim;
  for (int j = 0; j < nc; ++j)
    for (int k = 0; k < nc; ++k)
      for (int l = 0; l < nc; ++l) {
        CHECK(r.at(cc.q_index, j, k, l).is_zero());
        CHECK(r.at(j, l, k, cc.q_index).is_zero());
      }
}

TEST_CASE("ricci_flat_data on the flat base is identically zero") {
  SymplecticConeData<Rat> d = ricci_flat_data(flat<Rat>(4, 4), standard_nu(4, 4));
  CHECK(d.s.is_zero());
  CHECK(d.sigma.is_zero());
  CHECK(d.U.is_zero());
  CHECK(d.f.is_zero());
}

TEST_CASE("ricci_flat_data validates its inputs") {
  CHECK_THROWS_WITH(ricci_flat_data(flat<Rat>(3, 4), standard_nu(2, 4)),
                    "ricci_flat_data: base dimension must be even and at least 2");
  TensorJet<Rat> sym(2, {Slot::Lo, Slot::Lo}, 4);
  sym.at(0, 1) = jr("1", {"x1", "x2"}, 4);
  sym.at(1, 0) = jr("1", {"x1", "x2"}, 4);
  CHECK_THROWS_WITH(ricci_flat_data(flat<Rat>(2, 4), sym),
                    "ricci_flat_data: nu is not antisymmetric");
  TensorJet<Rat> deg(2, {Slot::Lo, Slot::Lo}, 4);
  deg.at(0, 1) = jr("x1", {"x1", "x2"}, 4);
  deg.at(1, 0) = jr("-x1", {"x1", "x2"}, 4);
  CHECK_THROWS_WITH(ricci_flat_data(flat<Rat>(2, 4), deg),
                    "ricci_flat_data: nu is degenerate at the base point");
}

TEST_CASE("symplectic cone rejects inconsistent or tampered data") {
  SymplecticExample ex = symplectic_example(4, 6);

  SymplecticConeData<Rat> bad = ricci_flat_data(ex.conn, ex.nu);
  bad.f += Jet<Rat>::constant(4, bad.f.order(), Rat(1));
  CHECK_THROWS_WITH(symplectic_cone(ex.conn, bad),
                    "symplectic_cone: supplied data does not yield a Ricci-flat cone");

  SymplecticConeData<Rat> inco = ricci_flat_data(ex.conn, ex.nu);
  inco.sigma.at(0, 0) += Jet<Rat>::constant(4, inco.sigma.order(), Rat(1));
  CHECK_THROWS_WITH(symplectic_cone(ex.conn, inco),
                    "symplectic_cone: sigma is inconsistent with s and nu");

  CHECK_THROWS_WITH(symplectic_cone(flat<Rat>(3, 4), SymplecticConeData<Rat>{}),
                    "symplectic_cone: base dimension must be even and positive");

  SymplecticConeData<Rat> z2 = zero_data(standard_nu(2, 4));
  z2.nu.at(0, 1) = jr("1", {"x1", "x2"}, 4);
  z2.nu.at(1, 0) = jr("1", {"x1", "x2"}, 4);
  CHECK_THROWS_WITH(symplectic_cone(flat<Rat>(2, 4), z2),
                    "symplectic_cone: form is not antisymmetric");

  SymplecticConeData<Rat> zdeg = zero_data(standard_nu(2, 4));
  zdeg.nu.at(0, 1) = jr("x1", {"x1", "x2"}, 4);
  zdeg.nu.at(1, 0) = jr("-x1", {"x1", "x2"}, 4);
  CHECK_THROWS_WITH(symplectic_cone(flat<Rat>(2, 4), zdeg),
                    "symplectic_cone: symplectic form is degenerate at the base point");

  // A form the base connection fails to preserve.
  SymplecticConeData<Rat> np = zero_data(standard_nu(2, 4));
  np.nu.at(0, 1) = jr("1 + x1", {"x1", "x2"}, 4);
  np.nu.at(1, 0) = jr("-1 - x1", {"x1", "x2"}, 4);
  CHECK_THROWS_WITH(symplectic_cone(flat<Rat>(2, 4), np),
                    "symplectic_cone: base connection does not preserve the symplectic form");
}
