#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jumploci/arrangement.hpp"
#include "jumploci/cdga.hpp"
#include "jumploci/connection.hpp"
#include "jumploci/gauge.hpp"
#include "jumploci/holonomy.hpp"
#include "jumploci/lie.hpp"
#include "jumploci/multinet.hpp"
#include "jumploci/rng.hpp"

using namespace jumploci;

static Cdga torus_model() { return exterior_model({"a", "b"}, Field::rational); }

static Cdga heisenberg_model() {
  HirschData h;
  h.generators = {"p"};
  h.tau = Matrix(1, 1);
  h.tau.at(0, 0) = Scalar(1);
  return hirsch_extend(torus_model(), h);
}

static Arrangement pencil3_arr() {
  Arrangement arr;
  arr.ambient_rank = 2;
  arr.labels = {"l1", "l2", "l3"};
  arr.covectors = {{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(1)}, {Scalar(1), Scalar(1)}};
  return arr;
}

// omega = sum_g coeff-vector (columns indexed by Lie basis)
static FlatConnection conn(std::size_t n1, std::size_t ng,
                           const std::vector<std::pair<std::pair<std::size_t, std::size_t>, int>>& entries) {
  FlatConnection w;
  w.coeffs = Matrix(n1, ng);
  for (const auto& [pos, v] : entries) w.coeffs.at(pos.first, pos.second) = Scalar(v);
  return w;
}

TEST_CASE("lie presets satisfy the axioms") {
  for (const char* name : {"sl2", "borel2", "abelian3"}) {
    LieAlgebra g = lie_preset(name);
    CHECK(validate(g).ok());
  }
  CHECK(sl2().dim() == 3);
  CHECK_FALSE(sl2().is_abelian());
  CHECK(borel2().dim() == 2);
  CHECK_FALSE(borel2().is_abelian());
  CHECK(abelian_lie(3).is_abelian());
  CHECK_THROWS_AS(lie_preset("so3"), std::invalid_argument);

  // [h,e] = 2e and [e,f] = h in coordinates
  LieAlgebra g = sl2();
  auto he = g.bracket({Scalar(1), Scalar(0), Scalar(0)}, {Scalar(0), Scalar(1), Scalar(0)});
  CHECK(he == std::vector<Scalar>{Scalar(0), Scalar(2), Scalar(0)});
  auto ef = g.bracket({Scalar(0), Scalar(1), Scalar(0)}, {Scalar(0), Scalar(0), Scalar(1)});
  CHECK(ef == std::vector<Scalar>{Scalar(1), Scalar(0), Scalar(0)});
}

TEST_CASE("broken structure constants are rejected") {
  LieAlgebra g = sl2();
  g.table[0][1][1] = Scalar(3);  // [h,e] = 3e but [e,h] = -2e: antisymmetry broken
  CHECK_FALSE(validate(g).ok());

  LieAlgebra j = sl2();
  j.table[0][1] = {Scalar(0), Scalar(0), Scalar(1)};  // [h,e] = f
  j.table[1][0] = {Scalar(0), Scalar(0), Scalar(-1)};
  CHECK_FALSE(validate(j).ok());  // Jacobi fails
}

TEST_CASE("subalgebra classification in the rank one simple algebra") {
  std::vector<Scalar> h{Scalar(1), Scalar(0), Scalar(0)};
  std::vector<Scalar> e{Scalar(0), Scalar(1), Scalar(0)};
  std::vector<Scalar> f{Scalar(0), Scalar(0), Scalar(1)};
  CHECK(classify_sl2_subalgebra({e}) == Sl2Subalgebra::abelian);
  CHECK(classify_sl2_subalgebra({h}) == Sl2Subalgebra::abelian);
  CHECK(classify_sl2_subalgebra({h, e}) == Sl2Subalgebra::borel);
  CHECK(classify_sl2_subalgebra({h, f}) == Sl2Subalgebra::borel);
  CHECK(classify_sl2_subalgebra({h, e, f}) == Sl2Subalgebra::full);
  CHECK_THROWS_AS(classify_sl2_subalgebra({e, f}), std::invalid_argument);  // not closed
  std::vector<Scalar> e2{Scalar(0), Scalar(2), Scalar(0)};
  CHECK_THROWS_AS(classify_sl2_subalgebra({e, e2}), std::invalid_argument);  // dependent
  CHECK(sl2_subalgebra_name(Sl2Subalgebra::borel) == "borel");
}

TEST_CASE("lower central series quotients of free lie algebras") {
  LieAlgebra ab = lcs_free_lie(2, 2);
  CHECK(ab.dim() == 2);
  CHECK(ab.is_abelian());

  LieAlgebra heis = lcs_free_lie(2, 3);
  CHECK(heis.dim() == 3);
  CHECK(validate(heis).ok());
  // [x1, x2] = x12, central
  auto br = heis.bracket({Scalar(1), Scalar(0), Scalar(0)}, {Scalar(0), Scalar(1), Scalar(0)});
  CHECK(br == std::vector<Scalar>{Scalar(0), Scalar(0), Scalar(1)});
  auto central = heis.bracket({Scalar(0), Scalar(0), Scalar(1)}, {Scalar(1), Scalar(1), Scalar(0)});
  CHECK(central == std::vector<Scalar>(3));

  LieAlgebra six = lcs_free_lie(3, 3);
  CHECK(six.dim() == 6);
  CHECK(validate(six).ok());

  CHECK_THROWS_AS(lcs_free_lie(2, 4), std::invalid_argument);
}

TEST_CASE("representations validate against the bracket") {
  LieAlgebra g = sl2();
  CHECK(validate(g, adjoint_rep(g)).ok());
  LieRep std2 = standard_rep("sl2");
  CHECK(std2.dim_v() == 2);
  CHECK(validate(g, std2).ok());
  CHECK(validate(borel2(), standard_rep("borel2")).ok());
  CHECK(validate(borel2(), adjoint_rep(borel2())).ok());

  LieRep broken = std2;
  broken.mats[2].at(0, 0) = Scalar(5);
  CHECK_FALSE(validate(g, broken).ok());

  // theta(2h + f) assembled by linearity
  Matrix m = std2.apply({Scalar(2), Scalar(0), Scalar(1)});
  CHECK(m.at(0, 0) == Scalar(2));
  CHECK(m.at(1, 1) == Scalar(-2));
  CHECK(m.at(1, 0) == Scalar(1));
}

TEST_CASE("holonomy presentation shapes") {
  // sphere minus points: no degree-2 classes, free presentation
  HolonomyPresentation free3 = holonomy(rational_curve_model(4, Field::rational));
  CHECK(free3.generators.size() == 3);
  CHECK(free3.relation_names.empty());

  // three concurrent lines: two purely quadratic relations
  HolonomyPresentation pen = holonomy(os_algebra(pencil3_arr()));
  CHECK(pen.generators.size() == 3);
  CHECK(pen.relation_names.size() == 2);
  for (const auto& lin : pen.linear)
    for (const auto& c : lin) CHECK(c.is_zero());
  for (const auto& q : pen.quad) CHECK_FALSE(q.is_zero());

  // heisenberg: the a*b relation picks up a linear term from d(p) = a*b
  HolonomyPresentation heis = holonomy(heisenberg_model());
  CHECK(heis.relation_names.size() == 3);
  CHECK(heis.relation_names[0] == "a*b");
  CHECK(heis.linear[0] == std::vector<Scalar>{Scalar(0), Scalar(0), Scalar(1)});
  CHECK_FALSE(heis.quad[0].is_zero());
  CHECK(heis.linear[1] == std::vector<Scalar>(3));
  CHECK_FALSE(heis.str().empty());
}

TEST_CASE("flatness and holonomy morphisms agree") {
  Cdga heis = heisenberg_model();
  LieAlgebra g = sl2();

  // (g_a, g_b, g_p) = (e, e, 0) is flat, (e, f, -h) is not
  FlatConnection ee0 = conn(3, 3, {{{0, 1}, 1}, {{1, 1}, 1}});
  CHECK(mc_check(heis, g, ee0));
  CHECK(holonomy_hom_check(heis, g, ee0));

  FlatConnection efh = conn(3, 3, {{{0, 1}, 1}, {{1, 2}, 1}, {{2, 0}, -1}});
  CHECK_FALSE(mc_check(heis, g, efh));
  CHECK_FALSE(holonomy_hom_check(heis, g, efh));

  FlatConnection zero = conn(3, 3, {});
  CHECK(mc_check(heis, g, zero));
  CHECK(holonomy_hom_check(heis, g, zero));

  // random agreement across three algebras
  std::vector<Cdga> algebras{torus_model(), heis, os_algebra(pencil3_arr())};
  Rng rng(20260814);
  for (const auto& a : algebras) {
    for (int trial = 0; trial < 50; ++trial) {
      FlatConnection w;
      w.coeffs = Matrix(a.dim(1), g.dim());
      for (std::size_t r = 0; r < w.coeffs.rows(); ++r)
        for (std::size_t c = 0; c < w.coeffs.cols(); ++c)
          w.coeffs.at(r, c) = Scalar(static_cast<int>(rng.int_in(-2, 2)));
      CHECK(mc_check(a, g, w) == holonomy_hom_check(a, g, w));
    }
  }
}

TEST_CASE("flatness equations as polynomials") {
  Cdga torus = torus_model();
  auto vars = mc_variables(torus, sl2());
  CHECK(vars.size() == 6);

  // abelian coefficients: every equation is identically zero
  for (const auto& eq : mc_equations(torus, abelian_lie(3))) CHECK(eq.is_zero());

  // one degree-2 class, three Lie coordinates
  auto eqs = mc_equations(torus, sl2());
  CHECK(eqs.size() == 3);
  bool some_nonzero = false;
  for (const auto& eq : eqs) some_nonzero |= !eq.is_zero();
  CHECK(some_nonzero);

  // evaluation agrees with mc_check
  Cdga heis = heisenberg_model();
  auto heqs = mc_equations(heis, sl2());
  CHECK(heqs.size() == 9);
  Rng rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    FlatConnection w;
    w.coeffs = Matrix(3, 3);
    std::vector<Scalar> point;
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 3; ++c) {
        w.coeffs.at(r, c) = Scalar(static_cast<int>(rng.int_in(-1, 1)));
        point.push_back(w.coeffs.at(r, c));
      }
    bool all_zero = true;
    for (const auto& eq : heqs)
      if (!eq.eval(point).is_zero()) all_zero = false;
    CHECK(all_zero == mc_check(heis, sl2(), w));
  }
}

TEST_CASE("covariant differential squares to zero exactly when flat") {
  Cdga heis = heisenberg_model();
  LieAlgebra g = sl2();
  LieRep ad = adjoint_rep(g);

  FlatConnection ee0 = conn(3, 3, {{{0, 1}, 1}, {{1, 1}, 1}});
  auto mats = aomoto(heis, g, ad, ee0);
  REQUIRE(mats.size() == 2);
  CHECK((mats[1] * mats[0]).is_zero());

  // a (x) e + b (x) f is not flat: the composite detects it
  FlatConnection ef = conn(3, 3, {{{0, 1}, 1}, {{1, 2}, 1}});
  auto bad = aomoto(heis, g, ad, ef);
  CHECK_FALSE((bad[1] * bad[0]).is_zero());
}

TEST_CASE("twisted betti numbers at the trivial connection") {
  Cdga torus = torus_model();
  LieAlgebra g = sl2();
  LieRep ad = adjoint_rep(g);
  FlatConnection zero = conn(2, 3, {});
  CHECK(aomoto_h_dim(torus, g, ad, zero, 0).dim == 3);
  CHECK(aomoto_h_dim(torus, g, ad, zero, 1).dim == 6);
  auto top = aomoto_h_dim(torus, g, ad, zero, 2);
  CHECK(top.truncated);
  CHECK(top.dim == 3);

  CHECK(resonance_membership(torus, g, ad, zero, 1, 6));
  CHECK_FALSE(resonance_membership(torus, g, ad, zero, 1, 7));

  // nontrivial diagonal connection on the full exterior pair
  FlatConnection diag = conn(2, 3, {{{0, 0}, 1}});  // e1 (x) h
  CHECK(mc_check(torus, g, diag));
  CHECK(aomoto_h_dim(torus, g, ad, diag, 0).dim == 1);  // kernel of ad h
  CHECK(aomoto_h_dim(torus, g, ad, diag, 1).dim == 2);
  CHECK(resonance_membership(torus, g, ad, diag, 1, 2));
  CHECK_FALSE(resonance_membership(torus, g, ad, diag, 1, 3));

  // non-flat input is rejected
  Cdga heis = heisenberg_model();
  FlatConnection ef = conn(3, 3, {{{0, 1}, 1}, {{1, 2}, 1}});
  CHECK_THROWS_AS(resonance_membership(heis, g, ad, ef, 1, 1), std::invalid_argument);
}

TEST_CASE("scalar resonance membership") {
  Cdga torus = torus_model();
  CHECK(scalar_resonance_membership(torus, {Scalar(0), Scalar(0)}, 1));
  CHECK_FALSE(scalar_resonance_membership(torus, {Scalar(1), Scalar(0)}, 1));

  Cdga pen = os_algebra(pencil3_arr());
  CHECK(scalar_resonance_membership(pen, {Scalar(1), Scalar(-1), Scalar(0)}, 1));
  CHECK_FALSE(scalar_resonance_membership(pen, {Scalar(1), Scalar(1), Scalar(1)}, 1));

  Cdga heis = heisenberg_model();
  std::vector<Scalar> p{Scalar(0), Scalar(0), Scalar(1)};
  CHECK_THROWS_AS(scalar_resonance_membership(heis, p, 1), std::invalid_argument);
}

TEST_CASE("rank one factorization") {
  Cdga torus = torus_model();
  FlatConnection zero = conn(2, 3, {});
  auto z = rank_one_factor(torus, zero);
  REQUIRE(z.has_value());
  for (const auto& c : z->first) CHECK(c.is_zero());
  for (const auto& c : z->second) CHECK(c.is_zero());
  CHECK(rank_one_locus_membership(torus, zero));

  // rank two coefficient matrix
  FlatConnection r2 = conn(2, 3, {{{0, 0}, 1}, {{1, 1}, 1}});  // a(x)h + b(x)e
  CHECK_FALSE(rank_one_factor(torus, r2).has_value());
  CHECK_FALSE(rank_one_locus_membership(torus, r2));

  // rank one: the outer product must reproduce the coefficients
  FlatConnection r1 = conn(2, 3, {{{0, 1}, 1}, {{0, 2}, 1}, {{1, 1}, 2}, {{1, 2}, 2}});
  auto f = rank_one_factor(torus, r1);
  REQUIRE(f.has_value());
  const auto& [eta, x] = *f;
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 3; ++c)
      CHECK(eta[r] * x[c] == r1.coeffs.at(r, c));
  CHECK(rank_one_locus_membership(torus, r1));

  // factor exists but eta is not closed
  Cdga heis = heisenberg_model();
  FlatConnection ph = conn(3, 3, {{{2, 0}, 1}});  // p (x) h
  CHECK_FALSE(rank_one_factor(heis, ph).has_value());
  CHECK_FALSE(rank_one_locus_membership(heis, ph));
}

TEST_CASE("singular rank one locus") {
  Cdga torus = torus_model();
  LieAlgebra g = sl2();
  LieRep std2 = standard_rep("sl2");
  FlatConnection etae = conn(2, 3, {{{0, 1}, 1}, {{1, 1}, 1}});  // (a+b) (x) e
  CHECK(pi_locus_membership(torus, g, std2, etae));
  FlatConnection etah = conn(2, 3, {{{0, 0}, 1}, {{1, 0}, 1}});  // (a+b) (x) h
  CHECK_FALSE(pi_locus_membership(torus, g, std2, etah));
  CHECK(pi_locus_membership(torus, g, std2, conn(2, 3, {})));
}

TEST_CASE("rank one resonance dichotomy") {
  Cdga ext3 = exterior_model({"u1", "u2", "u3"}, Field::rational);
  LieAlgebra g = sl2();
  LieRep ad = adjoint_rep(g);
  LieRep std2 = standard_rep("sl2");
  std::vector<Scalar> eta{Scalar(1), Scalar(0), Scalar(0)};
  std::vector<Scalar> zero_eta(3);
  std::vector<Scalar> h{Scalar(1), Scalar(0), Scalar(0)};
  std::vector<Scalar> e{Scalar(0), Scalar(1), Scalar(0)};

  // adjoint theta(h) kills h: singular, so membership holds whenever b_1 >= 1
  CHECK(rank_one_resonance_test(ext3, g, ad, eta, h, 1));
  CHECK(rank_one_resonance_test(ext3, g, ad, eta, e, 1));

  // standard theta(h) is invertible and semisimple: reduces to scalar resonance
  CHECK_FALSE(rank_one_resonance_test(ext3, g, std2, eta, h, 1));
  CHECK(rank_one_resonance_test(ext3, g, std2, zero_eta, h, 1));

  // local resonance class in a pencil survives the twist
  Cdga pen = os_algebra(pencil3_arr());
  std::vector<Scalar> res{Scalar(1), Scalar(-1), Scalar(0)};
  CHECK(rank_one_resonance_test(pen, g, std2, res, h, 1));

  Cdga heis = heisenberg_model();
  CHECK_THROWS_AS(rank_one_resonance_test(heis, g, std2, zero_eta, h, 1),
                  std::invalid_argument);
}

TEST_CASE("pullback of connections along morphisms") {
  Cdga torus = torus_model();
  Cdga heis = heisenberg_model();
  CdgaMorphism incl = hirsch_inclusion(torus, heis);
  LieAlgebra g = sl2();

  FlatConnection w = conn(2, 3, {{{0, 1}, 1}});  // a (x) e on the base
  FlatConnection up = pullback_connection(incl, w);
  CHECK(up.coeffs.rows() == 3);
  CHECK(up.coeffs.at(0, 1) == Scalar(1));
  CHECK(up.coeffs.at(2, 1) == Scalar(0));
  CHECK(mc_check(heis, g, up));

  CHECK(in_pullback_image(incl, up));
  auto back = pullback_preimage(incl, up);
  REQUIRE(back.has_value());
  CHECK(back->coeffs == w.coeffs);

  FlatConnection off = conn(3, 3, {{{2, 0}, 1}});  // p (x) h: not from the base
  CHECK_FALSE(in_pullback_image(incl, off));
  CHECK_FALSE(pullback_preimage(incl, off).has_value());

  // curve model mapping onto a pencil: classes pull back to weighted sums
  Arrangement arr = pencil3_arr();
  auto nets = multinet_enumerate(arr, 3, 1);
  REQUIRE(nets.size() == 1);
  AdmissibleModel adm = admissible_morphism(nets[0], arr);
  FlatConnection c1 = conn(2, 3, {{{0, 0}, 1}});  // c_1 (x) h on the curve model
  FlatConnection pulled = pullback_connection(adm.phi, c1);
  // u_1 - u_3 support: +1 on the first class, -1 on the last
  CHECK(pulled.coeffs.at(0, 0) == Scalar(1));
  CHECK(pulled.coeffs.at(1, 0) == Scalar(0));
  CHECK(pulled.coeffs.at(2, 0) == Scalar(-1));
  CHECK(mc_check(os_algebra(arr), g, pulled));
}

static ArtinConnection scaled_artin(const Cdga& a, const LieAlgebra& g,
                                    const TruncatedRing& ring, const MultiPoly& factor,
                                    const FlatConnection& w) {
  ArtinConnection out = artin_zero(a, g, ring);
  for (std::size_t j = 0; j < w.coeffs.rows(); ++j)
    for (std::size_t k = 0; k < w.coeffs.cols(); ++k)
      out.grid[j][k] = ring.reduce(factor.scaled(w.coeffs.at(j, k)));
  return out;
}

TEST_CASE("gauge action basics") {
  Cdga torus = torus_model();
  LieAlgebra g = sl2();
  TruncatedRing t2{{"t"}, 2};
  TruncatedRing t4{{"t"}, 4};

  FlatConnection base = conn(2, 3, {{{0, 1}, 1}, {{1, 1}, 2}});  // (a+2b) (x) e
  ArtinConnection w2 = scaled_artin(torus, g, t2, t2.gen(0), base);
  CHECK(artin_connection_valid(torus, g, t2, w2));
  CHECK(artin_mc_check(torus, g, t2, w2));

  GaugeElement alpha;
  alpha.comps = {t2.gen(0), t2.zero(), t2.gen(0).scaled(Scalar(-3))};
  // to first order the action is trivial
  CHECK(artin_equal(gauge_act(torus, g, t2, alpha, w2), w2));

  // the zero connection is fixed by every gauge transformation
  TruncatedRing t3{{"t"}, 3};
  GaugeElement beta;
  beta.comps = {t3.gen(0), t3.gen(0), t3.mul(t3.gen(0), t3.gen(0))};
  ArtinConnection z = artin_zero(torus, g, t3);
  CHECK(artin_equal(gauge_act(torus, g, t3, beta, z), z));

  // constant-term gauge parameters are rejected
  GaugeElement bad;
  bad.comps = {t2.one(), t2.zero(), t2.zero()};
  CHECK_THROWS_AS(gauge_act(torus, g, t2, bad, w2), std::invalid_argument);
}

TEST_CASE("gauge action preserves flatness") {
  Cdga torus = torus_model();
  LieAlgebra g = sl2();
  TruncatedRing t4{{"t"}, 4};
  Rng rng(777);
  for (int trial = 0; trial < 40; ++trial) {
    // rank-one coefficients with polynomial scale: flat at every order
    FlatConnection base;
    base.coeffs = Matrix(2, 3);
    std::vector<Scalar> eta{Scalar(static_cast<int>(rng.int_in(-2, 2))), Scalar(static_cast<int>(rng.int_in(-2, 2)))};
    std::vector<Scalar> x{Scalar(static_cast<int>(rng.int_in(-2, 2))), Scalar(static_cast<int>(rng.int_in(-2, 2))),
                          Scalar(static_cast<int>(rng.int_in(-2, 2)))};
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 0; c < 3; ++c) base.coeffs.at(r, c) = eta[r] * x[c];
    MultiPoly f = t4.gen(0).scaled(Scalar(static_cast<int>(rng.int_in(-1, 1))));
    f = f + t4.mul(t4.gen(0), t4.gen(0)).scaled(Scalar(static_cast<int>(rng.int_in(-2, 2))));
    ArtinConnection w = scaled_artin(torus, g, t4, f, base);
    REQUIRE(artin_mc_check(torus, g, t4, w));

    GaugeElement alpha;
    alpha.comps.clear();
    for (int k = 0; k < 3; ++k)
      alpha.comps.push_back(t4.gen(0).scaled(Scalar(static_cast<int>(rng.int_in(-2, 2)))));
    ArtinConnection moved = gauge_act(torus, g, t4, alpha, w);
    CHECK(artin_mc_check(torus, g, t4, moved));
  }
}

TEST_CASE("gauge equivalence witnesses") {
  Cdga torus = torus_model();
  LieAlgebra g = sl2();
  TruncatedRing t4{{"t"}, 4};

  FlatConnection base = conn(2, 3, {{{0, 1}, 1}});  // a (x) e
  ArtinConnection w = scaled_artin(torus, g, t4, t4.gen(0), base);
  REQUIRE(artin_mc_check(torus, g, t4, w));

  Rng rng(4242);
  for (int trial = 0; trial < 15; ++trial) {
    GaugeElement alpha;
    alpha.comps.clear();
    for (int k = 0; k < 3; ++k)
      alpha.comps.push_back(t4.gen(0).scaled(Scalar(static_cast<int>(rng.int_in(-2, 2)))));
    ArtinConnection moved = gauge_act(torus, g, t4, alpha, w);
    auto witness = gauge_equivalent(torus, g, t4, w, moved);
    REQUIRE(witness.has_value());
    CHECK(artin_equal(gauge_act(torus, g, t4, *witness, w), moved));
  }

  // the augmented gauge group is trivial: only equal connections relate
  ArtinConnection other = scaled_artin(torus, g, t4, t4.gen(0).scaled(Scalar(2)), base);
  CHECK_FALSE(gauge_equivalent(torus, g, t4, w, other, true).has_value());
  auto self = gauge_equivalent(torus, g, t4, w, w, true);
  REQUIRE(self.has_value());
  for (const auto& c : self->comps) CHECK(c.is_zero());
}

TEST_CASE("order by order lifting") {
  Cdga torus = torus_model();
  Cdga heis = heisenberg_model();
  LieAlgebra g = sl2();
  TruncatedRing t3{{"t"}, 3};

  // t (a (x) e + b (x) f): the order-2 defect t^2 ab (x) h is a nonzero
  // cohomology class on the torus, so the lift is obstructed there
  FlatConnection ef = conn(2, 3, {{{0, 1}, 1}, {{1, 2}, 1}});
  ArtinConnection wt = scaled_artin(torus, g, t3, t3.gen(0), ef);
  LiftResult torus_lift = mc_lift(torus, g, t3, wt, 2);
  CHECK_FALSE(torus_lift.lifted);
  CHECK(torus_lift.obstruction_str.find("a*b") != std::string::npos);
  CHECK(torus_lift.obstruction_str.find("h") != std::string::npos);

  // on the heisenberg model the same class is exact: d(p) absorbs it
  FlatConnection ef3 = conn(3, 3, {{{0, 1}, 1}, {{1, 2}, 1}});
  ArtinConnection wh = scaled_artin(heis, g, t3, t3.gen(0), ef3);
  LiftResult heis_lift = mc_lift(heis, g, t3, wh, 2);
  CHECK(heis_lift.lifted);
  CHECK(artin_mc_check(heis, g, t3, heis_lift.lift));

  // rank-one connections are already flat at every order
  TruncatedRing t4{{"t"}, 4};
  FlatConnection r1 = conn(2, 3, {{{0, 1}, 1}, {{1, 1}, 1}});
  ArtinConnection wr = scaled_artin(torus, g, t4, t4.gen(0), r1);
  LiftResult l2 = mc_lift(torus, g, t4, wr, 2);
  CHECK(l2.lifted);
  LiftResult l3 = mc_lift(torus, g, t4, l2.lift, 3);
  CHECK(l3.lifted);
  CHECK(artin_mc_check(torus, g, t4, l3.lift));

  // ring too small for the requested order
  CHECK_THROWS_AS(mc_lift(torus, g, t3, wt, 3), std::invalid_argument);
  // input must already be flat modulo t^k
  ArtinConnection bad = scaled_artin(torus, g, t4, t4.gen(0), ef);
  CHECK_THROWS_AS(mc_lift(torus, g, t4, bad, 3), std::invalid_argument);
}
