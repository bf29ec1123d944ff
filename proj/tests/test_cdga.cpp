#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jumploci/arrangement.hpp"
#include "jumploci/cdga.hpp"
#include "jumploci/io.hpp"
#include "jumploci/rng.hpp"

using namespace jumploci;

static Cdga heisenberg_model() {
  Cdga torus = exterior_model({"a", "b"}, Field::rational);
  HirschData h;
  h.generators = {"p"};
  h.tau = Matrix(1, 1);
  h.tau.at(0, 0) = Scalar(1);
  return hirsch_extend(torus, h);
}

TEST_CASE("exterior algebra validates") {
  Cdga a = exterior_model({"e1", "e2"}, Field::rational);
  CHECK(validate(a).ok());
  CHECK(a.dim(1) == 2);
  CHECK(a.dim(2) == 1);
  CHECK(cohomology_dim(a, 1) == 2);
}

TEST_CASE("validate reports synthetic violations") {
  // differential with the wrong shape
  Cdga a = exterior_model({"e1", "e2"}, Field::rational);
  a.diff[1] = Matrix(2, 2);
  CHECK_FALSE(validate(a).ok());

  // disconnected: two unit-degree elements
  Cdga b = exterior_model({"e1"}, Field::rational);
  b.basis[0].push_back("one_more");
  b.diff[0] = Matrix(b.dim(1), 2);
  CHECK_FALSE(validate(b).ok());

  // broken graded commutativity: e1*e2 = +e2*e1
  Cdga c = exterior_model({"e1", "e2"}, Field::rational);
  c.products[{1, 1}].at(0, 1 * 2 + 0) = Scalar(1);
  CHECK_FALSE(validate(c).ok());

  // reused basis name across degrees
  Cdga e = exterior_model({"e1", "e2"}, Field::rational);
  e.basis[2][0] = "e1";
  CHECK_FALSE(validate(e).ok());
}

TEST_CASE("unit closedness and d compose to zero are checked") {
  // d(x) = u, d(u) nonzero on a degree-shifted synthetic table
  Cdga a;
  a.field = Field::rational;
  a.max_degree = 2;
  a.basis = {{"1"}, {"x", "u"}, {"w"}};
  a.products[{1, 1}] = Matrix(1, 4);
  a.diff.resize(2);
  a.diff[0] = Matrix(2, 1);
  a.diff[1] = Matrix(1, 2);
  a.diff[1].at(0, 0) = Scalar(1);  // d(x) = w: fine by itself
  CHECK(validate(a).ok());

  // now force d(d = 0) to fail through degree 0 -> 1 -> 2
  Cdga b = a;
  b.diff[0].at(0, 0) = Scalar(1);  // d(1) = x, so d(d(1)) = w != 0
  auto rep = validate(b);
  CHECK_FALSE(rep.ok());
  bool mentions_d = false;
  for (const auto& v : rep.violations)
    if (v.find("d") != std::string::npos) mentions_d = true;
  CHECK(mentions_d);
}

TEST_CASE("heisenberg model cohomology") {
  Cdga h = heisenberg_model();
  CHECK(validate(h).ok());
  CHECK(cohomology_dim(h, 1) == 2);
  auto top = cohomology(h, 2);
  CHECK(top.truncated);
  CHECK(top.dim == 2);  // a*p, b*p survive; a*b is exact
}

TEST_CASE("os algebra of a pencil of three lines") {
  Arrangement arr;
  arr.ambient_rank = 2;
  arr.labels = {"l1", "l2", "l3"};
  arr.covectors = {{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(1)}, {Scalar(1), Scalar(1)}};
  Cdga os = os_algebra(arr);
  CHECK(validate(os).ok());
  CHECK(cohomology_dim(os, 1) == 3);
  CHECK(cohomology(os, 2).dim == 2);
}

TEST_CASE("hirsch extension shapes and basis order") {
  Cdga torus = exterior_model({"a", "b"}, Field::rational);
  HirschData h;
  h.generators = {"p"};
  h.tau = Matrix(1, 1);
  h.tau.at(0, 0) = Scalar(1);
  Cdga ext = hirsch_extend(torus, h);
  CHECK(ext.basis[1] == std::vector<std::string>{"a", "b", "p"});
  CHECK(ext.basis[2] == std::vector<std::string>{"a*b", "a*p", "b*p"});
  // d(p) = a*b
  CHECK(ext.d(1).at(0, 2) == Scalar(1));
  CHECK(validate(ext).ok());
}

TEST_CASE("hirsch extension with zero tau adds a circle factor") {
  Cdga torus = exterior_model({"a", "b"}, Field::rational);
  HirschData h;
  h.generators = {"p"};
  h.tau = Matrix(1, 1);
  Cdga ext = hirsch_extend(torus, h);
  CHECK(validate(ext).ok());
  CHECK(cohomology_dim(ext, 1) == cohomology_dim(torus, 1) + 1);

  HirschData two;
  two.generators = {"p", "q"};
  two.tau = Matrix(1, 2);
  Cdga ext2 = hirsch_extend(torus, two);
  CHECK(cohomology_dim(ext2, 1) == cohomology_dim(torus, 1) + 2);
}

TEST_CASE("hirsch extension over a boolean os base") {
  Arrangement arr;
  arr.ambient_rank = 2;
  arr.labels = {"e1", "e2"};
  arr.covectors = {{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(1)}};
  Cdga os = os_algebra(arr);
  HirschData h;
  h.generators = {"p"};
  h.tau = Matrix(os.dim(2), 1);
  h.tau.at(0, 0) = Scalar(1);  // tau(p) = e1 e2
  Cdga ext = hirsch_extend(os, h);
  CHECK(validate(ext).ok());
  CHECK(cohomology_dim(ext, 1) == 2);
}

TEST_CASE("hirsch extension input errors") {
  Cdga torus = exterior_model({"a", "b"}, Field::rational);
  HirschData bad_shape;
  bad_shape.generators = {"p"};
  bad_shape.tau = Matrix(2, 1);  // base A^2 is 1-dimensional
  CHECK_THROWS_AS(hirsch_extend(torus, bad_shape), std::invalid_argument);

  HirschData collide;
  collide.generators = {"a"};
  collide.tau = Matrix(1, 1);
  CHECK_THROWS_AS(hirsch_extend(torus, collide), std::invalid_argument);
}

TEST_CASE("hirsch inclusion is a valid morphism") {
  Cdga torus = exterior_model({"a", "b"}, Field::rational);
  HirschData h;
  h.generators = {"p"};
  h.tau = Matrix(1, 1);
  h.tau.at(0, 0) = Scalar(1);
  Cdga ext = hirsch_extend(torus, h);
  CdgaMorphism incl = hirsch_inclusion(torus, ext);
  CHECK(validate_morphism(incl).ok());

  // breaking the degree-1 map must surface as a violation
  CdgaMorphism broken = incl;
  broken.maps[1].at(2, 0) = Scalar(1);  // a also hits p: products stop matching
  CHECK_FALSE(validate_morphism(broken).ok());
}

TEST_CASE("morphism connectivity ladder") {
  Cdga small = exterior_model({"e1"}, Field::rational);
  Cdga big = exterior_model({"e1", "e2"}, Field::rational);
  CdgaMorphism incl;
  incl.source = small;
  incl.target = big;
  incl.maps = {Matrix::identity(1), Matrix(2, 1), Matrix(1, 0)};
  incl.maps[1].at(0, 0) = Scalar(1);
  REQUIRE(validate_morphism(incl).ok());
  CHECK(morphism_connectivity(incl, 0).connected);
  CHECK_FALSE(morphism_connectivity(incl, 1).connected);

  CdgaMorphism id;
  id.source = big;
  id.target = big;
  id.maps = {Matrix::identity(1), Matrix::identity(2), Matrix::identity(1)};
  CHECK(morphism_connectivity(id, 0).connected);
  CHECK(morphism_connectivity(id, 1).connected);

  // unit inclusion k -> /\(e): H^0 iso, H^1 injective from zero
  Cdga point = exterior_model({}, Field::rational);
  CdgaMorphism unit;
  unit.source = point;
  unit.target = small;
  unit.maps = {Matrix::identity(1), Matrix(1, 0), Matrix(0, 0)};
  REQUIRE(validate_morphism(unit).ok());
  CHECK(morphism_connectivity(unit, 0).connected);
  CHECK_FALSE(morphism_connectivity(unit, 1).connected);
}

TEST_CASE("cocycle span morphism is 0-connected on the heisenberg model") {
  Cdga h = heisenberg_model();
  CdgaMorphism hull = cocycle_span_morphism(h, "v");
  CHECK(validate_morphism(hull).ok());
  CHECK(hull.source.dim(1) == 2);
  CHECK(morphism_connectivity(hull, 0).connected);
}

TEST_CASE("shipped example algebras validate") {
  for (const char* name : {"torus2.json", "heisenberg.json", "exterior3.json"}) {
    Cdga a = load_cdga(std::string(JUMPLOCI_DATA_DIR) + "/cdga/" + name);
    CHECK(validate(a).ok());
  }
}
