#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jumploci/matrix.hpp"
#include "jumploci/multipoly.hpp"
#include "jumploci/rng.hpp"
#include "jumploci/scalar.hpp"

using namespace jumploci;

static Matrix random_matrix(Rng& rng, std::size_t r, std::size_t c, Field f) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rng.scalar(f);
  return m;
}

TEST_CASE("scalar field arithmetic") {
  Scalar a(BigRat(1, 3)), b(BigRat(1, 6));
  CHECK(a + b == Scalar(BigRat(1, 2)));
  CHECK(a * Scalar(3) == Scalar(1));
  CHECK((a / b) == Scalar(2));
  Scalar z = Scalar(2) + Scalar::i() * Scalar(3);
  CHECK(z * z.conj() == Scalar(13));
  CHECK(z * z.inv() == Scalar(1));
  CHECK_THROWS_AS(Scalar(0).inv(), std::domain_error);
  CHECK(parse_rat("-7/2") == BigRat(-7, 2));
  CHECK(parse_rat("5") == BigRat(5));
  CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("x"), std::invalid_argument);
  CHECK(Scalar(BigRat(-3, 4)).str() == "-3/4");
  CHECK((Scalar(1) - Scalar::i()).str() == "1-1i");
}

TEST_CASE("conjugation is a field automorphism") {
  Rng rng(41);
  for (int t = 0; t < 100; ++t) {
    Scalar a = rng.scalar(Field::gaussian), b = rng.scalar(Field::gaussian);
    CHECK((a + b).conj() == a.conj() + b.conj());
    CHECK((a * b).conj() == a.conj() * b.conj());
    if (!b.is_zero()) CHECK((a / b).conj() == a.conj() / b.conj());
  }
}

TEST_CASE("rank and kernel frozen cases") {
  Matrix m = Matrix::from_rows({{Scalar(1), Scalar(2)}, {Scalar(2), Scalar(4)}});
  CHECK(m.rank() == 1);

  Matrix k = Matrix::from_rows({{Scalar(1), Scalar(1), Scalar(0)}});
  auto basis = k.kernel_basis();
  REQUIRE(basis.size() == 2);
  for (const auto& v : basis) {
    auto img = k.apply(v);
    for (const auto& x : img) CHECK(x.is_zero());
  }

  Matrix d = Matrix::from_rows({{Scalar(2), Scalar(0)}, {Scalar(0), Scalar(0)}});
  CHECK_FALSE(d.is_nilpotent());
  CHECK(d.is_singular());

  Matrix id = Matrix::identity(3);
  CHECK_FALSE(id.is_nilpotent());
  CHECK_FALSE(id.is_singular());

  Matrix up(3, 3);
  up.at(0, 1) = Scalar(5);
  up.at(1, 2) = Scalar(BigRat(-1, 2));
  CHECK(up.is_nilpotent());
  CHECK(up.is_singular());
}

TEST_CASE("gaussian entries participate in elimination") {
  Matrix m = Matrix::from_rows({{Scalar::i(), Scalar(1)}, {Scalar(1), -Scalar::i()}});
  CHECK(m.rank() == 1);  // row2 = -i * row1
  CHECK(m.det() == Scalar(0));
  Matrix n = Matrix::from_rows({{Scalar::i(), Scalar(1)}, {Scalar(1), Scalar::i()}});
  CHECK(n.rank() == 2);
  CHECK(n.det() == Scalar(BigRat(-2), BigRat(0)));
}

TEST_CASE("rank equals transpose rank and rank-nullity") {
  for (Field f : {Field::rational, Field::gaussian}) {
    Rng rng(f == Field::rational ? 7 : 8);
    for (int t = 0; t < 40; ++t) {
      std::size_t r = static_cast<std::size_t>(rng.int_in(0, 5));
      std::size_t c = static_cast<std::size_t>(rng.int_in(0, 5));
      Matrix m = random_matrix(rng, r, c, f);
      CHECK(m.rank() == m.transpose().rank());
      CHECK(m.rank() + m.kernel_basis().size() == c);
    }
  }
}

TEST_CASE("solve and inverse") {
  Rng rng(11);
  for (int t = 0; t < 30; ++t) {
    Matrix m = random_matrix(rng, 3, 3, Field::rational);
    std::vector<Scalar> x = rng.vector(3, Field::rational);
    auto b = m.apply(x);
    auto sol = m.solve(b);
    REQUIRE(sol.has_value());
    CHECK(m.apply(*sol) == b);
    if (!m.is_singular()) {
      CHECK(m * m.inverse() == Matrix::identity(3));
      CHECK(*sol == x);
    }
  }
  Matrix m = Matrix::from_rows({{Scalar(1), Scalar(0)}, {Scalar(1), Scalar(0)}});
  CHECK_FALSE(m.solve({Scalar(1), Scalar(2)}).has_value());
  CHECK(m.in_column_span({Scalar(3), Scalar(3)}));
  CHECK_FALSE(m.in_column_span({Scalar(3), Scalar(4)}));
}

TEST_CASE("rref is idempotent and deterministic") {
  Rng rng(13);
  for (int t = 0; t < 20; ++t) {
    Matrix m = random_matrix(rng, 4, 5, Field::rational);
    Matrix r = m.rref();
    CHECK(r.rref() == r);
    CHECK(m.rref() == r);
  }
}

TEST_CASE("polynomial evaluation is a ring homomorphism") {
  std::vector<std::string> vars{"x", "y", "z"};
  Rng rng(17);
  auto random_poly = [&](Field f) {
    MultiPoly p(vars);
    int nterms = static_cast<int>(rng.int_in(0, 5));
    for (int i = 0; i < nterms; ++i) {
      MultiPoly::Exp e{static_cast<unsigned>(rng.int_in(0, 3)),
                       static_cast<unsigned>(rng.int_in(0, 3)),
                       static_cast<unsigned>(rng.int_in(0, 2))};
      p.add_term(e, rng.scalar(f));
    }
    return p;
  };
  for (int t = 0; t < 200; ++t) {
    Field f = t % 2 ? Field::gaussian : Field::rational;
    MultiPoly p = random_poly(f), q = random_poly(f);
    auto pt = rng.vector(3, f);
    CHECK((p + q).eval(pt) == p.eval(pt) + q.eval(pt));
    CHECK((p * q).eval(pt) == p.eval(pt) * q.eval(pt));
  }
}

TEST_CASE("polynomial truncation ring") {
  TruncatedRing ring{{"t"}, 4};
  MultiPoly t = ring.gen(0);
  MultiPoly p = ring.one() + t;
  MultiPoly cube = ring.mul(ring.mul(p, p), p);
  // (1+t)^3 = 1 + 3t + 3t^2 + t^3, intact below the cutoff
  CHECK(cube.coeff({0}) == Scalar(1));
  CHECK(cube.coeff({1}) == Scalar(3));
  CHECK(cube.coeff({2}) == Scalar(3));
  CHECK(cube.coeff({3}) == Scalar(1));
  MultiPoly fourth = ring.mul(cube, p);
  CHECK(fourth.coeff({3}) == Scalar(4));
  CHECK(fourth.degree() < 4);  // t^4 killed
  CHECK(ring.in_max_ideal(t));
  CHECK_FALSE(ring.in_max_ideal(p));
}

TEST_CASE("polynomial display and degree helpers") {
  std::vector<std::string> vars{"a", "b"};
  MultiPoly p(vars);
  p.add_term({2, 0}, Scalar(1));
  p.add_term({0, 1}, Scalar(BigRat(-1, 2)));
  CHECK(p.degree() == 2);
  CHECK(p.homogeneous_part(1).coeff({0, 1}) == Scalar(BigRat(-1, 2)));
  CHECK(p.homogeneous_part(2).coeff({2, 0}) == Scalar(1));
  CHECK(MultiPoly(vars).str() == "0");
  p.add_term({2, 0}, Scalar(-1));  // cancels to drop the term
  CHECK(p.terms().size() == 1);
}
