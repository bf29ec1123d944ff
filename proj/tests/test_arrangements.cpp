#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "jumploci/arrangement.hpp"
#include "jumploci/decomposition.hpp"
#include "jumploci/io.hpp"
#include "jumploci/multinet.hpp"

using namespace jumploci;

static std::string data_path(const std::string& rel) {
  return std::string(JUMPLOCI_DATA_DIR) + "/" + rel;
}

static Arrangement braid4() { return load_arrangement(data_path("arrangements/braid_a3.json")); }

static Arrangement pencil3_arr() {
  return load_arrangement(data_path("arrangements/pencil3.json"));
}

TEST_CASE("arrangement validation") {
  CHECK(arrangement_valid(braid4()).ok());

  Arrangement dup = pencil3_arr();
  dup.labels[1] = dup.labels[0];
  CHECK_FALSE(arrangement_valid(dup).ok());

  Arrangement prop = pencil3_arr();
  prop.covectors[1] = {Scalar(2), Scalar(0)};  // proportional to the first
  CHECK_FALSE(arrangement_valid(prop).ok());

  Arrangement zero = pencil3_arr();
  zero.covectors[2] = {Scalar(0), Scalar(0)};
  CHECK_FALSE(arrangement_valid(zero).ok());

  Arrangement ragged = pencil3_arr();
  ragged.covectors[2] = {Scalar(1)};
  CHECK_FALSE(arrangement_valid(ragged).ok());
}

TEST_CASE("rank two flats of the braid arrangement") {
  Arrangement arr = braid4();
  auto flats = rank2_flats(arr);
  std::vector<std::vector<std::size_t>> triples, doubles;
  for (const auto& f : flats)
    (f.size() == 3 ? triples : doubles).push_back(f);
  CHECK(triples.size() == 4);
  CHECK(doubles.size() == 3);
  // hyperplane order: h12 h13 h14 h23 h24 h34
  std::vector<std::vector<std::size_t>> expect_triples{
      {0, 1, 3}, {0, 2, 4}, {1, 2, 5}, {3, 4, 5}};
  CHECK(triples == expect_triples);
  std::vector<std::vector<std::size_t>> expect_doubles{{0, 5}, {1, 4}, {2, 3}};
  CHECK(doubles == expect_doubles);

  // every pair lies in exactly one flat
  std::size_t pair_count = 0;
  for (const auto& f : flats) pair_count += f.size() * (f.size() - 1) / 2;
  CHECK(pair_count == 15);
}

TEST_CASE("cohomology ring dimensions") {
  Cdga braid_os = os_algebra(braid4());
  CHECK(validate(braid_os).ok());
  CHECK(cohomology_dim(braid_os, 1) == 6);
  CHECK(cohomology(braid_os, 2).dim == 11);

  Cdga pen = os_algebra(pencil3_arr());
  CHECK(cohomology_dim(pen, 1) == 3);
  CHECK(cohomology(pen, 2).dim == 2);

  Arrangement line = load_arrangement(data_path("arrangements/single_line.json"));
  Cdga one = os_algebra(line);
  CHECK(cohomology_dim(one, 1) == 1);
  CHECK(cohomology(one, 2).dim == 0);

  Arrangement b3 = load_arrangement(data_path("arrangements/boolean3.json"));
  Cdga bos = os_algebra(b3);
  CHECK(cohomology_dim(bos, 1) == 3);
  CHECK(cohomology(bos, 2).dim == 3);

  Arrangement b6 = load_arrangement(data_path("arrangements/boolean6.json"));
  CHECK(cohomology(os_algebra(b6), 2).dim == 15);
}

TEST_CASE("quotient from the free exterior model") {
  Arrangement arr = braid4();
  CdgaMorphism q = boolean_morphism(arr);
  CHECK(validate_morphism(q).ok());
  CHECK(q.source.dim(2) == 15);
  CHECK(q.target.dim(2) == 11);
  CHECK(q.maps[1] == Matrix::identity(6));
  CHECK(q.maps[2].rank() == 11);  // surjective in degree 2
}

TEST_CASE("multinet enumeration counts") {
  Arrangement arr = braid4();
  auto nets = multinet_enumerate(arr, 3, 1);
  CHECK(nets.size() == 5);
  std::size_t essential = 0;
  for (const auto& n : nets) {
    CHECK(multinet_valid(arr, n).ok());
    CHECK(n.k == 3);
    if (n.base.size() == 6) ++essential;
  }
  CHECK(essential == 1);

  auto pen_nets = multinet_enumerate(pencil3_arr(), 3, 1);
  CHECK(pen_nets.size() == 1);
  CHECK(pen_nets[0].base.size() == 3);

  Arrangement b3 = load_arrangement(data_path("arrangements/boolean3.json"));
  CHECK(multinet_enumerate(b3, 3, 1).empty());
  CHECK(multinet_enumerate(b3, 3, 2).empty());

  Arrangement big;
  big.ambient_rank = 2;
  for (int i = 0; i < 13; ++i) {
    big.labels.push_back("x" + std::to_string(i));
    big.covectors.push_back({Scalar(1), Scalar(i)});
  }
  CHECK_THROWS_AS(multinet_enumerate(big, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(multinet_enumerate(arr, 5, 1), std::invalid_argument);
}

TEST_CASE("multinet axioms reject bad partitions") {
  Arrangement arr = braid4();

  // unequal weighted class sizes
  auto nets = load_multinets(arr, data_path("multinets/braid_corrupt.json"));
  REQUIRE(nets.size() == 1);
  auto rep = multinet_valid(arr, nets[0]);
  CHECK_FALSE(rep.ok());

  // equal sizes but a flat sees two classes with unbalanced counts
  Multinet bad;
  bad.base = {0, 1, 2, 3, 4, 5};
  bad.k = 3;
  bad.cls = {0, 0, 1, 1, 2, 2};
  bad.mult = {1, 1, 1, 1, 1, 1};
  CHECK_FALSE(multinet_valid(arr, bad).ok());
}

TEST_CASE("class products lie in a pencil") {
  Arrangement arr = braid4();
  auto nets = multinet_enumerate(arr, 3, 1);
  for (const auto& n : nets) {
    auto pencil = multinet_to_pencil(n, arr);
    REQUIRE(pencil.has_value());
    REQUIRE(pencil->constants.size() == 1);
    // Q_3 = a Q_1 + b Q_2 with a = -b for lines through a common point
    CHECK(pencil->constants[0].first == Scalar(-1));
    CHECK(pencil->constants[0].second == Scalar(1));
  }

  // moving one hyperplane across classes of the essential net breaks it
  for (const auto& n : nets)
    if (n.base.size() == 6) {
      Multinet wrong = n;
      std::swap(wrong.cls[0], wrong.cls[1]);
      CHECK_FALSE(multinet_valid(arr, wrong).ok());
    }
}

TEST_CASE("weighted class sums") {
  Arrangement arr = braid4();
  auto nets = multinet_enumerate(arr, 3, 1);
  const Multinet* essential = nullptr;
  for (const auto& n : nets)
    if (n.base.size() == 6) essential = &n;
  REQUIRE(essential != nullptr);
  for (std::size_t i = 0; i < 3; ++i) {
    auto u = weighted_class_sum(*essential, arr, i);
    REQUIRE(u.size() == 6);
    Scalar total(0);
    std::size_t support = 0;
    for (const auto& c : u) {
      total += c;
      if (!c.is_zero()) ++support;
    }
    CHECK(total == Scalar(2));  // two lines per class, multiplicity one
    CHECK(support == 2);
  }
}

TEST_CASE("admissible morphisms have isotropic image") {
  Arrangement arr = braid4();
  Cdga os = os_algebra(arr);
  auto nets = multinet_enumerate(arr, 3, 1);
  for (const auto& n : nets) {
    AdmissibleModel m = admissible_morphism(n, arr);
    CHECK(validate_morphism(m.phi).ok());
    CHECK(m.phi.source.dim(1) == 2);
    CHECK(m.phi.maps[1].rank() == 2);
    CHECK(morphism_connectivity(m.phi, 0).connected);

    // image vectors multiply to zero in the quotient ring
    for (std::size_t c1 = 0; c1 < 2; ++c1)
      for (std::size_t c2 = 0; c2 < 2; ++c2) {
        auto v1 = m.phi.maps[1].col(c1);
        auto v2 = m.phi.maps[1].col(c2);
        auto prod = os.multiply(1, v1, 1, v2);
        for (const auto& coeff : prod) CHECK(coeff.is_zero());
      }
  }
}

TEST_CASE("resonance components of the braid arrangement") {
  Arrangement arr = braid4();
  auto nets = multinet_enumerate(arr, 3, 1);
  std::vector<AdmissibleModel> models;
  for (const auto& n : nets) models.push_back(admissible_morphism(n, arr));
  auto comps = resonance_components(arr, models);
  CHECK(comps.size() == 5);
  for (const auto& c : comps) CHECK(c.dim() == 2);

  // local and essential tags both present
  bool has_flat_tag = false, has_model_tag = false;
  for (const auto& c : comps) {
    if (c.tag.find("flat") != std::string::npos) has_flat_tag = true;
    if (c.tag.find("multinet") != std::string::npos) has_model_tag = true;
  }
  CHECK(has_flat_tag);
  CHECK(has_model_tag);

  // the essential component contains the difference of class sums
  const Multinet* essential = nullptr;
  for (const auto& n : nets)
    if (n.base.size() == 6) essential = &n;
  auto u1 = weighted_class_sum(*essential, arr, 0);
  auto u3 = weighted_class_sum(*essential, arr, 2);
  std::vector<Scalar> diff(6);
  for (std::size_t i = 0; i < 6; ++i) diff[i] = u1[i] - u3[i];
  bool contained = false;
  for (const auto& c : comps) contained |= c.contains(diff);
  CHECK(contained);

  // pencil of three lines: the local flat and the multinet image coincide
  Arrangement pen = pencil3_arr();
  auto pen_nets = multinet_enumerate(pen, 3, 1);
  std::vector<AdmissibleModel> pen_models;
  for (const auto& n : pen_nets) pen_models.push_back(admissible_morphism(n, pen));
  auto pen_comps = resonance_components(pen, pen_models);
  CHECK(pen_comps.size() == 1);
  CHECK(pen_comps[0].dim() == 2);

  // boolean: no components at all
  Arrangement b3 = load_arrangement(data_path("arrangements/boolean3.json"));
  CHECK(resonance_components(b3, {}).empty());
}

TEST_CASE("subspace canonical form") {
  Matrix rows(2, 3);
  rows.at(0, 0) = Scalar(2);
  rows.at(0, 2) = Scalar(2);
  rows.at(1, 1) = Scalar(1);
  Subspace s = row_span(rows, "s");
  Matrix other(2, 3);
  other.at(0, 0) = Scalar(1);
  other.at(0, 1) = Scalar(3);
  other.at(0, 2) = Scalar(1);
  other.at(1, 1) = Scalar(-1);
  Subspace t = row_span(other, "t");
  CHECK(s.basis_rows == t.basis_rows);
  CHECK(s.contains({Scalar(1), Scalar(5), Scalar(1)}));
  CHECK_FALSE(s.contains({Scalar(0), Scalar(0), Scalar(1)}));
  CHECK(s.contains(t));
}

TEST_CASE("rank reduction preserves the intersection pattern") {
  Arrangement b4 = load_arrangement(data_path("arrangements/boolean4.json"));
  REQUIRE(b4.ambient_rank == 4);
  Arrangement cut = reduce_rank(b4, 11);
  CHECK(cut.ambient_rank == 3);
  CHECK(cut.size() == 4);
  CHECK(arrangement_valid(cut).ok());
  CHECK(rank2_flats(cut) == rank2_flats(b4));
  CHECK(cohomology(os_algebra(cut), 2).dim == cohomology(os_algebra(b4), 2).dim);

  // rank <= 3 input is untouched
  Arrangement same = reduce_rank(braid4(), 5);
  CHECK(same.covectors == braid4().covectors);
}

TEST_CASE("sampled membership for resonance components") {
  Arrangement arr = pencil3_arr();
  auto nets = multinet_enumerate(arr, 3, 1);
  std::vector<AdmissibleModel> models;
  for (const auto& n : nets) models.push_back(admissible_morphism(n, arr));
  auto rep = verify_resonance_components(arr, models, 12, 5);
  CHECK(rep.pass());
  CHECK(rep.command == "resonance-components");
  CHECK(rep.seed == 5);
  CHECK(rep.rng_algorithm == std::string("mt19937_64"));
  for (const auto& c : rep.checks) CHECK(c.samples == c.passes);
}
