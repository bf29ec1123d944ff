#include "jumploci/arrangement.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "jumploci/rng.hpp"

namespace jumploci {

namespace {

/* Canonical key for the 2-dimensional span of two covectors. */
std::string span_key(const std::vector<Scalar>& u, const std::vector<Scalar>& v) {
  Matrix m = Matrix::from_rows({u, v}).rref();
  std::string key;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) key += m.at(i, j).str() + ",";
  return key;
}

bool proportional(const std::vector<Scalar>& u, const std::vector<Scalar>& v) {
  return Matrix::from_rows({u, v}).rank() <= 1;
}

}  // namespace

ArrangementReport arrangement_valid(const Arrangement& arr) {
  ArrangementReport rep;
  if (arr.ambient_rank == 0) rep.violations.push_back("ambient rank is zero");
  if (arr.labels.size() != arr.covectors.size())
    rep.violations.push_back("label count differs from hyperplane count");
  for (std::size_t i = 0; i < arr.covectors.size(); ++i) {
    if (arr.covectors[i].size() != arr.ambient_rank) {
      rep.violations.push_back("covector " + std::to_string(i) + " has wrong arity");
      continue;
    }
    bool zero = true;
    for (const auto& c : arr.covectors[i])
      if (!c.is_zero()) zero = false;
    if (zero) rep.violations.push_back("covector " + std::to_string(i) + " is zero");
  }
  for (std::size_t i = 0; i < arr.labels.size(); ++i)
    for (std::size_t j = i + 1; j < arr.labels.size(); ++j)
      if (arr.labels[i] == arr.labels[j])
        rep.violations.push_back("duplicate label " + arr.labels[i]);
  if (!rep.ok()) return rep;
  for (std::size_t i = 0; i < arr.size(); ++i)
    for (std::size_t j = i + 1; j < arr.size(); ++j)
      if (proportional(arr.covectors[i], arr.covectors[j]))
        rep.violations.push_back("hyperplanes " + arr.labels[i] + " and " + arr.labels[j] +
                                 " coincide");
  return rep;
}

std::vector<std::vector<std::size_t>> rank2_flats(const Arrangement& arr) {
  std::map<std::string, std::vector<std::size_t>> buckets;
  for (std::size_t i = 0; i < arr.size(); ++i)
    for (std::size_t j = i + 1; j < arr.size(); ++j) {
      auto& flat = buckets[span_key(arr.covectors[i], arr.covectors[j])];
      for (std::size_t h : {i, j})
        if (std::find(flat.begin(), flat.end(), h) == flat.end()) flat.push_back(h);
    }
  std::vector<std::vector<std::size_t>> flats;
  for (auto& [key, flat] : buckets) {
    std::sort(flat.begin(), flat.end());
    flats.push_back(flat);
  }
  std::sort(flats.begin(), flats.end());
  return flats;
}

Arrangement reduce_rank(const Arrangement& arr, std::uint64_t seed) {
  if (arr.ambient_rank <= 3) return arr;
  auto rep = arrangement_valid(arr);
  if (!rep.ok()) throw std::invalid_argument("reduce_rank: invalid arrangement");
  auto before = rank2_flats(arr);
  Rng rng(seed);
  for (int attempt = 0; attempt < 64; ++attempt) {
    // Random rational 3 x rank slice; covector restriction = covector
    // composed with the inclusion of the slice.
    Matrix slice(arr.ambient_rank, 3);
    for (std::size_t i = 0; i < slice.rows(); ++i)
      for (std::size_t j = 0; j < slice.cols(); ++j)
        slice.at(i, j) = rng.scalar(arr.field);
    Arrangement cut;
    cut.field = arr.field;
    cut.ambient_rank = 3;
    cut.labels = arr.labels;
    bool degenerate = false;
    for (const auto& cov : arr.covectors) {
      std::vector<Scalar> restricted(3);
      for (std::size_t j = 0; j < 3; ++j) {
        Scalar s(0);
        for (std::size_t i = 0; i < arr.ambient_rank; ++i) s += cov[i] * slice.at(i, j);
        restricted[j] = s;
      }
      bool zero = true;
      for (const auto& c : restricted)
        if (!c.is_zero()) zero = false;
      if (zero) degenerate = true;
      cut.covectors.push_back(std::move(restricted));
    }
    if (degenerate || !arrangement_valid(cut).ok()) continue;
    if (rank2_flats(cut) == before) return cut;
  }
  throw std::runtime_error("reduce_rank: no generic slice found");
}

Cdga os_algebra(const Arrangement& arr) {
  auto rep = arrangement_valid(arr);
  if (!rep.ok()) throw std::invalid_argument("os_algebra: " + rep.violations.front());
  auto flats = rank2_flats(arr);
  std::size_t n = arr.size();

  // flat id and position within flat, per hyperplane pair
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> flat_of;
  for (std::size_t f = 0; f < flats.size(); ++f)
    for (std::size_t s = 0; s < flats[f].size(); ++s)
      for (std::size_t t = s + 1; t < flats[f].size(); ++t)
        flat_of[{flats[f][s], flats[f][t]}] = f;

  Cdga a;
  a.field = arr.field;
  a.max_degree = 2;
  a.basis.resize(3);
  a.basis[0] = {"1"};
  for (const auto& l : arr.labels) a.basis[1].push_back("e_" + l);

  std::vector<std::size_t> offset(flats.size());
  std::size_t dim2 = 0;
  for (std::size_t f = 0; f < flats.size(); ++f) {
    offset[f] = dim2;
    dim2 += flats[f].size() - 1;
    for (std::size_t t = 1; t < flats[f].size(); ++t)
      a.basis[2].push_back("e_" + arr.labels[flats[f][0]] + "e_" +
                           arr.labels[flats[f][t]]);
  }

  // position of hyperplane h inside its flat, minus one (basis slot)
  auto slot = [&](std::size_t f, std::size_t h) {
    const auto& fl = flats[f];
    std::size_t pos = static_cast<std::size_t>(
        std::find(fl.begin(), fl.end(), h) - fl.begin());
    return offset[f] + pos - 1;
  };

  Matrix prod(dim2, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      std::size_t lo = std::min(i, j), hi = std::max(i, j);
      std::size_t f = flat_of.at({lo, hi});
      Scalar sgn = (i < j) ? Scalar(1) : Scalar(-1);
      std::size_t h0 = flats[f][0];
      if (lo == h0) {
        prod.at(slot(f, hi), i * n + j) += sgn;
      } else {
        // e_lo e_hi = e_h0 e_hi - e_h0 e_lo
        prod.at(slot(f, hi), i * n + j) += sgn;
        prod.at(slot(f, lo), i * n + j) += -sgn;
      }
    }
  a.products[{1, 1}] = std::move(prod);
  a.diff.resize(2);
  a.diff[0] = Matrix(n, 1);
  a.diff[1] = Matrix(dim2, n);
  return a;
}

Cdga boolean_model(const Arrangement& arr) {
  std::vector<std::string> labels;
  for (const auto& l : arr.labels) labels.push_back("x_" + l);
  return exterior_model(labels, arr.field);
}

CdgaMorphism boolean_morphism(const Arrangement& arr) {
  CdgaMorphism m;
  m.source = boolean_model(arr);
  m.target = os_algebra(arr);
  std::size_t n = arr.size();
  m.maps.resize(3);
  m.maps[0] = Matrix::identity(1);
  m.maps[1] = Matrix::identity(n);
  Matrix f2(m.target.dim(2), m.source.dim(2));
  std::size_t col = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++col) {
      std::vector<Scalar> ei(n), ej(n);
      ei[i] = Scalar(1);
      ej[j] = Scalar(1);
      f2.set_col(col, m.target.multiply(1, ei, 1, ej));
    }
  m.maps[2] = std::move(f2);
  return m;
}

}  // namespace jumploci
