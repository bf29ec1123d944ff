#include "jumploci/multinet.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "jumploci/multipoly.hpp"

namespace jumploci {

namespace {

std::vector<std::string> ambient_vars(const Arrangement& arr) {
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < arr.ambient_rank; ++i)
    vars.push_back("z" + std::to_string(i + 1));
  return vars;
}

MultiPoly covector_form(const Arrangement& arr, const std::vector<std::string>& vars,
                        std::size_t h) {
  MultiPoly p(vars);
  for (std::size_t j = 0; j < arr.ambient_rank; ++j) {
    MultiPoly::Exp e(vars.size(), 0);
    e[j] = 1;
    p.add_term(e, arr.covectors[h][j]);
  }
  return p;
}

/* Q_i: the multiplicity-weighted product of the class-i defining forms. */
MultiPoly class_product(const Multinet& n, const Arrangement& arr,
                        const std::vector<std::string>& vars, std::size_t i) {
  MultiPoly q = MultiPoly::constant(vars, Scalar(1));
  for (std::size_t j = 0; j < n.base.size(); ++j)
    if (n.cls[j] == i)
      for (unsigned p = 0; p < n.mult[j]; ++p)
        q = q * covector_form(arr, vars, n.base[j]);
  return q;
}

std::vector<Scalar> poly_coeffs(const MultiPoly& p,
                                const std::vector<MultiPoly::Exp>& monos) {
  std::vector<Scalar> v(monos.size());
  for (std::size_t i = 0; i < monos.size(); ++i) v[i] = p.coeff(monos[i]);
  return v;
}

}  // namespace

std::optional<PencilData> multinet_to_pencil(const Multinet& n, const Arrangement& arr) {
  auto vars = ambient_vars(arr);
  std::vector<MultiPoly> q;
  for (std::size_t i = 0; i < n.k; ++i) q.push_back(class_product(n, arr, vars, i));

  std::vector<MultiPoly::Exp> monos;
  for (const auto& p : q)
    for (const auto& [e, c] : p.terms())
      if (std::find(monos.begin(), monos.end(), e) == monos.end()) monos.push_back(e);
  std::sort(monos.begin(), monos.end());

  Matrix lhs(monos.size(), 2);
  lhs.set_col(0, poly_coeffs(q[0], monos));
  lhs.set_col(1, poly_coeffs(q[1], monos));
  PencilData out;
  for (std::size_t i = 2; i < n.k; ++i) {
    auto sol = lhs.solve(poly_coeffs(q[i], monos));
    if (!sol) return std::nullopt;
    // exact residual check: Q_i - a Q_1 - b Q_2 == 0
    MultiPoly res = q[i] - q[0].scaled((*sol)[0]) - q[1].scaled((*sol)[1]);
    if (!res.is_zero()) return std::nullopt;
    out.constants.emplace_back((*sol)[0], (*sol)[1]);
  }
  return out;
}

ArrangementReport multinet_valid(const Arrangement& arr, const Multinet& n) {
  ArrangementReport rep;
  if (n.k < 3) rep.violations.push_back("fewer than 3 classes");
  if (n.base.empty() || !std::is_sorted(n.base.begin(), n.base.end()) ||
      std::adjacent_find(n.base.begin(), n.base.end()) != n.base.end())
    rep.violations.push_back("base must be a sorted set of indices");
  for (std::size_t h : n.base)
    if (h >= arr.size()) rep.violations.push_back("base index out of range");
  if (n.cls.size() != n.base.size() || n.mult.size() != n.base.size())
    rep.violations.push_back("class/multiplicity arity mismatch");
  if (!rep.ok()) return rep;

  std::vector<BigRat> weight(n.k, BigRat(0));
  for (std::size_t j = 0; j < n.base.size(); ++j) {
    if (n.cls[j] >= n.k) {
      rep.violations.push_back("class label out of range");
      return rep;
    }
    if (n.mult[j] == 0) rep.violations.push_back("zero multiplicity");
    weight[n.cls[j]] += BigRat(n.mult[j]);
  }
  for (std::size_t i = 0; i < n.k; ++i) {
    if (weight[i] == 0) rep.violations.push_back("empty class " + std::to_string(i));
    if (weight[i] != weight[0])
      rep.violations.push_back("weighted class sizes differ");
  }
  if (!rep.ok()) return rep;

  // flat axiom on the base sub-arrangement
  Arrangement sub;
  sub.field = arr.field;
  sub.ambient_rank = arr.ambient_rank;
  for (std::size_t h : n.base) {
    sub.labels.push_back(arr.labels[h]);
    sub.covectors.push_back(arr.covectors[h]);
  }
  for (const auto& flat : rank2_flats(sub)) {
    std::vector<BigRat> nx(n.k, BigRat(0));
    std::size_t classes_met = 0;
    for (std::size_t pos : flat) {
      if (nx[n.cls[pos]] == 0) ++classes_met;
      nx[n.cls[pos]] += BigRat(n.mult[pos]);
    }
    if (classes_met < 2) continue;
    for (std::size_t i = 0; i < n.k; ++i)
      if (nx[i] != nx[0]) {
        rep.violations.push_back("flat class sums differ on a shared flat");
        return rep;
      }
  }

  if (!multinet_to_pencil(n, arr)) rep.violations.push_back("classes do not form a pencil");
  return rep;
}

std::vector<Multinet> multinet_enumerate(const Arrangement& arr, std::size_t k,
                                         unsigned max_mult) {
  if (arr.size() > 12) throw std::invalid_argument("multinet_enumerate: more than 12 hyperplanes");
  if (k < 3 || k > 4) throw std::invalid_argument("multinet_enumerate: k must be 3 or 4");
  if (max_mult < 1 || max_mult > 2)
    throw std::invalid_argument("multinet_enumerate: multiplicity bound must be 1 or 2");

  std::vector<std::vector<std::size_t>> bases;
  for (std::size_t mask = 1; mask < (std::size_t{1} << arr.size()); ++mask) {
    std::vector<std::size_t> base;
    for (std::size_t h = 0; h < arr.size(); ++h)
      if (mask & (std::size_t{1} << h)) base.push_back(h);
    if (base.size() >= k) bases.push_back(std::move(base));
  }
  std::sort(bases.begin(), bases.end());

  std::vector<Multinet> out;
  for (const auto& base : bases) {
    std::size_t s = base.size();
    std::vector<unsigned> mult(s, 1);
    // odometer over multiplicity vectors, lexicographic
    while (true) {
      // canonical class assignments: label values appear in first-use order
      std::vector<std::size_t> cls(s, 0);
      std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos,
                                                              std::size_t used) {
        if (pos == s) {
          if (used != k) return;
          Multinet cand{base, k, cls, mult};
          if (multinet_valid(arr, cand).ok()) out.push_back(std::move(cand));
          return;
        }
        std::size_t top = std::min(used + 1, k);
        for (std::size_t c = 0; c < top; ++c) {
          cls[pos] = c;
          rec(pos + 1, std::max(used, c + 1));
        }
      };
      rec(0, 0);
      std::size_t i = s;
      while (i > 0 && mult[i - 1] == max_mult) mult[--i] = 1;
      if (i == 0) break;
      ++mult[i - 1];
    }
  }
  return out;
}

std::vector<Scalar> weighted_class_sum(const Multinet& n, const Arrangement& arr,
                                       std::size_t i) {
  std::vector<Scalar> u(arr.size());
  for (std::size_t j = 0; j < n.base.size(); ++j)
    if (n.cls[j] == i) u[n.base[j]] = Scalar(static_cast<long>(n.mult[j]));
  return u;
}

Cdga rational_curve_model(std::size_t k, Field field) {
  if (k < 3) throw std::invalid_argument("rational_curve_model: need k >= 3");
  Cdga a;
  a.field = field;
  a.max_degree = 2;
  a.basis.resize(3);
  a.basis[0] = {"1"};
  for (std::size_t i = 0; i + 1 < k; ++i) a.basis[1].push_back("c" + std::to_string(i + 1));
  std::size_t n1 = k - 1;
  a.products[{1, 1}] = Matrix(0, n1 * n1);
  a.diff.resize(2);
  a.diff[0] = Matrix(n1, 1);
  a.diff[1] = Matrix(0, n1);
  return a;
}

AdmissibleModel admissible_morphism(const Multinet& n, const Arrangement& arr) {
  auto rep = multinet_valid(arr, n);
  if (!rep.ok()) throw std::invalid_argument("admissible_morphism: " + rep.violations.front());
  AdmissibleModel model;
  model.net = n;
  model.phi.source = rational_curve_model(n.k, arr.field);
  model.phi.target = os_algebra(arr);
  model.phi.maps.resize(3);
  model.phi.maps[0] = Matrix::identity(1);
  Matrix m1(arr.size(), n.k - 1);
  std::vector<Scalar> uk = weighted_class_sum(n, arr, n.k - 1);
  for (std::size_t i = 0; i + 1 < n.k; ++i) {
    std::vector<Scalar> ui = weighted_class_sum(n, arr, i);
    for (std::size_t h = 0; h < arr.size(); ++h) ui[h] -= uk[h];
    m1.set_col(i, ui);
  }
  model.phi.maps[1] = std::move(m1);
  model.phi.maps[2] = Matrix(model.phi.target.dim(2), 0);
  auto mrep = validate_morphism(model.phi);
  if (!mrep.ok())
    throw std::runtime_error("admissible_morphism: image is not isotropic: " +
                             mrep.violations.front());
  return model;
}

}  // namespace jumploci
