#include "jumploci/cdga.hpp"

#include <stdexcept>

namespace jumploci {

std::optional<std::size_t> Cdga::find_basis(int d, const std::string& name) const {
  if (d < 0 || d > max_degree) return std::nullopt;
  const auto& names = basis[static_cast<std::size_t>(d)];
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return i;
  return std::nullopt;
}

std::optional<std::pair<int, std::size_t>> Cdga::find_name(const std::string& name) const {
  for (int d = 0; d <= max_degree; ++d)
    if (auto idx = find_basis(d, name)) return std::make_pair(d, *idx);
  return std::nullopt;
}

Matrix Cdga::product_matrix(int i, int j) const {
  std::size_t di = dim(i), dj = dim(j);
  if (i + j > max_degree || i < 1 || j < 1)
    return Matrix(dim(i + j), di * dj);
  auto it = products.find({i, j});
  if (it != products.end()) return it->second;
  auto rev = products.find({j, i});
  if (rev == products.end()) return Matrix(dim(i + j), di * dj);
  // a * b = (-1)^{ij} b * a
  Matrix m(dim(i + j), di * dj);
  Scalar sign(((i * j) % 2 == 0) ? 1 : -1);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t a = 0; a < di; ++a)
      for (std::size_t b = 0; b < dj; ++b)
        m.at(r, a * dj + b) = rev->second.at(r, b * di + a) * sign;
  return m;
}

std::vector<Scalar> Cdga::multiply(int i, const std::vector<Scalar>& x, int j,
                                   const std::vector<Scalar>& y) const {
  if (x.size() != dim(i) || y.size() != dim(j))
    throw std::invalid_argument("multiply: coordinate size mismatch");
  if (i == 0) {
    std::vector<Scalar> out(y.size());
    for (std::size_t b = 0; b < y.size(); ++b) out[b] = x[0] * y[b];
    return out;
  }
  if (j == 0) {
    std::vector<Scalar> out(x.size());
    for (std::size_t a = 0; a < x.size(); ++a) out[a] = x[a] * y[0];
    return out;
  }
  Matrix m = product_matrix(i, j);
  std::vector<Scalar> xy(dim(i) * dim(j));
  for (std::size_t a = 0; a < x.size(); ++a) {
    if (x[a].is_zero()) continue;
    for (std::size_t b = 0; b < y.size(); ++b) xy[a * y.size() + b] = x[a] * y[b];
  }
  return m.apply(xy);
}

std::vector<Scalar> Cdga::apply_d(int i, const std::vector<Scalar>& x) const {
  if (i < 0 || i >= max_degree) throw std::invalid_argument("apply_d: degree out of range");
  return diff[static_cast<std::size_t>(i)].apply(x);
}

namespace {

std::string pname(const Cdga& a, int d, std::size_t i) {
  return a.basis_name(d, i) + "(deg " + std::to_string(d) + ")";
}

}  // namespace

ValidationReport validate(const Cdga& a) {
  ValidationReport rep;
  auto flag = [&rep](std::string v) { rep.violations.push_back(std::move(v)); };

  if (a.max_degree < 1) flag("max_degree must be at least 1");
  if (a.basis.size() != static_cast<std::size_t>(a.max_degree) + 1) {
    flag("basis table must list degrees 0..max_degree");
    return rep;
  }
  if (a.dim(0) != 1) flag("degree 0 must be one-dimensional (connected)");

  // Globally unique basis names.
  std::map<std::string, int> seen;
  for (int d = 0; d <= a.max_degree; ++d)
    for (const auto& n : a.basis[static_cast<std::size_t>(d)]) {
      if (seen.count(n)) flag("basis name '" + n + "' reused across degrees " +
                              std::to_string(seen[n]) + " and " + std::to_string(d));
      seen[n] = d;
    }

  if (a.diff.size() != static_cast<std::size_t>(a.max_degree)) {
    flag("differential table must cover degrees 0..max_degree-1");
    return rep;
  }
  for (int d = 0; d < a.max_degree; ++d) {
    const Matrix& m = a.d(d);
    if (m.rows() != a.dim(d + 1) || m.cols() != a.dim(d)) {
      flag("differential at degree " + std::to_string(d) + " has wrong shape");
      return rep;
    }
  }
  if (!a.d(0).is_zero()) flag("the unit must be closed (d must vanish on degree 0)");

  for (const auto& [key, m] : a.products) {
    auto [i, j] = key;
    if (i < 1 || j < 1 || i + j > a.max_degree) {
      flag("product table for degrees (" + std::to_string(i) + "," + std::to_string(j) +
           ") is out of range");
      continue;
    }
    if (m.rows() != a.dim(i + j) || m.cols() != a.dim(i) * a.dim(j))
      flag("product table for degrees (" + std::to_string(i) + "," + std::to_string(j) +
           ") has wrong shape");
  }
  if (!rep.ok()) return rep;

  // Graded commutativity: compare stored tables against the sign rule.
  for (const auto& [key, m] : a.products) {
    auto [i, j] = key;
    (void)m;
    if (!a.has_stored_product(j, i) && i != j) continue;
    Matrix lhs = a.product_matrix(i, j);
    Scalar sign(((i * j) % 2 == 0) ? 1 : -1);
    for (std::size_t p = 0; p < a.dim(i); ++p)
      for (std::size_t q = 0; q < a.dim(j); ++q) {
        std::vector<Scalar> x = a.zero_vec(i), y = a.zero_vec(j);
        x[p] = Scalar(1);
        y[q] = Scalar(1);
        auto ab = a.multiply(i, x, j, y);
        auto ba = a.multiply(j, y, i, x);
        for (std::size_t r = 0; r < ab.size(); ++r)
          if (ab[r] != ba[r] * sign) {
            flag("graded commutativity fails on " + pname(a, i, p) + " * " + pname(a, j, q));
            goto next_pair;
          }
      next_pair:;
      }
  }

  // Associativity within the truncation.
  for (int i = 1; i <= a.max_degree; ++i)
    for (int j = 1; i + j <= a.max_degree; ++j)
      for (int k = 1; i + j + k <= a.max_degree; ++k)
        for (std::size_t p = 0; p < a.dim(i); ++p)
          for (std::size_t q = 0; q < a.dim(j); ++q)
            for (std::size_t r = 0; r < a.dim(k); ++r) {
              std::vector<Scalar> x = a.zero_vec(i), y = a.zero_vec(j), z = a.zero_vec(k);
              x[p] = Scalar(1);
              y[q] = Scalar(1);
              z[r] = Scalar(1);
              auto left = a.multiply(i + j, a.multiply(i, x, j, y), k, z);
              auto right = a.multiply(i, x, j + k, a.multiply(j, y, k, z));
              if (left != right)
                flag("associativity fails on " + pname(a, i, p) + ", " + pname(a, j, q) +
                     ", " + pname(a, k, r));
            }

  // Leibniz rule wherever all three terms stay inside the truncation.
  for (int i = 1; i <= a.max_degree; ++i)
    for (int j = 1; i + j + 1 <= a.max_degree; ++j)
      for (std::size_t p = 0; p < a.dim(i); ++p)
        for (std::size_t q = 0; q < a.dim(j); ++q) {
          std::vector<Scalar> x = a.zero_vec(i), y = a.zero_vec(j);
          x[p] = Scalar(1);
          y[q] = Scalar(1);
          auto lhs = a.apply_d(i + j, a.multiply(i, x, j, y));
          auto t1 = a.multiply(i + 1, a.apply_d(i, x), j, y);
          auto t2 = a.multiply(i, x, j + 1, a.apply_d(j, y));
          Scalar sign((i % 2 == 0) ? 1 : -1);
          bool bad = false;
          for (std::size_t r = 0; r < lhs.size(); ++r)
            if (lhs[r] != t1[r] + sign * t2[r]) bad = true;
          if (bad)
            flag("Leibniz rule fails on d(" + pname(a, i, p) + " * " + pname(a, j, q) + ")");
        }

  // d o d = 0 wherever both arrows exist.
  for (int i = 0; i + 2 <= a.max_degree; ++i)
    if (!(a.d(i + 1) * a.d(i)).is_zero())
      flag("d o d fails starting at degree " + std::to_string(i));

  return rep;
}

CohomologyData cohomology(const Cdga& a, int i) {
  if (i < 0 || i > a.max_degree) throw std::invalid_argument("cohomology: degree out of range");
  CohomologyData out;
  std::vector<std::vector<Scalar>> cocycles;
  if (i < a.max_degree) {
    cocycles = a.d(i).kernel_basis();
  } else {
    out.truncated = true;
    for (std::size_t j = 0; j < a.dim(i); ++j) {
      std::vector<Scalar> v(a.dim(i));
      v[j] = Scalar(1);
      cocycles.push_back(std::move(v));
    }
  }
  Matrix image(a.dim(i), 0);
  if (i >= 1) image = a.d(i - 1);
  std::size_t base_rank = image.rank();
  out.dim = cocycles.size() - base_rank;

  // Greedy pick of cocycles independent modulo the image, then a row-reduced
  // normal form (row operations keep the span inside the cocycles).
  Matrix acc = image;
  std::vector<std::vector<Scalar>> chosen;
  std::size_t r = base_rank;
  for (const auto& z : cocycles) {
    Matrix zcol(a.dim(i), 1);
    zcol.set_col(0, z);
    Matrix ext = Matrix::hstack(acc, zcol);
    if (ext.rank() > r) {
      ++r;
      acc = ext;
      chosen.push_back(z);
    }
  }
  Matrix reps = Matrix::from_rows(chosen).rref().transpose();
  if (chosen.empty()) reps = Matrix(a.dim(i), 0);
  out.representatives = reps;
  return out;
}

std::size_t cohomology_dim(const Cdga& a, int i) { return cohomology(a, i).dim; }

Cdga hirsch_extend(const Cdga& base, const HirschData& h) {
  if (base.max_degree != 2)
    throw std::invalid_argument("hirsch_extend: base must be truncated at degree 2");
  if (h.tau.rows() != base.dim(2) || h.tau.cols() != h.generators.size())
    throw std::invalid_argument("hirsch_extend: tau shape mismatch");
  for (const auto& g : h.generators)
    if (base.find_name(g))
      throw std::invalid_argument("hirsch_extend: generator name '" + g + "' collides with base");

  std::size_t nb1 = base.dim(1), nb2 = base.dim(2), ng = h.generators.size();
  Cdga a;
  a.field = base.field;
  a.max_degree = 2;
  a.basis.resize(3);
  a.basis[0] = {base.basis_name(0, 0)};
  a.basis[1] = base.basis[1];
  for (const auto& g : h.generators) a.basis[1].push_back(g);
  a.basis[2] = base.basis[2];
  for (std::size_t b = 0; b < nb1; ++b)
    for (std::size_t u = 0; u < ng; ++u)
      a.basis[2].push_back(base.basis_name(1, b) + "*" + h.generators[u]);
  for (std::size_t u = 0; u < ng; ++u)
    for (std::size_t v = u + 1; v < ng; ++v)
      a.basis[2].push_back(h.generators[u] + "*" + h.generators[v]);

  std::size_t n1 = a.dim(1), n2 = a.dim(2);
  auto mixed_idx = [&](std::size_t b, std::size_t u) { return nb2 + b * ng + u; };
  auto pair_idx = [&](std::size_t u, std::size_t v) {
    // u < v
    return nb2 + nb1 * ng + (u * (2 * ng - u - 1)) / 2 + (v - u - 1);
  };

  Matrix prod(n2, n1 * n1);
  Matrix base_prod = base.product_matrix(1, 1);
  for (std::size_t p = 0; p < n1; ++p)
    for (std::size_t q = 0; q < n1; ++q) {
      std::size_t col = p * n1 + q;
      bool p_base = p < nb1, q_base = q < nb1;
      if (p_base && q_base) {
        for (std::size_t r = 0; r < nb2; ++r)
          prod.at(r, col) = base_prod.at(r, p * nb1 + q);
      } else if (p_base && !q_base) {
        prod.at(mixed_idx(p, q - nb1), col) = Scalar(1);
      } else if (!p_base && q_base) {
        prod.at(mixed_idx(q, p - nb1), col) = Scalar(-1);
      } else {
        std::size_t u = p - nb1, v = q - nb1;
        if (u < v)
          prod.at(pair_idx(u, v), col) = Scalar(1);
        else if (v < u)
          prod.at(pair_idx(v, u), col) = Scalar(-1);
      }
    }
  a.products[{1, 1}] = std::move(prod);

  a.diff.resize(2);
  a.diff[0] = Matrix(n1, 1);
  Matrix d1(n2, n1);
  for (std::size_t b = 0; b < nb1; ++b)
    for (std::size_t r = 0; r < nb2; ++r) d1.at(r, b) = base.d(1).at(r, b);
  for (std::size_t u = 0; u < ng; ++u)
    for (std::size_t r = 0; r < nb2; ++r) d1.at(r, nb1 + u) = h.tau.at(r, u);
  a.diff[1] = std::move(d1);
  return a;
}

CdgaMorphism hirsch_inclusion(const Cdga& base, const Cdga& extended) {
  CdgaMorphism m;
  m.source = base;
  m.target = extended;
  m.maps.resize(3);
  m.maps[0] = Matrix::identity(1);
  Matrix f1(extended.dim(1), base.dim(1));
  for (std::size_t j = 0; j < base.dim(1); ++j) f1.at(j, j) = Scalar(1);
  Matrix f2(extended.dim(2), base.dim(2));
  for (std::size_t j = 0; j < base.dim(2); ++j) f2.at(j, j) = Scalar(1);
  m.maps[1] = std::move(f1);
  m.maps[2] = std::move(f2);
  return m;
}

ValidationReport validate_morphism(const CdgaMorphism& m) {
  ValidationReport rep;
  auto flag = [&rep](std::string v) { rep.violations.push_back(std::move(v)); };
  const Cdga& s = m.source;
  const Cdga& t = m.target;
  if (s.max_degree != t.max_degree) flag("source and target truncations differ");
  if (m.maps.size() != static_cast<std::size_t>(s.max_degree) + 1) {
    flag("morphism must provide one matrix per degree");
    return rep;
  }
  for (int d = 0; d <= s.max_degree; ++d)
    if (m.maps[static_cast<std::size_t>(d)].rows() != t.dim(d) ||
        m.maps[static_cast<std::size_t>(d)].cols() != s.dim(d)) {
      flag("morphism matrix at degree " + std::to_string(d) + " has wrong shape");
      return rep;
    }
  if (!(m.maps[0] == Matrix::identity(1))) flag("morphism must send unit to unit");

  for (int d = 0; d < s.max_degree; ++d) {
    Matrix lhs = m.maps[static_cast<std::size_t>(d) + 1] * s.d(d);
    Matrix rhs = t.d(d) * m.maps[static_cast<std::size_t>(d)];
    if (!(lhs == rhs)) flag("morphism fails to commute with d at degree " + std::to_string(d));
  }

  for (int i = 1; i <= s.max_degree; ++i)
    for (int j = 1; i + j <= s.max_degree; ++j)
      for (std::size_t p = 0; p < s.dim(i); ++p)
        for (std::size_t q = 0; q < s.dim(j); ++q) {
          std::vector<Scalar> x = s.zero_vec(i), y = s.zero_vec(j);
          x[p] = Scalar(1);
          y[q] = Scalar(1);
          auto img = m.maps[static_cast<std::size_t>(i + j)].apply(s.multiply(i, x, j, y));
          auto prod = t.multiply(i, m.maps[static_cast<std::size_t>(i)].apply(x), j,
                                 m.maps[static_cast<std::size_t>(j)].apply(y));
          if (img != prod)
            flag("morphism fails multiplicativity on " + pname(s, i, p) + " * " + pname(s, j, q));
        }
  return rep;
}

namespace {

/* Injectivity/surjectivity of the induced map on degree-i cohomology. */
struct InducedMap {
  bool injective;
  bool surjective;
};

InducedMap induced_on_h(const CdgaMorphism& m, int i) {
  CohomologyData hs = cohomology(m.source, i);
  CohomologyData ht = cohomology(m.target, i);
  Matrix phi_s = m.maps[static_cast<std::size_t>(i)] * hs.representatives;
  Matrix image(m.target.dim(i), 0);
  if (i >= 1) image = m.target.d(i - 1);
  std::size_t rb = image.rank();
  std::size_t r_ext = Matrix::hstack(image, phi_s).rank();
  InducedMap out;
  out.injective = (r_ext == rb + hs.dim);
  out.surjective = (r_ext == rb + ht.dim);
  return out;
}

}  // namespace

ConnectivityResult morphism_connectivity(const CdgaMorphism& m, int q) {
  if (q < 0) throw std::invalid_argument("connectivity: q must be nonnegative");
  if (q + 1 > m.source.max_degree)
    throw std::invalid_argument("connectivity: truncation too small to decide q = " +
                                std::to_string(q));
  ConnectivityResult res;
  res.connected = true;
  for (int i = 0; i <= q; ++i) {
    InducedMap im = induced_on_h(m, i);
    if (!im.injective || !im.surjective) {
      res.connected = false;
      res.detail = "H^" + std::to_string(i) + " is not an isomorphism";
      return res;
    }
  }
  res.truncated_top = (q + 1 == m.source.max_degree);
  InducedMap top = induced_on_h(m, q + 1);
  if (!top.injective) {
    res.connected = false;
    res.detail = "H^" + std::to_string(q + 1) + " is not injective" +
                 (res.truncated_top ? " (checked on the truncated quotient)" : "");
  }
  return res;
}

Cdga exterior_model(const std::vector<std::string>& labels, Field field) {
  Cdga a;
  a.field = field;
  a.max_degree = 2;
  a.basis.resize(3);
  a.basis[0] = {"1"};
  a.basis[1] = labels;
  std::size_t n = labels.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      a.basis[2].push_back(labels[i] + "*" + labels[j]);
  auto pair_idx = [n](std::size_t i, std::size_t j) {
    return (i * (2 * n - i - 1)) / 2 + (j - i - 1);
  };
  Matrix prod(a.dim(2), n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i < j)
        prod.at(pair_idx(i, j), i * n + j) = Scalar(1);
      else if (j < i)
        prod.at(pair_idx(j, i), i * n + j) = Scalar(-1);
    }
  a.products[{1, 1}] = std::move(prod);
  a.diff.resize(2);
  a.diff[0] = Matrix(n, 1);
  a.diff[1] = Matrix(a.dim(2), n);
  return a;
}

CdgaMorphism cocycle_span_morphism(const Cdga& a, const std::string& label_prefix) {
  CohomologyData h1 = cohomology(a, 1);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < h1.dim; ++i)
    labels.push_back(label_prefix + std::to_string(i + 1));
  CdgaMorphism m;
  m.source = exterior_model(labels, a.field);
  m.target = a;
  m.maps.resize(3);
  m.maps[0] = Matrix::identity(1);
  m.maps[1] = h1.representatives;
  Matrix f2(a.dim(2), m.source.dim(2));
  std::size_t col = 0;
  for (std::size_t i = 0; i < h1.dim; ++i)
    for (std::size_t j = i + 1; j < h1.dim; ++j, ++col)
      f2.set_col(col, a.multiply(1, h1.representatives.col(i), 1, h1.representatives.col(j)));
  m.maps[2] = std::move(f2);
  return m;
}

}  // namespace jumploci
