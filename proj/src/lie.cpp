#include "jumploci/lie.hpp"

#include <stdexcept>

namespace jumploci {

std::vector<Scalar> LieAlgebra::bracket(const std::vector<Scalar>& x,
                                        const std::vector<Scalar>& y) const {
  std::size_t n = dim();
  if (x.size() != n || y.size() != n) throw std::invalid_argument("bracket: size mismatch");
  std::vector<Scalar> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      Scalar c = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) out[k] += c * table[i][j][k];
    }
  }
  return out;
}

bool LieAlgebra::is_abelian() const {
  for (const auto& row : table)
    for (const auto& v : row)
      for (const auto& c : v)
        if (!c.is_zero()) return false;
  return true;
}

ValidationReport validate(const LieAlgebra& g) {
  ValidationReport rep;
  auto flag = [&rep](std::string v) { rep.violations.push_back(std::move(v)); };
  std::size_t n = g.dim();
  if (g.table.size() != n) {
    flag("bracket table has wrong arity");
    return rep;
  }
  for (const auto& row : g.table) {
    if (row.size() != n) {
      flag("bracket table has wrong arity");
      return rep;
    }
    for (const auto& v : row)
      if (v.size() != n) {
        flag("bracket table has wrong arity");
        return rep;
      }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (g.table[i][j][k] != -g.table[j][i][k]) {
          flag("antisymmetry fails on [" + g.names[i] + "," + g.names[j] + "]");
          goto after_antisym;
        }
after_antisym:
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        std::vector<Scalar> ei(n), ej(n), ek(n);
        ei[i] = Scalar(1);
        ej[j] = Scalar(1);
        ek[k] = Scalar(1);
        auto s = g.bracket(ei, g.bracket(ej, ek));
        auto t = g.bracket(ej, g.bracket(ek, ei));
        auto u = g.bracket(ek, g.bracket(ei, ej));
        for (std::size_t m = 0; m < n; ++m)
          if (!(s[m] + t[m] + u[m]).is_zero()) {
            flag("Jacobi identity fails on (" + g.names[i] + "," + g.names[j] + "," +
                 g.names[k] + ")");
            goto after_jacobi;
          }
      }
after_jacobi:
  return rep;
}

namespace {

LieAlgebra zero_table(std::vector<std::string> names) {
  LieAlgebra g;
  g.names = std::move(names);
  std::size_t n = g.names.size();
  g.table.assign(n, std::vector<std::vector<Scalar>>(n, std::vector<Scalar>(n)));
  return g;
}

void set_bracket(LieAlgebra& g, std::size_t i, std::size_t j, std::size_t k, Scalar c) {
  g.table[i][j][k] = c;
  g.table[j][i][k] = -c;
}

}  // namespace

LieAlgebra abelian_lie(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("t" + std::to_string(i));
  return zero_table(std::move(names));
}

LieAlgebra sl2() {
  LieAlgebra g = zero_table({"h", "e", "f"});
  set_bracket(g, 0, 1, 1, Scalar(2));   // [h,e] = 2e
  set_bracket(g, 0, 2, 2, Scalar(-2));  // [h,f] = -2f
  set_bracket(g, 1, 2, 0, Scalar(1));   // [e,f] = h
  return g;
}

LieAlgebra borel2() {
  LieAlgebra g = zero_table({"h", "e"});
  set_bracket(g, 0, 1, 1, Scalar(2));  // [h,e] = 2e
  return g;
}

LieAlgebra lie_preset(const std::string& name) {
  if (name == "sl2") return sl2();
  if (name == "borel2") return borel2();
  if (name.rfind("abelian", 0) == 0) {
    std::size_t n = std::stoul(name.substr(7));
    return abelian_lie(n);
  }
  throw std::invalid_argument("unknown Lie algebra preset: " + name);
}

LieAlgebra lcs_free_lie(std::size_t n, int k) {
  if (k != 2 && k != 3) throw std::invalid_argument("lcs_free_lie: k must be 2 or 3");
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  if (k == 2) return zero_table(std::move(names));
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      names.push_back("[x" + std::to_string(i + 1) + ",x" + std::to_string(j + 1) + "]");
      pairs.emplace_back(i, j);
    }
  LieAlgebra g = zero_table(std::move(names));
  for (std::size_t p = 0; p < pairs.size(); ++p)
    set_bracket(g, pairs[p].first, pairs[p].second, n + p, Scalar(1));
  return g;
}

Matrix LieRep::apply(const std::vector<Scalar>& x) const {
  if (x.size() != mats.size()) throw std::invalid_argument("rep apply: size mismatch");
  Matrix out(dim_v(), dim_v());
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) out = out + mats[i].scaled(x[i]);
  return out;
}

ValidationReport validate(const LieAlgebra& g, const LieRep& th) {
  ValidationReport rep;
  auto flag = [&rep](std::string v) { rep.violations.push_back(std::move(v)); };
  std::size_t n = g.dim();
  if (th.mats.size() != n) {
    flag("representation must provide one matrix per basis element");
    return rep;
  }
  std::size_t dv = th.dim_v();
  for (const auto& m : th.mats)
    if (m.rows() != dv || m.cols() != dv) {
      flag("representation matrices must be square of equal size");
      return rep;
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Scalar> ei(n), ej(n);
      ei[i] = Scalar(1);
      ej[j] = Scalar(1);
      Matrix lhs = th.apply(g.bracket(ei, ej));
      Matrix rhs = th.mats[i] * th.mats[j] - th.mats[j] * th.mats[i];
      if (!(lhs == rhs))
        flag("theta([" + g.names[i] + "," + g.names[j] + "]) != [theta, theta]");
    }
  return rep;
}

LieRep adjoint_rep(const LieAlgebra& g) {
  std::size_t n = g.dim();
  LieRep th;
  for (std::size_t i = 0; i < n; ++i) {
    Matrix m(n, n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) m.at(k, j) = g.table[i][j][k];
    th.mats.push_back(std::move(m));
  }
  return th;
}

LieRep standard_rep(const std::string& preset_name) {
  Matrix H(2, 2), E(2, 2), F(2, 2);
  H.at(0, 0) = Scalar(1);
  H.at(1, 1) = Scalar(-1);
  E.at(0, 1) = Scalar(1);
  F.at(1, 0) = Scalar(1);
  LieRep th;
  if (preset_name == "sl2") {
    th.mats = {H, E, F};
  } else if (preset_name == "borel2") {
    th.mats = {H, E};
  } else {
    throw std::invalid_argument("standard representation only ships for sl2 and borel2");
  }
  return th;
}

std::string sl2_subalgebra_name(Sl2Subalgebra c) {
  switch (c) {
    case Sl2Subalgebra::abelian: return "abelian";
    case Sl2Subalgebra::borel: return "borel";
    case Sl2Subalgebra::full: return "full";
  }
  return "?";
}

Sl2Subalgebra classify_sl2_subalgebra(const std::vector<std::vector<Scalar>>& vectors) {
  LieAlgebra g = sl2();
  for (const auto& v : vectors)
    if (v.size() != 3)
      throw std::invalid_argument("classify: vectors must have (h,e,f) coordinates");
  Matrix span(3, vectors.size());
  for (std::size_t j = 0; j < vectors.size(); ++j) span.set_col(j, vectors[j]);
  if (span.rank() != vectors.size())
    throw std::invalid_argument("classify: vectors are linearly dependent");

  bool nonabelian = false;
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = i + 1; j < vectors.size(); ++j) {
      auto br = g.bracket(vectors[i], vectors[j]);
      if (!span.in_column_span(br))
        throw std::invalid_argument("classify: span is not closed under the bracket");
      for (const auto& c : br)
        if (!c.is_zero()) nonabelian = true;
    }
  if (vectors.size() == 3) return Sl2Subalgebra::full;
  if (nonabelian && vectors.size() == 2) return Sl2Subalgebra::borel;
  return Sl2Subalgebra::abelian;
}

}  // namespace jumploci
