#include "jumploci/holonomy.hpp"

namespace jumploci {

HolonomyPresentation holonomy(const Cdga& a) {
  std::size_t n1 = a.dim(1), n2 = a.dim(2);
  HolonomyPresentation pres;
  for (std::size_t j = 0; j < n1; ++j) pres.generators.push_back("x_" + a.basis_name(1, j));
  Matrix mul = a.product_matrix(1, 1);
  const Matrix& d1 = a.d(1);
  for (std::size_t w = 0; w < n2; ++w) {
    pres.relation_names.push_back(a.basis_name(2, w));
    pres.linear.push_back(d1.row(w));
    Matrix q(n1, n1);
    for (std::size_t j = 0; j < n1; ++j)
      for (std::size_t l = 0; l < n1; ++l) q.at(j, l) = mul.at(w, j * n1 + l);
    pres.quad.push_back(std::move(q));
  }
  return pres;
}

std::string HolonomyPresentation::str() const {
  std::string out = "generators:";
  for (const auto& g : generators) out += " " + g;
  out += "\n";
  for (std::size_t w = 0; w < relation_names.size(); ++w) {
    std::string rel;
    for (std::size_t j = 0; j < generators.size(); ++j) {
      if (linear[w][j].is_zero()) continue;
      if (!rel.empty()) rel += " + ";
      rel += "(" + linear[w][j].str() + ")*" + generators[j];
    }
    for (std::size_t j = 0; j < generators.size(); ++j)
      for (std::size_t l = j + 1; l < generators.size(); ++l) {
        if (quad[w].at(j, l).is_zero()) continue;
        if (!rel.empty()) rel += " + ";
        rel += "(" + quad[w].at(j, l).str() + ")*[" + generators[j] + "," + generators[l] + "]";
      }
    if (rel.empty()) rel = "0";
    out += "relation " + relation_names[w] + ": " + rel + " = 0\n";
  }
  return out;
}

bool holonomy_hom_check(const Cdga& a, const LieAlgebra& g, const FlatConnection& omega) {
  if (omega.coeffs.rows() != a.dim(1) || omega.coeffs.cols() != g.dim())
    throw std::invalid_argument("holonomy_hom_check: coefficient shape mismatch");
  HolonomyPresentation pres = holonomy(a);
  std::size_t n1 = a.dim(1), ng = g.dim();
  for (std::size_t w = 0; w < pres.relation_names.size(); ++w) {
    std::vector<Scalar> value(ng);
    for (std::size_t j = 0; j < n1; ++j) {
      if (pres.linear[w][j].is_zero()) continue;
      for (std::size_t k = 0; k < ng; ++k)
        value[k] += pres.linear[w][j] * omega.coeffs.at(j, k);
    }
    for (std::size_t j = 0; j < n1; ++j)
      for (std::size_t l = j + 1; l < n1; ++l) {
        const Scalar& q = pres.quad[w].at(j, l);
        if (q.is_zero()) continue;
        auto br = g.bracket(omega.coeffs.row(j), omega.coeffs.row(l));
        for (std::size_t k = 0; k < ng; ++k) value[k] += q * br[k];
      }
    for (const auto& v : value)
      if (!v.is_zero()) return false;
  }
  return true;
}

}  // namespace jumploci
