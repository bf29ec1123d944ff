#include "jumploci/connection.hpp"

#include <stdexcept>

namespace jumploci {

std::vector<std::string> mc_variables(const Cdga& a, const LieAlgebra& g) {
  std::vector<std::string> vars;
  for (std::size_t j = 0; j < a.dim(1); ++j)
    for (std::size_t k = 0; k < g.dim(); ++k)
      vars.push_back("c[" + a.basis_name(1, j) + "][" + g.names[k] + "]");
  return vars;
}

std::vector<MultiPoly> mc_equations(const Cdga& a, const LieAlgebra& g) {
  std::size_t n1 = a.dim(1), n2 = a.dim(2), ng = g.dim();
  std::vector<std::string> vars = mc_variables(a, g);
  auto vidx = [ng](std::size_t j, std::size_t k) { return j * ng + k; };
  Matrix mul = a.product_matrix(1, 1);
  const Matrix& d1 = a.d(1);

  std::vector<MultiPoly> eqs;
  for (std::size_t w = 0; w < n2; ++w)
    for (std::size_t k = 0; k < ng; ++k) {
      MultiPoly p(vars);
      for (std::size_t j = 0; j < n1; ++j) {
        if (d1.at(w, j).is_zero()) continue;
        MultiPoly::Exp e(vars.size(), 0);
        e[vidx(j, k)] = 1;
        p.add_term(e, d1.at(w, j));
      }
      for (std::size_t j = 0; j < n1; ++j)
        for (std::size_t l = j + 1; l < n1; ++l) {
          const Scalar& m = mul.at(w, j * n1 + l);
          if (m.is_zero()) continue;
          for (std::size_t k1 = 0; k1 < ng; ++k1)
            for (std::size_t k2 = 0; k2 < ng; ++k2) {
              const Scalar& br = g.table[k1][k2][k];
              if (br.is_zero()) continue;
              MultiPoly::Exp e(vars.size(), 0);
              e[vidx(j, k1)] += 1;
              e[vidx(l, k2)] += 1;
              p.add_term(e, m * br);
            }
        }
      eqs.push_back(std::move(p));
    }
  return eqs;
}

bool mc_check(const Cdga& a, const LieAlgebra& g, const FlatConnection& omega) {
  if (omega.coeffs.rows() != a.dim(1) || omega.coeffs.cols() != g.dim())
    throw std::invalid_argument("mc_check: coefficient shape mismatch");
  std::vector<Scalar> point;
  point.reserve(a.dim(1) * g.dim());
  for (std::size_t j = 0; j < a.dim(1); ++j)
    for (std::size_t k = 0; k < g.dim(); ++k) point.push_back(omega.coeffs.at(j, k));
  for (const auto& eq : mc_equations(a, g))
    if (!eq.eval(point).is_zero()) return false;
  return true;
}

std::vector<Matrix> aomoto(const Cdga& a, const LieAlgebra& g, const LieRep& th,
                           const FlatConnection& omega) {
  std::size_t n1 = a.dim(1), ng = g.dim(), dv = th.dim_v();
  if (omega.coeffs.rows() != n1 || omega.coeffs.cols() != ng)
    throw std::invalid_argument("aomoto: coefficient shape mismatch");
  // M_j = sum_k coeffs[j][k] theta_k: the fiber action paired with a_j.
  std::vector<Matrix> mj;
  mj.reserve(n1);
  for (std::size_t j = 0; j < n1; ++j) mj.push_back(th.apply(omega.coeffs.row(j)));

  std::vector<Matrix> out;
  for (int i = 0; i < a.max_degree; ++i) {
    std::size_t ni = a.dim(i), nip = a.dim(i + 1);
    Matrix m(nip * dv, ni * dv);
    const Matrix& d = a.d(i);
    for (std::size_t s = 0; s < ni; ++s)
      for (std::size_t r = 0; r < nip; ++r)
        if (!d.at(r, s).is_zero())
          for (std::size_t t = 0; t < dv; ++t)
            m.at(r * dv + t, s * dv + t) += d.at(r, s);
    for (std::size_t j = 0; j < n1; ++j) {
      // a_j * x_s expressed over the degree-(i+1) basis
      std::vector<Scalar> aj = a.zero_vec(1);
      aj[j] = Scalar(1);
      for (std::size_t s = 0; s < ni; ++s) {
        std::vector<Scalar> xs = a.zero_vec(i);
        xs[s] = Scalar(1);
        auto prod = a.multiply(1, aj, i, xs);
        for (std::size_t r = 0; r < nip; ++r) {
          if (prod[r].is_zero()) continue;
          for (std::size_t t = 0; t < dv; ++t)
            for (std::size_t u = 0; u < dv; ++u)
              if (!mj[j].at(u, t).is_zero())
                m.at(r * dv + u, s * dv + t) += prod[r] * mj[j].at(u, t);
        }
      }
    }
    out.push_back(std::move(m));
  }
  return out;
}

DimReport aomoto_h_dim(const Cdga& a, const LieAlgebra& g, const LieRep& th,
                       const FlatConnection& omega, int i) {
  if (i < 0 || i > a.max_degree)
    throw std::invalid_argument("aomoto_h_dim: degree out of range");
  std::vector<Matrix> d = aomoto(a, g, th, omega);
  std::size_t dv = th.dim_v();
  DimReport rep;
  std::size_t ker;
  if (i < a.max_degree) {
    ker = a.dim(i) * dv - d[static_cast<std::size_t>(i)].rank();
  } else {
    ker = a.dim(i) * dv;
    rep.truncated = true;
  }
  std::size_t im = (i >= 1) ? d[static_cast<std::size_t>(i) - 1].rank() : 0;
  rep.dim = ker - im;
  return rep;
}

bool resonance_membership(const Cdga& a, const LieAlgebra& g, const LieRep& th,
                          const FlatConnection& omega, int i, std::size_t r) {
  if (i < 0 || i >= a.max_degree)
    throw std::invalid_argument(
        "resonance_membership: degree must be below the truncation (only a truncated bound "
        "exists at the top degree)");
  if (!mc_check(a, g, omega))
    throw std::invalid_argument("resonance_membership: connection is not flat");
  return aomoto_h_dim(a, g, th, omega, i).dim >= r;
}

std::optional<std::pair<std::vector<Scalar>, std::vector<Scalar>>> rank_one_factor(
    const Cdga& a, const FlatConnection& omega) {
  const Matrix& c = omega.coeffs;
  std::size_t n = c.rows(), m = c.cols();
  std::size_t j0 = n, k0 = m;
  for (std::size_t j = 0; j < n && j0 == n; ++j)
    for (std::size_t k = 0; k < m; ++k)
      if (!c.at(j, k).is_zero()) {
        j0 = j;
        k0 = k;
        break;
      }
  if (j0 == n) return std::make_pair(std::vector<Scalar>(n), std::vector<Scalar>(m));

  Scalar pivot = c.at(j0, k0);
  std::vector<Scalar> eta(n), x(m);
  for (std::size_t j = 0; j < n; ++j) eta[j] = c.at(j, k0) / pivot;
  for (std::size_t k = 0; k < m; ++k) x[k] = c.at(j0, k);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < m; ++k)
      if (c.at(j, k) != eta[j] * x[k]) return std::nullopt;
  for (const auto& v : a.apply_d(1, eta))
    if (!v.is_zero()) return std::nullopt;
  return std::make_pair(std::move(eta), std::move(x));
}

bool rank_one_locus_membership(const Cdga& a, const FlatConnection& omega) {
  return rank_one_factor(a, omega).has_value();
}

bool pi_locus_membership(const Cdga& a, const LieAlgebra& g, const LieRep& th,
                         const FlatConnection& omega) {
  auto fac = rank_one_factor(a, omega);
  if (!fac) return false;
  (void)g;
  return th.apply(fac->second).is_singular();
}

bool scalar_resonance_membership(const Cdga& a, const std::vector<Scalar>& eta, int i) {
  for (const auto& v : a.apply_d(1, eta))
    if (!v.is_zero())
      throw std::invalid_argument("scalar_resonance_membership: eta must be closed");
  LieAlgebra line = abelian_lie(1);
  LieRep id1;
  id1.mats = {Matrix::identity(1)};
  FlatConnection w;
  w.coeffs = Matrix(a.dim(1), 1);
  w.coeffs.set_col(0, eta);
  return resonance_membership(a, line, id1, w, i, 1);
}

bool rank_one_resonance_test(const Cdga& a, const LieAlgebra& g, const LieRep& th,
                             const std::vector<Scalar>& eta, const std::vector<Scalar>& x,
                             int i) {
  for (int d = 0; d < a.max_degree; ++d)
    if (!a.d(d).is_zero())
      throw std::invalid_argument("rank_one_resonance_test: algebra must have zero differential");
  if (i < 0 || i >= a.max_degree)
    throw std::invalid_argument("rank_one_resonance_test: degree must be below the truncation");
  (void)g;
  Matrix tx = th.apply(x);
  if (tx.is_singular() && cohomology_dim(a, i) >= 1) return true;
  if (!tx.is_nilpotent() && scalar_resonance_membership(a, eta, i)) return true;
  return false;
}

FlatConnection pullback_connection(const CdgaMorphism& phi, const FlatConnection& omega) {
  if (omega.coeffs.rows() != phi.source.dim(1))
    throw std::invalid_argument("pullback_connection: connection lives on the wrong algebra");
  FlatConnection out;
  out.coeffs = phi.maps[1] * omega.coeffs;
  return out;
}

bool in_pullback_image(const CdgaMorphism& phi, const FlatConnection& omega) {
  const Matrix& f1 = phi.maps[1];
  std::size_t base = f1.rank();
  return Matrix::hstack(f1, omega.coeffs).rank() == base;
}

std::optional<FlatConnection> pullback_preimage(const CdgaMorphism& phi,
                                                const FlatConnection& omega) {
  const Matrix& f1 = phi.maps[1];
  Matrix pre(f1.cols(), omega.coeffs.cols());
  for (std::size_t k = 0; k < omega.coeffs.cols(); ++k) {
    auto x = f1.solve(omega.coeffs.col(k));
    if (!x) return std::nullopt;
    pre.set_col(k, *x);
  }
  return FlatConnection{std::move(pre)};
}

}  // namespace jumploci
