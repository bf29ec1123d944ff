#include "jumploci/gauge.hpp"

#include <stdexcept>

namespace jumploci {

namespace {

std::vector<std::vector<MultiPoly>> zero_grid(std::size_t rows, std::size_t cols,
                                              const TruncatedRing& ring) {
  return std::vector<std::vector<MultiPoly>>(rows,
                                             std::vector<MultiPoly>(cols, ring.zero()));
}

bool grid_zero(const std::vector<std::vector<MultiPoly>>& grid) {
  for (const auto& row : grid)
    for (const auto& p : row)
      if (!p.is_zero()) return false;
  return true;
}

/* [alpha, w] for a degree-0 parameter and a degree-1 connection:
   entry (j,k) collects alpha_{k1} w_{j,k2} over brackets [g_{k1}, g_{k2}]. */
std::vector<std::vector<MultiPoly>> bracket01(const LieAlgebra& g, const TruncatedRing& ring,
                                              const std::vector<MultiPoly>& alpha,
                                              const std::vector<std::vector<MultiPoly>>& w) {
  std::size_t n1 = w.size(), ng = g.dim();
  auto out = zero_grid(n1, ng, ring);
  for (std::size_t k1 = 0; k1 < ng; ++k1) {
    if (alpha[k1].is_zero()) continue;
    for (std::size_t k2 = 0; k2 < ng; ++k2)
      for (std::size_t k = 0; k < ng; ++k) {
        const Scalar& c = g.table[k1][k2][k];
        if (c.is_zero()) continue;
        for (std::size_t j = 0; j < n1; ++j)
          out[j][k] = out[j][k] + ring.mul(alpha[k1], w[j][k2]).scaled(c);
      }
  }
  return out;
}

/* All exponent vectors of total degree exactly d, in lexicographic order. */
void monomials_of_degree(std::size_t nvars, unsigned d, MultiPoly::Exp& cur,
                         std::size_t pos, std::vector<MultiPoly::Exp>& out) {
  if (pos + 1 == nvars) {
    cur[pos] = d;
    out.push_back(cur);
    cur[pos] = 0;
    return;
  }
  for (unsigned take = 0; take <= d; ++take) {
    cur[pos] = take;
    monomials_of_degree(nvars, d - take, cur, pos + 1, out);
  }
  cur[pos] = 0;
}

std::vector<MultiPoly::Exp> monomials_of_degree(std::size_t nvars, unsigned d) {
  std::vector<MultiPoly::Exp> out;
  if (nvars == 0) return out;
  MultiPoly::Exp cur(nvars, 0);
  monomials_of_degree(nvars, d, cur, 0, out);
  return out;
}

}  // namespace

ArtinConnection artin_zero(const Cdga& a, const LieAlgebra& g, const TruncatedRing& ring) {
  ArtinConnection w;
  w.grid = zero_grid(a.dim(1), g.dim(), ring);
  return w;
}

bool artin_connection_valid(const Cdga& a, const LieAlgebra& g, const TruncatedRing& ring,
                            const ArtinConnection& w) {
  if (w.grid.size() != a.dim(1)) return false;
  for (const auto& row : w.grid) {
    if (row.size() != g.dim()) return false;
    for (const auto& p : row) {
      if (!ring.in_max_ideal(p)) return false;
      if (!(p.truncated(ring.order) == p)) return false;
      if (p.vars() != ring.vars) return false;
    }
  }
  return true;
}

bool artin_equal(const ArtinConnection& x, const ArtinConnection& y) {
  if (x.grid.size() != y.grid.size()) return false;
  for (std::size_t j = 0; j < x.grid.size(); ++j) {
    if (x.grid[j].size() != y.grid[j].size()) return false;
    for (std::size_t k = 0; k < x.grid[j].size(); ++k)
      if (!(x.grid[j][k] == y.grid[j][k])) return false;
  }
  return true;
}

std::vector<std::vector<MultiPoly>> artin_mc_defect(const Cdga& a, const LieAlgebra& g,
                                                    const TruncatedRing& ring,
                                                    const ArtinConnection& w) {
  std::size_t n1 = a.dim(1), n2 = a.dim(2), ng = g.dim();
  auto defect = zero_grid(n2, ng, ring);
  const Matrix& d1 = a.d(1);
  for (std::size_t v = 0; v < n2; ++v)
    for (std::size_t j = 0; j < n1; ++j) {
      if (d1.at(v, j).is_zero()) continue;
      for (std::size_t k = 0; k < ng; ++k)
        defect[v][k] = defect[v][k] + w.grid[j][k].scaled(d1.at(v, j));
    }
  Matrix mul = a.product_matrix(1, 1);
  Scalar half(BigRat(1, 2));
  for (std::size_t j = 0; j < n1; ++j)
    for (std::size_t l = 0; l < n1; ++l)
      for (std::size_t v = 0; v < n2; ++v) {
        const Scalar& m = mul.at(v, j * n1 + l);
        if (m.is_zero()) continue;
        for (std::size_t k1 = 0; k1 < ng; ++k1)
          for (std::size_t k2 = 0; k2 < ng; ++k2)
            for (std::size_t k = 0; k < ng; ++k) {
              const Scalar& br = g.table[k1][k2][k];
              if (br.is_zero()) continue;
              defect[v][k] = defect[v][k] +
                             ring.mul(w.grid[j][k1], w.grid[l][k2]).scaled(half * m * br);
            }
      }
  return defect;
}

bool artin_mc_check(const Cdga& a, const LieAlgebra& g, const TruncatedRing& ring,
                    const ArtinConnection& w) {
  return grid_zero(artin_mc_defect(a, g, ring, w));
}

ArtinConnection gauge_act(const Cdga& a, const LieAlgebra& g, const TruncatedRing& ring,
                          const GaugeElement& alpha, const ArtinConnection& w) {
  std::size_t n1 = a.dim(1), ng = g.dim();
  if (alpha.comps.size() != ng) throw std::invalid_argument("gauge_act: alpha arity mismatch");
  for (const auto& p : alpha.comps)
    if (!ring.in_max_ideal(p))
      throw std::invalid_argument("gauge_act: alpha must lie in the maximal ideal");

  // d alpha: the degree-0 differential applied coefficientwise (identically
  // zero for connected algebras; kept explicit so the formula is complete).
  auto dalpha = zero_grid(n1, ng, ring);
  const Matrix& d0 = a.d(0);
  for (std::size_t j = 0; j < n1; ++j)
    if (!d0.at(j, 0).is_zero())
      for (std::size_t k = 0; k < ng; ++k)
        dalpha[j][k] = alpha.comps[k].scaled(d0.at(j, 0));

  auto v = bracket01(g, ring, alpha.comps, w.grid);
  for (std::size_t j = 0; j < n1; ++j)
    for (std::size_t k = 0; k < ng; ++k) v[j][k] = v[j][k] - dalpha[j][k];

  ArtinConnection out = w;
  auto term = v;
  BigRat fact(1);
  for (unsigned n = 0; !grid_zero(term) && n <= ring.order + 1; ++n) {
    fact *= BigRat(static_cast<long>(n) + 1);
    Scalar c(BigRat(1) / fact);
    for (std::size_t j = 0; j < n1; ++j)
      for (std::size_t k = 0; k < ng; ++k)
        out.grid[j][k] = out.grid[j][k] + term[j][k].scaled(c);
    term = bracket01(g, ring, alpha.comps, term);
  }
  return out;
}

LiftResult mc_lift(const Cdga& a, const LieAlgebra& g, const TruncatedRing& ring,
                   const ArtinConnection& omega, unsigned k) {
  if (ring.order < k + 1)
    throw std::invalid_argument("mc_lift: ring order must be at least k + 1");
  for (const auto& row : omega.grid)
    for (const auto& p : row)
      if (!(p.truncated(k) == p))
        throw std::invalid_argument("mc_lift: omega must have polynomial degree below k");

  auto defect = artin_mc_defect(a, g, ring, omega);
  std::size_t n1 = a.dim(1), n2 = a.dim(2), ng = g.dim();
  for (const auto& row : defect)
    for (const auto& p : row)
      if (!p.truncated(k).is_zero())
        throw std::invalid_argument("mc_lift: omega is not flat modulo the k-th ideal power");

  // Unknown correction chi of pure polynomial degree k enters the order-k
  // defect linearly through d(chi); brackets with chi live beyond order k.
  std::vector<MultiPoly::Exp> monos = monomials_of_degree(ring.vars.size(), k);
  const Matrix& d1 = a.d(1);

  LiftResult res;
  res.lift = omega;
  auto obstruction = zero_grid(n2, ng, ring);
  bool all_solved = true;

  // Canonical reduction data for the quotient by im(d1).
  std::vector<std::size_t> image_pivots;
  Matrix image_rows = d1.transpose().rref(&image_pivots);

  for (std::size_t kk = 0; kk < ng; ++kk)
    for (const auto& mu : monos) {
      std::vector<Scalar> b(n2);
      bool any = false;
      for (std::size_t v = 0; v < n2; ++v) {
        b[v] = defect[v][kk].coeff(mu);
        if (!b[v].is_zero()) any = true;
      }
      if (!any) continue;
      std::vector<Scalar> rhs(n2);
      for (std::size_t v = 0; v < n2; ++v) rhs[v] = -b[v];
      auto x = d1.solve(rhs);
      if (x) {
        for (std::size_t j = 0; j < n1; ++j)
          if (!(*x)[j].is_zero()) res.lift.grid[j][kk].add_term(mu, (*x)[j]);
      } else {
        all_solved = false;
        // Reduce b against the row-reduced image basis for a canonical
        // residue class representative.
        std::vector<Scalar> r = b;
        for (std::size_t row = 0; row < image_pivots.size(); ++row) {
          const Scalar& lead = r[image_pivots[row]];
          if (lead.is_zero()) continue;
          for (std::size_t v = 0; v < n2; ++v)
            r[v] = r[v] - lead * image_rows.at(row, v);
        }
        for (std::size_t v = 0; v < n2; ++v)
          if (!r[v].is_zero()) obstruction[v][kk].add_term(mu, r[v]);
      }
    }

  if (all_solved) {
    res.lifted = true;
    auto check = artin_mc_defect(a, g, ring, res.lift);
    for (auto& row : check)
      for (auto& p : row)
        if (!p.truncated(k + 1).is_zero())
          throw std::logic_error("mc_lift: internal consistency failure");
    return res;
  }
  res.lifted = false;
  res.obstruction = std::move(obstruction);
  std::string s;
  for (std::size_t v = 0; v < n2; ++v)
    for (std::size_t kk = 0; kk < ng; ++kk)
      if (!res.obstruction[v][kk].is_zero()) {
        if (!s.empty()) s += " + ";
        s += "(" + res.obstruction[v][kk].str() + ")*" + a.basis_name(2, v) + "(x)" +
             g.names[kk];
      }
  res.obstruction_str = s;
  return res;
}

std::optional<GaugeElement> gauge_equivalent(const Cdga& a, const LieAlgebra& g,
                                             const TruncatedRing& ring,
                                             const ArtinConnection& w1,
                                             const ArtinConnection& w2,
                                             bool augmented_gauge) {
  std::size_t n1 = a.dim(1), ng = g.dim();
  GaugeElement alpha;
  alpha.comps.assign(ng, ring.zero());
  if (augmented_gauge) {
    // The reduced construction has no degree-0 part over a connected
    // algebra, so only equal connections are equivalent.
    if (artin_equal(w1, w2)) return alpha;
    return std::nullopt;
  }
  if (!a.d(0).is_zero())
    throw std::invalid_argument("gauge_equivalent: algebra must be connected");

  auto err_at = [&](const GaugeElement& al, unsigned d) {
    ArtinConnection moved = gauge_act(a, g, ring, al, w1);
    std::vector<Scalar> flat;
    std::vector<MultiPoly::Exp> monos = monomials_of_degree(ring.vars.size(), d);
    for (std::size_t j = 0; j < n1; ++j)
      for (std::size_t k = 0; k < ng; ++k) {
        MultiPoly diff = moved.grid[j][k] - w2.grid[j][k];
        for (const auto& mu : monos) flat.push_back(diff.coeff(mu));
      }
    return flat;
  };

  // Order 1 carries no gauge freedom: the leading parts must already agree.
  for (const auto& s : err_at(alpha, 1))
    if (!s.is_zero()) return std::nullopt;

  for (unsigned d = 2; d < ring.order; ++d) {
    std::vector<Scalar> base = err_at(alpha, d);
    bool need = false;
    for (const auto& s : base)
      if (!s.is_zero()) need = true;
    std::vector<MultiPoly::Exp> unknowns_monos = monomials_of_degree(ring.vars.size(), d - 1);
    std::size_t nunk = unknowns_monos.size() * ng;
    if (!need) continue;
    if (nunk == 0) return std::nullopt;
    Matrix lin(base.size(), nunk);
    std::size_t col = 0;
    for (const auto& mu : unknowns_monos)
      for (std::size_t k = 0; k < ng; ++k, ++col) {
        GaugeElement probe = alpha;
        probe.comps[k].add_term(mu, Scalar(1));
        std::vector<Scalar> shifted = err_at(probe, d);
        for (std::size_t r = 0; r < base.size(); ++r)
          lin.at(r, col) = shifted[r] - base[r];
      }
    std::vector<Scalar> rhs(base.size());
    for (std::size_t r = 0; r < base.size(); ++r) rhs[r] = -base[r];
    auto sol = lin.solve(rhs);
    if (!sol) return std::nullopt;
    col = 0;
    for (const auto& mu : unknowns_monos)
      for (std::size_t k = 0; k < ng; ++k, ++col)
        if (!(*sol)[col].is_zero()) alpha.comps[k].add_term(mu, (*sol)[col]);
  }

  if (artin_equal(gauge_act(a, g, ring, alpha, w1), w2)) return alpha;
  return std::nullopt;
}

}  // namespace jumploci
