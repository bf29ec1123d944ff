#include "jumploci/groups.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <utility>

namespace jumploci {

namespace {

void check_letter(const GroupPresentation& p, int letter) {
  if (letter == 0) throw std::invalid_argument("word letter 0 is not a generator reference");
  std::size_t idx = static_cast<std::size_t>(std::abs(letter)) - 1;
  if (idx >= p.gen_count()) throw std::invalid_argument("word letter out of generator range");
}

std::string upper(std::string s) {
  for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

}  // namespace

Word free_reduce(Word w) {
  Word out;
  for (int letter : w) {
    if (!out.empty() && out.back() == -letter)
      out.pop_back();
    else
      out.push_back(letter);
  }
  return out;
}

GroupPresentation make_presentation(std::vector<std::string> generators,
                                    std::vector<Word> relators) {
  GroupPresentation p;
  p.generators = std::move(generators);
  for (const auto& g : p.generators) {
    if (g.empty()) throw std::invalid_argument("empty generator name");
    if (std::count(p.generators.begin(), p.generators.end(), g) != 1)
      throw std::invalid_argument("duplicate generator name: " + g);
  }
  for (auto& w : relators) {
    for (int letter : w) check_letter(p, letter);
    p.relators.push_back(free_reduce(std::move(w)));
  }
  return p;
}

Word word_from_tokens(const std::vector<std::string>& generators,
                      const std::vector<std::string>& tokens) {
  Word w;
  for (const auto& t : tokens) {
    bool found = false;
    for (std::size_t i = 0; i < generators.size(); ++i) {
      if (t == generators[i]) {
        w.push_back(static_cast<int>(i) + 1);
        found = true;
        break;
      }
      if (t != generators[i] && t == upper(generators[i])) {
        w.push_back(-(static_cast<int>(i) + 1));
        found = true;
        break;
      }
    }
    if (!found) throw std::invalid_argument("unknown word token: " + t);
  }
  return w;
}

std::vector<std::string> word_to_tokens(const std::vector<std::string>& generators,
                                        const Word& w) {
  std::vector<std::string> out;
  for (int letter : w) {
    std::size_t idx = static_cast<std::size_t>(std::abs(letter)) - 1;
    if (idx >= generators.size()) throw std::invalid_argument("word letter out of range");
    out.push_back(letter > 0 ? generators[idx] : upper(generators[idx]));
  }
  return out;
}

Matrix rep_word(const Representation& rho, const Word& w) {
  Matrix m = Matrix::identity(rho.dim);
  for (int letter : w) {
    std::size_t idx = static_cast<std::size_t>(std::abs(letter)) - 1;
    if (idx >= rho.matrices.size()) throw std::invalid_argument("word letter out of range");
    m = m * (letter > 0 ? rho.matrices[idx] : rho.matrices[idx].inverse());
  }
  return m;
}

Representation make_representation(const GroupPresentation& p,
                                   std::vector<Matrix> matrices) {
  if (matrices.size() != p.gen_count())
    throw std::invalid_argument("one matrix per generator required");
  Representation rho;
  rho.dim = matrices.empty() ? 0 : matrices[0].rows();
  rho.matrices = std::move(matrices);
  for (std::size_t i = 0; i < rho.matrices.size(); ++i) {
    const Matrix& m = rho.matrices[i];
    if (m.rows() != rho.dim || m.cols() != rho.dim)
      throw std::invalid_argument("representation matrices must be square of equal size");
    if (m.is_singular())
      throw std::invalid_argument("matrix for generator " + p.generators[i] + " is singular");
  }
  for (std::size_t r = 0; r < p.rel_count(); ++r) {
    if (!(rep_word(rho, p.relators[r]) == Matrix::identity(rho.dim)))
      throw std::invalid_argument("relator " + std::to_string(r) +
                                  " does not evaluate to the identity");
  }
  return rho;
}

TwistedComplex fox_jacobian(const GroupPresentation& p, const Representation& rho) {
  std::size_t m = p.gen_count(), r = p.rel_count(), n = rho.dim;
  TwistedComplex tc;
  tc.d0 = Matrix(m * n, n);
  for (std::size_t j = 0; j < m; ++j) {
    Matrix block = rho.matrices[j] - Matrix::identity(n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) tc.d0.at(j * n + a, b) = block.at(a, b);
  }
  tc.d1 = Matrix(r * n, m * n);
  std::vector<Matrix> inv(m);
  for (std::size_t j = 0; j < m; ++j) inv[j] = rho.matrices[j].inverse();
  for (std::size_t i = 0; i < r; ++i) {
    // One left-to-right pass accumulates every Fox derivative of relator i:
    // a positive letter x_j contributes rho(prefix), a negative one
    // contributes -rho(prefix) * rho(x_j)^-1.
    std::vector<Matrix> deriv(m, Matrix(n, n));
    Matrix prefix = Matrix::identity(n);
    for (int letter : p.relators[i]) {
      std::size_t j = static_cast<std::size_t>(std::abs(letter)) - 1;
      if (letter > 0) {
        deriv[j] = deriv[j] + prefix;
        prefix = prefix * rho.matrices[j];
      } else {
        Matrix step = prefix * inv[j];
        deriv[j] = deriv[j] - step;
        prefix = step;
      }
    }
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          tc.d1.at(i * n + a, j * n + b) = deriv[j].at(a, b);
  }
  if (!(tc.d1 * tc.d0).is_zero())
    throw std::logic_error("Fox identity d1*d0 = 0 violated");
  return tc;
}

std::size_t twisted_h(const GroupPresentation& p, const Representation& rho, int degree) {
  TwistedComplex tc = fox_jacobian(p, rho);
  std::size_t n = rho.dim, m = p.gen_count(), r = p.rel_count();
  std::size_t rank0 = tc.d0.rank(), rank1 = tc.d1.rank();
  switch (degree) {
    case 0:
      return n - rank0;
    case 1:
      return (m * n - rank1) - rank0;
    case 2:
      return r * n - rank1;
    default:
      throw std::invalid_argument("twisted cohomology is defined for degrees 0,1,2");
  }
}

bool cv_membership(const GroupPresentation& p, const Representation& rho,
                   int degree, std::size_t r) {
  if (degree < 0 || degree > 1)
    throw std::invalid_argument("characteristic-variety membership uses degrees 0,1");
  return twisted_h(p, rho, degree) >= r;
}

namespace {

using PolyMat = std::vector<std::vector<MultiPoly>>;

PolyMat poly_identity(const std::vector<std::string>& vars, std::size_t n) {
  PolyMat m(n, std::vector<MultiPoly>(n, MultiPoly::constant(vars, Scalar(0))));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = MultiPoly::constant(vars, Scalar(1));
  return m;
}

PolyMat poly_mul(const PolyMat& a, const PolyMat& b) {
  std::size_t n = a.size();
  PolyMat r(n, std::vector<MultiPoly>(n, MultiPoly::constant(a[0][0].vars(), Scalar(0))));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) r[i][j] = r[i][j] + a[i][k] * b[k][j];
  return r;
}

MultiPoly poly_det(const PolyMat& m) {
  std::size_t n = m.size();
  if (n == 1) return m[0][0];
  MultiPoly acc = MultiPoly::constant(m[0][0].vars(), Scalar(0));
  // Laplace expansion along the first row; n stays small here.
  for (std::size_t j = 0; j < n; ++j) {
    PolyMat minor;
    for (std::size_t a = 1; a < n; ++a) {
      std::vector<MultiPoly> row;
      for (std::size_t b = 0; b < n; ++b)
        if (b != j) row.push_back(m[a][b]);
      minor.push_back(std::move(row));
    }
    MultiPoly term = m[0][j] * poly_det(minor);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

PolyMat poly_adjugate(const PolyMat& m) {
  std::size_t n = m.size();
  PolyMat adj(n, std::vector<MultiPoly>(n, MultiPoly::constant(m[0][0].vars(), Scalar(0))));
  if (n == 1) {
    adj[0][0] = MultiPoly::constant(m[0][0].vars(), Scalar(1));
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      PolyMat minor;
      for (std::size_t a = 0; a < n; ++a) {
        if (a == i) continue;
        std::vector<MultiPoly> row;
        for (std::size_t b = 0; b < n; ++b)
          if (b != j) row.push_back(m[a][b]);
        minor.push_back(std::move(row));
      }
      MultiPoly c = poly_det(minor);
      adj[j][i] = ((i + j) % 2 == 0) ? c : MultiPoly::constant(c.vars(), Scalar(0)) - c;
    }
  return adj;
}

struct TargetShape {
  std::size_t n = 2;
  bool gl = false;     // has per-generator inverse-of-det variable
  bool borel = false;  // lower-triangular entries forced to zero
};

TargetShape target_shape(const std::string& target, std::size_t n) {
  if (target == "SL2") return {2, false, false};
  if (target == "upper-triangular-SL2") return {2, false, true};
  if (target == "GL_n") {
    if (n == 0) throw std::invalid_argument("GL_n needs n >= 1");
    return {n, true, false};
  }
  throw std::invalid_argument("unknown representation target: " + target);
}

std::vector<std::string> system_vars(const GroupPresentation& p, const TargetShape& ts) {
  std::vector<std::string> vars;
  for (const auto& g : p.generators) {
    for (std::size_t i = 1; i <= ts.n; ++i)
      for (std::size_t j = 1; j <= ts.n; ++j)
        vars.push_back(g + "_" + std::to_string(i) + std::to_string(j));
    if (ts.gl) vars.push_back(g + "_t");
  }
  return vars;
}

}  // namespace

std::vector<MultiPoly> rep_variety_system(const GroupPresentation& p,
                                          const std::string& target,
                                          std::size_t n) {
  TargetShape ts = target_shape(target, n);
  std::vector<std::string> vars = system_vars(p, ts);
  std::size_t per_gen = ts.n * ts.n + (ts.gl ? 1 : 0);

  auto gen_matrix = [&](std::size_t g) {
    PolyMat m(ts.n, std::vector<MultiPoly>(ts.n, MultiPoly::constant(vars, Scalar(0))));
    for (std::size_t i = 0; i < ts.n; ++i)
      for (std::size_t j = 0; j < ts.n; ++j)
        m[i][j] = MultiPoly::var(vars, g * per_gen + i * ts.n + j);
    return m;
  };
  auto gen_inverse = [&](std::size_t g) {
    PolyMat adj = poly_adjugate(gen_matrix(g));
    if (!ts.gl) return adj;  // det = 1 is part of the system
    MultiPoly t = MultiPoly::var(vars, g * per_gen + ts.n * ts.n);
    for (auto& row : adj)
      for (auto& e : row) e = e * t;
    return adj;
  };

  std::vector<MultiPoly> eqs;
  MultiPoly one = MultiPoly::constant(vars, Scalar(1));
  for (std::size_t g = 0; g < p.gen_count(); ++g) {
    MultiPoly det = poly_det(gen_matrix(g));
    if (ts.gl)
      eqs.push_back(det * MultiPoly::var(vars, g * per_gen + ts.n * ts.n) - one);
    else
      eqs.push_back(det - one);
    if (ts.borel)
      for (std::size_t i = 0; i < ts.n; ++i)
        for (std::size_t j = 0; j < i; ++j)
          eqs.push_back(MultiPoly::var(vars, g * per_gen + i * ts.n + j));
  }
  for (const Word& rel : p.relators) {
    PolyMat acc = poly_identity(vars, ts.n);
    for (int letter : rel) {
      std::size_t g = static_cast<std::size_t>(std::abs(letter)) - 1;
      acc = poly_mul(acc, letter > 0 ? gen_matrix(g) : gen_inverse(g));
    }
    for (std::size_t i = 0; i < ts.n; ++i)
      for (std::size_t j = 0; j < ts.n; ++j) {
        MultiPoly e = (i == j) ? acc[i][j] - one : acc[i][j];
        eqs.push_back(std::move(e));
      }
  }
  return eqs;
}

std::vector<Scalar> rep_variety_point(const GroupPresentation& p,
                                      const std::string& target,
                                      const Representation& rho,
                                      std::size_t n) {
  TargetShape ts = target_shape(target, n);
  if (rho.dim != ts.n)
    throw std::invalid_argument("representation dimension does not match the target group");
  std::vector<Scalar> point;
  for (std::size_t g = 0; g < p.gen_count(); ++g) {
    const Matrix& m = rho.matrices[g];
    for (std::size_t i = 0; i < ts.n; ++i)
      for (std::size_t j = 0; j < ts.n; ++j) point.push_back(m.at(i, j));
    if (ts.gl) point.push_back(Scalar(1) / m.det());
  }
  return point;
}

Representation pullback_rep(const GroupPresentation& source,
                            const std::vector<Word>& images,
                            const GroupPresentation& target,
                            const Representation& rho_target) {
  if (images.size() != source.gen_count())
    throw std::invalid_argument("one image word per source generator required");
  for (const Word& w : images)
    for (int letter : w) check_letter(target, letter);
  std::vector<Matrix> mats;
  for (const Word& w : images) mats.push_back(rep_word(rho_target, w));
  // make_representation's relator check is exactly rho'(f(r)) = I.
  return make_representation(source, std::move(mats));
}

namespace {

/* Row/column reduction to Smith form over the integers, tracking only the
   row operations (they carry the generator coordinates). */
struct SmithState {
  std::vector<std::vector<BigInt>> m;  // gen_count x rel_count
  std::vector<std::vector<BigInt>> u;  // gen_count x gen_count, unimodular

  std::size_t rows() const { return m.size(); }
  std::size_t cols() const { return m.empty() ? 0 : m[0].size(); }

  void swap_rows(std::size_t a, std::size_t b) {
    std::swap(m[a], m[b]);
    std::swap(u[a], u[b]);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    for (auto& row : m) std::swap(row[a], row[b]);
  }
  void add_row(std::size_t dst, std::size_t src, const BigInt& c) {
    for (std::size_t j = 0; j < cols(); ++j) m[dst][j] += c * m[src][j];
    for (std::size_t j = 0; j < rows(); ++j) u[dst][j] += c * u[src][j];
  }
  void add_col(std::size_t dst, std::size_t src, const BigInt& c) {
    for (auto& row : m) row[dst] += c * row[src];
  }
  void negate_row(std::size_t a) {
    for (auto& v : m[a]) v = -v;
    for (auto& v : u[a]) v = -v;
  }
};

void smith_diagonalize(SmithState& s) {
  std::size_t t = 0;
  while (t < s.rows() && t < s.cols()) {
    // pick the absolutely smallest nonzero entry of the trailing block
    std::size_t pi = t, pj = t;
    BigInt best = 0;
    for (std::size_t i = t; i < s.rows(); ++i)
      for (std::size_t j = t; j < s.cols(); ++j) {
        if (s.m[i][j] == 0) continue;
        BigInt a = abs(s.m[i][j]);
        if (best == 0 || a < best) {
          best = a;
          pi = i;
          pj = j;
        }
      }
    if (best == 0) break;
    s.swap_rows(t, pi);
    s.swap_cols(t, pj);
    bool clean = true;
    for (std::size_t i = t + 1; i < s.rows(); ++i)
      if (s.m[i][t] != 0) {
        s.add_row(i, t, -(s.m[i][t] / s.m[t][t]));
        if (s.m[i][t] != 0) clean = false;
      }
    for (std::size_t j = t + 1; j < s.cols(); ++j)
      if (s.m[t][j] != 0) {
        s.add_col(j, t, -(s.m[t][j] / s.m[t][t]));
        if (s.m[t][j] != 0) clean = false;
      }
    if (!clean) continue;  // a smaller remainder appeared; redo this pivot
    if (s.m[t][t] < 0) s.negate_row(t);
    ++t;
  }
}

}  // namespace

Abelianization abelianization(const GroupPresentation& p) {
  std::size_t m = p.gen_count(), r = p.rel_count();
  SmithState s;
  s.m.assign(m, std::vector<BigInt>(r, 0));
  s.u.assign(m, std::vector<BigInt>(m, 0));
  for (std::size_t i = 0; i < m; ++i) s.u[i][i] = 1;
  // column k = exponent-sum vector of relator k
  for (std::size_t k = 0; k < r; ++k)
    for (int letter : p.relators[k]) {
      std::size_t idx = static_cast<std::size_t>(std::abs(letter)) - 1;
      s.m[idx][k] += (letter > 0) ? 1 : -1;
    }
  smith_diagonalize(s);
  // enforce the divisibility chain d_t | d_{t+1}
  for (bool changed = true; changed;) {
    changed = false;
    std::size_t limit = std::min(s.rows(), s.cols());
    for (std::size_t t = 0; t + 1 < limit; ++t) {
      const BigInt& a = s.m[t][t];
      const BigInt& b = s.m[t + 1][t + 1];
      if (a != 0 && b % a != 0) {
        s.add_col(t, t + 1, 1);
        smith_diagonalize(s);
        changed = true;
        break;
      }
    }
  }
  Abelianization ab;
  std::size_t diag = std::min(m, r);
  std::vector<std::size_t> free_rows;
  for (std::size_t t = 0; t < m; ++t) {
    BigInt d = (t < diag) ? s.m[t][t] : BigInt(0);
    if (d == 0)
      free_rows.push_back(t);
    else if (d > 1)
      ab.torsion.push_back(d);
  }
  ab.free_rank = free_rows.size();
  ab.projection = Matrix(ab.free_rank, m);
  for (std::size_t i = 0; i < free_rows.size(); ++i)
    for (std::size_t j = 0; j < m; ++j)
      ab.projection.at(i, j) = Scalar(BigRat(s.u[free_rows[i]][j]));
  return ab;
}

}  // namespace jumploci
