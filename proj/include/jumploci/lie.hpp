#pragma once

#include <string>
#include <vector>

#include "jumploci/cdga.hpp"
#include "jumploci/matrix.hpp"

namespace jumploci {

/* Finite-dimensional Lie algebra given by structure constants:
   table[i][j] = coordinates of [x_i, x_j]. */
struct LieAlgebra {
  std::vector<std::string> names;
  std::vector<std::vector<std::vector<Scalar>>> table;

  std::size_t dim() const { return names.size(); }
  std::vector<Scalar> bracket(const std::vector<Scalar>& x,
                              const std::vector<Scalar>& y) const;
  bool is_abelian() const;
};

ValidationReport validate(const LieAlgebra& g);

LieAlgebra abelian_lie(std::size_t n);
/* Basis (h, e, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h. */
LieAlgebra sl2();
/* Basis (h, e): [h,e] = 2e; the upper-triangular trace-zero 2x2 matrices. */
LieAlgebra borel2();
/* "sl2", "borel2", or "abelianN". */
LieAlgebra lie_preset(const std::string& name);

/* Quotient of the free Lie algebra on n generators by the k-th lower
   central series term, for k = 2 (abelian) or k = 3 (class two, Hall basis
   x_i then [x_i,x_j] for i < j). */
LieAlgebra lcs_free_lie(std::size_t n, int k);

/* Representation: one matrix per basis element of the algebra. */
struct LieRep {
  std::vector<Matrix> mats;
  std::size_t dim_v() const { return mats.empty() ? 0 : mats[0].rows(); }
  /* theta(sum x_i b_i) */
  Matrix apply(const std::vector<Scalar>& x) const;
};

ValidationReport validate(const LieAlgebra& g, const LieRep& th);
LieRep adjoint_rep(const LieAlgebra& g);
/* Defining 2-dimensional representation of sl2 or borel2. */
LieRep standard_rep(const std::string& preset_name);

enum class Sl2Subalgebra { abelian, borel, full };
std::string sl2_subalgebra_name(Sl2Subalgebra c);

/* Classifies the span of the given vectors (coordinates in the (h,e,f)
   basis).  Throws if the vectors are dependent or the span is not closed
   under the bracket. */
Sl2Subalgebra classify_sl2_subalgebra(const std::vector<std::vector<Scalar>>& vectors);

}  // namespace jumploci
