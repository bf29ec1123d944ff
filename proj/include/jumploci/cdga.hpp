#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jumploci/matrix.hpp"

namespace jumploci {

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/* Finite connected graded-commutative differential algebra, truncated at
   max_degree.  Degree 0 is one-dimensional (the unit).  Products between
   positive degrees are stored as matrices mapping A^i (x) A^j -> A^{i+j}
   (column index a * dim(j) + b); products with the unit are implicit.
   The differential is stored only up to max_degree - 1; anything that
   would land beyond the truncation is treated as unknown, and queries at
   the top degree are flagged. */
struct Cdga {
  Field field = Field::rational;
  int max_degree = 2;
  std::vector<std::vector<std::string>> basis;   // basis[d], d = 0..max_degree
  std::map<std::pair<int, int>, Matrix> products;  // keys (i,j), i,j >= 1
  std::vector<Matrix> diff;                      // diff[d]: dim(d+1) x dim(d)

  std::size_t dim(int d) const {
    return (d >= 0 && d <= max_degree) ? basis[static_cast<std::size_t>(d)].size() : 0;
  }
  const std::string& basis_name(int d, std::size_t idx) const {
    return basis[static_cast<std::size_t>(d)][idx];
  }
  std::optional<std::size_t> find_basis(int d, const std::string& name) const;
  /* Degree and index of a globally unique basis name. */
  std::optional<std::pair<int, std::size_t>> find_name(const std::string& name) const;

  /* Multiplication matrix A^i (x) A^j -> A^{i+j}; the zero map when the
     result degree exceeds the truncation or no table entry exists.  If only
     the transposed-degree table (j,i) is stored, the (i,j) map is derived
     from graded commutativity. */
  Matrix product_matrix(int i, int j) const;
  bool has_stored_product(int i, int j) const { return products.count({i, j}) > 0; }

  std::vector<Scalar> multiply(int i, const std::vector<Scalar>& x, int j,
                               const std::vector<Scalar>& y) const;
  const Matrix& d(int i) const { return diff[static_cast<std::size_t>(i)]; }
  std::vector<Scalar> apply_d(int i, const std::vector<Scalar>& x) const;

  /* Zero element / shape helpers. */
  std::vector<Scalar> zero_vec(int d) const { return std::vector<Scalar>(dim(d)); }
};

ValidationReport validate(const Cdga& a);

struct CohomologyData {
  std::size_t dim = 0;
  /* Columns are cocycle representatives of a homogeneous basis of H^i,
     in deterministic reduced form. */
  Matrix representatives;
  /* True at the top degree, where the differential out of A^i is not part
     of the truncated data and all of A^i counts as cocycles. */
  bool truncated = false;
};

CohomologyData cohomology(const Cdga& a, int i);
std::size_t cohomology_dim(const Cdga& a, int i);

/* Degree-1 extension data: new odd generators u with d(u) = tau(u), where
   each tau column is expressed over the degree-2 basis of the base. */
struct HirschData {
  std::vector<std::string> generators;
  Matrix tau;  // dim base A^2  x  generators
};

/* base (x)_tau /\(generators), truncated at degree 2.  Degree-2 basis order:
   base degree-2 elements, then (base-1 x generator) products in
   lexicographic (base index, generator index) order, then generator pairs
   u_i u_j (i < j) in lexicographic order. */
Cdga hirsch_extend(const Cdga& base, const HirschData& h);

/* Inclusion of the base into the extension built by hirsch_extend. */
struct CdgaMorphism {
  Cdga source;
  Cdga target;
  std::vector<Matrix> maps;  // maps[d]: dim_target(d) x dim_source(d)
};

ValidationReport validate_morphism(const CdgaMorphism& m);
CdgaMorphism hirsch_inclusion(const Cdga& base, const Cdga& extended);

struct ConnectivityResult {
  bool connected = false;
  /* Set when the degree-(q+1) injectivity check ran against truncated
     cohomology.  A pass is still sound (true cocycle classes embed into the
     truncated quotient); a failure is recorded in detail. */
  bool truncated_top = false;
  std::string detail;
};

/* H^i(m) bijective for i <= q and injective for i = q + 1, mapping
   H(source) -> H(target).  Throws if q + 1 exceeds the truncation. */
ConnectivityResult morphism_connectivity(const CdgaMorphism& m, int q);

/* Full exterior algebra on the given degree-1 labels, zero differential,
   truncated at degree 2. */
Cdga exterior_model(const std::vector<std::string>& labels, Field field);

/* Exterior algebra on H^1(a) together with the morphism into a that sends
   the i-th generator to the i-th cohomology representative. */
CdgaMorphism cocycle_span_morphism(const Cdga& a, const std::string& label_prefix);

}  // namespace jumploci
