#pragma once

#include <optional>
#include <utility>

#include "jumploci/arrangement.hpp"

namespace jumploci {

/* Weighted partition of a sub-arrangement into k >= 3 classes.  cls[i] and
   mult[i] are the class and multiplicity of hyperplane base[i]; class
   labels are canonical (first occurrences in increasing order). */
struct Multinet {
  std::vector<std::size_t> base;  // sorted hyperplane indices
  std::size_t k = 0;
  std::vector<std::size_t> cls;
  std::vector<unsigned> mult;
};

/* Constants (a_i, b_i) with Q_i = a_i Q_1 + b_i Q_2 for i = 3..k, where
   Q_i is the multiplicity-weighted product of the class-i forms. */
struct PencilData {
  std::vector<std::pair<Scalar, Scalar>> constants;
};

/* Axioms: nonempty classes with equal weighted sizes; for every rank-2
   flat of the base meeting at least two classes, the weighted class sums
   agree across all classes; the class products lie in a pencil. */
ArrangementReport multinet_valid(const Arrangement& arr, const Multinet& n);

/* Exact coefficient solve for the pencil constants; nullopt when some
   class product is outside the span of the first two. */
std::optional<PencilData> multinet_to_pencil(const Multinet& n, const Arrangement& arr);

/* All multinets with k classes and multiplicities <= max_mult over
   sub-arrangements of size >= k, one per relabeling orbit, ordered
   lexicographically by (base, multiplicities, partition).  Input caps:
   size <= 12, 3 <= k <= 4, max_mult <= 2. */
std::vector<Multinet> multinet_enumerate(const Arrangement& arr, std::size_t k,
                                         unsigned max_mult);

/* Multiplicity-weighted indicator vector of class i over the e_H basis. */
std::vector<Scalar> weighted_class_sum(const Multinet& n, const Arrangement& arr,
                                       std::size_t i);

/* Degree <= 2 cohomology of a sphere minus k points: k - 1 degree-1
   classes, nothing in degree 2. */
Cdga rational_curve_model(std::size_t k, Field field);

struct AdmissibleModel {
  Multinet net;
  CdgaMorphism phi;  // rational_curve_model(k) -> os_algebra(arr)
};

/* Degree-1 map c_i -> u_i - u_k on weighted class sums; validated, which
   makes the image an isotropic subspace of the degree-2 cohomology. */
AdmissibleModel admissible_morphism(const Multinet& n, const Arrangement& arr);

}  // namespace jumploci
