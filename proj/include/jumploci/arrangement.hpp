#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jumploci/cdga.hpp"

namespace jumploci {

/* Central hyperplane arrangement given by the normal covectors of its
   hyperplanes (rows).  Labels name the hyperplanes in file output. */
struct Arrangement {
  Field field = Field::rational;
  std::size_t ambient_rank = 0;
  std::vector<std::string> labels;
  std::vector<std::vector<Scalar>> covectors;

  std::size_t size() const { return covectors.size(); }
};

struct ArrangementReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/* No zero covector, no proportional pair, consistent shapes, unique
   labels. */
ArrangementReport arrangement_valid(const Arrangement& arr);

/* Maximal sets of >= 2 hyperplanes whose covectors span a 2-dimensional
   space.  Every unordered pair of hyperplanes lies in exactly one flat.
   Flats are sorted sets of hyperplane indices, listed lexicographically. */
std::vector<std::vector<std::size_t>> rank2_flats(const Arrangement& arr);

/* Cuts an arrangement of ambient rank > 3 down to rank 3 by a seeded
   random rational slice; retries until the slice is generic, certified by
   preservation of the rank-2 flat collection.  Rank <= 3 input is returned
   unchanged. */
Arrangement reduce_rank(const Arrangement& arr, std::uint64_t seed);

/* Degree <= 2 part of the cohomology ring of the complement: exterior
   algebra on classes e_H modulo, per rank-2 flat, the relations
   e_a e_b = e_min e_b - e_min e_a (min = least flat member).  Zero
   differential; degree-2 basis = { e_min e_t : t in X \ {min} } per flat,
   so dim A^2 = sum over flats of (|X| - 1). */
Cdga os_algebra(const Arrangement& arr);

/* Full exterior algebra on one degree-1 generator per hyperplane. */
Cdga boolean_model(const Arrangement& arr);

/* Quotient morphism from the Boolean model onto the cohomology ring:
   identity on the degree-1 labels, products pushed through the relations.
   Surjective in both positive degrees. */
CdgaMorphism boolean_morphism(const Arrangement& arr);

}  // namespace jumploci
