#pragma once

#include "jumploci/cdga.hpp"
#include "jumploci/connection.hpp"
#include "jumploci/lie.hpp"

namespace jumploci {

/* Quadratic presentation of the holonomy Lie algebra of a: one generator
   per degree-1 basis element (dual basis), one relation per degree-2 basis
   element w, of the form
       sum_j linear[w][j] x_j  +  sum_{j<l} quad[w](j,l) [x_j, x_l]  =  0,
   where linear[w] is the w-row of the differential A^1 -> A^2 and quad[w]
   is the antisymmetric matrix dual to multiplication A^1 (x) A^1 -> A^2.
   Relations are kept one-per-basis-vector (not minimized) so indices line
   up with degree-2 coordinates. */
struct HolonomyPresentation {
  std::vector<std::string> generators;
  std::vector<std::string> relation_names;
  std::vector<std::vector<Scalar>> linear;  // per relation, over generators
  std::vector<Matrix> quad;                 // per relation, antisymmetric

  std::string str() const;
};

HolonomyPresentation holonomy(const Cdga& a);

/* Evaluates every holonomy relation at the linear map sending the j-th dual
   generator to the j-th coefficient row of omega; true iff all relations
   vanish, i.e. iff the induced map to g is a Lie algebra morphism.  Agrees
   with mc_check by construction of the presentation (tested, not assumed). */
bool holonomy_hom_check(const Cdga& a, const LieAlgebra& g, const FlatConnection& omega);

}  // namespace jumploci
