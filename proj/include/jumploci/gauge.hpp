#pragma once

#include <optional>

#include "jumploci/cdga.hpp"
#include "jumploci/lie.hpp"
#include "jumploci/multipoly.hpp"

namespace jumploci {

/* Connection with coefficients in the maximal ideal of a truncated
   polynomial ring: grid[j][k] is the ring coefficient of a_j (x) g_k. */
struct ArtinConnection {
  std::vector<std::vector<MultiPoly>> grid;
};

/* Degree-0 gauge parameter: one maximal-ideal ring element per Lie basis
   vector (the degree-0 part of A (x) g is a copy of g for connected A). */
struct GaugeElement {
  std::vector<MultiPoly> comps;
};

ArtinConnection artin_zero(const Cdga& a, const LieAlgebra& g, const TruncatedRing& ring);
bool artin_connection_valid(const Cdga& a, const LieAlgebra& g, const TruncatedRing& ring,
                            const ArtinConnection& w);
bool artin_equal(const ArtinConnection& x, const ArtinConnection& y);

/* d(w) + (1/2)[w,w] over the ring. */
std::vector<std::vector<MultiPoly>> artin_mc_defect(const Cdga& a, const LieAlgebra& g,
                                                    const TruncatedRing& ring,
                                                    const ArtinConnection& w);
bool artin_mc_check(const Cdga& a, const LieAlgebra& g, const TruncatedRing& ring,
                    const ArtinConnection& w);

/* exp(alpha) . w = w + sum_{n>=0} ad(alpha)^n / (n+1)!  ([alpha, w] - d alpha).
   The series terminates because alpha sits in the maximal ideal, which is
   nilpotent in the truncated ring; factorials are exact rationals. */
ArtinConnection gauge_act(const Cdga& a, const LieAlgebra& g, const TruncatedRing& ring,
                          const GaugeElement& alpha, const ArtinConnection& w);

struct LiftResult {
  bool lifted = false;
  ArtinConnection lift;  // defined when lifted
  /* Canonical representative of the order-k defect modulo the image of the
     differential, nonzero exactly when the lift is obstructed; grid over
     (degree-2 basis) x (Lie basis). */
  std::vector<std::vector<MultiPoly>> obstruction;
  std::string obstruction_str;
};

/* Given omega flat modulo the k-th power of the maximal ideal (entries of
   polynomial degree < k), solves for an order-k correction making it flat
   modulo the (k+1)-st power.  ring.order must be at least k + 1. */
LiftResult mc_lift(const Cdga& a, const LieAlgebra& g, const TruncatedRing& ring,
                   const ArtinConnection& omega, unsigned k);

/* Order-by-order affine-linear solve for alpha with exp(alpha) . w1 = w2.
   Returns a witness or nullopt when some order is unsolvable.  When
   augmented_gauge is set, the gauge group of the reduced (augmentation
   ideal) construction is used, which is trivial for connected algebras:
   the result is Some(0) iff w1 == w2. */
std::optional<GaugeElement> gauge_equivalent(const Cdga& a, const LieAlgebra& g,
                                             const TruncatedRing& ring,
                                             const ArtinConnection& w1,
                                             const ArtinConnection& w2,
                                             bool augmented_gauge = false);

}  // namespace jumploci
