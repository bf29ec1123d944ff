#pragma once

#include <optional>
#include <utility>

#include "jumploci/cdga.hpp"
#include "jumploci/lie.hpp"
#include "jumploci/multipoly.hpp"

namespace jumploci {

/* Lie-algebra valued degree-1 element: coeffs is dim A^1 x dim g, entry
   (j,k) the coefficient of a_j (x) g_k. */
struct FlatConnection {
  Matrix coeffs;
};

/* One polynomial per (degree-2 basis element, Lie basis element): the
   coefficients of d(w) + (1/2)[w,w] in unknown connection coefficients
   c[a][g], ordered a-major. */
std::vector<MultiPoly> mc_equations(const Cdga& a, const LieAlgebra& g);
std::vector<std::string> mc_variables(const Cdga& a, const LieAlgebra& g);

/* Exact evaluation of mc_equations at the connection's coefficients. */
bool mc_check(const Cdga& a, const LieAlgebra& g, const FlatConnection& omega);

/* Covariant differential d (x) id + left-multiplication twist on A (x) V;
   returns matrices for degrees 0..max_degree-1.  Index convention:
   basis element (s, t) of A^i (x) V sits at s * dim V + t. */
std::vector<Matrix> aomoto(const Cdga& a, const LieAlgebra& g, const LieRep& th,
                           const FlatConnection& omega);

struct DimReport {
  std::size_t dim = 0;
  bool truncated = false;
};

/* Cohomology dimension of the twisted complex at degree i; truncated flag
   set at the top degree where the outgoing differential is unknown. */
DimReport aomoto_h_dim(const Cdga& a, const LieAlgebra& g, const LieRep& th,
                       const FlatConnection& omega, int i);

/* dim H^i >= r for the twisted complex.  Preconditions: omega flat
   (throws otherwise), i < max_degree. */
bool resonance_membership(const Cdga& a, const LieAlgebra& g, const LieRep& th,
                          const FlatConnection& omega, int i, std::size_t r);

/* Some(eta, x) when coeffs factors exactly as eta (x) x with d(eta) = 0;
   the zero connection factors as (0, 0). */
std::optional<std::pair<std::vector<Scalar>, std::vector<Scalar>>> rank_one_factor(
    const Cdga& a, const FlatConnection& omega);

bool rank_one_locus_membership(const Cdga& a, const FlatConnection& omega);

/* Rank-one factorization with singular theta(x). */
bool pi_locus_membership(const Cdga& a, const LieAlgebra& g, const LieRep& th,
                         const FlatConnection& omega);

/* eta in R^i_1(A) for the rank-one scalar twist d + eta ^ (.); requires a
   closed eta and i < max_degree. */
bool scalar_resonance_membership(const Cdga& a, const std::vector<Scalar>& eta, int i);

/* Membership of eta (x) x in R^i_1(A, theta) for zero-differential algebras,
   decided without eigenvalue computation:
     true  iff  [theta(x) singular and b_i >= 1]
            or  [theta(x) not nilpotent and eta in R^i_1(A)].
   Sound because scalar jump loci of zero-differential algebras are
   homogeneous cones, so a nonzero eigenvalue can be rescaled away and the
   zero eigenvalue reduces to the Betti-number dichotomy. */
bool rank_one_resonance_test(const Cdga& a, const LieAlgebra& g, const LieRep& th,
                             const std::vector<Scalar>& eta, const std::vector<Scalar>& x,
                             int i);

/* (phi (x) id) omega for a morphism phi: source -> target and a connection
   on the source. */
FlatConnection pullback_connection(const CdgaMorphism& phi, const FlatConnection& omega);

/* Columns of omega all lie in the column span of phi^1. */
bool in_pullback_image(const CdgaMorphism& phi, const FlatConnection& omega);

/* A source connection mapping to omega under phi, when one exists (unique
   whenever phi^1 is injective). */
std::optional<FlatConnection> pullback_preimage(const CdgaMorphism& phi,
                                                const FlatConnection& omega);

}  // namespace jumploci
