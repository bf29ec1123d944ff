#pragma once

#include "jumploci/connection.hpp"
#include "jumploci/multinet.hpp"
#include "jumploci/report.hpp"
#include "jumploci/rng.hpp"

namespace jumploci {

/* Linear subspace of the degree-1 space in canonical (reduced row echelon,
   zero rows dropped) form, so equal subspaces compare equal. */
struct Subspace {
  Matrix basis_rows;
  std::string tag;

  std::size_t dim() const { return basis_rows.rows(); }
  bool contains(const std::vector<Scalar>& v) const;
  bool contains(const Subspace& other) const;
};

Subspace row_span(const Matrix& rows, const std::string& tag);

/* Components of the degree-1 rank-one resonance locus: per rank-2 flat
   with >= 3 hyperplanes, the vectors supported on the flat with zero
   coefficient sum; per admissible model, the image of its degree-1 map.
   Deduplicated; subspaces contained in a larger listed one are dropped. */
std::vector<Subspace> resonance_components(const Arrangement& arr,
                                           const std::vector<AdmissibleModel>& models);

/* Per-sample membership checks: random points of each component are
   resonant for the rank-one scalar twist, random points off the union are
   not. */
VerificationReport verify_resonance_components(const Arrangement& arr,
                                               const std::vector<AdmissibleModel>& models,
                                               std::size_t samples, std::uint64_t seed);

/* Representation of a preset Lie algebra selected by kind. */
LieRep preset_rep(const LieAlgebra& g, const std::string& lie_name,
                  const std::string& rep_kind);

/* Random element with singular representing matrix, exact by construction:
   any element for adjoint kinds, a parametrized determinant-zero point for
   the standard representations. */
std::vector<Scalar> random_singular_element(Rng& rng, const LieAlgebra& g,
                                            const std::string& lie_name,
                                            const std::string& rep_kind, Field field);

/* Two-sided sampled verification of the flat-connection and rank-one
   resonance decompositions of an arrangement's degree <= 2 cohomology:
     F  = rank-one tensors  union  pullbacks along the admissible models,
     R  = singular rank-one tensors  union  the same pullbacks. */
VerificationReport verify_arrangement_decomposition(const Arrangement& arr,
                                                    const std::vector<Multinet>& nets,
                                                    const std::string& lie_name,
                                                    const std::string& rep_kind,
                                                    std::size_t samples,
                                                    std::uint64_t seed);

/* Two-sided sampled verification of the principal-bundle equalities on a
   Hirsch extension of a zero-differential base:
     flat connections       = rank-one tensors  union  base pullbacks,
     rank-one tensors       = image of the degree-1 cohomology exterior hull,
     singular rank-one part = image of the hull's resonant points,
     resonance              subset  singular part union resonant base pullbacks. */
VerificationReport verify_hirsch(const Cdga& base, const HirschData& h,
                                 const std::string& lie_name, const std::string& rep_kind,
                                 std::size_t samples, std::uint64_t seed);

}  // namespace jumploci
