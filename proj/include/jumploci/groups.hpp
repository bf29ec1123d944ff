#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "jumploci/matrix.hpp"
#include "jumploci/multipoly.hpp"

namespace jumploci {

/* Group words are sequences of signed generator references: +(k+1) means
   generator k, -(k+1) means its inverse. */
using Word = std::vector<int>;

Word free_reduce(Word w);

struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;  // stored freely reduced

  std::size_t gen_count() const { return generators.size(); }
  std::size_t rel_count() const { return relators.size(); }
};

/* Validates generator names (nonempty, distinct) and relator indices,
   freely reducing every relator. */
GroupPresentation make_presentation(std::vector<std::string> generators,
                                    std::vector<Word> relators);

/* Token form used by presentation files: a token naming a generator is the
   generator, the same token with its letters uppercased is the inverse. */
Word word_from_tokens(const std::vector<std::string>& generators,
                      const std::vector<std::string>& tokens);
std::vector<std::string> word_to_tokens(const std::vector<std::string>& generators,
                                        const Word& w);

struct Representation {
  std::size_t dim = 0;
  std::vector<Matrix> matrices;  // one per generator, invertible
};

/* Checks squareness, invertibility, and that every relator evaluates to
   the identity matrix. */
Representation make_representation(const GroupPresentation& p,
                                   std::vector<Matrix> matrices);

Matrix rep_word(const Representation& rho, const Word& w);

/* Cellular twisted cochain complex of the presentation 2-complex:
   d0: V -> V^m stacks the blocks rho(x_j) - I, d1: V^m -> V^r has block
   (i,j) equal to the Fox derivative of relator i by generator j pushed
   through rho.  d1*d0 = 0 always. */
struct TwistedComplex {
  Matrix d0;
  Matrix d1;
};

TwistedComplex fox_jacobian(const GroupPresentation& p, const Representation& rho);

/* Twisted cohomology dimensions of the 2-complex; degree 2 is the
   complex-level H^2, not group cohomology. */
std::size_t twisted_h(const GroupPresentation& p, const Representation& rho, int degree);

/* Characteristic-variety membership: dim H^degree >= r. */
bool cv_membership(const GroupPresentation& p, const Representation& rho,
                   int degree, std::size_t r);

/* Polynomial equations cutting out Hom(pi, G) inside the generator-entry
   affine space.  Variables are ordered generator by generator, row-major
   entries first ("g_11", "g_12", ...), then for GL_n one inverse-of-det
   variable "g_t" per generator.  Inverse letters in relators expand through
   the adjugate (times "g_t" for GL_n). */
std::vector<MultiPoly> rep_variety_system(const GroupPresentation& p,
                                          const std::string& target,
                                          std::size_t n = 2);

/* The assignment under which the system must vanish for a representation
   landing in the chosen target group. */
std::vector<Scalar> rep_variety_point(const GroupPresentation& p,
                                      const std::string& target,
                                      const Representation& rho,
                                      std::size_t n = 2);

/* rho' composed with the homomorphism sending source generator i to
   images[i] (a word in the target generators).  Throws when some source
   relator image is not killed by rho', i.e. the supplied images do not
   define a homomorphism compatible with rho'.  Surjectivity of the map is
   caller-asserted metadata and not decided here. */
Representation pullback_rep(const GroupPresentation& source,
                            const std::vector<Word>& images,
                            const GroupPresentation& target,
                            const Representation& rho_target);

struct Abelianization {
  std::size_t free_rank = 0;
  std::vector<BigInt> torsion;  // invariant factors > 1, divisibility chain
  Matrix projection;            // free_rank x m, integral entries
};

/* Smith normal form of the relator exponent-sum matrix. */
Abelianization abelianization(const GroupPresentation& p);

}  // namespace jumploci
