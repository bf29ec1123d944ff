#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "jumploci/arrangement.hpp"
#include "jumploci/cdga.hpp"
#include "jumploci/connection.hpp"
#include "jumploci/gauge.hpp"
#include "jumploci/groups.hpp"
#include "jumploci/lie.hpp"
#include "jumploci/multinet.hpp"

namespace jumploci {

/* Anything wrong with an input file: unreadable, malformed, or failing a
   domain validation at load time.  The command line maps this to exit
   code 2, distinct from verification failures. */
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path);

/* FNV-1a 64-bit digest of the file bytes, as "fnv1a64:<hex>"; recorded in
   verification reports to pin the inputs. */
std::string file_hash(const std::string& path);

/* Scalars are encoded as "p/q" (or "p") for rationals and ["p/q","r/s"]
   (real, imaginary) for Gaussian rationals. */

Arrangement load_arrangement(const std::string& path);
std::string arrangement_to_json(const Arrangement& arr);
void save_arrangement(const Arrangement& arr, const std::string& path);

Cdga load_cdga(const std::string& path);
std::string cdga_to_json(const Cdga& a);
void save_cdga(const Cdga& a, const std::string& path);

CdgaMorphism load_morphism(const std::string& path);
std::string morphism_to_json(const CdgaMorphism& m);

/* Accepts a preset name ("sl2", "borel2", "abelianN") or a file path. */
LieAlgebra lie_from_arg(const std::string& arg);
LieAlgebra load_lie(const std::string& path);
std::string lie_to_json(const LieAlgebra& g);

TruncatedRing load_ring(const std::string& path);

GroupPresentation load_presentation(const std::string& path);
Representation load_group_rep(const GroupPresentation& p, const std::string& path);

std::vector<Multinet> load_multinets(const Arrangement& arr, const std::string& path);
std::string multinets_to_json(const Arrangement& arr, const std::vector<Multinet>& nets);

HirschData load_hirsch(const Cdga& base, const std::string& path);

FlatConnection load_flat_connection(const std::string& path);

/* Polynomial cells are lists of [exponent vector, scalar] pairs over the
   ring variables. */
ArtinConnection load_artin_connection(const TruncatedRing& ring, const std::string& path);
GaugeElement load_gauge_element(const TruncatedRing& ring, const std::string& path);

}  // namespace jumploci
