#include "jumploci/io.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <utility>

namespace jumploci {

namespace {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

json parse_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path + ": cannot open file");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw IoError(path + ": " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError(path + ": cannot open file for writing");
  out << text;
}

[[noreturn]] void bad(const std::string& path, const std::string& what) {
  throw IoError(path + ": " + what);
}

BigRat file_rat(const std::string& path, const std::string& s) {
  try {
    return parse_rat(s);
  } catch (const std::invalid_argument& e) {
    bad(path, e.what());
  }
}

Scalar parse_scalar(const std::string& path, const json& j) {
  if (j.is_string()) return Scalar(file_rat(path, j.get<std::string>()));
  if (j.is_array() && j.size() == 2 && j[0].is_string() && j[1].is_string())
    return Scalar(file_rat(path, j[0].get<std::string>()),
                  file_rat(path, j[1].get<std::string>()));
  bad(path, "scalar must be \"p/q\" or [\"p/q\",\"r/s\"]");
}

/* Same, but rejects imaginary parts when the declaring file is rational. */
Scalar parse_scalar_in(const std::string& path, const json& j, Field field) {
  Scalar s = parse_scalar(path, j);
  if (field == Field::rational && !s.im().is_zero())
    bad(path, "imaginary scalar in a rational-field file");
  return s;
}

ordered scalar_json(const Scalar& s, Field field) {
  if (field == Field::gaussian) return ordered::array({rat_str(s.re()), rat_str(s.im())});
  return ordered(rat_str(s.re()));
}

const json& need(const std::string& path, const json& j, const std::string& key) {
  if (!j.is_object() || !j.contains(key)) bad(path, "missing field '" + key + "'");
  return j.at(key);
}

std::vector<std::string> string_list(const std::string& path, const json& j,
                                     const std::string& what) {
  if (!j.is_array()) bad(path, what + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) bad(path, what + " must be an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

Field parse_field(const std::string& path, const json& j) {
  const json& f = need(path, j, "field");
  if (!f.is_string()) bad(path, "'field' must be a string");
  try {
    return field_from_name(f.get<std::string>());
  } catch (const std::exception& e) {
    bad(path, e.what());
  }
}

Matrix parse_matrix(const std::string& path, const json& j, const std::string& what) {
  if (!j.is_array() || j.empty()) bad(path, what + " must be a nonempty array of rows");
  std::vector<std::vector<Scalar>> rows;
  for (const auto& r : j) {
    if (!r.is_array()) bad(path, what + " rows must be arrays");
    std::vector<Scalar> row;
    for (const auto& e : r) row.push_back(parse_scalar(path, e));
    rows.push_back(std::move(row));
    if (rows.back().size() != rows.front().size())
      bad(path, what + " rows must have equal length");
  }
  return Matrix::from_rows(rows);
}

ordered matrix_json(const Matrix& m, Field field) {
  ordered rows = ordered::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ordered row = ordered::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_json(m.at(i, j), field));
    rows.push_back(std::move(row));
  }
  return rows;
}

MultiPoly parse_poly(const std::string& path, const TruncatedRing& ring, const json& j) {
  if (!j.is_array()) bad(path, "polynomial must be a list of [exponents, scalar] pairs");
  MultiPoly p(ring.vars);
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2 || !term[0].is_array())
      bad(path, "polynomial term must be [exponents, scalar]");
    MultiPoly::Exp e;
    for (const auto& x : term[0]) {
      if (!x.is_number_unsigned()) bad(path, "exponents must be non-negative integers");
      e.push_back(x.get<unsigned>());
    }
    if (e.size() != ring.vars.size()) bad(path, "exponent arity does not match ring variables");
    p.add_term(e, parse_scalar(path, term[1]));
  }
  return ring.reduce(p);
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string file_hash(const std::string& path) {
  std::string data = read_file(path);
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream out;
  out << "fnv1a64:" << std::hex << h;
  return out.str();
}

Arrangement load_arrangement(const std::string& path) {
  json j = parse_file(path);
  Arrangement arr;
  arr.field = parse_field(path, j);
  const json& rank = need(path, j, "rank");
  if (!rank.is_number_unsigned()) bad(path, "'rank' must be a non-negative integer");
  arr.ambient_rank = rank.get<std::size_t>();
  const json& hyps = need(path, j, "hyperplanes");
  if (!hyps.is_array()) bad(path, "'hyperplanes' must be an array");
  for (const auto& h : hyps) {
    if (!h.is_array()) bad(path, "each hyperplane must be an array of scalars");
    std::vector<Scalar> cov;
    for (const auto& e : h) cov.push_back(parse_scalar_in(path, e, arr.field));
    arr.covectors.push_back(std::move(cov));
  }
  arr.labels = string_list(path, need(path, j, "labels"), "'labels'");
  ArrangementReport rep = arrangement_valid(arr);
  if (!rep.ok()) bad(path, rep.violations.front());
  return arr;
}

std::string arrangement_to_json(const Arrangement& arr) {
  ordered j;
  j["field"] = field_name(arr.field);
  j["rank"] = arr.ambient_rank;
  j["hyperplanes"] = ordered::array();
  for (const auto& cov : arr.covectors) {
    ordered row = ordered::array();
    for (const auto& c : cov) row.push_back(scalar_json(c, arr.field));
    j["hyperplanes"].push_back(std::move(row));
  }
  j["labels"] = arr.labels;
  return j.dump(2) + "\n";
}

void save_arrangement(const Arrangement& arr, const std::string& path) {
  write_text(path, arrangement_to_json(arr));
}

namespace {

Cdga cdga_from_json(const std::string& path, const json& j) {
  Cdga a;
  a.field = parse_field(path, j);
  const json& md = need(path, j, "max_degree");
  if (!md.is_number_unsigned()) bad(path, "'max_degree' must be a non-negative integer");
  a.max_degree = md.get<int>();
  const json& basis = need(path, j, "basis");
  if (!basis.is_object()) bad(path, "'basis' must map degree strings to name lists");
  a.basis.assign(static_cast<std::size_t>(a.max_degree) + 1, {});
  for (const auto& [key, names] : basis.items()) {
    int d = -1;
    try {
      d = std::stoi(key);
    } catch (const std::exception&) {
      bad(path, "basis key '" + key + "' is not a degree");
    }
    if (d < 0 || d > a.max_degree) bad(path, "basis degree " + key + " out of range");
    a.basis[static_cast<std::size_t>(d)] = string_list(path, names, "basis[" + key + "]");
  }
  auto locate = [&](const std::string& name) {
    auto pos = a.find_name(name);
    if (!pos) bad(path, "unknown basis name '" + name + "'");
    return *pos;
  };
  const json& prod = need(path, j, "product");
  if (!prod.is_array()) bad(path, "'product' must be an array");
  for (const auto& entry : prod) {
    if (!entry.is_array() || entry.size() != 3 || !entry[0].is_string() || !entry[1].is_string())
      bad(path, "product entry must be [left_name, right_name, image]");
    auto [di, ai] = locate(entry[0].get<std::string>());
    auto [dj, bj] = locate(entry[1].get<std::string>());
    if (di < 1 || dj < 1) bad(path, "products with the unit are implicit");
    if (di + dj > a.max_degree) bad(path, "product lands beyond the truncation");
    auto key = std::make_pair(di, dj);
    if (!a.products.count(key))
      a.products[key] = Matrix(a.dim(di + dj), a.dim(di) * a.dim(dj));
    Matrix& table = a.products[key];
    if (!entry[2].is_array()) bad(path, "product image must be [[name, scalar], ...]");
    for (const auto& term : entry[2]) {
      if (!term.is_array() || term.size() != 2 || !term[0].is_string())
        bad(path, "product image term must be [name, scalar]");
      auto [dk, k] = locate(term[0].get<std::string>());
      if (dk != di + dj) bad(path, "product image degree mismatch");
      table.at(k, ai * a.dim(dj) + bj) = parse_scalar_in(path, term[1], a.field);
    }
  }
  a.diff.clear();
  for (int d = 0; d < a.max_degree; ++d) a.diff.push_back(Matrix(a.dim(d + 1), a.dim(d)));
  const json& diff = need(path, j, "differential");
  if (!diff.is_array()) bad(path, "'differential' must be an array");
  for (const auto& entry : diff) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_string())
      bad(path, "differential entry must be [src_name, image]");
    auto [d, src] = locate(entry[0].get<std::string>());
    if (d >= a.max_degree) bad(path, "differential out of the top degree is not stored");
    if (!entry[1].is_array()) bad(path, "differential image must be [[name, scalar], ...]");
    for (const auto& term : entry[1]) {
      if (!term.is_array() || term.size() != 2 || !term[0].is_string())
        bad(path, "differential image term must be [name, scalar]");
      auto [dk, k] = locate(term[0].get<std::string>());
      if (dk != d + 1) bad(path, "differential image degree mismatch");
      a.diff[static_cast<std::size_t>(d)].at(k, src) = parse_scalar_in(path, term[1], a.field);
    }
  }
  ValidationReport rep = validate(a);
  if (!rep.ok()) bad(path, rep.violations.front());
  return a;
}

ordered cdga_json_object(const Cdga& a) {
  ordered j;
  j["field"] = field_name(a.field);
  j["max_degree"] = a.max_degree;
  j["basis"] = ordered::object();
  for (int d = 0; d <= a.max_degree; ++d)
    j["basis"][std::to_string(d)] = a.basis[static_cast<std::size_t>(d)];
  j["product"] = ordered::array();
  for (const auto& [key, table] : a.products) {
    auto [di, dj] = key;
    for (std::size_t ai = 0; ai < a.dim(di); ++ai)
      for (std::size_t bj = 0; bj < a.dim(dj); ++bj) {
        ordered image = ordered::array();
        for (std::size_t k = 0; k < a.dim(di + dj); ++k) {
          const Scalar& c = table.at(k, ai * a.dim(dj) + bj);
          if (!c.is_zero())
            image.push_back(ordered::array(
                {ordered(a.basis_name(di + dj, k)), scalar_json(c, a.field)}));
        }
        if (!image.empty())
          j["product"].push_back(ordered::array(
              {ordered(a.basis_name(di, ai)), ordered(a.basis_name(dj, bj)), image}));
      }
  }
  j["differential"] = ordered::array();
  for (int d = 0; d < a.max_degree; ++d)
    for (std::size_t src = 0; src < a.dim(d); ++src) {
      ordered image = ordered::array();
      for (std::size_t k = 0; k < a.dim(d + 1); ++k) {
        const Scalar& c = a.diff[static_cast<std::size_t>(d)].at(k, src);
        if (!c.is_zero())
          image.push_back(
              ordered::array({ordered(a.basis_name(d + 1, k)), scalar_json(c, a.field)}));
      }
      if (!image.empty())
        j["differential"].push_back(ordered::array({ordered(a.basis_name(d, src)), image}));
    }
  return j;
}

}  // namespace

Cdga load_cdga(const std::string& path) { return cdga_from_json(path, parse_file(path)); }

std::string cdga_to_json(const Cdga& a) { return cdga_json_object(a).dump(2) + "\n"; }

void save_cdga(const Cdga& a, const std::string& path) { write_text(path, cdga_to_json(a)); }

CdgaMorphism load_morphism(const std::string& path) {
  json j = parse_file(path);
  // source and target are embedded CDGA objects; maps are per-degree
  // matrices, rows indexed by the target basis.
  CdgaMorphism m;
  m.source = cdga_from_json(path, need(path, j, "source"));
  m.target = cdga_from_json(path, need(path, j, "target"));
  const json& maps = need(path, j, "maps");
  if (!maps.is_object()) bad(path, "'maps' must map degree strings to matrices");
  for (int d = 0; d <= m.source.max_degree; ++d) {
    std::string key = std::to_string(d);
    if (maps.contains(key)) {
      m.maps.push_back(parse_matrix(path, maps.at(key), "maps[" + key + "]"));
    } else {
      m.maps.push_back(Matrix(m.target.dim(d), m.source.dim(d)));
      if (d == 0) m.maps.back().at(0, 0) = Scalar(1);
    }
  }
  ValidationReport rep = validate_morphism(m);
  if (!rep.ok()) bad(path, rep.violations.front());
  return m;
}

std::string morphism_to_json(const CdgaMorphism& m) {
  ordered j;
  j["source"] = cdga_json_object(m.source);
  j["target"] = cdga_json_object(m.target);
  j["maps"] = ordered::object();
  for (std::size_t d = 0; d < m.maps.size(); ++d)
    j["maps"][std::to_string(d)] = matrix_json(m.maps[d], m.source.field);
  return j.dump(2) + "\n";
}

LieAlgebra lie_from_arg(const std::string& arg) {
  try {
    return lie_preset(arg);
  } catch (const std::invalid_argument&) {
    return load_lie(arg);
  }
}

LieAlgebra load_lie(const std::string& path) {
  json j = parse_file(path);
  LieAlgebra g;
  g.names = string_list(path, need(path, j, "basis"), "'basis'");
  const json& dim = need(path, j, "dim");
  if (!dim.is_number_unsigned() || dim.get<std::size_t>() != g.names.size())
    bad(path, "'dim' must equal the basis length");
  std::size_t n = g.names.size();
  g.table.assign(n, std::vector<std::vector<Scalar>>(n, std::vector<Scalar>(n)));
  const json& brackets = need(path, j, "brackets");
  if (!brackets.is_array()) bad(path, "'brackets' must be an array");
  for (const auto& entry : brackets) {
    if (!entry.is_array() || entry.size() != 3 || !entry[0].is_number_unsigned() ||
        !entry[1].is_number_unsigned() || !entry[2].is_array())
      bad(path, "bracket entry must be [i, j, [[k, scalar], ...]]");
    std::size_t i = entry[0].get<std::size_t>(), jj = entry[1].get<std::size_t>();
    if (i >= n || jj >= n) bad(path, "bracket index out of range");
    for (const auto& term : entry[2]) {
      if (!term.is_array() || term.size() != 2 || !term[0].is_number_unsigned())
        bad(path, "bracket term must be [k, scalar]");
      std::size_t k = term[0].get<std::size_t>();
      if (k >= n) bad(path, "bracket term index out of range");
      Scalar c = parse_scalar(path, term[1]);
      g.table[i][jj][k] = c;
      g.table[jj][i][k] = -c;
    }
  }
  ValidationReport rep = validate(g);
  if (!rep.ok()) bad(path, rep.violations.front());
  return g;
}

std::string lie_to_json(const LieAlgebra& g) {
  ordered j;
  j["dim"] = g.dim();
  j["basis"] = g.names;
  j["brackets"] = ordered::array();
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t k = i + 1; k < g.dim(); ++k) {
      ordered image = ordered::array();
      for (std::size_t l = 0; l < g.dim(); ++l)
        if (!g.table[i][k][l].is_zero())
          image.push_back(ordered::array({ordered(l), scalar_json(g.table[i][k][l],
                                                                  Field::rational)}));
      if (!image.empty()) j["brackets"].push_back(ordered::array({ordered(i), ordered(k), image}));
    }
  return j.dump(2) + "\n";
}

TruncatedRing load_ring(const std::string& path) {
  json j = parse_file(path);
  TruncatedRing ring;
  ring.vars = string_list(path, need(path, j, "vars"), "'vars'");
  const json& order = need(path, j, "order");
  if (!order.is_number_unsigned() || order.get<std::size_t>() == 0)
    bad(path, "'order' must be a positive integer");
  ring.order = order.get<std::size_t>();
  if (ring.vars.empty()) bad(path, "ring needs at least one variable");
  return ring;
}

GroupPresentation load_presentation(const std::string& path) {
  json j = parse_file(path);
  std::vector<std::string> gens = string_list(path, need(path, j, "generators"), "'generators'");
  const json& rels = need(path, j, "relators");
  if (!rels.is_array()) bad(path, "'relators' must be an array of token lists");
  std::vector<Word> words;
  try {
    for (const auto& r : rels)
      words.push_back(word_from_tokens(gens, string_list(path, r, "relator")));
    return make_presentation(gens, words);
  } catch (const std::invalid_argument& e) {
    bad(path, e.what());
  }
}

Representation load_group_rep(const GroupPresentation& p, const std::string& path) {
  json j = parse_file(path);
  const json& dim = need(path, j, "dim");
  if (!dim.is_number_unsigned() || dim.get<std::size_t>() == 0)
    bad(path, "'dim' must be a positive integer");
  const json& mats = need(path, j, "matrices");
  if (!mats.is_object()) bad(path, "'matrices' must map generator names to matrices");
  std::vector<Matrix> matrices;
  for (const auto& g : p.generators) {
    if (!mats.contains(g)) bad(path, "missing matrix for generator '" + g + "'");
    matrices.push_back(parse_matrix(path, mats.at(g), "matrix of '" + g + "'"));
    if (matrices.back().rows() != dim.get<std::size_t>())
      bad(path, "matrix of '" + g + "' does not match 'dim'");
  }
  try {
    return make_representation(p, std::move(matrices));
  } catch (const std::invalid_argument& e) {
    bad(path, e.what());
  }
}

std::vector<Multinet> load_multinets(const Arrangement& arr, const std::string& path) {
  json j = parse_file(path);
  if (!j.is_array()) bad(path, "multinet file must be an array");
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < arr.labels.size(); ++i) index[arr.labels[i]] = i;
  std::vector<Multinet> nets;
  for (const auto& entry : j) {
    const json& classes = need(path, entry, "classes");
    if (!classes.is_array() || classes.size() < 2)
      bad(path, "'classes' must list at least two label groups");
    std::map<std::size_t, std::size_t> cls_of;
    for (std::size_t c = 0; c < classes.size(); ++c)
      for (const auto& lbl : string_list(path, classes[c], "class")) {
        auto it = index.find(lbl);
        if (it == index.end()) bad(path, "unknown hyperplane label '" + lbl + "'");
        if (cls_of.count(it->second)) bad(path, "label '" + lbl + "' used twice");
        cls_of[it->second] = c;
      }
    Multinet net;
    net.k = classes.size();
    // cls_of is keyed by hyperplane index, so base comes out sorted
    for (const auto& [idx, c] : cls_of) {
      net.base.push_back(idx);
      net.cls.push_back(c);
      net.mult.push_back(1);
    }
    if (entry.contains("multiplicities")) {
      const json& mults = entry.at("multiplicities");
      if (!mults.is_object()) bad(path, "'multiplicities' must map labels to integers");
      for (const auto& [lbl, v] : mults.items()) {
        auto it = index.find(lbl);
        if (it == index.end()) bad(path, "unknown hyperplane label '" + lbl + "'");
        if (!v.is_number_unsigned() || v.get<unsigned>() == 0)
          bad(path, "multiplicities must be positive integers");
        auto pos = std::find(net.base.begin(), net.base.end(), it->second);
        if (pos == net.base.end()) bad(path, "multiplicity for a label outside the classes");
        net.mult[static_cast<std::size_t>(pos - net.base.begin())] = v.get<unsigned>();
      }
    }
    nets.push_back(std::move(net));
  }
  return nets;
}

std::string multinets_to_json(const Arrangement& arr, const std::vector<Multinet>& nets) {
  ordered j = ordered::array();
  for (const auto& net : nets) {
    ordered entry;
    entry["classes"] = ordered::array();
    for (std::size_t c = 0; c < net.k; ++c) {
      ordered labels = ordered::array();
      for (std::size_t i = 0; i < net.base.size(); ++i)
        if (net.cls[i] == c) labels.push_back(arr.labels[net.base[i]]);
      entry["classes"].push_back(std::move(labels));
    }
    entry["multiplicities"] = ordered::object();
    for (std::size_t i = 0; i < net.base.size(); ++i)
      entry["multiplicities"][arr.labels[net.base[i]]] = net.mult[i];
    j.push_back(std::move(entry));
  }
  return j.dump(2) + "\n";
}

HirschData load_hirsch(const Cdga& base, const std::string& path) {
  json j = parse_file(path);
  HirschData h;
  h.generators = string_list(path, need(path, j, "generators"), "'generators'");
  if (h.generators.empty()) bad(path, "at least one extension generator required");
  h.tau = Matrix(base.dim(2), h.generators.size());
  const json& tau = need(path, j, "tau");
  if (!tau.is_object()) bad(path, "'tau' must map generator names to degree-2 combinations");
  for (const auto& [gen, image] : tau.items()) {
    auto it = std::find(h.generators.begin(), h.generators.end(), gen);
    if (it == h.generators.end()) bad(path, "tau names unknown generator '" + gen + "'");
    std::size_t col = static_cast<std::size_t>(it - h.generators.begin());
    if (!image.is_array()) bad(path, "tau image must be [[name, scalar], ...]");
    for (const auto& term : image) {
      if (!term.is_array() || term.size() != 2 || !term[0].is_string())
        bad(path, "tau image term must be [name, scalar]");
      auto pos = base.find_basis(2, term[0].get<std::string>());
      if (!pos) bad(path, "tau image names unknown degree-2 element");
      h.tau.at(*pos, col) = parse_scalar(path, term[1]);
    }
  }
  return h;
}

FlatConnection load_flat_connection(const std::string& path) {
  json j = parse_file(path);
  FlatConnection omega;
  omega.coeffs = parse_matrix(path, need(path, j, "omega"), "'omega'");
  return omega;
}

ArtinConnection load_artin_connection(const TruncatedRing& ring, const std::string& path) {
  json j = parse_file(path);
  const json& grid = need(path, j, "grid");
  if (!grid.is_array() || grid.empty()) bad(path, "'grid' must be a nonempty array of rows");
  ArtinConnection w;
  for (const auto& row : grid) {
    if (!row.is_array()) bad(path, "'grid' rows must be arrays of polynomials");
    std::vector<MultiPoly> cells;
    for (const auto& cell : row) cells.push_back(parse_poly(path, ring, cell));
    w.grid.push_back(std::move(cells));
    if (w.grid.back().size() != w.grid.front().size())
      bad(path, "'grid' rows must have equal length");
  }
  for (const auto& row : w.grid)
    for (const auto& cell : row)
      if (!ring.in_max_ideal(cell)) bad(path, "connection entries must have zero constant term");
  return w;
}

GaugeElement load_gauge_element(const TruncatedRing& ring, const std::string& path) {
  json j = parse_file(path);
  const json& comps = need(path, j, "comps");
  if (!comps.is_array()) bad(path, "'comps' must be an array of polynomials");
  GaugeElement alpha;
  for (const auto& cell : comps) alpha.comps.push_back(parse_poly(path, ring, cell));
  for (const auto& cell : alpha.comps)
    if (!ring.in_max_ideal(cell)) bad(path, "gauge components must have zero constant term");
  return alpha;
}

}  // namespace jumploci
