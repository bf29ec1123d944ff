#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "jumploci/scalar.hpp"

namespace jumploci {

/* Multivariate polynomial over Q(i) with a fixed variable list.  Terms are
   keyed by exponent vectors; zero coefficients are never stored, so
   is_zero() and operator== are exact. */
class MultiPoly {
 public:
  using Exp = std::vector<unsigned>;

  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static MultiPoly constant(std::vector<std::string> vars, const Scalar& c) {
    MultiPoly p(std::move(vars));
    p.add_term(Exp(p.vars_.size(), 0), c);
    return p;
  }
  static MultiPoly var(std::vector<std::string> vars, std::size_t idx) {
    MultiPoly p(std::move(vars));
    if (idx >= p.vars_.size()) throw std::invalid_argument("var index out of range");
    Exp e(p.vars_.size(), 0);
    e[idx] = 1;
    p.add_term(e, Scalar(1));
    return p;
  }

  const std::vector<std::string>& vars() const { return vars_; }
  const std::map<Exp, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exp& e, const Scalar& c) {
    if (e.size() != vars_.size()) throw std::invalid_argument("exponent arity mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Scalar coeff(const Exp& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  MultiPoly operator+(const MultiPoly& o) const {
    check_vars(o);
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
  }
  MultiPoly operator-(const MultiPoly& o) const {
    check_vars(o);
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
  }
  MultiPoly operator*(const MultiPoly& o) const {
    check_vars(o);
    MultiPoly r(vars_);
    for (const auto& [e1, c1] : terms_)
      for (const auto& [e2, c2] : o.terms_) {
        Exp e(e1.size());
        for (std::size_t k = 0; k < e.size(); ++k) e[k] = e1[k] + e2[k];
        r.add_term(e, c1 * c2);
      }
    return r;
  }
  MultiPoly scaled(const Scalar& c) const {
    MultiPoly r(vars_);
    for (const auto& [e, v] : terms_) r.add_term(e, v * c);
    return r;
  }
  MultiPoly operator-() const { return scaled(Scalar(-1)); }

  bool operator==(const MultiPoly& o) const {
    return vars_ == o.vars_ && terms_ == o.terms_;
  }

  static unsigned total_degree(const Exp& e) {
    unsigned d = 0;
    for (auto x : e) d += x;
    return d;
  }
  unsigned degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
  }

  /* Drops every term of total degree >= order. */
  MultiPoly truncated(unsigned order) const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_)
      if (total_degree(e) < order) r.add_term(e, c);
    return r;
  }

  /* Terms of total degree exactly d. */
  MultiPoly homogeneous_part(unsigned d) const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_)
      if (total_degree(e) == d) r.add_term(e, c);
    return r;
  }

  Scalar eval(const std::vector<Scalar>& point) const {
    if (point.size() != vars_.size()) throw std::invalid_argument("eval arity mismatch");
    Scalar acc(0);
    for (const auto& [e, c] : terms_) {
      Scalar t = c;
      for (std::size_t k = 0; k < e.size(); ++k)
        for (unsigned p = 0; p < e[k]; ++p) t *= point[k];
      acc += t;
    }
    return acc;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
      if (!out.empty()) out += " + ";
      std::string mono;
      for (std::size_t k = 0; k < e.size(); ++k) {
        if (e[k] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += vars_[k];
        if (e[k] > 1) mono += "^" + std::to_string(e[k]);
      }
      if (mono.empty()) {
        out += c.str();
      } else if (c == Scalar(1)) {
        out += mono;
      } else {
        out += "(" + c.str() + ")*" + mono;
      }
    }
    return out;
  }

 private:
  void check_vars(const MultiPoly& o) const {
    if (vars_ != o.vars_) throw std::invalid_argument("variable list mismatch");
  }

  std::vector<std::string> vars_;
  std::map<Exp, Scalar> terms_;
};

/* Quotient ring k[t1..ts] / (monomials of total degree >= order).
   Elements are plain MultiPoly values kept truncated; mul() re-truncates. */
struct TruncatedRing {
  std::vector<std::string> vars;
  unsigned order = 2;

  MultiPoly zero() const { return MultiPoly(vars); }
  MultiPoly one() const { return MultiPoly::constant(vars, Scalar(1)); }
  MultiPoly gen(std::size_t i) const { return MultiPoly::var(vars, i); }
  MultiPoly reduce(const MultiPoly& p) const { return p.truncated(order); }
  MultiPoly mul(const MultiPoly& a, const MultiPoly& b) const {
    return (a * b).truncated(order);
  }
  /* True iff p lies in the maximal ideal (zero constant term). */
  bool in_max_ideal(const MultiPoly& p) const {
    return p.coeff(MultiPoly::Exp(vars.size(), 0)).is_zero();
  }
};

}  // namespace jumploci
