#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "catc/rational.hpp"

namespace catc {

// Sparse exponent vector: (variable index, exponent > 0), sorted by index.
using Monomial = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

// Graded-lex: total degree first, then lexicographic with variable 0 largest.
int grlex_compare(const Monomial& a, const Monomial& b);
struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_compare(a, b) > 0; }
};

Monomial monomial_mul(const Monomial& a, const Monomial& b);
std::optional<Monomial> monomial_div(const Monomial& a, const Monomial& b);
std::uint32_t monomial_degree(const Monomial& m);
std::uint32_t monomial_exponent(const Monomial& m, std::uint32_t var);

using VarList = std::vector<std::string>;
using Vars = std::shared_ptr<const VarList>;
Vars make_vars(VarList names);
// Names c0, c1, ... for anonymous coordinate systems.
Vars coordinate_vars(std::size_t n, const std::string& prefix = "c");

class SparsePoly {
 public:
  using Terms = std::map<Monomial, Rational, GrlexDescending>;

  SparsePoly();
  explicit SparsePoly(Vars vars);
  static SparsePoly constant(Vars vars, const Rational& c);
  static SparsePoly variable(Vars vars, std::size_t index);

  const Vars& vars() const { return vars_; }
  std::size_t nvars() const { return vars_->size(); }
  const Terms& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  std::uint32_t total_degree() const;
  std::uint32_t degree_in(std::size_t var) const;
  bool involves(std::size_t var) const { return degree_in(var) > 0; }
  // Highest variable index occurring, or -1.
  long main_variable() const;
  // Single variable with coefficient 1 and no other terms.
  std::optional<std::size_t> as_variable() const;

  const Monomial& leading_monomial() const { return terms_.begin()->first; }
  const Rational& leading_coefficient() const { return terms_.begin()->second; }

  void add_term(const Monomial& m, const Rational& c);

  SparsePoly operator+(const SparsePoly& o) const;
  SparsePoly operator-(const SparsePoly& o) const;
  SparsePoly operator-() const;
  SparsePoly operator*(const SparsePoly& o) const;
  SparsePoly operator*(const Rational& c) const;
  SparsePoly& operator+=(const SparsePoly& o);
  SparsePoly& operator-=(const SparsePoly& o);
  SparsePoly pow(unsigned k) const;
  bool operator==(const SparsePoly& o) const;
  bool operator!=(const SparsePoly& o) const { return !(*this == o); }

  Rational evaluate(const std::vector<Rational>& point) const;
  // Substitute polynomial images (all in one target context) for each variable.
  SparsePoly compose(const std::vector<SparsePoly>& images, const Vars& target) const;
  // Re-index variables into a new context; index_map[i] is the new index of variable i.
  SparsePoly reindex(const Vars& target, const std::vector<std::uint32_t>& index_map) const;
  SparsePoly with_vars(const Vars& vars) const;

  // Coefficients with respect to one variable: exponent -> coefficient polynomial.
  std::map<std::uint32_t, SparsePoly> coefficients_in(std::size_t var) const;

  std::string to_string() const;

 private:
  void check_same(const SparsePoly& o) const;
  Vars vars_;
  Terms terms_;
};

SparsePoly parse_poly(std::string_view text, const Vars& vars);

// Exact quotient a / b if b divides a.
std::optional<SparsePoly> divide_exact(const SparsePoly& a, const SparsePoly& b);
// Scale to integer coefficients with content 1 and positive graded-lex leading coefficient.
SparsePoly normalize_unit(const SparsePoly& p);
// The rational factor c with p = c * normalize_unit(p).
Rational unit_factor(const SparsePoly& p);
SparsePoly poly_gcd(const SparsePoly& p, const SparsePoly& q);

}  // namespace catc
