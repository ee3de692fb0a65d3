#pragma once

#include <string>

#include "catc/poly.hpp"

namespace catc {

// Quotient of polynomials kept in lowest terms with a monic (graded-lex) denominator.
class RatFunc {
 public:
  explicit RatFunc(const Vars& vars);
  explicit RatFunc(SparsePoly num);
  RatFunc(SparsePoly num, SparsePoly den);

  const SparsePoly& num() const { return num_; }
  const SparsePoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc operator-() const;
  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

  std::string to_string() const;

 private:
  void normalize();
  SparsePoly num_;
  SparsePoly den_;
};

}  // namespace catc
