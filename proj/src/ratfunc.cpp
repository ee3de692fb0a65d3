#include "catc/ratfunc.hpp"

#include "catc/error.hpp"

namespace catc {

RatFunc::RatFunc(const Vars& vars) : num_(vars), den_(SparsePoly::constant(vars, 1)) {}

RatFunc::RatFunc(SparsePoly num) : num_(std::move(num)), den_(SparsePoly::constant(num_.vars(), 1)) {}

RatFunc::RatFunc(SparsePoly num, SparsePoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) fail(ErrorCode::DomainError, "zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = SparsePoly::constant(num_.vars(), 1);
    return;
  }
  SparsePoly g = poly_gcd(num_, den_);
  if (!g.is_constant()) {
    num_ = *divide_exact(num_, g);
    den_ = *divide_exact(den_, g);
  }
  Rational lc = den_.leading_coefficient();
  if (lc != 1) {
    num_ = num_ * (1 / lc);
    den_ = den_ * (1 / lc);
  }
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const { return RatFunc(num_ * o.num_, den_ * o.den_); }

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) fail(ErrorCode::DomainError, "division by zero rational function");
  return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

std::string RatFunc::to_string() const {
  if (den_.is_constant()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace catc
