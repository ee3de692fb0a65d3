#include "catc/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "catc/error.hpp"

namespace catc {

int grlex_compare(const Monomial& a, const Monomial& b) {
  auto da = monomial_degree(a), db = monomial_degree(b);
  if (da != db) return da > db ? 1 : -1;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first != b[j].first) return a[i].first < b[j].first ? 1 : -1;
    if (a[i].second != b[j].second) return a[i].second > b[j].second ? 1 : -1;
    ++i;
    ++j;
  }
  if (i < a.size()) return 1;
  if (j < b.size()) return -1;
  return 0;
}

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      r.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      r.push_back(b[j++]);
    } else {
      r.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    }
  }
  return r;
}

std::optional<Monomial> monomial_div(const Monomial& a, const Monomial& b) {
  Monomial r;
  std::size_t i = 0;
  for (const auto& [v, e] : b) {
    while (i < a.size() && a[i].first < v) r.push_back(a[i++]);
    if (i == a.size() || a[i].first != v || a[i].second < e) return std::nullopt;
    if (a[i].second > e) r.emplace_back(v, a[i].second - e);
    ++i;
  }
  while (i < a.size()) r.push_back(a[i++]);
  return r;
}

std::uint32_t monomial_degree(const Monomial& m) {
  std::uint32_t d = 0;
  for (const auto& p : m) d += p.second;
  return d;
}

std::uint32_t monomial_exponent(const Monomial& m, std::uint32_t var) {
  for (const auto& p : m)
    if (p.first == var) return p.second;
  return 0;
}

Vars make_vars(VarList names) { return std::make_shared<const VarList>(std::move(names)); }

Vars coordinate_vars(std::size_t n, const std::string& prefix) {
  VarList names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
  return make_vars(std::move(names));
}

SparsePoly::SparsePoly() : vars_(make_vars({})) {}
SparsePoly::SparsePoly(Vars vars) : vars_(std::move(vars)) {}

SparsePoly SparsePoly::constant(Vars vars, const Rational& c) {
  SparsePoly p(std::move(vars));
  p.add_term({}, c);
  return p;
}

SparsePoly SparsePoly::variable(Vars vars, std::size_t index) {
  if (index >= vars->size()) fail(ErrorCode::VariableOutOfRange, "variable index " + std::to_string(index));
  SparsePoly p(std::move(vars));
  p.add_term({{static_cast<std::uint32_t>(index), 1u}}, 1);
  return p;
}

bool SparsePoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

Rational SparsePoly::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Rational(0) : it->second;
}

std::uint32_t SparsePoly::total_degree() const { return terms_.empty() ? 0 : monomial_degree(terms_.begin()->first); }

std::uint32_t SparsePoly::degree_in(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, monomial_exponent(m, static_cast<std::uint32_t>(var)));
  return d;
}

long SparsePoly::main_variable() const {
  long v = -1;
  for (const auto& [m, c] : terms_)
    if (!m.empty()) v = std::max(v, static_cast<long>(m.back().first));
  return v;
}

std::optional<std::size_t> SparsePoly::as_variable() const {
  if (terms_.size() != 1) return std::nullopt;
  const auto& [m, c] = *terms_.begin();
  if (c != 1 || m.size() != 1 || m[0].second != 1) return std::nullopt;
  return m[0].first;
}

void SparsePoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void SparsePoly::check_same(const SparsePoly& o) const {
  if (vars_ != o.vars_ && vars_->size() != o.vars_->size())
    fail(ErrorCode::DimensionMismatch, "polynomials from different variable contexts");
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
  check_same(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
  check_same(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
  SparsePoly r = *this;
  r += o;
  return r;
}

SparsePoly SparsePoly::operator-(const SparsePoly& o) const {
  SparsePoly r = *this;
  r -= o;
  return r;
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
  check_same(o);
  SparsePoly r(vars_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.add_term(monomial_mul(ma, mb), ca * cb);
  return r;
}

SparsePoly SparsePoly::operator*(const Rational& c) const {
  SparsePoly r(vars_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& [m, x] : r.terms_) x *= c;
  return r;
}

SparsePoly SparsePoly::pow(unsigned k) const {
  SparsePoly r = constant(vars_, 1);
  SparsePoly b = *this;
  while (k) {
    if (k & 1) r = r * b;
    k >>= 1;
    if (k) b = b * b;
  }
  return r;
}

bool SparsePoly::operator==(const SparsePoly& o) const {
  return vars_->size() == o.vars_->size() && terms_ == o.terms_;
}

Rational SparsePoly::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != nvars()) fail(ErrorCode::DimensionMismatch, "evaluation point length");
  Rational s = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (const auto& [v, e] : m) {
      Rational p;
      mpz_pow_ui(p.get_num_mpz_t(), point[v].get_num_mpz_t(), e);
      mpz_pow_ui(p.get_den_mpz_t(), point[v].get_den_mpz_t(), e);
      p.canonicalize();
      t *= p;
    }
    s += t;
  }
  return s;
}

SparsePoly SparsePoly::compose(const std::vector<SparsePoly>& images, const Vars& target) const {
  if (images.size() != nvars()) fail(ErrorCode::DimensionMismatch, "composition arity");
  SparsePoly r(target);
  for (const auto& [m, c] : terms_) {
    SparsePoly t = constant(target, c);
    for (const auto& [v, e] : m) t = t * images[v].pow(e);
    r += t;
  }
  return r;
}

SparsePoly SparsePoly::reindex(const Vars& target, const std::vector<std::uint32_t>& index_map) const {
  SparsePoly r(target);
  for (const auto& [m, c] : terms_) {
    Monomial nm;
    for (const auto& [v, e] : m) nm = monomial_mul(nm, Monomial{{index_map.at(v), e}});
    r.add_term(nm, c);
  }
  return r;
}

SparsePoly SparsePoly::with_vars(const Vars& vars) const {
  if (vars->size() != nvars()) fail(ErrorCode::DimensionMismatch, "variable context size");
  SparsePoly r = *this;
  r.vars_ = vars;
  return r;
}

std::map<std::uint32_t, SparsePoly> SparsePoly::coefficients_in(std::size_t var) const {
  std::map<std::uint32_t, SparsePoly> out;
  auto v32 = static_cast<std::uint32_t>(var);
  for (const auto& [m, c] : terms_) {
    std::uint32_t e = 0;
    Monomial rest;
    for (const auto& p : m) {
      if (p.first == v32)
        e = p.second;
      else
        rest.push_back(p);
    }
    auto it = out.try_emplace(e, SparsePoly(vars_)).first;
    it->second.add_term(rest, c);
  }
  return out;
}

std::string SparsePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (m.empty() || a != 1) {
      os << a.get_str();
      wrote = true;
    }
    for (const auto& [v, e] : m) {
      if (wrote) os << "*";
      os << (*vars_)[v];
      if (e > 1) os << "^" << e;
      wrote = true;
    }
  }
  return os.str();
}

namespace {

struct PolyParser {
  std::string_view s;
  const Vars& vars;
  std::size_t pos = 0;

  [[noreturn]] void error(const std::string& msg) const {
    throw ParseError(1, static_cast<int>(pos) + 1, msg);
  }
  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool at_end() {
    skip();
    return pos >= s.size();
  }

  SparsePoly factor() {
    skip();
    if (pos >= s.size()) error("expected factor");
    char c = s[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos;
      while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/')) ++pos;
      auto q = parse_rational(s.substr(start, pos - start));
      if (!q) error("malformed rational");
      return SparsePoly::constant(vars, *q);
    }
    if (c == '(') {
      ++pos;
      SparsePoly inner = expr();
      skip();
      if (pos >= s.size() || s[pos] != ')') error("expected ')'");
      ++pos;
      return power(inner);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos;
      while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) ++pos;
      std::string name(s.substr(start, pos - start));
      auto it = std::find(vars->begin(), vars->end(), name);
      if (it == vars->end()) {
        pos = start;
        error("unknown variable '" + name + "'");
      }
      return power(SparsePoly::variable(vars, static_cast<std::size_t>(it - vars->begin())));
    }
    error(std::string("unexpected character '") + c + "'");
  }

  SparsePoly power(SparsePoly base) {
    skip();
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      skip();
      std::size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (start == pos) error("expected exponent");
      unsigned long e = std::stoul(std::string(s.substr(start, pos - start)));
      if (e > 1000) error("exponent too large");
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  SparsePoly term() {
    SparsePoly t = factor();
    while (true) {
      skip();
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        t = t * factor();
      } else {
        return t;
      }
    }
  }

  SparsePoly expr() {
    skip();
    SparsePoly acc(vars);
    bool neg = false;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
      neg = s[pos] == '-';
      ++pos;
    }
    SparsePoly t = term();
    acc += neg ? -t : t;
    while (true) {
      skip();
      if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        bool minus = s[pos] == '-';
        ++pos;
        SparsePoly u = term();
        acc += minus ? -u : u;
      } else {
        return acc;
      }
    }
  }
};

}  // namespace

SparsePoly parse_poly(std::string_view text, const Vars& vars) {
  PolyParser p{text, vars};
  SparsePoly r = p.expr();
  if (!p.at_end()) p.error("trailing input");
  return r;
}

std::optional<SparsePoly> divide_exact(const SparsePoly& a, const SparsePoly& b) {
  if (b.is_zero()) fail(ErrorCode::DomainError, "division by zero polynomial");
  SparsePoly q(a.vars());
  SparsePoly r = a;
  const Monomial& lb = b.leading_monomial();
  const Rational& cb = b.leading_coefficient();
  while (!r.is_zero()) {
    auto m = monomial_div(r.leading_monomial(), lb);
    if (!m) return std::nullopt;
    SparsePoly t(a.vars());
    t.add_term(*m, r.leading_coefficient() / cb);
    q += t;
    r -= t * b;
  }
  return q;
}

Rational unit_factor(const SparsePoly& p) {
  if (p.is_zero()) return 1;
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& [m, c] : p.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational u(num_gcd, den_lcm);
  u.canonicalize();
  if (p.leading_coefficient() < 0) u = -u;
  return u;
}

SparsePoly normalize_unit(const SparsePoly& p) {
  if (p.is_zero()) return p;
  return p * (1 / unit_factor(p));
}

namespace {

SparsePoly lc_in(const SparsePoly& p, std::size_t var) {
  auto coeffs = p.coefficients_in(var);
  return coeffs.rbegin()->second;
}

SparsePoly var_power(const Vars& vars, std::size_t var, std::uint32_t e) {
  SparsePoly t(vars);
  Monomial m;
  if (e) m.emplace_back(static_cast<std::uint32_t>(var), e);
  t.add_term(m, 1);
  return t;
}

SparsePoly prem(const SparsePoly& a, const SparsePoly& b, std::size_t var) {
  std::uint32_t db = b.degree_in(var);
  SparsePoly lcb = lc_in(b, var);
  SparsePoly r = a;
  long e = static_cast<long>(a.degree_in(var)) - static_cast<long>(db) + 1;
  while (!r.is_zero() && r.degree_in(var) >= db) {
    std::uint32_t dr = r.degree_in(var);
    SparsePoly t = lc_in(r, var) * var_power(a.vars(), var, dr - db) * b;
    r = lcb * r - t;
    --e;
  }
  if (e > 0) r = r * lcb.pow(static_cast<unsigned>(e));
  return r;
}

SparsePoly exact(const SparsePoly& a, const SparsePoly& b) {
  auto q = divide_exact(a, b);
  if (!q) fail(ErrorCode::DomainError, "inexact division in gcd");
  return *q;
}

SparsePoly content_in(const SparsePoly& p, std::size_t var) {
  SparsePoly g(p.vars());
  for (const auto& [e, c] : p.coefficients_in(var)) {
    g = poly_gcd(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

// Subresultant pseudo-remainder sequence in `var`; inputs are primitive in var.
SparsePoly subresultant_gcd(SparsePoly a, SparsePoly b, std::size_t var) {
  if (a.degree_in(var) < b.degree_in(var)) std::swap(a, b);
  SparsePoly g = SparsePoly::constant(a.vars(), 1);
  SparsePoly h = g;
  while (true) {
    std::uint32_t d = a.degree_in(var) - b.degree_in(var);
    SparsePoly r = prem(a, b, var);
    if (r.is_zero()) break;
    if (r.degree_in(var) == 0) return SparsePoly::constant(a.vars(), 1);
    a = b;
    b = exact(r, g * h.pow(d));
    g = lc_in(a, var);
    if (d == 0) {
    } else if (d == 1) {
      h = g;
    } else {
      h = exact(g.pow(d), h.pow(d - 1));
    }
  }
  return exact(b, content_in(b, var));
}

}  // namespace

SparsePoly poly_gcd(const SparsePoly& p, const SparsePoly& q) {
  if (p.is_zero()) return normalize_unit(q);
  if (q.is_zero()) return normalize_unit(p);
  long v = std::max(p.main_variable(), q.main_variable());
  if (v < 0) return SparsePoly::constant(p.vars(), 1);
  auto var = static_cast<std::size_t>(v);
  bool pv = p.involves(var), qv = q.involves(var);
  if (!pv) return normalize_unit(poly_gcd(p, content_in(q, var)));
  if (!qv) return normalize_unit(poly_gcd(content_in(p, var), q));
  SparsePoly cp = content_in(p, var);
  SparsePoly cq = content_in(q, var);
  SparsePoly c = poly_gcd(cp, cq);
  SparsePoly pp = exact(p, cp);
  SparsePoly pq = exact(q, cq);
  SparsePoly g = subresultant_gcd(pp, pq, var);
  return normalize_unit(c * g);
}

}  // namespace catc
