#include "catc/boolean.hpp"

#include <bit>

namespace catc {

std::size_t BoolLatticeObj::count() const {
  std::size_t c = 0;
  for (auto w : bits) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool BoolLatticeObj::subset_of(const BoolLatticeObj& o) const {
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (bits[i] & ~o.bits[i]) return false;
  return true;
}

BoolLattice::BoolLattice(unsigned n) : n_(n) {
  if (n == 0 || n > kMaxN) fail(ErrorCode::DomainError, "B_n requires 1 <= n <= 20");
}

BoolLatticeObj BoolLattice::empty() const { return {std::vector<std::uint64_t>((points() + 63) / 64, 0)}; }

BoolLatticeObj BoolLattice::full() const {
  BoolLatticeObj o = empty();
  for (std::size_t p = 0; p < points(); ++p) o.set(p);
  return o;
}

BoolLatticeObj BoolLattice::z(unsigned i) const {
  if (i == 0 || i > n_) fail(ErrorCode::VariableOutOfRange, "z(" + std::to_string(i) + ") outside B_" + std::to_string(n_));
  BoolLatticeObj o = empty();
  for (std::size_t p = 0; p < points(); ++p)
    if ((p >> (i - 1)) & 1u) o.set(p);
  return o;
}

BoolLatticeMor BoolLattice::inclusion(const Object& a, const Object& b) const {
  if (!a.subset_of(b)) fail(ErrorCode::ObjectMismatch, "no inclusion between incomparable subsets");
  return {a, b};
}

BoolLatticeMor BoolLattice::basic(std::string_view name) const {
  if (name.size() >= 4 && name.substr(0, 2) == "z(" && name.back() == ')') {
    std::string digits(name.substr(2, name.size() - 3));
    if (!digits.empty() && digits.size() < 4 && digits.find_first_not_of("0123456789") == std::string::npos) {
      auto o = z(static_cast<unsigned>(std::stoul(digits)));
      return {o, o};
    }
  }
  fail(ErrorCode::UnknownBasicMorphism, "B_n has no basic morphism '" + std::string(name) + "'");
}

std::string BoolLattice::summary(const Object& o) const {
  if (n_ > 4) return "subset of " + std::to_string(o.count()) + " points";
  std::string s = "{";
  bool first = true;
  for (std::size_t p = 0; p < points(); ++p) {
    if (!o.contains(p)) continue;
    if (!first) s += ",";
    first = false;
    for (unsigned i = 1; i <= n_; ++i) s += ((p >> (i - 1)) & 1u) ? '1' : '0';
  }
  return s + "}";
}

BoolLatticeMor BoolLattice::compose(const Morphism& g, const Morphism& f) const {
  if (!(f.codom == g.dom)) fail(ErrorCode::ObjectMismatch, "B_n composition endpoints differ");
  return {f.dom, g.codom};
}

ProductCone<BoolLattice> BoolLattice::product(const std::vector<Object>& objs) const {
  BoolLatticeObj meet = full();
  for (const auto& o : objs)
    for (std::size_t i = 0; i < meet.bits.size(); ++i) meet.bits[i] &= o.bits[i];
  ProductCone<BoolLattice> p{meet, {}};
  for (const auto& o : objs) p.projections.push_back({meet, o});
  return p;
}

BoolLatticeMor BoolLattice::tuple(const Object& src, const std::vector<Morphism>&,
                                  const ProductCone<BoolLattice>& p) const {
  return inclusion(src, p.apex);
}

Equalizer<BoolLattice> BoolLattice::equalizer(const Morphism& f, const Morphism&) const { return {f.dom, identity(f.dom)}; }

CoproductCocone<BoolLattice> BoolLattice::coproduct(const std::vector<Object>& objs) const {
  BoolLatticeObj join = empty();
  for (const auto& o : objs)
    for (std::size_t i = 0; i < join.bits.size(); ++i) join.bits[i] |= o.bits[i];
  CoproductCocone<BoolLattice> c{join, {}};
  for (const auto& o : objs) c.injections.push_back({o, join});
  return c;
}

BoolLatticeMor BoolLattice::cotuple(const Object& tgt, const std::vector<Morphism>&,
                                    const CoproductCocone<BoolLattice>& c) const {
  return inclusion(c.apex, tgt);
}

Coequalizer<BoolLattice> BoolLattice::coequalizer(const Morphism& f, const Morphism&) const {
  return {f.codom, identity(f.codom)};
}

Cone<BoolLattice> BoolLattice::limit(const Diagram<BoolLattice>& d) const {
  std::vector<Object> objs;
  for (auto v : d.graph.vertices()) objs.push_back(d.obj(v));
  auto p = product(objs);
  Cone<BoolLattice> cone{p.apex, {}};
  for (auto v : d.graph.vertices()) cone.legs.emplace(v, Morphism{p.apex, d.obj(v)});
  return cone;
}

Cone<BoolLattice> BoolLattice::colimit(const Diagram<BoolLattice>& d) const {
  std::vector<Object> objs;
  for (auto v : d.graph.vertices()) objs.push_back(d.obj(v));
  auto c = coproduct(objs);
  Cone<BoolLattice> cone{c.apex, {}};
  for (auto v : d.graph.vertices()) cone.legs.emplace(v, Morphism{d.obj(v), c.apex});
  return cone;
}

std::optional<std::vector<BoolLatticeMor>> BoolLattice::find_witnesses(const WitnessProblem<BoolLattice>& p,
                                                                       std::uint64_t&) const {
  std::vector<BoolLatticeMor> out;
  for (std::size_t i = 0; i < p.target_objs.size(); ++i) {
    if (!(p.target_objs[i] == p.host_objs[i])) return std::nullopt;
    out.push_back(identity(p.target_objs[i]));
  }
  return out;
}

BoolLatticeObj bool_limit(const Diagram<BoolLattice>& d, const BoolLattice& cat) { return cat.limit(d).apex; }
BoolLatticeObj bool_colimit(const Diagram<BoolLattice>& d, const BoolLattice& cat) { return cat.colimit(d).apex; }

}  // namespace catc
