#include "catc/affvar.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace catc {

namespace {

std::optional<Rational> param_of(std::string_view name, std::string_view head) {
  if (name.size() < head.size() + 2 || name.substr(0, head.size()) != head || name[head.size()] != '(' ||
      name.back() != ')')
    return std::nullopt;
  return parse_rational(name.substr(head.size() + 1, name.size() - head.size() - 2));
}

struct PolyLess {
  bool operator()(const SparsePoly& a, const SparsePoly& b) const {
    return std::lexicographical_compare(
        a.terms().begin(), a.terms().end(), b.terms().begin(), b.terms().end(), [](const auto& x, const auto& y) {
          int c = grlex_compare(x.first, y.first);
          if (c != 0) return c > 0;
          return x.second < y.second;
        });
  }
};

SparsePoly monic(const SparsePoly& p) {
  if (p.is_zero() || p.leading_coefficient() == 1) return p;
  return p * (1 / p.leading_coefficient());
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent[b] = a;
  }
};

std::vector<std::string> roles_for(const Diagram<AffVar>& d, VertexId v) {
  const Presentation& p = d.obj(v).pres();
  std::vector<std::string> out(p.m1);
  for (std::size_t i = 0; i < p.m1; ++i) {
    if (i < p.coordRoles.size() && !p.coordRoles[i].empty())
      out[i] = p.coordRoles[i];
    else
      out[i] = d.name(v) + "." + std::to_string(i);
  }
  return out;
}

// Equation x_t - comp(src) expressed over a local context [src coords..., target coord].
SparsePoly edge_equation(const SparsePoly& comp, std::size_t src_dim, const Vars& local) {
  std::vector<std::uint32_t> id(src_dim);
  std::iota(id.begin(), id.end(), 0u);
  return SparsePoly::variable(local, src_dim) - comp.reindex(local, id);
}

}  // namespace

Presentation Presentation::affine_space(std::size_t m) {
  Presentation p;
  p.m1 = m;
  p.vars = coordinate_vars(m);
  return p;
}

std::size_t Presentation::max_degree() const {
  std::size_t d = 0;
  for (const auto& e : equations) d = std::max<std::size_t>(d, e.total_degree());
  return d;
}

void assert_degree_at_most_two(const Presentation& p) {
  if (p.max_degree() > 2) throw std::logic_error("presentation equation of degree above 2");
}

AffObj AffVar::space(std::size_t m) {
  return {std::make_shared<const Presentation>(Presentation::affine_space(m))};
}

AffObj AffVar::from(Presentation p) {
  assert_degree_at_most_two(p);
  return {std::make_shared<const Presentation>(std::move(p))};
}

AffMor AffVar::basic(std::string_view name) const {
  auto a0 = space(0), a1 = space(1), a2 = space(2);
  const Vars& v1 = a1.p->vars;
  const Vars& v2 = a2.p->vars;
  if (auto c = param_of(name, "const_endo")) return {a1, a1, {SparsePoly::variable(v1, 0) * *c}};
  if (auto c = param_of(name, "point")) return {a0, a1, {SparsePoly::constant(a0.p->vars, *c)}};
  if (name == "add") return {a2, a1, {SparsePoly::variable(v2, 0) + SparsePoly::variable(v2, 1)}};
  if (name == "mul") return {a2, a1, {SparsePoly::variable(v2, 0) * SparsePoly::variable(v2, 1)}};
  if (name == "pi1") return {a2, a1, {SparsePoly::variable(v2, 0)}};
  if (name == "pi2") return {a2, a1, {SparsePoly::variable(v2, 1)}};
  if (name == "to_point") return {a1, a0, {}};
  fail(ErrorCode::UnknownBasicMorphism, "AffVar has no basic morphism '" + std::string(name) + "'");
}

std::string AffVar::summary(const Object& o) const {
  const Presentation& p = o.pres();
  std::string amb = "A^" + std::to_string(p.m1);
  if (p.equations.empty()) return amb;
  return "V(" + std::to_string(p.equations.size()) + " eqs) in " + amb;
}

AffMor AffVar::compose(const Morphism& g, const Morphism& f) const {
  if (g.dom.dim() != f.codom.dim()) fail(ErrorCode::ObjectMismatch, "AffVar composition endpoints differ");
  AffMor r{f.dom, g.codom, {}};
  for (const auto& c : g.comps) r.comps.push_back(c.compose(f.comps, f.dom.p->vars));
  return r;
}

// Equal as maps on the domain variety. A component difference counts as zero when its monic
// form is one of the domain's defining equations; sound but not a full ideal-membership test.
bool AffVar::equal(const Morphism& f, const Morphism& g) const {
  if (!same_object(f.dom, g.dom) || !same_object(f.codom, g.codom) || f.comps.size() != g.comps.size()) return false;
  const auto& eqs = f.dom.pres().equations;
  for (std::size_t i = 0; i < f.comps.size(); ++i) {
    if (f.comps[i] == g.comps[i]) continue;
    SparsePoly diff = monic(f.comps[i] - g.comps[i].with_vars(f.dom.p->vars));
    if (!diff.is_zero() && std::find(eqs.begin(), eqs.end(), diff) == eqs.end()) return false;
  }
  return true;
}

AffMor AffVar::identity(const Object& o) const {
  AffMor r{o, o, {}};
  for (std::size_t i = 0; i < o.dim(); ++i) r.comps.push_back(SparsePoly::variable(o.p->vars, i));
  return r;
}

ProductCone<AffVar> AffVar::product(const std::vector<Object>& objs) const {
  std::size_t total = 0;
  for (const auto& o : objs) total += o.dim();
  Presentation p = Presentation::affine_space(total);
  std::size_t off = 0;
  std::vector<std::size_t> offs;
  for (const auto& o : objs) {
    offs.push_back(off);
    std::vector<std::uint32_t> map(o.dim());
    std::iota(map.begin(), map.end(), static_cast<std::uint32_t>(off));
    for (const auto& e : o.pres().equations) p.equations.push_back(e.reindex(p.vars, map));
    for (std::size_t i = 0; i < o.dim(); ++i)
      p.coordRoles.push_back(i < o.pres().coordRoles.size() ? o.pres().coordRoles[i] : std::string{});
    off += o.dim();
  }
  ProductCone<AffVar> pc{from(std::move(p)), {}};
  for (std::size_t k = 0; k < objs.size(); ++k) {
    AffMor pr{pc.apex, objs[k], {}};
    for (std::size_t i = 0; i < objs[k].dim(); ++i) pr.comps.push_back(SparsePoly::variable(pc.apex.p->vars, offs[k] + i));
    pc.projections.push_back(std::move(pr));
  }
  return pc;
}

AffMor AffVar::tuple(const Object& src, const std::vector<Morphism>& comps, const ProductCone<AffVar>& p) const {
  AffMor r{src, p.apex, {}};
  for (const auto& c : comps)
    for (const auto& x : c.comps) r.comps.push_back(x.with_vars(src.p->vars));
  return r;
}

Equalizer<AffVar> AffVar::equalizer(const Morphism& f, const Morphism& g) const {
  Presentation p = f.dom.pres();
  std::set<SparsePoly, PolyLess> seen(p.equations.begin(), p.equations.end());
  for (std::size_t i = 0; i < f.comps.size(); ++i) {
    SparsePoly e = monic(f.comps[i] - g.comps[i].with_vars(p.vars));
    if (!e.is_zero() && seen.insert(e).second) p.equations.push_back(e);
  }
  AffObj apex = from(std::move(p));
  AffMor incl{apex, f.dom, {}};
  for (std::size_t i = 0; i < apex.dim(); ++i) incl.comps.push_back(SparsePoly::variable(apex.p->vars, i));
  return {apex, incl};
}

Cone<AffVar> AffVar::limit(const Diagram<AffVar>& d) const {
  std::map<VertexId, std::size_t> off;
  std::size_t total = 0;
  for (auto v : d.graph.vertices()) {
    off[v] = total;
    total += d.obj(v).dim();
  }
  UnionFind uf(total);
  // Pending equations: polynomial over some local context plus a map to flat indices.
  std::vector<std::pair<SparsePoly, std::vector<std::size_t>>> pending;
  for (auto v : d.graph.vertices()) {
    std::vector<std::size_t> map(d.obj(v).dim());
    std::iota(map.begin(), map.end(), off[v]);
    for (const auto& e : d.obj(v).pres().equations) pending.emplace_back(e, map);
  }
  std::map<std::size_t, Vars> locals;
  for (const auto& e : d.graph.edges()) {
    const AffMor& m = d.mor(e.id);
    std::size_t sd = m.dom.dim();
    for (std::size_t i = 0; i < m.comps.size(); ++i) {
      if (auto j = m.comps[i].as_variable()) {
        uf.unite(off[e.tgt] + i, off[e.src] + *j);
        continue;
      }
      auto& local = locals[sd];
      if (!local) local = coordinate_vars(sd + 1, "t");
      std::vector<std::size_t> map(sd + 1);
      std::iota(map.begin(), map.begin() + static_cast<long>(sd), off[e.src]);
      map[sd] = off[e.tgt] + i;
      pending.emplace_back(edge_equation(m.comps[i], sd, local), map);
    }
  }
  std::vector<std::size_t> cls(total, 0);
  std::vector<std::string> flat_roles(total);
  for (auto v : d.graph.vertices()) {
    auto r = roles_for(d, v);
    for (std::size_t i = 0; i < r.size(); ++i) flat_roles[off[v] + i] = r[i];
  }
  Presentation p;
  for (std::size_t x = 0; x < total; ++x)
    if (uf.find(x) == x) {
      cls[x] = p.m1++;
      p.coordRoles.push_back(flat_roles[x]);
    }
  p.vars = coordinate_vars(p.m1);
  std::set<SparsePoly, PolyLess> seen;
  for (const auto& [poly, map] : pending) {
    std::vector<std::uint32_t> idx(map.size());
    for (std::size_t k = 0; k < map.size(); ++k) idx[k] = static_cast<std::uint32_t>(cls[uf.find(map[k])]);
    SparsePoly e = monic(poly.reindex(p.vars, idx));
    if (!e.is_zero() && seen.insert(e).second) p.equations.push_back(e);
  }
  Cone<AffVar> cone{from(std::move(p)), {}};
  for (auto v : d.graph.vertices()) {
    AffMor leg{cone.apex, d.obj(v), {}};
    for (std::size_t i = 0; i < d.obj(v).dim(); ++i)
      leg.comps.push_back(SparsePoly::variable(cone.apex.p->vars, cls[uf.find(off[v] + i)]));
    cone.legs.emplace(v, std::move(leg));
  }
  return cone;
}

Cone<AffVar> affvar_limit_presentation(const Diagram<AffVar>& d) {
  std::map<VertexId, std::size_t> off;
  std::size_t total = 0;
  for (auto v : d.graph.vertices()) {
    off[v] = total;
    total += d.obj(v).dim();
  }
  Presentation p = Presentation::affine_space(total);
  for (auto v : d.graph.vertices()) {
    auto r = roles_for(d, v);
    p.coordRoles.insert(p.coordRoles.end(), r.begin(), r.end());
    std::vector<std::uint32_t> map(d.obj(v).dim());
    std::iota(map.begin(), map.end(), static_cast<std::uint32_t>(off[v]));
    for (const auto& e : d.obj(v).pres().equations) p.equations.push_back(e.reindex(p.vars, map));
  }
  for (const auto& e : d.graph.edges()) {
    const AffMor& m = d.mor(e.id);
    std::vector<std::uint32_t> map(m.dom.dim());
    std::iota(map.begin(), map.end(), static_cast<std::uint32_t>(off[e.src]));
    for (std::size_t i = 0; i < m.comps.size(); ++i) {
      SparsePoly eq = SparsePoly::variable(p.vars, off[e.tgt] + i) - m.comps[i].reindex(p.vars, map);
      if (!eq.is_zero()) p.equations.push_back(eq);
    }
  }
  Cone<AffVar> cone{AffVar::from(std::move(p)), {}};
  for (auto v : d.graph.vertices()) {
    AffMor leg{cone.apex, d.obj(v), {}};
    for (std::size_t i = 0; i < d.obj(v).dim(); ++i) leg.comps.push_back(SparsePoly::variable(cone.apex.p->vars, off[v] + i));
    cone.legs.emplace(v, std::move(leg));
  }
  return cone;
}

bool presentation_membership(const Presentation& p, const std::vector<Rational>& point) {
  if (point.size() != p.m1)
    fail(ErrorCode::DimensionMismatch,
         "point has " + std::to_string(point.size()) + " coordinates, expected " + std::to_string(p.m1));
  for (const auto& e : p.equations)
    if (e.evaluate(point) != 0) return false;
  return true;
}

std::vector<Rational> complete_point(const Presentation& p, const std::map<std::size_t, Rational>& known) {
  std::vector<bool> val(p.m1, false);
  std::vector<Rational> pt(p.m1);
  for (const auto& [i, x] : known) {
    if (i >= p.m1) fail(ErrorCode::DimensionMismatch, "known coordinate out of range");
    val[i] = true;
    pt[i] = x;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& e : p.equations) {
      std::set<std::size_t> unknown;
      for (const auto& [m, c] : e.terms())
        for (const auto& [v, k] : m)
          if (!val[v]) unknown.insert(v);
      if (unknown.size() != 1) continue;
      std::size_t u = *unknown.begin();
      if (e.degree_in(u) != 1) continue;
      auto coeffs = e.coefficients_in(u);
      Rational a = coeffs.at(1).evaluate(pt);
      if (a == 0) continue;
      Rational rest = coeffs.count(0) ? coeffs.at(0).evaluate(pt) : Rational(0);
      pt[u] = -rest / a;
      val[u] = true;
      changed = true;
    }
  }
  for (std::size_t i = 0; i < p.m1; ++i)
    if (!val[i]) fail(ErrorCode::NotDetermined, "coordinate " + std::to_string(i) + " (" +
                                                   (i < p.coordRoles.size() ? p.coordRoles[i] : "") +
                                                   ") is not determined by the given values");
  return pt;
}

std::optional<std::size_t> find_role(const Presentation& p, const std::string& role) {
  for (std::size_t i = 0; i < p.coordRoles.size(); ++i)
    if (p.coordRoles[i] == role) return i;
  return std::nullopt;
}

}  // namespace catc
