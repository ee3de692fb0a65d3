#include "catc/finset.hpp"

#include <map>
#include <numeric>
#include <set>

namespace catc {

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  std::size_t merges = 0;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  // The smaller index stays the root, so roots are least representatives.
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent[b] = a;
    ++merges;
  }
};

std::string join_tuple(const std::vector<std::string>& parts) {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += parts[i];
  }
  return s + ")";
}

void check_composable(const FinSetMor& g, const FinSetMor& f) {
  if (!(f.codom == g.dom)) fail(ErrorCode::ObjectMismatch, "FinSet composition endpoints differ");
}

}  // namespace

FinSetObj FinSet::set_of_size(std::size_t n) {
  FinSetObj o;
  for (std::size_t i = 0; i < n; ++i) o.labels.push_back(std::to_string(i));
  return o;
}

FinSetMor FinSet::make_map(const FinSetObj& dom, const FinSetObj& codom, std::vector<std::uint32_t> table) {
  if (table.size() != dom.size()) fail(ErrorCode::DimensionMismatch, "map table size");
  for (auto t : table)
    if (t >= codom.size()) fail(ErrorCode::DimensionMismatch, "map value out of range");
  return {dom, codom, std::move(table)};
}

FinSetMor FinSet::basic(std::string_view name) const {
  if (name == "id1") {
    FinSetObj one{{"1"}};
    return {one, one, {0}};
  }
  fail(ErrorCode::UnknownBasicMorphism, "FinSet has no basic morphism '" + std::string(name) + "'");
}

std::string FinSet::summary(const Object& o) const {
  if (o.size() > 8) return "set of " + std::to_string(o.size()) + " elements";
  std::string s = "{";
  for (std::size_t i = 0; i < o.size(); ++i) {
    if (i) s += ",";
    s += o.labels[i];
  }
  return s + "}";
}

FinSetMor FinSet::compose(const Morphism& g, const Morphism& f) const {
  check_composable(g, f);
  std::vector<std::uint32_t> t(f.table.size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = g.table[f.table[i]];
  return {f.dom, g.codom, std::move(t)};
}

bool FinSet::equal(const Morphism& f, const Morphism& g) const {
  return f.dom == g.dom && f.codom == g.codom && f.table == g.table;
}

FinSetMor FinSet::identity(const Object& o) const {
  std::vector<std::uint32_t> t(o.size());
  std::iota(t.begin(), t.end(), 0u);
  return {o, o, std::move(t)};
}

ProductCone<FinSet> FinSet::product(const std::vector<Object>& objs) const {
  std::size_t total = 1;
  for (const auto& o : objs) total *= o.size();
  ProductCone<FinSet> p;
  std::vector<std::vector<std::uint32_t>> proj(objs.size(), std::vector<std::uint32_t>(total));
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rem = idx;
    std::vector<std::string> parts(objs.size());
    for (std::size_t k = objs.size(); k-- > 0;) {
      auto e = static_cast<std::uint32_t>(rem % objs[k].size());
      rem /= objs[k].size();
      proj[k][idx] = e;
      parts[k] = objs[k].labels[e];
    }
    p.apex.labels.push_back(join_tuple(parts));
  }
  for (std::size_t k = 0; k < objs.size(); ++k) p.projections.push_back({p.apex, objs[k], std::move(proj[k])});
  return p;
}

FinSetMor FinSet::tuple(const Object& src, const std::vector<Morphism>& comps, const ProductCone<FinSet>& p) const {
  if (comps.size() != p.projections.size()) fail(ErrorCode::DimensionMismatch, "tuple arity");
  std::vector<std::uint32_t> t(src.size());
  for (std::size_t x = 0; x < src.size(); ++x) {
    std::size_t idx = 0;
    for (std::size_t k = 0; k < comps.size(); ++k) idx = idx * p.projections[k].codom.size() + comps[k].table[x];
    t[x] = static_cast<std::uint32_t>(idx);
  }
  return {src, p.apex, std::move(t)};
}

Equalizer<FinSet> FinSet::equalizer(const Morphism& f, const Morphism& g) const {
  Equalizer<FinSet> e;
  std::vector<std::uint32_t> incl;
  for (std::size_t x = 0; x < f.dom.size(); ++x)
    if (f.table[x] == g.table[x]) {
      e.apex.labels.push_back(f.dom.labels[x]);
      incl.push_back(static_cast<std::uint32_t>(x));
    }
  e.inclusion = {e.apex, f.dom, std::move(incl)};
  return e;
}

CoproductCocone<FinSet> FinSet::coproduct(const std::vector<Object>& objs) const {
  CoproductCocone<FinSet> c;
  for (std::size_t k = 0; k < objs.size(); ++k)
    for (const auto& l : objs[k].labels) c.apex.labels.push_back(std::to_string(k) + ":" + l);
  std::uint32_t offset = 0;
  for (const auto& o : objs) {
    std::vector<std::uint32_t> t(o.size());
    std::iota(t.begin(), t.end(), offset);
    offset += static_cast<std::uint32_t>(o.size());
    c.injections.push_back({o, c.apex, std::move(t)});
  }
  return c;
}

FinSetMor FinSet::cotuple(const Object& tgt, const std::vector<Morphism>& comps,
                          const CoproductCocone<FinSet>& c) const {
  if (comps.size() != c.injections.size()) fail(ErrorCode::DimensionMismatch, "cotuple arity");
  std::vector<std::uint32_t> t;
  for (const auto& m : comps) t.insert(t.end(), m.table.begin(), m.table.end());
  return {c.apex, tgt, std::move(t)};
}

Coequalizer<FinSet> FinSet::coequalizer(const Morphism& f, const Morphism& g) const {
  UnionFind uf(f.codom.size());
  for (std::size_t x = 0; x < f.dom.size(); ++x) uf.unite(f.table[x], g.table[x]);
  std::map<std::size_t, std::uint32_t> cls;
  Coequalizer<FinSet> q;
  for (std::size_t y = 0; y < f.codom.size(); ++y)
    if (uf.find(y) == y) {
      cls[y] = static_cast<std::uint32_t>(q.apex.labels.size());
      q.apex.labels.push_back(f.codom.labels[y]);
    }
  std::vector<std::uint32_t> t(f.codom.size());
  for (std::size_t y = 0; y < t.size(); ++y) t[y] = cls.at(uf.find(y));
  q.quotient = {f.codom, q.apex, std::move(t)};
  return q;
}

Cone<FinSet> FinSet::limit(const Diagram<FinSet>& d) const {
  auto vs = d.vertex_list();
  std::map<VertexId, std::size_t> pos;
  for (std::size_t i = 0; i < vs.size(); ++i) pos[vs[i]] = i;
  // Edges checkable once both endpoints are assigned, keyed by the later endpoint.
  std::vector<std::vector<Edge>> ready(vs.size());
  for (const auto& e : d.graph.edges()) ready[std::max(pos[e.src], pos[e.tgt])].push_back(e);

  std::vector<std::vector<std::uint32_t>> tuples;
  std::vector<std::uint32_t> cur(vs.size());
  auto rec = [&](auto& self, std::size_t k) -> void {
    if (k == vs.size()) {
      tuples.push_back(cur);
      return;
    }
    for (std::uint32_t a = 0; a < d.obj(vs[k]).size(); ++a) {
      cur[k] = a;
      bool ok = true;
      for (const auto& e : ready[k])
        if (d.mor(e.id).table[cur[pos[e.src]]] != cur[pos[e.tgt]]) {
          ok = false;
          break;
        }
      if (ok) self(self, k + 1);
    }
  };
  rec(rec, 0);

  Cone<FinSet> cone;
  for (const auto& t : tuples) {
    std::vector<std::string> parts;
    for (std::size_t k = 0; k < vs.size(); ++k) parts.push_back(d.obj(vs[k]).labels[t[k]]);
    cone.apex.labels.push_back(join_tuple(parts));
  }
  for (std::size_t k = 0; k < vs.size(); ++k) {
    std::vector<std::uint32_t> leg(tuples.size());
    for (std::size_t i = 0; i < tuples.size(); ++i) leg[i] = tuples[i][k];
    cone.legs.emplace(vs[k], FinSetMor{cone.apex, d.obj(vs[k]), std::move(leg)});
  }
  return cone;
}

Cone<FinSet> FinSet::colimit(const Diagram<FinSet>& d) const {
  auto vs = d.vertex_list();
  std::map<VertexId, std::size_t> offset;
  std::size_t total = 0;
  for (auto v : vs) {
    offset[v] = total;
    total += d.obj(v).size();
  }
  UnionFind uf(total);
  for (const auto& e : d.graph.edges()) {
    const auto& m = d.mor(e.id);
    for (std::size_t x = 0; x < m.table.size(); ++x) uf.unite(offset[e.src] + x, offset[e.tgt] + m.table[x]);
  }
  Cone<FinSet> cone;
  std::map<std::size_t, std::uint32_t> cls;
  for (auto v : vs)
    for (std::size_t a = 0; a < d.obj(v).size(); ++a) {
      std::size_t flat = offset[v] + a;
      if (uf.find(flat) == flat) {
        cls[flat] = static_cast<std::uint32_t>(cone.apex.labels.size());
        cone.apex.labels.push_back(d.name(v) + "." + d.obj(v).labels[a]);
      }
    }
  for (auto v : vs) {
    std::vector<std::uint32_t> leg(d.obj(v).size());
    for (std::size_t a = 0; a < leg.size(); ++a) leg[a] = cls.at(uf.find(offset[v] + a));
    cone.legs.emplace(v, FinSetMor{d.obj(v), cone.apex, std::move(leg)});
  }
  return cone;
}

bool FinSet::is_iso(const Morphism& m) const {
  if (m.dom.size() != m.codom.size()) return false;
  std::set<std::uint32_t> seen(m.table.begin(), m.table.end());
  return seen.size() == m.table.size();
}

std::optional<std::vector<FinSetMor>> FinSet::find_witnesses(const WitnessProblem<FinSet>& p,
                                                             std::uint64_t& budget) const {
  const std::size_t n = p.target_objs.size();
  for (std::size_t i = 0; i < n; ++i)
    if (p.target_objs[i].size() != p.host_objs[i].size()) return std::nullopt;
  std::vector<std::vector<long>> assign(n);
  std::vector<std::vector<bool>> used(n);
  for (std::size_t i = 0; i < n; ++i) {
    assign[i].assign(p.target_objs[i].size(), -1);
    used[i].assign(p.host_objs[i].size(), false);
  }
  std::vector<std::pair<std::size_t, std::size_t>> vars;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < p.target_objs[i].size(); ++a) vars.emplace_back(i, a);

  auto consistent = [&](std::size_t i, std::size_t a, long h) {
    for (const auto& sq : p.squares) {
      if (sq.s == i) {
        std::size_t y = sq.target_mor.table[a];
        long want = sq.host_mor.table[static_cast<std::size_t>(h)];
        long have = (sq.t == i && y == a) ? h : assign[sq.t][y];
        if (have != -1 && have != want) return false;
      }
      if (sq.t == i) {
        for (std::size_t x = 0; x < sq.target_mor.table.size(); ++x) {
          if (sq.target_mor.table[x] != a) continue;
          long hx = (sq.s == i && x == a) ? h : assign[sq.s][x];
          if (hx != -1 && static_cast<long>(sq.host_mor.table[static_cast<std::size_t>(hx)]) != h) return false;
        }
      }
    }
    return true;
  };

  auto rec = [&](auto& self, std::size_t k) -> bool {
    if (k == vars.size()) return true;
    auto [i, a] = vars[k];
    for (std::size_t h = 0; h < p.host_objs[i].size(); ++h) {
      if (used[i][h]) continue;
      if (budget == 0) fail(ErrorCode::SearchBudgetExceeded, "witness search budget exhausted");
      --budget;
      if (!consistent(i, a, static_cast<long>(h))) continue;
      assign[i][a] = static_cast<long>(h);
      used[i][h] = true;
      if (self(self, k + 1)) return true;
      used[i][h] = false;
      assign[i][a] = -1;
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  std::vector<FinSetMor> out;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::uint32_t> t(assign[i].begin(), assign[i].end());
    out.push_back({p.target_objs[i], p.host_objs[i], std::move(t)});
  }
  return out;
}

ImageFactorization<FinSet> FinSet::image(const Morphism& m) const {
  std::set<std::uint32_t> vals(m.table.begin(), m.table.end());
  ImageFactorization<FinSet> f;
  std::map<std::uint32_t, std::uint32_t> index;
  std::vector<std::uint32_t> incl;
  for (auto v : vals) {
    index[v] = static_cast<std::uint32_t>(incl.size());
    incl.push_back(v);
    f.subobject.labels.push_back(m.codom.labels[v]);
  }
  std::vector<std::uint32_t> fac(m.table.size());
  for (std::size_t x = 0; x < fac.size(); ++x) fac[x] = index.at(m.table[x]);
  f.mono = {f.subobject, m.codom, std::move(incl)};
  f.factor = {m.dom, f.subobject, std::move(fac)};
  return f;
}

Cone<FinSet> finset_limit(const Diagram<FinSet>& d) { return FinSet{}.limit(d); }
Cone<FinSet> finset_colimit(const Diagram<FinSet>& d) { return FinSet{}.colimit(d); }

}  // namespace catc
