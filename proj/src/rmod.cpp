#include "catc/rmod.hpp"

#include <algorithm>

namespace catc {

namespace {

std::optional<std::string_view> param_text(std::string_view name, std::string_view head) {
  if (name.size() < head.size() + 2 || name.substr(0, head.size()) != head || name[head.size()] != '(' ||
      name.back() != ')')
    return std::nullopt;
  return name.substr(head.size() + 1, name.size() - head.size() - 2);
}

std::size_t weight(const SparsePoly& p) {
  return p.is_constant() ? 0 : 1 + p.terms().size() * 64 + p.total_degree();
}

}  // namespace

RModObj RMod::free(std::size_t g) const {
  auto p = std::make_shared<ModulePresentation>();
  p->g = g;
  return {p};
}

RModObj RMod::from(ModulePresentation p) const {
  for (const auto& r : p.relations)
    if (r.size() != p.g) fail(ErrorCode::DimensionMismatch, "relation column length");
  return {std::make_shared<const ModulePresentation>(std::move(p))};
}

RModMor RMod::basic(std::string_view name) const {
  auto r0 = free(0), r1 = free(1), r2 = free(2);
  if (auto t = param_text(name, "xmul")) {
    std::string s(*t);
    if (s.empty() || s.size() > 4 || s.find_first_not_of("0123456789") != std::string::npos)
      fail(ErrorCode::UnknownBasicMorphism, "malformed " + std::string(name));
    std::size_t i = std::stoul(s);
    if (i == 0 || i > ring_->size())
      fail(ErrorCode::VariableOutOfRange, std::string(name) + " with " + std::to_string(ring_->size()) + " variables");
    return {r1, r1, {{SparsePoly::variable(ring_, i - 1)}}};
  }
  if (auto t = param_text(name, "cmul")) {
    auto c = parse_rational(*t);
    if (!c) fail(ErrorCode::UnknownBasicMorphism, "malformed " + std::string(name));
    return {r1, r1, {{SparsePoly::constant(ring_, *c)}}};
  }
  if (name == "inj1") return {r1, r2, {{one(), zero()}}};
  if (name == "inj2") return {r1, r2, {{zero(), one()}}};
  if (name == "diag") return {r1, r2, {{one(), one()}}};
  if (name == "add") return {r2, r1, {{one()}, {one()}}};
  if (name == "tozero") return {r1, r0, {{}}};
  fail(ErrorCode::UnknownBasicMorphism, "R-Mod has no basic morphism '" + std::string(name) + "'");
}

std::string RMod::summary(const Object& o) const {
  if (o.gens() == 0) return "0";
  std::string s = o.gens() == 1 ? "R" : "R^" + std::to_string(o.gens());
  if (!o.p->relations.empty()) s += " / " + std::to_string(o.p->relations.size()) + " relations";
  return s;
}

RModMor RMod::compose(const Morphism& g, const Morphism& f) const {
  if (g.dom.gens() != f.codom.gens()) fail(ErrorCode::ObjectMismatch, "R-Mod composition endpoints differ");
  RModMor r{f.dom, g.codom, {}};
  for (const auto& col : f.cols) {
    std::vector<SparsePoly> out(g.codom.gens(), zero());
    for (std::size_t k = 0; k < col.size(); ++k) {
      if (col[k].is_zero()) continue;
      for (std::size_t i = 0; i < out.size(); ++i) out[i] += g.cols[k][i] * col[k];
    }
    r.cols.push_back(std::move(out));
  }
  return r;
}

// Equal in the quotient when each column difference is zero or, up to sign, a listed relation.
// Sound but far from a submodule membership test.
bool RMod::equal(const Morphism& f, const Morphism& g) const {
  if (!same_object(f.dom, g.dom) || !same_object(f.codom, g.codom) || f.cols.size() != g.cols.size()) return false;
  const auto& rels = f.codom.p->relations;
  for (std::size_t j = 0; j < f.cols.size(); ++j) {
    if (f.cols[j] == g.cols[j]) continue;
    std::vector<SparsePoly> diff, neg;
    for (std::size_t i = 0; i < f.cols[j].size(); ++i) {
      diff.push_back(f.cols[j][i] - g.cols[j][i]);
      neg.push_back(-diff.back());
    }
    if (std::find(rels.begin(), rels.end(), diff) == rels.end() && std::find(rels.begin(), rels.end(), neg) == rels.end())
      return false;
  }
  return true;
}

RModMor RMod::identity(const Object& o) const {
  RModMor r{o, o, {}};
  for (std::size_t j = 0; j < o.gens(); ++j) {
    std::vector<SparsePoly> col(o.gens(), zero());
    col[j] = one();
    r.cols.push_back(std::move(col));
  }
  return r;
}

CoproductCocone<RMod> RMod::coproduct(const std::vector<Object>& objs) const {
  ModulePresentation p;
  for (const auto& o : objs) p.g += o.gens();
  std::size_t off = 0;
  std::vector<std::size_t> offs;
  for (const auto& o : objs) {
    offs.push_back(off);
    for (const auto& rel : o.p->relations) {
      std::vector<SparsePoly> col(p.g, zero());
      for (std::size_t i = 0; i < rel.size(); ++i) col[off + i] = rel[i];
      p.relations.push_back(std::move(col));
    }
    off += o.gens();
  }
  CoproductCocone<RMod> c{from(std::move(p)), {}};
  for (std::size_t k = 0; k < objs.size(); ++k) {
    RModMor in{objs[k], c.apex, {}};
    for (std::size_t j = 0; j < objs[k].gens(); ++j) {
      std::vector<SparsePoly> col(c.apex.gens(), zero());
      col[offs[k] + j] = one();
      in.cols.push_back(std::move(col));
    }
    c.injections.push_back(std::move(in));
  }
  return c;
}

RModMor RMod::cotuple(const Object& tgt, const std::vector<Morphism>& comps, const CoproductCocone<RMod>& c) const {
  RModMor r{c.apex, tgt, {}};
  for (const auto& m : comps) r.cols.insert(r.cols.end(), m.cols.begin(), m.cols.end());
  return r;
}

Coequalizer<RMod> RMod::coequalizer(const Morphism& f, const Morphism& g) const {
  ModulePresentation p = *f.codom.p;
  for (std::size_t j = 0; j < f.cols.size(); ++j) {
    std::vector<SparsePoly> col(p.g, zero());
    bool nonzero = false;
    for (std::size_t i = 0; i < p.g; ++i) {
      col[i] = f.cols[j][i] - g.cols[j][i];
      nonzero = nonzero || !col[i].is_zero();
    }
    if (nonzero) p.relations.push_back(std::move(col));
  }
  Coequalizer<RMod> q{from(std::move(p)), {}};
  q.quotient = identity(q.apex);
  q.quotient.dom = f.codom;
  return q;
}

Cone<RMod> RMod::colimit(const Diagram<RMod>& d) const { return rmod_colimit_presentation(d, *this); }

Cone<RMod> rmod_colimit_presentation(const Diagram<RMod>& d, const RMod& cat) {
  std::vector<RModObj> objs;
  std::map<VertexId, std::size_t> index;
  for (auto v : d.graph.vertices()) {
    index[v] = objs.size();
    objs.push_back(d.obj(v));
  }
  auto cop = cat.coproduct(objs);
  ModulePresentation p = *cop.apex.p;
  for (const auto& e : d.graph.edges()) {
    const RModMor& m = d.mor(e.id);
    const auto& js = cop.injections[index[e.src]];
    const auto& jt = cop.injections[index[e.tgt]];
    auto pushed = cat.compose(jt, m);
    for (std::size_t j = 0; j < m.cols.size(); ++j) {
      std::vector<SparsePoly> col(p.g, SparsePoly(cat.ring()));
      bool nonzero = false;
      for (std::size_t i = 0; i < p.g; ++i) {
        col[i] = js.cols[j][i] - pushed.cols[j][i];
        nonzero = nonzero || !col[i].is_zero();
      }
      if (nonzero) p.relations.push_back(std::move(col));
    }
  }
  Cone<RMod> cone{cat.from(std::move(p)), {}};
  for (auto v : d.graph.vertices()) {
    RModMor leg = cop.injections[index[v]];
    leg.codom = cone.apex;
    cone.legs.emplace(v, std::move(leg));
  }
  return cone;
}

LinearSystemOverR build_cocone_system(const Diagram<RMod>& d, const RMod& cat) {
  LinearSystemOverR sys;
  std::map<VertexSlot, std::size_t> col;
  for (auto v : d.graph.vertices())
    for (std::size_t i = 0; i < d.obj(v).gens(); ++i) {
      col[{v, i}] = sys.unknowns.size();
      sys.unknowns.emplace_back(v, i);
    }
  const std::size_t s = sys.unknowns.size();
  auto zero_row = [&] { return std::vector<SparsePoly>(s, SparsePoly(cat.ring())); };
  for (const auto& e : d.graph.edges()) {
    const RModMor& m = d.mor(e.id);
    for (std::size_t j = 0; j < m.cols.size(); ++j) {
      auto row = zero_row();
      row[col[{e.src, j}]] += SparsePoly::constant(cat.ring(), 1);
      for (std::size_t i = 0; i < m.cols[j].size(); ++i) row[col[{e.tgt, i}]] -= m.cols[j][i];
      sys.rows.push_back(std::move(row));
    }
  }
  for (auto v : d.graph.vertices())
    for (const auto& rel : d.obj(v).p->relations) {
      auto row = zero_row();
      for (std::size_t i = 0; i < rel.size(); ++i) row[col[{v, i}]] += rel[i];
      sys.rows.push_back(std::move(row));
    }
  return sys;
}

std::map<VertexSlot, SparsePoly> rmod_extract_cocone_polys(const Diagram<RMod>& d, const RMod& cat,
                                                           bool assertColimitIsR, const ExtractionOptions& opt) {
  LinearSystemOverR sys = build_cocone_system(d, cat);
  const std::size_t s = sys.unknowns.size();
  auto& a = sys.rows;
  auto check_budget = [&](const SparsePoly& p) {
    if (p.total_degree() > opt.degreeBudget)
      fail(ErrorCode::DegreeBudgetExceeded, "entry of degree " + std::to_string(p.total_degree()));
  };

  // Fraction-free Gauss-Jordan elimination; rows are kept polynomial.
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < s && r < a.size(); ++c) {
    std::optional<std::size_t> best;
    for (std::size_t i = r; i < a.size(); ++i)
      if (!a[i][c].is_zero() && (!best || weight(a[i][c]) < weight(a[*best][c]))) best = i;
    if (!best) continue;
    std::swap(a[r], a[*best]);
    const SparsePoly p = a[r][c];
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      const SparsePoly q = a[i][c];
      if (p.is_constant()) {
        Rational f = 1 / p.constant_term();
        for (std::size_t k = 0; k < s; ++k)
          if (!a[r][k].is_zero()) a[i][k] -= a[r][k] * q * f;
      } else {
        SparsePoly g(cat.ring());
        for (std::size_t k = 0; k < s; ++k) {
          a[i][k] = a[i][k] * p - a[r][k] * q;
          if (!a[i][k].is_zero()) g = poly_gcd(g, a[i][k]);
        }
        if (!g.is_zero() && !g.is_constant())
          for (std::size_t k = 0; k < s; ++k)
            if (!a[i][k].is_zero()) a[i][k] = *divide_exact(a[i][k], g);
      }
      for (std::size_t k = 0; k < s; ++k) check_budget(a[i][k]);
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(s, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < s; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  if (free_cols.empty()) fail(ErrorCode::NoNontrivialSolution, "cocone system has only the zero solution");
  if (free_cols.size() > 1 && assertColimitIsR)
    fail(ErrorCode::RankAmbiguous, "cocone solution space has rank " + std::to_string(free_cols.size()));
  const std::size_t f = free_cols.front();

  SparsePoly lcm = SparsePoly::constant(cat.ring(), 1);
  for (std::size_t k = 0; k < pivot_col.size(); ++k) {
    const SparsePoly& p = a[k][pivot_col[k]];
    if (p.is_constant()) continue;
    SparsePoly g = poly_gcd(lcm, p);
    lcm = *divide_exact(lcm * p, g);
  }
  std::vector<SparsePoly> x(s, SparsePoly(cat.ring()));
  x[f] = lcm;
  for (std::size_t k = 0; k < pivot_col.size(); ++k) {
    const SparsePoly& p = a[k][pivot_col[k]];
    if (a[k][f].is_zero()) continue;
    auto q = divide_exact(lcm, p);
    if (!q) q = lcm * (1 / p.constant_term());
    x[pivot_col[k]] = -(a[k][f] * *q);
    if (p.is_constant()) x[pivot_col[k]] = -(a[k][f] * lcm) * (1 / p.constant_term());
  }

  SparsePoly g(cat.ring());
  for (const auto& v : x)
    if (!v.is_zero()) g = poly_gcd(g, v);
  if (!g.is_zero() && !g.is_constant())
    for (auto& v : x)
      if (!v.is_zero()) v = *divide_exact(v, g);

  // Integer-primitive vector with a positive leading coefficient at the designated slot.
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& v : x)
    for (const auto& [m, c] : v.terms()) {
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    }
  Rational scale = num_gcd == 0 ? Rational(1) : Rational(den_lcm, num_gcd);
  scale.canonicalize();
  std::optional<std::size_t> slot;
  for (std::size_t k = 0; k < s; ++k) {
    if (opt.designated ? sys.unknowns[k].first == *opt.designated : true) {
      slot = k;
      break;
    }
  }
  std::optional<std::size_t> sign_slot;
  if (slot && !x[*slot].is_zero()) sign_slot = slot;
  for (std::size_t k = 0; k < s && !sign_slot; ++k)
    if (!x[k].is_zero()) sign_slot = k;
  if (sign_slot && x[*sign_slot].leading_coefficient() < 0) scale = -scale;

  std::map<VertexSlot, SparsePoly> out;
  for (std::size_t k = 0; k < s; ++k) out.emplace(sys.unknowns[k], x[k] * scale);
  return out;
}

}  // namespace catc
