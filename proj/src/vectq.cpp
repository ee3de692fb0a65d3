#include "catc/vectq.hpp"

#include <map>
#include <random>
#include <stdexcept>

namespace catc {

namespace {

std::optional<Rational> param_of(std::string_view name, std::string_view head) {
  if (name.size() < head.size() + 2 || name.substr(0, head.size()) != head || name[head.size()] != '(' ||
      name.back() != ')')
    return std::nullopt;
  return parse_rational(name.substr(head.size() + 1, name.size() - head.size() - 2));
}

std::map<VertexId, std::size_t> offsets(const Diagram<VectQ>& d, std::size_t& total) {
  std::map<VertexId, std::size_t> off;
  total = 0;
  for (auto v : d.graph.vertices()) {
    off[v] = total;
    total += d.obj(v).dim;
  }
  return off;
}

}  // namespace

VectMor VectQ::basic(std::string_view name) const {
  if (auto c = param_of(name, "scale")) return {QMatrix(1, 1, {*c})};
  if (name == "add") return {QMatrix(1, 2, {1, 1})};
  if (name == "pi1") return {QMatrix(1, 2, {1, 0})};
  if (name == "pi2") return {QMatrix(1, 2, {0, 1})};
  if (name == "from_zero") return {QMatrix(1, 0)};
  if (name == "to_zero") return {QMatrix(0, 1)};
  fail(ErrorCode::UnknownBasicMorphism, "VectQ has no basic morphism '" + std::string(name) + "'");
}

std::string VectQ::summary(const Object& o) const {
  if (o.dim == 0) return "0";
  if (o.dim == 1) return "k";
  return "k^" + std::to_string(o.dim);
}

VectMor VectQ::compose(const Morphism& g, const Morphism& f) const {
  if (g.m.cols() != f.m.rows()) fail(ErrorCode::ObjectMismatch, "VectQ composition endpoints differ");
  return {g.m * f.m};
}

ProductCone<VectQ> VectQ::product(const std::vector<Object>& objs) const {
  std::size_t total = 0;
  for (const auto& o : objs) total += o.dim;
  ProductCone<VectQ> p{{total}, {}};
  std::size_t off = 0;
  for (const auto& o : objs) {
    QMatrix pr(o.dim, total);
    pr.set_block(0, off, QMatrix::identity(o.dim));
    p.projections.push_back({pr});
    off += o.dim;
  }
  return p;
}

VectMor VectQ::tuple(const Object& src, const std::vector<Morphism>& comps, const ProductCone<VectQ>& p) const {
  QMatrix t(p.apex.dim, src.dim);
  std::size_t off = 0;
  for (const auto& c : comps) {
    t.set_block(off, 0, c.m);
    off += c.m.rows();
  }
  return {t};
}

Equalizer<VectQ> VectQ::equalizer(const Morphism& f, const Morphism& g) const {
  QMatrix k = kernel(f.m - g.m);
  return {{k.cols()}, {k}};
}

CoproductCocone<VectQ> VectQ::coproduct(const std::vector<Object>& objs) const {
  std::size_t total = 0;
  for (const auto& o : objs) total += o.dim;
  CoproductCocone<VectQ> c{{total}, {}};
  std::size_t off = 0;
  for (const auto& o : objs) {
    QMatrix in(total, o.dim);
    in.set_block(off, 0, QMatrix::identity(o.dim));
    c.injections.push_back({in});
    off += o.dim;
  }
  return c;
}

VectMor VectQ::cotuple(const Object& tgt, const std::vector<Morphism>& comps, const CoproductCocone<VectQ>& c) const {
  QMatrix t(tgt.dim, c.apex.dim);
  std::size_t off = 0;
  for (const auto& m : comps) {
    t.set_block(0, off, m.m);
    off += m.m.cols();
  }
  return {t};
}

Coequalizer<VectQ> VectQ::coequalizer(const Morphism& f, const Morphism& g) const {
  QMatrix q = cokernel_map(f.m - g.m);
  return {{q.rows()}, {q}};
}

QMatrix vect_limit_constraint(const Diagram<VectQ>& d) {
  std::size_t n = 0;
  auto off = offsets(d, n);
  std::size_t rows = 0;
  for (const auto& e : d.graph.edges()) rows += d.obj(e.tgt).dim;
  QMatrix a(rows, n);
  std::size_t r = 0;
  for (const auto& e : d.graph.edges()) {
    const QMatrix& m = d.mor(e.id).m;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      a(r + i, off[e.tgt] + i) += 1;
      for (std::size_t j = 0; j < m.cols(); ++j) a(r + i, off[e.src] + j) -= m(i, j);
    }
    r += m.rows();
  }
  return a;
}

Cone<VectQ> VectQ::limit(const Diagram<VectQ>& d) const {
  std::size_t n = 0;
  auto off = offsets(d, n);
  QMatrix a = vect_limit_constraint(d);
  QMatrix k = kernel(a);
  if (k.cols() + rank(a) != n) throw std::logic_error("rank-nullity violated in VectQ limit");
  Cone<VectQ> cone{{k.cols()}, {}};
  for (auto v : d.graph.vertices()) cone.legs.emplace(v, VectMor{k.block(off[v], 0, d.obj(v).dim, k.cols())});
  return cone;
}

Cone<VectQ> VectQ::colimit(const Diagram<VectQ>& d) const {
  std::size_t n = 0;
  auto off = offsets(d, n);
  std::size_t cols = 0;
  for (const auto& e : d.graph.edges()) cols += d.obj(e.src).dim;
  QMatrix b(n, cols);
  std::size_t c = 0;
  for (const auto& e : d.graph.edges()) {
    const QMatrix& m = d.mor(e.id).m;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      for (std::size_t i = 0; i < m.rows(); ++i) b(off[e.tgt] + i, c + j) += m(i, j);
      b(off[e.src] + j, c + j) -= 1;
    }
    c += m.cols();
  }
  QMatrix q = cokernel_map(b);
  Cone<VectQ> cone{{q.rows()}, {}};
  for (auto v : d.graph.vertices()) cone.legs.emplace(v, VectMor{q.block(0, off[v], q.rows(), d.obj(v).dim)});
  return cone;
}

std::optional<std::vector<VectMor>> VectQ::find_witnesses(const WitnessProblem<VectQ>& p,
                                                          std::uint64_t& budget) const {
  const std::size_t n = p.target_objs.size();
  std::vector<std::size_t> off(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (p.target_objs[i].dim != p.host_objs[i].dim) return std::nullopt;
    off[i + 1] = off[i] + p.target_objs[i].dim * p.target_objs[i].dim;
  }
  if (budget == 0) fail(ErrorCode::SearchBudgetExceeded, "witness search budget exhausted");
  --budget;
  auto dim = [&](std::size_t i) { return p.target_objs[i].dim; };
  if (p.squares.empty()) {
    std::vector<VectMor> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back({QMatrix::identity(dim(i))});
    return out;
  }
  std::size_t rows = 0;
  for (const auto& sq : p.squares) rows += dim(sq.t) * dim(sq.s);
  QMatrix sys(rows, off[n]);
  std::size_t r = 0;
  for (const auto& sq : p.squares) {
    const QMatrix& a = sq.target_mor.m;
    const QMatrix& b = sq.host_mor.m;
    std::size_t dt = dim(sq.t), ds = dim(sq.s);
    for (std::size_t i = 0; i < dt; ++i)
      for (std::size_t j = 0; j < ds; ++j, ++r) {
        for (std::size_t k = 0; k < dt; ++k) sys(r, off[sq.t] + i * dt + k) += a(k, j);
        for (std::size_t k = 0; k < ds; ++k) sys(r, off[sq.s] + k * ds + j) -= b(i, k);
      }
  }
  QMatrix basis = kernel(sys);
  std::mt19937_64 rng(0x5eedULL + basis.cols());
  std::uniform_int_distribution<long> coeff(-1000000, 1000000);
  for (int attempt = 0; attempt < 6; ++attempt) {
    std::vector<Rational> c(basis.cols());
    for (auto& x : c) x = coeff(rng);
    std::vector<VectMor> out;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      QMatrix w(dim(i), dim(i));
      for (std::size_t e = 0; e < dim(i) * dim(i); ++e) {
        Rational s = 0;
        for (std::size_t b = 0; b < c.size(); ++b) s += basis(off[i] + e, b) * c[b];
        w(e / dim(i), e % dim(i)) = s;
      }
      ok = is_invertible(w);
      out.push_back({w});
    }
    if (ok) return out;
  }
  return std::nullopt;
}

ImageFactorization<VectQ> VectQ::image(const Morphism& f) const {
  Rref r = rref(f.m);
  QMatrix basis = column_space(f.m);
  QMatrix factor = r.reduced.block(0, 0, r.pivots.size(), f.m.cols());
  return {{basis.cols()}, {basis}, {factor}};
}

Cone<VectQ> vect_limit(const Diagram<VectQ>& d) { return VectQ{}.limit(d); }
Cone<VectQ> vect_colimit(const Diagram<VectQ>& d) { return VectQ{}.colimit(d); }

}  // namespace catc
