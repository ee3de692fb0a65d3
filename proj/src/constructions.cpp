#include "catc/constructions.hpp"

#include <string>

namespace catc {

namespace {

std::string scale(long c) { return "scale(" + std::to_string(c) + ")"; }

const char* generic_form(unsigned i) {
  static const char* forms[] = {"pi1", "pi2", "add"};
  return forms[i % 3];
}

long generic_coeff(unsigned i, unsigned j) { return 1 + static_cast<long>(i) * (j + 1); }

long ipow(long b, unsigned e) {
  long r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

Computation sets_computation(unsigned n) {
  ComputationBuilder b(ComputationKind::Colimit);
  std::set<VertexId> all;
  for (unsigned k = 0; k < n; ++k) all.insert(b.basic("id1", VertexSpec::fresh(), VertexSpec::loop()).first);
  if (n > 0) b.colim(all);
  return b.take();
}

Computation nonconstructive_computation(unsigned a) {
  ComputationBuilder b(ComputationKind::Colimit);
  VertexId p = b.basic("id1", VertexSpec::fresh(), VertexSpec::loop()).first;
  VertexId q = b.basic("id1", VertexSpec::fresh(), VertexSpec::loop()).first;
  std::set<VertexId> apexes;
  for (unsigned k = 0; k < a; ++k) apexes.insert(b.colim({p, q}));
  b.colim(apexes);
  return b.take();
}

Computation doubling_computation(unsigned k) {
  ComputationBuilder b(ComputationKind::Mixed);
  VertexId p = b.basic("id1", VertexSpec::fresh(), VertexSpec::loop()).first;
  VertexId q = b.basic("id1", VertexSpec::fresh(), VertexSpec::loop()).first;
  VertexId x = b.colim({p, q});
  VertexId y = b.colim({p, q});
  for (unsigned level = 0; level < k; ++level) {
    VertexId nx = b.lim({x, y});
    VertexId ny = b.lim({x, y});
    x = nx;
    y = ny;
  }
  return b.take();
}

SubspaceComputation subspaces_generic(unsigned n) {
  ComputationBuilder b(ComputationKind::Limit);
  const unsigned count = n * n, dimV = 2 * n;
  std::vector<VertexId> e(dimV), x(count);
  std::vector<std::vector<VertexId>> m(count, std::vector<VertexId>(dimV));
  for (unsigned j = 0; j < count; ++j)
    for (unsigned i = 0; i < dimV; ++i) {
      auto [src, tgt] = b.basic(generic_form(i), i == 0 ? VertexSpec::fresh() : VertexSpec::at(x[j]), VertexSpec::fresh());
      x[j] = src;
      m[j][i] = tgt;
      auto placed = b.basic(scale(generic_coeff(i, j)), VertexSpec::at(tgt),
                            j == 0 ? VertexSpec::fresh() : VertexSpec::at(e[i]));
      e[i] = placed.second;
    }
  std::set<VertexId> es(e.begin(), e.end());
  SubspaceComputation out;
  out.v = b.lim(es);
  for (unsigned j = 0; j < count; ++j) {
    std::set<VertexId> over = es;
    over.insert(out.v);
    over.insert(x[j]);
    over.insert(m[j].begin(), m[j].end());
    out.subspaces.push_back(b.lim(over));
  }
  out.comp = b.take();
  return out;
}

SubspaceComputation subspaces_special(unsigned n) {
  ComputationBuilder b(ComputationKind::Limit);
  std::vector<VertexId> l1(n), l2(n), e1(n), e2(n);
  auto family = [&](std::vector<VertexId>& l, std::vector<VertexId>& e, long base) {
    for (unsigned i = 0; i < n; ++i)
      for (unsigned k = 0; k < n; ++k) {
        auto [src, tgt] = b.basic(scale(ipow(base + i, k)), k == 0 ? VertexSpec::fresh() : VertexSpec::at(l[i]),
                                  i == 0 ? VertexSpec::fresh() : VertexSpec::at(e[k]));
        l[i] = src;
        e[k] = tgt;
      }
  };
  family(l1, e1, 1);
  family(l2, e2, 2);
  std::set<VertexId> es(e1.begin(), e1.end());
  es.insert(e2.begin(), e2.end());
  SubspaceComputation out;
  out.v = b.lim(es);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      std::set<VertexId> over = es;
      over.insert({out.v, l1[i], l2[j]});
      out.subspaces.push_back(b.lim(over));
    }
  out.comp = b.take();
  return out;
}

namespace {

Diagram<VectQ> star(unsigned n, const std::vector<QMatrix>& incl) {
  Diagram<VectQ> d;
  VertexId v{0};
  d.add_vertex(v, VectObj{2 * n}, "V");
  for (std::uint32_t j = 0; j < incl.size(); ++j) {
    VertexId s{j + 1};
    d.add_vertex(s, VectObj{2}, "S" + std::to_string(j + 1));
    d.add_edge({EdgeId{j}, s, v}, VectMor{incl[j]});
  }
  return d;
}

}  // namespace

Diagram<VectQ> subspaces_generic_target(unsigned n) {
  std::vector<QMatrix> incl;
  for (unsigned j = 0; j < n * n; ++j) {
    QMatrix a(2 * n, 2);
    for (unsigned i = 0; i < 2 * n; ++i) {
      Rational c = generic_coeff(i, j);
      if (i % 3 != 1) a(i, 0) = c;
      if (i % 3 != 0) a(i, 1) = c;
    }
    incl.push_back(a);
  }
  return star(n, incl);
}

Diagram<VectQ> subspaces_special_target(unsigned n) {
  std::vector<QMatrix> incl;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      QMatrix a(2 * n, 2);
      for (unsigned k = 0; k < n; ++k) {
        a(k, 0) = ipow(i + 1, k);
        a(n + k, 1) = ipow(j + 2, k);
      }
      incl.push_back(a);
    }
  return star(n, incl);
}

}  // namespace catc
