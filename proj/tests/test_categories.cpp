#include <gtest/gtest.h>

#include <random>

#include "catc/boolean.hpp"
#include "catc/engine.hpp"
#include "catc/finset.hpp"
#include "catc/sampling.hpp"
#include "catc/vectq.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace catc;

namespace {

Diagram<FinSet> random_set_diagram(std::mt19937_64& rng) {
  Diagram<FinSet> d;
  std::size_t nv = 1 + rng() % 3;
  for (std::uint32_t v = 0; v < nv; ++v) d.add_vertex({v}, FinSet::set_of_size(1 + rng() % 3));
  std::size_t ne = rng() % 4;
  for (std::uint32_t e = 0; e < ne; ++e) {
    VertexId s{static_cast<std::uint32_t>(rng() % nv)}, t{static_cast<std::uint32_t>(rng() % nv)};
    std::vector<std::uint32_t> table(d.obj(s).size());
    for (auto& x : table) x = static_cast<std::uint32_t>(rng() % d.obj(t).size());
    d.add_edge({{e}, s, t}, FinSet::make_map(d.obj(s), d.obj(t), table));
  }
  return d;
}

Diagram<VectQ> random_vect_diagram(std::mt19937_64& rng) {
  Diagram<VectQ> d;
  std::size_t nv = 1 + rng() % 3;
  for (std::uint32_t v = 0; v < nv; ++v) d.add_vertex({v}, {rng() % 4});
  std::size_t ne = rng() % 4;
  for (std::uint32_t e = 0; e < ne; ++e) {
    VertexId s{static_cast<std::uint32_t>(rng() % nv)}, t{static_cast<std::uint32_t>(rng() % nv)};
    QMatrix m(d.obj(t).dim, d.obj(s).dim);
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rng() % 2 ? Rational(0) : random_rational(rng, 3, 2);
    d.add_edge({{e}, s, t}, {m});
  }
  return d;
}

}  // namespace

TEST(FinSet, LimitCardinalityMatchesConeCount) {
  std::mt19937_64 rng(11);
  FinSet cat;
  for (int t = 0; t < 150; ++t) {
    auto d = random_set_diagram(rng);
    std::vector<VertexId> order;
    auto od = support::to_oracle(d, order);
    auto direct = cat.limit(d);
    auto reduced = limit_via_equalizer(d, cat);
    EXPECT_EQ(direct.apex.size(), oracle::cones_from_point(od).size());
    EXPECT_EQ(reduced.apex.size(), direct.apex.size());
    EXPECT_TRUE(cone_commutes(d, direct, StepKind::Lim, cat));
    EXPECT_TRUE(cone_commutes(d, reduced, StepKind::Lim, cat));
  }
}

TEST(FinSet, ColimitCardinalityMatchesComponents) {
  std::mt19937_64 rng(12);
  FinSet cat;
  for (int t = 0; t < 150; ++t) {
    auto d = random_set_diagram(rng);
    std::vector<VertexId> order;
    auto od = support::to_oracle(d, order);
    auto direct = cat.colimit(d);
    auto reduced = colimit_via_coequalizer(d, cat);
    std::size_t n = oracle::colimit_size_bfs(od);
    EXPECT_EQ(direct.apex.size(), n);
    EXPECT_EQ(reduced.apex.size(), n);
    // Cocones into {0,1} correspond to subsets of the colimit.
    EXPECT_EQ(oracle::cocones_to_two(od).size(), std::size_t{1} << n);
    EXPECT_TRUE(cone_commutes(d, direct, StepKind::Colim, cat));
  }
}

TEST(FinSet, ImageFactorsThroughMono) {
  FinSet cat;
  auto f = FinSet::make_map(FinSet::set_of_size(4), FinSet::set_of_size(5), {3, 1, 3, 0});
  auto im = cat.image(f);
  EXPECT_EQ(im.subobject.size(), 3u);
  EXPECT_TRUE(cat.equal(cat.compose(im.mono, im.factor), f));
  EXPECT_FALSE(cat.is_iso(f));
  EXPECT_THROW(cat.basic("id2"), Error);
}

TEST(VectQ, LimitDimensionIsKernelDimension) {
  std::mt19937_64 rng(13);
  VectQ cat;
  for (int t = 0; t < 150; ++t) {
    auto d = random_vect_diagram(rng);
    std::size_t total = 0;
    for (auto v : d.graph.vertices()) total += d.obj(v).dim;
    auto cone = cat.limit(d);
    EXPECT_EQ(cone.apex.dim + rank(vect_limit_constraint(d)), total);
    EXPECT_TRUE(cone_commutes(d, cone, StepKind::Lim, cat));
    EXPECT_EQ(limit_via_equalizer(d, cat).apex.dim, cone.apex.dim);
  }
}

TEST(VectQ, ColimitDimensionIsCokernelDimension) {
  std::mt19937_64 rng(14);
  VectQ cat;
  for (int t = 0; t < 150; ++t) {
    auto d = random_vect_diagram(rng);
    std::size_t total = 0;
    for (auto v : d.graph.vertices()) total += d.obj(v).dim;
    // Colimit relations: image of (in_t . m - in_s) over edges, a map Q^{sum dim src} -> Q^{total}.
    std::map<VertexId, std::size_t> off;
    std::size_t o = 0;
    for (auto v : d.graph.vertices()) off[v] = o, o += d.obj(v).dim;
    std::vector<std::vector<oracle::Q>> rel;
    for (const auto& e : d.graph.edges()) {
      const auto& m = d.mor(e.id).m;
      for (std::size_t j = 0; j < m.cols(); ++j) {
        std::vector<oracle::Q> col(total);
        col[off[e.src] + j] -= 1;
        for (std::size_t i = 0; i < m.rows(); ++i) col[off[e.tgt] + i] += m(i, j);
        rel.push_back(col);
      }
    }
    auto cone = cat.colimit(d);
    EXPECT_EQ(cone.apex.dim, total - oracle::rank(rel));
    EXPECT_TRUE(cone_commutes(d, cone, StepKind::Colim, cat));
    EXPECT_EQ(colimit_via_coequalizer(d, cat).apex.dim, cone.apex.dim);
  }
}

TEST(VectQ, BasicsHaveExpectedShapes) {
  VectQ cat;
  EXPECT_EQ(cat.basic("add").m, QMatrix(1, 2, {1, 1}));
  EXPECT_EQ(cat.basic("pi2").m, QMatrix(1, 2, {0, 1}));
  EXPECT_EQ(cat.basic("scale(3/2)").m, QMatrix(1, 1, {Rational(3, 2)}));
  EXPECT_EQ(cat.dom(cat.basic("from_zero")).dim, 0u);
  EXPECT_EQ(cat.codom(cat.basic("to_zero")).dim, 0u);
  EXPECT_THROW(cat.basic("scale(x)"), Error);
}

TEST(BoolLattice, LimitIsIntersectionColimitIsUnion) {
  BoolLattice cat(3);
  std::mt19937_64 rng(15);
  for (int t = 0; t < 50; ++t) {
    Diagram<BoolLattice> d;
    auto a = cat.z(1 + rng() % 3), b = cat.z(1 + rng() % 3), c = cat.z(1 + rng() % 3);
    d.add_vertex({0}, a);
    d.add_vertex({1}, b);
    d.add_vertex({2}, c);
    auto lim = cat.limit(d).apex, colim = cat.colimit(d).apex;
    for (std::size_t p = 0; p < cat.points(); ++p) {
      EXPECT_EQ(lim.contains(p), a.contains(p) && b.contains(p) && c.contains(p));
      EXPECT_EQ(colim.contains(p), a.contains(p) || b.contains(p) || c.contains(p));
    }
  }
}

TEST(BoolLattice, BasicsAreCoordinateIdentities) {
  BoolLattice cat(4);
  auto z2 = cat.basic("z(2)");
  EXPECT_EQ(z2.dom, cat.z(2));
  EXPECT_EQ(z2.codom, cat.z(2));
  EXPECT_EQ(cat.z(2).count(), 8u);
  EXPECT_THROW(cat.basic("z(5)"), Error);
  EXPECT_THROW(cat.inclusion(cat.full(), cat.empty()), Error);
}
