#include <gtest/gtest.h>

#include "catc/affvar.hpp"
#include "catc/engine.hpp"
#include "catc/rmod.hpp"
#include "catc/script.hpp"

using namespace catc;

TEST(AffVar, BasicsAreTheExpectedPolynomialMaps) {
  AffVar cat;
  auto mul = cat.basic("mul");
  EXPECT_EQ(mul.dom.dim(), 2u);
  EXPECT_EQ(mul.comps[0].evaluate({3, 4}), 12);
  EXPECT_EQ(cat.basic("const_endo(5)").comps[0].evaluate({2}), 10);
  EXPECT_EQ(cat.basic("point(7)").dom.dim(), 0u);
  EXPECT_THROW(cat.basic("div"), Error);
}

TEST(AffVar, FiberProductOfMulGivesDegreeTwoEquation) {
  // lim of A^2 --mul--> A^1 <--point(6)-- A^0 is the hyperbola xy = 6.
  Computation c = parse_script("1. _,mul,_\n2. _,point(6),1'\n3. lim(1,1',2)\n");
  auto r = replay(c, AffVar{});
  const auto& apex = r.state.diagram.obj(vertex_named(r.structure, "3"));
  const Presentation& p = apex.pres();
  EXPECT_LE(p.max_degree(), 2u);
  // Coordinates x, y and the product; the point contributes none.
  EXPECT_EQ(p.m1, 3u);
  EXPECT_TRUE(presentation_membership(p, {2, 3, 6}));
  EXPECT_TRUE(presentation_membership(p, {Rational(1, 2), 12, 6}));
  EXPECT_FALSE(presentation_membership(p, {2, 2, 4}));
  EXPECT_FALSE(presentation_membership(p, {2, 3, 5}));
}

TEST(AffVar, DirectPresentationAgreesWithReducedLimit) {
  Computation c = parse_script("1. _,add,_\n2. _,point(1),1'\n3. lim(1,1',2)\n");
  auto r = replay(c, AffVar{});
  auto sub = full_subdiagram(r.state.diagram, {VertexId{0}, VertexId{1}, VertexId{2}});
  auto direct = affvar_limit_presentation(sub);
  const Presentation& reduced = r.state.diagram.obj(vertex_named(r.structure, "3")).pres();
  // Points on x + y = 1 in both coordinate systems.
  for (int x = -2; x <= 2; ++x) {
    EXPECT_TRUE(presentation_membership(reduced, {x, 1 - x, 1}));
    EXPECT_TRUE(presentation_membership(direct.apex.pres(), {x, 1 - x, 1}));
    EXPECT_FALSE(presentation_membership(direct.apex.pres(), {x, 2 - x, 2}));
  }
}

TEST(AffVar, CompletePointSolvesTriangularSystem) {
  Presentation p = Presentation::affine_space(3);
  p.equations.push_back(parse_poly("c1 - c0^2", p.vars));
  p.equations.push_back(parse_poly("c2 - c0*c1 - 1", p.vars));
  auto pt = complete_point(p, {{0, 3}});
  ASSERT_EQ(pt.size(), 3u);
  EXPECT_EQ(pt[1], 9);
  EXPECT_EQ(pt[2], 28);
}

TEST(AffVar, ColimitIsAMissingCapability) {
  Computation c = parse_script("!colimit\n1. _,pi1,_\n2. colim(1,1')\n");
  try {
    replay(c, AffVar{});
    FAIL() << "expected CapabilityMissing";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CapabilityMissing);
  }
}

TEST(RMod, ColimitOfMultiplicationIsQuotient) {
  Vars ring = make_vars({"x"});
  RMod cat(ring);
  // R --x--> R and R --1--> R glued: generators of both vertices, one relation per edge.
  Diagram<RMod> d;
  d.add_vertex({0}, cat.free(1));
  d.add_vertex({1}, cat.free(1));
  d.add_edge({{0}, {0}, {1}}, cat.basic("xmul(1)"));
  d.add_edge({{1}, {0}, {1}}, cat.basic("cmul(1)"));
  auto cone = cat.colimit(d);
  EXPECT_EQ(cone.apex.gens(), 2u);
  ASSERT_EQ(cone.apex.p->relations.size(), 2u);
  // Subtracting the relations leaves (x - 1) times the target generator.
  auto r0 = cone.apex.p->relations[0], r1 = cone.apex.p->relations[1];
  EXPECT_TRUE((r0[0] - r1[0]).is_zero());
  EXPECT_EQ(normalize_unit(r1[1] - r0[1]), normalize_unit(parse_poly("x - 1", ring)));
  EXPECT_TRUE(cone_commutes(d, cone, StepKind::Colim, cat));
}

TEST(RMod, LimitIsAMissingCapability) {
  Vars ring = make_vars({"x"});
  Computation c = parse_script("1. _,xmul(1),_\n2. lim(1,1')\n");
  try {
    replay(c, RMod(ring));
    FAIL() << "expected CapabilityMissing";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CapabilityMissing);
  }
}

TEST(RMod, ExtractionRecoversProductAlongChain) {
  Vars ring = make_vars({"x1", "x2"});
  RMod cat(ring);
  Computation c = parse_script("1. _,xmul(1),_\n2. 1',xmul(2),_\n");
  auto r = replay(c, cat);
  ExtractionOptions opt;
  opt.designated = vertex_named(r.structure, "1");
  auto polys = rmod_extract_cocone_polys(r.state.diagram, cat, false, opt);
  SparsePoly at_source = polys.at({vertex_named(r.structure, "1"), 0});
  SparsePoly at_sink = polys.at({vertex_named(r.structure, "2'"), 0});
  // Cocone f_src = f_sink * x1 * x2, scaled so that the sink component is 1.
  EXPECT_EQ(at_source * (Rational(1) / at_sink.leading_coefficient()), parse_poly("x1*x2", ring));
}

TEST(RMod, CoconeSystemHasOneRowPerEdgeSlot) {
  Vars ring = make_vars({"x"});
  RMod cat(ring);
  Diagram<RMod> d;
  d.add_vertex({0}, cat.free(2));
  d.add_vertex({1}, cat.free(1));
  d.add_edge({{0}, {0}, {1}}, cat.basic("add"));
  auto sys = build_cocone_system(d, cat);
  EXPECT_EQ(sys.unknowns.size(), 3u);
  EXPECT_EQ(sys.rows.size(), 2u);
}
