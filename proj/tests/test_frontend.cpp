#include <gtest/gtest.h>

#include <random>

#include "catc/boolean.hpp"
#include "catc/circuit.hpp"
#include "catc/constructions.hpp"
#include "catc/script.hpp"
#include "support.hpp"

using namespace catc;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::DomainError;
}

}  // namespace

TEST(Script, ParsesAliasesAndHeaders) {
  Computation c = parse_script("# five points\n!colimit\n!cost id1 2\n1. _,id1,1\n2. 2,id1,_\n3. colim(1, 2, 2')\n");
  EXPECT_EQ(c.kind, ComputationKind::Colimit);
  ASSERT_EQ(c.steps.size(), 3u);
  EXPECT_EQ(c.steps[0].tgt.kind, VertexSpec::Kind::SourceLoop);
  EXPECT_EQ(c.steps[1].src.kind, VertexSpec::Kind::Fresh);
  EXPECT_EQ(c.steps[1].tgt.kind, VertexSpec::Kind::Fresh);
  EXPECT_EQ(c.steps[2].over.size(), 3u);
  EXPECT_EQ(c.costFn.at("id1"), 2u);
}

TEST(Script, InfersKindFromSteps) {
  EXPECT_EQ(parse_script("1. _,id1,1\n2. lim(1)\n").kind, ComputationKind::Limit);
  EXPECT_EQ(parse_script("1. _,id1,1\n2. lim(1)\n3. colim(1,2)\n").kind, ComputationKind::Mixed);
}

TEST(Script, PrintParseRoundTrip) {
  for (const char* f : {"set5.catc", "setmorphism.catc", "kvect1.catc", "xsq_yz.catc", "majority3.catc"}) {
    Computation c = load_script(support::corpus(f));
    EXPECT_EQ(parse_script(print_script(c)), c) << f;
  }
  Computation d = doubling_computation(2);
  EXPECT_EQ(parse_script(print_script(d)), d);
}

TEST(Script, ErrorsCarryPositions) {
  try {
    parse_script("1. _,id1,1\n2. lim(1,\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_GE(e.column(), 1);
  }
  EXPECT_EQ(code_of([] { parse_script("1. _,id1,1\n1. _,id1,1\n"); }), ErrorCode::RedefinedIdentifier);
  EXPECT_EQ(code_of([] { parse_script("1. lim(4)\n"); }), ErrorCode::UnknownIdentifier);
  EXPECT_EQ(code_of([] { parse_script("!bogus\n"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_script("1. _,id 1,1\n"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { load_script("/nonexistent/file.catc"); }), ErrorCode::DomainError);
}

TEST(Script, FuzzedInputOnlyRaisesLibraryErrors) {
  std::mt19937_64 rng(21);
  const std::string alphabet = "0123456789_,.()'!limcoabd \n#x";
  std::string base = read_file(support::corpus("setmorphism.catc"));
  for (int t = 0; t < 3000; ++t) {
    std::string s;
    if (t % 2) {
      s = base;
      for (int k = 0; k < 3; ++k) s[rng() % s.size()] = alphabet[rng() % alphabet.size()];
    } else {
      std::size_t n = rng() % 40;
      for (std::size_t k = 0; k < n; ++k) s += alphabet[rng() % alphabet.size()];
    }
    try {
      parse_script(s);
    } catch (const Error&) {
    } catch (const std::exception& e) {
      ADD_FAILURE() << "non-library exception on input:\n" << s << "\n" << e.what();
    }
  }
}

TEST(Script, DiagramLiteralsAreRecognized) {
  EXPECT_TRUE(is_diagram_literal(read_file(support::corpus("f223.catc"))));
  EXPECT_FALSE(is_diagram_literal(read_file(support::corpus("kvect1.catc"))));
  auto d = parse_vectq_diagram(read_file(support::corpus("f223.catc")));
  EXPECT_EQ(d.edge_count(), 1u);
  BoolLattice cat(3);
  auto b = parse_bool_diagram(read_file(support::corpus("majority3_expect.catc")), cat);
  EXPECT_EQ(b.obj(*b.graph.vertices().begin()).count(), 4u);
}

TEST(Slp, ParsesAndEvaluates) {
  Circuit c = parse_slp(read_file(support::corpus("xsq_yz.slp")));
  EXPECT_EQ(c.size(), 6u);
  EXPECT_EQ(c.input_names(), (std::vector<std::string>{"x", "y", "z"}));
  auto v = evaluate(c, {{"x", 3}, {"y", 2}, {"z", -4}});
  EXPECT_EQ(v[c.outputs[0]], 1);
  EXPECT_EQ(parse_slp(print_circuit(c)).size(), c.size());
  EXPECT_TRUE(check_formula(c));  // x feeds g4 twice, which is still one consumer
}

TEST(Slp, ExpansionMatchesOracle) {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 100; ++t) {
    Circuit c = support::random_slp(rng, 3, 3 + rng() % 10);
    auto names = support::var_names(3);
    Vars vars = make_vars(names);
    SparsePoly got = expand(c, vars)[c.outputs[0]];
    auto want = support::expand_oracle(c, names);
    std::vector<Rational> x{random_rational(rng), random_rational(rng), random_rational(rng)};
    EXPECT_EQ(got.evaluate(x), oracle::meval(want, x));
    std::size_t nterms = 0;
    for (const auto& [m, k] : want) nterms += k != 0;
    EXPECT_EQ(got.terms().size(), nterms);
  }
}

TEST(Slp, StructuralErrors) {
  EXPECT_EQ(code_of([] { parse_slp("g1 = add g2 g2\ng2 = add g1 g1\noutput g2\n"); }), ErrorCode::CycleDetected);
  EXPECT_EQ(code_of([] { parse_slp("g1 = add g1 g1\noutput g1\n"); }), ErrorCode::CycleDetected);
  EXPECT_EQ(code_of([] { parse_slp("g1 = input x\ng2 = add g1 g3\ng3 = input y\noutput g2\n"); }),
            ErrorCode::UseBeforeDefinition);
  EXPECT_EQ(code_of([] { parse_slp("g1 = input x\ng2 = add g1 g9\noutput g2\n"); }), ErrorCode::UnknownIdentifier);
  EXPECT_EQ(code_of([] { parse_slp("g1 = input x\ng1 = input y\noutput g1\n"); }), ErrorCode::RedefinedIdentifier);
  EXPECT_EQ(code_of([] { parse_slp("g1 = frob x\noutput g1\n"); }), ErrorCode::ParseError);
}

TEST(Slp, FormulaCheckDetectsSharing) {
  EXPECT_FALSE(check_formula(parse_slp(read_file(support::corpus("shared.slp")))));
  std::mt19937_64 rng(23);
  for (int t = 0; t < 20; ++t) EXPECT_TRUE(check_formula(support::random_formula(rng, 3, 12)));
}

TEST(Mono, TruthTableMatchesOracle) {
  Circuit c = parse_mono(read_file(support::corpus("majority3.mono")));
  auto table = truth_table(c, 3);
  for (std::uint64_t p = 0; p < 8; ++p) EXPECT_EQ(table[p], __builtin_popcountll(p) >= 2);
  std::mt19937_64 rng(24);
  for (int t = 0; t < 30; ++t) {
    Circuit r = support::random_monotone(rng, 5, 8);
    auto og = support::to_oracle(r);
    auto tt = truth_table(r, 5);
    for (std::uint64_t p = 0; p < 32; ++p) EXPECT_EQ(tt[p], oracle::mono_eval(og, r.outputs[0], p));
  }
  EXPECT_EQ(mono_input_index("x7"), 7u);
  EXPECT_EQ(mono_input_index("y"), 0u);
  EXPECT_EQ(code_of([] { parse_mono("g1 = input x1\ng2 = add g1 g1\noutput g2\n"); }), ErrorCode::ParseError);
}
