#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "catc/affvar.hpp"
#include "catc/boolean.hpp"
#include "catc/bounds.hpp"
#include "catc/circuit.hpp"
#include "catc/compilers.hpp"
#include "catc/embedding.hpp"
#include "catc/engine.hpp"
#include "catc/finset.hpp"
#include "catc/rmod.hpp"
#include "catc/sampling.hpp"
#include "catc/script.hpp"
#include "catc/vectq.hpp"

using namespace catc;
using nlohmann::json;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitSemantic = 3;
constexpr int kExitBudget = 4;

int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::ParseError:
    case ErrorCode::UnknownIdentifier:
    case ErrorCode::RedefinedIdentifier:
    case ErrorCode::UseBeforeDefinition:
    case ErrorCode::CycleDetected:
    case ErrorCode::UnknownMorphism:
    case ErrorCode::UnknownBasicMorphism:
      return kExitParse;
    case ErrorCode::SearchBudgetExceeded:
    case ErrorCode::DegreeBudgetExceeded:
      return kExitBudget;
    default:
      return kExitSemantic;
  }
}

void emit(const json& j, const std::string& jsonPath) {
  std::string text = j.dump(2);
  std::cout << text << '\n';
  if (!jsonPath.empty()) {
    std::ofstream out(jsonPath, std::ios::binary);
    if (!out) fail(ErrorCode::DomainError, "cannot write " + jsonPath);
    out << text << '\n';
  }
}

void write_side_json(const json& j, const std::string& jsonPath) {
  if (jsonPath.empty()) return;
  std::ofstream out(jsonPath, std::ios::binary);
  if (!out) fail(ErrorCode::DomainError, "cannot write " + jsonPath);
  out << j.dump(2) << '\n';
}

json report_json(const CompileReport& r) {
  return {{"inputSize", r.inputSize},
          {"outputCost", r.outputCost},
          {"boundMultiplier", to_string(r.boundMultiplier)},
          {"bound", to_string(r.bound)},
          {"boundSatisfied", r.boundSatisfied},
          {"rawCost", r.rawCost},
          {"optimizedCost", r.optimizedCost}};
}

json violations_json(const Computation& c, const std::vector<Violation>& vs) {
  Structure s = analyze(c);
  json arr = json::array();
  for (const auto& v : vs) {
    json reused = json::array(), missing = json::array();
    for (auto i : v.reused) reused.push_back(c.steps[i].id);
    for (auto m : v.missing) missing.push_back(s.names.at(m));
    arr.push_back({{"step", c.steps[v.step].id}, {"reused", reused}, {"missing", missing}});
  }
  return arr;
}

// Every basic morphism name must resolve in the chosen category before replay starts.
template <class C>
void link_morphisms(const Computation& c, const C& cat) {
  for (std::size_t k = 0; k < c.steps.size(); ++k) {
    if (c.steps[k].kind != StepKind::Basic) continue;
    try {
      (void)cat.basic(c.steps[k].morph);
    } catch (const Error& e) {
      throw Error(e.code(), "step " + std::to_string(k + 1) + " '" + c.steps[k].id + "': " + e.detail());
    }
  }
}

Diagram<FinSet> diagram_literal(std::string_view text, const FinSet&) { return parse_finset_diagram(text); }
Diagram<VectQ> diagram_literal(std::string_view text, const VectQ&) { return parse_vectq_diagram(text); }
Diagram<BoolLattice> diagram_literal(std::string_view text, const BoolLattice& cat) {
  return parse_bool_diagram(text, cat);
}
template <class C>
Diagram<C> diagram_literal(std::string_view, const C& cat) {
  fail(ErrorCode::CapabilityMissing, "no diagram literal format for " + cat.name());
}

template <class C>
Diagram<C> load_expected(const std::string& path, const C& cat) {
  std::string text = read_file(path);
  if (is_diagram_literal(text)) return diagram_literal(text, cat);
  Computation c = parse_script(text);
  link_morphisms(c, cat);
  return replay(c, cat).state.diagram;
}

template <class C>
int run_in(const Computation& comp, const C& cat, const std::string& expectPath, const std::string& jsonPath) {
  link_morphisms(comp, cat);
  auto r = replay(comp, cat);
  json j;
  j["category"] = cat.name();
  j["computationKind"] = kind_name(comp.kind);
  j["stepCount"] = comp.steps.size();
  j["cost"] = cost(comp);
  j["constructivityViolations"] = violations_json(comp, check_constructivity(comp));
  json objs = json::object();
  for (auto v : r.state.diagram.graph.vertices()) objs[r.state.diagram.name(v)] = cat.summary(r.state.diagram.obj(v));
  j["finalObjects"] = objs;
  j["vertices"] = r.state.diagram.vertex_count();
  j["edges"] = r.state.diagram.edge_count();
  j["trace"] = json::parse(trace_to_json(r.trace));
  int status = 0;
  if (!expectPath.empty()) {
    Diagram<C> target = load_expected(expectPath, cat);
    auto emb = find_subdiagram_embedding(target, r.state.diagram, cat);
    json e;
    e["found"] = emb.has_value();
    if (emb) {
      e["verified"] = verify_embedding(*emb, target, r.state.diagram, cat);
      json vm = json::object();
      for (const auto& [t, h] : emb->vertexMap) vm[target.name(t)] = r.state.diagram.name(h);
      e["vertexMap"] = vm;
      if (!e["verified"].get<bool>()) status = kExitSemantic;
    } else {
      status = kExitSemantic;
    }
    j["expect"] = e;
  }
  emit(j, jsonPath);
  return status;
}

Vars split_vars(const std::string& list) {
  VarList names;
  std::stringstream ss(list);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) names.push_back(item);
  if (names.empty()) fail(ErrorCode::DomainError, "empty variable list");
  return make_vars(names);
}

int dispatch_run(const Computation& comp, const std::string& category, const std::string& expectPath,
                 const std::string& jsonPath) {
  if (category == "finset") return run_in(comp, FinSet{}, expectPath, jsonPath);
  if (category == "vectq") return run_in(comp, VectQ{}, expectPath, jsonPath);
  if (category == "affvar") return run_in(comp, AffVar{}, expectPath, jsonPath);
  if (category.rfind("bool:", 0) == 0) {
    unsigned long n = 0;
    try {
      n = std::stoul(category.substr(5));
    } catch (const std::exception&) {
      fail(ErrorCode::DomainError, "bad lattice size in '" + category + "'");
    }
    return run_in(comp, BoolLattice(static_cast<unsigned>(n)), expectPath, jsonPath);
  }
  if (category.rfind("rmod:", 0) == 0) return run_in(comp, RMod(split_vars(category.substr(5))), expectPath, jsonPath);
  throw CLI::ValidationError("--cat", "unknown category '" + category + "'");
}

json presentation_json(const Presentation& p) {
  json eqs = json::array();
  for (const auto& e : p.equations) eqs.push_back(e.to_string());
  return {{"m1", p.m1}, {"coordRoles", p.coordRoles}, {"equations", eqs}};
}

Computation basics_only(const Computation& c) {
  Computation out = c;
  out.steps.clear();
  for (const auto& s : c.steps)
    if (s.kind == StepKind::Basic) out.steps.push_back(s);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Categorical computations: replay, check, compile"};
  app.require_subcommand(1);
  std::uint64_t seed = 0;
  app.add_option("--seed", seed, "Seed for sampled checks")->capture_default_str();

  std::string script, category = "finset", expectPath, jsonPath;
  auto* run = app.add_subcommand("run", "Replay a computation in a category");
  run->add_option("script", script)->required()->check(CLI::ExistingFile);
  run->add_option("--cat", category, "finset | vectq | bool:n | affvar | rmod:x1,x2,...")->capture_default_str();
  run->add_option("--expect", expectPath, "Expected diagram (literal or script)")->check(CLI::ExistingFile);
  run->add_option("--json", jsonPath, "Also write the report here");

  auto* check = app.add_subcommand("check", "Well-formedness and constructivity");
  check->add_option("script", script)->required()->check(CLI::ExistingFile);
  check->add_option("--json", jsonPath);

  auto* costCmd = app.add_subcommand("cost", "Print the cost of a computation");
  costCmd->add_option("script", script)->required()->check(CLI::ExistingFile);

  auto* compile = app.add_subcommand("compile", "Translate between circuits and computations");
  compile->require_subcommand(1);
  std::string input, target;
  bool zeroSet = false, optimized = false;
  unsigned n = 0, samples = 20;
  auto* slp2cat = compile->add_subcommand("slp2cat", "Straight-line program to limit computation");
  slp2cat->add_option("input", input)->required()->check(CLI::ExistingFile);
  slp2cat->add_flag("--zero-set", zeroSet, "Append the zero-set pullback");
  slp2cat->add_flag("--optimized", optimized, "Print the flattened computation");
  slp2cat->add_option("--samples", samples, "Seeded membership checks with --zero-set")->capture_default_str();
  slp2cat->add_option("--json", jsonPath, "Write the compile report here");
  auto* cat2circ = compile->add_subcommand("cat2circ", "Limit computation to presentation and circuit");
  cat2circ->add_option("input", input)->required()->check(CLI::ExistingFile);
  cat2circ->add_option("--target", target, "Apex to present (default: last)");
  cat2circ->add_option("--json", jsonPath, "Write presentation and report here");
  auto* formula2rmod = compile->add_subcommand("formula2rmod", "Formula to R-Mod colimit computation");
  formula2rmod->add_option("input", input)->required()->check(CLI::ExistingFile);
  formula2rmod->add_option("--json", jsonPath, "Write the compile report here");
  auto* mono2mixed = compile->add_subcommand("mono2mixed", "Monotone circuit to mixed B_n computation");
  mono2mixed->add_option("input", input)->required()->check(CLI::ExistingFile);
  mono2mixed->add_option("-n", n, "Number of variables")->required()->check(CLI::Range(1u, BoolLattice::kMaxN));
  auto* mixed2mono = compile->add_subcommand("mixed2mono", "Mixed B_n computation to monotone circuit");
  mixed2mono->add_option("input", input)->required()->check(CLI::ExistingFile);
  mixed2mono->add_option("-n", n, "Number of variables")->required()->check(CLI::Range(1u, BoolLattice::kMaxN));

  std::string vars, designated;
  auto* extract = app.add_subcommand("extract", "Cocone polynomials of an R-Mod computation");
  extract->add_option("input", input)->required()->check(CLI::ExistingFile);
  extract->add_option("--vars", vars, "Ring variables, comma separated")->required();
  extract->add_option("--designated", designated, "Vertex whose slot fixes the sign");
  extract->add_option("--json", jsonPath);

  unsigned mmax = 10;
  std::string format = "json";
  auto* bounds = app.add_subcommand("bounds", "Cyclic polytope facet growth table");
  bounds->add_option("--mmax", mmax)->capture_default_str()->check(CLI::Range(1u, 30u));
  bounds->add_option("--format", format)->capture_default_str()->check(CLI::IsMember({"json", "csv"}));
  bounds->add_option("--json", jsonPath);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*run) return dispatch_run(load_script(script), category, expectPath, jsonPath);

    if (*check) {
      Computation c = load_script(script);
      auto vs = check_constructivity(c);
      json j{{"computationKind", kind_name(c.kind)},
             {"wellFormed", true},
             {"constructive", vs.empty()},
             {"violations", violations_json(c, vs)}};
      emit(j, jsonPath);
      return vs.empty() ? 0 : kExitSemantic;
    }

    if (*costCmd) {
      std::cout << cost(load_script(script)) << '\n';
      return 0;
    }

    if (*slp2cat) {
      Circuit c = parse_slp(read_file(input));
      auto r = compile_slp_to_limit(c, zeroSet);
      std::cout << print_script(optimized ? r.optimized : r.raw);
      json j{{"kappa", kSlpKappa}, {"report", report_json(r.report)}, {"inputRoles", r.inputRoles}};
      if (zeroSet && samples > 0) {
        auto pres = compile_limit_to_presentation(r.raw, r.apex);
        std::mt19937_64 rng(seed);
        unsigned agree = 0;
        for (unsigned k = 0; k < samples; ++k) {
          std::map<std::string, Rational> x;
          for (const auto& name : c.input_names()) x[name] = random_rational(rng);
          bool zero = evaluate(c, x)[c.outputs.front()] == 0;
          if (presentation_accepts(pres, r, x) == zero) ++agree;
        }
        j["membershipSamples"] = samples;
        j["membershipAgreements"] = agree;
        write_side_json(j, jsonPath);
        return agree == samples ? 0 : kExitSemantic;
      }
      write_side_json(j, jsonPath);
      return 0;
    }

    if (*cat2circ) {
      Computation comp = load_script(input);
      std::optional<VertexId> apex;
      if (!target.empty()) apex = vertex_named(analyze(comp), target);
      auto r = compile_limit_to_presentation(comp, apex);
      std::cout << (r.circuit.size() ? print_circuit(r.circuit) : std::string("# no equations\n"));
      json j{{"presentation", presentation_json(r.presentation)},
             {"m1", r.m1},
             {"m2", r.m2},
             {"maxDegree", r.maxDegree},
             {"dimensionsWithinBound", r.dimensionsWithinBound},
             {"report", report_json(r.report)}};
      write_side_json(j, jsonPath);
      return r.dimensionsWithinBound && r.report.boundSatisfied ? 0 : kExitSemantic;
    }

    if (*formula2rmod) {
      Circuit f = parse_slp(read_file(input));
      auto names = f.input_names();
      if (names.empty()) names.push_back("x1");
      auto r = compile_formula_to_rmod(f, make_vars(names));
      std::cout << print_script(r.comp);
      json j{{"kappa", kFormulaKappa}, {"report", report_json(r.report)}, {"ring", names},
             {"source", analyze(r.comp).names.at(r.source)}};
      write_side_json(j, jsonPath);
      return 0;
    }

    if (*mono2mixed) {
      std::cout << print_script(monotone_to_mixed(parse_mono(read_file(input)), n));
      return 0;
    }

    if (*mixed2mono) {
      std::cout << print_circuit(mixed_to_monotone(load_script(input), n));
      return 0;
    }

    if (*extract) {
      Computation comp = basics_only(load_script(input));
      RMod cat(split_vars(vars));
      link_morphisms(comp, cat);
      auto r = replay(comp, cat);
      ExtractionOptions opt;
      if (!designated.empty()) opt.designated = vertex_named(r.structure, designated);
      auto polys = rmod_extract_cocone_polys(r.state.diagram, cat, true, opt);
      json slots = json::object();
      for (const auto& [slot, p] : polys)
        slots[r.state.diagram.name(slot.first) + "." + std::to_string(slot.second)] = p.to_string();
      emit(json{{"ring", *cat.ring()}, {"slots", slots}}, jsonPath);
      return 0;
    }

    if (*bounds) {
      auto rows = sl_growth_table(mmax);
      if (format == "csv") {
        std::cout << "m,preimageCostBound,projectedFacets,facetLowerBoundOnCost\n";
        for (const auto& r : rows)
          std::cout << r.m << ',' << r.preimageCostBound.get_str() << ',' << r.projectedFacets.get_str() << ','
                    << r.facetLowerBoundOnCost.get_str() << '\n';
        return 0;
      }
      json arr = json::array();
      for (const auto& r : rows)
        arr.push_back({{"m", r.m},
                       {"preimageCostBound", r.preimageCostBound.get_str()},
                       {"projectedFacets", r.projectedFacets.get_str()},
                       {"facetLowerBoundOnCost", r.facetLowerBoundOnCost.get_str()}});
      emit(json{{"rows", arr}}, jsonPath);
      return 0;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::logic_error& e) {
    std::cerr << "internal check failed: " << e.what() << '\n';
    return kExitSemantic;
  }
  return kExitUsage;
}
