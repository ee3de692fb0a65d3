#include "catc/compilers.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "catc/boolean.hpp"
#include "catc/engine.hpp"

namespace catc {

namespace {

std::set<VertexId> all_vertices(const ComputationBuilder& b) {
  std::set<VertexId> s;
  for (std::uint32_t v = 0; v < b.vertex_count(); ++v) s.insert(VertexId{v});
  return s;
}

Computation without_last_step(const Computation& c) {
  Computation out = c;
  if (!out.steps.empty()) out.steps.pop_back();
  return out;
}

void fill_ratio(CompileReport& r) {
  r.boundMultiplier = r.inputSize ? Rational(static_cast<long>(r.outputCost), static_cast<long>(r.inputSize)) : Rational(0);
  r.boundMultiplier.canonicalize();
  r.boundSatisfied = Rational(static_cast<long>(r.outputCost)) <= r.bound * static_cast<long>(r.inputSize);
}

}  // namespace

SlpCompileResult compile_slp_to_limit(const Circuit& c, bool emitZeroSet) {
  if (c.outputs.empty()) fail(ErrorCode::DomainError, "circuit has no output");
  if (emitZeroSet && c.outputs.size() > 1) fail(ErrorCode::MultipleOutputsUnsupported, "zero set needs a single output");
  ComputationBuilder b(ComputationKind::Limit);
  SlpCompileResult res;

  std::map<std::string, VertexId> inputVertex;
  std::set<VertexId> coords;  // vertices carrying f_1, ..., f_k
  for (const auto& name : c.input_names()) {
    VertexId v = b.basic("const_endo(1)", VertexSpec::fresh(), VertexSpec::loop(), "in_" + name).first;
    inputVertex[name] = v;
    coords.insert(v);
    res.inputRoles[name] = "in_" + name + ".0";
  }
  std::optional<VertexId> apex;
  if (!coords.empty()) {
    b.lim(coords);
    apex = b.lim(all_vertices(b));
  }

  std::vector<VertexId> gateVertex(c.size());
  for (std::size_t g = 0; g < c.size(); ++g) {
    const Gate& gate = c.gates[g];
    VertexId out;
    switch (gate.op) {
      case GateOp::Input: gateVertex[g] = inputVertex.at(gate.name); continue;
      case GateOp::Const:
        out = b.basic("point(" + to_string(gate.value) + ")", VertexSpec::fresh(), VertexSpec::fresh()).second;
        break;
      case GateOp::Add:
      case GateOp::Mul: {
        VertexId q = b.basic("pi1", VertexSpec::fresh(), VertexSpec::at(gateVertex[gate.a])).first;
        b.basic("pi2", VertexSpec::at(q), VertexSpec::at(gateVertex[gate.b]));
        b.lim(all_vertices(b));
        out = b.basic(gate.op == GateOp::Add ? "add" : "mul", VertexSpec::at(q), VertexSpec::fresh()).second;
        break;
      }
      default: fail(ErrorCode::DomainError, "monotone gate in an arithmetic circuit");
    }
    gateVertex[g] = out;
    coords.insert(out);
    b.lim(coords);
    apex = b.lim(all_vertices(b));
  }
  if (emitZeroSet) {
    b.basic("point(0)", VertexSpec::fresh(), VertexSpec::at(gateVertex[c.outputs.front()]));
    apex = b.lim(all_vertices(b));
  }
  if (!apex) fail(ErrorCode::DomainError, "circuit produces no object");

  res.raw = b.take();
  res.apex = *apex;
  res.optimized = flatten(res.raw, res.apex);
  res.report.inputSize = c.size();
  res.report.rawCost = cost(res.raw);
  res.report.optimizedCost = cost(res.optimized);
  res.report.outputCost = res.report.rawCost;
  res.report.bound = kSlpKappa;
  fill_ratio(res.report);
  return res;
}

Circuit circuit_for_polys(const std::vector<SparsePoly>& polys) {
  Circuit c;
  std::map<std::uint32_t, std::size_t> input;
  std::map<Rational, std::size_t> consts;
  auto var = [&](std::uint32_t v, const Vars& names) {
    auto it = input.find(v);
    if (it != input.end()) return it->second;
    return input[v] = c.add_input((*names)[v]);
  };
  auto constant = [&](const Rational& q) {
    auto it = consts.find(q);
    if (it != consts.end()) return it->second;
    return consts[q] = c.add_const(q);
  };
  // Inputs first, in coordinate order, so the circuit reads like the presentation.
  std::set<std::uint32_t> used;
  for (const auto& p : polys)
    for (const auto& [m, coef] : p.terms())
      for (const auto& [v, e] : m) used.insert(v);
  for (auto v : used) var(v, polys.front().vars());

  for (const auto& p : polys) {
    std::optional<std::size_t> acc;
    if (p.is_zero()) {
      c.outputs.push_back(constant(0));
      continue;
    }
    for (const auto& [m, coef] : p.terms()) {
      std::optional<std::size_t> term;
      for (const auto& [v, e] : m)
        for (std::uint32_t k = 0; k < e; ++k) {
          std::size_t x = var(v, p.vars());
          term = term ? c.add_gate(GateOp::Mul, *term, x) : x;
        }
      if (!term)
        term = constant(coef);
      else if (coef != 1)
        term = c.add_gate(GateOp::Mul, constant(coef), *term);
      acc = acc ? c.add_gate(GateOp::Add, *acc, *term) : *term;
    }
    c.outputs.push_back(*acc);
  }
  return c;
}

PresentationCompileResult compile_limit_to_presentation(const Computation& comp, std::optional<VertexId> target) {
  if (comp.kind != ComputationKind::Limit) fail(ErrorCode::KindViolation, "presentations come from limit computations");
  if (!check_constructivity(comp).empty()) fail(ErrorCode::NotConstructive, "computation is not constructive");
  const std::uint64_t C = cost(comp);
  Computation flat = flatten(comp, target);
  AffVar cat;
  Presentation pres;
  Structure s = analyze(flat);
  if (s.apexStep.empty()) {
    auto r = replay(flat, cat);
    pres = affvar_limit_presentation(r.state.diagram).apex.pres();
  } else {
    auto r = replay(without_last_step(flat), cat);
    auto sub = full_subdiagram(r.state.diagram, flat.steps.back().over);
    pres = affvar_limit_presentation(sub).apex.pres();
  }
  PresentationCompileResult out;
  out.m1 = pres.m1;
  out.m2 = pres.equations.size();
  out.maxDegree = pres.max_degree();
  if (!pres.equations.empty()) out.circuit = circuit_for_polys(pres.equations);
  out.presentation = std::move(pres);
  out.report.inputSize = C;
  out.report.outputCost = out.circuit.size();
  out.report.rawCost = C;
  out.report.optimizedCost = cost(flat);
  out.report.bound = 4;
  fill_ratio(out.report);
  out.dimensionsWithinBound = out.maxDegree <= 2 && out.m1 <= 2 * C && out.m2 <= 2 * C;
  return out;
}

bool presentation_accepts(const PresentationCompileResult& pres, const SlpCompileResult& slp,
                          const std::map<std::string, Rational>& inputs) {
  std::map<std::size_t, Rational> known;
  for (const auto& [name, role] : slp.inputRoles) {
    auto idx = find_role(pres.presentation, role);
    if (!idx) fail(ErrorCode::UnknownIdentifier, "presentation has no coordinate for input " + name);
    auto it = inputs.find(name);
    if (it == inputs.end()) fail(ErrorCode::VariableOutOfRange, "no value for input " + name);
    known[*idx] = it->second;
  }
  return presentation_membership(pres.presentation, complete_point(pres.presentation, known));
}

FormulaCompileResult compile_formula_to_rmod(const Circuit& f, const Vars& ring) {
  if (f.outputs.size() != 1) fail(ErrorCode::MultipleOutputsUnsupported, "a formula has one output");
  if (!check_formula(f)) fail(ErrorCode::NotAFormula, "some gate feeds more than one consumer");
  ComputationBuilder b(ComputationKind::Colimit);

  // Returns (source, target) of the subdiagram realizing R -> R, multiplication by the gate's polynomial.
  std::function<std::pair<VertexId, VertexId>(std::size_t, VertexSpec)> build = [&](std::size_t g, VertexSpec src) {
    const Gate& gate = f.gates[g];
    switch (gate.op) {
      case GateOp::Input: {
        auto it = std::find(ring->begin(), ring->end(), gate.name);
        if (it == ring->end()) fail(ErrorCode::VariableOutOfRange, "input " + gate.name + " is not a ring variable");
        return b.basic("xmul(" + std::to_string(it - ring->begin() + 1) + ")", src, VertexSpec::fresh());
      }
      case GateOp::Const: return b.basic("cmul(" + to_string(gate.value) + ")", src, VertexSpec::fresh());
      case GateOp::Mul: {
        auto left = build(gate.a, src);
        auto right = build(gate.b, VertexSpec::at(left.second));
        return std::pair{left.first, right.second};
      }
      case GateOp::Add: {
        auto [r0, p] = b.basic("diag", src, VertexSpec::fresh());
        VertexId ts = b.basic("inj1", VertexSpec::fresh(), VertexSpec::at(p)).first;
        VertexId bs = b.basic("inj2", VertexSpec::fresh(), VertexSpec::at(p)).first;
        VertexId te = build(gate.a, VertexSpec::at(ts)).second;
        VertexId be = build(gate.b, VertexSpec::at(bs)).second;
        VertexId q = b.basic("inj1", VertexSpec::at(te), VertexSpec::fresh()).second;
        b.basic("inj2", VertexSpec::at(be), VertexSpec::at(q));
        VertexId right = b.basic("add", VertexSpec::at(q), VertexSpec::fresh()).second;
        return std::pair{r0, right};
      }
      default: fail(ErrorCode::DomainError, "monotone gate in an arithmetic circuit");
    }
  };
  auto [s, t] = build(f.outputs.front(), VertexSpec::fresh());
  b.colim(all_vertices(b));
  FormulaCompileResult r;
  r.comp = b.take();
  r.source = s;
  r.sink = t;
  r.report.inputSize = f.size();
  r.report.rawCost = r.report.optimizedCost = r.report.outputCost = cost(r.comp);
  r.report.bound = kFormulaKappa;
  fill_ratio(r.report);
  return r;
}

SparsePoly extract_formula_poly(const FormulaCompileResult& r, const RMod& cat) {
  auto rep = replay(without_last_step(r.comp), cat);
  ExtractionOptions opt;
  opt.designated = r.source;
  auto polys = rmod_extract_cocone_polys(rep.state.diagram, cat, true, opt);
  return polys.at({r.source, 0});
}

Computation monotone_to_mixed(const Circuit& c, unsigned n) {
  if (c.outputs.empty()) fail(ErrorCode::DomainError, "circuit has no output");
  ComputationBuilder b(ComputationKind::Mixed);
  std::vector<VertexId> v(c.size());
  for (std::size_t g = 0; g < c.size(); ++g) {
    const Gate& gate = c.gates[g];
    switch (gate.op) {
      case GateOp::Input: {
        unsigned i = mono_input_index(gate.name);
        if (i == 0 || i > n) fail(ErrorCode::VariableOutOfRange, "input " + gate.name + " outside x1..x" + std::to_string(n));
        v[g] = b.basic("z(" + std::to_string(i) + ")", VertexSpec::fresh(), VertexSpec::loop()).first;
        break;
      }
      case GateOp::And: v[g] = b.lim({v[gate.a], v[gate.b]}); break;
      case GateOp::Or: v[g] = b.colim({v[gate.a], v[gate.b]}); break;
      default: fail(ErrorCode::DomainError, "arithmetic gate in a monotone circuit");
    }
  }
  // The designated output must be the last vertex created.
  if (v[c.outputs.front()].value + 1 != b.vertex_count()) b.lim({v[c.outputs.front()]});
  return b.take();
}

Circuit mixed_to_monotone(const Computation& comp, unsigned n) {
  Structure s = analyze(comp);
  if (comp.steps.empty()) fail(ErrorCode::DomainError, "empty computation");
  Circuit c;
  std::map<VertexId, std::size_t> gate;
  VertexId last{};
  for (std::size_t k = 0; k < comp.steps.size(); ++k) {
    const Step& st = comp.steps[k];
    const StepLayout& L = s.steps[k];
    if (st.kind == StepKind::Basic) {
      unsigned i = 0;
      if (st.morph.size() > 3 && st.morph.rfind("z(", 0) == 0 && st.morph.back() == ')')
        i = mono_input_index("x" + st.morph.substr(2, st.morph.size() - 3));
      if (i == 0 || i > n) fail(ErrorCode::VariableOutOfRange, "basic " + st.morph + " is not z(1)..z(" + std::to_string(n) + ")");
      if (L.srcCreated || L.tgtCreated) {
        std::size_t g = c.add_input("x" + std::to_string(i));
        if (L.srcCreated) gate[L.src] = g;
        if (L.tgtCreated) gate[L.tgt] = g;
      }
      last = L.tgtCreated || !L.srcCreated ? L.tgt : L.src;
    } else {
      GateOp op = st.kind == StepKind::Lim ? GateOp::And : GateOp::Or;
      auto it = st.over.begin();
      std::size_t acc = gate.at(*it);
      for (++it; it != st.over.end(); ++it) acc = c.add_gate(op, acc, gate.at(*it));
      gate[L.apex] = acc;
      last = L.apex;
    }
  }
  c.outputs.push_back(gate.at(last));
  return c;
}

}  // namespace catc
