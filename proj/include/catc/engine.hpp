#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "catc/category.hpp"
#include "catc/computation.hpp"

namespace catc {

template <class C>
struct ReplayState {
  Diagram<C> diagram;
  std::map<VertexId, std::pair<StepKind, std::set<VertexId>>> apexOrigin;
  std::size_t stepIndex = 0;
  std::uint64_t runningCost = 0;
};

struct TraceEntry {
  std::size_t index = 0;
  std::string stepId;
  StepKind kind = StepKind::Basic;
  std::optional<std::string> newVertex;
  std::string objectSummary;
  std::uint64_t runningCost = 0;
  std::size_t vertices = 0;
  std::size_t edges = 0;
};

template <class C>
struct ReplayResult {
  ReplayState<C> state;
  Structure structure;
  std::vector<TraceEntry> trace;
};

struct ReplayOptions {
  bool useReductions = false;  // force the product/equalizer (coproduct/coequalizer) route
  bool recheckCones = true;
};

// Limit as the equalizer of phi, psi : prod_v D(v) => prod_e D(t(e)).
template <class C>
Cone<C> limit_via_equalizer(const Diagram<C>& d, const C& cat) {
  if constexpr (HasProducts<C> && HasEqualizers<C> && HasCompose<C>) {
    auto verts = d.vertex_list();
    std::vector<typename C::Object> objs;
    std::map<VertexId, std::size_t> pos;
    for (std::size_t i = 0; i < verts.size(); ++i) {
      pos[verts[i]] = i;
      objs.push_back(d.obj(verts[i]));
    }
    auto P = cat.product(objs);
    Cone<C> cone{P.apex, {}};
    const auto& edges = d.graph.edges();
    if (edges.empty()) {
      for (std::size_t i = 0; i < verts.size(); ++i) cone.legs.emplace(verts[i], P.projections[i]);
      return cone;
    }
    std::vector<typename C::Object> tobjs;
    std::vector<typename C::Morphism> phi, psi;
    for (const auto& e : edges) {
      tobjs.push_back(d.obj(e.tgt));
      phi.push_back(P.projections[pos[e.tgt]]);
      psi.push_back(cat.compose(d.mor(e.id), P.projections[pos[e.src]]));
    }
    auto Q = cat.product(tobjs);
    auto eq = cat.equalizer(cat.tuple(P.apex, phi, Q), cat.tuple(P.apex, psi, Q));
    cone.apex = eq.apex;
    for (std::size_t i = 0; i < verts.size(); ++i)
      cone.legs.emplace(verts[i], cat.compose(P.projections[i], eq.inclusion));
    return cone;
  } else {
    fail(ErrorCode::CapabilityMissing, cat.name() + " lacks products or equalizers");
  }
}

// Colimit as the coequalizer of phi, psi : coprod_e D(s(e)) => coprod_v D(v).
template <class C>
Cone<C> colimit_via_coequalizer(const Diagram<C>& d, const C& cat) {
  if constexpr (HasCoproducts<C> && HasCoequalizers<C> && HasCompose<C>) {
    auto verts = d.vertex_list();
    std::vector<typename C::Object> objs;
    std::map<VertexId, std::size_t> pos;
    for (std::size_t i = 0; i < verts.size(); ++i) {
      pos[verts[i]] = i;
      objs.push_back(d.obj(verts[i]));
    }
    auto S = cat.coproduct(objs);
    Cone<C> cone{S.apex, {}};
    const auto& edges = d.graph.edges();
    if (edges.empty()) {
      for (std::size_t i = 0; i < verts.size(); ++i) cone.legs.emplace(verts[i], S.injections[i]);
      return cone;
    }
    std::vector<typename C::Object> sobjs;
    std::vector<typename C::Morphism> phi, psi;
    for (const auto& e : edges) {
      sobjs.push_back(d.obj(e.src));
      phi.push_back(cat.compose(S.injections[pos[e.tgt]], d.mor(e.id)));
      psi.push_back(S.injections[pos[e.src]]);
    }
    auto T = cat.coproduct(sobjs);
    auto q = cat.coequalizer(cat.cotuple(S.apex, phi, T), cat.cotuple(S.apex, psi, T));
    cone.apex = q.apex;
    for (std::size_t i = 0; i < verts.size(); ++i)
      cone.legs.emplace(verts[i], cat.compose(q.quotient, S.injections[i]));
    return cone;
  } else {
    fail(ErrorCode::CapabilityMissing, cat.name() + " lacks coproducts or coequalizers");
  }
}

template <class C>
Cone<C> compute_limit(const Diagram<C>& d, const C& cat, bool useReductions = false) {
  if constexpr (HasDirectLimit<C>) {
    if (!useReductions) return cat.limit(d);
  }
  return limit_via_equalizer(d, cat);
}

template <class C>
Cone<C> compute_colimit(const Diagram<C>& d, const C& cat, bool useReductions = false) {
  if constexpr (HasDirectColimit<C>) {
    if (!useReductions) return cat.colimit(d);
  }
  return colimit_via_coequalizer(d, cat);
}

// Every edge of d commutes with the legs.
template <class C>
bool cone_commutes(const Diagram<C>& d, const Cone<C>& cone, StepKind kind, const C& cat) {
  if constexpr (HasCompose<C>) {
    for (const auto& e : d.graph.edges()) {
      const auto& ls = cone.legs.at(e.src);
      const auto& lt = cone.legs.at(e.tgt);
      bool ok = kind == StepKind::Lim ? cat.equal(cat.compose(d.mor(e.id), ls), lt)
                                      : cat.equal(cat.compose(lt, d.mor(e.id)), ls);
      if (!ok) return false;
    }
    return true;
  } else {
    (void)d, (void)cone, (void)kind, (void)cat;
    return true;
  }
}

template <class C>
void apply_step(ReplayState<C>& st, const Step& step, const StepLayout& L, const C& cat, const Computation& comp,
                const Structure& s, const ReplayOptions& opt = {}) {
  auto& d = st.diagram;
  if (step.kind == StepKind::Basic) {
    auto m = cat.basic(step.morph);
    auto place = [&](VertexId v, bool created, const typename C::Object& want, const char* end) {
      if (created) {
        d.add_vertex(v, want, s.names.at(v));
      } else if (!cat.same_object(d.obj(v), want)) {
        fail(ErrorCode::ObjectMismatch, std::string(end) + " vertex " + d.name(v) + " holds " + cat.summary(d.obj(v)) +
                                            " but " + step.morph + " needs " + cat.summary(want));
      }
    };
    place(L.src, L.srcCreated, cat.dom(m), "source");
    place(L.tgt, L.tgtCreated, cat.codom(m), "target");
    d.add_edge({L.edge, L.src, L.tgt}, std::move(m));
    st.runningCost += comp.basic_cost(step.morph);
  } else {
    auto sub = full_subdiagram(d, step.over);
    Cone<C> cone = step.kind == StepKind::Lim ? compute_limit(sub, cat, opt.useReductions)
                                              : compute_colimit(sub, cat, opt.useReductions);
    if (opt.recheckCones && !cone_commutes(sub, cone, step.kind, cat))
      throw std::logic_error("cone legs do not commute at step " + step.id);
    d.add_vertex(L.apex, cone.apex, s.names.at(L.apex));
    for (const auto& [e, v] : L.cone) {
      if (step.kind == StepKind::Lim)
        d.add_edge({e, L.apex, v}, cone.legs.at(v));
      else
        d.add_edge({e, v, L.apex}, cone.legs.at(v));
    }
    st.apexOrigin[L.apex] = {step.kind, step.over};
    st.runningCost += 1;
  }
  ++st.stepIndex;
}

// Folds apply_step from the empty diagram; errors carry the failing step.
template <class C>
ReplayResult<C> replay(const Computation& c, const C& cat, const ReplayOptions& opt = {}) {
  ReplayResult<C> r;
  r.structure = analyze(c);
  for (std::size_t k = 0; k < c.steps.size(); ++k) {
    const Step& step = c.steps[k];
    const StepLayout& L = r.structure.steps[k];
    try {
      apply_step(r.state, step, L, cat, c, r.structure, opt);
    } catch (const Error& e) {
      throw Error(e.code(), "step " + std::to_string(k + 1) + " '" + step.id + "': " + e.detail());
    }
    TraceEntry t;
    t.index = k + 1;
    t.stepId = step.id;
    t.kind = step.kind;
    std::optional<VertexId> nv;
    if (step.kind != StepKind::Basic)
      nv = L.apex;
    else if (L.tgtCreated)
      nv = L.tgt;
    else if (L.srcCreated)
      nv = L.src;
    if (nv) {
      t.newVertex = r.state.diagram.name(*nv);
      t.objectSummary = cat.summary(r.state.diagram.obj(*nv));
    }
    t.runningCost = r.state.runningCost;
    t.vertices = r.state.diagram.vertex_count();
    t.edges = r.state.diagram.edge_count();
    r.trace.push_back(std::move(t));
  }
  return r;
}

// Vertex bound to a script identifier after replay.
inline VertexId vertex_named(const Structure& s, const std::string& name) {
  auto it = s.bindings.find(name);
  if (it == s.bindings.end()) fail(ErrorCode::UnknownIdentifier, "no vertex named '" + name + "'");
  return it->second;
}

// The edge a -> b, when exactly one exists.
template <class C>
const typename C::Morphism& edge_between(const Diagram<C>& d, VertexId a, VertexId b) {
  const typename C::Morphism* found = nullptr;
  for (const auto& e : d.graph.edges()) {
    if (e.src != a || e.tgt != b) continue;
    if (found) fail(ErrorCode::DomainError, "several edges between " + d.name(a) + " and " + d.name(b));
    found = &d.mor(e.id);
  }
  if (!found) fail(ErrorCode::UnknownMorphism, "no edge " + d.name(a) + " -> " + d.name(b));
  return *found;
}

}  // namespace catc

namespace catc {

// Trace as a JSON array: {index, kind, newVertex, objectSummary, runningCost}.
std::string trace_to_json(const std::vector<TraceEntry>& trace);

}  // namespace catc
