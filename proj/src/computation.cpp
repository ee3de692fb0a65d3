#include "catc/computation.hpp"

#include <algorithm>
#include <cctype>

namespace catc {

const char* kind_name(ComputationKind k) {
  switch (k) {
    case ComputationKind::Limit: return "limit";
    case ComputationKind::Colimit: return "colimit";
    case ComputationKind::Mixed: return "mixed";
  }
  return "?";
}

const char* step_kind_name(StepKind k) {
  switch (k) {
    case StepKind::Basic: return "basic";
    case StepKind::Lim: return "lim";
    case StepKind::Colim: return "colim";
  }
  return "?";
}

std::uint64_t Computation::basic_cost(const std::string& morph) const {
  auto it = costFn.find(morph);
  return it == costFn.end() ? 1 : it->second;
}

namespace {

bool valid_step_id(const std::string& id) {
  if (id.empty()) return false;
  return std::all_of(id.begin(), id.end(), [](unsigned char ch) { return std::isalnum(ch) || ch == '_'; });
}

}  // namespace

Structure analyze(const Computation& c) {
  Structure s;
  std::set<std::string> ids;
  for (std::size_t k = 0; k < c.steps.size(); ++k) {
    const Step& st = c.steps[k];
    const std::string where = "step " + std::to_string(k + 1) + " '" + st.id + "': ";
    if (!valid_step_id(st.id)) fail(ErrorCode::DomainError, where + "step identifiers are alphanumeric or '_'");
    if (!ids.insert(st.id).second) fail(ErrorCode::RedefinedIdentifier, where + "identifier already used");

    auto create = [&](const std::string& name) {
      VertexId v{s.vertexCount++};
      s.graph.add_vertex(v);
      s.names[v] = name;
      return v;
    };
    auto existing = [&](VertexId v) {
      if (v.value >= s.vertexCount) fail(ErrorCode::UnknownVertex, where + "vertex " + std::to_string(v.value) + " does not exist yet");
      return v;
    };

    StepLayout L;
    if (st.kind == StepKind::Basic) {
      switch (st.src.kind) {
        case VertexSpec::Kind::Existing: L.src = existing(st.src.id); break;
        case VertexSpec::Kind::Fresh: L.src = create(st.id); L.srcCreated = true; break;
        case VertexSpec::Kind::SourceLoop: fail(ErrorCode::DomainError, where + "a source cannot loop onto itself");
      }
      switch (st.tgt.kind) {
        case VertexSpec::Kind::Existing: L.tgt = existing(st.tgt.id); break;
        case VertexSpec::Kind::Fresh: L.tgt = create(st.id + "'"); L.tgtCreated = true; break;
        case VertexSpec::Kind::SourceLoop: L.tgt = L.src; break;
      }
      for (VertexId v : {L.src, L.tgt})
        if (s.apexStep.count(v))
          fail(ErrorCode::StaleBasicAttachment, where + "basic morphism attached to (co)limit vertex " + s.names[v]);
      if (L.srcCreated) s.d0.insert(L.src);
      if (L.tgtCreated) s.d0.insert(L.tgt);
      L.edge = EdgeId{s.edgeCount++};
      s.graph.add_edge({L.edge, L.src, L.tgt});
      s.bindings[st.id] = L.src;
      s.bindings[st.id + "'"] = L.tgt;
    } else {
      if (st.kind == StepKind::Colim && c.kind == ComputationKind::Limit)
        fail(ErrorCode::KindViolation, where + "colimit step in a limit computation");
      if (st.kind == StepKind::Lim && c.kind == ComputationKind::Colimit)
        fail(ErrorCode::KindViolation, where + "limit step in a colimit computation");
      if (st.over.empty()) fail(ErrorCode::EmptySubdiagram, where + "empty subdiagram");
      for (VertexId v : st.over) existing(v);
      L.apex = create(st.id);
      s.apexStep[L.apex] = k;
      for (VertexId v : st.over) {
        EdgeId e{s.edgeCount++};
        if (st.kind == StepKind::Lim)
          s.graph.add_edge({e, L.apex, v});
        else
          s.graph.add_edge({e, v, L.apex});
        L.cone.emplace_back(e, v);
      }
      s.bindings[st.id] = L.apex;
    }
    s.steps.push_back(std::move(L));
  }
  return s;
}

std::vector<Violation> check_constructivity(const Computation& c) {
  std::vector<Violation> out;
  if (c.kind == ComputationKind::Mixed) return out;
  Structure s = analyze(c);
  for (std::size_t j = 0; j < c.steps.size(); ++j) {
    const Step& sj = c.steps[j];
    if (sj.kind == StepKind::Basic) continue;
    Violation v{j, {}, {}};
    for (VertexId w : sj.over) {
      auto it = s.apexStep.find(w);
      if (it == s.apexStep.end()) continue;
      const auto& ji = c.steps[it->second].over;
      bool contained = std::includes(sj.over.begin(), sj.over.end(), ji.begin(), ji.end());
      if (contained) continue;
      v.reused.push_back(it->second);
      for (VertexId x : ji)
        if (!sj.over.count(x)) v.missing.insert(x);
    }
    if (!v.reused.empty()) out.push_back(std::move(v));
  }
  return out;
}

std::uint64_t cost(const Computation& c) {
  std::uint64_t total = 0;
  for (const auto& st : c.steps) total += st.kind == StepKind::Basic ? c.basic_cost(st.morph) : 1;
  return total;
}

Computation flatten(const Computation& c, std::optional<VertexId> apex) {
  if (c.kind == ComputationKind::Mixed) fail(ErrorCode::KindViolation, "flatten needs a limit or colimit computation");
  if (!check_constructivity(c).empty()) fail(ErrorCode::NotConstructive, "computation is not constructive");
  Structure s = analyze(c);
  if (s.apexStep.empty()) return c;
  VertexId target = apex ? *apex : s.steps[std::prev(s.apexStep.end())->second].apex;
  auto it = s.apexStep.find(target);
  if (it == s.apexStep.end()) fail(ErrorCode::UnknownVertex, "vertex " + std::to_string(target.value) + " is not a (co)limit apex");
  const Step& final = c.steps[it->second];

  std::map<VertexId, VertexId> remap;
  std::uint32_t next = 0;
  Computation out;
  out.kind = c.kind;
  out.costFn = c.costFn;
  for (std::size_t k = 0; k < c.steps.size(); ++k) {
    const Step& st = c.steps[k];
    if (st.kind != StepKind::Basic) continue;
    const StepLayout& L = s.steps[k];
    if (L.srcCreated) remap[L.src] = VertexId{next++};
    if (L.tgtCreated) remap[L.tgt] = VertexId{next++};
    Step copy = st;
    if (copy.src.kind == VertexSpec::Kind::Existing) copy.src.id = remap.at(copy.src.id);
    if (copy.tgt.kind == VertexSpec::Kind::Existing) copy.tgt.id = remap.at(copy.tgt.id);
    out.steps.push_back(std::move(copy));
  }
  Step last;
  last.kind = final.kind;
  last.id = final.id;
  for (VertexId v : final.over)
    if (s.d0.count(v)) last.over.insert(remap.at(v));
  out.steps.push_back(std::move(last));
  return out;
}

VertexId flattened_apex(const Computation& flat) {
  Structure s = analyze(flat);
  if (s.apexStep.empty()) fail(ErrorCode::UnknownVertex, "computation has no (co)limit step");
  return s.steps.back().apex;
}

std::string ComputationBuilder::next_id(std::string id) const {
  return id.empty() ? std::to_string(c_.steps.size() + 1) : id;
}

std::pair<VertexId, VertexId> ComputationBuilder::basic(const std::string& morph, VertexSpec src, VertexSpec tgt,
                                                        std::string id) {
  Step st;
  st.kind = StepKind::Basic;
  st.id = next_id(std::move(id));
  st.src = src;
  st.morph = morph;
  st.tgt = tgt;
  VertexId s = src.kind == VertexSpec::Kind::Fresh ? VertexId{next_++} : src.id;
  VertexId t = tgt.kind == VertexSpec::Kind::Fresh ? VertexId{next_++} : tgt.kind == VertexSpec::Kind::SourceLoop ? s : tgt.id;
  c_.steps.push_back(std::move(st));
  return {s, t};
}

VertexId ComputationBuilder::apex_step(StepKind k, std::set<VertexId> over, std::string id) {
  Step st;
  st.kind = k;
  st.id = next_id(std::move(id));
  st.over = std::move(over);
  c_.steps.push_back(std::move(st));
  return VertexId{next_++};
}

VertexId ComputationBuilder::lim(std::set<VertexId> over, std::string id) {
  return apex_step(StepKind::Lim, std::move(over), std::move(id));
}

VertexId ComputationBuilder::colim(std::set<VertexId> over, std::string id) {
  return apex_step(StepKind::Colim, std::move(over), std::move(id));
}

}  // namespace catc

#include "json.hpp"

#include "catc/engine.hpp"

namespace catc {

std::string trace_to_json(const std::vector<TraceEntry>& trace) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& t : trace) {
    nlohmann::json j;
    j["index"] = t.index;
    j["step"] = t.stepId;
    j["kind"] = step_kind_name(t.kind);
    j["newVertex"] = t.newVertex ? nlohmann::json(*t.newVertex) : nlohmann::json(nullptr);
    j["objectSummary"] = t.objectSummary;
    j["runningCost"] = t.runningCost;
    j["vertices"] = t.vertices;
    j["edges"] = t.edges;
    arr.push_back(std::move(j));
  }
  return arr.dump(2);
}

}  // namespace catc
