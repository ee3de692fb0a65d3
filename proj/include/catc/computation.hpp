#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "catc/diagram.hpp"

namespace catc {

enum class ComputationKind { Limit, Colimit, Mixed };
enum class StepKind { Basic, Lim, Colim };

const char* kind_name(ComputationKind k);
const char* step_kind_name(StepKind k);

// Vertex ids are creation indices, so an Existing reference is only valid once that vertex exists.
struct VertexSpec {
  enum class Kind { Existing, Fresh, SourceLoop };
  Kind kind = Kind::Fresh;
  VertexId id{};

  static VertexSpec at(VertexId v) { return {Kind::Existing, v}; }
  static VertexSpec fresh() { return {Kind::Fresh, {}}; }
  static VertexSpec loop() { return {Kind::SourceLoop, {}}; }  // target only: reuse the source vertex
  bool operator==(const VertexSpec&) const = default;
};

struct Step {
  StepKind kind = StepKind::Basic;
  std::string id;
  VertexSpec src;
  std::string morph;
  VertexSpec tgt;
  std::set<VertexId> over;
  bool operator==(const Step&) const = default;
};

struct Computation {
  ComputationKind kind = ComputationKind::Limit;
  std::vector<Step> steps;
  std::map<std::string, std::uint64_t> costFn;  // missing names cost 1

  std::uint64_t basic_cost(const std::string& morph) const;
  bool operator==(const Computation&) const = default;
};

// Category-independent shape of a replay: which vertices and edges each step creates.
struct StepLayout {
  VertexId src{}, tgt{};  // Basic endpoints
  bool srcCreated = false, tgtCreated = false;
  EdgeId edge{};
  VertexId apex{};  // Lim / Colim
  std::vector<std::pair<EdgeId, VertexId>> cone;
};

struct Structure {
  std::vector<StepLayout> steps;
  std::uint32_t vertexCount = 0;
  std::uint32_t edgeCount = 0;
  std::set<VertexId> d0;
  std::map<VertexId, std::size_t> apexStep;
  std::map<VertexId, std::string> names;
  std::map<std::string, VertexId> bindings;  // script identifiers `i`, `i'`
  DirectedGraph graph;
};

// Validates references, kind legality and basic placement; throws on the first problem.
Structure analyze(const Computation& c);

struct Violation {
  std::size_t step = 0;              // index of the step whose subdiagram reuses apexes
  std::vector<std::size_t> reused;   // indices of the offending earlier steps
  std::set<VertexId> missing;        // union of J_i \ J_j over the offenders
};

// Mixed computations are exempt and always yield an empty list.
std::vector<Violation> check_constructivity(const Computation& c);

std::uint64_t cost(const Computation& c);

// All basics followed by one (co)limit over J ∩ D_0 of the designated apex (default: last apex).
Computation flatten(const Computation& c, std::optional<VertexId> apex = std::nullopt);

// Apex created by the flattened computation.
VertexId flattened_apex(const Computation& flat);

class ComputationBuilder {
 public:
  explicit ComputationBuilder(ComputationKind k) { c_.kind = k; }

  std::pair<VertexId, VertexId> basic(const std::string& morph, VertexSpec src, VertexSpec tgt, std::string id = {});
  VertexId lim(std::set<VertexId> over, std::string id = {});
  VertexId colim(std::set<VertexId> over, std::string id = {});
  void set_cost(const std::string& morph, std::uint64_t k) { c_.costFn[morph] = k; }

  std::uint32_t vertex_count() const { return next_; }
  const Computation& computation() const { return c_; }
  Computation take() { return std::move(c_); }

 private:
  std::string next_id(std::string id) const;
  VertexId apex_step(StepKind k, std::set<VertexId> over, std::string id);
  Computation c_;
  std::uint32_t next_ = 0;
};

}  // namespace catc
