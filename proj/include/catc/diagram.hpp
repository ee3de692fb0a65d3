#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "catc/error.hpp"

namespace catc {

struct VertexId {
  std::uint32_t value = 0;
  auto operator<=>(const VertexId&) const = default;
};

struct EdgeId {
  std::uint32_t value = 0;
  auto operator<=>(const EdgeId&) const = default;
};

struct Edge {
  EdgeId id;
  VertexId src;
  VertexId tgt;
  bool operator==(const Edge&) const = default;
};

class DirectedGraph {
 public:
  const std::set<VertexId>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_vertex(VertexId v) const { return vertices_.count(v) > 0; }
  void add_vertex(VertexId v) {
    if (!vertices_.insert(v).second) fail(ErrorCode::DomainError, "duplicate vertex id " + std::to_string(v.value));
  }
  void add_edge(Edge e) {
    if (!has_vertex(e.src) || !has_vertex(e.tgt))
      fail(ErrorCode::UnknownVertex, "edge endpoint missing for edge " + std::to_string(e.id.value));
    for (const auto& x : edges_)
      if (x.id == e.id) fail(ErrorCode::DomainError, "duplicate edge id " + std::to_string(e.id.value));
    edges_.push_back(e);
  }
  const Edge& edge(EdgeId id) const {
    for (const auto& e : edges_)
      if (e.id == id) return e;
    fail(ErrorCode::UnknownMorphism, "no edge " + std::to_string(id.value));
  }
  bool operator==(const DirectedGraph&) const = default;

 private:
  std::set<VertexId> vertices_;
  std::vector<Edge> edges_;
};

// A graph labeled by objects and morphisms of category C.
template <class C>
struct Diagram {
  using Object = typename C::Object;
  using Morphism = typename C::Morphism;

  DirectedGraph graph;
  std::map<VertexId, Object> objOf;
  std::map<EdgeId, Morphism> morOf;
  std::map<VertexId, std::string> names;

  const Object& obj(VertexId v) const {
    auto it = objOf.find(v);
    if (it == objOf.end()) fail(ErrorCode::UnknownVertex, "vertex " + std::to_string(v.value));
    return it->second;
  }
  const Morphism& mor(EdgeId e) const {
    auto it = morOf.find(e);
    if (it == morOf.end()) fail(ErrorCode::UnknownMorphism, "edge " + std::to_string(e.value));
    return it->second;
  }
  std::string name(VertexId v) const {
    auto it = names.find(v);
    return it == names.end() ? "v" + std::to_string(v.value) : it->second;
  }
  std::vector<VertexId> vertex_list() const { return {graph.vertices().begin(), graph.vertices().end()}; }

  void add_vertex(VertexId v, Object o, std::string name = {}) {
    graph.add_vertex(v);
    objOf.emplace(v, std::move(o));
    if (!name.empty()) names[v] = std::move(name);
  }
  void add_edge(Edge e, Morphism m) {
    graph.add_edge(e);
    morOf.emplace(e.id, std::move(m));
  }
  std::size_t vertex_count() const { return graph.vertices().size(); }
  std::size_t edge_count() const { return graph.edges().size(); }
};

template <class C>
Diagram<C> full_subdiagram(const Diagram<C>& d, const std::set<VertexId>& vs) {
  Diagram<C> out;
  for (auto v : vs) {
    if (!d.graph.has_vertex(v)) fail(ErrorCode::UnknownVertex, "vertex " + std::to_string(v.value) + " not in diagram");
    auto it = d.names.find(v);
    out.add_vertex(v, d.obj(v), it == d.names.end() ? std::string{} : it->second);
  }
  for (const auto& e : d.graph.edges())
    if (vs.count(e.src) && vs.count(e.tgt)) out.add_edge(e, d.mor(e.id));
  return out;
}

}  // namespace catc
