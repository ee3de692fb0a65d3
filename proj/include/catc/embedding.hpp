#pragma once

#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "catc/category.hpp"

namespace catc {

template <class C>
struct DiagramEmbedding {
  std::map<VertexId, VertexId> vertexMap;
  std::map<EdgeId, EdgeId> edgeMap;
  std::map<VertexId, typename C::Morphism> objWitness;
};

struct SearchLimits {
  std::size_t max_target_vertices = 12;
  std::uint64_t budget = 1'000'000;
};

// Budget from CATC_BUDGET when set to a positive integer.
inline SearchLimits default_search_limits() {
  SearchLimits lim;
  if (const char* env = std::getenv("CATC_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) lim.budget = v;
  }
  return lim;
}

namespace detail {

template <class C>
class EmbeddingSearch {
 public:
  EmbeddingSearch(const Diagram<C>& target, const Diagram<C>& host, const C& cat, SearchLimits lim)
      : target_(target), host_(host), cat_(cat), budget_(lim.budget) {
    if (target.vertex_count() > lim.max_target_vertices)
      fail(ErrorCode::SearchBudgetExceeded, "target has " + std::to_string(target.vertex_count()) +
                                                " vertices, bound is " + std::to_string(lim.max_target_vertices));
    order_vertices();
    host_vertices_ = host.vertex_list();
  }

  std::optional<DiagramEmbedding<C>> run() {
    if (!search(0)) return std::nullopt;
    DiagramEmbedding<C> emb;
    emb.vertexMap = vmap_;
    emb.edgeMap = emap_;
    for (std::size_t i = 0; i < order_.size(); ++i) emb.objWitness.emplace(order_[i], witnesses_[i]);
    return emb;
  }

 private:
  void tick() {
    if (budget_ == 0) fail(ErrorCode::SearchBudgetExceeded, "subdiagram search budget exhausted");
    --budget_;
  }

  void order_vertices() {
    std::map<VertexId, std::size_t> degree;
    for (auto v : target_.graph.vertices()) degree[v] = 0;
    for (const auto& e : target_.graph.edges()) {
      ++degree[e.src];
      ++degree[e.tgt];
    }
    std::set<VertexId> placed;
    while (placed.size() < degree.size()) {
      std::optional<VertexId> best;
      std::size_t best_links = 0, best_deg = 0;
      for (const auto& [v, d] : degree) {
        if (placed.count(v)) continue;
        std::size_t links = 0;
        for (const auto& e : target_.graph.edges())
          if ((e.src == v && placed.count(e.tgt)) || (e.tgt == v && placed.count(e.src))) ++links;
        if (!best || links > best_links || (links == best_links && d > best_deg)) {
          best = v;
          best_links = links;
          best_deg = d;
        }
      }
      placed.insert(*best);
      order_.push_back(*best);
    }
  }

  // Target edges whose endpoints are both placed once order_[k] is placed, and which touch it.
  std::vector<Edge> new_edges(std::size_t k) const {
    std::set<VertexId> placed(order_.begin(), order_.begin() + static_cast<long>(k) + 1);
    std::vector<Edge> out;
    for (const auto& e : target_.graph.edges())
      if ((e.src == order_[k] || e.tgt == order_[k]) && placed.count(e.src) && placed.count(e.tgt)) out.push_back(e);
    return out;
  }

  bool search(std::size_t k) {
    if (k == order_.size()) return true;
    VertexId t = order_[k];
    for (auto h : host_vertices_) {
      if (used_hosts_.count(h)) continue;
      tick();
      if (!cat_.is_isomorphic(target_.obj(t), host_.obj(h))) continue;
      vmap_[t] = h;
      used_hosts_.insert(h);
      auto edges = new_edges(k);
      if (assign_edges(k, edges, 0)) return true;
      used_hosts_.erase(h);
      vmap_.erase(t);
    }
    return false;
  }

  bool assign_edges(std::size_t k, const std::vector<Edge>& edges, std::size_t i) {
    if (i == edges.size()) {
      auto w = solve_witnesses(k + 1);
      if (!w) return false;
      auto saved = witnesses_;
      witnesses_ = *w;
      if (search(k + 1)) return true;
      witnesses_ = saved;
      return false;
    }
    const Edge& e = edges[i];
    VertexId hs = vmap_.at(e.src), ht = vmap_.at(e.tgt);
    for (const auto& he : host_.graph.edges()) {
      if (he.src != hs || he.tgt != ht || used_edges_.count(he.id)) continue;
      tick();
      emap_[e.id] = he.id;
      used_edges_.insert(he.id);
      if (assign_edges(k, edges, i + 1)) return true;
      used_edges_.erase(he.id);
      emap_.erase(e.id);
    }
    return false;
  }

  std::optional<std::vector<typename C::Morphism>> solve_witnesses(std::size_t placed) {
    WitnessProblem<C> p;
    std::map<VertexId, std::size_t> index;
    for (std::size_t i = 0; i < placed; ++i) {
      index[order_[i]] = i;
      p.target_objs.push_back(target_.obj(order_[i]));
      p.host_objs.push_back(host_.obj(vmap_.at(order_[i])));
    }
    for (const auto& [te, he] : emap_) {
      const Edge& e = target_.graph.edge(te);
      p.squares.push_back({index.at(e.src), index.at(e.tgt), target_.mor(te), host_.mor(he)});
    }
    return cat_.find_witnesses(p, budget_);
  }

  const Diagram<C>& target_;
  const Diagram<C>& host_;
  const C& cat_;
  std::uint64_t budget_;
  std::vector<VertexId> order_;
  std::vector<VertexId> host_vertices_;
  std::map<VertexId, VertexId> vmap_;
  std::map<EdgeId, EdgeId> emap_;
  std::set<VertexId> used_hosts_;
  std::set<EdgeId> used_edges_;
  std::vector<typename C::Morphism> witnesses_;
};

}  // namespace detail

template <class C>
std::optional<DiagramEmbedding<C>> find_subdiagram_embedding(const Diagram<C>& target, const Diagram<C>& host,
                                                             const C& cat,
                                                             SearchLimits lim = default_search_limits()) {
  if constexpr (HasIsoTest<C>) {
    return detail::EmbeddingSearch<C>(target, host, cat, lim).run();
  } else {
    fail(ErrorCode::CapabilityMissing, cat.name() + " has no isomorphism test");
  }
}

template <class C>
std::optional<DiagramEmbedding<C>> diagram_isomorphic(const Diagram<C>& d1, const Diagram<C>& d2, const C& cat,
                                                      SearchLimits lim = default_search_limits()) {
  if constexpr (HasIsoTest<C>) {
    if (d1.vertex_count() != d2.vertex_count() || d1.edge_count() != d2.edge_count()) return std::nullopt;
    lim.max_target_vertices = std::max(lim.max_target_vertices, d1.vertex_count());
    return detail::EmbeddingSearch<C>(d1, d2, cat, lim).run();
  } else {
    fail(ErrorCode::CapabilityMissing, cat.name() + " has no isomorphism test");
  }
}

// Independent recheck of an embedding: incidence, invertible witnesses, commuting squares.
template <class C>
bool verify_embedding(const DiagramEmbedding<C>& emb, const Diagram<C>& target, const Diagram<C>& host,
                      const C& cat) {
  std::set<VertexId> image;
  for (auto v : target.graph.vertices()) {
    auto it = emb.vertexMap.find(v);
    if (it == emb.vertexMap.end() || !host.graph.has_vertex(it->second) || !image.insert(it->second).second)
      return false;
    auto w = emb.objWitness.find(v);
    if (w == emb.objWitness.end()) return false;
    if constexpr (HasIsoTest<C>) {
      if (!cat.is_iso(w->second)) return false;
    }
    if (!cat.same_object(cat.dom(w->second), target.obj(v)) || !cat.same_object(cat.codom(w->second), host.obj(it->second)))
      return false;
  }
  std::set<EdgeId> eimage;
  for (const auto& e : target.graph.edges()) {
    auto it = emb.edgeMap.find(e.id);
    if (it == emb.edgeMap.end() || !eimage.insert(it->second).second) return false;
    const Edge& he = host.graph.edge(it->second);
    if (he.src != emb.vertexMap.at(e.src) || he.tgt != emb.vertexMap.at(e.tgt)) return false;
    if constexpr (HasCompose<C>) {
      auto lhs = cat.compose(emb.objWitness.at(e.tgt), target.mor(e.id));
      auto rhs = cat.compose(host.mor(he.id), emb.objWitness.at(e.src));
      if (!cat.equal(lhs, rhs)) return false;
    }
  }
  return true;
}

}  // namespace catc
