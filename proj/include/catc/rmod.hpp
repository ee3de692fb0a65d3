#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "catc/category.hpp"
#include "catc/poly.hpp"

namespace catc {

// R^g modulo the submodule spanned by the relation columns (each of length g).
struct ModulePresentation {
  std::size_t g = 0;
  std::vector<std::vector<SparsePoly>> relations;
  bool operator==(const ModulePresentation& o) const { return g == o.g && relations == o.relations; }
};

struct RModObj {
  std::shared_ptr<const ModulePresentation> p;
  std::size_t gens() const { return p->g; }
};

struct RModMor {
  RModObj dom;
  RModObj codom;
  std::vector<std::vector<SparsePoly>> cols;  // image of each domain generator
};

// Modules over R = Q[vars] at desk scale; colimits only.
// Basics: xmul(i), cmul(c), inj1, inj2, diag, add, tozero.
class RMod {
 public:
  using Object = RModObj;
  using Morphism = RModMor;

  explicit RMod(Vars ring) : ring_(std::move(ring)) {}
  const Vars& ring() const { return ring_; }

  RModObj free(std::size_t g) const;
  RModObj from(ModulePresentation p) const;

  std::string name() const { return "R-Mod"; }
  Object dom(const Morphism& f) const { return f.dom; }
  Object codom(const Morphism& f) const { return f.codom; }
  Morphism basic(std::string_view name) const;
  bool same_object(const Object& a, const Object& b) const { return a.p == b.p || *a.p == *b.p; }
  std::string summary(const Object& o) const;

  Morphism compose(const Morphism& g, const Morphism& f) const;
  bool equal(const Morphism& f, const Morphism& g) const;
  Morphism identity(const Object& o) const;

  CoproductCocone<RMod> coproduct(const std::vector<Object>& objs) const;
  Morphism cotuple(const Object& tgt, const std::vector<Morphism>& comps, const CoproductCocone<RMod>& c) const;
  Coequalizer<RMod> coequalizer(const Morphism& f, const Morphism& g) const;

  Cone<RMod> colimit(const Diagram<RMod>& d) const;

 private:
  SparsePoly zero() const { return SparsePoly(ring_); }
  SparsePoly one() const { return SparsePoly::constant(ring_, 1); }
  Vars ring_;
};

// Generators: all vertex generators; relations: (phi - psi) on every edge-source generator.
Cone<RMod> rmod_colimit_presentation(const Diagram<RMod>& d, const RMod& cat);

using VertexSlot = std::pair<VertexId, std::size_t>;

struct LinearSystemOverR {
  std::vector<std::vector<SparsePoly>> rows;
  std::vector<VertexSlot> unknowns;
};

// Cocone equations f_{src} = f_{tgt} * M for every edge, plus vertex relations.
LinearSystemOverR build_cocone_system(const Diagram<RMod>& d, const RMod& cat);

struct ExtractionOptions {
  unsigned degreeBudget = 64;
  std::optional<VertexId> designated;  // defaults to the lowest vertex with generators
};

std::map<VertexSlot, SparsePoly> rmod_extract_cocone_polys(const Diagram<RMod>& d, const RMod& cat,
                                                           bool assertColimitIsR,
                                                           const ExtractionOptions& opt = {});

}  // namespace catc
