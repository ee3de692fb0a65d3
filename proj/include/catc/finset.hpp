#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "catc/category.hpp"

namespace catc {

struct FinSetObj {
  std::vector<std::string> labels;
  std::size_t size() const { return labels.size(); }
  bool operator==(const FinSetObj&) const = default;
};

struct FinSetMor {
  FinSetObj dom;
  FinSetObj codom;
  std::vector<std::uint32_t> table;
};

// Finite sets; the single basic morphism is `id1`, the identity of {1}.
class FinSet {
 public:
  using Object = FinSetObj;
  using Morphism = FinSetMor;

  static FinSetObj set_of_size(std::size_t n);
  static FinSetMor make_map(const FinSetObj& dom, const FinSetObj& codom, std::vector<std::uint32_t> table);

  std::string name() const { return "FinSet"; }
  Object dom(const Morphism& m) const { return m.dom; }
  Object codom(const Morphism& m) const { return m.codom; }
  Morphism basic(std::string_view name) const;
  bool same_object(const Object& a, const Object& b) const { return a == b; }
  std::string summary(const Object& o) const;

  Morphism compose(const Morphism& g, const Morphism& f) const;
  bool equal(const Morphism& f, const Morphism& g) const;
  Morphism identity(const Object& o) const;

  ProductCone<FinSet> product(const std::vector<Object>& objs) const;
  Morphism tuple(const Object& src, const std::vector<Morphism>& comps, const ProductCone<FinSet>& p) const;
  Equalizer<FinSet> equalizer(const Morphism& f, const Morphism& g) const;
  CoproductCocone<FinSet> coproduct(const std::vector<Object>& objs) const;
  Morphism cotuple(const Object& tgt, const std::vector<Morphism>& comps, const CoproductCocone<FinSet>& c) const;
  Coequalizer<FinSet> coequalizer(const Morphism& f, const Morphism& g) const;

  Cone<FinSet> limit(const Diagram<FinSet>& d) const;
  Cone<FinSet> colimit(const Diagram<FinSet>& d) const;

  bool is_isomorphic(const Object& a, const Object& b) const { return a.size() == b.size(); }
  bool is_iso(const Morphism& m) const;
  std::optional<std::vector<Morphism>> find_witnesses(const WitnessProblem<FinSet>& p, std::uint64_t& budget) const;

  ImageFactorization<FinSet> image(const Morphism& m) const;
};

Cone<FinSet> finset_limit(const Diagram<FinSet>& d);
Cone<FinSet> finset_colimit(const Diagram<FinSet>& d);

}  // namespace catc
