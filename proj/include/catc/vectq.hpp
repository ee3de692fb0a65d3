#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "catc/category.hpp"
#include "catc/matrix.hpp"

namespace catc {

struct VectObj {
  std::size_t dim = 0;
  bool operator==(const VectObj&) const = default;
};

struct VectMor {
  QMatrix m;  // codim x dim
};

// Finite-dimensional vector spaces over the rationals.
// Basics: scale(c), add, pi1, pi2, from_zero, to_zero.
class VectQ {
 public:
  using Object = VectObj;
  using Morphism = VectMor;

  std::string name() const { return "VectQ"; }
  Object dom(const Morphism& f) const { return {f.m.cols()}; }
  Object codom(const Morphism& f) const { return {f.m.rows()}; }
  Morphism basic(std::string_view name) const;
  bool same_object(const Object& a, const Object& b) const { return a == b; }
  std::string summary(const Object& o) const;

  Morphism compose(const Morphism& g, const Morphism& f) const;
  bool equal(const Morphism& f, const Morphism& g) const { return f.m == g.m; }
  Morphism identity(const Object& o) const { return {QMatrix::identity(o.dim)}; }

  ProductCone<VectQ> product(const std::vector<Object>& objs) const;
  Morphism tuple(const Object& src, const std::vector<Morphism>& comps, const ProductCone<VectQ>& p) const;
  Equalizer<VectQ> equalizer(const Morphism& f, const Morphism& g) const;
  CoproductCocone<VectQ> coproduct(const std::vector<Object>& objs) const;
  Morphism cotuple(const Object& tgt, const std::vector<Morphism>& comps, const CoproductCocone<VectQ>& c) const;
  Coequalizer<VectQ> coequalizer(const Morphism& f, const Morphism& g) const;

  Cone<VectQ> limit(const Diagram<VectQ>& d) const;
  Cone<VectQ> colimit(const Diagram<VectQ>& d) const;

  bool is_isomorphic(const Object& a, const Object& b) const { return a.dim == b.dim; }
  bool is_iso(const Morphism& f) const { return is_invertible(f.m); }
  std::optional<std::vector<Morphism>> find_witnesses(const WitnessProblem<VectQ>& p, std::uint64_t& budget) const;

  ImageFactorization<VectQ> image(const Morphism& f) const;
};

// The map (phi - psi) from the product of vertex spaces to the product over edge targets.
QMatrix vect_limit_constraint(const Diagram<VectQ>& d);
Cone<VectQ> vect_limit(const Diagram<VectQ>& d);
Cone<VectQ> vect_colimit(const Diagram<VectQ>& d);

}  // namespace catc
