#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "catc/category.hpp"
#include "catc/poly.hpp"

namespace catc {

// Zero set of degree <= 2 equations inside affine space of dimension m1.
struct Presentation {
  std::size_t m1 = 0;
  Vars vars;                           // coordinate names c0..c{m1-1}
  std::vector<SparsePoly> equations;   // each over `vars`
  std::vector<std::string> coordRoles; // originating vertex and slot, may be empty

  static Presentation affine_space(std::size_t m);
  std::size_t max_degree() const;
  bool operator==(const Presentation& o) const { return m1 == o.m1 && equations == o.equations; }
};

// Throws std::logic_error when an equation exceeds degree 2.
void assert_degree_at_most_two(const Presentation& p);

struct AffObj {
  std::shared_ptr<const Presentation> p;
  const Presentation& pres() const { return *p; }
  std::size_t dim() const { return p->m1; }
};

struct AffMor {
  AffObj dom;
  AffObj codom;
  std::vector<SparsePoly> comps;  // one per codomain coordinate, over dom coordinates
};

// Presented affine varieties with polynomial maps; limits only.
// Basics: const_endo(c) (x -> c*x), add, mul, pi1, pi2, to_point, point(c).
class AffVar {
 public:
  using Object = AffObj;
  using Morphism = AffMor;

  static AffObj space(std::size_t m);
  static AffObj from(Presentation p);

  std::string name() const { return "AffVar"; }
  Object dom(const Morphism& f) const { return f.dom; }
  Object codom(const Morphism& f) const { return f.codom; }
  Morphism basic(std::string_view name) const;
  bool same_object(const Object& a, const Object& b) const { return a.p == b.p || *a.p == *b.p; }
  std::string summary(const Object& o) const;

  Morphism compose(const Morphism& g, const Morphism& f) const;
  bool equal(const Morphism& f, const Morphism& g) const;
  Morphism identity(const Object& o) const;

  ProductCone<AffVar> product(const std::vector<Object>& objs) const;
  Morphism tuple(const Object& src, const std::vector<Morphism>& comps, const ProductCone<AffVar>& p) const;
  Equalizer<AffVar> equalizer(const Morphism& f, const Morphism& g) const;

  // Identifies coordinates joined by projection-like edges before adding equations.
  Cone<AffVar> limit(const Diagram<AffVar>& d) const;
};

// Direct presentation: one block per vertex, one equation per edge-target coordinate.
Cone<AffVar> affvar_limit_presentation(const Diagram<AffVar>& d);

bool presentation_membership(const Presentation& p, const std::vector<Rational>& point);

// Fill unknown coordinates by repeatedly solving equations linear in a single unknown.
std::vector<Rational> complete_point(const Presentation& p, const std::map<std::size_t, Rational>& known);

// Coordinate index whose role equals `role`.
std::optional<std::size_t> find_role(const Presentation& p, const std::string& role);

}  // namespace catc
