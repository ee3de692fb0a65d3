#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "catc/category.hpp"

namespace catc {

// A subset of {0,1}^n as a bitset indexed by points; bit i-1 of a point is x_i.
struct BoolLatticeObj {
  std::vector<std::uint64_t> bits;
  bool operator==(const BoolLatticeObj&) const = default;
  bool contains(std::size_t point) const { return (bits[point / 64] >> (point % 64)) & 1u; }
  void set(std::size_t point) { bits[point / 64] |= std::uint64_t{1} << (point % 64); }
  std::size_t count() const;
  bool subset_of(const BoolLatticeObj& o) const;
};

struct BoolLatticeMor {
  BoolLatticeObj dom;
  BoolLatticeObj codom;
};

// The lattice B_n of subsets of {0,1}^n; the basic morphisms are the identities z(i) of Z_i.
class BoolLattice {
 public:
  using Object = BoolLatticeObj;
  using Morphism = BoolLatticeMor;

  static constexpr unsigned kMaxN = 20;
  explicit BoolLattice(unsigned n);

  unsigned n() const { return n_; }
  std::size_t points() const { return std::size_t{1} << n_; }
  Object empty() const;
  Object full() const;
  Object z(unsigned i) const;
  Morphism inclusion(const Object& a, const Object& b) const;

  std::string name() const { return "B_" + std::to_string(n_); }
  Object dom(const Morphism& m) const { return m.dom; }
  Object codom(const Morphism& m) const { return m.codom; }
  Morphism basic(std::string_view name) const;
  bool same_object(const Object& a, const Object& b) const { return a == b; }
  std::string summary(const Object& o) const;

  Morphism compose(const Morphism& g, const Morphism& f) const;
  bool equal(const Morphism& f, const Morphism& g) const { return f.dom == g.dom && f.codom == g.codom; }
  Morphism identity(const Object& o) const { return {o, o}; }

  ProductCone<BoolLattice> product(const std::vector<Object>& objs) const;
  Morphism tuple(const Object& src, const std::vector<Morphism>& comps, const ProductCone<BoolLattice>& p) const;
  Equalizer<BoolLattice> equalizer(const Morphism& f, const Morphism& g) const;
  CoproductCocone<BoolLattice> coproduct(const std::vector<Object>& objs) const;
  Morphism cotuple(const Object& tgt, const std::vector<Morphism>& comps,
                   const CoproductCocone<BoolLattice>& c) const;
  Coequalizer<BoolLattice> coequalizer(const Morphism& f, const Morphism& g) const;

  Cone<BoolLattice> limit(const Diagram<BoolLattice>& d) const;
  Cone<BoolLattice> colimit(const Diagram<BoolLattice>& d) const;

  bool is_isomorphic(const Object& a, const Object& b) const { return a == b; }
  bool is_iso(const Morphism& m) const { return m.dom == m.codom; }
  std::optional<std::vector<Morphism>> find_witnesses(const WitnessProblem<BoolLattice>& p,
                                                      std::uint64_t& budget) const;

 private:
  unsigned n_;
};

BoolLatticeObj bool_limit(const Diagram<BoolLattice>& d, const BoolLattice& cat);
BoolLatticeObj bool_colimit(const Diagram<BoolLattice>& d, const BoolLattice& cat);

}  // namespace catc
