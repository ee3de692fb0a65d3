#pragma once

#include <concepts>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "catc/diagram.hpp"

namespace catc {

template <class C>
struct Cone {
  typename C::Object apex;
  std::map<VertexId, typename C::Morphism> legs;
};

template <class C>
struct ProductCone {
  typename C::Object apex;
  std::vector<typename C::Morphism> projections;
};

template <class C>
struct CoproductCocone {
  typename C::Object apex;
  std::vector<typename C::Morphism> injections;
};

template <class C>
struct Equalizer {
  typename C::Object apex;
  typename C::Morphism inclusion;
};

template <class C>
struct Coequalizer {
  typename C::Object apex;
  typename C::Morphism quotient;
};

template <class C>
struct ImageFactorization {
  typename C::Object subobject;
  typename C::Morphism mono;    // subobject -> codomain
  typename C::Morphism factor;  // domain -> subobject
};

// Search for isomorphisms w_i : target_i -> host_i with w_t . a = b . w_s on every square.
template <class C>
struct WitnessProblem {
  struct Square {
    std::size_t s;
    std::size_t t;
    typename C::Morphism target_mor;
    typename C::Morphism host_mor;
  };
  std::vector<typename C::Object> target_objs;
  std::vector<typename C::Object> host_objs;
  std::vector<Square> squares;
};

template <class C>
concept CategoryEvaluator = requires(const C& c, const typename C::Object& o, const typename C::Morphism& m,
                                     std::string_view name) {
  { c.dom(m) } -> std::convertible_to<typename C::Object>;
  { c.codom(m) } -> std::convertible_to<typename C::Object>;
  { c.basic(name) } -> std::convertible_to<typename C::Morphism>;
  { c.same_object(o, o) } -> std::convertible_to<bool>;
  { c.summary(o) } -> std::convertible_to<std::string>;
  { c.name() } -> std::convertible_to<std::string>;
};

template <class C>
concept HasCompose = requires(const C& c, const typename C::Object& o, const typename C::Morphism& m) {
  { c.compose(m, m) } -> std::convertible_to<typename C::Morphism>;
  { c.equal(m, m) } -> std::convertible_to<bool>;
  { c.identity(o) } -> std::convertible_to<typename C::Morphism>;
};

template <class C>
concept HasProducts = requires(const C& c, const std::vector<typename C::Object>& os,
                               const std::vector<typename C::Morphism>& ms, const typename C::Object& o,
                               const ProductCone<C>& p) {
  { c.product(os) } -> std::convertible_to<ProductCone<C>>;
  { c.tuple(o, ms, p) } -> std::convertible_to<typename C::Morphism>;
};

template <class C>
concept HasEqualizers = requires(const C& c, const typename C::Morphism& m) {
  { c.equalizer(m, m) } -> std::convertible_to<Equalizer<C>>;
};

template <class C>
concept HasCoproducts = requires(const C& c, const std::vector<typename C::Object>& os,
                                 const std::vector<typename C::Morphism>& ms, const typename C::Object& o,
                                 const CoproductCocone<C>& p) {
  { c.coproduct(os) } -> std::convertible_to<CoproductCocone<C>>;
  { c.cotuple(o, ms, p) } -> std::convertible_to<typename C::Morphism>;
};

template <class C>
concept HasCoequalizers = requires(const C& c, const typename C::Morphism& m) {
  { c.coequalizer(m, m) } -> std::convertible_to<Coequalizer<C>>;
};

template <class C>
concept HasDirectLimit = requires(const C& c, const Diagram<C>& d) {
  { c.limit(d) } -> std::convertible_to<Cone<C>>;
};

template <class C>
concept HasDirectColimit = requires(const C& c, const Diagram<C>& d) {
  { c.colimit(d) } -> std::convertible_to<Cone<C>>;
};

template <class C>
concept HasIsoTest = requires(const C& c, const typename C::Object& o, const typename C::Morphism& m,
                              const WitnessProblem<C>& w, std::uint64_t& budget) {
  { c.is_isomorphic(o, o) } -> std::convertible_to<bool>;
  { c.is_iso(m) } -> std::convertible_to<bool>;
  { c.find_witnesses(w, budget) } -> std::convertible_to<std::optional<std::vector<typename C::Morphism>>>;
};

template <class C>
concept HasImages = requires(const C& c, const typename C::Morphism& m) {
  { c.image(m) } -> std::convertible_to<ImageFactorization<C>>;
};

template <class C>
bool is_isomorphic(const typename C::Object& a, const typename C::Object& b, const C& cat) {
  if constexpr (HasIsoTest<C>) {
    return cat.is_isomorphic(a, b);
  } else {
    fail(ErrorCode::CapabilityMissing, cat.name() + " has no isomorphism test");
  }
}

template <class C>
ImageFactorization<C> image(const typename C::Morphism& m, const C& cat) {
  if constexpr (HasImages<C>) {
    return cat.image(m);
  } else {
    fail(ErrorCode::CapabilityMissing, cat.name() + " has no image factorization");
  }
}

}  // namespace catc
