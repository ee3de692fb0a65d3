#pragma once

#include <cstdint>
#include <vector>

#include "catc/computation.hpp"
#include "catc/vectq.hpp"

namespace catc {

// n loops on {1}, then one colimit over all of them (FinSet).
Computation sets_computation(unsigned n);

// Two loops, a colimits of the pair, then a colimit over those a apexes only.
Computation nonconstructive_computation(unsigned a);

// Mixed FinSet computation; after depth k the last apex has 2^(2^k) elements.
Computation doubling_computation(unsigned k);

// Subspace computations in VectQ; the apex carrying V and the n^2 subspace apexes.
struct SubspaceComputation {
  Computation comp;
  VertexId v{};
  std::vector<VertexId> subspaces;
};

SubspaceComputation subspaces_generic(unsigned n);
SubspaceComputation subspaces_special(unsigned n);

// The n^2 inclusions of two-dimensional subspaces into V = Q^{2n} each construction is meant to produce.
Diagram<VectQ> subspaces_generic_target(unsigned n);
Diagram<VectQ> subspaces_special_target(unsigned n);

}  // namespace catc
