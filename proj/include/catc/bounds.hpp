#pragma once

#include <vector>

#include "catc/rational.hpp"

namespace catc {

// Facets of the cyclic polytope of n points in dimension 2m: C(n-m, m) + C(n-m-1, m-1); needs n > 2m >= 2.
BigInt cyclic_polytope_facets(unsigned n, unsigned m);

struct GrowthRow {
  unsigned m = 0;
  BigInt preimageCostBound;      // facet formula at (4m+1, 2m), polytope in dimension 4m
  BigInt projectedFacets;        // facet formula at (4m+1, m), the projection to dimension 2m
  BigInt facetLowerBoundOnCost;  // least c with c^2 >= projectedFacets
};

// Rows m = 1..mMax, 1 <= mMax <= 30.
std::vector<GrowthRow> sl_growth_table(unsigned mMax);

// Least c with c^2 >= x, x >= 0.
BigInt ceil_sqrt(const BigInt& x);

}  // namespace catc
