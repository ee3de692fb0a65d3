#include "catc/bounds.hpp"

#include <string>

#include "catc/error.hpp"

namespace catc {

namespace {

BigInt binom(unsigned n, unsigned k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace

BigInt cyclic_polytope_facets(unsigned n, unsigned m) {
  if (m == 0 || n <= 2 * m)
    fail(ErrorCode::DomainError, "facet formula needs n > 2m >= 2, got n=" + std::to_string(n) + ", m=" + std::to_string(m));
  return binom(n - m, m) + binom(n - m - 1, m - 1);
}

BigInt ceil_sqrt(const BigInt& x) {
  if (x < 0) fail(ErrorCode::DomainError, "square root of a negative number");
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
  if (r * r < x) ++r;
  return r;
}

std::vector<GrowthRow> sl_growth_table(unsigned mMax) {
  if (mMax < 1 || mMax > 30) fail(ErrorCode::DomainError, "mMax must lie in 1..30");
  std::vector<GrowthRow> rows;
  for (unsigned m = 1; m <= mMax; ++m) {
    GrowthRow r;
    r.m = m;
    r.preimageCostBound = cyclic_polytope_facets(4 * m + 1, 2 * m);
    r.projectedFacets = cyclic_polytope_facets(4 * m + 1, m);
    r.facetLowerBoundOnCost = ceil_sqrt(r.projectedFacets);
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace catc
