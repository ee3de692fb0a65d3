#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "catc/affvar.hpp"
#include "catc/circuit.hpp"
#include "catc/computation.hpp"
#include "catc/rmod.hpp"

namespace catc {

struct CompileReport {
  std::uint64_t inputSize = 0;   // circuit size N, or computation cost C
  std::uint64_t outputCost = 0;  // cost of the produced computation, or size of the produced circuit
  Rational boundMultiplier;      // outputCost / inputSize
  Rational bound;                // the constant being checked against
  bool boundSatisfied = false;
  std::uint64_t rawCost = 0;
  std::uint64_t optimizedCost = 0;
};

// Steps charged per arithmetic gate by the SLP compiler; every input costs one basic plus shared overhead.
inline constexpr unsigned kSlpKappa = 6;
inline constexpr unsigned kFormulaKappa = 7;

struct SlpCompileResult {
  Computation raw;
  Computation optimized;  // flattened onto the designated apex
  VertexId apex{};        // designated apex of `raw`
  std::map<std::string, std::string> inputRoles;  // input name -> presentation coordinate role
  CompileReport report;
};

SlpCompileResult compile_slp_to_limit(const Circuit& c, bool emitZeroSet);

struct PresentationCompileResult {
  Presentation presentation;
  Circuit circuit;  // computes every component of phi - psi
  std::size_t m1 = 0;
  std::size_t m2 = 0;
  std::size_t maxDegree = 0;
  CompileReport report;  // inputSize = C, outputCost = circuit size, bound = 4
  bool dimensionsWithinBound = false;  // m1, m2 <= 2C and degree <= 2
};

PresentationCompileResult compile_limit_to_presentation(const Computation& comp,
                                                        std::optional<VertexId> target = std::nullopt);

// Completes the input values through the compiled presentation and tests membership.
bool presentation_accepts(const PresentationCompileResult& pres, const SlpCompileResult& slp,
                          const std::map<std::string, Rational>& inputs);

// Circuit whose outputs are the given polynomials (degree <= 2 expected), inputs named after the variables.
Circuit circuit_for_polys(const std::vector<SparsePoly>& polys);

struct FormulaCompileResult {
  Computation comp;
  VertexId source{};  // the vertex whose cocone component is the formula polynomial
  VertexId sink{};
  CompileReport report;
};

FormulaCompileResult compile_formula_to_rmod(const Circuit& f, const Vars& ring);

// Replays the basic part in R-Mod and extracts the polynomial at the designated source slot.
SparsePoly extract_formula_poly(const FormulaCompileResult& r, const RMod& cat);

Computation monotone_to_mixed(const Circuit& c, unsigned n);
Circuit mixed_to_monotone(const Computation& comp, unsigned n);

}  // namespace catc
