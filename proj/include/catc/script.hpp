#pragma once

#include <string>
#include <string_view>

#include "catc/boolean.hpp"
#include "catc/computation.hpp"
#include "catc/finset.hpp"
#include "catc/vectq.hpp"

namespace catc {

// Script grammar, one expression per line:
//   !limit | !colimit | !mixed        optional header (inferred from the steps otherwise)
//   !cost <morph> <k>                 per-morphism cost, default 1
//   <id>. <src>,<morph>,<tgt>         basic morphism; `_` or `<id>` as source means fresh,
//                                     `_` or `<id>'` as target means fresh, `<id>` loops on the source
//   <id>. lim(a,b,...) | colim(...)   full subdiagram on the listed vertices
// `#` starts a comment.
Computation parse_script(std::string_view text);
std::string print_script(const Computation& c);

Computation load_script(const std::string& path);
std::string read_file(const std::string& path);

// Diagram literals for expected-diagram files:
//   !diagram
//   v <name> <object>
//   e <src> <tgt> <morphism>
// FinSet: set(n), map(i0,i1,...); VectQ: vect(n), matrix(r,c,entries row-major);
// B_n: z(i), empty, full, points(b1,b2,...) with each b a bitstring x1..xn, incl.
Diagram<FinSet> parse_finset_diagram(std::string_view text);
Diagram<VectQ> parse_vectq_diagram(std::string_view text);
Diagram<BoolLattice> parse_bool_diagram(std::string_view text, const BoolLattice& cat);

bool is_diagram_literal(std::string_view text);

}  // namespace catc
