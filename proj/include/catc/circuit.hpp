#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "catc/poly.hpp"
#include "catc/rational.hpp"

namespace catc {

enum class GateOp { Input, Const, Add, Mul, And, Or };

struct Gate {
  std::string id;
  GateOp op = GateOp::Input;
  std::string name;      // Input
  Rational value;        // Const
  std::size_t a = 0, b = 0;  // operand gate indices
};

// Gates are topologically ordered: operands always precede their consumers.
struct Circuit {
  std::vector<Gate> gates;
  std::vector<std::size_t> outputs;

  std::size_t size() const { return gates.size(); }
  std::size_t add_input(const std::string& name);
  std::size_t add_const(const Rational& c);
  std::size_t add_gate(GateOp op, std::size_t a, std::size_t b);
  std::vector<std::string> input_names() const;  // first-appearance order, deduplicated
};

// `g<k> = input <name> | const <p/q> | add g<i> g<j> | mul g<i> g<j>`, then `output g<k>[, g<j>...]`.
Circuit parse_slp(std::string_view text);
// Same grammar with `and` / `or` in place of the arithmetic operations and no constants.
Circuit parse_mono(std::string_view text);
std::string print_circuit(const Circuit& c);

// True iff every non-output gate feeds at most one distinct consumer.
bool check_formula(const Circuit& c);

std::vector<Rational> evaluate(const Circuit& c, const std::map<std::string, Rational>& env);
// Polynomial of every gate over `vars` (inputs looked up by name).
std::vector<SparsePoly> expand(const Circuit& c, const Vars& vars);
// Monotone evaluation; input `x<i>` reads bit i-1 of `point`.
std::vector<bool> evaluate_mono(const Circuit& c, std::uint64_t point);
// Bit p set iff the designated output is true at point p; n <= 20.
std::vector<bool> truth_table(const Circuit& c, unsigned n);

// Index i of an input named `x<i>`, or 0.
unsigned mono_input_index(const std::string& name);

}  // namespace catc
