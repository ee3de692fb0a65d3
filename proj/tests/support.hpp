#pragma once

// Seeded generators and small adapters shared by the unit tests and the acceptance driver.

#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "catc/circuit.hpp"
#include "catc/finset.hpp"
#include "catc/sampling.hpp"
#include "catc/script.hpp"
#include "oracles.hpp"

namespace support {

using catc::Circuit;
using catc::GateOp;
using catc::Rational;

inline std::string corpus(const std::string& name) { return std::string(CATC_CORPUS_DIR) + "/" + name; }
inline std::string data(const std::string& name) { return std::string(CATC_DATA_DIR) + "/" + name; }

inline std::vector<std::string> var_names(unsigned n, const std::string& prefix = "x") {
  std::vector<std::string> v;
  for (unsigned i = 1; i <= n; ++i) v.push_back(prefix + std::to_string(i));
  return v;
}

// Direct gate-by-gate evaluation over plain rationals.
inline Rational eval_circuit(const Circuit& c, const std::map<std::string, Rational>& x) {
  std::vector<Rational> v(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto& g = c.gates[i];
    switch (g.op) {
      case GateOp::Input: v[i] = x.at(g.name); break;
      case GateOp::Const: v[i] = g.value; break;
      case GateOp::Add: v[i] = v[g.a] + v[g.b]; break;
      case GateOp::Mul: v[i] = v[g.a] * v[g.b]; break;
      default: break;
    }
  }
  return v[c.outputs.front()];
}

// Expansion into the oracle's dense-exponent polynomials over `names`.
inline oracle::MPoly expand_oracle(const Circuit& c, const std::vector<std::string>& names) {
  std::vector<oracle::MPoly> v(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto& g = c.gates[i];
    switch (g.op) {
      case GateOp::Input: {
        std::size_t k = 0;
        while (names[k] != g.name) ++k;
        v[i] = oracle::mvar(names.size(), k);
        break;
      }
      case GateOp::Const: v[i] = oracle::mconst(names.size(), g.value); break;
      case GateOp::Add: v[i] = oracle::madd(v[g.a], v[g.b]); break;
      case GateOp::Mul: v[i] = oracle::mmul(v[g.a], v[g.b]); break;
      default: break;
    }
  }
  return v[c.outputs.front()];
}

inline Rational nonzero_rational(std::mt19937_64& rng) {
  Rational r;
  do r = catc::random_rational(rng, 9, 4);
  while (r == 0);
  return r;
}

// Random SLP over x1..x_nvars with `gates` gates in total (inputs included), single output.
inline Circuit random_slp(std::mt19937_64& rng, unsigned nvars, unsigned gates) {
  Circuit c;
  for (const auto& n : var_names(nvars)) c.add_input(n);
  std::uniform_int_distribution<int> op(0, 9);
  while (c.size() < gates) {
    std::uniform_int_distribution<std::size_t> pick(0, c.size() - 1);
    int o = op(rng);
    if (o < 2)
      c.add_const(nonzero_rational(rng));
    else
      c.add_gate(o < 6 ? GateOp::Add : GateOp::Mul, pick(rng), pick(rng));
  }
  c.outputs.push_back(c.size() - 1);
  return c;
}

// (x1 - r) * (h - h(p0)): vanishes on the hyperplane x1 = r and at p0.
inline Circuit with_known_zeros(const Circuit& h, const std::map<std::string, Rational>& p0, const Rational& r) {
  Circuit c = h;
  c.outputs.clear();
  std::size_t x1 = 0;
  while (!(c.gates[x1].op == GateOp::Input && c.gates[x1].name == "x1")) ++x1;
  std::size_t shift = c.add_const(-eval_circuit(h, p0));
  std::size_t h0 = c.add_gate(GateOp::Add, h.outputs.front(), shift);
  std::size_t mr = c.add_const(-r);
  std::size_t lin = c.add_gate(GateOp::Add, x1, mr);
  c.outputs.push_back(c.add_gate(GateOp::Mul, lin, h0));
  return c;
}

// Random formula tree with at most `maxGates` gates (fan-out one everywhere).
inline Circuit random_formula(std::mt19937_64& rng, unsigned nvars, unsigned maxGates) {
  Circuit c;
  unsigned leaves = std::uniform_int_distribution<unsigned>(1, (maxGates + 1) / 2)(rng);
  std::function<std::size_t(unsigned)> build = [&](unsigned l) -> std::size_t {
    if (l == 1) {
      if (std::uniform_int_distribution<int>(0, 3)(rng) == 0) return c.add_const(nonzero_rational(rng));
      return c.add_input("x" + std::to_string(std::uniform_int_distribution<unsigned>(1, nvars)(rng)));
    }
    unsigned left = std::uniform_int_distribution<unsigned>(1, l - 1)(rng);
    std::size_t a = build(left);
    std::size_t b = build(l - left);
    return c.add_gate(std::uniform_int_distribution<int>(0, 1)(rng) ? GateOp::Add : GateOp::Mul, a, b);
  };
  c.outputs.push_back(build(leaves));
  return c;
}

// Random monotone circuit over x1..xn with `gates` and/or gates after the inputs.
inline Circuit random_monotone(std::mt19937_64& rng, unsigned n, unsigned gates) {
  Circuit c;
  for (const auto& name : var_names(n)) c.add_input(name);
  for (unsigned k = 0; k < gates; ++k) {
    std::uniform_int_distribution<std::size_t> pick(0, c.size() - 1);
    c.add_gate(std::uniform_int_distribution<int>(0, 1)(rng) ? GateOp::And : GateOp::Or, pick(rng), pick(rng));
  }
  c.outputs.push_back(c.size() - 1);
  return c;
}

inline std::vector<oracle::MonoGate> to_oracle(const Circuit& c) {
  std::vector<oracle::MonoGate> g;
  for (const auto& x : c.gates) {
    if (x.op == GateOp::Input)
      g.push_back({'i', static_cast<unsigned>(std::stoul(x.name.substr(1))), 0, 0});
    else
      g.push_back({x.op == GateOp::And ? '&' : '|', 0, x.a, x.b});
  }
  return g;
}

// FinSet diagram as plain sizes and tables, vertices renumbered in ascending order.
inline oracle::SetDiagram to_oracle(const catc::Diagram<catc::FinSet>& d, std::vector<catc::VertexId>& order) {
  oracle::SetDiagram s;
  order = d.vertex_list();
  std::map<catc::VertexId, std::size_t> pos;
  for (std::size_t i = 0; i < order.size(); ++i) {
    pos[order[i]] = i;
    s.sizes.push_back(d.obj(order[i]).size());
  }
  for (const auto& e : d.graph.edges()) s.arrows.push_back({pos[e.src], pos[e.tgt], d.mor(e.id).table});
  return s;
}

}  // namespace support
