#include "catc/circuit.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <sstream>

#include "catc/error.hpp"

namespace catc {

std::size_t Circuit::add_input(const std::string& name) {
  Gate g;
  g.id = "g" + std::to_string(gates.size() + 1);
  g.op = GateOp::Input;
  g.name = name;
  gates.push_back(std::move(g));
  return gates.size() - 1;
}

std::size_t Circuit::add_const(const Rational& c) {
  Gate g;
  g.id = "g" + std::to_string(gates.size() + 1);
  g.op = GateOp::Const;
  g.value = c;
  gates.push_back(std::move(g));
  return gates.size() - 1;
}

std::size_t Circuit::add_gate(GateOp op, std::size_t a, std::size_t b) {
  if (a >= gates.size() || b >= gates.size()) fail(ErrorCode::UseBeforeDefinition, "operand after its consumer");
  Gate g;
  g.id = "g" + std::to_string(gates.size() + 1);
  g.op = op;
  g.a = a;
  g.b = b;
  gates.push_back(std::move(g));
  return gates.size() - 1;
}

std::vector<std::string> Circuit::input_names() const {
  std::vector<std::string> out;
  for (const auto& g : gates)
    if (g.op == GateOp::Input && std::find(out.begin(), out.end(), g.name) == out.end()) out.push_back(g.name);
  return out;
}

namespace {

bool is_name(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char ch) { return std::isalnum(ch) || ch == '_'; });
}

struct RawGate {
  std::string id;
  std::string op;
  std::vector<std::string> args;
  int line;
};

Circuit parse_circuit(std::string_view text, bool monotone) {
  std::vector<RawGate> raw;
  std::vector<std::pair<std::string, int>> outputs;
  bool sawOutput = false;
  std::istringstream in{std::string(text)};
  std::string lineText;
  int line = 0;
  while (std::getline(in, lineText)) {
    ++line;
    if (auto p = lineText.find('#'); p != std::string::npos) lineText.resize(p);
    for (char& ch : lineText)
      if (ch == ',') ch = ' ';
    std::istringstream ls(lineText);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (sawOutput) throw ParseError(line, 1, "nothing may follow the output line");
    if (tok[0] == "output") {
      if (tok.size() < 2) throw ParseError(line, 1, "output needs at least one gate");
      for (std::size_t i = 1; i < tok.size(); ++i) outputs.emplace_back(tok[i], line);
      sawOutput = true;
      continue;
    }
    if (tok.size() < 3 || tok[1] != "=" || !is_name(tok[0])) throw ParseError(line, 1, "expected `<gate> = <op> ...`");
    raw.push_back({tok[0], tok[2], {tok.begin() + 3, tok.end()}, line});
  }
  if (raw.empty()) throw ParseError(line + 1, 1, "no gates");
  if (!sawOutput) throw ParseError(line + 1, 1, "missing output line");

  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < raw.size(); ++i)
    if (!index.emplace(raw[i].id, i).second)
      fail(ErrorCode::RedefinedIdentifier, "line " + std::to_string(raw[i].line) + ": gate " + raw[i].id + " defined twice");

  // Whether gate `from` reaches gate `to` through operand references.
  std::function<bool(std::size_t, std::size_t, std::set<std::size_t>&)> reaches =
      [&](std::size_t from, std::size_t to, std::set<std::size_t>& seen) {
        if (from == to) return true;
        if (!seen.insert(from).second) return false;
        const auto& g = raw[from];
        if (g.op == "input" || g.op == "const") return false;
        for (const auto& a : g.args) {
          auto it = index.find(a);
          if (it != index.end() && reaches(it->second, to, seen)) return true;
        }
        return false;
      };

  Circuit c;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const RawGate& r = raw[i];
    Gate g;
    g.id = r.id;
    auto operand = [&](const std::string& a) {
      auto it = index.find(a);
      if (it == index.end()) fail(ErrorCode::UnknownIdentifier, "line " + std::to_string(r.line) + ": unknown gate " + a);
      if (it->second >= i) {
        std::set<std::size_t> seen;
        if (it->second == i || reaches(it->second, i, seen))
          fail(ErrorCode::CycleDetected, "line " + std::to_string(r.line) + ": gate " + r.id + " depends on itself");
        fail(ErrorCode::UseBeforeDefinition, "line " + std::to_string(r.line) + ": gate " + a + " used before definition");
      }
      return it->second;
    };
    if (r.op == "input") {
      if (r.args.size() != 1 || !is_name(r.args[0])) throw ParseError(r.line, 1, "expected `input <name>`");
      g.op = GateOp::Input;
      g.name = r.args[0];
    } else if (r.op == "const" && !monotone) {
      if (r.args.size() != 1) throw ParseError(r.line, 1, "expected `const <p/q>`");
      auto v = parse_rational(r.args[0]);
      if (!v) throw ParseError(r.line, 1, "bad rational constant '" + r.args[0] + "'");
      g.op = GateOp::Const;
      g.value = *v;
    } else {
      static const std::map<std::string, GateOp> arith{{"add", GateOp::Add}, {"mul", GateOp::Mul}};
      static const std::map<std::string, GateOp> mono{{"and", GateOp::And}, {"or", GateOp::Or}};
      const auto& table = monotone ? mono : arith;
      auto it = table.find(r.op);
      if (it == table.end()) throw ParseError(r.line, 1, "unknown operation '" + r.op + "'");
      if (r.args.size() != 2) throw ParseError(r.line, 1, "binary operation needs two operands");
      g.op = it->second;
      g.a = operand(r.args[0]);
      g.b = operand(r.args[1]);
    }
    c.gates.push_back(std::move(g));
  }
  for (const auto& [name, ln] : outputs) {
    auto it = index.find(name);
    if (it == index.end()) fail(ErrorCode::UnknownIdentifier, "line " + std::to_string(ln) + ": unknown output gate " + name);
    c.outputs.push_back(it->second);
  }
  return c;
}

}  // namespace

Circuit parse_slp(std::string_view text) { return parse_circuit(text, false); }
Circuit parse_mono(std::string_view text) { return parse_circuit(text, true); }

std::string print_circuit(const Circuit& c) {
  std::ostringstream out;
  for (const auto& g : c.gates) {
    out << g.id << " = ";
    switch (g.op) {
      case GateOp::Input: out << "input " << g.name; break;
      case GateOp::Const: out << "const " << to_string(g.value); break;
      case GateOp::Add: out << "add " << c.gates[g.a].id << ' ' << c.gates[g.b].id; break;
      case GateOp::Mul: out << "mul " << c.gates[g.a].id << ' ' << c.gates[g.b].id; break;
      case GateOp::And: out << "and " << c.gates[g.a].id << ' ' << c.gates[g.b].id; break;
      case GateOp::Or: out << "or " << c.gates[g.a].id << ' ' << c.gates[g.b].id; break;
    }
    out << '\n';
  }
  out << "output";
  for (std::size_t i = 0; i < c.outputs.size(); ++i) out << (i ? ", " : " ") << c.gates[c.outputs[i]].id;
  out << '\n';
  return out.str();
}

namespace {
bool binary(GateOp op) { return op != GateOp::Input && op != GateOp::Const; }
}  // namespace

bool check_formula(const Circuit& c) {
  std::vector<std::set<std::size_t>> consumers(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!binary(c.gates[i].op)) continue;
    consumers[c.gates[i].a].insert(i);
    consumers[c.gates[i].b].insert(i);
  }
  std::set<std::size_t> outs(c.outputs.begin(), c.outputs.end());
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!outs.count(i) && consumers[i].size() > 1) return false;
  return true;
}

std::vector<Rational> evaluate(const Circuit& c, const std::map<std::string, Rational>& env) {
  std::vector<Rational> v(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Gate& g = c.gates[i];
    switch (g.op) {
      case GateOp::Input: {
        auto it = env.find(g.name);
        if (it == env.end()) fail(ErrorCode::VariableOutOfRange, "no value for input " + g.name);
        v[i] = it->second;
        break;
      }
      case GateOp::Const: v[i] = g.value; break;
      case GateOp::Add: v[i] = v[g.a] + v[g.b]; break;
      case GateOp::Mul: v[i] = v[g.a] * v[g.b]; break;
      default: fail(ErrorCode::DomainError, "monotone gate in an arithmetic circuit");
    }
  }
  return v;
}

std::vector<SparsePoly> expand(const Circuit& c, const Vars& vars) {
  std::vector<SparsePoly> p;
  p.reserve(c.size());
  for (const auto& g : c.gates) {
    switch (g.op) {
      case GateOp::Input: {
        auto it = std::find(vars->begin(), vars->end(), g.name);
        if (it == vars->end()) fail(ErrorCode::VariableOutOfRange, "input " + g.name + " is not a ring variable");
        p.push_back(SparsePoly::variable(vars, static_cast<std::size_t>(it - vars->begin())));
        break;
      }
      case GateOp::Const: p.push_back(SparsePoly::constant(vars, g.value)); break;
      case GateOp::Add: p.push_back(p[g.a] + p[g.b]); break;
      case GateOp::Mul: p.push_back(p[g.a] * p[g.b]); break;
      default: fail(ErrorCode::DomainError, "monotone gate in an arithmetic circuit");
    }
  }
  return p;
}

unsigned mono_input_index(const std::string& name) {
  if (name.size() < 2 || name[0] != 'x' || name.size() > 4) return 0;
  if (name.find_first_not_of("0123456789", 1) != std::string::npos || name[1] == '0') return 0;
  return static_cast<unsigned>(std::stoul(name.substr(1)));
}

std::vector<bool> evaluate_mono(const Circuit& c, std::uint64_t point) {
  std::vector<bool> v(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Gate& g = c.gates[i];
    switch (g.op) {
      case GateOp::Input: {
        unsigned k = mono_input_index(g.name);
        if (k == 0 || k > 63) fail(ErrorCode::VariableOutOfRange, "monotone input must be x1..x63, got " + g.name);
        v[i] = (point >> (k - 1)) & 1u;
        break;
      }
      case GateOp::And: v[i] = v[g.a] && v[g.b]; break;
      case GateOp::Or: v[i] = v[g.a] || v[g.b]; break;
      default: fail(ErrorCode::DomainError, "arithmetic gate in a monotone circuit");
    }
  }
  return v;
}

std::vector<bool> truth_table(const Circuit& c, unsigned n) {
  if (n == 0 || n > 20) fail(ErrorCode::DomainError, "truth tables need 1 <= n <= 20");
  if (c.outputs.empty()) fail(ErrorCode::DomainError, "circuit has no output");
  for (const auto& g : c.gates)
    if (g.op == GateOp::Input && mono_input_index(g.name) > n)
      fail(ErrorCode::VariableOutOfRange, "input " + g.name + " exceeds n = " + std::to_string(n));
  std::vector<bool> t(std::size_t{1} << n);
  for (std::size_t p = 0; p < t.size(); ++p) t[p] = evaluate_mono(c, p)[c.outputs.front()];
  return t;
}

}  // namespace catc
