#include "catc/script.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace catc {

namespace {

struct Token {
  std::string text;
  int column;  // 1-based
};

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

Token trim(const std::string& s, int col) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return {s.substr(b, e - b), col + static_cast<int>(b)};
}

// Split on commas outside parentheses.
std::vector<Token> split_top(const std::string& s, int col, int line) {
  std::vector<Token> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || (s[i] == ',' && depth == 0)) {
      out.push_back(trim(s.substr(start, i - start), col + static_cast<int>(start)));
      start = i + 1;
      continue;
    }
    if (s[i] == '(') ++depth;
    if (s[i] == ')' && --depth < 0) throw ParseError(line, col + static_cast<int>(i), "unbalanced ')'");
  }
  if (depth != 0) throw ParseError(line, col + static_cast<int>(s.size()), "unbalanced '('");
  return out;
}

bool is_ident(const std::string& s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char ch) { return std::isalnum(ch) || ch == '_'; });
}

bool is_ref(const std::string& s) {
  if (!s.empty() && s.back() == '\'') return is_ident(s.substr(0, s.size() - 1));
  return is_ident(s);
}

std::vector<std::string> lines_of(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == '\n') {
      if (!cur.empty() && cur.back() == '\r') cur.pop_back();
      out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

}  // namespace

Computation parse_script(std::string_view text) {
  Computation c;
  std::optional<ComputationKind> declared;
  bool sawStep = false, sawLim = false, sawColim = false;
  std::map<std::string, VertexId> bindings;
  std::set<std::string> ids;
  std::uint32_t next = 0;

  auto lines = lines_of(text);
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    const int line = static_cast<int>(ln + 1);
    Token t = trim(strip_comment(lines[ln]), 1);
    if (t.text.empty()) continue;

    if (t.text[0] == '!') {
      std::istringstream in(t.text.substr(1));
      std::string word;
      in >> word;
      if (word == "limit" || word == "colimit" || word == "mixed") {
        if (declared || sawStep) throw ParseError(line, t.column, "kind header must appear once, before any step");
        std::string rest;
        if (in >> rest) throw ParseError(line, t.column, "unexpected text after header");
        declared = word == "limit" ? ComputationKind::Limit
                   : word == "colimit" ? ComputationKind::Colimit
                                       : ComputationKind::Mixed;
      } else if (word == "cost") {
        std::string name;
        long long k = -1;
        std::string rest;
        if (!(in >> name >> k) || k < 0 || (in >> rest)) throw ParseError(line, t.column, "expected `!cost <morphism> <k>`");
        c.costFn[name] = static_cast<std::uint64_t>(k);
      } else if (word == "diagram") {
        throw ParseError(line, t.column, "diagram literal is not a computation script");
      } else {
        throw ParseError(line, t.column, "unknown directive '!" + word + "'");
      }
      continue;
    }

    auto dot = t.text.find('.');
    if (dot == std::string::npos) throw ParseError(line, t.column, "expected `<id>. <step>`");
    std::string id = t.text.substr(0, dot);
    if (!is_ident(id)) throw ParseError(line, t.column, "invalid step identifier '" + id + "'");
    if (!ids.insert(id).second) throw Error(ErrorCode::RedefinedIdentifier, "line " + std::to_string(line) + ": step '" + id + "' defined twice");
    Token body = trim(t.text.substr(dot + 1), t.column + static_cast<int>(dot) + 1);
    if (body.text.empty()) throw ParseError(line, body.column, "missing step body");
    sawStep = true;

    auto resolve = [&](const Token& tok) {
      if (!is_ref(tok.text)) throw ParseError(line, tok.column, "invalid vertex reference '" + tok.text + "'");
      auto it = bindings.find(tok.text);
      if (it == bindings.end())
        throw Error(ErrorCode::UnknownIdentifier,
                    "line " + std::to_string(line) + ", column " + std::to_string(tok.column) + ": unknown vertex '" + tok.text + "'");
      return it->second;
    };

    Step st;
    st.id = id;
    bool isLim = body.text.rfind("lim(", 0) == 0;
    bool isColim = body.text.rfind("colim(", 0) == 0;
    if (isLim || isColim) {
      if (body.text.back() != ')') throw ParseError(line, body.column, "expected ')'");
      std::size_t open = body.text.find('(');
      std::string inner = body.text.substr(open + 1, body.text.size() - open - 2);
      Token innerTok = trim(inner, body.column + static_cast<int>(open) + 1);
      if (innerTok.text.empty()) throw ParseError(line, innerTok.column, "empty subdiagram");
      st.kind = isLim ? StepKind::Lim : StepKind::Colim;
      for (const auto& r : split_top(inner, body.column + static_cast<int>(open) + 1, line)) {
        if (r.text.empty()) throw ParseError(line, r.column, "empty vertex reference");
        st.over.insert(resolve(r));
      }
      (isLim ? sawLim : sawColim) = true;
      bindings[id] = VertexId{next++};
    } else {
      auto parts = split_top(body.text, body.column, line);
      if (parts.size() != 3) throw ParseError(line, body.column, "expected `source,morphism,target`");
      st.kind = StepKind::Basic;
      const Token& s = parts[0];
      const Token& m = parts[1];
      const Token& g = parts[2];
      if (m.text.empty() || std::any_of(m.text.begin(), m.text.end(), [](unsigned char ch) { return std::isspace(ch); }))
        throw ParseError(line, m.column, "invalid morphism name '" + m.text + "'");
      st.morph = m.text;
      VertexId sv;
      if (s.text == "_" || s.text == id) {
        st.src = VertexSpec::fresh();
        sv = VertexId{next++};
      } else {
        sv = resolve(s);
        st.src = VertexSpec::at(sv);
      }
      VertexId tv;
      if (g.text == "_" || g.text == id + "'") {
        st.tgt = VertexSpec::fresh();
        tv = VertexId{next++};
      } else if (g.text == id) {
        st.tgt = VertexSpec::loop();
        tv = sv;
      } else {
        tv = resolve(g);
        st.tgt = VertexSpec::at(tv);
      }
      bindings[id] = sv;
      bindings[id + "'"] = tv;
    }
    c.steps.push_back(std::move(st));
  }

  if (declared)
    c.kind = *declared;
  else
    c.kind = sawLim && sawColim ? ComputationKind::Mixed : sawColim ? ComputationKind::Colimit : ComputationKind::Limit;
  analyze(c);
  return c;
}

std::string print_script(const Computation& c) {
  Structure s = analyze(c);
  std::ostringstream out;
  out << '!' << kind_name(c.kind) << '\n';
  for (const auto& [name, k] : c.costFn) out << "!cost " << name << ' ' << k << '\n';
  for (const auto& st : c.steps) {
    out << st.id << ". ";
    if (st.kind == StepKind::Basic) {
      out << (st.src.kind == VertexSpec::Kind::Fresh ? std::string("_") : s.names.at(st.src.id)) << ',' << st.morph << ',';
      switch (st.tgt.kind) {
        case VertexSpec::Kind::Fresh: out << '_'; break;
        case VertexSpec::Kind::SourceLoop: out << st.id; break;
        case VertexSpec::Kind::Existing: out << s.names.at(st.tgt.id); break;
      }
    } else {
      out << (st.kind == StepKind::Lim ? "lim(" : "colim(");
      bool first = true;
      for (VertexId v : st.over) {
        if (!first) out << ',';
        first = false;
        out << s.names.at(v);
      }
      out << ')';
    }
    out << '\n';
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::DomainError, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Computation load_script(const std::string& path) { return parse_script(read_file(path)); }

bool is_diagram_literal(std::string_view text) {
  for (const auto& l : lines_of(text)) {
    Token t = trim(strip_comment(l), 1);
    if (t.text.empty()) continue;
    return t.text == "!diagram";
  }
  return false;
}

namespace {

// `head(a,b,...)` -> args; nullopt when the head differs.
std::optional<std::vector<std::string>> call_args(const std::string& s, const std::string& head) {
  if (s == head) return std::vector<std::string>{};
  if (s.size() < head.size() + 2 || s.compare(0, head.size() + 1, head + "(") != 0 || s.back() != ')')
    return std::nullopt;
  std::vector<std::string> out;
  for (const auto& t : split_top(s.substr(head.size() + 1, s.size() - head.size() - 2), 1, 0)) out.push_back(t.text);
  if (out.size() == 1 && out[0].empty()) out.clear();
  return out;
}

std::uint64_t parse_uint(const std::string& s, int line) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 9)
    throw ParseError(line, 1, "expected a nonnegative integer, got '" + s + "'");
  return std::stoull(s);
}

template <class C, class ObjFn, class MorFn>
Diagram<C> parse_literal(std::string_view text, ObjFn obj, MorFn mor) {
  Diagram<C> d;
  std::map<std::string, VertexId> names;
  std::uint32_t nextV = 0, nextE = 0;
  bool header = false;
  auto lines = lines_of(text);
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    const int line = static_cast<int>(ln + 1);
    Token t = trim(strip_comment(lines[ln]), 1);
    if (t.text.empty()) continue;
    if (!header) {
      if (t.text != "!diagram") throw ParseError(line, t.column, "expected `!diagram`");
      header = true;
      continue;
    }
    std::istringstream in(t.text);
    std::string tag;
    in >> tag;
    if (tag == "v") {
      std::string name, lit;
      if (!(in >> name >> lit) || !is_ident(name)) throw ParseError(line, t.column, "expected `v <name> <object>`");
      std::string rest;
      if (in >> rest) throw ParseError(line, t.column, "unexpected text after object");
      if (names.count(name)) throw Error(ErrorCode::RedefinedIdentifier, "vertex '" + name + "' defined twice");
      VertexId v{nextV++};
      names[name] = v;
      d.add_vertex(v, obj(lit, line), name);
    } else if (tag == "e") {
      std::string a, b, lit;
      if (!(in >> a >> b >> lit)) throw ParseError(line, t.column, "expected `e <src> <tgt> <morphism>`");
      std::string rest;
      if (in >> rest) throw ParseError(line, t.column, "unexpected text after morphism");
      auto ia = names.find(a), ib = names.find(b);
      if (ia == names.end() || ib == names.end()) throw Error(ErrorCode::UnknownIdentifier, "edge endpoint not declared");
      d.add_edge({EdgeId{nextE++}, ia->second, ib->second}, mor(lit, d.obj(ia->second), d.obj(ib->second), line));
    } else {
      throw ParseError(line, t.column, "expected `v` or `e` line");
    }
  }
  if (!header) throw ParseError(1, 1, "expected `!diagram`");
  return d;
}

}  // namespace

Diagram<FinSet> parse_finset_diagram(std::string_view text) {
  auto obj = [](const std::string& lit, int line) {
    auto a = call_args(lit, "set");
    if (!a || a->size() != 1) throw ParseError(line, 1, "expected set(n)");
    return FinSet::set_of_size(parse_uint((*a)[0], line));
  };
  auto mor = [](const std::string& lit, const FinSetObj& s, const FinSetObj& t, int line) {
    auto a = call_args(lit, "map");
    if (!a || a->size() != s.size()) throw ParseError(line, 1, "expected map with one entry per source element");
    std::vector<std::uint32_t> table;
    for (const auto& x : *a) {
      auto v = parse_uint(x, line);
      if (v >= t.size()) throw Error(ErrorCode::ObjectMismatch, "map value outside target");
      table.push_back(static_cast<std::uint32_t>(v));
    }
    return FinSet::make_map(s, t, std::move(table));
  };
  return parse_literal<FinSet>(text, obj, mor);
}

Diagram<VectQ> parse_vectq_diagram(std::string_view text) {
  auto obj = [](const std::string& lit, int line) {
    auto a = call_args(lit, "vect");
    if (!a || a->size() != 1) throw ParseError(line, 1, "expected vect(n)");
    return VectObj{parse_uint((*a)[0], line)};
  };
  auto mor = [](const std::string& lit, const VectObj& s, const VectObj& t, int line) {
    auto a = call_args(lit, "matrix");
    if (!a || a->size() < 2) throw ParseError(line, 1, "expected matrix(r,c,...)");
    auto r = parse_uint((*a)[0], line), cc = parse_uint((*a)[1], line);
    if (r != t.dim || cc != s.dim || a->size() != 2 + r * cc)
      throw Error(ErrorCode::DimensionMismatch, "matrix shape does not match its endpoints");
    std::vector<Rational> e;
    for (std::size_t i = 2; i < a->size(); ++i) {
      auto q = parse_rational((*a)[i]);
      if (!q) throw ParseError(line, 1, "bad rational '" + (*a)[i] + "'");
      e.push_back(*q);
    }
    return VectMor{QMatrix(r, cc, std::move(e))};
  };
  return parse_literal<VectQ>(text, obj, mor);
}

Diagram<BoolLattice> parse_bool_diagram(std::string_view text, const BoolLattice& cat) {
  auto obj = [&cat](const std::string& lit, int line) {
    if (lit == "empty") return cat.empty();
    if (lit == "full") return cat.full();
    if (auto a = call_args(lit, "z"); a && a->size() == 1) return cat.z(static_cast<unsigned>(parse_uint((*a)[0], line)));
    auto a = call_args(lit, "points");
    if (!a) throw ParseError(line, 1, "expected z(i), empty, full or points(...)");
    BoolLatticeObj o = cat.empty();
    for (const auto& b : *a) {
      if (b.size() != cat.n() || b.find_first_not_of("01") != std::string::npos)
        throw ParseError(line, 1, "point '" + b + "' is not a bitstring of length n");
      std::size_t p = 0;
      for (std::size_t i = 0; i < b.size(); ++i)
        if (b[i] == '1') p |= std::size_t{1} << i;
      o.set(p);
    }
    return o;
  };
  auto mor = [&cat](const std::string& lit, const BoolLatticeObj& s, const BoolLatticeObj& t, int line) {
    if (lit != "incl") throw ParseError(line, 1, "expected incl");
    return cat.inclusion(s, t);
  };
  return parse_literal<BoolLattice>(text, obj, mor);
}

}  // namespace catc
