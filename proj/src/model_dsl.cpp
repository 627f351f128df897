#include "segrekit/model_dsl.hpp"

#include "segrekit/parser.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace segrekit {

namespace {

std::string strip_comments(const std::string &text) {
  std::string out = text;
  bool in_comment = false;
  for (char &c : out) {
    if (c == '#') in_comment = true;
    if (c == '\n') in_comment = false;
    if (in_comment && c != '\n') c = ' ';
  }
  return out;
}

struct Cursor {
  const std::string &s;
  std::size_t pos = 0;
  int line = 1, col = 1;

  explicit Cursor(const std::string &text) : s(text) {}

  bool eof() const { return pos >= s.size(); }
  char peek() const { return eof() ? '\0' : s[pos]; }

  void advance() {
    if (eof()) return;
    if (s[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }

  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek())))
      advance();
  }

  [[noreturn]] void fail(const std::string &msg) const {
    throw ParseError(line, col, msg);
  }

  void expect_char(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    advance();
  }

  bool try_char(char c) {
    skip_ws();
    if (peek() != c) return false;
    advance();
    return true;
  }

  std::string ident() {
    skip_ws();
    if (!std::isalpha(static_cast<unsigned char>(peek())) && peek() != '_')
      fail("expected a name");
    std::string out;
    while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) ||
                      peek() == '_')) {
      out += peek();
      advance();
    }
    return out;
  }

  long integer() {
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      fail("expected an integer");
    long v = 0;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      advance();
    }
    return v;
  }

  Rat rational() {
    long num = integer();
    if (try_char('/')) {
      long den = integer();
      if (den == 0) fail("zero denominator");
      return Rat(num) / den;
    }
    return Rat(num);
  }
};

struct Fragment {
  std::string text;
  int line = 1, col = 1;
};

/// Raw expression text up to the closing ';' (consumed).
Fragment capture_expr(Cursor &c) {
  c.skip_ws();
  Fragment f;
  f.line = c.line;
  f.col = c.col;
  int depth = 0;
  std::size_t start = c.pos;
  while (!c.eof()) {
    char ch = c.peek();
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ';' && depth == 0) break;
    if (ch == '{' || ch == '}') c.fail("expected ';' to end the expression");
    c.advance();
  }
  if (c.eof()) c.fail("unterminated expression (missing ';')");
  f.text = c.s.substr(start, c.pos - start);
  c.advance(); // ';'
  return f;
}

std::string bare_message(const ParseError &e) {
  std::string w = e.what();
  std::string prefix = "parse error at " + std::to_string(e.line) + ":" +
                       std::to_string(e.col) + ": ";
  if (w.rfind(prefix, 0) == 0) return w.substr(prefix.size());
  return w;
}

MultiPoly parse_fragment(const UniversePtr &uni, const Fragment &f,
                         const ParseOptions &opts) {
  try {
    return parse_poly(uni, f.text, opts);
  } catch (const ParseError &e) {
    int line = f.line + e.line - 1;
    int col = (e.line == 1) ? f.col + e.col - 1 : e.col;
    throw ParseError(line, col, bare_message(e));
  }
}

bool mentions_sin(const std::string &text) {
  for (std::size_t i = 0; i + 3 <= text.size(); ++i) {
    if (text.compare(i, 3, "sin") != 0) continue;
    bool left_ok =
        i == 0 || (!std::isalnum(static_cast<unsigned char>(text[i - 1])) &&
                   text[i - 1] != '_');
    std::size_t j = i + 3;
    bool right_ok =
        j >= text.size() ||
        (!std::isalnum(static_cast<unsigned char>(text[j])) &&
         text[j] != '_');
    if (left_ok && right_ok) return true;
  }
  return false;
}

CRModel parse_model_block(Cursor &c) {
  std::string name = c.ident();
  c.expect_char('{');
  int n = -1, m = -1;
  std::vector<Rat> radius;
  std::vector<Fragment> eqs;
  UniversePtr uni;
  while (true) {
    if (c.try_char('}')) break;
    if (c.eof()) c.fail("unterminated model block");
    int kw_line = c.line, kw_col = c.col;
    std::string kw = c.ident();
    if (kw == "ambient") {
      n = static_cast<int>(c.integer());
      c.expect_char(';');
    } else if (kw == "crdim") {
      m = static_cast<int>(c.integer());
      c.expect_char(';');
    } else if (kw == "radius") {
      do {
        radius.push_back(c.rational());
      } while (c.try_char(','));
      c.expect_char(';');
    } else if (kw == "eq") {
      if (n < 0 || m < 0)
        throw ParseError(kw_line, kw_col,
                         "ambient and crdim must come before eq");
      if (!uni) uni = VarUniverse::make(n, n, 2);
      std::string lhs = c.ident();
      std::string want = "z" + std::to_string(m + 1 + eqs.size());
      if (lhs != want)
        c.fail("expected equation for " + want + " (normal coordinates in "
               "order), got " + lhs);
      c.expect_char('=');
      eqs.push_back(capture_expr(c));
    } else {
      throw ParseError(kw_line, kw_col,
                       "unknown model clause '" + kw + "'");
    }
  }
  if (n < 0 || m < 0)
    throw ValidationError("model '" + name + "': ambient and crdim required");
  if (!uni) uni = VarUniverse::make(n, n, 2);
  std::vector<MultiPoly> theta;
  for (const Fragment &f : eqs)
    theta.push_back(parse_fragment(uni, f, ParseOptions{}));
  if (radius.empty()) radius.assign(1, Rat(1));
  return make_model(name, n, m, std::move(theta), std::move(radius));
}

struct MapBlock {
  std::string name, src, tgt;
  std::vector<Fragment> components;
  int trunc = -1;
  bool has_trunc = false;
};

MapBlock parse_map_block(Cursor &c) {
  MapBlock b;
  b.name = c.ident();
  c.expect_char(':');
  b.src = c.ident();
  c.expect_char('-');
  if (c.peek() != '>') c.fail("expected '->'");
  c.advance();
  b.tgt = c.ident();
  c.expect_char('{');
  while (true) {
    if (c.try_char('}')) break;
    if (c.eof()) c.fail("unterminated map block");
    // Peek one word to recognize the trunc clause.
    std::size_t save_pos = c.pos;
    int save_line = c.line, save_col = c.col;
    bool is_trunc = false;
    if (std::isalpha(static_cast<unsigned char>(c.peek()))) {
      std::string kw = c.ident();
      if (kw == "trunc") {
        b.trunc = static_cast<int>(c.integer());
        b.has_trunc = true;
        c.expect_char(';');
        is_trunc = true;
      }
    }
    if (!is_trunc) {
      c.pos = save_pos;
      c.line = save_line;
      c.col = save_col;
      b.components.push_back(capture_expr(c));
    }
  }
  return b;
}

std::string radius_clause(const CRModel &M) {
  bool all_same = true;
  for (const Rat &r : M.radius)
    if (r != M.radius.front()) all_same = false;
  std::ostringstream os;
  os << "  radius ";
  if (all_same) {
    os << rat_str(M.radius.front());
  } else {
    for (std::size_t k = 0; k < M.radius.size(); ++k) {
      if (k) os << ", ";
      os << rat_str(M.radius[k]);
    }
  }
  os << ";\n";
  return os.str();
}

std::string emit_model(const CRModel &M) {
  std::ostringstream os;
  os << "model " << M.name << " {\n";
  os << "  ambient " << M.n << ";\n";
  os << "  crdim " << M.m << ";\n";
  for (int j = 0; j < M.d; ++j)
    os << "  eq z" << (M.m + 1 + j) << " = " << M.theta[j].str() << ";\n";
  os << radius_clause(M);
  os << "}\n";
  return os.str();
}

} // namespace

Problem parse_problem(const std::string &text, int default_trunc) {
  std::string stripped = strip_comments(text);
  Cursor c(stripped);
  std::map<std::string, CRModel> models;
  std::vector<MapBlock> maps;
  while (true) {
    c.skip_ws();
    if (c.eof()) break;
    int kw_line = c.line, kw_col = c.col;
    std::string kw = c.ident();
    if (kw == "model") {
      CRModel M = parse_model_block(c);
      if (!models.emplace(M.name, M).second)
        throw ValidationError("duplicate model '" + M.name + "'");
    } else if (kw == "map") {
      maps.push_back(parse_map_block(c));
    } else {
      throw ParseError(kw_line, kw_col,
                       "expected 'model' or 'map', got '" + kw + "'");
    }
  }
  if (maps.size() != 1)
    throw ValidationError("expected exactly one map block, found " +
                          std::to_string(maps.size()));
  const MapBlock &mb = maps.front();
  auto src = models.find(mb.src);
  if (src == models.end())
    throw ValidationError("map '" + mb.name + "': unknown source model '" +
                          mb.src + "'");
  auto tgt = models.find(mb.tgt);
  if (tgt == models.end())
    throw ValidationError("map '" + mb.name + "': unknown target model '" +
                          mb.tgt + "'");

  bool uses_sin = false;
  for (const Fragment &f : mb.components)
    if (mentions_sin(f.text)) uses_sin = true;
  int trunc = mb.has_trunc ? mb.trunc : (uses_sin ? default_trunc : -1);

  UniversePtr uni = problem_universe(src->second, tgt->second);
  ParseOptions opts;
  opts.trunc_order = trunc;
  std::vector<MultiPoly> comps;
  for (const Fragment &f : mb.components)
    comps.push_back(parse_fragment(uni, f, opts));
  return assemble_problem(src->second, tgt->second, uni, std::move(comps),
                          mb.name, trunc);
}

Problem load_problem(const std::string &path, int default_trunc) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str(), default_trunc);
}

std::string emit_problem(const Problem &P) {
  std::ostringstream os;
  os << emit_model(P.M);
  if (P.Mp.name != P.M.name) os << "\n" << emit_model(P.Mp);
  os << "\nmap " << P.map_name << " : " << P.M.name << " -> " << P.Mp.name
     << " {\n";
  for (const MultiPoly &comp : P.f) os << "  " << comp.str() << ";\n";
  if (P.truncated()) os << "  trunc " << P.trunc_order << ";\n";
  os << "}\n";
  return os.str();
}

} // namespace segrekit
