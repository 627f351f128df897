#include "segrekit/parser.hpp"

#include <cctype>

namespace segrekit {

namespace {

enum class Tok { End, Int, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  int line = 1, col = 1;
};

class Lexer {
public:
  explicit Lexer(const std::string &src) : src_(src) { advance(); }

  const Token &peek() const { return cur_; }
  Token take() {
    Token t = cur_;
    advance();
    return t;
  }

private:
  void advance() {
    while (pos_ < src_.size() &&
           std::isspace(static_cast<unsigned char>(src_[pos_])))
      bump();
    cur_ = Token{};
    cur_.line = line_;
    cur_.col = col_;
    if (pos_ >= src_.size()) return;
    char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      cur_.kind = Tok::Int;
      while (pos_ < src_.size() &&
             std::isdigit(static_cast<unsigned char>(src_[pos_])))
        cur_.text += src_[pos_], bump();
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      cur_.kind = Tok::Ident;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
              src_[pos_] == '_'))
        cur_.text += src_[pos_], bump();
      return;
    }
    switch (c) {
    case '+': cur_.kind = Tok::Plus; break;
    case '-': cur_.kind = Tok::Minus; break;
    case '*': cur_.kind = Tok::Star; break;
    case '/': cur_.kind = Tok::Slash; break;
    case '^': cur_.kind = Tok::Caret; break;
    case '(': cur_.kind = Tok::LParen; break;
    case ')': cur_.kind = Tok::RParen; break;
    default:
      throw ParseError(line_, col_, std::string("unexpected character '") + c +
                                        "'");
    }
    cur_.text = c;
    bump();
  }

  void bump() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  const std::string &src_;
  size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token cur_;
};

Rat factorial(int n) {
  BigInt f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return Rat(f);
}

class Parser {
public:
  Parser(UniversePtr u, const std::string &text, const ParseOptions &opts)
      : uni_(std::move(u)), lex_(text), opts_(opts) {}

  MultiPoly run() {
    MultiPoly p = expr();
    const Token &t = lex_.peek();
    if (t.kind != Tok::End)
      throw ParseError(t.line, t.col, "unexpected trailing input");
    return p;
  }

private:
  MultiPoly expr() {
    MultiPoly acc = term();
    while (true) {
      Tok k = lex_.peek().kind;
      if (k == Tok::Plus) {
        lex_.take();
        acc += term();
      } else if (k == Tok::Minus) {
        lex_.take();
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  MultiPoly term() {
    MultiPoly acc = factor();
    while (lex_.peek().kind == Tok::Star) {
      lex_.take();
      acc = acc * factor();
    }
    return acc;
  }

  MultiPoly factor() {
    MultiPoly base = atom();
    if (lex_.peek().kind == Tok::Caret) {
      lex_.take();
      Token e = expect(Tok::Int, "exponent");
      base = base.pow(std::stoi(e.text));
    }
    return base;
  }

  MultiPoly atom() {
    Token t = lex_.take();
    switch (t.kind) {
    case Tok::Minus:
      return -factor();
    case Tok::LParen: {
      MultiPoly p = expr();
      expect(Tok::RParen, "')'");
      return p;
    }
    case Tok::Int: {
      Rat num(BigInt(t.text));
      if (lex_.peek().kind == Tok::Slash) {
        lex_.take();
        Token d = expect(Tok::Int, "denominator");
        BigInt den(d.text);
        if (den == 0) throw ParseError(d.line, d.col, "zero denominator");
        num /= Rat(den);
      }
      return MultiPoly::constant(uni_, GaussRat(num));
    }
    case Tok::Ident: {
      if (t.text == "i") return MultiPoly::constant(uni_, GaussRat::unit_i());
      if (t.text == "conj") {
        expect(Tok::LParen, "'('");
        MultiPoly p = expr();
        expect(Tok::RParen, "')'");
        return p.conjugate();
      }
      if (t.text == "sin") {
        if (opts_.trunc_order < 0)
          throw ParseError(t.line, t.col,
                           "sin(...) is only allowed in truncated map "
                           "components");
        expect(Tok::LParen, "'('");
        MultiPoly p = expr();
        expect(Tok::RParen, "')'");
        return expand_sin(p, t);
      }
      auto v = uni_->find(t.text);
      if (!v) throw ParseError(t.line, t.col, "unknown variable: " + t.text);
      return MultiPoly::variable(uni_, *v);
    }
    default:
      throw ParseError(t.line, t.col, "expected a value");
    }
  }

  MultiPoly expand_sin(const MultiPoly &arg, const Token &at) {
    Mono one(uni_->size(), 0);
    if (arg.terms().count(one))
      throw ParseError(at.line, at.col,
                       "sin argument must vanish at the origin");
    int n = opts_.trunc_order;
    MultiPoly x = arg.truncate(n);
    MultiPoly x2 = (x * x).truncate(n);
    MultiPoly acc = x;
    MultiPoly pw = x; // x^(2k+1), truncated
    for (int k = 1; 2 * k + 1 <= n; ++k) {
      pw = (pw * x2).truncate(n);
      if (pw.is_zero()) break;
      Rat c = Rat(1) / factorial(2 * k + 1);
      if (k % 2) c = -c;
      MultiPoly piece = pw;
      piece.scale(GaussRat(c));
      acc += piece;
    }
    return acc;
  }

  Token expect(Tok k, const std::string &what) {
    Token t = lex_.take();
    if (t.kind != k)
      throw ParseError(t.line, t.col, "expected " + what);
    return t;
  }

  UniversePtr uni_;
  Lexer lex_;
  ParseOptions opts_;
};

} // namespace

MultiPoly parse_poly(const UniversePtr &u, const std::string &text,
                     const ParseOptions &opts) {
  return Parser(u, text, opts).run();
}

} // namespace segrekit
