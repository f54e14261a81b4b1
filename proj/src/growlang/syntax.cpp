#include "growlang/syntax.hpp"

#include <cctype>
#include <charconv>

#include "xdt/core.hpp"

namespace growlang {
namespace {

enum class Tok { Ident, Integer, Lambda, Dot, LParen, RParen, Comma, DColon, Assign, Let, In, TyInt, Arrow, Times, End };

std::string tok_text(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Integer: return "integer";
    case Tok::Lambda: return "'\\'";
    case Tok::Dot: return "'.'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Comma: return "','";
    case Tok::DColon: return "'::'";
    case Tok::Assign: return "':='";
    case Tok::Let: return "'let'";
    case Tok::In: return "'in'";
    case Tok::TyInt: return "'Int'";
    case Tok::Arrow: return "'->'";
    case Tok::Times: return "'*'";
    case Tok::End: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind = Tok::End;
  std::string text;
  Pos pos;
};

struct Failure {
  SyntaxError error;
};

bool ident_start(char c) { return std::islower(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      Token t;
      t.pos = {line_, col_};
      if (i_ >= src_.size()) {
        out.push_back(t);
        return out;
      }
      t.kind = scan(t.text);
      out.push_back(std::move(t));
    }
  }

 private:
  bool at(std::string_view s) const { return src_.substr(i_, s.size()) == s; }

  void advance(std::size_t n) {
    for (std::size_t k = 0; k < n && i_ < src_.size(); ++k) {
      const unsigned char c = static_cast<unsigned char>(src_[i_++]);
      if (c == '\n') {
        ++line_;
        col_ = 1;
      } else if ((c & 0xC0) != 0x80) {
        ++col_;
      }
    }
  }

  void skip_space() {
    while (i_ < src_.size()) {
      if (std::isspace(static_cast<unsigned char>(src_[i_]))) {
        advance(1);
      } else if (at("--")) {
        while (i_ < src_.size() && src_[i_] != '\n') advance(1);
      } else {
        return;
      }
    }
  }

  [[noreturn]] void fail(const std::string& msg) { throw Failure{{line_, col_, msg}}; }

  Tok scan(std::string& text) {
    static const std::pair<std::string_view, Tok> symbols[] = {
        {"λ", Tok::Lambda}, {"\\", Tok::Lambda}, {"→", Tok::Arrow}, {"->", Tok::Arrow}, {"×", Tok::Times},
        {"*", Tok::Times},  {"::", Tok::DColon}, {":=", Tok::Assign}, {".", Tok::Dot}, {"(", Tok::LParen},
        {")", Tok::RParen}, {",", Tok::Comma},
    };
    for (const auto& [s, k] : symbols) {
      if (at(s)) {
        text = s;
        advance(s.size());
        return k;
      }
    }
    const char c = src_[i_];
    const bool negative = c == '-' && i_ + 1 < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i_ + 1]));
    if (negative || std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i_ + 1;
      while (j < src_.size() && std::isdigit(static_cast<unsigned char>(src_[j]))) ++j;
      text = src_.substr(i_, j - i_);
      std::int64_t v = 0;
      auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
      if (ec != std::errc() || p != text.data() + text.size()) fail("integer literal out of range: " + text);
      advance(j - i_);
      return Tok::Integer;
    }
    if (ident_start(c) || std::isupper(static_cast<unsigned char>(c))) {
      std::size_t j = i_ + 1;
      while (j < src_.size() && ident_char(src_[j])) ++j;
      text = src_.substr(i_, j - i_);
      advance(j - i_);
      if (text == "let") return Tok::Let;
      if (text == "in") return Tok::In;
      if (text == "Int") return Tok::TyInt;
      if (!ident_start(text[0])) fail("unknown type or name '" + text + "'");
      return Tok::Ident;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view src_;
  std::size_t i_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)), b_(plain_descriptor()) {}

  NodePtr whole_exp() { return finish(exp()); }
  NodePtr whole_dec() { return finish(dec()); }
  Ty whole_ty() { return finish(type()); }

 private:
  template <class T>
  T finish(T v) {
    expect(Tok::End);
    return v;
  }

  const Token& peek() const { return toks_[k_]; }
  bool is(Tok t) const { return peek().kind == t; }
  Token take() { return toks_[k_ < toks_.size() - 1 ? k_++ : k_]; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw Failure{{peek().pos.line, peek().pos.column, msg}};
  }

  Token expect(Tok t) {
    if (!is(t)) fail("expected " + tok_text(t) + ", found " + describe(peek()));
    return take();
  }

  static std::string describe(const Token& t) {
    if (t.kind == Tok::End) return tok_text(t.kind);
    return "'" + t.text + "'";
  }

  static NodePtr at(NodePtr n, Pos p) {
    return Node::make(n->descriptor(), n->cls(), n->ctor(), n->ext(), n->fields(), p);
  }

  NodePtr exp() {
    const Pos p = peek().pos;
    NodePtr m = exp0();
    if (!is(Tok::DColon)) return m;
    take();
    return at(b_.ann(m, type()), p);
  }

  NodePtr exp0() {
    const Pos p = peek().pos;
    if (is(Tok::Lambda)) {
      take();
      std::string x = expect(Tok::Ident).text;
      expect(Tok::Dot);
      return at(b_.abs(std::move(x), exp()), p);
    }
    if (is(Tok::Let)) {
      take();
      NodePtr d = dec();
      expect(Tok::In);
      return at(b_.let(d, exp()), p);
    }
    NodePtr l = atom();
    while (starts_atom()) l = at(b_.app(l, atom()), p);
    return l;
  }

  bool starts_atom() const { return is(Tok::Integer) || is(Tok::Ident) || is(Tok::LParen); }

  NodePtr atom() {
    const Pos p = peek().pos;
    if (is(Tok::Integer)) {
      std::int64_t v = 0;
      const std::string t = take().text;
      std::from_chars(t.data(), t.data() + t.size(), v);
      return at(b_.lit(v), p);
    }
    if (is(Tok::Ident)) return at(b_.var(take().text), p);
    if (is(Tok::LParen)) {
      take();
      NodePtr m = exp();
      if (is(Tok::Comma)) {
        take();
        NodePtr n = exp();
        expect(Tok::RParen);
        return at(b_.tup(m, n), p);
      }
      expect(Tok::RParen);
      return m;
    }
    fail("expected an expression, found " + describe(peek()));
  }

  NodePtr dec() {
    const Pos p = peek().pos;
    if (is(Tok::LParen)) {
      take();
      std::string x = expect(Tok::Ident).text;
      expect(Tok::Comma);
      std::string y = expect(Tok::Ident).text;
      expect(Tok::RParen);
      expect(Tok::Assign);
      return at(b_.prj(std::move(x), std::move(y), exp()), p);
    }
    std::string x = expect(Tok::Ident).text;
    expect(Tok::Assign);
    return at(b_.val(std::move(x), exp()), p);
  }

  Ty type() {
    Ty a = tatom();
    if (is(Tok::Arrow)) {
      take();
      return Ty::arrow(a, type());
    }
    if (is(Tok::Times)) {
      take();
      return Ty::prod(a, type());
    }
    return a;
  }

  Ty tatom() {
    if (is(Tok::TyInt)) {
      take();
      return Ty::int_();
    }
    if (is(Tok::LParen)) {
      take();
      Ty t = type();
      expect(Tok::RParen);
      return t;
    }
    fail("expected a type, found " + describe(peek()));
  }

  std::vector<Token> toks_;
  std::size_t k_ = 0;
  Builder b_;
};

template <class T, class F>
Parsed<T> run(std::string_view text, F&& f) {
  Parsed<T> out;
  try {
    Parser p(Lexer(text).run());
    out.value = f(p);
  } catch (const Failure& e) {
    out.errors.push_back(e.error);
  }
  return out;
}

std::string paren(const std::string& s) { return "(" + s + ")"; }

PrintHandlers make_default() {
  PrintHandlers h;
  h.exp = [](const Node& n, const PrintHandlers& hs) -> std::string {
    if (n.ctor() == "Tup") return "(" + print_exp(n.node(0), hs) + " , " + print_exp(n.node(1), hs) + ")";
    throw xdt::InvalidInput("no printer for expression constructor " + n.ctor());
  };
  h.dec = [](const Node& n, const PrintHandlers& hs) -> std::string {
    if (n.ctor() == "Prj") return "(" + n.name(0) + " , " + n.name(1) + ") := " + print_exp(n.node(2), hs);
    throw xdt::InvalidInput("no printer for declaration constructor " + n.ctor());
  };
  h.ty = [](const Ty& t, const PrintHandlers& hs) -> std::string {
    if (t.is_prod()) return paren(print_ty(t.left(), hs)) + " × " + print_ty(t.right(), hs);
    throw xdt::InvalidInput("no printer for this type");
  };
  return h;
}

template <class Fn, class... A>
std::string delegate(const Fn& fn, const char* what, const A&... args) {
  if (!fn) throw xdt::InvalidInput(std::string("no print handler for ") + what);
  return fn(args...);
}

}  // namespace

std::string format_error(const SyntaxError& e) {
  return std::to_string(e.line) + ":" + std::to_string(e.column) + ": " + e.message;
}

Parsed<NodePtr> parse_exp(std::string_view text) {
  return run<NodePtr>(text, [](Parser& p) { return p.whole_exp(); });
}

Parsed<NodePtr> parse_dec(std::string_view text) {
  return run<NodePtr>(text, [](Parser& p) { return p.whole_dec(); });
}

Parsed<Ty> parse_ty(std::string_view text) {
  return run<Ty>(text, [](Parser& p) { return p.whole_ty(); });
}

const PrintHandlers& default_handlers() {
  static const PrintHandlers h = make_default();
  return h;
}

std::string print_ty(const Ty& t, const PrintHandlers& h) {
  switch (t.kind()) {
    case Ty::Kind::Int: return "Int";
    case Ty::Kind::Arrow: return paren(print_ty(t.left(), h)) + " → " + print_ty(t.right(), h);
    case Ty::Kind::Prod: return delegate(h.ty, "types", t, h);
  }
  return "?";
}

std::string print_typ(const Node& n, const PrintHandlers& h) { return print_ty(to_ty(n), h); }

std::string print_exp(const Node& n, const PrintHandlers& h) {
  if (n.cls() != Cls::Exp) throw xdt::InvalidInput("print_exp needs an expression, got " + n.ctor());
  if (n.is_new()) return delegate(h.exp, "expressions", n, h);
  const std::string& c = n.ctor();
  if (c == "Lit") return std::to_string(n.integer(0));
  if (c == "Var") return n.name(0);
  if (c == "Ann") return paren(print_exp(n.node(0), h)) + " :: " + paren(print_ty(n.type(1), h));
  if (c == "Abs") return "λ" + n.name(0) + "." + print_exp(n.node(1), h);
  if (c == "App") return paren(print_exp(n.node(0), h)) + " " + paren(print_exp(n.node(1), h));
  if (c == "Let") return "let " + print_dec(n.node(0), h) + " in " + print_exp(n.node(1), h);
  throw xdt::InvalidInput("unknown expression constructor " + c);
}

std::string print_dec(const Node& n, const PrintHandlers& h) {
  if (n.cls() != Cls::Dec) throw xdt::InvalidInput("print_dec needs a declaration, got " + n.ctor());
  if (n.is_new()) return delegate(h.dec, "declarations", n, h);
  if (n.ctor() == "Val") return n.name(0) + " := " + print_exp(n.node(1), h);
  throw xdt::InvalidInput("unknown declaration constructor " + n.ctor());
}

}  // namespace growlang
