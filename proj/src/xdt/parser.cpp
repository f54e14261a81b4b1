#include "xdt/parser.hpp"

#include <cctype>
#include <optional>

namespace xdt {
namespace {

enum class Tok {
  Upper,
  Lower,
  Integer,
  String,
  Wildcard,
  KwExtensible,
  KwData,
  KwExtends,
  KwBy,
  KwEmpty,
  KwPartial,
  Equals,
  Bar,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Comma,
  Oplus,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  SourceSpan span;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::End: return "end of input";
    case Tok::String: return "string literal";
    default: return "'" + t.text + "'";
  }
}

bool is_decl_start(Tok k) {
  return k == Tok::KwExtensible || k == Tok::KwData || k == Tok::KwPartial;
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run(std::vector<Diagnostic>& diags) {
    std::vector<Token> out;
    while (true) {
      skip_space_and_comments();
      if (pos_ >= text_.size()) {
        out.push_back(Token{Tok::End, "", span_from(pos_)});
        return out;
      }
      if (auto t = next(diags)) out.push_back(std::move(*t));
    }
  }

 private:
  SourceSpan span_from(std::size_t begin) const {
    SourceSpan s;
    s.begin = begin;
    s.end = pos_ < begin ? begin : pos_;
    s.line = line_at_begin_;
    s.column = col_at_begin_;
    return s;
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else if ((static_cast<unsigned char>(text_[pos_]) & 0xC0) != 0x80) {
      ++col_;
    }
    ++pos_;
  }

  void skip_space_and_comments() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '-') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  std::optional<Token> next(std::vector<Diagnostic>& diags) {
    const std::size_t begin = pos_;
    line_at_begin_ = line_;
    col_at_begin_ = col_;
    const char c = text_[pos_];
    auto single = [&](Tok k) {
      advance();
      return Token{k, std::string(text_.substr(begin, 1)), span_from(begin)};
    };

    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                     text_[pos_] == '_' || text_[pos_] == '\''))
        advance();
      std::string word(text_.substr(begin, pos_ - begin));
      Tok k = std::isupper(static_cast<unsigned char>(c)) ? Tok::Upper : Tok::Lower;
      if (word == "extensible") k = Tok::KwExtensible;
      else if (word == "data") k = Tok::KwData;
      else if (word == "extends") k = Tok::KwExtends;
      else if (word == "by") k = Tok::KwBy;
      else if (word == "empty") k = Tok::KwEmpty;
      else if (word == "partial") k = Tok::KwPartial;
      return Token{k, std::move(word), span_from(begin)};
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '-' && pos_ + 1 < text_.size() &&
         std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
      advance();
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) advance();
      return Token{Tok::Integer, std::string(text_.substr(begin, pos_ - begin)), span_from(begin)};
    }
    if (c == '"') {
      advance();
      std::string value;
      while (pos_ < text_.size() && text_[pos_] != '"' && text_[pos_] != '\n') {
        if (text_[pos_] == '\\' && pos_ + 1 < text_.size()) advance();
        value.push_back(text_[pos_]);
        advance();
      }
      if (pos_ >= text_.size() || text_[pos_] != '"') {
        diags.push_back(Diagnostic::error(DiagCode::LexicalError, "unterminated string literal",
                                          span_from(begin)));
        return std::nullopt;
      }
      advance();
      return Token{Tok::String, std::move(value), span_from(begin)};
    }
    if (c == '<' && text_.substr(pos_, 3) == "<+>") {
      advance();
      advance();
      advance();
      return Token{Tok::Oplus, "<+>", span_from(begin)};
    }
    if (c == '_') {
      advance();
      if (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                  text_[pos_] == '_' || text_[pos_] == '\'')) {
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                       text_[pos_] == '_' || text_[pos_] == '\''))
          advance();
        diags.push_back(Diagnostic::error(DiagCode::LexicalError,
                                          "identifiers must start with a letter: '" +
                                              std::string(text_.substr(begin, pos_ - begin)) + "'",
                                          span_from(begin)));
        return std::nullopt;
      }
      return Token{Tok::Wildcard, "_", span_from(begin)};
    }
    switch (c) {
      case '=': return single(Tok::Equals);
      case '|': return single(Tok::Bar);
      case '(': return single(Tok::LParen);
      case ')': return single(Tok::RParen);
      case '[': return single(Tok::LBracket);
      case ']': return single(Tok::RBracket);
      case ',': return single(Tok::Comma);
      default: break;
    }
    // Consume one whole UTF-8 sequence so the span stays on a boundary.
    advance();
    while (pos_ < text_.size() && (static_cast<unsigned char>(text_[pos_]) & 0xC0) == 0x80) advance();
    diags.push_back(Diagnostic::error(
        DiagCode::LexicalError,
        "unexpected character '" + std::string(text_.substr(begin, pos_ - begin)) + "'",
        span_from(begin)));
    return std::nullopt;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  int line_at_begin_ = 1;
  int col_at_begin_ = 1;
};

/// Thrown inside the parser to unwind to the nearest recovery point.
struct ParseFailure {};

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::vector<Diagnostic>& diags)
      : toks_(std::move(tokens)), diags_(diags) {}

  Program program() {
    std::vector<ExtensibleDataDecl> extensibles;
    std::vector<ExtensionDecl> extensions;
    while (peek().kind != Tok::End) {
      try {
        if (peek().kind == Tok::KwExtensible) {
          extensibles.push_back(extensible_decl());
        } else if (peek().kind == Tok::KwData || peek().kind == Tok::KwPartial) {
          extensions.push_back(extension_decl());
        } else {
          fail(DiagCode::UnexpectedToken,
               "expected a declaration ('extensible data' or 'data ... extends'), found " +
                   describe(peek()));
        }
      } catch (const ParseFailure&) {
        recover();
      }
    }
    return Program(std::move(extensibles), std::move(extensions));
  }

  OplusFragment fragment(FragmentKind kind) {
    OplusFragment f;
    f.kind = kind;
    f.span = peek().span;
    const Token& head = expect(Tok::Upper, "a constructor name");
    f.head = Ident(head.text);
    while (starts_atom(kind)) f.ordinaryArgs.push_back(atom(kind, false));
    if (peek().kind != Tok::Oplus) {
      fail(DiagCode::UnexpectedToken,
           "missing '<+>' in fragment, found " + describe(peek()));
    }
    take();
    f.extensionArg = operand(kind, true);
    if (peek().kind == Tok::Oplus) {
      fail(DiagCode::OplusOnNonExtensible, "nested '<+>' has no meaning");
    }
    if (peek().kind != Tok::End) {
      fail(DiagCode::UnexpectedToken, "unexpected " + describe(peek()) + " after fragment");
    }
    f.span.end = toks_.back().span.end;
    return f;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }

  const Token& take() {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }

  [[noreturn]] void fail(DiagCode code, std::string message) {
    diags_.push_back(Diagnostic::error(code, std::move(message), peek().span));
    throw ParseFailure{};
  }

  const Token& expect(Tok kind, std::string_view what) {
    if (peek().kind != kind) {
      if (in_decl_ && (peek().kind == Tok::End || is_decl_start(peek().kind))) {
        fail(DiagCode::UnterminatedDecl,
             "unterminated declaration: expected " + std::string(what) + " before " +
                 describe(peek()));
      }
      fail(DiagCode::UnexpectedToken,
           "expected " + std::string(what) + ", found " + describe(peek()));
    }
    return take();
  }

  void recover() {
    while (peek().kind != Tok::End && !is_decl_start(peek().kind)) take();
    in_decl_ = false;
  }

  std::vector<Ident> type_vars() {
    std::vector<Ident> vars;
    while (peek().kind == Tok::Lower) vars.emplace_back(take().text);
    return vars;
  }

  ExtensibleDataDecl extensible_decl() {
    ExtensibleDataDecl d;
    d.loc = peek().span;
    take();  // extensible
    in_decl_ = true;
    expect(Tok::KwData, "'data'");
    d.name = Ident(expect(Tok::Upper, "a type name").text);
    d.params = type_vars();
    expect(Tok::Equals, "'='");
    d.constructors.push_back(constructor());
    while (peek().kind == Tok::Bar) {
      take();
      d.constructors.push_back(constructor());
    }
    finish_decl(d.loc);
    return d;
  }

  ExtensionDecl extension_decl() {
    ExtensionDecl e;
    e.loc = peek().span;
    in_decl_ = true;
    if (peek().kind == Tok::KwPartial) {
      take();
      e.partial = true;
    }
    expect(Tok::KwData, "'data'");
    e.name = Ident(expect(Tok::Upper, "a type name").text);
    e.params = type_vars();
    if (peek().kind != Tok::KwExtends) {
      fail(DiagCode::UnexpectedToken,
           "expected 'extends' (ordinary data declarations are not supported; "
           "use 'extensible data'), found " + describe(peek()));
    }
    take();
    e.baseName = Ident(expect(Tok::Upper, "the base type name").text);
    e.baseArgs = type_vars();
    if (peek().kind == Tok::Equals) {
      take();
      alternative(e);
      while (peek().kind == Tok::Bar) {
        take();
        alternative(e);
      }
    }
    finish_decl(e.loc);
    return e;
  }

  void finish_decl(Location& loc) {
    if (peek().kind != Tok::End && !is_decl_start(peek().kind)) {
      fail(DiagCode::UnexpectedToken, "unexpected " + describe(peek()) + " in declaration");
    }
    loc.end = toks_[pos_ == 0 ? 0 : pos_ - 1].span.end;
    in_decl_ = false;
  }

  ConstructorDecl constructor() {
    ConstructorDecl c;
    c.loc = peek().span;
    c.name = Ident(expect(Tok::Upper, "a constructor name").text);
    while (starts_atype()) c.fields.push_back(atype(false));
    return c;
  }

  void alternative(ExtensionDecl& e) {
    Location loc = peek().span;
    Ident name(expect(Tok::Upper, "a constructor name").text);
    if (peek().kind != Tok::KwExtends) {
      ConstructorDecl c{name, {}, loc};
      while (starts_atype()) c.fields.push_back(atype(false));
      e.newConstructors.push_back(std::move(c));
      return;
    }
    take();
    ConExtensionClause clause;
    clause.loc = loc;
    clause.newName = name;
    clause.baseConstructor = Ident(expect(Tok::Upper, "the extended constructor name").text);
    expect(Tok::KwBy, "'by'");
    if (peek().kind == Tok::KwEmpty) {
      take();
    } else {
      if (!starts_atype()) {
        if (peek().kind == Tok::End || is_decl_start(peek().kind))
          fail(DiagCode::UnterminatedDecl,
               "unterminated declaration: expected field types or 'empty' after 'by'");
        fail(DiagCode::UnexpectedToken,
             "expected field types or 'empty' after 'by', found " + describe(peek()));
      }
      while (starts_atype()) clause.addedFields.push_back(atype(false));
    }
    e.extendedConstructors.push_back(std::move(clause));
  }

  // ------------------------------------------------------------ types

  bool starts_atype() const {
    switch (peek().kind) {
      case Tok::Upper:
      case Tok::Lower:
      case Tok::LParen:
      case Tok::LBracket: return true;
      default: return false;
    }
  }

  TypeExpr type(bool inOplus) {
    TypeExpr base = btype(inOplus);
    if (peek().kind != Tok::Oplus) return base;
    if (inOplus) fail(DiagCode::OplusOnNonExtensible, "nested '<+>' has no meaning");
    take();
    TypeExpr ext = btype(true);
    if (peek().kind == Tok::Oplus) fail(DiagCode::OplusOnNonExtensible, "nested '<+>' has no meaning");
    return TypeExpr::oplus(std::move(base), std::move(ext));
  }

  TypeExpr btype(bool inOplus) {
    if (peek().kind == Tok::Upper) {
      Ident head(take().text);
      std::vector<TypeExpr> args;
      while (starts_atype()) args.push_back(atype(inOplus));
      return TypeExpr::con(std::move(head), std::move(args));
    }
    return atype(inOplus);
  }

  TypeExpr atype(bool inOplus) {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Upper: return TypeExpr::con(Ident(take().text));
      case Tok::Lower: return TypeExpr::var(Ident(take().text));
      case Tok::LBracket: {
        take();
        TypeExpr elem = type(inOplus);
        expect(Tok::RBracket, "']'");
        return TypeExpr::list(std::move(elem));
      }
      case Tok::LParen: {
        take();
        std::vector<TypeExpr> elems;
        elems.push_back(type(inOplus));
        while (peek().kind == Tok::Comma) {
          take();
          elems.push_back(type(inOplus));
        }
        expect(Tok::RParen, "')'");
        if (elems.size() == 1) return std::move(elems.front());
        return TypeExpr::tuple(std::move(elems));
      }
      default:
        if (in_decl_ && (t.kind == Tok::End || is_decl_start(t.kind)))
          fail(DiagCode::UnterminatedDecl, "unterminated declaration: expected a type");
        fail(DiagCode::UnexpectedToken, "expected a type, found " + describe(t));
    }
  }

  // ------------------------------------------------------------ fragment terms

  bool starts_atom(FragmentKind kind) const {
    switch (peek().kind) {
      case Tok::Upper:
      case Tok::Lower:
      case Tok::LParen: return true;
      case Tok::Integer: return kind != FragmentKind::Type;
      case Tok::String: return kind == FragmentKind::ConApp;
      case Tok::Wildcard: return kind == FragmentKind::Pattern;
      default: return false;
    }
  }

  Term operand(FragmentKind kind, bool inOplus) {
    if (peek().kind == Tok::Upper) {
      std::string head = take().text;
      std::vector<Term> args;
      while (starts_atom(kind)) args.push_back(atom(kind, inOplus));
      if (args.empty()) return Term::name(std::move(head));
      return Term::apply(std::move(head), std::move(args));
    }
    return atom(kind, inOplus);
  }

  Term atom(FragmentKind kind, bool inOplus) {
    const Token& t = peek();
    if (!starts_atom(kind)) {
      if (t.kind == Tok::Oplus)
        fail(DiagCode::UnexpectedToken, "missing operand before '<+>'");
      fail(DiagCode::UnexpectedToken, "malformed fragment: unexpected " + describe(t));
    }
    switch (t.kind) {
      case Tok::Upper:
      case Tok::Lower: return Term::name(take().text);
      case Tok::Integer: return Term::integer(take().text);
      case Tok::String: return Term::string(take().text);
      case Tok::Wildcard: take(); return Term::wildcard();
      default: break;
    }
    take();  // (
    std::vector<Term> elems;
    elems.push_back(operand(kind, inOplus));
    if (peek().kind == Tok::Oplus) fail(DiagCode::OplusOnNonExtensible, "nested '<+>' has no meaning");
    while (peek().kind == Tok::Comma) {
      take();
      elems.push_back(operand(kind, inOplus));
      if (peek().kind == Tok::Oplus)
        fail(DiagCode::OplusOnNonExtensible, "nested '<+>' has no meaning");
    }
    expect(Tok::RParen, "')'");
    if (elems.size() == 1) return std::move(elems.front());
    return Term::tuple(std::move(elems));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  bool in_decl_ = false;
  std::vector<Diagnostic>& diags_;
};

bool needs_parens(const Term& t) {
  return (t.kind == Term::Kind::Apply && !t.args.empty()) ||
         (t.kind == Term::Kind::Integer && !t.text.empty() && t.text.front() == '-');
}

std::string render_arg(const Term& t) {
  std::string s = render_term(t);
  return needs_parens(t) ? "(" + s + ")" : s;
}

}  // namespace

std::string render_term(const Term& t) {
  switch (t.kind) {
    case Term::Kind::Name:
    case Term::Kind::Integer:
    case Term::Kind::Wildcard: return t.text;
    case Term::Kind::String: {
      std::string out = "\"";
      for (char c : t.text) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
      }
      return out + "\"";
    }
    case Term::Kind::Apply: {
      std::string out = t.text;
      for (const auto& a : t.args) out += " " + render_arg(a);
      return out;
    }
    case Term::Kind::Tuple: {
      std::string out = "(";
      for (std::size_t i = 0; i < t.args.size(); ++i) {
        if (i) out += ", ";
        out += render_term(t.args[i]);
      }
      return out + ")";
    }
  }
  return {};
}

Result<Program> parse_program(std::string_view text) {
  Result<Program> r;
  std::vector<Token> tokens = Lexer(text).run(r.diagnostics);
  Program p = Parser(std::move(tokens), r.diagnostics).program();
  if (r.diagnostics.empty()) r.value = std::move(p);
  return r;
}

Result<OplusFragment> parse_fragment(std::string_view text, FragmentKind kind) {
  Result<OplusFragment> r;
  std::vector<Token> tokens = Lexer(text).run(r.diagnostics);
  if (!r.diagnostics.empty()) return r;
  try {
    OplusFragment f = Parser(std::move(tokens), r.diagnostics).fragment(kind);
    r.value = std::move(f);
  } catch (const ParseFailure&) {
  }
  return r;
}

}  // namespace xdt
