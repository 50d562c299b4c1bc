#include "cht/surface.hpp"

#include <set>

#include "cht/errors.hpp"

namespace cht::syntax {

SPtr make(SNode node, Span span) {
  return std::make_shared<STerm>(STerm{std::move(node), span});
}

namespace {

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::size_t input_len)
      : toks_(std::move(tokens)), input_len_(input_len) {}

  SourceModule module(const std::string& source_name) {
    SourceModule m;
    m.source_name = source_name;
    std::set<std::string> seen;
    while (!at_end()) {
      Decl d = decl();
      if (!seen.insert(d.name).second) throw DuplicateName(d.span, d.name);
      m.decls.push_back(std::move(d));
    }
    return m;
  }

  SPtr whole_term() {
    SPtr t = term();
    if (!at_end())
      throw ParseError(peek().span, "end of input",
                       "trailing tokens after term");
    return t;
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::size_t input_len_;

  bool at_end() const { return pos_ >= toks_.size(); }
  const Token& peek() const {
    if (at_end()) {
      static Token eof{TokenKind::Symbol, "", Span{0, 0}};
      eof.span = Span{input_len_, input_len_};
      return eof;
    }
    return toks_[pos_];
  }
  const Token& peek_at(std::size_t k) const {
    static Token eof{TokenKind::Symbol, "", Span{0, 0}};
    if (pos_ + k >= toks_.size()) return eof;
    return toks_[pos_ + k];
  }
  Token advance() {
    if (at_end())
      throw ParseError(Span{input_len_, input_len_}, "token",
                       "unexpected end of input");
    return toks_[pos_++];
  }
  bool is(TokenKind k, const std::string& text) const {
    return !at_end() && peek().kind == k && peek().text == text;
  }
  bool is_sym(const std::string& s) const { return is(TokenKind::Symbol, s); }
  bool is_kw(const std::string& s) const { return is(TokenKind::Keyword, s); }
  Token expect(TokenKind k, const std::string& text) {
    if (!is(k, text))
      throw ParseError(peek().span, text,
                       "expected '" + text + "'" +
                           (at_end() ? " but input ended"
                                     : " but found '" + peek().text + "'"));
    return advance();
  }
  std::string expect_ident() {
    if (at_end() || peek().kind != TokenKind::Identifier)
      throw ParseError(peek().span, "identifier",
                       at_end() ? "expected identifier but input ended"
                                : "expected identifier but found '" +
                                      peek().text + "'");
    return advance().text;
  }

  Decl decl() {
    if (is_kw("axiom")) {
      Token kw = advance();
      std::string name = expect_ident();
      expect(TokenKind::Symbol, ":");
      SPtr ty = term();
      return Decl{DeclKind::Postulate, name, ty, nullptr,
                  join(kw.span, ty->span)};
    }
    if (is_kw("def")) {
      Token kw = advance();
      std::string name = expect_ident();
      expect(TokenKind::Symbol, ":");
      SPtr ty = term();
      expect(TokenKind::Symbol, ":=");
      SPtr body = term();
      return Decl{DeclKind::Definition, name, ty, body,
                  join(kw.span, body->span)};
    }
    throw ParseError(peek().span, "def or axiom",
                     "expected a declaration");
  }

  struct BinderGroup {
    std::vector<std::string> names;
    SPtr ann;
    Span span;
  };

  // "(" ident+ ":" term ")"
  BinderGroup binder_group() {
    Token open = expect(TokenKind::Symbol, "(");
    BinderGroup g;
    g.names.push_back(expect_ident());
    while (!at_end() && peek().kind == TokenKind::Identifier)
      g.names.push_back(advance().text);
    expect(TokenKind::Symbol, ":");
    g.ann = term();
    Token close = expect(TokenKind::Symbol, ")");
    g.span = join(open.span, close.span);
    return g;
  }

  bool at_binder_group() const {
    // '(' ident ... ident ':'  unambiguously opens a binder group
    if (!is_sym("(")) return false;
    std::size_t k = 1;
    if (peek_at(k).kind != TokenKind::Identifier) return false;
    while (peek_at(k).kind == TokenKind::Identifier) ++k;
    return peek_at(k).kind == TokenKind::Symbol && peek_at(k).text == ":";
  }

  SPtr term() {
    if (is_kw("fun")) return lambda();
    if (is_kw("let")) return let_term();
    return arrow();
  }

  SPtr lambda() {
    Token kw = expect(TokenKind::Keyword, "fun");
    std::vector<BinderGroup> groups;
    groups.push_back(binder_group());
    while (at_binder_group()) groups.push_back(binder_group());
    expect(TokenKind::Symbol, "=>");
    SPtr body = term();
    // fold right: innermost binder closest to the body
    SPtr acc = body;
    for (auto g = groups.rbegin(); g != groups.rend(); ++g)
      for (auto n = g->names.rbegin(); n != g->names.rend(); ++n)
        acc = make(SLam{*n, g->ann, acc}, join(kw.span, body->span));
    return acc;
  }

  SPtr let_term() {
    Token kw = expect(TokenKind::Keyword, "let");
    std::string name = expect_ident();
    expect(TokenKind::Symbol, ":");
    SPtr ann = term();
    expect(TokenKind::Symbol, ":=");
    SPtr value = term();
    expect(TokenKind::Keyword, "in");
    SPtr body = term();
    return make(SLet{name, ann, value, body}, join(kw.span, body->span));
  }

  // right-associative ->, with dependent binder groups
  SPtr arrow() {
    if (at_binder_group()) {
      BinderGroup g = binder_group();
      // more groups may follow before the arrow
      if (at_binder_group() || is_sym("->")) {
        std::vector<BinderGroup> groups{std::move(g)};
        while (at_binder_group()) groups.push_back(binder_group());
        expect(TokenKind::Symbol, "->");
        SPtr cod = arrow();
        SPtr acc = cod;
        for (auto it = groups.rbegin(); it != groups.rend(); ++it)
          for (auto n = it->names.rbegin(); n != it->names.rend(); ++n)
            acc = make(SPi{*n, it->ann, acc}, join(it->span, cod->span));
        return acc;
      }
      throw ParseError(peek().span, "->",
                       "expected '->' after binder group");
    }
    SPtr lhs = app();
    if (is_sym("->")) {
      advance();
      SPtr rhs = arrow();
      return make(SPi{"_", lhs, rhs}, join(lhs->span, rhs->span));
    }
    return lhs;
  }

  bool at_atom_start() const {
    if (at_end()) return false;
    const Token& t = peek();
    if (t.kind == TokenKind::Identifier) return true;
    if (t.kind == TokenKind::Keyword)
      return t.text == "Type" || t.text == "Unit" || t.text == "tt" ||
             t.text == "fst" || t.text == "snd" || t.text == "Id" ||
             t.text == "refl" || t.text == "J" || t.text == "Sigma";
    if (t.kind == TokenKind::Symbol) return t.text == "(" && !at_binder_group();
    return false;
  }

  SPtr app() {
    SPtr head = atom();
    while (at_atom_start() || at_binder_group()) {
      // binder group here would be a Pi argument like ((x : A) -> B); those
      // must be parenthesized, so a bare group is an error caught by atom().
      if (at_binder_group()) break;
      SPtr arg = atom();
      head = make(SApp{head, arg}, join(head->span, arg->span));
    }
    return head;
  }

  SPtr atom() {
    const Token& t = peek();
    if (t.kind == TokenKind::Identifier) {
      Token tok = advance();
      return make(SVar{tok.text}, tok.span);
    }
    if (t.kind == TokenKind::Keyword) {
      if (t.text == "Type") {
        Token kw = advance();
        if (at_end() || peek().kind != TokenKind::UniverseLiteral)
          throw ParseError(peek().span, "universe level",
                           "expected universe level after 'Type'");
        Token lit = advance();
        return make(SType{std::stoul(lit.text)}, join(kw.span, lit.span));
      }
      if (t.text == "Unit") {
        Token kw = advance();
        return make(SUnit{}, kw.span);
      }
      if (t.text == "tt") {
        Token kw = advance();
        return make(STt{}, kw.span);
      }
      if (t.text == "fst" || t.text == "snd") {
        Token kw = advance();
        SPtr a = atom();
        if (kw.text == "fst") return make(SFst{a}, join(kw.span, a->span));
        return make(SSnd{a}, join(kw.span, a->span));
      }
      if (t.text == "Id") {
        Token kw = advance();
        SPtr ty = atom();
        SPtr l = atom();
        SPtr r = atom();
        return make(SId{ty, l, r}, join(kw.span, r->span));
      }
      if (t.text == "refl") {
        Token kw = advance();
        SPtr a = atom();
        return make(SRefl{a}, join(kw.span, a->span));
      }
      if (t.text == "J") {
        Token kw = advance();
        SPtr m = atom();
        SPtr d = atom();
        SPtr l = atom();
        SPtr r = atom();
        SPtr p = atom();
        return make(SJ{m, d, l, r, p}, join(kw.span, p->span));
      }
      if (t.text == "Sigma") {
        Token kw = advance();
        BinderGroup g = binder_group();
        expect(TokenKind::Symbol, ",");
        SPtr body = term();
        SPtr acc = body;
        for (auto n = g.names.rbegin(); n != g.names.rend(); ++n)
          acc = make(SSigma{*n, g.ann, acc}, join(kw.span, body->span));
        return acc;
      }
      throw ParseError(t.span, "term", "unexpected keyword '" + t.text + "'");
    }
    if (t.kind == TokenKind::Symbol && t.text == "(") {
      Token open = advance();
      SPtr first = term();
      if (is_sym(",")) {
        advance();
        SPtr second = pair_tail();
        Token close = expect(TokenKind::Symbol, ")");
        return make(SPair{first, second}, join(open.span, close.span));
      }
      Token close = expect(TokenKind::Symbol, ")");
      // keep the inner node, widen the span
      return make(SNode(first->node), join(open.span, close.span));
    }
    throw ParseError(t.span, "term",
                     at_end() ? "expected a term but input ended"
                              : "expected a term but found '" + t.text + "'");
  }

  // a, b, c  parses as (a, (b, c))
  SPtr pair_tail() {
    SPtr first = term();
    if (is_sym(",")) {
      advance();
      SPtr rest = pair_tail();
      return make(SPair{first, rest}, join(first->span, rest->span));
    }
    return first;
  }
};

}  // namespace

SourceModule parse_module(const std::string& text,
                          const std::string& source_name) {
  Parser p(tokenize(text), text.size());
  return p.module(source_name);
}

SPtr parse_term(const std::string& text) {
  Parser p(tokenize(text), text.size());
  return p.whole_term();
}

bool structurally_equal(const SPtr& a, const SPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->node.index() != b->node.index()) return false;
  const SNode& x = a->node;
  const SNode& y = b->node;
  if (auto* v = std::get_if<SVar>(&x))
    return v->name == std::get<SVar>(y).name;
  if (auto* v = std::get_if<SLam>(&x)) {
    const auto& w = std::get<SLam>(y);
    return v->binder == w.binder && structurally_equal(v->ann, w.ann) &&
           structurally_equal(v->body, w.body);
  }
  if (auto* v = std::get_if<SApp>(&x)) {
    const auto& w = std::get<SApp>(y);
    return structurally_equal(v->fn, w.fn) && structurally_equal(v->arg, w.arg);
  }
  if (auto* v = std::get_if<SPi>(&x)) {
    const auto& w = std::get<SPi>(y);
    return v->binder == w.binder && structurally_equal(v->domain, w.domain) &&
           structurally_equal(v->codomain, w.codomain);
  }
  if (auto* v = std::get_if<SSigma>(&x)) {
    const auto& w = std::get<SSigma>(y);
    return v->binder == w.binder && structurally_equal(v->first, w.first) &&
           structurally_equal(v->second, w.second);
  }
  if (auto* v = std::get_if<SPair>(&x)) {
    const auto& w = std::get<SPair>(y);
    return structurally_equal(v->fst, w.fst) &&
           structurally_equal(v->snd, w.snd);
  }
  if (auto* v = std::get_if<SFst>(&x))
    return structurally_equal(v->arg, std::get<SFst>(y).arg);
  if (auto* v = std::get_if<SSnd>(&x))
    return structurally_equal(v->arg, std::get<SSnd>(y).arg);
  if (auto* v = std::get_if<SId>(&x)) {
    const auto& w = std::get<SId>(y);
    return structurally_equal(v->type, w.type) &&
           structurally_equal(v->lhs, w.lhs) &&
           structurally_equal(v->rhs, w.rhs);
  }
  if (auto* v = std::get_if<SRefl>(&x))
    return structurally_equal(v->point, std::get<SRefl>(y).point);
  if (auto* v = std::get_if<SJ>(&x)) {
    const auto& w = std::get<SJ>(y);
    return structurally_equal(v->motive, w.motive) &&
           structurally_equal(v->base, w.base) &&
           structurally_equal(v->lhs, w.lhs) &&
           structurally_equal(v->rhs, w.rhs) &&
           structurally_equal(v->path, w.path);
  }
  if (auto* v = std::get_if<SType>(&x))
    return v->level == std::get<SType>(y).level;
  if (auto* v = std::get_if<SLet>(&x)) {
    const auto& w = std::get<SLet>(y);
    return v->binder == w.binder && structurally_equal(v->ann, w.ann) &&
           structurally_equal(v->value, w.value) &&
           structurally_equal(v->body, w.body);
  }
  return true;  // SUnit, STt carry no payload
}

}  // namespace cht::syntax
