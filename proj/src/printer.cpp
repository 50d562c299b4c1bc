#include <sstream>

#include "cht/surface.hpp"

namespace cht::syntax {

namespace {

// ARROW < APP < ATOM; a node prints parenthesized when its own level is
// below the level its position requires.
enum Prec { ARROW = 0, APP = 1, ATOM = 2 };

void print(std::ostream& os, const SPtr& t, int prec) {
  const SNode& n = t->node;
  if (auto* v = std::get_if<SVar>(&n)) {
    os << v->name;
    return;
  }
  if (auto* v = std::get_if<SType>(&n)) {
    os << "Type " << v->level;
    return;
  }
  if (std::holds_alternative<SUnit>(n)) {
    os << "Unit";
    return;
  }
  if (std::holds_alternative<STt>(n)) {
    os << "tt";
    return;
  }
  if (auto* v = std::get_if<SPair>(&n)) {
    os << "(";
    print(os, v->fst, ARROW);
    os << ", ";
    print(os, v->snd, ARROW);
    os << ")";
    return;
  }
  if (auto* v = std::get_if<SPi>(&n)) {
    bool parens = prec > ARROW;
    if (parens) os << "(";
    if (v->binder == "_") {
      print(os, v->domain, APP);
      os << " -> ";
      print(os, v->codomain, ARROW);
    } else {
      os << "(" << v->binder << " : ";
      print(os, v->domain, ARROW);
      os << ") -> ";
      print(os, v->codomain, ARROW);
    }
    if (parens) os << ")";
    return;
  }
  if (auto* v = std::get_if<SLam>(&n)) {
    bool parens = prec > ARROW;
    if (parens) os << "(";
    os << "fun (" << v->binder << " : ";
    print(os, v->ann, ARROW);
    os << ") => ";
    print(os, v->body, ARROW);
    if (parens) os << ")";
    return;
  }
  if (auto* v = std::get_if<SSigma>(&n)) {
    bool parens = prec > ARROW;
    if (parens) os << "(";
    os << "Sigma (" << v->binder << " : ";
    print(os, v->first, ARROW);
    os << "), ";
    print(os, v->second, ARROW);
    if (parens) os << ")";
    return;
  }
  if (auto* v = std::get_if<SLet>(&n)) {
    bool parens = prec > ARROW;
    if (parens) os << "(";
    os << "let " << v->binder << " : ";
    print(os, v->ann, ARROW);
    os << " := ";
    print(os, v->value, ARROW);
    os << " in ";
    print(os, v->body, ARROW);
    if (parens) os << ")";
    return;
  }
  if (auto* v = std::get_if<SApp>(&n)) {
    bool parens = prec > APP;
    if (parens) os << "(";
    print(os, v->fn, APP);
    os << " ";
    print(os, v->arg, ATOM);
    if (parens) os << ")";
    return;
  }
  if (auto* v = std::get_if<SFst>(&n)) {
    bool parens = prec > APP;
    if (parens) os << "(";
    os << "fst ";
    print(os, v->arg, ATOM);
    if (parens) os << ")";
    return;
  }
  if (auto* v = std::get_if<SSnd>(&n)) {
    bool parens = prec > APP;
    if (parens) os << "(";
    os << "snd ";
    print(os, v->arg, ATOM);
    if (parens) os << ")";
    return;
  }
  if (auto* v = std::get_if<SId>(&n)) {
    bool parens = prec > APP;
    if (parens) os << "(";
    os << "Id ";
    print(os, v->type, ATOM);
    os << " ";
    print(os, v->lhs, ATOM);
    os << " ";
    print(os, v->rhs, ATOM);
    if (parens) os << ")";
    return;
  }
  if (auto* v = std::get_if<SRefl>(&n)) {
    bool parens = prec > APP;
    if (parens) os << "(";
    os << "refl ";
    print(os, v->point, ATOM);
    if (parens) os << ")";
    return;
  }
  if (auto* v = std::get_if<SJ>(&n)) {
    bool parens = prec > APP;
    if (parens) os << "(";
    os << "J ";
    print(os, v->motive, ATOM);
    os << " ";
    print(os, v->base, ATOM);
    os << " ";
    print(os, v->lhs, ATOM);
    os << " ";
    print(os, v->rhs, ATOM);
    os << " ";
    print(os, v->path, ATOM);
    if (parens) os << ")";
    return;
  }
  os << "<?>";
}

}  // namespace

std::string print_term(const SPtr& t) {
  std::ostringstream os;
  print(os, t, ARROW);
  return os.str();
}

std::string print_decl(const Decl& d) {
  std::ostringstream os;
  if (d.kind == DeclKind::Postulate) {
    os << "axiom " << d.name << " : " << print_term(d.type);
  } else {
    os << "def " << d.name << " : " << print_term(d.type) << " := "
       << print_term(d.body);
  }
  return os.str();
}

}  // namespace cht::syntax
