#include "cht/term.hpp"

#include <sstream>

#include "cht/surface.hpp"

namespace cht::kernel {

TPtr mk(TNode node) { return std::make_shared<Term>(Term{std::move(node)}); }

bool alpha_equal(const TPtr& a, const TPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->node.index() != b->node.index()) return false;
  const TNode& x = a->node;
  const TNode& y = b->node;
  if (auto* v = std::get_if<TVar>(&x)) return v->index == std::get<TVar>(y).index;
  if (auto* v = std::get_if<TConst>(&x)) return v->name == std::get<TConst>(y).name;
  if (auto* v = std::get_if<TU>(&x)) return v->level == std::get<TU>(y).level;
  if (auto* v = std::get_if<TPi>(&x)) {
    const auto& w = std::get<TPi>(y);
    return alpha_equal(v->domain, w.domain) && alpha_equal(v->codomain, w.codomain);
  }
  if (auto* v = std::get_if<TLam>(&x)) {
    const auto& w = std::get<TLam>(y);
    return alpha_equal(v->ann, w.ann) && alpha_equal(v->body, w.body);
  }
  if (auto* v = std::get_if<TApp>(&x)) {
    const auto& w = std::get<TApp>(y);
    return alpha_equal(v->fn, w.fn) && alpha_equal(v->arg, w.arg);
  }
  if (auto* v = std::get_if<TSigma>(&x)) {
    const auto& w = std::get<TSigma>(y);
    return alpha_equal(v->first, w.first) && alpha_equal(v->second, w.second);
  }
  if (auto* v = std::get_if<TPair>(&x)) {
    const auto& w = std::get<TPair>(y);
    return alpha_equal(v->fst, w.fst) && alpha_equal(v->snd, w.snd);
  }
  if (auto* v = std::get_if<TFst>(&x)) return alpha_equal(v->arg, std::get<TFst>(y).arg);
  if (auto* v = std::get_if<TSnd>(&x)) return alpha_equal(v->arg, std::get<TSnd>(y).arg);
  if (auto* v = std::get_if<TId>(&x)) {
    const auto& w = std::get<TId>(y);
    return alpha_equal(v->type, w.type) && alpha_equal(v->lhs, w.lhs) &&
           alpha_equal(v->rhs, w.rhs);
  }
  if (auto* v = std::get_if<TRefl>(&x)) {
    const auto& w = std::get<TRefl>(y);
    return alpha_equal(v->type, w.type) && alpha_equal(v->point, w.point);
  }
  if (auto* v = std::get_if<TJ>(&x)) {
    const auto& w = std::get<TJ>(y);
    return alpha_equal(v->motive, w.motive) && alpha_equal(v->base, w.base) &&
           alpha_equal(v->lhs, w.lhs) && alpha_equal(v->rhs, w.rhs) &&
           alpha_equal(v->path, w.path);
  }
  return true;  // TUnit, TStar
}

namespace {

using syntax::SNode;
using syntax::SPtr;

SPtr sp(SNode n) { return syntax::make(std::move(n), Span{0, 0}); }

std::string pick_name(const std::string& hint, std::vector<std::string>& scope) {
  std::string base = hint.empty() || hint == "_" ? "x" : hint;
  std::string cand = base;
  int i = 0;
  auto taken = [&](const std::string& s) {
    for (const auto& n : scope)
      if (n == s) return true;
    return false;
  };
  while (taken(cand)) cand = base + std::to_string(++i);
  return cand;
}

SPtr to_surface(const TPtr& t, std::vector<std::string>& scope) {
  const TNode& n = t->node;
  if (auto* v = std::get_if<TVar>(&n)) {
    if (v->index < scope.size())
      return sp(syntax::SVar{scope[scope.size() - 1 - v->index]});
    return sp(syntax::SVar{"#" + std::to_string(v->index)});
  }
  if (auto* v = std::get_if<TConst>(&n)) return sp(syntax::SVar{v->name});
  if (auto* v = std::get_if<TU>(&n)) return sp(syntax::SType{v->level});
  if (auto* v = std::get_if<TPi>(&n)) {
    SPtr dom = to_surface(v->domain, scope);
    std::string name = v->hint == "_" ? "_" : pick_name(v->hint, scope);
    scope.push_back(name);
    SPtr cod = to_surface(v->codomain, scope);
    scope.pop_back();
    return sp(syntax::SPi{name, dom, cod});
  }
  if (auto* v = std::get_if<TLam>(&n)) {
    SPtr ann = v->ann ? to_surface(v->ann, scope) : sp(syntax::SVar{"_"});
    std::string name = pick_name(v->hint, scope);
    scope.push_back(name);
    SPtr body = to_surface(v->body, scope);
    scope.pop_back();
    return sp(syntax::SLam{name, ann, body});
  }
  if (auto* v = std::get_if<TApp>(&n))
    return sp(syntax::SApp{to_surface(v->fn, scope), to_surface(v->arg, scope)});
  if (auto* v = std::get_if<TSigma>(&n)) {
    SPtr first = to_surface(v->first, scope);
    std::string name = pick_name(v->hint, scope);
    scope.push_back(name);
    SPtr second = to_surface(v->second, scope);
    scope.pop_back();
    return sp(syntax::SSigma{name, first, second});
  }
  if (auto* v = std::get_if<TPair>(&n))
    return sp(syntax::SPair{to_surface(v->fst, scope), to_surface(v->snd, scope)});
  if (auto* v = std::get_if<TFst>(&n)) return sp(syntax::SFst{to_surface(v->arg, scope)});
  if (auto* v = std::get_if<TSnd>(&n)) return sp(syntax::SSnd{to_surface(v->arg, scope)});
  if (std::holds_alternative<TUnit>(n)) return sp(syntax::SUnit{});
  if (std::holds_alternative<TStar>(n)) return sp(syntax::STt{});
  if (auto* v = std::get_if<TId>(&n))
    return sp(syntax::SId{to_surface(v->type, scope), to_surface(v->lhs, scope),
                          to_surface(v->rhs, scope)});
  if (auto* v = std::get_if<TRefl>(&n))
    return sp(syntax::SRefl{to_surface(v->point, scope)});
  if (auto* v = std::get_if<TJ>(&n))
    return sp(syntax::SJ{to_surface(v->motive, scope), to_surface(v->base, scope),
                         to_surface(v->lhs, scope), to_surface(v->rhs, scope),
                         to_surface(v->path, scope)});
  return sp(syntax::SVar{"?"});
}

}  // namespace

std::string show(const TPtr& t) {
  std::vector<std::string> scope;
  return syntax::print_term(to_surface(t, scope));
}

}  // namespace cht::kernel
