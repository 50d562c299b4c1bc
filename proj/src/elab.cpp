#include <algorithm>

#include "cht/kernel.hpp"

namespace cht::kernel {

using syntax::SNode;
using syntax::SPtr;

TPtr Checker::elab_type(const SPtr& s, unsigned long* level_out) {
  VPtr ty;
  TPtr t = elab_infer(s, &ty);
  VPtr tw = whnf(ty);
  auto* u = std::get_if<VU>(&tw->node);
  if (!u) {
    span_ = s->span;
    fail(TypeErrorKind::UniverseError, "expected a type", "Type _",
         show(quote_type(tw)));
  }
  if (level_out) *level_out = u->level;
  return t;
}

TPtr Checker::elab_infer(const SPtr& s, VPtr* type_out) {
  span_ = s->span;
  const SNode& n = s->node;
  TPtr core;
  VPtr type;

  if (auto* v = std::get_if<syntax::SVar>(&n)) {
    if (auto level = lookup_local(v->name)) {
      core = mk(TVar{depth() - 1 - *level});
      type = types_[*level];
    } else if (const GlobalEnv::Entry* e = globals_.find(v->name)) {
      core = mk(TConst{v->name});
      if (!e->type_value) e->type_value = eval(globals_, nullptr, e->type);
      type = e->type_value;
    } else {
      fail(TypeErrorKind::Unbound, "unbound: " + v->name);
    }
  } else if (auto* v = std::get_if<syntax::SType>(&n)) {
    core = mk(TU{v->level});
    type = mkv(VU{v->level + 1});
  } else if (std::holds_alternative<syntax::SUnit>(n)) {
    core = mk(TUnit{});
    type = mkv(VU{0});
  } else if (std::holds_alternative<syntax::STt>(n)) {
    core = mk(TStar{});
    type = mkv(VUnitT{});
  } else if (auto* v = std::get_if<syntax::SLam>(&n)) {
    TPtr ann = elab_type(v->ann);
    VPtr domV = eval_here(ann);
    bind(v->binder, domV, vvar(depth()));
    VPtr bodyT;
    TPtr body = elab_infer(v->body, &bodyT);
    TPtr bodyTq = quote_type(bodyT);
    unbind();
    core = mk(TLam{ann, body, v->binder});
    type = mkv(VPi{domV, Closure{&globals_, env_, bodyTq}, v->binder});
  } else if (auto* v = std::get_if<syntax::SApp>(&n)) {
    VPtr tf;
    TPtr fn = elab_infer(v->fn, &tf);
    VPtr tw = whnf(tf);
    auto* pi = std::get_if<VPi>(&tw->node);
    if (!pi) {
      span_ = s->span;
      fail(TypeErrorKind::NotAFunction, "application of a non-function",
           std::nullopt, show(quote_type(tw)));
    }
    TPtr arg = elab_check(v->arg, pi->domain);
    core = mk(TApp{fn, arg});
    type = capply(pi->codomain, eval_here(arg));
  } else if (auto* v = std::get_if<syntax::SPi>(&n)) {
    unsigned long l1 = 0, l2 = 0;
    TPtr dom = elab_type(v->domain, &l1);
    VPtr domV = eval_here(dom);
    bind(v->binder, domV, vvar(depth()));
    TPtr cod = elab_type(v->codomain, &l2);
    unbind();
    core = mk(TPi{dom, cod, v->binder});
    type = mkv(VU{std::max(l1, l2)});
  } else if (auto* v = std::get_if<syntax::SSigma>(&n)) {
    unsigned long l1 = 0, l2 = 0;
    TPtr first = elab_type(v->first, &l1);
    VPtr firstV = eval_here(first);
    bind(v->binder, firstV, vvar(depth()));
    TPtr second = elab_type(v->second, &l2);
    unbind();
    core = mk(TSigma{first, second, v->binder});
    type = mkv(VU{std::max(l1, l2)});
  } else if (std::holds_alternative<syntax::SPair>(n)) {
    fail(TypeErrorKind::NotInferable,
         "cannot infer the type of a bare pair (annotate via a definition)");
  } else if (auto* v = std::get_if<syntax::SFst>(&n)) {
    VPtr tp;
    TPtr p = elab_infer(v->arg, &tp);
    VPtr tw = whnf(tp);
    auto* sig = std::get_if<VSigma>(&tw->node);
    if (!sig) {
      span_ = s->span;
      fail(TypeErrorKind::Mismatch, "fst expects a Sigma", std::nullopt,
           show(quote_type(tw)));
    }
    core = mk(TFst{p});
    type = sig->first;
  } else if (auto* v = std::get_if<syntax::SSnd>(&n)) {
    VPtr tp;
    TPtr p = elab_infer(v->arg, &tp);
    VPtr tw = whnf(tp);
    auto* sig = std::get_if<VSigma>(&tw->node);
    if (!sig) {
      span_ = s->span;
      fail(TypeErrorKind::Mismatch, "snd expects a Sigma", std::nullopt,
           show(quote_type(tw)));
    }
    core = mk(TSnd{p});
    type = capply(sig->second, vfst(globals_, eval_here(p)));
  } else if (auto* v = std::get_if<syntax::SId>(&n)) {
    unsigned long l = 0;
    TPtr A = elab_type(v->type, &l);
    VPtr Av = eval_here(A);
    TPtr lhs = elab_check(v->lhs, Av);
    TPtr rhs = elab_check(v->rhs, Av);
    core = mk(TId{A, lhs, rhs});
    type = mkv(VU{l});
  } else if (auto* v = std::get_if<syntax::SRefl>(&n)) {
    VPtr At;
    TPtr point = elab_infer(v->point, &At);
    VPtr pv = eval_here(point);
    core = mk(TRefl{quote_type(At), point});
    type = mkv(VId{At, pv, pv});
  } else if (auto* v = std::get_if<syntax::SJ>(&n)) {
    VPtr tpath;
    TPtr path = elab_infer(v->path, &tpath);
    VPtr tw = whnf(tpath);
    auto* id = std::get_if<VId>(&tw->node);
    if (!id) {
      span_ = s->span;
      fail(TypeErrorKind::Mismatch, "J expects an identity proof",
           std::nullopt, show(quote_type(tw)));
    }
    VPtr A = id->type;
    TPtr lhs = elab_check(v->lhs, A);
    VPtr lv = eval_here(lhs);
    span_ = v->lhs->span;
    if (!conv(A, lv, id->lhs))
      fail(TypeErrorKind::Mismatch, "J left endpoint mismatch",
           show(quote(A, id->lhs)), show(quote(A, lv)));
    TPtr rhs = elab_check(v->rhs, A);
    VPtr rv = eval_here(rhs);
    span_ = v->rhs->span;
    if (!conv(A, rv, id->rhs))
      fail(TypeErrorKind::Mismatch, "J right endpoint mismatch",
           show(quote(A, id->rhs)), show(quote(A, rv)));
    VPtr mt;
    TPtr motive = elab_infer(v->motive, &mt);
    // shape: (x y : A) -> Id A x y -> Type
    span_ = v->motive->span;
    VPtr mtw = whnf(mt);
    auto* pi1 = std::get_if<VPi>(&mtw->node);
    if (!pi1 || !conv_type(pi1->domain, A))
      fail(TypeErrorKind::Mismatch,
           "J motive must have shape (x y : A) -> Id A x y -> Type");
    bool shape_ok = false;
    {
      VPtr x = vvar(depth());
      bind("x", A, x);
      VPtr mt2 = whnf(capply(pi1->codomain, x));
      auto* pi2 = std::get_if<VPi>(&mt2->node);
      if (pi2 && conv_type(pi2->domain, A)) {
        VPtr y = vvar(depth());
        bind("y", A, y);
        VPtr mt3 = whnf(capply(pi2->codomain, y));
        auto* pi3 = std::get_if<VPi>(&mt3->node);
        if (pi3 && conv_type(pi3->domain, mkv(VId{A, x, y}))) {
          VPtr p = vvar(depth());
          bind("p", mkv(VId{A, x, y}), p);
          VPtr sort = whnf(capply(pi3->codomain, p));
          shape_ok = std::holds_alternative<VU>(sort->node);
          unbind();
        }
        unbind();
      }
      unbind();
    }
    if (!shape_ok)
      fail(TypeErrorKind::Mismatch,
           "J motive must have shape (x y : A) -> Id A x y -> Type");
    VPtr mv = eval_here(motive);
    VPtr refl = mkv(VRefl{A, lv});
    VPtr base_ty =
        vapp(globals_, vapp(globals_, vapp(globals_, mv, lv), lv), refl);
    TPtr base = elab_check(v->base, base_ty);
    core = mk(TJ{motive, base, lhs, rhs, path});
    type = vapp(globals_, vapp(globals_, vapp(globals_, mv, lv), rv),
                eval_here(path));
  } else if (auto* v = std::get_if<syntax::SLet>(&n)) {
    TPtr ann = elab_type(v->ann);
    VPtr annV = eval_here(ann);
    TPtr value = elab_check(v->value, annV);
    VPtr vv = eval_here(value);
    bind(v->binder, annV, vv);
    VPtr bodyT;
    TPtr body = elab_infer(v->body, &bodyT);
    unbind();
    core = mk(TApp{mk(TLam{ann, body, v->binder}), value});
    type = bodyT;
  } else {
    fail(TypeErrorKind::NotInferable, "cannot infer this term");
  }

  if (type_out) *type_out = type;
  return core;
}

TPtr Checker::elab_check(const SPtr& s, const VPtr& type) {
  span_ = s->span;
  const SNode& n = s->node;
  VPtr tw = whnf(type);

  if (auto* v = std::get_if<syntax::SLam>(&n)) {
    auto* pi = std::get_if<VPi>(&tw->node);
    if (!pi)
      fail(TypeErrorKind::Mismatch, "lambda checked against a non-Pi type",
           show(quote_type(tw)), "a lambda");
    TPtr ann = elab_type(v->ann);
    span_ = v->ann->span;
    if (!conv_type(eval_here(ann), pi->domain))
      fail(TypeErrorKind::Mismatch, "lambda annotation mismatch",
           show(quote_type(pi->domain)), show(ann));
    bind(v->binder, pi->domain, vvar(depth()));
    TPtr body = elab_check(v->body, capply(pi->codomain, vvar(depth() - 1)));
    unbind();
    return mk(TLam{ann, body, v->binder});
  }
  if (auto* v = std::get_if<syntax::SPair>(&n)) {
    auto* sig = std::get_if<VSigma>(&tw->node);
    if (!sig)
      fail(TypeErrorKind::Mismatch, "pair checked against a non-Sigma type",
           show(quote_type(tw)), "a pair");
    TPtr fst_t = elab_check(v->fst, sig->first);
    TPtr snd_t = elab_check(v->snd, capply(sig->second, eval_here(fst_t)));
    return mk(TPair{fst_t, snd_t});
  }
  if (auto* v = std::get_if<syntax::SRefl>(&n)) {
    if (auto* id = std::get_if<VId>(&tw->node)) {
      TPtr point = elab_check(v->point, id->type);
      VPtr pv = eval_here(point);
      span_ = s->span;
      if (!conv(id->type, pv, id->lhs) || !conv(id->type, pv, id->rhs))
        fail(TypeErrorKind::Mismatch,
             "refl proves reflexivity only: endpoints differ",
             show(quote_type(tw)), "refl " + show(point));
      return mk(TRefl{quote_type(id->type), point});
    }
    fail(TypeErrorKind::Mismatch, "refl checked against a non-Id type",
         show(quote_type(tw)), "a refl");
  }
  if (auto* v = std::get_if<syntax::SLet>(&n)) {
    TPtr ann = elab_type(v->ann);
    VPtr annV = eval_here(ann);
    TPtr value = elab_check(v->value, annV);
    VPtr vv = eval_here(value);
    bind(v->binder, annV, vv);
    TPtr body = elab_check(v->body, type);
    unbind();
    return mk(TApp{mk(TLam{ann, body, v->binder}), value});
  }

  VPtr ti;
  TPtr core = elab_infer(s, &ti);
  span_ = s->span;
  if (!conv_type(ti, type))
    fail(TypeErrorKind::Mismatch, "type mismatch", show(quote_type(type)),
         show(quote_type(ti)));
  return core;
}

// --- spec-level wrappers -----------------------------------------------------

VPtr op_eval(const GlobalEnv& env, std::size_t ctx_depth, const TPtr& t) {
  return eval_open(env, ctx_depth, t);
}

TPtr normalize(const GlobalEnv& env, const Ctx& ctx, const TPtr& t,
               Flags flags) {
  Checker ck(env, flags);
  ck.push_ctx(ctx);
  VPtr ty = ck.infer(t);
  return ck.quote(ty, ck.eval_here(t));
}

bool conv(const GlobalEnv& env, const Ctx& ctx, const TPtr& a, const TPtr& b,
          const TPtr& at_type, Flags flags) {
  Checker ck(env, flags);
  ck.push_ctx(ctx);
  VPtr ty = ck.eval_here(at_type);
  return ck.conv(ty, ck.eval_here(a), ck.eval_here(b));
}

TPtr infer(const GlobalEnv& env, const Ctx& ctx, const TPtr& t, Flags flags) {
  Checker ck(env, flags);
  ck.push_ctx(ctx);
  VPtr ty = ck.infer(t);
  return ck.quote_type(ty);
}

void check(const GlobalEnv& env, const Ctx& ctx, const TPtr& t,
           const TPtr& against, Flags flags) {
  Checker ck(env, flags);
  ck.push_ctx(ctx);
  VPtr sort = ck.infer(against);
  (void)sort;
  ck.check(t, ck.eval_here(against));
}

void check_decl(GlobalEnv& env, const syntax::Decl& d, Origin origin,
                Flags flags) {
  if (env.contains(d.name)) {
    TypeError err(TypeErrorKind::Mismatch,
                  "name already declared: " + d.name, d.span);
    err.decl_name = d.name;
    throw err;
  }
  try {
    Checker ck(env, flags);
    TPtr type = ck.elab_type(d.type);
    TPtr body;
    if (d.kind == syntax::DeclKind::Definition) {
      Checker ck2(env, flags);
      body = ck2.elab_check(d.body, ck2.eval_here(type));
    }
    env.add(GlobalEnv::Entry{d.name, type, body, origin, nullptr, nullptr});
  } catch (TypeError& e) {
    if (e.decl_name.empty()) e.decl_name = d.name;
    throw;
  }
}

void check_module(GlobalEnv& env, const syntax::SourceModule& m, Origin origin,
                  Flags flags) {
  for (const auto& d : m.decls) check_decl(env, d, origin, flags);
}

TPtr elaborate(const GlobalEnv& env, const syntax::SPtr& s, Flags flags) {
  Checker ck(env, flags);
  VPtr ty;
  return ck.elab_infer(s, &ty);
}

}  // namespace cht::kernel
