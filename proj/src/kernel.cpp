#include "cht/kernel.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace cht::kernel {

namespace {

VPtr const_head_value(const GlobalEnv& globals, const std::string& name);

}  // namespace

// --- evaluation -------------------------------------------------------------

VPtr capply(const Closure& c, const VPtr& a) {
  return eval(*c.globals, env_push(c.env, a), c.body);
}

VPtr vapp(const GlobalEnv& globals, const VPtr& f, const VPtr& a) {
  if (auto* lam = std::get_if<VLam>(&f->node)) return capply(lam->body, a);
  if (auto* neu = std::get_if<VNeutral>(&f->node)) {
    Neutral n = neu->neu;
    n.spine.push_back(SpineApp{a});
    LazyPtr unf;
    if (neu->unfolded) {
      LazyPtr inner = neu->unfolded;
      const GlobalEnv* g = &globals;
      unf = std::make_shared<Lazy>(
          [g, inner, a]() { return vapp(*g, inner->force(), a); });
    }
    return mkv(VNeutral{std::move(n), std::move(unf)});
  }
  throw std::logic_error("application of a non-function value");
}

VPtr vfst(const GlobalEnv& globals, const VPtr& p) {
  if (auto* pr = std::get_if<VPair>(&p->node)) return pr->fst;
  if (auto* neu = std::get_if<VNeutral>(&p->node)) {
    Neutral n = neu->neu;
    n.spine.push_back(SpineFst{});
    LazyPtr unf;
    if (neu->unfolded) {
      LazyPtr inner = neu->unfolded;
      const GlobalEnv* g = &globals;
      unf = std::make_shared<Lazy>(
          [g, inner]() { return vfst(*g, inner->force()); });
    }
    return mkv(VNeutral{std::move(n), std::move(unf)});
  }
  throw std::logic_error("first projection of a non-pair value");
}

VPtr vsnd(const GlobalEnv& globals, const VPtr& p) {
  if (auto* pr = std::get_if<VPair>(&p->node)) return pr->snd;
  if (auto* neu = std::get_if<VNeutral>(&p->node)) {
    Neutral n = neu->neu;
    n.spine.push_back(SpineSnd{});
    LazyPtr unf;
    if (neu->unfolded) {
      LazyPtr inner = neu->unfolded;
      const GlobalEnv* g = &globals;
      unf = std::make_shared<Lazy>(
          [g, inner]() { return vsnd(*g, inner->force()); });
    }
    return mkv(VNeutral{std::move(n), std::move(unf)});
  }
  throw std::logic_error("second projection of a non-pair value");
}

static VPtr vJ(const GlobalEnv& globals, const VPtr& motive, const VPtr& base,
               const VPtr& lhs, const VPtr& rhs, const VPtr& path) {
  if (std::holds_alternative<VRefl>(path->node)) return base;
  if (auto* neu = std::get_if<VNeutral>(&path->node)) {
    Neutral n = neu->neu;
    n.spine.push_back(SpineJ{motive, base, lhs, rhs});
    LazyPtr unf;
    if (neu->unfolded) {
      LazyPtr inner = neu->unfolded;
      const GlobalEnv* g = &globals;
      unf = std::make_shared<Lazy>([g, inner, motive, base, lhs, rhs]() {
        return vJ(*g, motive, base, lhs, rhs, inner->force());
      });
    }
    return mkv(VNeutral{std::move(n), std::move(unf)});
  }
  throw std::logic_error("J applied to a non-path value");
}

namespace {

VPtr const_head_value(const GlobalEnv& globals, const std::string& name) {
  const GlobalEnv::Entry* e = globals.find(name);
  if (!e) throw std::logic_error("unresolved constant in eval: " + name);
  Neutral n{NHead{NHead::Const, 0, name}, {}};
  LazyPtr unf;
  if (e->body) {
    if (!e->body_value) {
      const GlobalEnv* g = &globals;
      TPtr body = e->body;
      e->body_value =
          std::make_shared<Lazy>([g, body]() { return eval(*g, nullptr, body); });
    }
    unf = e->body_value;
  }
  return mkv(VNeutral{std::move(n), std::move(unf)});
}

}  // namespace

VPtr eval(const GlobalEnv& globals, const EnvPtr& env, const TPtr& t) {
  const TNode& n = t->node;
  if (auto* v = std::get_if<TVar>(&n)) return env_lookup(env, v->index);
  if (auto* v = std::get_if<TConst>(&n)) return const_head_value(globals, v->name);
  if (auto* v = std::get_if<TU>(&n)) return mkv(VU{v->level});
  if (auto* v = std::get_if<TPi>(&n))
    return mkv(VPi{eval(globals, env, v->domain),
                   Closure{&globals, env, v->codomain}, v->hint});
  if (auto* v = std::get_if<TLam>(&n))
    return mkv(VLam{Closure{&globals, env, v->body}, v->hint});
  if (auto* v = std::get_if<TApp>(&n))
    return vapp(globals, eval(globals, env, v->fn), eval(globals, env, v->arg));
  if (auto* v = std::get_if<TSigma>(&n))
    return mkv(VSigma{eval(globals, env, v->first),
                      Closure{&globals, env, v->second}, v->hint});
  if (auto* v = std::get_if<TPair>(&n))
    return mkv(VPair{eval(globals, env, v->fst), eval(globals, env, v->snd)});
  if (auto* v = std::get_if<TFst>(&n))
    return vfst(globals, eval(globals, env, v->arg));
  if (auto* v = std::get_if<TSnd>(&n))
    return vsnd(globals, eval(globals, env, v->arg));
  if (std::holds_alternative<TUnit>(n)) return mkv(VUnitT{});
  if (std::holds_alternative<TStar>(n)) return mkv(VStar{});
  if (auto* v = std::get_if<TId>(&n))
    return mkv(VId{eval(globals, env, v->type), eval(globals, env, v->lhs),
                   eval(globals, env, v->rhs)});
  if (auto* v = std::get_if<TRefl>(&n))
    return mkv(VRefl{eval(globals, env, v->type), eval(globals, env, v->point)});
  if (auto* v = std::get_if<TJ>(&n))
    return vJ(globals, eval(globals, env, v->motive), eval(globals, env, v->base),
              eval(globals, env, v->lhs), eval(globals, env, v->rhs),
              eval(globals, env, v->path));
  throw std::logic_error("eval: unhandled term");
}

VPtr eval_open(const GlobalEnv& globals, std::size_t depth, const TPtr& t) {
  EnvPtr env;
  for (std::size_t level = 0; level < depth; ++level)
    env = env_push(env, vvar(level));
  return eval(globals, env, t);
}

// --- checker ---------------------------------------------------------------

void Checker::bind(const std::string& name, const VPtr& type, const VPtr& value) {
  types_.push_back(type);
  names_.push_back(name);
  env_ = env_push(env_, value);
}

void Checker::unbind() {
  types_.pop_back();
  names_.pop_back();
  env_ = env_ ? env_->next : nullptr;
}

std::optional<std::size_t> Checker::lookup_local(const std::string& name) const {
  for (std::size_t i = names_.size(); i-- > 0;)
    if (names_[i] == name) return i;  // level
  return std::nullopt;
}

void Checker::fail(TypeErrorKind kind, const std::string& msg,
                   std::optional<std::string> expected,
                   std::optional<std::string> found) {
  throw TypeError(kind, msg, span_, std::move(expected), std::move(found));
}

VPtr Checker::eval_here(const TPtr& t) const { return eval(globals_, env_, t); }

VPtr Checker::whnf(const VPtr& v) const {
  VPtr cur = v;
  while (true) {
    auto* neu = std::get_if<VNeutral>(&cur->node);
    if (neu && neu->unfolded)
      cur = neu->unfolded->force();
    else
      return cur;
  }
}

void Checker::push_ctx(const Ctx& ctx) {
  for (std::size_t i = 0; i < ctx.types.size(); ++i) {
    const TPtr& ty = ctx.types[i];
    unsigned long lvl = 0;
    (void)lvl;
    VPtr sort = infer(ty);
    expect_universe(sort, "context entry");
    std::string name =
        i < ctx.names.size() ? ctx.names[i] : "x" + std::to_string(i);
    bind(name, eval_here(ty), vvar(depth()));
  }
}

unsigned long Checker::expect_universe(const VPtr& type, const char* what) {
  VPtr t = whnf(type);
  if (auto* u = std::get_if<VU>(&t->node)) return u->level;
  fail(TypeErrorKind::UniverseError,
       std::string(what) + " is not a type (no universe inferred)");
}

// --- conversion -------------------------------------------------------------

bool Checker::conv_type(const VPtr& a, const VPtr& b) {
  if (a == b) return true;
  {
    auto* na = std::get_if<VNeutral>(&a->node);
    auto* nb = std::get_if<VNeutral>(&b->node);
    if (na && nb) {
      if (na->neu.head.kind == nb->neu.head.kind &&
          na->neu.head.level == nb->neu.head.level &&
          na->neu.head.name == nb->neu.head.name) {
        if (conv_neutral(na->neu, nb->neu)) return true;
      }
      if (na->unfolded || nb->unfolded)
        return conv_type(na->unfolded ? na->unfolded->force() : a,
                         nb->unfolded ? nb->unfolded->force() : b);
      return false;
    }
    if (na && na->unfolded) return conv_type(na->unfolded->force(), b);
    if (nb && nb->unfolded) return conv_type(a, nb->unfolded->force());
    if (na || nb) return false;
  }
  if (a->node.index() != b->node.index()) return false;
  if (auto* ua = std::get_if<VU>(&a->node)) {
    if (flags_.type_in_type) return true;
    return ua->level == std::get<VU>(b->node).level;
  }
  if (auto* pa = std::get_if<VPi>(&a->node)) {
    const auto& pb = std::get<VPi>(b->node);
    if (!conv_type(pa->domain, pb.domain)) return false;
    VPtr x = vvar(depth());
    bind(pa->hint, pa->domain, x);
    bool ok = conv_type(capply(pa->codomain, x), capply(pb.codomain, x));
    unbind();
    return ok;
  }
  if (auto* sa = std::get_if<VSigma>(&a->node)) {
    const auto& sb = std::get<VSigma>(b->node);
    if (!conv_type(sa->first, sb.first)) return false;
    VPtr x = vvar(depth());
    bind(sa->hint, sa->first, x);
    bool ok = conv_type(capply(sa->second, x), capply(sb.second, x));
    unbind();
    return ok;
  }
  if (std::holds_alternative<VUnitT>(a->node)) return true;
  if (auto* ia = std::get_if<VId>(&a->node)) {
    const auto& ib = std::get<VId>(b->node);
    return conv_type(ia->type, ib.type) && conv(ia->type, ia->lhs, ib.lhs) &&
           conv(ia->type, ia->rhs, ib.rhs);
  }
  return false;
}

// Untyped structural comparison for values whose type gives no eta rule:
// identity proofs and inhabitants of stuck types. Well-typed values of such
// types are VRefl or neutral.
bool Checker::conv_value(const VPtr& a, const VPtr& b) {
  if (a == b) return true;
  auto* na = std::get_if<VNeutral>(&a->node);
  auto* nb = std::get_if<VNeutral>(&b->node);
  if (na && nb) {
    if (na->neu.head.kind == nb->neu.head.kind &&
        na->neu.head.level == nb->neu.head.level &&
        na->neu.head.name == nb->neu.head.name) {
      if (conv_neutral(na->neu, nb->neu)) return true;
    }
    if (na->unfolded || nb->unfolded)
      return conv_value(na->unfolded ? na->unfolded->force() : a,
                        nb->unfolded ? nb->unfolded->force() : b);
    return false;
  }
  if (na && na->unfolded) return conv_value(na->unfolded->force(), b);
  if (nb && nb->unfolded) return conv_value(a, nb->unfolded->force());
  if (na || nb) return false;
  if (a->node.index() != b->node.index()) return false;
  if (auto* ra = std::get_if<VRefl>(&a->node)) {
    const auto& rb = std::get<VRefl>(b->node);
    return conv(ra->type, ra->point, rb.point);
  }
  // Remaining shapes only arise through type formers compared as types.
  return conv_type(a, b);
}

std::optional<VPtr> Checker::conv_neutral(const Neutral& a, const Neutral& b) {
  if (a.head.kind != b.head.kind) return std::nullopt;
  VPtr type;
  VPtr value;
  if (a.head.kind == NHead::Var) {
    if (a.head.level != b.head.level) return std::nullopt;
    if (a.head.level >= types_.size()) return std::nullopt;
    type = types_[a.head.level];
    value = vvar(a.head.level);
  } else {
    if (a.head.name != b.head.name) return std::nullopt;
    const GlobalEnv::Entry* e = globals_.find(a.head.name);
    if (!e) return std::nullopt;
    if (!e->type_value) e->type_value = eval(globals_, nullptr, e->type);
    type = e->type_value;
    value = mkv(VNeutral{Neutral{a.head, {}}, nullptr});
  }
  if (a.spine.size() != b.spine.size()) return std::nullopt;
  for (std::size_t i = 0; i < a.spine.size(); ++i) {
    const SpineElem& ea = a.spine[i];
    const SpineElem& eb = b.spine[i];
    if (ea.index() != eb.index()) return std::nullopt;
    if (auto* fa = std::get_if<SpineApp>(&ea)) {
      const auto& fb = std::get<SpineApp>(eb);
      VPtr tw = whnf(type);
      auto* pi = std::get_if<VPi>(&tw->node);
      if (!pi) return std::nullopt;
      if (!conv(pi->domain, fa->arg, fb.arg)) return std::nullopt;
      type = capply(pi->codomain, fa->arg);
      value = vapp(globals_, value, fa->arg);
      continue;
    }
    if (std::holds_alternative<SpineFst>(ea)) {
      VPtr tw = whnf(type);
      auto* sig = std::get_if<VSigma>(&tw->node);
      if (!sig) return std::nullopt;
      type = sig->first;
      value = vfst(globals_, value);
      continue;
    }
    if (std::holds_alternative<SpineSnd>(ea)) {
      VPtr tw = whnf(type);
      auto* sig = std::get_if<VSigma>(&tw->node);
      if (!sig) return std::nullopt;
      type = capply(sig->second, vfst(globals_, value));
      value = vsnd(globals_, value);
      continue;
    }
    if (auto* ja = std::get_if<SpineJ>(&ea)) {
      const auto& jb = std::get<SpineJ>(eb);
      VPtr tw = whnf(type);
      auto* id = std::get_if<VId>(&tw->node);
      if (!id) return std::nullopt;
      const VPtr& A = id->type;
      if (!conv(A, ja->lhs, jb.lhs)) return std::nullopt;
      if (!conv(A, ja->rhs, jb.rhs)) return std::nullopt;
      // motives compared pointwise at fresh endpoints and a fresh path
      {
        VPtr x = vvar(depth());
        bind("x", A, x);
        VPtr y = vvar(depth());
        bind("y", A, y);
        VPtr idxy = mkv(VId{A, x, y});
        VPtr p = vvar(depth());
        bind("p", idxy, p);
        VPtr ma = vapp(globals_, vapp(globals_, vapp(globals_, ja->motive, x), y), p);
        VPtr mb = vapp(globals_, vapp(globals_, vapp(globals_, jb.motive, x), y), p);
        bool ok = conv_type(ma, mb);
        unbind();
        unbind();
        unbind();
        if (!ok) return std::nullopt;
      }
      VPtr refl = mkv(VRefl{A, ja->lhs});
      VPtr base_ty = vapp(
          globals_,
          vapp(globals_, vapp(globals_, ja->motive, ja->lhs), ja->lhs), refl);
      if (!conv(base_ty, ja->base, jb.base)) return std::nullopt;
      type = vapp(globals_,
                  vapp(globals_, vapp(globals_, ja->motive, ja->lhs), ja->rhs),
                  value);
      value = vJ(globals_, ja->motive, ja->base, ja->lhs, ja->rhs, value);
      continue;
    }
  }
  return type;
}

bool Checker::conv(const VPtr& type, const VPtr& a, const VPtr& b) {
  VPtr tw = whnf(type);
  if (auto* pi = std::get_if<VPi>(&tw->node)) {
    VPtr x = vvar(depth());
    bind(pi->hint, pi->domain, x);
    bool ok = conv(capply(pi->codomain, x), vapp(globals_, a, x),
                   vapp(globals_, b, x));
    unbind();
    return ok;
  }
  if (auto* sig = std::get_if<VSigma>(&tw->node)) {
    VPtr fa = vfst(globals_, a);
    VPtr fb = vfst(globals_, b);
    if (!conv(sig->first, fa, fb)) return false;
    return conv(capply(sig->second, fa), vsnd(globals_, a), vsnd(globals_, b));
  }
  if (std::holds_alternative<VUnitT>(tw->node)) return true;  // unit eta
  if (std::holds_alternative<VU>(tw->node)) return conv_type(a, b);
  return conv_value(a, b);
}

// --- quoting ----------------------------------------------------------------

TPtr Checker::quote_type(const VPtr& v) {
  VPtr w = whnf(v);
  if (auto* u = std::get_if<VU>(&w->node)) return mk(TU{u->level});
  if (auto* pi = std::get_if<VPi>(&w->node)) {
    TPtr dom = quote_type(pi->domain);
    VPtr x = vvar(depth());
    bind(pi->hint, pi->domain, x);
    TPtr cod = quote_type(capply(pi->codomain, x));
    unbind();
    return mk(TPi{dom, cod, pi->hint});
  }
  if (auto* sig = std::get_if<VSigma>(&w->node)) {
    TPtr first = quote_type(sig->first);
    VPtr x = vvar(depth());
    bind(sig->hint, sig->first, x);
    TPtr second = quote_type(capply(sig->second, x));
    unbind();
    return mk(TSigma{first, second, sig->hint});
  }
  if (std::holds_alternative<VUnitT>(w->node)) return mk(TUnit{});
  if (auto* id = std::get_if<VId>(&w->node)) {
    TPtr A = quote_type(id->type);
    return mk(TId{A, quote(id->type, id->lhs), quote(id->type, id->rhs)});
  }
  if (auto* neu = std::get_if<VNeutral>(&w->node))
    return quote_neutral(neu->neu);
  throw std::logic_error("quote_type: not a type value");
}

TPtr Checker::quote(const VPtr& type, const VPtr& v) {
  VPtr tw = whnf(type);
  if (auto* pi = std::get_if<VPi>(&tw->node)) {
    TPtr dom = quote_type(pi->domain);
    VPtr x = vvar(depth());
    bind(pi->hint, pi->domain, x);
    TPtr body = quote(capply(pi->codomain, x), vapp(globals_, v, x));
    unbind();
    return mk(TLam{dom, body, pi->hint});
  }
  if (auto* sig = std::get_if<VSigma>(&tw->node)) {
    VPtr f = vfst(globals_, v);
    TPtr ft = quote(sig->first, f);
    TPtr st = quote(capply(sig->second, f), vsnd(globals_, v));
    return mk(TPair{ft, st});
  }
  if (std::holds_alternative<VUnitT>(tw->node)) return mk(TStar{});
  if (std::holds_alternative<VU>(tw->node)) return quote_type(v);
  VPtr w = whnf(v);
  if (auto* r = std::get_if<VRefl>(&w->node))
    return mk(TRefl{quote_type(r->type), quote(r->type, r->point)});
  if (auto* neu = std::get_if<VNeutral>(&w->node))
    return quote_neutral(neu->neu);
  // Fallback for exotic positions (values at stuck types).
  if (auto* pr = std::get_if<VPair>(&w->node)) {
    (void)pr;
    throw std::logic_error("quote: pair at non-sigma type");
  }
  return quote_type(w);
}

TPtr Checker::quote_neutral(const Neutral& neu) {
  TPtr acc;
  VPtr type;
  VPtr value;
  if (neu.head.kind == NHead::Var) {
    if (neu.head.level >= depth())
      throw std::logic_error("quote: variable level out of scope");
    acc = mk(TVar{depth() - 1 - neu.head.level});
    type = types_[neu.head.level];
    value = vvar(neu.head.level);
  } else {
    acc = mk(TConst{neu.head.name});
    const GlobalEnv::Entry& e = globals_.at(neu.head.name);
    if (!e.type_value) e.type_value = eval(globals_, nullptr, e.type);
    type = e.type_value;
    value = mkv(VNeutral{Neutral{neu.head, {}}, nullptr});
  }
  for (const SpineElem& el : neu.spine) {
    if (auto* app = std::get_if<SpineApp>(&el)) {
      VPtr tw = whnf(type);
      auto* pi = std::get_if<VPi>(&tw->node);
      if (!pi) throw std::logic_error("quote: application at non-Pi type");
      acc = mk(TApp{acc, quote(pi->domain, app->arg)});
      type = capply(pi->codomain, app->arg);
      value = vapp(globals_, value, app->arg);
      continue;
    }
    if (std::holds_alternative<SpineFst>(el)) {
      VPtr tw = whnf(type);
      auto* sig = std::get_if<VSigma>(&tw->node);
      if (!sig) throw std::logic_error("quote: projection at non-Sigma type");
      acc = mk(TFst{acc});
      type = sig->first;
      value = vfst(globals_, value);
      continue;
    }
    if (std::holds_alternative<SpineSnd>(el)) {
      VPtr tw = whnf(type);
      auto* sig = std::get_if<VSigma>(&tw->node);
      if (!sig) throw std::logic_error("quote: projection at non-Sigma type");
      acc = mk(TSnd{acc});
      type = capply(sig->second, vfst(globals_, value));
      value = vsnd(globals_, value);
      continue;
    }
    if (auto* j = std::get_if<SpineJ>(&el)) {
      VPtr tw = whnf(type);
      auto* id = std::get_if<VId>(&tw->node);
      if (!id) throw std::logic_error("quote: J at non-Id type");
      const VPtr& A = id->type;
      TPtr lhs_t = quote(A, j->lhs);
      TPtr rhs_t = quote(A, j->rhs);
      // eta-expand the motive by hand: (x y : A)(p : Id A x y) -> ...
      TPtr motive_t;
      {
        TPtr At1 = quote_type(A);
        VPtr x = vvar(depth());
        bind("x", A, x);
        TPtr At2 = quote_type(A);
        VPtr y = vvar(depth());
        bind("y", A, y);
        VPtr idxy = mkv(VId{A, x, y});
        TPtr idt = quote_type(idxy);
        VPtr p = vvar(depth());
        bind("p", idxy, p);
        VPtr mv =
            vapp(globals_, vapp(globals_, vapp(globals_, j->motive, x), y), p);
        TPtr body = quote_type(mv);
        unbind();
        unbind();
        unbind();
        motive_t = mk(
            TLam{At1, mk(TLam{At2, mk(TLam{idt, body, "p"}), "y"}), "x"});
      }
      VPtr refl = mkv(VRefl{A, j->lhs});
      VPtr base_ty = vapp(
          globals_, vapp(globals_, vapp(globals_, j->motive, j->lhs), j->lhs),
          refl);
      TPtr base_t = quote(base_ty, j->base);
      acc = mk(TJ{motive_t, base_t, lhs_t, rhs_t, acc});
      type = vapp(globals_,
                  vapp(globals_, vapp(globals_, j->motive, j->lhs), j->rhs),
                  value);
      value = vJ(globals_, j->motive, j->base, j->lhs, j->rhs, value);
      continue;
    }
  }
  return acc;
}

// --- inference / checking on core terms -------------------------------------

VPtr Checker::infer(const TPtr& t) {
  const TNode& n = t->node;
  if (auto* v = std::get_if<TVar>(&n)) {
    if (v->index >= depth())
      fail(TypeErrorKind::Unbound,
           "unbound variable index " + std::to_string(v->index));
    return types_[depth() - 1 - v->index];
  }
  if (auto* v = std::get_if<TConst>(&n)) {
    const GlobalEnv::Entry* e = globals_.find(v->name);
    if (!e) fail(TypeErrorKind::Unbound, "unbound: " + v->name);
    if (!e->type_value) e->type_value = eval(globals_, nullptr, e->type);
    return e->type_value;
  }
  if (auto* v = std::get_if<TU>(&n)) return mkv(VU{v->level + 1});
  if (auto* v = std::get_if<TPi>(&n)) {
    unsigned long l1 = expect_universe(infer(v->domain), "Pi domain");
    VPtr domV = eval_here(v->domain);
    bind(v->hint, domV, vvar(depth()));
    unsigned long l2 = expect_universe(infer(v->codomain), "Pi codomain");
    unbind();
    return mkv(VU{std::max(l1, l2)});
  }
  if (auto* v = std::get_if<TLam>(&n)) {
    if (!v->ann)
      fail(TypeErrorKind::NotInferable,
           "cannot infer the type of an unannotated lambda");
    expect_universe(infer(v->ann), "lambda annotation");
    VPtr domV = eval_here(v->ann);
    bind(v->hint, domV, vvar(depth()));
    VPtr bodyT = infer(v->body);
    TPtr bodyTq = quote_type(bodyT);
    unbind();
    return mkv(VPi{domV, Closure{&globals_, env_, bodyTq}, v->hint});
  }
  if (auto* v = std::get_if<TApp>(&n)) {
    VPtr tf = whnf(infer(v->fn));
    auto* pi = std::get_if<VPi>(&tf->node);
    if (!pi)
      fail(TypeErrorKind::NotAFunction,
           "application of a non-function", std::nullopt,
           show(quote_type(tf)));
    check(v->arg, pi->domain);
    return capply(pi->codomain, eval_here(v->arg));
  }
  if (auto* v = std::get_if<TSigma>(&n)) {
    unsigned long l1 = expect_universe(infer(v->first), "Sigma first");
    VPtr firstV = eval_here(v->first);
    bind(v->hint, firstV, vvar(depth()));
    unsigned long l2 = expect_universe(infer(v->second), "Sigma second");
    unbind();
    return mkv(VU{std::max(l1, l2)});
  }
  if (std::holds_alternative<TPair>(n))
    fail(TypeErrorKind::NotInferable, "cannot infer the type of a bare pair");
  if (auto* v = std::get_if<TFst>(&n)) {
    VPtr tp = whnf(infer(v->arg));
    auto* sig = std::get_if<VSigma>(&tp->node);
    if (!sig)
      fail(TypeErrorKind::Mismatch, "fst expects a Sigma", std::nullopt,
           show(quote_type(tp)));
    return sig->first;
  }
  if (auto* v = std::get_if<TSnd>(&n)) {
    VPtr tp = whnf(infer(v->arg));
    auto* sig = std::get_if<VSigma>(&tp->node);
    if (!sig)
      fail(TypeErrorKind::Mismatch, "snd expects a Sigma", std::nullopt,
           show(quote_type(tp)));
    return capply(sig->second, vfst(globals_, eval_here(v->arg)));
  }
  if (std::holds_alternative<TUnit>(n)) return mkv(VU{0});
  if (std::holds_alternative<TStar>(n)) return mkv(VUnitT{});
  if (auto* v = std::get_if<TId>(&n)) {
    unsigned long l = expect_universe(infer(v->type), "Id type");
    VPtr A = eval_here(v->type);
    check(v->lhs, A);
    check(v->rhs, A);
    return mkv(VU{l});
  }
  if (auto* v = std::get_if<TRefl>(&n)) {
    expect_universe(infer(v->type), "refl type");
    VPtr A = eval_here(v->type);
    check(v->point, A);
    VPtr p = eval_here(v->point);
    return mkv(VId{A, p, p});
  }
  if (auto* v = std::get_if<TJ>(&n)) {
    VPtr tpath = whnf(infer(v->path));
    auto* id = std::get_if<VId>(&tpath->node);
    if (!id)
      fail(TypeErrorKind::Mismatch, "J expects an identity proof",
           std::nullopt, show(quote_type(tpath)));
    const VPtr A = id->type;
    check(v->lhs, A);
    VPtr lv = eval_here(v->lhs);
    if (!conv(A, lv, id->lhs))
      fail(TypeErrorKind::Mismatch, "J left endpoint mismatch",
           show(quote(A, id->lhs)), show(quote(A, lv)));
    check(v->rhs, A);
    VPtr rv = eval_here(v->rhs);
    if (!conv(A, rv, id->rhs))
      fail(TypeErrorKind::Mismatch, "J right endpoint mismatch",
           show(quote(A, id->rhs)), show(quote(A, rv)));
    // motive : (x y : A) -> Id A x y -> Type l
    VPtr mt = whnf(infer(v->motive));
    auto* pi1 = std::get_if<VPi>(&mt->node);
    if (!pi1 || !conv_type(pi1->domain, A))
      fail(TypeErrorKind::Mismatch, "J motive must quantify over the path type");
    VPtr x = vvar(depth());
    bind("x", A, x);
    VPtr mt2 = whnf(capply(pi1->codomain, x));
    auto* pi2 = std::get_if<VPi>(&mt2->node);
    bool ok2 = pi2 && conv_type(pi2->domain, A);
    VPtr y;
    VPtr mt3;
    const VPi* pi3 = nullptr;
    bool ok3 = false;
    if (ok2) {
      y = vvar(depth());
      bind("y", A, y);
      mt3 = whnf(capply(pi2->codomain, y));
      pi3 = std::get_if<VPi>(&mt3->node);
      ok3 = pi3 && conv_type(pi3->domain, mkv(VId{A, x, y}));
      if (ok3) {
        VPtr p = vvar(depth());
        bind("p", mkv(VId{A, x, y}), p);
        VPtr sort = whnf(capply(pi3->codomain, p));
        ok3 = std::holds_alternative<VU>(sort->node);
        unbind();
      }
      unbind();
    }
    unbind();
    if (!ok2 || !ok3)
      fail(TypeErrorKind::Mismatch,
           "J motive must have shape (x y : A) -> Id A x y -> Type");
    VPtr mv = eval_here(v->motive);
    VPtr refl = mkv(VRefl{A, lv});
    VPtr base_ty =
        vapp(globals_, vapp(globals_, vapp(globals_, mv, lv), lv), refl);
    check(v->base, base_ty);
    return vapp(globals_, vapp(globals_, vapp(globals_, mv, lv), rv),
                eval_here(v->path));
  }
  throw std::logic_error("infer: unhandled term");
}

void Checker::check(const TPtr& t, const VPtr& type) {
  VPtr tw = whnf(type);
  if (auto* lam = std::get_if<TLam>(&t->node)) {
    auto* pi = std::get_if<VPi>(&tw->node);
    if (!pi)
      fail(TypeErrorKind::Mismatch, "lambda checked against a non-Pi type",
           show(quote_type(tw)), "a lambda");
    if (lam->ann) {
      expect_universe(infer(lam->ann), "lambda annotation");
      if (!conv_type(eval_here(lam->ann), pi->domain))
        fail(TypeErrorKind::Mismatch, "lambda annotation mismatch",
             show(quote_type(pi->domain)), show(lam->ann));
    }
    bind(lam->hint, pi->domain, vvar(depth()));
    check(lam->body, capply(pi->codomain, vvar(depth() - 1)));
    unbind();
    return;
  }
  if (auto* pr = std::get_if<TPair>(&t->node)) {
    auto* sig = std::get_if<VSigma>(&tw->node);
    if (!sig)
      fail(TypeErrorKind::Mismatch, "pair checked against a non-Sigma type",
           show(quote_type(tw)), "a pair");
    check(pr->fst, sig->first);
    check(pr->snd, capply(sig->second, eval_here(pr->fst)));
    return;
  }
  if (auto* r = std::get_if<TRefl>(&t->node)) {
    if (auto* id = std::get_if<VId>(&tw->node)) {
      expect_universe(infer(r->type), "refl type");
      VPtr A = eval_here(r->type);
      if (!conv_type(A, id->type))
        fail(TypeErrorKind::Mismatch, "refl type annotation mismatch",
             show(quote_type(id->type)), show(r->type));
      check(r->point, id->type);
      VPtr p = eval_here(r->point);
      if (!conv(id->type, p, id->lhs) || !conv(id->type, p, id->rhs))
        fail(TypeErrorKind::Mismatch,
             "refl proves reflexivity only: endpoints differ",
             show(quote_type(tw)), "refl " + show(r->point));
      return;
    }
    fail(TypeErrorKind::Mismatch, "refl checked against a non-Id type",
         show(quote_type(tw)), "a refl");
  }
  VPtr ti = infer(t);
  if (!conv_type(ti, type))
    fail(TypeErrorKind::Mismatch, "type mismatch", show(quote_type(type)),
         show(quote_type(ti)));
}

}  // namespace cht::kernel
