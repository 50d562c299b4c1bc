#ifndef CHT_KERNEL_HPP
#define CHT_KERNEL_HPP

#include <optional>
#include <string>
#include <vector>

#include "cht/env.hpp"
#include "cht/errors.hpp"
#include "cht/surface.hpp"
#include "cht/term.hpp"
#include "cht/value.hpp"

namespace cht::kernel {

struct Flags {
  bool type_in_type = false;
};

// --- semantic operations -------------------------------------------------

VPtr eval(const GlobalEnv& globals, const EnvPtr& env, const TPtr& t);
VPtr vapp(const GlobalEnv& globals, const VPtr& f, const VPtr& a);
VPtr vfst(const GlobalEnv& globals, const VPtr& p);
VPtr vsnd(const GlobalEnv& globals, const VPtr& p);
VPtr capply(const Closure& c, const VPtr& a);

// Evaluates with the first `depth` variables left neutral.
VPtr eval_open(const GlobalEnv& globals, std::size_t depth, const TPtr& t);

// --- checking -------------------------------------------------------------

class Checker {
 public:
  Checker(const GlobalEnv& globals, Flags flags = {})
      : globals_(globals), flags_(flags) {}

  // Loads a core-term context (e.g. the spec's Ctx) into scope.
  void push_ctx(const Ctx& ctx);

  // Core-term judgments. `infer` returns the type as a value.
  VPtr infer(const TPtr& t);
  void check(const TPtr& t, const VPtr& type);
  bool conv(const VPtr& type, const VPtr& a, const VPtr& b);
  bool conv_type(const VPtr& a, const VPtr& b);

  // Surface elaboration, bidirectional; returns the core term.
  TPtr elab_infer(const syntax::SPtr& s, VPtr* type_out);
  TPtr elab_check(const syntax::SPtr& s, const VPtr& type);
  // Elaborates a surface term that must denote a type; returns the core
  // term and its universe level through `level_out` (unless null).
  TPtr elab_type(const syntax::SPtr& s, unsigned long* level_out = nullptr);

  VPtr eval_here(const TPtr& t) const;
  TPtr quote(const VPtr& type, const VPtr& v);
  TPtr quote_type(const VPtr& v);

  std::size_t depth() const { return types_.size(); }
  const GlobalEnv& globals() const { return globals_; }

 private:
  const GlobalEnv& globals_;
  Flags flags_;
  std::vector<VPtr> types_;        // by level
  std::vector<std::string> names_;  // by level
  EnvPtr env_;                      // values, innermost first
  Span span_{0, 0};                 // current surface span for errors

  void bind(const std::string& name, const VPtr& type, const VPtr& value);
  void unbind();
  std::optional<std::size_t> lookup_local(const std::string& name) const;

  [[noreturn]] void fail(TypeErrorKind kind, const std::string& msg,
                         std::optional<std::string> expected = std::nullopt,
                         std::optional<std::string> found = std::nullopt);

  VPtr whnf(const VPtr& v) const;
  bool conv_value(const VPtr& a, const VPtr& b);
  std::optional<VPtr> conv_neutral(const Neutral& a, const Neutral& b);
  unsigned long expect_universe(const VPtr& type, const char* what);
  TPtr quote_neutral(const Neutral& neu);
};

// --- spec-level operations -------------------------------------------------

// Weak-head evaluation with `ctx_depth` free variables.
VPtr op_eval(const GlobalEnv& env, std::size_t ctx_depth, const TPtr& t);

// Beta-normal eta-long form of a checked term.
TPtr normalize(const GlobalEnv& env, const Ctx& ctx, const TPtr& t,
               Flags flags = {});

bool conv(const GlobalEnv& env, const Ctx& ctx, const TPtr& a, const TPtr& b,
          const TPtr& at_type, Flags flags = {});

// Returns the inferred type as a core term.
TPtr infer(const GlobalEnv& env, const Ctx& ctx, const TPtr& t,
           Flags flags = {});

void check(const GlobalEnv& env, const Ctx& ctx, const TPtr& t,
           const TPtr& against, Flags flags = {});

// Checks a surface declaration and extends the environment.
void check_decl(GlobalEnv& env, const syntax::Decl& d, Origin origin,
                Flags flags = {});

// Folds check_decl over a module.
void check_module(GlobalEnv& env, const syntax::SourceModule& m, Origin origin,
                  Flags flags = {});

// Core term from surface (closed), for tests and tools.
TPtr elaborate(const GlobalEnv& env, const syntax::SPtr& s, Flags flags = {});

}  // namespace cht::kernel

#endif
