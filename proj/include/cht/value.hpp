#ifndef CHT_VALUE_HPP
#define CHT_VALUE_HPP

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cht/term.hpp"

namespace cht::kernel {

struct Value;
using VPtr = std::shared_ptr<const Value>;

// Evaluation environment: persistent cons list, index 0 = innermost.
struct EnvNode {
  VPtr value;
  std::shared_ptr<const EnvNode> next;
};
using EnvPtr = std::shared_ptr<const EnvNode>;

EnvPtr env_push(const EnvPtr& env, VPtr v);
const VPtr& env_lookup(const EnvPtr& env, std::size_t index);

class GlobalEnv;

struct Closure {  // binds one variable
  const GlobalEnv* globals = nullptr;
  EnvPtr env;
  TPtr body;
};

// Memoized thunk for glued evaluation of transparent constants.
class Lazy {
 public:
  explicit Lazy(std::function<VPtr()> compute) : compute_(std::move(compute)) {}
  const VPtr& force() const {
    if (!memo_) memo_ = compute_();
    return *memo_;
  }

 private:
  mutable std::optional<VPtr> memo_;
  std::function<VPtr()> compute_;
};
using LazyPtr = std::shared_ptr<Lazy>;

struct NHead {
  enum Kind { Var, Const } kind;
  std::size_t level = 0;  // de Bruijn level when Var
  std::string name;       // when Const
};

struct SpineApp {
  VPtr arg;
};
struct SpineFst {};
struct SpineSnd {};
struct SpineJ {
  VPtr motive;
  VPtr base;
  VPtr lhs;
  VPtr rhs;
};
using SpineElem = std::variant<SpineApp, SpineFst, SpineSnd, SpineJ>;

struct Neutral {
  NHead head;
  std::vector<SpineElem> spine;
};

struct VU {
  unsigned long level;
};
struct VPi {
  VPtr domain;
  Closure codomain;
  std::string hint;
};
struct VLam {
  Closure body;
  std::string hint;
};
struct VSigma {
  VPtr first;
  Closure second;
  std::string hint;
};
struct VPair {
  VPtr fst;
  VPtr snd;
};
struct VUnitT {};
struct VStar {};
struct VId {
  VPtr type;
  VPtr lhs;
  VPtr rhs;
};
struct VRefl {
  VPtr type;
  VPtr point;
};
// Stuck term headed by a variable or an opaque constant. `unfolded` is
// non-null when the head is a transparent constant (glued evaluation):
// the spine view supports fast syntactic comparison, the lazy view the
// real weak-head value.
struct VNeutral {
  Neutral neu;
  LazyPtr unfolded;
};

using VNode = std::variant<VU, VPi, VLam, VSigma, VPair, VUnitT, VStar, VId,
                           VRefl, VNeutral>;

struct Value {
  VNode node;
};

VPtr mkv(VNode node);
VPtr vvar(std::size_t level);

bool is_neutral(const VPtr& v);

}  // namespace cht::kernel

#endif
