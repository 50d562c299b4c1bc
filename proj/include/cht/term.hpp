#ifndef CHT_TERM_HPP
#define CHT_TERM_HPP

#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace cht::kernel {

struct Term;
using TPtr = std::shared_ptr<const Term>;

// de Bruijn index, innermost binder = 0
struct TVar {
  std::size_t index;
};
struct TConst {
  std::string name;
};
struct TU {
  unsigned long level;
};
struct TPi {  // codomain binds one variable
  TPtr domain;
  TPtr codomain;
  std::string hint;
};
struct TLam {  // ann may be null (unannotated lambdas check but do not infer)
  TPtr ann;
  TPtr body;
  std::string hint;
};
struct TApp {
  TPtr fn;
  TPtr arg;
};
struct TSigma {  // second binds one variable
  TPtr first;
  TPtr second;
  std::string hint;
};
struct TPair {
  TPtr fst;
  TPtr snd;
};
struct TFst {
  TPtr arg;
};
struct TSnd {
  TPtr arg;
};
struct TUnit {};
struct TStar {};
struct TId {
  TPtr type;
  TPtr lhs;
  TPtr rhs;
};
struct TRefl {
  TPtr type;
  TPtr point;
};
struct TJ {  // fully applied Martin-Löf eliminator
  TPtr motive;
  TPtr base;
  TPtr lhs;
  TPtr rhs;
  TPtr path;
};

using TNode = std::variant<TVar, TConst, TU, TPi, TLam, TApp, TSigma, TPair,
                           TFst, TSnd, TUnit, TStar, TId, TRefl, TJ>;

struct Term {
  TNode node;
};

TPtr mk(TNode node);

// Structural equality up to alpha (indices make this literal equality;
// binder hints are ignored).
bool alpha_equal(const TPtr& a, const TPtr& b);

// Renders a core term using binder hints; used in messages and goldens.
std::string show(const TPtr& t);

}  // namespace cht::kernel

#endif
