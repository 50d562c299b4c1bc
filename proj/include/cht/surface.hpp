#ifndef CHT_SURFACE_HPP
#define CHT_SURFACE_HPP

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cht/span.hpp"
#include "cht/token.hpp"

namespace cht::syntax {

struct STerm;
using SPtr = std::shared_ptr<const STerm>;

struct SVar {
  std::string name;
};
struct SLam {
  std::string binder;
  SPtr ann;
  SPtr body;
};
struct SApp {
  SPtr fn;
  SPtr arg;
};
struct SPi {  // binder "_" renders as A -> B
  std::string binder;
  SPtr domain;
  SPtr codomain;
};
struct SSigma {
  std::string binder;
  SPtr first;
  SPtr second;
};
struct SPair {
  SPtr fst;
  SPtr snd;
};
struct SFst {
  SPtr arg;
};
struct SSnd {
  SPtr arg;
};
struct SId {
  SPtr type;
  SPtr lhs;
  SPtr rhs;
};
struct SRefl {
  SPtr point;
};
struct SJ {
  SPtr motive;
  SPtr base;
  SPtr lhs;
  SPtr rhs;
  SPtr path;
};
struct SType {
  unsigned long level;
};
struct SLet {
  std::string binder;
  SPtr ann;
  SPtr value;
  SPtr body;
};
struct SUnit {};
struct STt {};

using SNode = std::variant<SVar, SLam, SApp, SPi, SSigma, SPair, SFst, SSnd,
                           SId, SRefl, SJ, SType, SLet, SUnit, STt>;

struct STerm {
  SNode node;
  Span span;
};

SPtr make(SNode node, Span span);

enum class DeclKind { Definition, Postulate };

struct Decl {
  DeclKind kind;
  std::string name;
  SPtr type;
  SPtr body;  // null iff postulate
  Span span;
};

struct SourceModule {
  std::vector<Decl> decls;
  std::string source_name;
};

// Parses a whole module (sequence of declarations).
SourceModule parse_module(const std::string& text,
                          const std::string& source_name = "<input>");

// Parses a single term (must consume all input).
SPtr parse_term(const std::string& text);

std::string print_term(const SPtr& t);
std::string print_decl(const Decl& d);

// Structural equality, spans ignored; binder names compared literally.
bool structurally_equal(const SPtr& a, const SPtr& b);

}  // namespace cht::syntax

#endif
