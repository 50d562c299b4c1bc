#include "cht/value.hpp"

#include <stdexcept>

#include "cht/env.hpp"

namespace cht::kernel {

EnvPtr env_push(const EnvPtr& env, VPtr v) {
  return std::make_shared<EnvNode>(EnvNode{std::move(v), env});
}

const VPtr& env_lookup(const EnvPtr& env, std::size_t index) {
  const EnvNode* node = env.get();
  while (node && index > 0) {
    node = node->next.get();
    --index;
  }
  if (!node) throw std::logic_error("de Bruijn index out of scope");
  return node->value;
}

VPtr mkv(VNode node) { return std::make_shared<Value>(Value{std::move(node)}); }

VPtr vvar(std::size_t level) {
  return mkv(VNeutral{Neutral{NHead{NHead::Var, level, {}}, {}}, nullptr});
}

bool is_neutral(const VPtr& v) {
  return std::holds_alternative<VNeutral>(v->node);
}

const char* to_string(Origin o) {
  switch (o) {
    case Origin::Base: return "base";
    case Origin::PreludeAxiom: return "prelude-axiom";
    case Origin::Stdlib: return "stdlib";
    case Origin::Signature: return "signature";
    case Origin::User: return "user";
  }
  return "?";
}

const GlobalEnv::Entry& GlobalEnv::at(const std::string& name) const {
  const Entry* e = find(name);
  if (!e) throw std::logic_error("unknown constant: " + name);
  return *e;
}

void GlobalEnv::add(Entry e) {
  if (contains(e.name)) throw std::logic_error("duplicate constant: " + e.name);
  index_.emplace(e.name, entries_.size());
  entries_.push_back(std::move(e));
}

}  // namespace cht::kernel
