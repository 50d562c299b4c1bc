#ifndef CHT_ENV_HPP
#define CHT_ENV_HPP

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cht/term.hpp"
#include "cht/value.hpp"

namespace cht::kernel {

enum class Origin { Base, PreludeAxiom, Stdlib, Signature, User };

const char* to_string(Origin o);

// Append-only registry of checked declarations.
class GlobalEnv {
 public:
  struct Entry {
    std::string name;
    TPtr type;
    TPtr body;  // null for postulates
    Origin origin = Origin::User;
    mutable VPtr type_value;  // caches, filled on demand
    mutable LazyPtr body_value;
  };

  bool contains(const std::string& name) const {
    return index_.count(name) != 0;
  }
  const Entry* find(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? nullptr : &entries_[it->second];
  }
  const Entry& at(const std::string& name) const;

  void add(Entry e);

  std::size_t size() const { return entries_.size(); }
  const std::vector<Entry>& entries() const { return entries_; }

 private:
  std::vector<Entry> entries_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Telescope of binder types, innermost last (core terms).
struct Ctx {
  std::vector<TPtr> types;
  std::vector<std::string> names;
};

}  // namespace cht::kernel

#endif
