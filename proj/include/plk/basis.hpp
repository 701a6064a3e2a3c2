#ifndef PLK_BASIS_HPP
#define PLK_BASIS_HPP

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace plk {

using KeyId = std::uint32_t;

// One arity component of a species, presented as its full ordered list of
// canonical basis keys. Key ids are the lexicographic ranks of the canonical
// serializations, so the id order *is* the key order used for pivoting.
//
// Instances are built once by the enumeration routines and then shared;
// a SpeciesVector refers to its component by pointer, and two vectors are
// compatible iff they point at the same BasisSpace.
class BasisSpace {
 public:
  BasisSpace(std::string name, std::vector<std::string> sorted_keys)
      : name_(std::move(name)), keys_(std::move(sorted_keys)) {
    index_.reserve(keys_.size());
    for (KeyId i = 0; i < keys_.size(); ++i) index_.emplace(keys_[i], i);
  }

  BasisSpace(const BasisSpace&) = delete;
  BasisSpace& operator=(const BasisSpace&) = delete;

  const std::string& name() const { return name_; }
  std::size_t dim() const { return keys_.size(); }
  const std::string& key(KeyId id) const { return keys_[id]; }

  bool contains(const std::string& key) const { return index_.count(key) != 0; }

  KeyId id_of(const std::string& key) const {
    auto it = index_.find(key);
    if (it == index_.end())
      throw std::invalid_argument("key '" + key + "' is not a basis key of " + name_);
    return it->second;
  }

 private:
  std::string name_;
  std::vector<std::string> keys_;
  std::unordered_map<std::string, KeyId> index_;
};

}  // namespace plk

#endif
