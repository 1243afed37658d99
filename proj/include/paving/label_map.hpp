#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "paving/element_set.hpp"
#include "paving/errors.hpp"

namespace paving {

/// Bijection between element indices 0..n-1 and human-readable names.
class LabelMap {
 public:
  LabelMap() = default;

  /// "e1", "e2", ..., "en".
  static LabelMap default_for(int n) {
    std::vector<std::string> names;
    names.reserve(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) names.push_back("e" + std::to_string(i));
    return LabelMap(std::move(names));
  }

  static LabelMap from_names(std::vector<std::string> names) { return LabelMap(std::move(names)); }

  int size() const { return static_cast<int>(names_.size()); }

  const std::string& name(int index) const {
    if (index < 0 || index >= size())
      throw Error(ErrorCode::out_of_range, "label index " + std::to_string(index));
    return names_[static_cast<size_t>(index)];
  }

  const std::vector<std::string>& names() const { return names_; }

  std::optional<int> index_of(std::string_view name) const {
    auto it = by_name_.find(std::string(name));
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
  }

  /// Labels for the kept elements, in ascending index order (minor results).
  LabelMap restricted_to(ElementSet kept) const {
    std::vector<std::string> names;
    names.reserve(static_cast<size_t>(kept.count()));
    for (int e : kept) names.push_back(name(e));
    return LabelMap(std::move(names));
  }

  std::string set_to_string(ElementSet s) const {
    std::string out = "{";
    bool first = true;
    for (int e : s) {
      if (!first) out += ", ";
      out += name(e);
      first = false;
    }
    return out + "}";
  }

  friend bool operator==(const LabelMap& a, const LabelMap& b) { return a.names_ == b.names_; }
  friend bool operator!=(const LabelMap& a, const LabelMap& b) { return !(a == b); }

 private:
  explicit LabelMap(std::vector<std::string> names) : names_(std::move(names)) {
    for (size_t i = 0; i < names_.size(); ++i) {
      auto [it, fresh] = by_name_.emplace(names_[i], static_cast<int>(i));
      if (!fresh) throw Error(ErrorCode::duplicate_label, "label \"" + names_[i] + "\" repeats");
    }
  }

  std::vector<std::string> names_;
  std::unordered_map<std::string, int> by_name_;
};

}  // namespace paving
