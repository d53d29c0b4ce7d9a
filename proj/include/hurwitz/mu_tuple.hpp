#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hurwitz/rational.hpp"

namespace hurwitz {

/// Ordered tuple of ramification parts over infinity.
class MuTuple {
 public:
  MuTuple() = default;
  MuTuple(std::initializer_list<int> parts) : parts_(parts) {}
  explicit MuTuple(std::vector<int> parts) : parts_(std::move(parts)) {}

  /// Comma separated positive integers, e.g. "3,1".
  static MuTuple parse(std::string_view text);

  std::size_t size() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  const std::vector<int>& parts() const { return parts_; }
  auto begin() const { return parts_.begin(); }
  auto end() const { return parts_.end(); }

  int sum() const;
  bool all_positive() const;
  /// Non-increasing rearrangement; the canonical memo key form.
  MuTuple sorted() const;
  /// Product of factorials of part multiplicities.
  Integer aut_order() const;

  std::string to_string() const;

  friend bool operator==(const MuTuple&, const MuTuple&) = default;
  friend auto operator<=>(const MuTuple&, const MuTuple&) = default;

 private:
  std::vector<int> parts_;
};

/// Number of simple branch points m = 2g - 2 + n + |mu|/a, or nullopt when a
/// does not divide |mu|. May be negative.
std::optional<long> branch_count(int a, int g, const MuTuple& mu);

/// All ordered n-tuples with entries in [1, max_part], lexicographic.
std::vector<MuTuple> ordered_tuples(int n, int max_part);

/// All partitions (non-increasing tuples) of every total in [1, max_total].
std::vector<MuTuple> partitions_up_to(int max_total);

}  // namespace hurwitz
