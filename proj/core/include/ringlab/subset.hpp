#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace ringlab {

/// Set of element indices of a ring of known order, bitmask-backed.
/// No closure property is implied by the type itself.
class Subset {
 public:
  Subset() = default;
  explicit Subset(int universe);
  static Subset of(int universe, std::initializer_list<int> members);
  static Subset of(int universe, const std::vector<int>& members);
  static Subset full(int universe);

  int universe() const { return n_; }
  int size() const;
  bool empty() const { return size() == 0; }
  bool contains(int i) const;
  void insert(int i);
  void erase(int i);

  bool subset_of(const Subset& other) const;
  Subset operator&(const Subset& other) const;
  Subset operator|(const Subset& other) const;
  Subset minus(const Subset& other) const;
  Subset complement() const;
  bool operator==(const Subset& other) const;
  bool operator!=(const Subset& other) const { return !(*this == other); }

  std::vector<int> members() const;  // ascending
  std::string brace_list() const;    // "{1,3,5}"

  /// Compares the bitmask values as big integers (sum of 2^i over members).
  static bool value_less(const Subset& a, const Subset& b);
  /// Canonical order used everywhere: by cardinality, then bitmask value.
  static bool canonical_less(const Subset& a, const Subset& b);

  std::size_t hash() const;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> bits_;
};

struct SubsetHash {
  std::size_t operator()(const Subset& s) const { return s.hash(); }
};

}  // namespace ringlab
