#include "ringlab/subset.hpp"

#include <bit>
#include <cassert>

namespace ringlab {

Subset::Subset(int universe) : n_(universe), bits_((universe + 63) / 64, 0) {}

Subset Subset::of(int universe, std::initializer_list<int> members) {
  Subset s(universe);
  for (int m : members) s.insert(m);
  return s;
}

Subset Subset::of(int universe, const std::vector<int>& members) {
  Subset s(universe);
  for (int m : members) s.insert(m);
  return s;
}

Subset Subset::full(int universe) {
  Subset s(universe);
  for (int i = 0; i < universe; ++i) s.insert(i);
  return s;
}

int Subset::size() const {
  int count = 0;
  for (std::uint64_t block : bits_) count += std::popcount(block);
  return count;
}

bool Subset::contains(int i) const {
  assert(i >= 0 && i < n_);
  return (bits_[i >> 6] >> (i & 63)) & 1;
}

void Subset::insert(int i) {
  assert(i >= 0 && i < n_);
  bits_[i >> 6] |= std::uint64_t(1) << (i & 63);
}

void Subset::erase(int i) {
  assert(i >= 0 && i < n_);
  bits_[i >> 6] &= ~(std::uint64_t(1) << (i & 63));
}

bool Subset::subset_of(const Subset& other) const {
  assert(n_ == other.n_);
  for (std::size_t b = 0; b < bits_.size(); ++b)
    if (bits_[b] & ~other.bits_[b]) return false;
  return true;
}

Subset Subset::operator&(const Subset& other) const {
  assert(n_ == other.n_);
  Subset out(n_);
  for (std::size_t b = 0; b < bits_.size(); ++b)
    out.bits_[b] = bits_[b] & other.bits_[b];
  return out;
}

Subset Subset::operator|(const Subset& other) const {
  assert(n_ == other.n_);
  Subset out(n_);
  for (std::size_t b = 0; b < bits_.size(); ++b)
    out.bits_[b] = bits_[b] | other.bits_[b];
  return out;
}

Subset Subset::minus(const Subset& other) const {
  assert(n_ == other.n_);
  Subset out(n_);
  for (std::size_t b = 0; b < bits_.size(); ++b)
    out.bits_[b] = bits_[b] & ~other.bits_[b];
  return out;
}

Subset Subset::complement() const {
  Subset out(n_);
  for (std::size_t b = 0; b < bits_.size(); ++b) out.bits_[b] = ~bits_[b];
  if (n_ & 63) out.bits_.back() &= (std::uint64_t(1) << (n_ & 63)) - 1;
  return out;
}

bool Subset::operator==(const Subset& other) const {
  return n_ == other.n_ && bits_ == other.bits_;
}

std::vector<int> Subset::members() const {
  std::vector<int> out;
  for (int i = 0; i < n_; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

std::string Subset::brace_list() const {
  std::string out = "{";
  bool first = true;
  for (int m : members()) {
    if (!first) out += ",";
    out += std::to_string(m);
    first = false;
  }
  out += "}";
  return out;
}

bool Subset::value_less(const Subset& a, const Subset& b) {
  assert(a.n_ == b.n_);
  for (std::size_t b_idx = a.bits_.size(); b_idx-- > 0;) {
    if (a.bits_[b_idx] != b.bits_[b_idx]) return a.bits_[b_idx] < b.bits_[b_idx];
  }
  return false;
}

bool Subset::canonical_less(const Subset& a, const Subset& b) {
  int sa = a.size(), sb = b.size();
  if (sa != sb) return sa < sb;
  return value_less(a, b);
}

std::size_t Subset::hash() const {
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ std::uint64_t(n_);
  for (std::uint64_t block : bits_) {
    h ^= block + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return std::size_t(h);
}

}  // namespace ringlab
