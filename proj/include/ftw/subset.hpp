#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "ftw/error.hpp"

namespace ftw {

// A subset of a fixed finite base, stored as a bit mask: bit i set means
// element i is a member. The base size travels with the value so that
// complements and full sets stay well defined. Canonical iteration order is
// ascending element index; canonical order between subsets is ascending mask
// value (which refines inclusion).
class Subset {
 public:
  static constexpr unsigned kMaxBase = 64;

  Subset() = default;

  Subset(std::uint64_t bits, unsigned base_size) : bits_(bits), size_(base_size) {
    if (base_size > kMaxBase) throw SizeCapError("base size exceeds 64-element representation limit");
    if (bits & ~mask_of(base_size)) throw PreconditionError("subset has members outside its base");
  }

  static Subset empty(unsigned base_size) { return Subset(0, base_size); }
  static Subset full(unsigned base_size) { return Subset(mask_of(base_size), base_size); }
  static Subset single(unsigned element, unsigned base_size) {
    if (element >= base_size) throw PreconditionError("element outside base");
    return Subset(std::uint64_t{1} << element, base_size);
  }

  std::uint64_t bits() const { return bits_; }
  unsigned base_size() const { return size_; }

  bool test(unsigned e) const { return e < size_ && ((bits_ >> e) & 1u); }
  bool is_empty() const { return bits_ == 0; }
  unsigned count() const { return static_cast<unsigned>(std::popcount(bits_)); }

  Subset with(unsigned e) const { return Subset(bits_ | (std::uint64_t{1} << e), size_); }
  Subset without(unsigned e) const { return Subset(bits_ & ~(std::uint64_t{1} << e), size_); }

  bool contains(const Subset& other) const { return (other.bits_ & ~bits_) == 0; }

  Subset operator&(const Subset& o) const { return Subset(bits_ & o.bits_, size_); }
  Subset operator|(const Subset& o) const { return Subset(bits_ | o.bits_, size_); }
  Subset minus(const Subset& o) const { return Subset(bits_ & ~o.bits_, size_); }
  Subset complement() const { return Subset(~bits_ & mask_of(size_), size_); }

  bool operator==(const Subset&) const = default;

  std::vector<unsigned> members() const {
    std::vector<unsigned> out;
    for (std::uint64_t m = bits_; m; m &= m - 1)
      out.push_back(static_cast<unsigned>(std::countr_zero(m)));
    return out;
  }

  // "{a,b}" with names in index order; "{}" when empty.
  std::string render(const std::vector<std::string>& labels) const {
    std::string out = "{";
    bool first = true;
    for (unsigned e : members()) {
      if (!first) out += ',';
      out += labels.at(e);
      first = false;
    }
    out += '}';
    return out;
  }

  static std::uint64_t mask_of(unsigned n) {
    return n == 0 ? 0 : (~std::uint64_t{0} >> (kMaxBase - n));
  }

 private:
  std::uint64_t bits_ = 0;
  unsigned size_ = 0;
};

inline std::uint64_t subset_count(unsigned base_size) { return std::uint64_t{1} << base_size; }

}  // namespace ftw
