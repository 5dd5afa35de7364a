#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ftw/config.hpp"
#include "ftw/subset.hpp"

namespace ftw {

// Finite partially ordered set over named elements. The relation is stored as
// full row masks (up-sets and down-sets), so order queries are O(1); Hasse
// edges are derived on demand for DOT output.
//
// Construction does not check the order laws: a Poset value may hold an
// arbitrary reflexive-looking relation, and validate_poset reports the first
// violated law with a witness. Everything downstream assumes a valid order.
class Poset {
 public:
  // Relation given as full rows: up_rows[a] = mask of {b : a <= b}.
  Poset(std::vector<std::string> labels, std::vector<std::uint64_t> up_rows,
        const Limits& limits = {});

  // Relation generated from pairs and closed reflexively-transitively.
  static Poset from_pairs(std::vector<std::string> labels,
                          const std::vector<std::pair<unsigned, unsigned>>& le_pairs,
                          const Limits& limits = {});

  static Poset chain(unsigned n, std::vector<std::string> labels, const Limits& limits = {});
  static Poset antichain(std::vector<std::string> labels, const Limits& limits = {});

  unsigned size() const { return static_cast<unsigned>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }

  bool le(unsigned a, unsigned b) const { return (up_[a] >> b) & 1u; }
  Subset up_set(unsigned a) const { return Subset(up_[a], size()); }
  Subset down_set(unsigned y) const { return Subset(down_[y], size()); }
  // Downward closure of a subset: union of the members' down-sets.
  Subset down_closure(Subset u) const;

  // Covering pairs (a, b): a < b with nothing strictly between.
  std::vector<std::pair<unsigned, unsigned>> hasse_edges() const;

  std::optional<unsigned> index_of(const std::string& label) const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::uint64_t> up_;    // up_[a] = {b : a <= b}
  std::vector<std::uint64_t> down_;  // down_[y] = {x : x <= y}
};

struct PosetVerdict {
  enum class Law { None, Reflexivity, Antisymmetry, Transitivity };
  bool ok = true;
  Law law = Law::None;
  std::array<unsigned, 3> witness{};  // 1, 2 or 3 meaningful entries by law
  std::string render(const std::vector<std::string>& labels) const;
};

// Checks reflexivity, then antisymmetry, then transitivity, each as an
// exhaustive scan in ascending index order; reports the first violation.
PosetVerdict validate_poset(const Poset& p);

// Lattice and Heyting structure of a valid poset. Meet/join entries are
// present exactly where the bound exists; absence of structure is data.
// The arrow is computed pointwise as max{c : c /\ a <= b}; if that set has no
// greatest element for some pair the poset is reported non-Heyting.
struct LatticeInfo {
  bool has_all_meets = false;
  bool has_all_joins = false;
  std::vector<std::optional<unsigned>> meet;  // n*n row-major
  std::vector<std::optional<unsigned>> join;
  std::optional<unsigned> bottom, top;
  std::optional<std::vector<unsigned>> heyting_arrow;  // n*n when Heyting

  bool is_lattice() const { return has_all_meets && has_all_joins; }
  bool is_heyting() const { return heyting_arrow.has_value(); }
};

LatticeInfo analyze_lattice(const Poset& p);

}  // namespace ftw
