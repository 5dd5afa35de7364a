#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ftw/poset.hpp"
#include "ftw/subset.hpp"

namespace ftw {

// Saturation backend: the one operation every cover realization must provide.
// Implementations must be pure; FormalTopology adds memoization on top.
class CoverBackend {
 public:
  virtual ~CoverBackend() = default;
  virtual std::uint64_t saturate(std::uint64_t subset) const = 0;
  virtual std::string kind() const = 0;
};

struct CoverVerdict {
  enum class Axiom { None, I, II, III };
  bool ok = true;
  Axiom axiom = Axiom::None;
  unsigned witness_a = 0;
  Subset witness_u, witness_v;  // v meaningful for axioms II and III
  std::string render(const std::vector<std::string>& labels) const;
};

// A formal topology: a named base plus a covering relation a <| U, realized
// by a saturation backend. Values are cheap to copy (shared immutable state)
// and safe to use from multiple threads; saturation results are memoized
// behind an internal lock.
class FormalTopology {
 public:
  FormalTopology(std::vector<std::string> labels, std::shared_ptr<const CoverBackend> backend,
                 std::optional<Poset> base_poset = std::nullopt);

  unsigned base_size() const { return static_cast<unsigned>(st_->labels.size()); }
  const std::vector<std::string>& labels() const { return st_->labels; }
  const std::optional<Poset>& base_poset() const { return st_->poset; }
  std::string backend_kind() const { return st_->backend->kind(); }

  // The top basic element 1_S with S =_S {1_S}, when one exists
  // (least index wins).
  std::optional<unsigned> top() const { return st_->top; }

  // {a : a <| U}; idempotent, monotone and inflationary for genuine covers.
  Subset saturate(Subset u) const;

  // Saturations of all 2^n subsets, indexed by mask. Built fresh per call;
  // the bulk operations use it instead of hammering the shared memo.
  std::vector<std::uint64_t> saturation_table() const;

  // Axiom-validation verdict, computed on first use and cached.
  const CoverVerdict& axioms_verdict() const;

  // Same underlying state, or same labels and identical saturation operator.
  bool same_space(const FormalTopology& other) const;

 private:
  struct State {
    std::vector<std::string> labels;
    std::optional<Poset> poset;
    std::shared_ptr<const CoverBackend> backend;
    std::optional<unsigned> top;
    mutable std::mutex memo_mutex;
    mutable std::unordered_map<std::uint64_t, std::uint64_t> memo;
    mutable std::optional<CoverVerdict> verdict;
  };
  std::shared_ptr<State> st_;
};

// The basic covering calculus. All subsets must belong to the space's base.

// a <| U
bool covers(const FormalTopology& s, unsigned a, Subset u);

// U `down` V = {d : (exists u in U) d <| {u} and (exists v in V) d <| {v}}
Subset wedge(const FormalTopology& s, Subset u, Subset v);

// U -> V = {a : wedge({a}, U) <| V}
Subset implication(const FormalTopology& s, Subset u, Subset v);

// U* = U -> empty, the largest open disjoint from U.
Subset pseudocomplement(const FormalTopology& s, Subset u);

// U =_S V, i.e. saturations coincide.
bool subsets_equal(const FormalTopology& s, Subset u, Subset v);

// Exhaustive check of the cover axioms:
//   i.   a in U implies a <| U
//   ii.  a <| U and U <| V imply a <| V
//   iii. a <| U and a <| V imply a <| wedge(U, V)
// realized as: saturate is inflationary, idempotent and monotone (i, ii), and
// sat(U) /\ sat(V) = sat(wedge(U, V)) for all pairs (iii). Scans run in
// ascending mask order and the first failing instance is reported, mapped
// back to the axiom it breaks.
CoverVerdict validate_axioms(const FormalTopology& s);

}  // namespace ftw
