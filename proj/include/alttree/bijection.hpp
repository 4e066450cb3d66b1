#pragma once

#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "alttree/perm.hpp"
#include "alttree/tree.hpp"

namespace alttree {

/// Which rewrite a recursion level applied. Forward tags come from the map
/// permutation -> tree, inverse tags from tree -> permutation.
enum class Case {
  base,
  a,       // w2 = k-1: drop k-1 and k, recurse on size n-2
  b1,      // w2 < k-1, and k is a sibling of k-1 in the smaller image
  b2,      // w2 < k-1, otherwise: exchange labels k-1 and k
  inv_a1,  // k-1 is the parent of k and m < s
  inv_a2,  // k-1 is the parent of k and m is absent or m > s
  inv_b,   // k-1 is not the parent of k
};

const char* to_string(Case c);

struct TraceStep {
  Case tag;
  int n;
  int k;
  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

/// Recursion levels from the top call down to the base case.
using CaseTrace = std::vector<TraceStep>;

/// A vertex label or "absent"; absent compares greater than every label.
class SentinelVertex {
 public:
  SentinelVertex() = default;
  explicit SentinelVertex(int label) : label_(label) {}
  static SentinelVertex absent() { return {}; }

  bool is_absent() const { return !label_.has_value(); }
  int label() const { return label_.value(); }

  friend bool operator<(const SentinelVertex& a, const SentinelVertex& b) {
    if (a.is_absent()) return false;
    if (b.is_absent()) return true;
    return *a.label_ < *b.label_;
  }
  friend bool operator>(const SentinelVertex& a, const SentinelVertex& b) { return b < a; }
  friend bool operator==(const SentinelVertex&, const SentinelVertex&) = default;

 private:
  std::optional<int> label_;
};

/// Raised when an internal consistency check fails. Indicates a bug, never
/// bad user input.
class BijectionFault : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct TreeResult {
  IncreasingTree tree;
  CaseTrace trace;
};

struct PermResult {
  AlternatingPermutation perm;
  CaseTrace trace;
};

/// The map A(n,k) -> T(n,k). The chain leaf of the result equals w1.
/// Runs iteratively; recursion depth is not bounded by the stack.
TreeResult phi(const AlternatingPermutation& w);
IncreasingTree phi_tree(const AlternatingPermutation& w);

/// The inverse map T(n,k) -> A(n,k), k = chain_leaf(t).
PermResult phi_inverse(const IncreasingTree& t);
AlternatingPermutation phi_inverse_perm(const IncreasingTree& t);

/// The tag the top recursion level takes. For the b family this runs the
/// map on the reduced permutation to tell b1 from b2.
Case classify_forward(const AlternatingPermutation& w);
Case classify_inverse(const IncreasingTree& t);

/// The other child of k-1 and the sibling of k-1, for a tree whose chain
/// leaf k has parent k-1. Throws std::invalid_argument otherwise.
struct InverseWitness {
  SentinelVertex m;
  SentinelVertex s;
};
InverseWitness inverse_witness(const IncreasingTree& t);

// Single recursion levels on immutable values. These follow the recursive
// definition literally, one level at a time, and cost O(n) each.

/// The permutation the top level recurses on; nullopt at the base case.
std::optional<AlternatingPermutation> reduce_forward(const AlternatingPermutation& w);

/// Builds the image of `w` from the image of reduce_forward(w). Returns the
/// tree and the tag of the rewrite that was applied.
std::pair<IncreasingTree, Case> lift_forward(const AlternatingPermutation& w,
                                             const IncreasingTree& reduced_image);

/// The tree the inverse recurses on (already standardized); nullopt at base.
std::optional<IncreasingTree> reduce_inverse(const IncreasingTree& t);

/// Builds the preimage of `t` from the preimage of reduce_inverse(t).
AlternatingPermutation lift_inverse(const IncreasingTree& t,
                                    const AlternatingPermutation& reduced_preimage);

/// One recursion level of the forward map, with the permutation it received
/// and the tree it produced.
struct Level {
  AlternatingPermutation perm;
  IncreasingTree tree;
  Case tag;
};

/// Every level of the forward recursion, top call first, built with the
/// single-level functions above.
std::vector<Level> forward_levels(const AlternatingPermutation& w);

}  // namespace alttree
