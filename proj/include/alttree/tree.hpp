#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace alttree {

enum class TreeErrc {
  malformed,        // text could not be parsed
  bad_labels,       // vertex set is not the expected label set
  not_connected,    // extra root, or a cycle in the parent map
  not_increasing,   // some parent label >= child label
  degree_exceeded,  // a vertex with more than two children
};

const char* to_string(TreeErrc code);

class TreeError : public std::invalid_argument {
 public:
  TreeError(TreeErrc code, const std::string& what)
      : std::invalid_argument(what), code_(code) {}
  TreeErrc code() const { return code_; }

 private:
  TreeErrc code_;
};

/// A rooted tree whose labels increase away from the root and where every
/// vertex has at most two children. Children are unordered; they are always
/// reported in ascending label order.
///
/// The label set is any strictly increasing sequence of positive integers.
/// Trees on 1..n are the canonical case and the only ones with a text form.
class IncreasingTree {
 public:
  /// `parents[v - 1]` is the parent of v, 0 for the root. Throws TreeError.
  static IncreasingTree from_parent_array(std::span<const int> parents);

  /// `labels` strictly increasing; `parent_labels[i]` is the parent label of
  /// `labels[i]`, 0 for the root. Throws TreeError.
  static IncreasingTree from_labeled_parents(std::vector<int> labels,
                                             std::span<const int> parent_labels);

  static IncreasingTree single_vertex(int label = 1);

  int size() const { return static_cast<int>(labels_.size()); }
  std::span<const int> labels() const { return labels_; }
  bool is_canonical() const;
  bool contains(int label) const { return rank_of(label) >= 0; }

  int root() const { return labels_.front(); }
  /// Parent label, or 0 for the root.
  int parent(int v) const;
  /// Child labels in ascending order (zero, one or two entries).
  std::span<const int> children(int v) const;

  /// Parent labels in label order, 0 for the root. For canonical trees this
  /// is the parent array of the text format.
  std::vector<int> parent_labels() const;

  friend bool operator==(const IncreasingTree& a, const IncreasingTree& b) {
    return a.labels_ == b.labels_ && a.parent_ == b.parent_;
  }

 private:
  IncreasingTree() = default;
  int rank_of(int label) const;
  int checked_rank(int label) const;

  std::vector<int> labels_;                 // ascending
  std::vector<int> parent_;                 // by rank, parent label or 0
  std::vector<std::array<int, 2>> kids_;    // by rank, ascending labels
  std::vector<std::uint8_t> degree_;        // by rank
};

/// Validates a parent map on {1..n}: keys must be exactly 2..n and vertex 1
/// is the root. Checks run in the order labels, connectivity, increasing,
/// degree; the first failure is thrown as TreeError.
IncreasingTree validate(const std::map<int, int>& parent_of);

struct MainChain {
  std::vector<int> path;
  int leaf() const { return path.back(); }
};

/// Path from the root that always steps to the smallest child.
MainChain main_chain(const IncreasingTree& t);
int chain_leaf(const IncreasingTree& t);

/// Chain leaf computed directly on a canonical parent array (no validation).
int chain_leaf_of_parents(std::span<const int> parents);

/// Visits the parent array of every 0-1-2 increasing tree on [n], in
/// lexicographic order of parent arrays.
void for_each_tree(int n, const std::function<void(std::span<const int>)>& visit);

std::vector<IncreasingTree> enumerate_trees(int n);
std::vector<IncreasingTree> enumerate_trees_with_leaf(int n, int k);

/// Order-preserving relabeling onto `labels` (any order, must be distinct).
IncreasingTree relabel(const IncreasingTree& t, std::span<const int> labels);

/// Text form: n integers, position v holds parent(v), 0 for the root.
IncreasingTree parse_tree(std::string_view text);
std::string serialize_tree(const IncreasingTree& t);

/// Graphviz digraph; main-chain edges carry [style=bold].
std::string to_dot(const IncreasingTree& t);

}  // namespace alttree
