#include "alttree/tree.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace alttree {

const char* to_string(TreeErrc code) {
  switch (code) {
    case TreeErrc::malformed:
      return "malformed";
    case TreeErrc::bad_labels:
      return "bad_labels";
    case TreeErrc::not_connected:
      return "not_connected";
    case TreeErrc::not_increasing:
      return "not_increasing";
    case TreeErrc::degree_exceeded:
      return "degree_exceeded";
  }
  return "unknown";
}

IncreasingTree IncreasingTree::from_labeled_parents(std::vector<int> labels,
                                                    std::span<const int> parent_labels) {
  const std::size_t n = labels.size();
  if (n == 0) throw TreeError(TreeErrc::bad_labels, "tree has no vertices");
  if (parent_labels.size() != n) {
    throw TreeError(TreeErrc::bad_labels, "parent list length differs from label count");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (labels[i] < 1 || (i > 0 && labels[i] <= labels[i - 1])) {
      throw TreeError(TreeErrc::bad_labels, "labels must be positive and strictly increasing");
    }
  }

  IncreasingTree t;
  t.labels_ = std::move(labels);

  std::vector<int> parent_rank(n, -1);
  int roots = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const int p = parent_labels[i];
    if (p == 0) {
      ++roots;
      continue;
    }
    const int r = t.rank_of(p);
    if (r < 0) {
      throw TreeError(TreeErrc::bad_labels,
                      "parent " + std::to_string(p) + " is not a vertex");
    }
    parent_rank[i] = r;
  }
  if (roots != 1) {
    throw TreeError(TreeErrc::not_connected,
                    "expected exactly one root, found " + std::to_string(roots));
  }

  // 0 = unvisited, 1 = on current walk, 2 = reaches the root.
  std::vector<std::uint8_t> state(n, 0);
  std::vector<int> walk;
  for (std::size_t start = 0; start < n; ++start) {
    int v = static_cast<int>(start);
    walk.clear();
    while (v >= 0 && state[v] == 0) {
      state[v] = 1;
      walk.push_back(v);
      v = parent_rank[v];
    }
    if (v >= 0 && state[v] == 1) {
      throw TreeError(TreeErrc::not_connected,
                      "cycle through vertex " + std::to_string(t.labels_[v]));
    }
    for (int w : walk) state[w] = 2;
  }

  for (std::size_t i = 0; i < n; ++i) {
    const int p = parent_labels[i];
    if (p != 0 && p >= t.labels_[i]) {
      throw TreeError(TreeErrc::not_increasing, "parent " + std::to_string(p) +
                                                    " of vertex " +
                                                    std::to_string(t.labels_[i]) +
                                                    " is not smaller");
    }
  }

  t.parent_.assign(parent_labels.begin(), parent_labels.end());
  t.kids_.assign(n, {0, 0});
  t.degree_.assign(n, 0);
  // Labels are visited in ascending order, so each child list ends up sorted.
  for (std::size_t i = 0; i < n; ++i) {
    const int r = parent_rank[i];
    if (r < 0) continue;
    if (t.degree_[r] == 2) {
      throw TreeError(TreeErrc::degree_exceeded,
                      "vertex " + std::to_string(t.labels_[r]) + " has more than two children");
    }
    t.kids_[r][t.degree_[r]++] = t.labels_[i];
  }
  return t;
}

IncreasingTree IncreasingTree::from_parent_array(std::span<const int> parents) {
  std::vector<int> labels(parents.size());
  for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = static_cast<int>(i) + 1;
  return from_labeled_parents(std::move(labels), parents);
}

IncreasingTree IncreasingTree::single_vertex(int label) {
  const int root_parent = 0;
  return from_labeled_parents({label}, std::span<const int>(&root_parent, 1));
}

bool IncreasingTree::is_canonical() const {
  return labels_.front() == 1 && labels_.back() == size();
}

int IncreasingTree::rank_of(int label) const {
  if (is_canonical()) return (label >= 1 && label <= size()) ? label - 1 : -1;
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) return -1;
  return static_cast<int>(it - labels_.begin());
}

int IncreasingTree::checked_rank(int label) const {
  const int r = rank_of(label);
  if (r < 0) throw std::out_of_range("vertex " + std::to_string(label) + " not in tree");
  return r;
}

int IncreasingTree::parent(int v) const { return parent_[checked_rank(v)]; }

std::span<const int> IncreasingTree::children(int v) const {
  const int r = checked_rank(v);
  return {kids_[r].data(), degree_[r]};
}

std::vector<int> IncreasingTree::parent_labels() const { return parent_; }

IncreasingTree validate(const std::map<int, int>& parent_of) {
  const int n = static_cast<int>(parent_of.size()) + 1;
  std::vector<int> parents(static_cast<std::size_t>(n), 0);
  int expected = 2;
  for (const auto& [child, parent] : parent_of) {
    if (child != expected) {
      throw TreeError(TreeErrc::bad_labels,
                      "vertex set must be 1.." + std::to_string(n) + " with root 1");
    }
    if (parent < 1 || parent > n) {
      throw TreeError(TreeErrc::bad_labels,
                      "parent " + std::to_string(parent) + " is not a vertex");
    }
    parents[child - 1] = parent;
    ++expected;
  }
  return IncreasingTree::from_parent_array(parents);
}

MainChain main_chain(const IncreasingTree& t) {
  MainChain chain;
  int v = t.root();
  chain.path.push_back(v);
  for (auto kids = t.children(v); !kids.empty(); kids = t.children(v)) {
    v = kids.front();
    chain.path.push_back(v);
  }
  return chain;
}

int chain_leaf(const IncreasingTree& t) {
  int v = t.root();
  for (auto kids = t.children(v); !kids.empty(); kids = t.children(v)) v = kids.front();
  return v;
}

int chain_leaf_of_parents(std::span<const int> parents) {
  // The smallest child of v is the first w > v whose parent is v.
  const int n = static_cast<int>(parents.size());
  int v = 1;
  for (int w = 2; w <= n; ++w) {
    if (parents[w - 1] == v) v = w;
  }
  return v;
}

void for_each_tree(int n, const std::function<void(std::span<const int>)>& visit) {
  if (n < 1) throw std::invalid_argument("tree size must be at least 1");
  std::vector<int> parents(static_cast<std::size_t>(n), 0);
  std::vector<int> degree(static_cast<std::size_t>(n) + 1, 0);
  // Vertex v picks its parent among 1..v-1, ascending.
  std::function<void(int)> place = [&](int v) {
    if (v > n) {
      visit(parents);
      return;
    }
    for (int p = 1; p < v; ++p) {
      if (degree[p] == 2) continue;
      ++degree[p];
      parents[v - 1] = p;
      place(v + 1);
      --degree[p];
    }
    parents[v - 1] = 0;
  };
  place(2);
}

std::vector<IncreasingTree> enumerate_trees(int n) {
  std::vector<IncreasingTree> out;
  for_each_tree(n, [&](std::span<const int> parents) {
    out.push_back(IncreasingTree::from_parent_array(parents));
  });
  return out;
}

std::vector<IncreasingTree> enumerate_trees_with_leaf(int n, int k) {
  if (n < 1) throw std::invalid_argument("tree size must be at least 1");
  if (k < 1 || k > n) {
    throw std::out_of_range("leaf " + std::to_string(k) + " outside 1.." + std::to_string(n));
  }
  std::vector<IncreasingTree> out;
  for_each_tree(n, [&](std::span<const int> parents) {
    if (chain_leaf_of_parents(parents) == k) {
      out.push_back(IncreasingTree::from_parent_array(parents));
    }
  });
  return out;
}

IncreasingTree relabel(const IncreasingTree& t, std::span<const int> labels) {
  if (static_cast<int>(labels.size()) != t.size()) {
    throw std::invalid_argument("relabel: expected " + std::to_string(t.size()) +
                                " labels, got " + std::to_string(labels.size()));
  }
  std::vector<int> sorted(labels.begin(), labels.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("relabel: duplicate labels");
  }
  const auto old_labels = t.labels();
  auto image = [&](int old) -> int {
    if (old == 0) return 0;
    auto it = std::lower_bound(old_labels.begin(), old_labels.end(), old);
    return sorted[static_cast<std::size_t>(it - old_labels.begin())];
  };
  std::vector<int> parents = t.parent_labels();
  for (int& p : parents) p = image(p);
  // Order preservation keeps every parent below its child, so this cannot
  // throw on valid input.
  return IncreasingTree::from_labeled_parents(std::move(sorted), parents);
}

IncreasingTree parse_tree(std::string_view text) {
  std::vector<int> parents;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    const std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) break;
    int v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + i, v);
    if (ec != std::errc() || ptr != text.data() + i) {
      throw TreeError(TreeErrc::malformed,
                      "not an integer: '" + std::string(text.substr(start, i - start)) + "'");
    }
    parents.push_back(v);
  }
  if (parents.empty()) throw TreeError(TreeErrc::malformed, "empty tree text");
  return IncreasingTree::from_parent_array(parents);
}

std::string serialize_tree(const IncreasingTree& t) {
  if (!t.is_canonical()) {
    throw std::invalid_argument("only trees on 1..n have a text form");
  }
  std::string out;
  for (int p : t.parent_labels()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(p);
  }
  return out;
}

std::string to_dot(const IncreasingTree& t) {
  const MainChain chain = main_chain(t);
  std::vector<char> on_chain;
  const int max_label = t.labels().back();
  on_chain.assign(static_cast<std::size_t>(max_label) + 1, 0);
  for (int v : chain.path) on_chain[v] = 1;

  std::string out = "digraph {\n";
  for (int v : t.labels()) out += "  " + std::to_string(v) + ";\n";
  for (int v : t.labels()) {
    for (int w : t.children(v)) {
      out += "  " + std::to_string(v) + " -> " + std::to_string(w);
      // A child is on the chain only via its parent's smallest-child step.
      if (on_chain[v] && on_chain[w]) out += " [style=bold]";
      out += ";\n";
    }
  }
  out += "}\n";
  return out;
}

}  // namespace alttree
