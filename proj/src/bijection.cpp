#include "alttree/bijection.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <utility>

namespace alttree {

const char* to_string(Case c) {
  switch (c) {
    case Case::base:
      return "BASE";
    case Case::a:
      return "A_CASE";
    case Case::b1:
      return "B1_CASE";
    case Case::b2:
      return "B2_CASE";
    case Case::inv_a1:
      return "INV_A1";
    case Case::inv_a2:
      return "INV_A2";
    case Case::inv_b:
      return "INV_B";
  }
  return "?";
}

namespace {

void expect(bool cond, const char* what) {
  if (!cond) throw BijectionFault(what);
}

IncreasingTree base_tree(int n) {
  if (n == 1) return IncreasingTree::single_vertex();
  const std::array<int, 2> parents{0, 1};
  return IncreasingTree::from_parent_array(parents);
}

std::vector<int> base_word(int n) { return n == 1 ? std::vector<int>{1} : std::vector<int>{2, 1}; }

// {1, ..., k-2, k+1, ..., n}
std::vector<int> labels_without_pair(int n, int k) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n) - 2);
  for (int v = 1; v <= n; ++v) {
    if (v != k - 1 && v != k) out.push_back(v);
  }
  return out;
}

// Mutable tree on labels 1..n with fixed capacity, used by the iterative
// engines. Child pairs are kept ascending; 0 marks an empty slot.
class WorkTree {
 public:
  explicit WorkTree(int capacity)
      : parent_(static_cast<std::size_t>(capacity) + 1, 0),
        kids_(static_cast<std::size_t>(capacity) + 1, {0, 0}),
        scratch_parent_(parent_.size(), 0),
        scratch_kids_(kids_.size(), {0, 0}) {}

  void load(const IncreasingTree& t) {
    n_ = t.size();
    root_ = t.root();
    for (int v = 1; v <= n_; ++v) {
      parent_[v] = t.parent(v);
      auto ch = t.children(v);
      kids_[v] = {ch.size() > 0 ? ch[0] : 0, ch.size() > 1 ? ch[1] : 0};
    }
  }

  void load_base(int n) {
    n_ = n;
    root_ = 1;
    parent_[1] = 0;
    kids_[1] = {n == 2 ? 2 : 0, 0};
    if (n == 2) {
      parent_[2] = 1;
      kids_[2] = {0, 0};
    }
  }

  IncreasingTree snapshot() const {
    return IncreasingTree::from_parent_array(
        std::span<const int>(parent_.data() + 1, static_cast<std::size_t>(n_)));
  }

  int size() const { return n_; }
  int root() const { return root_; }
  int parent(int v) const { return parent_[v]; }
  const std::array<int, 2>& kids(int v) const { return kids_[v]; }

  int chain_leaf() const {
    int v = root_;
    while (kids_[v][0] != 0) v = kids_[v][0];
    return v;
  }

  // First main-chain vertex with label greater than `bound`, or 0.
  int first_chain_vertex_above(int bound) const {
    for (int v = root_; v != 0; v = kids_[v][0]) {
      if (v > bound) return v;
    }
    return 0;
  }

  // The child of v other than `known`, or 0.
  int other_child(int v, int known) const {
    const auto& k = kids_[v];
    if (k[0] == known) return k[1];
    if (k[1] == known) return k[0];
    throw BijectionFault("other_child: not a child");
  }

  void set_kids(int v, int a, int b) {
    if (a == 0 || (b != 0 && b < a)) std::swap(a, b);
    kids_[v] = {a, b};
    if (a != 0) parent_[a] = v;
    if (b != 0) parent_[b] = v;
  }

  void replace_kid(int v, int old_kid, int new_kid) {
    auto& k = kids_[v];
    if (k[0] == old_kid) {
      k[0] = new_kid;
    } else if (k[1] == old_kid) {
      k[1] = new_kid;
    } else {
      throw BijectionFault("replace_kid: not a child");
    }
    if (k[0] == 0 || (k[1] != 0 && k[1] < k[0])) std::swap(k[0], k[1]);
    if (new_kid != 0) parent_[new_kid] = v;
  }

  // Exchanges labels x and y, which must not be adjacent.
  void swap_labels(int x, int y) {
    expect(parent_[x] != y && parent_[y] != x, "swap_labels: adjacent vertices");
    const int px = parent_[x];
    const int py = parent_[y];
    for (int c : kids_[x]) {
      if (c) parent_[c] = y;
    }
    for (int c : kids_[y]) {
      if (c) parent_[c] = x;
    }
    std::swap(kids_[x], kids_[y]);
    if (px == py) {
      // Siblings: the pair stays the same set.
      parent_[x] = px;
      parent_[y] = py;
    } else {
      if (px) swap_in(px, x, y);
      if (py) swap_in(py, y, x);
      parent_[x] = py;
      parent_[y] = px;
    }
    if (root_ == x) {
      root_ = y;
    } else if (root_ == y) {
      root_ = x;
    }
  }

  // Relabels 1..n to the image of `map` (monotone) and sets the new size.
  template <class Map>
  void remap(int new_size, int old_size, Map map) {
    for (int v = 1; v <= new_size; ++v) {
      scratch_parent_[v] = 0;
      scratch_kids_[v] = {0, 0};
    }
    for (int v = 1; v <= old_size; ++v) {
      const int nv = map(v);
      if (nv == 0) continue;
      scratch_parent_[nv] = parent_[v] ? map(parent_[v]) : 0;
      scratch_kids_[nv] = {kids_[v][0] ? map(kids_[v][0]) : 0,
                           kids_[v][1] ? map(kids_[v][1]) : 0};
    }
    root_ = map(root_);
    n_ = new_size;
    std::swap(parent_, scratch_parent_);
    std::swap(kids_, scratch_kids_);
  }

  void set_root(int v) {
    root_ = v;
    parent_[v] = 0;
  }

  void clear(int v) {
    parent_[v] = 0;
    kids_[v] = {0, 0};
  }

 private:
  void swap_in(int p, int from, int to) {
    auto& k = kids_[p];
    if (k[0] == from) {
      k[0] = to;
    } else {
      k[1] = to;
    }
    if (k[1] != 0 && k[1] < k[0]) std::swap(k[0], k[1]);
  }

  int n_ = 0;
  int root_ = 1;
  std::vector<int> parent_;
  std::vector<std::array<int, 2>> kids_;
  std::vector<int> scratch_parent_;
  std::vector<std::array<int, 2>> scratch_kids_;
};

// A recursion level that shrinks n by two, or a run of levels at fixed n
// where k steps down by one from k_top to k_low inclusive.
struct Segment {
  bool shrink;
  int n;
  int k_top;
  int k_low;
  std::size_t trace_index;
};

// Applies, in order, the value swaps (k_low-1 k_low), ..., (k_top-1 k_top).
// Net effect: k_low-1 becomes k_top and each v in [k_low, k_top] becomes v-1.
void unwind_swap_run(std::vector<int>& w, int k_top, int k_low) {
  for (int& v : w) {
    if (v == k_low - 1) {
      v = k_top;
    } else if (v >= k_low && v <= k_top) {
      --v;
    }
  }
}

// Case (b1) surgery at label k on a tree whose chain leaf is k-1 and in
// which k is a sibling of k-1.
void lift_b1(WorkTree& t, int k) {
  const int j = t.parent(k - 1);
  const int a = t.kids(k)[0];  // smaller subtree root, or 0
  const int b = t.kids(k)[1];  // larger subtree root, or 0
  t.set_kids(j, k - 1, a);
  t.set_kids(k - 1, k, b);
  t.set_kids(k, 0, 0);
}

// Case (a) surgery on a tree over {1..k-2, k+1..n}.
void lift_a(WorkTree& t, int k) {
  const int m = t.first_chain_vertex_above(k);
  expect(m != 0, "lift_a: main chain has no vertex above k");
  const int j = t.parent(m);
  if (j != 0) {
    t.replace_kid(j, m, k - 1);
  } else {
    expect(k - 1 == 1, "lift_a: new root must be 1");
    t.set_root(k - 1);
  }
  t.set_kids(k - 1, k, m);
  t.set_kids(k, 0, 0);
}

IncreasingTree phi_forward_engine(const AlternatingPermutation& input, CaseTrace* trace) {
  std::vector<int> w(input.word().begin(), input.word().end());
  const int top_n = static_cast<int>(w.size());
  std::vector<Segment> segments;
  if (trace) trace->clear();

  int n = top_n;
  while (n > 2) {
    const int k = w[0];
    const int second = w[1];
    if (second == k - 1) {
      segments.push_back({true, n, k, k, trace ? trace->size() : 0});
      if (trace) trace->push_back({Case::a, n, k});
      w.erase(w.begin(), w.begin() + 2);
      for (int& v : w) {
        if (v > k) v -= 2;
      }
      n -= 2;
    } else {
      // Run of b-levels until the second letter is k-1.
      const int k_low = second + 2;
      segments.push_back({false, n, k, k_low, trace ? trace->size() : 0});
      if (trace) {
        for (int kk = k; kk >= k_low; --kk) trace->push_back({Case::b2, n, kk});
      }
      for (std::size_t i = 1; i < w.size(); ++i) {
        if (w[i] > second && w[i] < k) ++w[i];
      }
      w[0] = second + 1;
    }
  }
  if (trace) trace->push_back({Case::base, n, w[0]});

  WorkTree t(top_n);
  t.load_base(n);
  for (auto it = segments.rbegin(); it != segments.rend(); ++it) {
    const Segment& seg = *it;
    if (seg.shrink) {
      const int k = seg.k_top;
      t.remap(seg.n, seg.n - 2, [k](int v) { return v >= k - 1 ? v + 2 : v; });
      lift_a(t, k);
      continue;
    }
    for (int k = seg.k_low; k <= seg.k_top; ++k) {
      const int j = t.parent(k - 1);
      const bool sibling = j != 0 && t.parent(k) == j;
      if (sibling) {
        lift_b1(t, k);
      } else {
        t.swap_labels(k - 1, k);
      }
      if (trace) {
        (*trace)[seg.trace_index + static_cast<std::size_t>(seg.k_top - k)].tag =
            sibling ? Case::b1 : Case::b2;
      }
    }
  }
  return t.snapshot();
}

std::vector<int> phi_inverse_engine(const IncreasingTree& input, CaseTrace* trace) {
  if (!input.is_canonical()) throw std::invalid_argument("tree must be labeled 1..n");
  const int top_n = input.size();
  WorkTree t(top_n);
  t.load(input);
  std::vector<Segment> segments;
  if (trace) trace->clear();

  int n = top_n;
  int k = t.chain_leaf();
  while (n > 2) {
    if (t.parent(k) == k - 1) {
      const int m = t.other_child(k - 1, k);
      const int j = t.parent(k - 1);
      const int s = j != 0 ? t.other_child(j, k - 1) : 0;
      const SentinelVertex mv = m ? SentinelVertex(m) : SentinelVertex::absent();
      const SentinelVertex sv = s ? SentinelVertex(s) : SentinelVertex::absent();
      if (!mv.is_absent() && mv < sv) {
        segments.push_back({true, n, k, k, 0});
        if (trace) trace->push_back({Case::inv_a1, n, k});
        if (j != 0) {
          t.replace_kid(j, k - 1, m);
        } else {
          t.set_root(m);
        }
        t.clear(k - 1);
        t.clear(k);
        t.remap(n - 2, n, [k](int v) { return v > k ? v - 2 : (v >= k - 1 ? 0 : v); });
        n -= 2;
        k = t.chain_leaf();
        continue;
      }
      expect(j != 0, "inverse (A2): k-1 has no parent");
      if (trace) trace->push_back({Case::inv_a2, n, k});
      t.set_kids(j, k - 1, k);
      t.set_kids(k - 1, 0, 0);
      t.set_kids(k, s, m);
    } else {
      if (trace) trace->push_back({Case::inv_b, n, k});
      t.swap_labels(k - 1, k);
    }
    if (!segments.empty() && !segments.back().shrink && segments.back().n == n &&
        segments.back().k_low == k + 1) {
      segments.back().k_low = k;
    } else {
      segments.push_back({false, n, k, k, 0});
    }
    --k;
  }
  if (trace) trace->push_back({Case::base, n, k});

  std::vector<int> w = base_word(n);
  for (auto it = segments.rbegin(); it != segments.rend(); ++it) {
    const Segment& seg = *it;
    if (seg.shrink) {
      const int kk = seg.k_top;
      for (int& v : w) {
        if (v >= kk - 1) v += 2;
      }
      w.insert(w.begin(), {kk, kk - 1});
    } else {
      unwind_swap_run(w, seg.k_top, seg.k_low);
    }
  }
  return w;
}

}  // namespace

TreeResult phi(const AlternatingPermutation& w) {
  CaseTrace trace;
  IncreasingTree t = phi_forward_engine(w, &trace);
  return {std::move(t), std::move(trace)};
}

IncreasingTree phi_tree(const AlternatingPermutation& w) { return phi_forward_engine(w, nullptr); }

PermResult phi_inverse(const IncreasingTree& t) {
  CaseTrace trace;
  std::vector<int> w = phi_inverse_engine(t, &trace);
  return {AlternatingPermutation(std::move(w)), std::move(trace)};
}

AlternatingPermutation phi_inverse_perm(const IncreasingTree& t) {
  return AlternatingPermutation(phi_inverse_engine(t, nullptr));
}

InverseWitness inverse_witness(const IncreasingTree& t) {
  const int k = chain_leaf(t);
  if (k < 2 || t.parent(k) != k - 1) {
    throw std::invalid_argument("chain leaf's parent is not k-1");
  }
  InverseWitness out;
  for (int c : t.children(k - 1)) {
    if (c != k) out.m = SentinelVertex(c);
  }
  const int j = t.parent(k - 1);
  if (j != 0) {
    for (int c : t.children(j)) {
      if (c != k - 1) out.s = SentinelVertex(c);
    }
  }
  return out;
}

Case classify_inverse(const IncreasingTree& t) {
  if (t.size() <= 2) return Case::base;
  const int k = chain_leaf(t);
  if (t.parent(k) != k - 1) return Case::inv_b;
  const InverseWitness wit = inverse_witness(t);
  return (!wit.m.is_absent() && wit.m < wit.s) ? Case::inv_a1 : Case::inv_a2;
}

std::optional<AlternatingPermutation> reduce_forward(const AlternatingPermutation& w) {
  if (w.size() <= 2) return std::nullopt;
  const int k = w.first();
  if (w[1] == k - 1) {
    const std::array<int, 2> drop{k - 1, k};
    return AlternatingPermutation(delete_and_standardize(w.perm(), drop));
  }
  return AlternatingPermutation(swap_values(w.perm(), k - 1, k));
}

std::pair<IncreasingTree, Case> lift_forward(const AlternatingPermutation& w,
                                             const IncreasingTree& reduced_image) {
  const int n = w.size();
  const int k = w.first();
  if (n <= 2) throw std::invalid_argument("lift_forward: base case has no reduction");

  if (w[1] == k - 1) {
    expect(reduced_image.size() == n - 2, "lift_forward (a): image size");
    const std::vector<int> labels = labels_without_pair(n, k);
    const IncreasingTree relabeled = relabel(reduced_image, labels);
    int m = 0;
    for (int v : main_chain(relabeled).path) {
      if (v > k) {
        m = v;
        break;
      }
    }
    expect(m != 0, "lift_forward (a): no chain vertex above k");
    const int j = relabeled.parent(m);
    std::vector<int> parents(static_cast<std::size_t>(n), 0);
    for (int v : relabeled.labels()) parents[v - 1] = relabeled.parent(v);
    parents[m - 1] = k - 1;
    parents[k - 2] = j;
    parents[k - 1] = k - 1;
    return {IncreasingTree::from_parent_array(parents), Case::a};
  }

  expect(reduced_image.size() == n, "lift_forward (b): image size");
  expect(chain_leaf(reduced_image) == k - 1, "lift_forward (b): chain leaf is not k-1");
  std::vector<int> parents = reduced_image.parent_labels();
  const int j = parents[k - 2];
  if (j != 0 && parents[k - 1] == j) {
    const auto kids = reduced_image.children(k);
    if (!kids.empty()) parents[kids[0] - 1] = j;
    if (kids.size() > 1) parents[kids[1] - 1] = k - 1;
    parents[k - 1] = k - 1;
    return {IncreasingTree::from_parent_array(parents), Case::b1};
  }
  auto swap_label = [k](int v) { return v == k - 1 ? k : (v == k ? k - 1 : v); };
  std::vector<int> swapped(parents.size(), 0);
  for (int v = 1; v <= n; ++v) swapped[swap_label(v) - 1] = swap_label(parents[v - 1]);
  return {IncreasingTree::from_parent_array(swapped), Case::b2};
}

Case classify_forward(const AlternatingPermutation& w) {
  if (w.size() <= 2) return Case::base;
  if (w[1] == w.first() - 1) return Case::a;
  const auto reduced = reduce_forward(w);
  return lift_forward(w, phi_tree(*reduced)).second;
}

std::optional<IncreasingTree> reduce_inverse(const IncreasingTree& t) {
  if (!t.is_canonical()) throw std::invalid_argument("tree must be labeled 1..n");
  const int n = t.size();
  if (n <= 2) return std::nullopt;
  const int k = chain_leaf(t);
  std::vector<int> parents = t.parent_labels();
  const Case c = classify_inverse(t);

  if (c == Case::inv_a1) {
    const InverseWitness wit = inverse_witness(t);
    const int m = wit.m.label();
    const int j = t.parent(k - 1);
    parents[m - 1] = j;
    std::vector<int> labels;
    std::vector<int> kept;
    for (int v = 1; v <= n; ++v) {
      if (v == k - 1 || v == k) continue;
      labels.push_back(v);
      kept.push_back(parents[v - 1]);
    }
    const IncreasingTree pruned = IncreasingTree::from_labeled_parents(labels, kept);
    std::vector<int> canonical(labels.size());
    std::iota(canonical.begin(), canonical.end(), 1);
    return relabel(pruned, canonical);
  }

  if (c == Case::inv_a2) {
    const InverseWitness wit = inverse_witness(t);
    const int j = t.parent(k - 1);
    expect(j != 0, "reduce_inverse (A2): k-1 has no parent");
    parents[k - 1] = j;
    if (!wit.s.is_absent()) parents[wit.s.label() - 1] = k;
    if (!wit.m.is_absent()) parents[wit.m.label() - 1] = k;
    return IncreasingTree::from_parent_array(parents);
  }

  auto swap_label = [k](int v) { return v == k - 1 ? k : (v == k ? k - 1 : v); };
  std::vector<int> swapped(parents.size(), 0);
  for (int v = 1; v <= n; ++v) swapped[swap_label(v) - 1] = swap_label(parents[v - 1]);
  return IncreasingTree::from_parent_array(swapped);
}

AlternatingPermutation lift_inverse(const IncreasingTree& t,
                                    const AlternatingPermutation& reduced_preimage) {
  const int n = t.size();
  const int k = chain_leaf(t);
  const Case c = classify_inverse(t);
  if (c == Case::base) throw std::invalid_argument("lift_inverse: base case has no reduction");
  if (c == Case::inv_a1) {
    expect(reduced_preimage.size() == n - 2, "lift_inverse (A1): preimage size");
    std::vector<int> w{k, k - 1};
    const std::vector<int> rest =
        unstandardize(reduced_preimage.perm(), labels_without_pair(n, k));
    w.insert(w.end(), rest.begin(), rest.end());
    return AlternatingPermutation(std::move(w));
  }
  expect(reduced_preimage.size() == n, "lift_inverse: preimage size");
  return AlternatingPermutation(swap_values(reduced_preimage.perm(), k - 1, k));
}

std::vector<Level> forward_levels(const AlternatingPermutation& w) {
  std::vector<AlternatingPermutation> chain{w};
  while (auto next = reduce_forward(chain.back())) chain.push_back(std::move(*next));

  std::vector<Level> levels;
  levels.reserve(chain.size());
  IncreasingTree image = base_tree(chain.back().size());
  levels.push_back({chain.back(), image, Case::base});
  for (std::size_t i = chain.size() - 1; i-- > 0;) {
    auto [lifted, tag] = lift_forward(chain[i], image);
    image = lifted;
    levels.push_back({chain[i], std::move(lifted), tag});
  }
  std::reverse(levels.begin(), levels.end());
  return levels;
}

}  // namespace alttree
