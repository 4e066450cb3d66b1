#include "alttree/perm.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

namespace alttree {

namespace {

// Fenwick tree over values 1..n, counting inserted values.
class ValueCounter {
 public:
  explicit ValueCounter(int n) : bits_(static_cast<std::size_t>(n) + 1, 0) {}

  void insert(int v) {
    for (; v < static_cast<int>(bits_.size()); v += v & -v) ++bits_[v];
  }

  // Count of inserted values <= v.
  std::int64_t prefix(int v) const {
    std::int64_t s = 0;
    for (; v > 0; v -= v & -v) s += bits_[v];
    return s;
  }

 private:
  std::vector<std::int64_t> bits_;
};

bool alternates(std::span<const int> w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    const bool want_descent = (i % 2 == 0);
    if (want_descent ? !(w[i] > w[i + 1]) : !(w[i] < w[i + 1])) return false;
  }
  return true;
}

// Prefix backtracking. `used` is indexed by value; `w` holds the prefix.
void extend(int n, std::vector<int>& w, std::vector<char>& used,
            const std::function<void(std::span<const int>)>& visit) {
  const std::size_t pos = w.size();
  if (pos == static_cast<std::size_t>(n)) {
    visit(w);
    return;
  }
  // Even 0-based positions after the first must exceed their predecessor;
  // odd positions must be smaller.
  int lo = 1;
  int hi = n;
  if (pos > 0) {
    if (pos % 2 == 1) {
      hi = w.back() - 1;
    } else {
      lo = w.back() + 1;
    }
  }
  for (int v = lo; v <= hi; ++v) {
    if (used[v]) continue;
    used[v] = 1;
    w.push_back(v);
    extend(n, w, used, visit);
    w.pop_back();
    used[v] = 0;
  }
}

void require_length(int n) {
  if (n < 1) throw std::invalid_argument("length must be at least 1");
}

}  // namespace

void require_permutation(std::span<const int> word) {
  if (word.empty()) throw InvalidPermutation("empty word");
  const int n = static_cast<int>(word.size());
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int v : word) {
    if (v < 1 || v > n) {
      throw InvalidPermutation("value " + std::to_string(v) + " out of range 1.." +
                               std::to_string(n));
    }
    if (seen[v]) throw InvalidPermutation("duplicate value " + std::to_string(v));
    seen[v] = 1;
  }
}

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  require_permutation(word_);
}

Permutation Permutation::identity(int n) {
  require_length(n);
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

std::vector<int> Permutation::positions() const {
  std::vector<int> pos(word_.size());
  for (std::size_t i = 0; i < word_.size(); ++i) pos[word_[i] - 1] = static_cast<int>(i);
  return pos;
}

AlternatingPermutation::AlternatingPermutation(Permutation perm) : perm_(std::move(perm)) {
  if (!alternates(perm_.word())) {
    throw NotAlternating("not alternating: " + format_permutation(perm_));
  }
}

bool is_alternating(std::span<const int> word) {
  require_permutation(word);
  return alternates(word);
}

void for_each_alternating(int n, const std::function<void(std::span<const int>)>& visit) {
  require_length(n);
  std::vector<int> w;
  w.reserve(static_cast<std::size_t>(n));
  std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
  extend(n, w, used, visit);
}

void for_each_alternating_with_first(
    int n, int k, const std::function<void(std::span<const int>)>& visit) {
  require_length(n);
  if (k < 1 || k > n) {
    throw std::out_of_range("first letter " + std::to_string(k) + " outside 1.." +
                            std::to_string(n));
  }
  std::vector<int> w{k};
  w.reserve(static_cast<std::size_t>(n));
  std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
  used[k] = 1;
  extend(n, w, used, visit);
}

std::vector<AlternatingPermutation> enumerate_alternating(int n) {
  std::vector<AlternatingPermutation> out;
  for_each_alternating(n, [&](std::span<const int> w) {
    out.emplace_back(std::vector<int>(w.begin(), w.end()));
  });
  return out;
}

std::vector<AlternatingPermutation> enumerate_alternating_with_first(int n, int k) {
  std::vector<AlternatingPermutation> out;
  for_each_alternating_with_first(n, k, [&](std::span<const int> w) {
    out.emplace_back(std::vector<int>(w.begin(), w.end()));
  });
  return out;
}

std::int64_t inversions(std::span<const int> word) {
  require_permutation(word);
  const int n = static_cast<int>(word.size());
  ValueCounter seen(n);
  std::int64_t total = 0;
  for (int i = n - 1; i >= 0; --i) {
    total += seen.prefix(word[i] - 1);
    seen.insert(word[i]);
  }
  return total;
}

std::int64_t occurrences_31_2(std::span<const int> word) {
  require_permutation(word);
  const int n = static_cast<int>(word.size());
  // `later` holds the letters strictly right of position i + 1.
  ValueCounter later(n);
  std::int64_t total = 0;
  for (int i = n - 3; i >= 0; --i) {
    later.insert(word[i + 2]);
    const int hi = word[i];
    const int lo = word[i + 1];
    if (hi > lo) total += later.prefix(hi - 1) - later.prefix(lo);
  }
  return total;
}

Permutation delete_and_standardize(const Permutation& p, std::span<const int> drop) {
  const int n = p.size();
  std::vector<char> dropped(static_cast<std::size_t>(n) + 1, 0);
  for (int v : drop) {
    if (v < 1 || v > n) {
      throw InvalidPermutation("cannot drop " + std::to_string(v) + ": not a value");
    }
    if (dropped[v]) throw InvalidPermutation("value dropped twice: " + std::to_string(v));
    dropped[v] = 1;
  }
  if (static_cast<int>(drop.size()) == n) throw InvalidPermutation("cannot drop every value");
  // rank[v] = number of surviving values <= v.
  std::vector<int> rank(static_cast<std::size_t>(n) + 1, 0);
  for (int v = 1; v <= n; ++v) rank[v] = rank[v - 1] + (dropped[v] ? 0 : 1);
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n) - drop.size());
  for (int v : p.word()) {
    if (!dropped[v]) out.push_back(rank[v]);
  }
  return Permutation(std::move(out));
}

std::vector<int> unstandardize(const Permutation& p, std::span<const int> labels) {
  if (static_cast<int>(labels.size()) != p.size()) {
    throw std::invalid_argument("label set has " + std::to_string(labels.size()) +
                                " entries, permutation has " + std::to_string(p.size()));
  }
  std::vector<int> sorted(labels.begin(), labels.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("label set contains duplicates");
  }
  std::vector<int> out;
  out.reserve(sorted.size());
  for (int v : p.word()) out.push_back(sorted[v - 1]);
  return out;
}

Permutation swap_values(const Permutation& p, int a, int b) {
  const int n = p.size();
  if (a < 1 || a > n || b < 1 || b > n) {
    throw InvalidPermutation("swap of absent value");
  }
  std::vector<int> w(p.word().begin(), p.word().end());
  for (int& v : w) {
    if (v == a) {
      v = b;
    } else if (v == b) {
      v = a;
    }
  }
  return Permutation(std::move(w));
}

Permutation parse_permutation(std::string_view text) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    const std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) tokens.push_back(text.substr(start, i - start));
  }
  if (tokens.empty()) throw InvalidPermutation("empty permutation text");

  std::vector<int> w;
  if (tokens.size() == 1 && tokens[0].size() > 1) {
    // Compact all-digit form.
    for (char c : tokens[0]) {
      if (c < '1' || c > '9') throw InvalidPermutation("bad digit in compact form");
      w.push_back(c - '0');
    }
  } else {
    for (std::string_view tok : tokens) {
      int v = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw InvalidPermutation("not an integer: '" + std::string(tok) + "'");
      }
      w.push_back(v);
    }
  }
  return Permutation(std::move(w));
}

std::string format_word(std::span<const int> word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(word[i]);
  }
  return out;
}

}  // namespace alttree
