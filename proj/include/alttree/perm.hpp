#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace alttree {

/// Raised when a word is not a rearrangement of 1..n.
class InvalidPermutation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a permutation fails the down-up pattern where one is required.
class NotAlternating : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A permutation of [n] in one-line notation. Always non-empty and valid.
class Permutation {
 public:
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(word_.size()); }
  std::span<const int> word() const { return word_; }
  int first() const { return word_.front(); }

  // 0-based access.
  int operator[](std::size_t i) const { return word_[i]; }

  /// Position (0-based) of each value; result[v - 1] is the index of v.
  std::vector<int> positions() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> word_;
};

/// A permutation satisfying w1 > w2 < w3 > w4 < ...
class AlternatingPermutation {
 public:
  /// Throws NotAlternating if `perm` does not alternate.
  explicit AlternatingPermutation(Permutation perm);
  explicit AlternatingPermutation(std::vector<int> word)
      : AlternatingPermutation(Permutation(std::move(word))) {}

  const Permutation& perm() const { return perm_; }
  std::span<const int> word() const { return perm_.word(); }
  int size() const { return perm_.size(); }
  int first() const { return perm_.first(); }
  int operator[](std::size_t i) const { return perm_[i]; }

  friend bool operator==(const AlternatingPermutation&,
                         const AlternatingPermutation&) = default;
  friend auto operator<=>(const AlternatingPermutation&,
                          const AlternatingPermutation&) = default;

 private:
  Permutation perm_;
};

/// Throws InvalidPermutation unless `word` is a permutation of 1..size.
void require_permutation(std::span<const int> word);

/// Strict down-up check. Validates `word` as a permutation first.
bool is_alternating(std::span<const int> word);

/// Visits every alternating word of length n in lexicographic order. The
/// span is only valid for the duration of the call.
void for_each_alternating(int n, const std::function<void(std::span<const int>)>& visit);
void for_each_alternating_with_first(
    int n, int k, const std::function<void(std::span<const int>)>& visit);

std::vector<AlternatingPermutation> enumerate_alternating(int n);
std::vector<AlternatingPermutation> enumerate_alternating_with_first(int n, int k);

/// Number of pairs i < j with w_i > w_j.
std::int64_t inversions(std::span<const int> word);
inline std::int64_t inversions(const Permutation& p) { return inversions(p.word()); }

/// Occurrences of the vincular pattern 31-2: a descent w_i > w_{i+1} together
/// with a later letter w_j (j > i + 1) satisfying w_{i+1} < w_j < w_i.
std::int64_t occurrences_31_2(std::span<const int> word);
inline std::int64_t occurrences_31_2(const Permutation& p) {
  return occurrences_31_2(p.word());
}

/// Removes the values in `drop` and relabels the survivors order-preservingly
/// onto 1..(n - |drop|).
Permutation delete_and_standardize(const Permutation& p, std::span<const int> drop);

/// Maps the i-th smallest value of `p` to the i-th smallest of `labels`.
std::vector<int> unstandardize(const Permutation& p, std::span<const int> labels);

/// Exchanges the letters a and b in place.
Permutation swap_values(const Permutation& p, int a, int b);

/// Accepts "7 4 8 5 9 1 6 2 3" or, when every value is a single digit,
/// the compact "748591623". Throws InvalidPermutation on malformed input.
Permutation parse_permutation(std::string_view text);

/// Space-separated decimal form.
std::string format_word(std::span<const int> word);
inline std::string format_permutation(const Permutation& p) { return format_word(p.word()); }

}  // namespace alttree
