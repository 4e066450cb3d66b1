#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace alttree {

using BigInt = boost::multiprecision::cpp_int;

/// Sum of c_ij q^i p^j with nonzero integer coefficients. The q exponent
/// tracks inversions and the p exponent tracks 31-2 occurrences.
class BivariatePoly {
 public:
  using Exponents = std::pair<int, int>;  // (q-degree, p-degree)

  BivariatePoly() = default;
  static BivariatePoly monomial(int q_exp, int p_exp, BigInt coeff = 1);

  const std::map<Exponents, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt coefficient(int q_exp, int p_exp) const;

  void add_term(int q_exp, int p_exp, const BigInt& coeff);

  BigInt evaluate(const BigInt& q, const BigInt& p) const;

  /// Human-readable form, highest q-degree last: "q^3*p + q^4". "0" if zero.
  std::string to_string() const;

  friend bool operator==(const BivariatePoly&, const BivariatePoly&) = default;

 private:
  std::map<Exponents, BigInt> terms_;
};

BivariatePoly poly_add(const BivariatePoly& f, const BivariatePoly& g);
BivariatePoly poly_mul_monomial(const BivariatePoly& f, int q_exp, int p_exp);

inline BivariatePoly operator+(const BivariatePoly& f, const BivariatePoly& g) {
  return poly_add(f, g);
}

/// Triangle of integers indexed by (n, k), 1 <= k <= n. Missing cells read 0.
class CountTable {
 public:
  CountTable() = default;
  explicit CountTable(int n_max) : n_max_(n_max) {}

  int n_max() const { return n_max_; }
  BigInt get(int n, int k) const;
  void set(int n, int k, BigInt value);
  BigInt row_sum(int n) const;

  /// Cellwise equality on rows 1..n.
  bool agrees_with(const CountTable& other, int n) const;

 private:
  int n_max_ = 0;
  std::map<std::pair<int, int>, BigInt> cells_;
};

using PolyTable = std::map<std::pair<int, int>, BivariatePoly>;

/// Largest n for which enumeration-based tables are built.
inline constexpr int kEnumerationCap = 12;

/// Sum over A(n,k) of q^inv p^(31-2).
BivariatePoly a_poly_direct(int n, int k);

/// a_poly_direct for every 1 <= k <= n <= n_max, one enumeration per row.
PolyTable a_poly_table(int n_max);

CountTable perm_counts_enumerated(int n_max);
CountTable tree_counts_enumerated(int n_max);

/// Fills a_{n,k} = a_{n,k-1} + sum_{i=k+1..n} a_{n-2,i-2} from the seeds
/// a_{1,1} = 1, a_{2,2} = 1 and a_{n,1} = 0 for n >= 2.
CountTable counts_by_recurrence(int n_max);

struct CountTables {
  CountTable perm_enumerated;
  CountTable tree_enumerated;
  CountTable recurrence;
  int enumerated_up_to = 0;
};

/// Enumerates up to min(n_max, enumeration_cap); the recurrence table runs
/// to n_max.
CountTables count_tables(int n_max, int enumeration_cap = kEnumerationCap);

struct CellCheck {
  int n;
  int k;
  bool pass;
  std::string detail;  // filled on failure
};

struct IdentityReport {
  std::string name;
  std::vector<CellCheck> cells;

  std::size_t failures() const;
  bool all_pass() const { return failures() == 0; }
  const CellCheck* first_failure() const;
};

/// a_{n,k}(q,p) = q p a_{n,k-1}(q,p) + q^{2k-3} sum_{i=k+1..n} a_{n-2,i-2}(q,p)
/// for n_min <= n <= n_max, 2 <= k <= n. The identity does not hold at
/// (n, k) = (2, 2), so the default starts at n = 3.
IdentityReport a_poly_recurrence_check(int n_max, int n_min = 3);
IdentityReport a_poly_recurrence_check(const PolyTable& table, int n_max, int n_min = 3);

/// c_{n,k} = c_{n,k-1} + sum_{i=k+1..n} c_{n-2,i-2} on the given table.
IdentityReport count_recurrence_check(const CountTable& table, int n_min, int n_max,
                                      std::string name);

/// t_{n,k} = t_{n,k-1} + t_{n-1,n-k+1} for 2 <= k <= n <= n_max.
IdentityReport kpp_identity_check(const CountTable& trees, int n_max);
IdentityReport kpp_identity_check(int n_max);

/// Rows "n: c_{n,1} ... c_{n,n}", values right-aligned to a common width.
std::string format_triangle(const CountTable& table, int n_max);
/// Lines "n k value", lexicographic.
std::string format_count_lines(const CountTable& table, int n_max);
/// Lines "n k i j coeff" for every nonzero term, lexicographic.
std::string format_poly_lines(const PolyTable& table, int n_max);

}  // namespace alttree
