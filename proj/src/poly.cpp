#include "alttree/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "alttree/perm.hpp"
#include "alttree/tree.hpp"

namespace alttree {

BivariatePoly BivariatePoly::monomial(int q_exp, int p_exp, BigInt coeff) {
  BivariatePoly f;
  f.add_term(q_exp, p_exp, coeff);
  return f;
}

BigInt BivariatePoly::coefficient(int q_exp, int p_exp) const {
  auto it = terms_.find({q_exp, p_exp});
  return it == terms_.end() ? BigInt(0) : it->second;
}

void BivariatePoly::add_term(int q_exp, int p_exp, const BigInt& coeff) {
  if (q_exp < 0 || p_exp < 0) throw std::invalid_argument("negative exponent");
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace({q_exp, p_exp}, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt BivariatePoly::evaluate(const BigInt& q, const BigInt& p) const {
  BigInt total = 0;
  for (const auto& [e, c] : terms_) {
    total += c * boost::multiprecision::pow(q, static_cast<unsigned>(e.first)) *
             boost::multiprecision::pow(p, static_cast<unsigned>(e.second));
  }
  return total;
}

std::string BivariatePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    const auto [i, j] = e;
    const bool unit = (i == 0 && j == 0);
    if (c != 1 || unit) out << c;
    std::string var;
    if (i > 0) var += i == 1 ? "q" : "q^" + std::to_string(i);
    if (j > 0) {
      if (!var.empty()) var += '*';
      var += j == 1 ? "p" : "p^" + std::to_string(j);
    }
    if (!var.empty()) {
      if (c != 1) out << '*';
      out << var;
    }
  }
  return out.str();
}

BivariatePoly poly_add(const BivariatePoly& f, const BivariatePoly& g) {
  BivariatePoly out = f;
  for (const auto& [e, c] : g.terms()) out.add_term(e.first, e.second, c);
  return out;
}

BivariatePoly poly_mul_monomial(const BivariatePoly& f, int q_exp, int p_exp) {
  BivariatePoly out;
  for (const auto& [e, c] : f.terms()) out.add_term(e.first + q_exp, e.second + p_exp, c);
  return out;
}

BigInt CountTable::get(int n, int k) const {
  auto it = cells_.find({n, k});
  return it == cells_.end() ? BigInt(0) : it->second;
}

void CountTable::set(int n, int k, BigInt value) {
  n_max_ = std::max(n_max_, n);
  cells_[{n, k}] = std::move(value);
}

BigInt CountTable::row_sum(int n) const {
  BigInt s = 0;
  for (int k = 1; k <= n; ++k) s += get(n, k);
  return s;
}

bool CountTable::agrees_with(const CountTable& other, int n) const {
  for (int m = 1; m <= n; ++m) {
    for (int k = 1; k <= m; ++k) {
      if (get(m, k) != other.get(m, k)) return false;
    }
  }
  return true;
}

namespace {

void require_range(int n, int k) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (k < 1 || k > n) throw std::out_of_range("k outside 1..n");
}

void require_cap(int n_max) {
  if (n_max > kEnumerationCap) {
    throw std::out_of_range("enumeration is capped at n = " + std::to_string(kEnumerationCap));
  }
}

BivariatePoly statistic_term(std::span<const int> w) {
  return BivariatePoly::monomial(static_cast<int>(inversions(w)),
                                 static_cast<int>(occurrences_31_2(w)));
}

// First term (in exponent order) where f and g differ.
std::string first_difference(const BivariatePoly& f, const BivariatePoly& g) {
  auto fi = f.terms().begin();
  auto gi = g.terms().begin();
  while (fi != f.terms().end() || gi != g.terms().end()) {
    BivariatePoly::Exponents e;
    if (gi == g.terms().end() || (fi != f.terms().end() && fi->first < gi->first)) {
      e = fi->first;
    } else if (fi == f.terms().end() || gi->first < fi->first) {
      e = gi->first;
    } else if (fi->second != gi->second) {
      e = fi->first;
    } else {
      ++fi;
      ++gi;
      continue;
    }
    std::ostringstream out;
    out << "q^" << e.first << " p^" << e.second << ": lhs " << f.coefficient(e.first, e.second)
        << ", rhs " << g.coefficient(e.first, e.second);
    return out.str();
  }
  return {};
}

}  // namespace

BivariatePoly a_poly_direct(int n, int k) {
  require_range(n, k);
  BivariatePoly f;
  for_each_alternating_with_first(n, k, [&](std::span<const int> w) {
    f.add_term(static_cast<int>(inversions(w)), static_cast<int>(occurrences_31_2(w)), 1);
  });
  return f;
}

PolyTable a_poly_table(int n_max) {
  require_cap(n_max);
  PolyTable table;
  for (int n = 1; n <= n_max; ++n) {
    for (int k = 1; k <= n; ++k) table[{n, k}];
    for_each_alternating(n, [&](std::span<const int> w) {
      table[{n, w[0]}] = table[{n, w[0]}] + statistic_term(w);
    });
  }
  return table;
}

CountTable perm_counts_enumerated(int n_max) {
  require_cap(n_max);
  CountTable table(n_max);
  for (int n = 1; n <= n_max; ++n) {
    std::vector<long long> row(static_cast<std::size_t>(n) + 1, 0);
    for_each_alternating(n, [&](std::span<const int> w) { ++row[w[0]]; });
    for (int k = 1; k <= n; ++k) table.set(n, k, row[k]);
  }
  return table;
}

CountTable tree_counts_enumerated(int n_max) {
  require_cap(n_max);
  CountTable table(n_max);
  for (int n = 1; n <= n_max; ++n) {
    std::vector<long long> row(static_cast<std::size_t>(n) + 1, 0);
    for_each_tree(n, [&](std::span<const int> parents) { ++row[chain_leaf_of_parents(parents)]; });
    for (int k = 1; k <= n; ++k) table.set(n, k, row[k]);
  }
  return table;
}

CountTable counts_by_recurrence(int n_max) {
  if (n_max < 1) throw std::invalid_argument("n_max must be at least 1");
  CountTable table(n_max);
  table.set(1, 1, 1);
  if (n_max >= 2) {
    table.set(2, 1, 0);
    table.set(2, 2, 1);
  }
  for (int n = 3; n <= n_max; ++n) {
    table.set(n, 1, 0);
    // Suffix sums of row n-2 give sum_{i=k+1..n} a_{n-2,i-2} in O(1) per k.
    BigInt tail = 0;
    std::vector<BigInt> suffix(static_cast<std::size_t>(n) + 2, 0);
    for (int k = n; k >= 2; --k) {
      suffix[k] = tail;
      tail += table.get(n - 2, k - 2);
    }
    for (int k = 2; k <= n; ++k) table.set(n, k, table.get(n, k - 1) + suffix[k]);
  }
  return table;
}

CountTables count_tables(int n_max, int enumeration_cap) {
  CountTables out;
  out.enumerated_up_to = std::min({n_max, enumeration_cap, kEnumerationCap});
  out.perm_enumerated = perm_counts_enumerated(out.enumerated_up_to);
  out.tree_enumerated = tree_counts_enumerated(out.enumerated_up_to);
  out.recurrence = counts_by_recurrence(n_max);
  return out;
}

std::size_t IdentityReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(cells.begin(), cells.end(), [](const CellCheck& c) { return !c.pass; }));
}

const CellCheck* IdentityReport::first_failure() const {
  for (const CellCheck& c : cells) {
    if (!c.pass) return &c;
  }
  return nullptr;
}

IdentityReport a_poly_recurrence_check(const PolyTable& table, int n_max, int n_min) {
  IdentityReport report{"(q,p) recurrence", {}};
  auto at = [&](int n, int k) -> BivariatePoly {
    auto it = table.find({n, k});
    return it == table.end() ? BivariatePoly{} : it->second;
  };
  for (int n = std::max(n_min, 2); n <= n_max; ++n) {
    for (int k = 2; k <= n; ++k) {
      BivariatePoly tail;
      for (int i = k + 1; i <= n; ++i) tail = tail + at(n - 2, i - 2);
      const BivariatePoly rhs =
          poly_mul_monomial(at(n, k - 1), 1, 1) + poly_mul_monomial(tail, 2 * k - 3, 0);
      const BivariatePoly lhs = at(n, k);
      const bool pass = lhs == rhs;
      report.cells.push_back({n, k, pass, pass ? std::string() : first_difference(lhs, rhs)});
    }
  }
  return report;
}

IdentityReport a_poly_recurrence_check(int n_max, int n_min) {
  return a_poly_recurrence_check(a_poly_table(n_max), n_max, n_min);
}

IdentityReport count_recurrence_check(const CountTable& table, int n_min, int n_max,
                                      std::string name) {
  IdentityReport report{std::move(name), {}};
  for (int n = std::max(n_min, 2); n <= n_max; ++n) {
    for (int k = 2; k <= n; ++k) {
      BigInt rhs = table.get(n, k - 1);
      for (int i = k + 1; i <= n; ++i) rhs += table.get(n - 2, i - 2);
      const BigInt lhs = table.get(n, k);
      const bool pass = lhs == rhs;
      std::string detail;
      if (!pass) {
        std::ostringstream out;
        out << "lhs " << lhs << ", rhs " << rhs;
        detail = out.str();
      }
      report.cells.push_back({n, k, pass, detail});
    }
  }
  return report;
}

IdentityReport kpp_identity_check(const CountTable& trees, int n_max) {
  IdentityReport report{"t(n,k) = t(n,k-1) + t(n-1,n-k+1)", {}};
  for (int n = 2; n <= n_max; ++n) {
    for (int k = 2; k <= n; ++k) {
      const BigInt rhs = trees.get(n, k - 1) + trees.get(n - 1, n - k + 1);
      const BigInt lhs = trees.get(n, k);
      const bool pass = lhs == rhs;
      std::string detail;
      if (!pass) {
        std::ostringstream out;
        out << "lhs " << lhs << ", rhs " << rhs;
        detail = out.str();
      }
      report.cells.push_back({n, k, pass, detail});
    }
  }
  return report;
}

IdentityReport kpp_identity_check(int n_max) {
  return kpp_identity_check(tree_counts_enumerated(n_max), n_max);
}

std::string format_triangle(const CountTable& table, int n_max) {
  std::size_t width = 1;
  for (int n = 1; n <= n_max; ++n) {
    for (int k = 1; k <= n; ++k) width = std::max(width, table.get(n, k).str().size());
  }
  const std::size_t label_width = std::to_string(n_max).size();
  std::string out;
  for (int n = 1; n <= n_max; ++n) {
    std::string label = std::to_string(n);
    out += std::string(label_width - label.size(), ' ') + label + ":";
    for (int k = 1; k <= n; ++k) {
      const std::string cell = table.get(n, k).str();
      out += ' ' + std::string(width - cell.size(), ' ') + cell;
    }
    out += '\n';
  }
  return out;
}

std::string format_count_lines(const CountTable& table, int n_max) {
  std::ostringstream out;
  for (int n = 1; n <= n_max; ++n) {
    for (int k = 1; k <= n; ++k) out << n << ' ' << k << ' ' << table.get(n, k) << '\n';
  }
  return out.str();
}

std::string format_poly_lines(const PolyTable& table, int n_max) {
  std::ostringstream out;
  for (const auto& [cell, poly] : table) {
    if (cell.first > n_max) continue;
    for (const auto& [e, c] : poly.terms()) {
      out << cell.first << ' ' << cell.second << ' ' << e.first << ' ' << e.second << ' ' << c
          << '\n';
    }
  }
  return out.str();
}

}  // namespace alttree
