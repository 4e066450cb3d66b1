#include "alttree/verify.hpp"

#include <functional>
#include <future>
#include <set>
#include <sstream>

#include "alttree/bijection.hpp"
#include "alttree/fixtures.hpp"
#include "alttree/perm.hpp"
#include "alttree/poly.hpp"
#include "alttree/tree.hpp"

namespace alttree {

namespace {

std::string upto(int n) { return "n<=" + std::to_string(n); }

class Tally {
 public:
  explicit Tally(VerifySection& s) : s_(s) {}
  void check(bool ok, const std::function<std::string()>& describe) {
    if (ok) {
      ++s_.passes;
      return;
    }
    if (s_.failures++ == 0) s_.first_counterexample = describe();
  }

 private:
  VerifySection& s_;
};

// Exceptions inside a section count as a failure of that section.
VerifySection guarded(std::string name, std::string range,
                      const std::function<void(Tally&)>& body) {
  VerifySection s;
  s.name = std::move(name);
  s.range = std::move(range);
  Tally tally(s);
  try {
    body(tally);
  } catch (const std::exception& e) {
    tally.check(false, [&] { return std::string("exception: ") + e.what(); });
  }
  return s;
}

void merge(Tally& tally, const IdentityReport& report) {
  for (const CellCheck& c : report.cells) {
    tally.check(c.pass, [&] {
      return report.name + " at (" + std::to_string(c.n) + "," + std::to_string(c.k) + "): " +
             c.detail;
    });
  }
}

void check_column(Tally& tally, const fixtures::Column& col) {
  const Permutation p = parse_permutation(col.word);
  const std::string w(col.word);
  tally.check(is_alternating(p.word()), [&] { return w + " is not alternating"; });
  tally.check(p.first() == col.first, [&] { return w + ": first letter"; });
  tally.check(inversions(p) == col.inv, [&] {
    return w + ": inv " + std::to_string(inversions(p)) + ", expected " + std::to_string(col.inv);
  });
  tally.check(occurrences_31_2(p) == col.occ_31_2, [&] {
    return w + ": 31-2 count " + std::to_string(occurrences_31_2(p)) + ", expected " +
           std::to_string(col.occ_31_2);
  });
  const IncreasingTree image = phi_tree(AlternatingPermutation(p));
  tally.check(image == parse_tree(col.tree), [&] {
    return w + ": image " + serialize_tree(image) + ", expected " + std::string(col.tree);
  });
  tally.check(chain_leaf(image) == col.leaf, [&] { return w + ": chain leaf"; });
}

void check_fixtures(Tally& tally, const std::vector<MapFixture>& extra) {
  const auto& chain = fixtures::kConstructionChain;
  for (const auto& col : chain) check_column(tally, col);
  for (const auto& col : fixtures::kSizeFour) check_column(tally, col);

  // The recursion on the largest column visits the others in order.
  const auto levels = forward_levels(AlternatingPermutation(parse_permutation(chain.back().word)));
  tally.check(levels.size() == chain.size(),
              [&] { return "recursion has " + std::to_string(levels.size()) + " levels"; });
  for (std::size_t i = 0; i < levels.size() && i < chain.size(); ++i) {
    const auto& col = chain[chain.size() - 1 - i];
    const bool ok = levels[i].perm.perm() == parse_permutation(col.word) &&
                    levels[i].tree == parse_tree(col.tree);
    tally.check(ok, [&] {
      return "level " + std::to_string(i) + " is " + format_permutation(levels[i].perm.perm()) +
             " -> " + serialize_tree(levels[i].tree);
    });
  }

  for (const MapFixture& f : extra) {
    bool ok = false;
    std::string got;
    try {
      const IncreasingTree image = phi_tree(AlternatingPermutation(parse_permutation(f.word)));
      got = serialize_tree(image);
      ok = image == parse_tree(f.tree);
    } catch (const std::exception& e) {
      got = e.what();
    }
    tally.check(ok, [&] { return f.word + ": expected " + f.tree + ", got " + got; });
  }
}

}  // namespace

bool VerifyReport::ok() const {
  for (const VerifySection& s : sections) {
    if (!s.ok()) return false;
  }
  return true;
}

std::string VerifyReport::to_text() const {
  std::ostringstream out;
  std::size_t failed = 0;
  for (const VerifySection& s : sections) {
    out << (s.ok() ? "[PASS] " : "[FAIL] ") << s.name << " (" << s.range
        << "): passed=" << s.passes << " failed=" << s.failures;
    if (!s.ok()) {
      ++failed;
      out << " first counterexample: " << s.first_counterexample;
    }
    out << '\n';
  }
  out << (failed == 0 ? "all " + std::to_string(sections.size()) + " sections passed"
                      : std::to_string(failed) + " of " + std::to_string(sections.size()) +
                            " sections failed")
      << '\n';
  return out.str();
}

VerifySection verify_roundtrip_perms(int n_max) {
  return guarded("round trip perm -> tree -> perm", upto(n_max), [&](Tally& tally) {
    for (int n = 1; n <= n_max; ++n) {
      for_each_alternating(n, [&](std::span<const int> w) {
        const AlternatingPermutation p(std::vector<int>(w.begin(), w.end()));
        const AlternatingPermutation back = phi_inverse_perm(phi_tree(p));
        tally.check(back == p, [&] {
          return format_word(w) + " came back as " + format_permutation(back.perm());
        });
      });
    }
  });
}

VerifySection verify_roundtrip_trees(int n_max) {
  return guarded("round trip tree -> perm -> tree", upto(n_max), [&](Tally& tally) {
    for (int n = 1; n <= n_max; ++n) {
      for_each_tree(n, [&](std::span<const int> parents) {
        const IncreasingTree t = IncreasingTree::from_parent_array(parents);
        const IncreasingTree back = phi_tree(phi_inverse_perm(t));
        tally.check(back == t, [&] {
          return serialize_tree(t) + " came back as " + serialize_tree(back);
        });
      });
    }
  });
}

VerifySection verify_refinement(int n_max) {
  return guarded("chain leaf of image equals first letter", upto(n_max), [&](Tally& tally) {
    for (int n = 1; n <= n_max; ++n) {
      for_each_alternating(n, [&](std::span<const int> w) {
        const IncreasingTree t =
            phi_tree(AlternatingPermutation(std::vector<int>(w.begin(), w.end())));
        tally.check(chain_leaf(t) == w[0], [&] {
          return format_word(w) + " -> " + serialize_tree(t) + " has chain leaf " +
                 std::to_string(chain_leaf(t));
        });
      });
    }
  });
}

VerifySection verify_equinumerosity(int n_max) {
  return guarded("image of A(n,k) equals T(n,k)", upto(n_max), [&](Tally& tally) {
    for (int n = 1; n <= n_max; ++n) {
      for (int k = 1; k <= n; ++k) {
        std::set<std::vector<int>> image;
        bool duplicate = false;
        for_each_alternating_with_first(n, k, [&](std::span<const int> w) {
          const IncreasingTree t =
              phi_tree(AlternatingPermutation(std::vector<int>(w.begin(), w.end())));
          duplicate |= !image.insert(t.parent_labels()).second;
        });
        std::set<std::vector<int>> target;
        for_each_tree(n, [&](std::span<const int> parents) {
          if (chain_leaf_of_parents(parents) == k) target.emplace(parents.begin(), parents.end());
        });
        tally.check(!duplicate && image == target, [&] {
          return "(n,k)=(" + std::to_string(n) + "," + std::to_string(k) + "): " +
                 (duplicate ? "duplicate image" : "image differs from T(n,k)") + ", |image|=" +
                 std::to_string(image.size()) + " |T(n,k)|=" + std::to_string(target.size());
        });
      }
    }
  });
}

VerifySection verify_count_recurrences(int n_max) {
  return guarded("count recurrences", upto(n_max), [&](Tally& tally) {
    const CountTables tables = count_tables(n_max);
    const int e = tables.enumerated_up_to;
    merge(tally, count_recurrence_check(tables.perm_enumerated, 3, e, "a(n,k) recurrence"));
    merge(tally, count_recurrence_check(tables.tree_enumerated, 3, e, "t(n,k) recurrence"));
    merge(tally, count_recurrence_check(tables.recurrence, 3, n_max, "filled table"));
    tally.check(tables.perm_enumerated.agrees_with(tables.recurrence, e),
                [] { return std::string("enumerated a-table differs from recurrence table"); });
    tally.check(tables.tree_enumerated.agrees_with(tables.recurrence, e),
                [] { return std::string("enumerated t-table differs from recurrence table"); });
    tally.check(tables.perm_enumerated.agrees_with(tables.tree_enumerated, e),
                [] { return std::string("a-table differs from t-table"); });
  });
}

VerifySection verify_poly_recurrence(int n_min, int n_max) {
  const std::string range = std::to_string(n_min) + "<=n<=" + std::to_string(n_max);
  return guarded("(q,p) recurrence", range, [&](Tally& tally) {
    const PolyTable table = a_poly_table(n_max);
    merge(tally, a_poly_recurrence_check(table, n_max, n_min));
    const CountTable counts = perm_counts_enumerated(n_max);
    for (const auto& [cell, poly] : table) {
      tally.check(poly.evaluate(1, 1) == counts.get(cell.first, cell.second), [&] {
        return "a(" + std::to_string(cell.first) + "," + std::to_string(cell.second) +
               ")(1,1) differs from count";
      });
    }
  });
}

VerifySection verify_kpp_identity(int n_max) {
  return guarded("t(n,k) = t(n,k-1) + t(n-1,n-k+1)", upto(n_max),
                 [&](Tally& tally) { merge(tally, kpp_identity_check(n_max)); });
}

VerifySection verify_fixtures(const std::vector<MapFixture>& extra) {
  return guarded("reference fixtures", "built-in + " + std::to_string(extra.size()) + " extra",
                 [&](Tally& tally) { check_fixtures(tally, extra); });
}

VerifyReport run_verify(const VerifyOptions& options) {
  std::vector<std::function<VerifySection()>> jobs{
      [&] { return verify_roundtrip_perms(options.roundtrip_n); },
      [&] { return verify_roundtrip_trees(options.roundtrip_n); },
      [&] { return verify_refinement(options.refinement_n); },
      [&] { return verify_equinumerosity(options.equinumerosity_n); },
      [&] { return verify_count_recurrences(options.count_recurrence_n); },
      [&] { return verify_poly_recurrence(options.poly_n_min, options.poly_n); },
      [&] { return verify_kpp_identity(options.kpp_n); },
  };
  if (options.fixtures) jobs.push_back([&] { return verify_fixtures(options.extra_fixtures); });

  VerifyReport report;
  if (!options.parallel) {
    for (auto& job : jobs) report.sections.push_back(job());
    return report;
  }
  std::vector<std::future<VerifySection>> pending;
  pending.reserve(jobs.size());
  for (auto& job : jobs) pending.push_back(std::async(std::launch::async, job));
  for (auto& f : pending) report.sections.push_back(f.get());
  return report;
}

}  // namespace alttree
