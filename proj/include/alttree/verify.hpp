#pragma once

#include <string>
#include <vector>

namespace alttree {

struct VerifySection {
  std::string name;
  std::string range;
  std::size_t passes = 0;
  std::size_t failures = 0;
  std::string first_counterexample;

  bool ok() const { return failures == 0; }
};

struct VerifyReport {
  std::vector<VerifySection> sections;

  bool ok() const;
  /// One line per section, then a summary line.
  std::string to_text() const;
};

/// Expected image of a permutation, both in text form.
struct MapFixture {
  std::string word;
  std::string tree;
};

struct VerifyOptions {
  int roundtrip_n = 10;
  int refinement_n = 10;
  int equinumerosity_n = 10;
  int count_recurrence_n = 12;
  int poly_n_min = 3;
  int poly_n = 9;
  int kpp_n = 10;
  bool fixtures = true;
  std::vector<MapFixture> extra_fixtures;
  bool parallel = true;
};

VerifySection verify_roundtrip_perms(int n_max);
VerifySection verify_roundtrip_trees(int n_max);
VerifySection verify_refinement(int n_max);
/// Image of A(n,k) equals T(n,k) as a set, without duplicates.
VerifySection verify_equinumerosity(int n_max);
VerifySection verify_count_recurrences(int n_max);
VerifySection verify_poly_recurrence(int n_min, int n_max);
VerifySection verify_kpp_identity(int n_max);
/// Built-in reference columns plus `extra`.
VerifySection verify_fixtures(const std::vector<MapFixture>& extra);

/// Runs every section. Sections are independent and may run concurrently;
/// the report order is fixed.
VerifyReport run_verify(const VerifyOptions& options);

}  // namespace alttree
