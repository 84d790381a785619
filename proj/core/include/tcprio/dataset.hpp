#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tcprio {

enum class Verdict { failed, passed };

std::string_view to_string(Verdict v);

/// Ordered list of feature names. The index order is canonical for every
/// feature vector tied to the owning dataset.
struct FeatureSchema {
  std::vector<std::string> names;

  std::size_t size() const { return names.size(); }
  std::size_t index_of(std::string_view name) const;  // DataError if absent

  bool operator==(const FeatureSchema&) const = default;
};

void validate(const FeatureSchema& schema);

/// One test case executed in one build.
struct TestCaseRecord {
  std::int64_t build_id = 0;
  std::string test_id;
  Verdict verdict = Verdict::passed;
  double execution_time = 0.0;  // seconds, >= 0
  std::vector<double> features;
};

/// All records of one build plus derived rank labels and relevance grades.
struct BuildGroup {
  std::int64_t build_id = 0;
  std::size_t time_index = 0;  // position in chronological order
  std::vector<TestCaseRecord> records;
  std::vector<int> rank_labels;       // permutation of 1..n, empty until assigned
  std::vector<int> relevance_grades;  // nonnegative, empty until graded

  std::size_t size() const { return records.size(); }
  bool labeled() const { return !rank_labels.empty(); }
  bool graded() const { return !relevance_grades.empty(); }
  bool has_failure() const;
  std::size_t index_of_test(std::string_view test_id) const;  // DataError if absent
};

/// Ground truth planted by the synthetic generator, carried for oracle checks.
struct SyntheticInfo {
  std::vector<std::size_t> signal_features;
  std::int64_t shift_build = 0;  // 0: stationary signal
  std::vector<std::size_t> shifted_signal_features;
  std::uint64_t seed = 0;
};

struct Dataset {
  FeatureSchema schema;
  std::vector<BuildGroup> builds;  // chronological; build_ids strictly increasing
  std::size_t imputed_cells = 0;   // missing feature values zero-filled during ingestion
  std::optional<SyntheticInfo> synthetic;

  std::size_t num_builds() const { return builds.size(); }
  std::size_t num_records() const;
  std::size_t index_of_build(std::int64_t build_id) const;  // DataError if absent
  const BuildGroup& build_by_id(std::int64_t build_id) const;
};

/// Full invariant sweep; throws DataError on the first violation.
void validate(const Dataset& ds);

/// Chronological holdout around one target build.
struct ExperimentSplit {
  FeatureSchema schema;
  std::vector<BuildGroup> train;
  std::vector<BuildGroup> validation;  // last ceil(20%) of the pre-target builds
  BuildGroup test;
};

enum class GradingKind { binary, graded };

struct GradingMode {
  GradingKind kind = GradingKind::binary;
  int levels = 4;  // graded mode only

  static GradingMode binary() { return {GradingKind::binary, 2}; }
  static GradingMode graded(int levels) { return {GradingKind::graded, levels}; }
  std::string tag() const;
};

/// Positions 1..n: failed before passed, then ascending execution time, then
/// ascending test_id. Idempotent.
BuildGroup assign_rank_labels(BuildGroup group);

/// binary: grade 1 for failed, 0 for passed.
/// graded(g): grade floor((n - position) * g / n) clamped to [0, g-1].
BuildGroup grade_relevance(BuildGroup group, const GradingMode& mode);

/// test = target; validation = chronologically last ceil(0.2*k) of the k
/// predecessor builds; train = the rest (must stay non-empty).
ExperimentSplit make_experiment_split(const Dataset& ds, std::int64_t target_build);

/// Labels and grades every build of a copy.
Dataset prepare_labels(Dataset ds, const GradingMode& mode);

}  // namespace tcprio
