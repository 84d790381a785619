#include "tcprio/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "tcprio/error.hpp"

namespace tcprio {

std::string_view to_string(Verdict v) {
  return v == Verdict::failed ? "failed" : "passed";
}

std::size_t FeatureSchema::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return i;
  }
  throw DataError("unknown feature name: " + std::string(name));
}

void validate(const FeatureSchema& schema) {
  if (schema.names.empty()) throw DataError("feature schema is empty");
  std::set<std::string> seen;
  for (const auto& name : schema.names) {
    if (name.empty()) throw DataError("feature schema contains an empty name");
    if (!seen.insert(name).second) throw DataError("duplicate feature name: " + name);
  }
}

bool BuildGroup::has_failure() const {
  return std::any_of(records.begin(), records.end(),
                     [](const TestCaseRecord& r) { return r.verdict == Verdict::failed; });
}

std::size_t BuildGroup::index_of_test(std::string_view test_id) const {
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (records[i].test_id == test_id) return i;
  }
  throw DataError("test " + std::string(test_id) + " not found in build " + std::to_string(build_id));
}

std::size_t Dataset::num_records() const {
  std::size_t n = 0;
  for (const auto& b : builds) n += b.size();
  return n;
}

std::size_t Dataset::index_of_build(std::int64_t build_id) const {
  for (std::size_t i = 0; i < builds.size(); ++i) {
    if (builds[i].build_id == build_id) return i;
  }
  throw DataError("build " + std::to_string(build_id) + " not found in dataset");
}

const BuildGroup& Dataset::build_by_id(std::int64_t build_id) const {
  return builds[index_of_build(build_id)];
}

namespace {

void validate_group(const BuildGroup& group, std::size_t p) {
  std::set<std::string_view> ids;
  for (const auto& rec : group.records) {
    if (rec.build_id != group.build_id) {
      throw DataError("record " + rec.test_id + " carries build " + std::to_string(rec.build_id) +
                      " inside group " + std::to_string(group.build_id));
    }
    if (!ids.insert(rec.test_id).second) {
      throw DataError("duplicate test " + rec.test_id + " in build " + std::to_string(group.build_id));
    }
    if (rec.features.size() != p) {
      throw DataError("feature vector of " + rec.test_id + " has length " +
                      std::to_string(rec.features.size()) + ", schema expects " + std::to_string(p));
    }
    if (!(rec.execution_time >= 0.0)) {
      throw DataError("negative execution time for " + rec.test_id);
    }
    for (double v : rec.features) {
      if (!std::isfinite(v)) throw DataError("non-finite feature value for " + rec.test_id);
    }
  }
  if (group.labeled()) {
    if (group.rank_labels.size() != group.size()) {
      throw DataError("rank label count mismatch in build " + std::to_string(group.build_id));
    }
    std::vector<int> sorted = group.rank_labels;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (sorted[i] != static_cast<int>(i) + 1) {
        throw DataError("rank labels of build " + std::to_string(group.build_id) +
                        " are not a permutation of 1..n");
      }
    }
  }
  if (group.graded()) {
    if (group.relevance_grades.size() != group.size()) {
      throw DataError("grade count mismatch in build " + std::to_string(group.build_id));
    }
    for (int g : group.relevance_grades) {
      if (g < 0) throw DataError("negative relevance grade in build " + std::to_string(group.build_id));
    }
    if (group.labeled()) {
      // grades must be nonincreasing along rank positions
      std::vector<int> by_position(group.size());
      for (std::size_t i = 0; i < group.size(); ++i) {
        by_position[group.rank_labels[i] - 1] = group.relevance_grades[i];
      }
      for (std::size_t i = 1; i < by_position.size(); ++i) {
        if (by_position[i] > by_position[i - 1]) {
          throw DataError("grades increase along ranking of build " + std::to_string(group.build_id));
        }
      }
    }
  }
}

}  // namespace

void validate(const Dataset& ds) {
  validate(ds.schema);
  if (ds.builds.empty()) throw DataError("dataset has no builds");
  for (std::size_t i = 0; i < ds.builds.size(); ++i) {
    if (ds.builds[i].time_index != i) {
      throw DataError("time_index of build " + std::to_string(ds.builds[i].build_id) +
                      " does not match chronological position");
    }
    if (i > 0 && ds.builds[i].build_id <= ds.builds[i - 1].build_id) {
      throw DataError("build ids are not strictly increasing");
    }
    validate_group(ds.builds[i], ds.schema.size());
  }
}

std::string GradingMode::tag() const {
  if (kind == GradingKind::binary) return "binary";
  return "graded:" + std::to_string(levels);
}

BuildGroup assign_rank_labels(BuildGroup group) {
  if (group.records.empty()) {
    throw DataError("cannot rank empty build " + std::to_string(group.build_id));
  }
  const std::size_t n = group.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& ra = group.records[a];
    const auto& rb = group.records[b];
    if (ra.verdict != rb.verdict) return ra.verdict == Verdict::failed;
    if (ra.execution_time != rb.execution_time) return ra.execution_time < rb.execution_time;
    return ra.test_id < rb.test_id;
  });
  group.rank_labels.assign(n, 0);
  for (std::size_t pos = 0; pos < n; ++pos) {
    group.rank_labels[order[pos]] = static_cast<int>(pos) + 1;
  }
  return group;
}

BuildGroup grade_relevance(BuildGroup group, const GradingMode& mode) {
  if (!group.labeled()) {
    throw DataError("build " + std::to_string(group.build_id) + " has no rank labels to grade");
  }
  const auto n = static_cast<long long>(group.size());
  group.relevance_grades.assign(group.size(), 0);
  if (mode.kind == GradingKind::binary) {
    for (std::size_t i = 0; i < group.size(); ++i) {
      group.relevance_grades[i] = group.records[i].verdict == Verdict::failed ? 1 : 0;
    }
    return group;
  }
  const long long g = mode.levels;
  if (g < 2) throw UsageError("graded relevance needs at least 2 levels");
  for (std::size_t i = 0; i < group.size(); ++i) {
    const long long position = group.rank_labels[i];
    long long grade = (n - position) * g / n;
    grade = std::clamp<long long>(grade, 0, g - 1);
    group.relevance_grades[i] = static_cast<int>(grade);
  }
  return group;
}

ExperimentSplit make_experiment_split(const Dataset& ds, std::int64_t target_build) {
  const std::size_t target = ds.index_of_build(target_build);
  if (target == 0) {
    throw DataError("build " + std::to_string(target_build) +
                    " is the first build; no training data precedes it");
  }
  const std::size_t k = target;  // predecessor count
  const std::size_t validation_count = (k + 4) / 5;  // ceil(0.2 * k)
  const std::size_t train_count = k - validation_count;
  if (train_count == 0) {
    throw DataError("insufficient training builds before " + std::to_string(target_build));
  }
  ExperimentSplit split;
  split.schema = ds.schema;
  split.train.assign(ds.builds.begin(), ds.builds.begin() + train_count);
  split.validation.assign(ds.builds.begin() + train_count, ds.builds.begin() + k);
  split.test = ds.builds[target];
  return split;
}

Dataset prepare_labels(Dataset ds, const GradingMode& mode) {
  for (auto& build : ds.builds) {
    build = grade_relevance(assign_rank_labels(std::move(build)), mode);
  }
  return ds;
}

}  // namespace tcprio
