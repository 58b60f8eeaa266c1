#pragma once

#include <optional>
#include <string>
#include <vector>

#include "unicyclic/bounds.hpp"
#include "unicyclic/enumeration.hpp"

namespace unicyclic {

struct VerifyOptions {
  int n_min = 4;
  int n_max = 8;
  EnumerationFilter filter;
  AuditOptions audit;
  /// Worker threads; 0 picks the hardware concurrency.
  unsigned jobs = 0;
};

/// Aggregate over every enumerated graph in one (bound, parameter, n, Delta or p) cell.
struct CellSummary {
  std::string bound_id;
  std::string param;
  int n = 0;
  std::optional<int> max_degree;
  std::optional<int> pendants;
  bool iff = false;
  /// The filter did not cut the cell, so attainment can be judged.
  bool complete = false;
  std::size_t graphs = 0;
  std::size_t violations = 0;
  std::size_t tight = 0;
  std::size_t members = 0;
  /// Graphs where tight != member (counted only for iff bounds).
  std::size_t mismatches = 0;

  bool attained() const noexcept { return tight > 0; }
  bool ok() const noexcept { return violations == 0 && mismatches == 0 && (!complete || attained()); }
};

struct VerifyReport {
  int n_min = 0;
  int n_max = 0;
  std::size_t graphs = 0;
  /// Sorted by (bound catalog order, parameter, n, Delta, p).
  std::vector<CellSummary> cells;

  std::size_t violations() const;
  std::size_t mismatches() const;
  std::size_t unattained() const;
  bool clean() const;
};

/// Audits every enumerated graph for n in [n_min, n_max] passing the filter.
/// Throws ParameterError when the range leaves the enumeration guard.
VerifyReport run_verification(const VerifyOptions& options);

std::string render_text(const VerifyReport& report);

inline constexpr std::string_view kVerifyTabularHeader =
    "bound_id,param,n,max_degree,pendants,graphs,violations,tight,members,mismatches,iff,complete,ok";

std::string render_tabular(const VerifyReport& report);

}  // namespace unicyclic
