#include "unicyclic/verification.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <thread>
#include <tuple>

#include "unicyclic/errors.hpp"

namespace unicyclic {

namespace {

std::vector<AuditReport> audit_all(const std::vector<Graph>& graphs, const AuditOptions& options, unsigned jobs) {
  std::vector<AuditReport> out(graphs.size());
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(graphs.size(), 1)));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < graphs.size(); ++i) out[i] = audit(graphs[i], options);
    return out;
  }
  // Strided split; each worker writes only its own slots.
  std::vector<std::thread> workers;
  std::vector<std::exception_ptr> errors(jobs);
  for (unsigned w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < graphs.size(); i += jobs) out[i] = audit(graphs[i], options);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : workers) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

using Key = std::tuple<std::size_t, std::string, int, int, int>;

}  // namespace

std::size_t VerifyReport::violations() const {
  std::size_t total = 0;
  for (const auto& c : cells) total += c.violations;
  return total;
}

std::size_t VerifyReport::mismatches() const {
  std::size_t total = 0;
  for (const auto& c : cells) total += c.mismatches;
  return total;
}

std::size_t VerifyReport::unattained() const {
  std::size_t total = 0;
  for (const auto& c : cells) total += c.complete && !c.attained();
  return total;
}

bool VerifyReport::clean() const {
  return std::all_of(cells.begin(), cells.end(), [](const CellSummary& c) { return c.ok(); });
}

VerifyReport run_verification(const VerifyOptions& options) {
  if (options.n_min > options.n_max) throw ParameterError("empty range");
  if (options.n_min < kMinEnumerationOrder || options.n_max > kMaxEnumerationOrder) {
    throw ParameterError("n must lie in [" + std::to_string(kMinEnumerationOrder) + ", " +
                         std::to_string(kMaxEnumerationOrder) + "]");
  }
  options.filter.validate();

  const auto& bounds = catalog();
  std::map<std::string, std::size_t> position;
  for (std::size_t i = 0; i < bounds.size(); ++i) position[bounds[i].id] = i;

  const bool unfiltered = !options.filter.max_degree && !options.filter.pendants;

  VerifyReport report;
  report.n_min = options.n_min;
  report.n_max = options.n_max;
  std::map<Key, CellSummary> cells;

  for (int n = options.n_min; n <= options.n_max; ++n) {
    const auto graphs = enumerate_unicyclic(n, options.filter);
    report.graphs += graphs.size();
    const auto audits = audit_all(graphs, options.audit, options.jobs);
    for (const auto& a : audits) {
      for (const auto& row : a.rows) {
        if (!row.applicable) continue;
        const auto idx = position.at(row.bound_id);
        const auto& bound = bounds[idx];
        CellSummary proto;
        proto.bound_id = row.bound_id;
        proto.param = to_string(row.param);
        proto.n = n;
        proto.iff = row.iff;
        int d = 0, p = 0;
        switch (bound.restriction) {
          case Restriction::none: proto.complete = unfiltered; break;
          case Restriction::max_degree:
            d = a.max_degree;
            proto.max_degree = d;
            proto.complete = !options.filter.pendants;
            break;
          case Restriction::pendants:
            p = a.pendants;
            proto.pendants = p;
            proto.complete = !options.filter.max_degree;
            break;
        }
        auto [it, fresh] = cells.try_emplace(Key{idx, proto.param, n, d, p}, proto);
        auto& cell = it->second;
        ++cell.graphs;
        cell.violations += !row.satisfied;
        cell.tight += row.tight;
        cell.members += row.member;
        cell.mismatches += row.iff && row.tight != row.member;
      }
    }
  }
  // Grid order within a bound, not lexicographic parameter order.
  std::map<std::string, std::size_t> param_rank;
  for (const auto& b : bounds) {
    const auto params = options.audit.grid.params_for(b);
    for (std::size_t i = 0; i < params.size(); ++i) param_rank.try_emplace(to_string(params[i]), i);
  }
  report.cells.reserve(cells.size());
  for (auto& [key, cell] : cells) report.cells.push_back(std::move(cell));
  std::stable_sort(report.cells.begin(), report.cells.end(), [&](const CellSummary& x, const CellSummary& y) {
    const auto kx = std::make_tuple(position.at(x.bound_id), param_rank[x.param], x.n, x.max_degree.value_or(0),
                                    x.pendants.value_or(0));
    const auto ky = std::make_tuple(position.at(y.bound_id), param_rank[y.param], y.n, y.max_degree.value_or(0),
                                    y.pendants.value_or(0));
    return kx < ky;
  });
  return report;
}

std::string render_text(const VerifyReport& report) {
  std::ostringstream out;
  out << "verify n=" << report.n_min << ".." << report.n_max << ": " << report.graphs << " graphs, "
      << report.cells.size() << " cells\n";
  for (const auto& c : report.cells) {
    out << (c.ok() ? "  ok   " : "  FAIL ") << c.bound_id << ' ' << c.param << " n=" << c.n;
    if (c.max_degree) out << " Delta=" << *c.max_degree;
    if (c.pendants) out << " p=" << *c.pendants;
    out << " graphs=" << c.graphs << " violations=" << c.violations << " tight=" << c.tight;
    if (c.iff) out << " members=" << c.members << " tight_set=member_set:" << (c.mismatches == 0 ? "yes" : "no");
    if (!c.complete) out << " (filtered)";
    out << '\n';
  }
  out << "violations=" << report.violations() << " sharpness_mismatches=" << report.mismatches()
      << " unattained_cells=" << report.unattained() << ' ' << (report.clean() ? "CLEAN" : "FAILED") << '\n';
  return out.str();
}

std::string render_tabular(const VerifyReport& report) {
  std::ostringstream out;
  out << kVerifyTabularHeader << '\n';
  for (const auto& c : report.cells) {
    out << c.bound_id << ',' << c.param << ',' << c.n << ',';
    if (c.max_degree) out << *c.max_degree;
    out << ',';
    if (c.pendants) out << *c.pendants;
    out << ',' << c.graphs << ',' << c.violations << ',' << c.tight << ',' << c.members << ',' << c.mismatches << ','
        << c.iff << ',' << c.complete << ',' << c.ok() << '\n';
  }
  return out.str();
}

}  // namespace unicyclic
