#include "lsarc/harness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>

namespace lsarc {

const char* to_string(ProfileMetric m) {
  switch (m) {
    case ProfileMetric::f_evals: return "f_evals";
    case ProfileMetric::g_evals: return "g_evals";
    case ProfileMetric::wall_time_ms: return "wall_time_ms";
  }
  return "unknown";
}

std::optional<ProfileMetric> parse_profile_metric(const std::string& s) {
  for (ProfileMetric m : {ProfileMetric::f_evals, ProfileMetric::g_evals, ProfileMetric::wall_time_ms}) {
    if (s == to_string(m)) return m;
  }
  return std::nullopt;
}

double ProfileCurve::value_at(double t) const {
  const auto it = std::upper_bound(tau.begin(), tau.end(), t);
  if (it == tau.begin()) return 0.0;
  return rho[static_cast<std::size_t>(it - tau.begin()) - 1];
}

namespace {

double cost(const RunRecord& r, ProfileMetric metric) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  if (r.status != RunStatus::converged) return inf;
  switch (metric) {
    case ProfileMetric::f_evals: return static_cast<double>(r.f_evals);
    case ProfileMetric::g_evals: return static_cast<double>(r.g_evals);
    case ProfileMetric::wall_time_ms: return std::max(r.wall_time_ms, 1e-6);
  }
  return inf;
}

std::string problem_key(const RunRecord& r) { return r.problem + ":" + std::to_string(r.n); }

}  // namespace

std::vector<ProfileCurve> performance_profile(const std::vector<RunRecord>& records,
                                              ProfileMetric metric) {
  std::vector<std::string> problems, solvers;
  std::set<std::string> seen_p, seen_s;
  for (const auto& r : records) {
    if (seen_p.insert(problem_key(r)).second) problems.push_back(problem_key(r));
    if (seen_s.insert(r.solver).second) solvers.push_back(r.solver);
  }
  std::map<std::pair<std::string, std::string>, double> t;
  for (const auto& r : records) {
    if (!t.emplace(std::make_pair(problem_key(r), r.solver), cost(r, metric)).second) {
      throw ConfigError("performance_profile: duplicate record for " + problem_key(r) + " / " + r.solver);
    }
  }
  if (t.size() != problems.size() * solvers.size()) {
    throw ConfigError("performance_profile: every (problem, solver) pair must be present");
  }

  std::vector<ProfileCurve> curves(solvers.size());
  const double np = static_cast<double>(problems.size());
  for (std::size_t s = 0; s < solvers.size(); ++s) {
    curves[s].solver = solvers[s];
    curves[s].metric = metric;
    curves[s].problems = problems;
  }
  for (const auto& p : problems) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& s : solvers) best = std::min(best, t.at({p, s}));
    for (std::size_t s = 0; s < solvers.size(); ++s) {
      const double v = t.at({p, solvers[s]});
      double r = std::numeric_limits<double>::infinity();
      if (std::isfinite(v)) r = v == best ? 1.0 : v / best;
      curves[s].ratios.push_back(r);
    }
  }
  for (auto& c : curves) {
    std::vector<double> finite;
    for (double r : c.ratios) {
      if (std::isfinite(r)) finite.push_back(r);
    }
    std::sort(finite.begin(), finite.end());
    for (std::size_t i = 0; i < finite.size(); ++i) {
      if (i + 1 < finite.size() && finite[i + 1] == finite[i]) continue;
      c.tau.push_back(finite[i]);
      c.log2_tau.push_back(std::log2(finite[i]));
      c.rho.push_back(static_cast<double>(i + 1) / np);
    }
  }
  return curves;
}

}  // namespace lsarc
