#include "lsarc/harness.hpp"

#include <atomic>
#include <charconv>
#include <limits>
#include <thread>

namespace lsarc {

std::string ProblemSpec::label() const {
  return seed ? name + "/s" + std::to_string(*seed) : name;
}

namespace {

template <typename T>
bool parse_number(const std::string& s, T& out) {
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc() && ptr == end;
}

}  // namespace

ProblemSpec parse_problem_spec(const std::string& text) {
  const auto c1 = text.find(':');
  if (c1 == std::string::npos || c1 == 0) {
    throw ConfigError("problem spec '" + text + "' must look like name:n or name:n:seed");
  }
  ProblemSpec spec;
  spec.name = text.substr(0, c1);
  const auto c2 = text.find(':', c1 + 1);
  const std::string n_text = text.substr(c1 + 1, c2 == std::string::npos ? std::string::npos : c2 - c1 - 1);
  if (!parse_number(n_text, spec.n) || spec.n <= 0) {
    throw ConfigError("problem spec '" + text + "': dimension must be a positive integer");
  }
  if (c2 != std::string::npos) {
    std::uint64_t seed = 0;
    if (!parse_number(text.substr(c2 + 1), seed)) {
      throw ConfigError("problem spec '" + text + "': seed must be a nonnegative integer");
    }
    spec.seed = seed;
  }
  return spec;
}

const std::vector<std::string>& solver_names() {
  static const std::vector<std::string> names = {"ls-arc", "ls-arc-s", "ls-tr", "armijo", "arc-l2", "tr-l2"};
  return names;
}

SolverFn find_solver(const std::string& name) {
  if (name == "ls-arc") {
    return [](const ProblemPtr& p, const SolverConfig& c) { return lsarc_solve(p, c, LsArcVariant::first_order); };
  }
  if (name == "ls-arc-s") {
    return [](const ProblemPtr& p, const SolverConfig& c) { return lsarc_solve(p, c, LsArcVariant::second_order); };
  }
  if (name == "ls-tr") return lstr_solve;
  if (name == "armijo") return armijo_solve;
  if (name == "arc-l2") return arc_l2_solve;
  if (name == "tr-l2") return tr_l2_solve;
  throw ConfigError("unknown solver '" + name + "'");
}

RunRecord run_one(const ProblemSpec& spec, const std::string& solver, const SolverConfig& config) {
  RunRecord rec;
  try {
    const SolverFn fn = find_solver(solver);
    rec = fn(make_problem(spec.name, spec.n, spec.seed.value_or(1)), config);
  } catch (const std::exception& e) {
    rec = RunRecord{};
    rec.solver = solver;
    rec.n = spec.n;
    rec.status = RunStatus::error;
    rec.final_f = std::numeric_limits<double>::quiet_NaN();
    rec.final_gnorm = std::numeric_limits<double>::quiet_NaN();
    rec.message = e.what();
  }
  rec.problem = spec.label();
  return rec;
}

std::vector<RunRecord> run_matrix(const std::vector<ProblemSpec>& problems,
                                  const std::vector<std::string>& solvers,
                                  const SolverConfig& config, int jobs) {
  const std::size_t total = problems.size() * solvers.size();
  std::vector<RunRecord> out(total);
  auto run_index = [&](std::size_t i) {
    out[i] = run_one(problems[i / solvers.size()], solvers[i % solvers.size()], config);
  };
  if (jobs <= 1 || total <= 1) {
    for (std::size_t i = 0; i < total; ++i) run_index(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), total);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < total; i = next++) run_index(i);
    });
  }
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace lsarc
