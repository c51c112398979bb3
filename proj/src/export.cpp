#include "lsarc/export.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace lsarc {

namespace {

using nlohmann::json;

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

json real_to_json(double v) {
  if (std::isfinite(v)) return v;
  return format_real(v);
}

double real_from_json(const json& j) {
  if (j.is_number()) return j.get<double>();
  const std::string s = j.get<std::string>();
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  throw ConfigError("expected a real number, got '" + s + "'");
}

json counters_to_json(const EvalCounters& c) {
  return {{"f_evals", c.f_evals}, {"g_evals", c.g_evals}, {"hvp_evals", c.hvp_evals},
          {"inner_matvecs", c.inner_matvecs}};
}

EvalCounters counters_from_json(const json& j) {
  EvalCounters c;
  c.f_evals = j.at("f_evals").get<std::int64_t>();
  c.g_evals = j.at("g_evals").get<std::int64_t>();
  c.hvp_evals = j.at("hvp_evals").get<std::int64_t>();
  c.inner_matvecs = j.at("inner_matvecs").get<std::int64_t>();
  return c;
}

json iteration_to_json(const IterationRecord& r) {
  return {{"k", r.k},
          {"mode", to_string(r.mode)},
          {"f", real_to_json(r.f)},
          {"gnorm", real_to_json(r.gnorm)},
          {"control", real_to_json(r.control)},
          {"new_control", real_to_json(r.new_control)},
          {"beta", real_to_json(r.beta)},
          {"slope", real_to_json(r.slope)},
          {"length", real_to_json(r.length)},
          {"length_c", real_to_json(r.length_c)},
          {"rho", real_to_json(r.rho)},
          {"backtracks", r.backtracks},
          {"accepted", r.accepted},
          {"cauchy_oracle_used", r.cauchy_oracle_used},
          {"lambda_n", real_to_json(r.lambda_n)},
          {"inner_start", r.inner_start},
          {"inner_after_direction", r.inner_after_direction},
          {"inner_end", r.inner_end},
          {"counters", counters_to_json(r.counters)}};
}

IterationRecord iteration_from_json(const json& j) {
  IterationRecord r;
  r.k = j.at("k").get<int>();
  const auto mode = parse_step_mode(j.at("mode").get<std::string>());
  if (!mode) throw ConfigError("unknown step mode in trace");
  r.mode = *mode;
  r.f = real_from_json(j.at("f"));
  r.gnorm = real_from_json(j.at("gnorm"));
  r.control = real_from_json(j.at("control"));
  r.new_control = real_from_json(j.at("new_control"));
  r.beta = real_from_json(j.at("beta"));
  r.slope = real_from_json(j.at("slope"));
  r.length = real_from_json(j.at("length"));
  r.length_c = real_from_json(j.at("length_c"));
  r.rho = real_from_json(j.at("rho"));
  r.backtracks = j.at("backtracks").get<int>();
  r.accepted = j.at("accepted").get<bool>();
  r.cauchy_oracle_used = j.at("cauchy_oracle_used").get<bool>();
  r.lambda_n = real_from_json(j.at("lambda_n"));
  r.inner_start = j.at("inner_start").get<std::int64_t>();
  r.inner_after_direction = j.at("inner_after_direction").get<std::int64_t>();
  r.inner_end = j.at("inner_end").get<std::int64_t>();
  r.counters = counters_from_json(j.at("counters"));
  return r;
}

json record_to_json(const RunRecord& r) {
  json trace = json::array();
  for (const auto& it : r.trace) trace.push_back(iteration_to_json(it));
  return {{"problem", r.problem},
          {"solver", r.solver},
          {"n", r.n},
          {"status", to_string(r.status)},
          {"outer_iters", r.outer_iters},
          {"f_evals", r.f_evals},
          {"g_evals", r.g_evals},
          {"hvp_evals", r.hvp_evals},
          {"inner_matvecs", r.inner_matvecs},
          {"final_f", real_to_json(r.final_f)},
          {"final_gnorm", real_to_json(r.final_gnorm)},
          {"wall_time_ms", real_to_json(r.wall_time_ms)},
          {"message", r.message},
          {"trace", trace}};
}

RunRecord record_from_json(const json& j) {
  RunRecord r;
  r.problem = j.at("problem").get<std::string>();
  r.solver = j.at("solver").get<std::string>();
  r.n = j.at("n").get<int>();
  const auto status = parse_run_status(j.at("status").get<std::string>());
  if (!status) throw ConfigError("unknown run status");
  r.status = *status;
  r.outer_iters = j.at("outer_iters").get<int>();
  r.f_evals = j.at("f_evals").get<std::int64_t>();
  r.g_evals = j.at("g_evals").get<std::int64_t>();
  r.hvp_evals = j.at("hvp_evals").get<std::int64_t>();
  r.inner_matvecs = j.at("inner_matvecs").get<std::int64_t>();
  r.final_f = real_from_json(j.at("final_f"));
  r.final_gnorm = real_from_json(j.at("final_gnorm"));
  r.wall_time_ms = real_from_json(j.at("wall_time_ms"));
  r.message = j.value("message", std::string());
  if (j.contains("trace")) {
    for (const auto& it : j.at("trace")) r.trace.push_back(iteration_from_json(it));
  }
  return r;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open '" + path + "' for writing");
  return os;
}

void close_out(std::ofstream& os, const std::string& path) {
  os.flush();
  if (!os) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace

void write_records_csv(const std::vector<RunRecord>& records, std::ostream& os) {
  os << "problem,solver,n,status,outer_iters,f_evals,g_evals,hvp_evals,inner_matvecs,"
        "final_f,final_gnorm,wall_time_ms\r\n";
  for (const auto& r : records) {
    os << csv_field(r.problem) << ',' << csv_field(r.solver) << ',' << r.n << ','
       << to_string(r.status) << ',' << r.outer_iters << ',' << r.f_evals << ',' << r.g_evals
       << ',' << r.hvp_evals << ',' << r.inner_matvecs << ',' << format_real(r.final_f) << ','
       << format_real(r.final_gnorm) << ',' << format_real(r.wall_time_ms) << "\r\n";
  }
}

void write_profile_csv(const std::vector<ProfileCurve>& curves, std::ostream& os) {
  os << "solver,metric,tau,rho\r\n";
  for (const auto& c : curves) {
    for (std::size_t i = 0; i < c.tau.size(); ++i) {
      os << csv_field(c.solver) << ',' << to_string(c.metric) << ',' << format_real(c.tau[i])
         << ',' << format_real(c.rho[i]) << "\r\n";
    }
  }
}

std::string records_to_json(const std::vector<RunRecord>& records) {
  json arr = json::array();
  for (const auto& r : records) arr.push_back(record_to_json(r));
  return arr.dump(2);
}

std::vector<RunRecord> records_from_json(const std::string& text) {
  try {
    const json arr = json::parse(text);
    if (!arr.is_array()) throw ConfigError("records JSON must be an array");
    std::vector<RunRecord> out;
    for (const auto& j : arr) out.push_back(record_from_json(j));
    return out;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed records JSON: ") + e.what());
  }
}

void write_records_csv(const std::vector<RunRecord>& records, const std::string& path) {
  auto os = open_out(path);
  write_records_csv(records, os);
  close_out(os, path);
}

void write_profile_csv(const std::vector<ProfileCurve>& curves, const std::string& path) {
  auto os = open_out(path);
  write_profile_csv(curves, os);
  close_out(os, path);
}

void write_records_json(const std::vector<RunRecord>& records, const std::string& path) {
  auto os = open_out(path);
  os << records_to_json(records) << '\n';
  close_out(os, path);
}

std::vector<RunRecord> read_records_json(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << is.rdbuf();
  return records_from_json(ss.str());
}

}  // namespace lsarc
