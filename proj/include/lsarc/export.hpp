#pragma once

#include "lsarc/harness.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace lsarc {

/// Header plus one row per record with the columns problem, solver, n,
/// status, outer_iters, f_evals, g_evals, hvp_evals, inner_matvecs, final_f,
/// final_gnorm, wall_time_ms. Fields are quoted per RFC 4180 when needed and
/// reals use 17 significant digits.
void write_records_csv(const std::vector<RunRecord>& records, std::ostream& os);

/// Rows solver,metric,tau,rho; one row per breakpoint.
void write_profile_csv(const std::vector<ProfileCurve>& curves, std::ostream& os);

/// JSON array of records using the RunRecord field names. Non-finite reals
/// are written as the strings "inf", "-inf" and "nan".
std::string records_to_json(const std::vector<RunRecord>& records);
/// Throws ConfigError on malformed input.
std::vector<RunRecord> records_from_json(const std::string& text);

/// File variants; I/O failures throw std::runtime_error naming the path.
void write_records_csv(const std::vector<RunRecord>& records, const std::string& path);
void write_profile_csv(const std::vector<ProfileCurve>& curves, const std::string& path);
void write_records_json(const std::vector<RunRecord>& records, const std::string& path);
std::vector<RunRecord> read_records_json(const std::string& path);

}  // namespace lsarc
