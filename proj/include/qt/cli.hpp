#pragma once

#include "qt/hn_strata.hpp"
#include "qt/quiver.hpp"
#include "qt/teleman.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qt::cli {

inline constexpr int exit_rigid = 0;
inline constexpr int exit_vanishing_only = 10;
inline constexpr int exit_no_certificate = 20;
inline constexpr int exit_input_error = 2;

enum class ProblemErrorKind { io, malformed_json, schema, index_out_of_range, length_mismatch, theta_not_orthogonal };

std::string_view to_string(ProblemErrorKind kind);

class ProblemError : public std::runtime_error {
public:
    ProblemError(ProblemErrorKind kind, const std::string& message);
    ProblemErrorKind kind() const noexcept { return kind_; }

private:
    ProblemErrorKind kind_;
};

struct ProblemSpec {
    Quiver quiver;
    DimensionVector d;
    StabilityParameter theta;
    bool canonical_theta = false;
};

/// {"vertices": n, "arrows": [[s,t],...], "d": [...], "theta": [...] | "canonical"}, 1-based vertices.
ProblemSpec parse_problem_json(std::string_view text);
ProblemSpec parse_problem(const std::filesystem::path& path);

enum class TableFormat { txt, csv, md };

TableFormat parse_table_format(std::string_view name);

/// One unstable stratum, as printed by `qt strata`.
struct StrataRow {
    HNType hn_type;
    Integer codim;
    std::vector<Rational> slopes;
    Integer C;
    std::vector<Integer> k;
    Integer k1_minus_kl;
    Integer eta;
    bool inequality = true;

    friend bool operator==(const StrataRow&, const StrataRow&) = default;
};

struct StrataTable {
    std::size_t type_count = 0;  // dense type included
    std::vector<StrataRow> rows;  // unstable types only
};

StrataTable strata_table(const ProblemSpec& spec);

void write_strata(std::ostream& out, const StrataTable& table, TableFormat format);

/// Parses the CSV written by write_strata back into rows.
std::vector<StrataRow> read_strata_csv(std::istream& in);

/// "((1,0),(1,1))" -> HNType
HNType parse_hn_type(std::string_view text);

/// Returns the process exit code.
int cmd_strata(const ProblemSpec& spec, TableFormat format, std::ostream& out);

/// Prints every verdict field with a justification; exit code 0 (rigid), 10 (vanishing only) or 20.
int cmd_verdict(const ProblemSpec& spec, std::ostream& out);

int exit_code(const Verdict& v);

struct SweepRow {
    DimensionVector d;
    bool coprime = false;
    bool amply_stable = false;
    bool strongly_amply_stable = false;
    bool all_strata_inequality = false;

    friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

inline constexpr std::uint64_t default_sweep_limit = 4096;

/// Streams one CSV row per 0 < d <= d_max with a nonempty theta_can-semistable locus.
/// Throws InputError when prod(d_max_i + 1) exceeds `limit`.
std::vector<SweepRow> cmd_sweep(const Quiver& q, const DimensionVector& d_max, std::ostream& out,
                                std::uint64_t limit = default_sweep_limit);

std::vector<SweepRow> read_sweep_csv(std::istream& in);

/// Brute-force census over F_p; prints one line per stratum.
int cmd_oracle_census(const ProblemSpec& spec, std::uint32_t field, std::ostream& out);

/// CSV helpers (RFC 4180 quoting).
std::string csv_escape(std::string_view field);
std::vector<std::string> csv_split(std::string_view line);

}  // namespace qt::cli
