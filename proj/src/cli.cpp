#include "qt/cli.hpp"

#include "qt/oracle.hpp"
#include "qt/semistability.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace qt::cli {

namespace {

using json = nlohmann::json;

[[noreturn]] void fail(ProblemErrorKind kind, const std::string& message) { throw ProblemError(kind, message); }

std::int64_t as_integer(const json& value, const std::string& what) {
    if (!value.is_number_integer()) fail(ProblemErrorKind::schema, what + " must be an integer");
    return value.get<std::int64_t>();
}

std::vector<std::int64_t> integer_array(const json& value, const std::string& what) {
    if (!value.is_array()) fail(ProblemErrorKind::schema, what + " must be an array of integers");
    std::vector<std::int64_t> out;
    for (const auto& item : value) out.push_back(as_integer(item, what + " entry"));
    return out;
}

template <class Range, class Format>
std::string tuple_string(const Range& values, Format format) {
    std::string out = "(";
    bool first = true;
    for (const auto& v : values) {
        if (!first) out += ',';
        out += format(v);
        first = false;
    }
    return out + ")";
}

std::string slopes_string(const std::vector<Rational>& slopes) { return tuple_string(slopes, format_rational); }

std::string weights_string(const std::vector<Integer>& k) {
    return tuple_string(k, [](const Integer& x) { return x.str(); });
}

// Splits "(a,b,(c,d))"-style text at top-level commas inside the outer parentheses.
std::vector<std::string_view> split_tuple(std::string_view text) {
    if (text.size() < 2 || text.front() != '(' || text.back() != ')')
        throw InputError("expected a parenthesized tuple, got '" + std::string(text) + "'");
    text = text.substr(1, text.size() - 2);
    std::vector<std::string_view> parts;
    if (text.empty()) return parts;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '(') ++depth;
        if (text[i] == ')') --depth;
        if (text[i] == ',' && depth == 0) {
            parts.push_back(text.substr(start, i - start));
            start = i + 1;
        }
    }
    parts.push_back(text.substr(start));
    return parts;
}

Integer parse_integer(std::string_view text) {
    if (text.empty()) throw InputError("empty integer field");
    try {
        return Integer(std::string(text));
    } catch (const std::exception&) {
        throw InputError("not an integer: '" + std::string(text) + "'");
    }
}

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    return make_rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

DimensionVector parse_dimension_vector(std::string_view text) {
    std::vector<std::int64_t> entries;
    for (auto part : split_tuple(text)) entries.push_back(static_cast<std::int64_t>(parse_integer(part)));
    return DimensionVector(std::move(entries));
}

bool parse_bool(std::string_view text) {
    if (text == "true") return true;
    if (text == "false") return false;
    throw InputError("not a boolean: '" + std::string(text) + "'");
}

const char* yes_no(bool value) { return value ? "yes" : "no"; }

const std::vector<std::string> strata_columns = {"hn_type", "codim", "slopes", "C", "k", "k1_minus_kl", "eta", "inequality"};

std::vector<std::string> row_cells(const StrataRow& row) {
    return {row.hn_type.to_string(), row.codim.str(), slopes_string(row.slopes), row.C.str(),
            weights_string(row.k),   row.k1_minus_kl.str(), row.eta.str(), row.inequality ? "true" : "false"};
}

std::string summary_line(const StrataTable& table) {
    const bool dense = table.type_count > table.rows.size();
    std::ostringstream out;
    out << table.type_count << " Harder-Narasimhan strata: " << table.rows.size() << " unstable"
        << (dense ? " plus the dense semistable stratum" : ", semistable locus empty");
    return out.str();
}

}  // namespace

std::string_view to_string(ProblemErrorKind kind) {
    switch (kind) {
        case ProblemErrorKind::io: return "io";
        case ProblemErrorKind::malformed_json: return "malformed-json";
        case ProblemErrorKind::schema: return "schema";
        case ProblemErrorKind::index_out_of_range: return "index-out-of-range";
        case ProblemErrorKind::length_mismatch: return "length-mismatch";
        case ProblemErrorKind::theta_not_orthogonal: return "theta-not-orthogonal";
    }
    return "unknown";
}

ProblemError::ProblemError(ProblemErrorKind kind, const std::string& message)
    : std::runtime_error(message), kind_(kind) {}

ProblemSpec parse_problem_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(ProblemErrorKind::malformed_json, e.what());
    }
    if (!doc.is_object()) fail(ProblemErrorKind::schema, "top level must be a JSON object");
    for (const auto& [key, value] : doc.items())
        if (key != "vertices" && key != "arrows" && key != "d" && key != "theta")
            fail(ProblemErrorKind::schema, "unknown key '" + key + "'");
    for (const char* key : {"vertices", "arrows", "d", "theta"})
        if (!doc.contains(key)) fail(ProblemErrorKind::schema, std::string("missing key '") + key + "'");

    const std::int64_t n = as_integer(doc["vertices"], "vertices");
    if (n < 1) fail(ProblemErrorKind::schema, "vertices must be positive");

    if (!doc["arrows"].is_array()) fail(ProblemErrorKind::schema, "arrows must be an array of [source, target] pairs");
    std::vector<Quiver::Arrow> arrows;
    for (const auto& arrow : doc["arrows"]) {
        const auto ends = integer_array(arrow, "arrow");
        if (ends.size() != 2) fail(ProblemErrorKind::schema, "each arrow must be a [source, target] pair");
        for (auto v : ends)
            if (v < 1 || v > n)
                fail(ProblemErrorKind::index_out_of_range,
                     "arrow [" + std::to_string(ends[0]) + "," + std::to_string(ends[1]) +
                         "] has an endpoint outside [1, " + std::to_string(n) + "]");
        arrows.emplace_back(static_cast<std::size_t>(ends[0]), static_cast<std::size_t>(ends[1]));
    }
    Quiver quiver(static_cast<std::size_t>(n), std::move(arrows));

    auto d_entries = integer_array(doc["d"], "d");
    if (d_entries.size() != static_cast<std::size_t>(n))
        fail(ProblemErrorKind::length_mismatch,
             "d has " + std::to_string(d_entries.size()) + " entries for " + std::to_string(n) + " vertices");
    if (std::any_of(d_entries.begin(), d_entries.end(), [](auto v) { return v < 0; }))
        fail(ProblemErrorKind::schema, "d entries must be non-negative");
    DimensionVector d(std::move(d_entries));
    if (d.is_zero()) fail(ProblemErrorKind::schema, "d must be nonzero");

    ProblemSpec spec{std::move(quiver), std::move(d), {}, false};
    const auto& theta = doc["theta"];
    if (theta.is_string()) {
        if (theta.get<std::string>() != "canonical")
            fail(ProblemErrorKind::schema, "theta must be an integer array or \"canonical\"");
        spec.theta = canonical_stability(spec.quiver, spec.d);
        spec.canonical_theta = true;
    } else {
        auto entries = integer_array(theta, "theta");
        if (entries.size() != static_cast<std::size_t>(n))
            fail(ProblemErrorKind::length_mismatch,
                 "theta has " + std::to_string(entries.size()) + " entries for " + std::to_string(n) + " vertices");
        spec.theta = StabilityParameter(std::move(entries));
    }
    if (spec.theta(spec.d) != 0)
        fail(ProblemErrorKind::theta_not_orthogonal,
             "theta(d) = " + spec.theta(spec.d).str() + " but must be 0 for d = " + spec.d.to_string());
    return spec;
}

ProblemSpec parse_problem(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ProblemErrorKind::io, "cannot open '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_problem_json(buffer.str());
}

TableFormat parse_table_format(std::string_view name) {
    if (name == "txt") return TableFormat::txt;
    if (name == "csv") return TableFormat::csv;
    if (name == "md") return TableFormat::md;
    throw InputError("unknown table format '" + std::string(name) + "' (expected txt, csv or md)");
}

StrataTable strata_table(const ProblemSpec& spec) {
    const auto types = enumerate_hn_types(spec.quiver, spec.d, spec.theta);
    StrataTable table{types.size(), {}};
    for (const auto& report : stratum_reports(spec.quiver, spec.theta, types)) {
        if (report.hn_type.is_dense()) continue;
        table.rows.push_back(StrataRow{report.hn_type, report.codim, slopes(spec.theta, report.hn_type),
                                       report.one_ps.C, report.one_ps.k, report.max_bundle_weight, report.eta,
                                       report.inequality_holds});
    }
    return table;
}

std::string csv_escape(std::string_view field) {
    if (field.find_first_of(",\"\n") == std::string_view::npos) return std::string(field);
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::vector<std::string> csv_split(std::string_view line) {
    std::vector<std::string> fields;
    std::string current;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                current += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                current += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(current));
            current.clear();
        } else if (c != '\r') {
            current += c;
        }
    }
    if (quoted) throw InputError("unterminated quoted CSV field");
    fields.push_back(std::move(current));
    return fields;
}

void write_strata(std::ostream& out, const StrataTable& table, TableFormat format) {
    std::vector<std::vector<std::string>> cells;
    for (const auto& row : table.rows) cells.push_back(row_cells(row));

    switch (format) {
        case TableFormat::csv: {
            for (std::size_t c = 0; c < strata_columns.size(); ++c) out << (c ? "," : "") << strata_columns[c];
            out << '\n';
            for (const auto& row : cells) {
                for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << csv_escape(row[c]);
                out << '\n';
            }
            return;
        }
        case TableFormat::md: {
            out << '|';
            for (const auto& name : strata_columns) out << ' ' << name << " |";
            out << "\n|";
            for (std::size_t c = 0; c < strata_columns.size(); ++c) out << (c == 0 ? " :--- |" : " ---: |");
            out << '\n';
            for (const auto& row : cells) {
                out << '|';
                for (const auto& cell : row) out << ' ' << cell << " |";
                out << '\n';
            }
            out << '\n' << summary_line(table) << '\n';
            return;
        }
        case TableFormat::txt: {
            std::vector<std::size_t> widths;
            for (const auto& name : strata_columns) widths.push_back(name.size());
            for (const auto& row : cells)
                for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
            auto emit = [&](const std::vector<std::string>& row) {
                for (std::size_t c = 0; c < row.size(); ++c) {
                    if (c) out << "  ";
                    if (c == 0)
                        out << std::left << std::setw(static_cast<int>(widths[c])) << row[c];
                    else
                        out << std::right << std::setw(static_cast<int>(widths[c])) << row[c];
                }
                out << '\n';
            };
            emit(strata_columns);
            for (const auto& row : cells) emit(row);
            out << summary_line(table) << '\n';
            return;
        }
    }
}

HNType parse_hn_type(std::string_view text) {
    std::vector<DimensionVector> pieces;
    for (auto part : split_tuple(text)) pieces.push_back(parse_dimension_vector(part));
    return HNType(std::move(pieces));
}

std::vector<StrataRow> read_strata_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw InputError("empty strata CSV");
    if (csv_split(line) != strata_columns) throw InputError("unexpected strata CSV header: " + line);
    std::vector<StrataRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto f = csv_split(line);
        if (f.size() != strata_columns.size()) throw InputError("strata CSV row has the wrong arity: " + line);
        StrataRow row{parse_hn_type(f[0]), parse_integer(f[1]), {}, parse_integer(f[3]), {}, parse_integer(f[5]),
                      parse_integer(f[6]), parse_bool(f[7])};
        for (auto part : split_tuple(f[2])) row.slopes.push_back(parse_rational(part));
        for (auto part : split_tuple(f[4])) row.k.push_back(parse_integer(part));
        rows.push_back(std::move(row));
    }
    return rows;
}

int cmd_strata(const ProblemSpec& spec, TableFormat format, std::ostream& out) {
    write_strata(out, strata_table(spec), format);
    return 0;
}

int exit_code(const Verdict& v) {
    if (v.rigidity_certified) return exit_rigid;
    if (v.vanishing_certified) return exit_vanishing_only;
    return exit_no_certificate;
}

int cmd_verdict(const ProblemSpec& spec, std::ostream& out) {
    const auto& q = spec.quiver;
    GenericSubdimCache cache(q);
    out << "instance: " << q.vertex_count() << " vertices, " << q.arrow_count() << " arrows, d = " << spec.d.to_string()
        << ", theta = " << spec.theta.to_string() << (spec.canonical_theta ? " (canonical)" : "") << '\n';
    if (!cache.has_semistable(spec.d, spec.theta)) {
        out << "semistable locus: empty -- no moduli space, nothing to certify\n";
        out << "conclusion: not certified (exit " << exit_no_certificate << ")\n";
        return exit_no_certificate;
    }
    const Verdict v = verdict(cache, spec.d, spec.theta);
    const std::size_t unstable = v.strata_count - 1;

    out << "strata: " << v.strata_count << " Harder-Narasimhan strata, " << unstable << " unstable\n";
    out << "moduli_dimension: " << moduli_dimension(q, spec.d).str() << " -- 1 - <d,d>\n";
    out << "coprime: " << yes_no(v.coprime) << " -- "
        << (v.coprime ? "theta(e) != 0 for every 0 < e < d, so stable = semistable"
                      : "some 0 < e < d has theta(e) = 0")
        << '\n';
    out << "acyclic: " << yes_no(v.acyclic) << " -- "
        << (v.acyclic ? "no oriented cycles" : "the quiver has an oriented cycle") << '\n';
    out << "amply_stable: " << yes_no(v.amply_stable) << " -- ";
    if (v.min_unstable_codim)
        out << "unstable locus has codimension " << v.min_unstable_codim->str() << '\n';
    else
        out << "every representation is semistable\n";
    out << "strongly_amply_stable: " << yes_no(v.strongly_amply_stable) << " -- ";
    if (v.strong_failure_witness) {
        const auto& e = *v.strong_failure_witness;
        out << "e = " << e.to_string() << " has mu(e) = " << format_rational(slope(spec.theta, e))
            << " > mu(d-e) = " << format_rational(slope(spec.theta, spec.d - e)) << " but <e,d-e> = "
            << euler_pairing(q, e, spec.d - e).str() << '\n';
    } else {
        out << "every e with mu(e) > mu(d-e) has <e,d-e> <= -2\n";
    }
    out << "all_strata_inequality: " << yes_no(v.all_strata_inequality) << " -- ";
    if (v.all_strata_inequality) {
        out << "k_1 - k_l < eta on all " << unstable << " unstable strata\n";
    } else {
        out << "k_1 - k_l >= eta on " << v.failing_strata.size() << " strata:";
        for (const auto& t : v.failing_strata) out << ' ' << t.to_string();
        out << '\n';
    }
    out << "vanishing_certified: " << yes_no(v.vanishing_certified) << " -- "
        << (v.vanishing_certified ? "coprime and the inequality holds on every unstable stratum"
                                  : "needs coprimality and the inequality on every unstable stratum")
        << '\n';
    out << "rigidity_certified: " << yes_no(v.rigidity_certified) << " -- "
        << (v.rigidity_certified ? "vanishing certified on an acyclic quiver"
                                 : "needs the vanishing certificate and an acyclic quiver")
        << '\n';
    const int code = exit_code(v);
    out << "conclusion: "
        << (code == exit_rigid ? "rigid" : code == exit_vanishing_only ? "vanishing only" : "not certified")
        << " (exit " << code << ")\n";
    return code;
}

std::vector<SweepRow> cmd_sweep(const Quiver& q, const DimensionVector& d_max, std::ostream& out,
                                std::uint64_t limit) {
    require_same_length(q, d_max, "d_max");
    const Integer points = subdimension_count(d_max);
    if (points > limit)
        throw InputError("sweep over " + d_max.to_string() + " visits " + points.str() +
                         " dimension vectors, above the limit of " + std::to_string(limit));

    GenericSubdimCache cache(q);
    std::vector<SweepRow> rows;
    out << "d,coprime,amply_stable,strongly_amply_stable,all_strata_inequality\n";
    for (const auto& d : subdimension_vectors(d_max)) {
        if (d.is_zero()) continue;
        const StabilityParameter theta = canonical_stability(q, d);
        if (!cache.has_semistable(d, theta)) continue;
        const Verdict v = verdict(cache, d, theta);
        SweepRow row{d, v.coprime, v.amply_stable, v.strongly_amply_stable, v.all_strata_inequality};
        out << csv_escape(d.to_string()) << ',' << std::boolalpha << row.coprime << ',' << row.amply_stable << ','
            << row.strongly_amply_stable << ',' << row.all_strata_inequality << std::noboolalpha << '\n'
            << std::flush;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<SweepRow> read_sweep_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw InputError("empty sweep CSV");
    std::vector<SweepRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto f = csv_split(line);
        if (f.size() != 5) throw InputError("sweep CSV row has the wrong arity: " + line);
        rows.push_back(SweepRow{parse_dimension_vector(f[0]), parse_bool(f[1]), parse_bool(f[2]), parse_bool(f[3]),
                                parse_bool(f[4])});
    }
    return rows;
}

int cmd_oracle_census(const ProblemSpec& spec, std::uint32_t field, std::ostream& out) {
    const auto census = oracle::stratum_census(spec.quiver, spec.d, spec.theta, field);
    const auto types = enumerate_hn_types(spec.quiver, spec.d, spec.theta);
    std::uint64_t total = 0;
    bool contained = true;
    out << "hn_type,points,enumerated\n";
    for (const auto& [type, count] : census) {
        const bool known = std::binary_search(types.begin(), types.end(), type);
        contained = contained && known;
        total += count;
        out << csv_escape(type.to_string()) << ',' << count << ',' << (known ? "true" : "false") << '\n';
    }
    out << "# " << total << " points over F_" << field << " in " << census.size() << " of " << types.size()
        << " enumerated strata\n";
    return contained ? 0 : 1;
}

}  // namespace qt::cli
