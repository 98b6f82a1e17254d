#include "qt/cli.hpp"

#include <doctest.h>

#include <cstdlib>
#include <sstream>

using namespace qt;
using namespace qt::cli;

namespace {

std::filesystem::path data(const char* name) { return std::filesystem::path(QT_DATA_DIR) / name; }

ProblemErrorKind error_kind(std::string_view text) {
    try {
        parse_problem_json(text);
    } catch (const ProblemError& e) {
        return e.kind();
    }
    FAIL("expected a ProblemError for " << text);
    return ProblemErrorKind::io;
}

std::string render(const ProblemSpec& spec, TableFormat format) {
    std::ostringstream out;
    cmd_strata(spec, format, out);
    return out.str();
}

std::size_t line_count(const std::string& text) { return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')); }

}  // namespace

TEST_CASE("problem parsing") {
    const auto spec = parse_problem_json(R"({"vertices": 2, "arrows": [[1,2],[1,2],[1,2]], "d": [2,3], "theta": "canonical"})");
    CHECK(spec.quiver == Quiver::kronecker(3));
    CHECK(spec.d == DimensionVector{2, 3});
    CHECK(spec.theta == StabilityParameter{3, -2});
    CHECK(spec.canonical_theta);

    const auto explicit_theta = parse_problem_json(R"({"vertices": 2, "arrows": [[1,2]], "d": [1,1], "theta": [5,-5]})");
    CHECK(explicit_theta.theta == StabilityParameter{5, -5});
    CHECK_FALSE(explicit_theta.canonical_theta);

    const auto from_file = parse_problem(data("six_arrow_triangle_1_6_6.json"));
    CHECK(from_file.theta == StabilityParameter{42, 5, -12});
    CHECK(from_file.quiver.arrow_count() == 8);
}

TEST_CASE("problem errors carry their kind") {
    CHECK(error_kind("{not json") == ProblemErrorKind::malformed_json);
    CHECK(error_kind("[1,2]") == ProblemErrorKind::schema);
    CHECK(error_kind(R"({"vertices": 1, "arrows": [], "d": [1]})") == ProblemErrorKind::schema);
    CHECK(error_kind(R"({"vertices": 1, "arrows": [], "d": [1], "theta": [0], "extra": 1})") ==
          ProblemErrorKind::schema);
    CHECK(error_kind(R"({"vertices": 1, "arrows": [], "d": [0], "theta": [0]})") == ProblemErrorKind::schema);
    CHECK(error_kind(R"({"vertices": 1, "arrows": [], "d": [-1], "theta": [0]})") == ProblemErrorKind::schema);
    CHECK(error_kind(R"({"vertices": 2, "arrows": [[1]], "d": [1,1], "theta": "canonical"})") ==
          ProblemErrorKind::schema);
    CHECK(error_kind(R"({"vertices": 2, "arrows": [], "d": [1,1], "theta": "natural"})") == ProblemErrorKind::schema);
    CHECK(error_kind(R"({"vertices": 2, "arrows": [[1,3]], "d": [1,1], "theta": "canonical"})") ==
          ProblemErrorKind::index_out_of_range);
    CHECK(error_kind(R"({"vertices": 2, "arrows": [[0,1]], "d": [1,1], "theta": "canonical"})") ==
          ProblemErrorKind::index_out_of_range);
    CHECK(error_kind(R"({"vertices": 2, "arrows": [], "d": [1], "theta": "canonical"})") ==
          ProblemErrorKind::length_mismatch);
    CHECK(error_kind(R"({"vertices": 2, "arrows": [], "d": [1,1], "theta": [1]})") ==
          ProblemErrorKind::length_mismatch);
    CHECK(error_kind(R"({"vertices": 2, "arrows": [[1,2]], "d": [1,1], "theta": [1,1]})") ==
          ProblemErrorKind::theta_not_orthogonal);

    try {
        parse_problem(data("does_not_exist.json"));
        FAIL("expected an io error");
    } catch (const ProblemError& e) {
        CHECK(e.kind() == ProblemErrorKind::io);
    }
    CHECK(to_string(ProblemErrorKind::theta_not_orthogonal) == "theta-not-orthogonal");
}

TEST_CASE("strata table formats") {
    const auto spec = parse_problem(data("kronecker3_2_3.json"));
    const auto table = strata_table(spec);
    CHECK(table.type_count == 8);
    CHECK(table.rows.size() == 7);

    const auto csv = render(spec, TableFormat::csv);
    CHECK(csv.rfind("hn_type,codim,slopes,C,k,k1_minus_kl,eta,inequality\n", 0) == 0);
    CHECK(line_count(csv) == 8);
    CHECK(csv.find("Harder-Narasimhan") == std::string::npos);
    CHECK(csv.find("\"((1,0),(1,1),(0,2))\",12,\"(3,1/2,-2)\",2,\"(6,1,-4)\",10,90,true\n") != std::string::npos);

    std::istringstream in(csv);
    const auto rows = read_strata_csv(in);
    CHECK(rows == table.rows);

    const auto md = render(spec, TableFormat::md);
    CHECK(md.rfind("| hn_type | codim |", 0) == 0);
    CHECK(md.find("| ((2,2),(0,1)) | 4 |") != std::string::npos);
    CHECK(md.find("8 Harder-Narasimhan strata: 7 unstable plus the dense semistable stratum\n") != std::string::npos);

    const auto txt = render(spec, TableFormat::txt);
    CHECK(line_count(txt) == 9);
    CHECK(txt.find("8 Harder-Narasimhan strata: 7 unstable plus the dense semistable stratum\n") != std::string::npos);

    CHECK(parse_table_format("md") == TableFormat::md);
    CHECK_THROWS_AS(parse_table_format("html"), InputError);
}

TEST_CASE("strata table edge cases") {
    const auto point = parse_problem(data("single_vertex.json"));
    const auto txt = render(point, TableFormat::txt);
    CHECK(strata_table(point).rows.empty());
    CHECK(txt.find("1 Harder-Narasimhan strata: 0 unstable plus the dense semistable stratum") != std::string::npos);

    const auto five = strata_table(parse_problem(data("five_arrow_triangle_4_1_4.json")));
    CHECK(five.type_count == 41);
    CHECK(five.rows.size() == 40);
    for (const auto& row : five.rows) CHECK(row.inequality);

    CHECK(parse_hn_type("((1,0),(0,1))") == HNType{{1, 0}, {0, 1}});
    CHECK_THROWS_AS(parse_hn_type("(1,0),(0,1)"), InputError);
    std::istringstream bad_header("a,b\n");
    CHECK_THROWS_AS(read_strata_csv(bad_header), InputError);
}

TEST_CASE("strata output does not depend on the thread count") {
    const auto spec = parse_problem(data("five_arrow_triangle_4_1_4.json"));
    const auto* previous = std::getenv("QT_THREADS");
    const std::string saved = previous ? previous : "";
    setenv("QT_THREADS", "1", 1);
    const auto serial = render(spec, TableFormat::csv);
    setenv("QT_THREADS", "8", 1);
    const auto parallel = render(spec, TableFormat::csv);
    if (previous)
        setenv("QT_THREADS", saved.c_str(), 1);
    else
        unsetenv("QT_THREADS");
    CHECK(serial == parallel);
}

TEST_CASE("verdict exit codes") {
    std::ostringstream out;
    CHECK(cmd_verdict(parse_problem(data("kronecker3_2_3.json")), out) == exit_rigid);
    CHECK(out.str().find("conclusion: rigid (exit 0)") != std::string::npos);

    std::ostringstream five;
    CHECK(cmd_verdict(parse_problem(data("five_arrow_triangle_4_1_4.json")), five) == exit_rigid);
    CHECK(five.str().find("strongly_amply_stable: no -- e = (3,1,2)") != std::string::npos);

    std::ostringstream six;
    CHECK(cmd_verdict(parse_problem(data("six_arrow_triangle_1_6_6.json")), six) == exit_no_certificate);
    CHECK(six.str().find("((0,1,0),(1,5,6))") != std::string::npos);

    // Cyclic quiver: vanishing may hold, rigidity is never certified.
    Verdict v;
    v.vanishing_certified = true;
    CHECK(exit_code(v) == exit_vanishing_only);
    v.rigidity_certified = true;
    CHECK(exit_code(v) == exit_rigid);

    // Empty semistable locus.
    std::ostringstream empty;
    const auto spec = parse_problem_json(R"({"vertices": 2, "arrows": [[1,2]], "d": [1,1], "theta": [-1,1]})");
    CHECK(cmd_verdict(spec, empty) == exit_no_certificate);
    CHECK(empty.str().find("semistable locus: empty") != std::string::npos);
}

TEST_CASE("sweep") {
    std::ostringstream out;
    const auto rows = cmd_sweep(Quiver::kronecker(3), {3, 3}, out);
    const auto it = std::find_if(rows.begin(), rows.end(), [](const SweepRow& r) { return r.d == DimensionVector{2, 3}; });
    REQUIRE(it != rows.end());
    CHECK(*it == SweepRow{{2, 3}, true, true, true, true});

    std::istringstream in(out.str());
    CHECK(read_sweep_csv(in) == rows);

    std::ostringstream k1_out;
    const auto k1_rows = cmd_sweep(Quiver::kronecker(1), {1, 1}, k1_out);
    REQUIRE(k1_rows.size() == 3);
    CHECK(k1_rows[0].d == DimensionVector{0, 1});
    CHECK(k1_rows[1].d == DimensionVector{1, 0});
    CHECK(k1_rows[2] == SweepRow{{1, 1}, true, false, false, false});

    std::ostringstream five_out;
    const Quiver five{3, {{1, 2}, {1, 2}, {1, 2}, {1, 2}, {1, 2}, {1, 3}, {2, 3}}};
    const auto five_rows = cmd_sweep(five, {4, 1, 4}, five_out);
    CHECK(five_rows.back() == SweepRow{{4, 1, 4}, true, true, false, true});

    std::ostringstream guarded;
    CHECK_THROWS_AS(cmd_sweep(Quiver::kronecker(3), {64, 64}, guarded), InputError);
    CHECK_THROWS_AS(cmd_sweep(Quiver::kronecker(3), {1, 1, 1}, guarded), InputError);
}

TEST_CASE("oracle census command") {
    std::ostringstream out;
    CHECK(cmd_oracle_census(parse_problem(data("kronecker1_1_1.json")), 3, out) == 0);
    CHECK(out.str() == "hn_type,points,enumerated\n\"((1,0),(0,1))\",1,true\n\"((1,1))\",2,true\n"
                       "# 3 points over F_3 in 2 of 2 enumerated strata\n");
}

TEST_CASE("csv helpers") {
    CHECK(csv_escape("plain") == "plain");
    CHECK(csv_escape("a,b") == "\"a,b\"");
    CHECK(csv_escape("say \"hi\"") == "\"say \"\"hi\"\"\"");
    CHECK(csv_split("\"a,b\",c,\"d\"\"e\"") == std::vector<std::string>{"a,b", "c", "d\"e"});
    CHECK_THROWS_AS(csv_split("\"open"), InputError);
}
