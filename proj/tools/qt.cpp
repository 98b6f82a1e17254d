// qt: Harder-Narasimhan strata, Teleman weights and rigidity certificates for quiver moduli.

#include "qt/cli.hpp"
#include "qt/oracle.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

namespace {

qt::DimensionVector parse_dmax(const std::string& text) {
    std::vector<std::int64_t> entries;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        const long long value = std::stoll(item, &used);
        if (used != item.size()) throw qt::InputError("--dmax entries must be integers, got '" + item + "'");
        entries.push_back(value);
    }
    if (entries.empty()) throw qt::InputError("--dmax must list one bound per vertex");
    return qt::DimensionVector(std::move(entries));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Harder-Narasimhan strata and Teleman quantization certificates for quiver moduli"};
    app.require_subcommand(1);

    std::string file;
    std::string format = "txt";
    auto* strata = app.add_subcommand("strata", "Table of unstable HN strata with their weight data");
    strata->add_option("file", file, "problem JSON")->required();
    strata->add_option("--format", format, "txt, csv or md")->check(CLI::IsMember({"txt", "csv", "md"}));

    auto* verdict = app.add_subcommand("verdict", "Cohomology-vanishing and rigidity certificate");
    verdict->add_option("file", file, "problem JSON")->required();

    std::string dmax;
    std::string out_format = "csv";
    std::uint64_t limit = qt::cli::default_sweep_limit;
    auto* sweep = app.add_subcommand("sweep", "Stability flags for every d <= dmax with canonical theta");
    sweep->add_option("file", file, "problem JSON (only the quiver is used)")->required();
    sweep->add_option("--dmax", dmax, "componentwise bound, e.g. 3,3")->required();
    sweep->add_option("--out", out_format, "output format")->check(CLI::IsMember({"csv"}));
    sweep->add_option("--limit", limit, "refuse sweeps visiting more dimension vectors than this");

    std::uint32_t field = 2;
    auto* census = app.add_subcommand("oracle-census", "Brute-force HN census over a prime field (debug)");
    census->add_option("file", file, "problem JSON")->required();
    census->add_option("--field", field, "prime field size")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        const auto spec = qt::cli::parse_problem(file);
        if (*strata) return qt::cli::cmd_strata(spec, qt::cli::parse_table_format(format), std::cout);
        if (*verdict) return qt::cli::cmd_verdict(spec, std::cout);
        if (*sweep) {
            qt::cli::cmd_sweep(spec.quiver, parse_dmax(dmax), std::cout, limit);
            return 0;
        }
        if (*census) return qt::cli::cmd_oracle_census(spec, field, std::cout);
    } catch (const qt::cli::ProblemError& e) {
        std::cerr << "error[" << qt::cli::to_string(e.kind()) << "]: " << e.what() << '\n';
        return qt::cli::exit_input_error;
    } catch (const qt::oracle::BudgetExceeded& e) {
        std::cerr << "error[budget]: " << e.what() << '\n';
        return qt::cli::exit_input_error;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error[input]: " << e.what() << '\n';
        return qt::cli::exit_input_error;
    } catch (const std::domain_error& e) {
        std::cerr << "error[precondition]: " << e.what() << '\n';
        return qt::cli::exit_input_error;
    } catch (const std::out_of_range& e) {
        std::cerr << "error[input]: " << e.what() << '\n';
        return qt::cli::exit_input_error;
    }
    return 0;
}
