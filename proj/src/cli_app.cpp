#include "psums/cli_app.hpp"

#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "psums/cli_records.hpp"
#include "psums/errors.hpp"

namespace psums {

namespace {

void emit(const std::vector<OutputRecord>& records, bool json, std::ostream& out) {
    for (const OutputRecord& record : records) {
        if (json) {
            out << to_json(record).dump() << "\n";
        } else {
            out << render_text(record);
        }
    }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact verification toolkit for the equation "
                 "(x+1)^k + (x+2)^k + ... + (lx)^k = y^n"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "emit one JSON object per result line");

    long index = 0;
    CLI::App* bernoulli = app.add_subcommand("bernoulli", "print the Bernoulli number B_i");
    bernoulli->add_option("i", index, "index")->required();

    ProblemInstance instance{2, 2};
    std::string normalization = "paper";
    CLI::App* poly = app.add_subcommand("poly", "print the power-sum polynomial coefficients");
    poly->add_option("k", instance.k, "exponent")->required();
    poly->add_option("l", instance.ell, "multiplier")->required();
    poly->add_option("--normalization", normalization,
                     "'paper' for the (k+1)-scaled polynomial, 'sum' for the sum values")
        ->check(CLI::IsMember({"paper", "sum"}));

    CLI::App* profile = app.add_subcommand("profile", "print the root multiplicity profile");
    profile->add_option("k", instance.k, "exponent")->required();
    profile->add_option("l", instance.ell, "multiplier")->required();

    std::optional<long> n_single;
    std::optional<long> n_max;
    CLI::App* classify = app.add_subcommand("classify", "classify one (k, l, n) or an n-sweep");
    classify->add_option("k", instance.k, "exponent")->required();
    classify->add_option("l", instance.ell, "multiplier")->required();
    classify->add_option("n", n_single, "power");
    classify->add_option("--nmax", n_max, "sweep n = 2..nmax");

    Int x_max;
    std::string x_max_text;
    std::optional<long> search_n_max;
    CLI::App* search = app.add_subcommand("search", "enumerate solutions (x, y, n) in a box");
    search->add_option("k", instance.k, "exponent")->required();
    search->add_option("l", instance.ell, "multiplier")->required();
    search->add_option("--xmax", x_max_text, "largest x to try")->required();
    search->add_option("--nmax", search_n_max, "largest power to try");

    VerifyOptions verify_options;
    CLI::App* verify = app.add_subcommand("verify", "run the full invariant suite");
    verify->add_option("--kmax", verify_options.kmax, "largest exponent")->required();
    verify->add_option("--lmax", verify_options.lmax, "largest multiplier")->required();
    verify->add_option("--nmax", verify_options.nmax, "largest power (default 50)");

    // Let the global --json flag appear after subcommand arguments too.
    for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 1;
    }

    std::string command = app.get_subcommands().front()->get_name();
    try {
        if (bernoulli->parsed()) {
            emit({bernoulli_record(index)}, json, out);
        } else if (poly->parsed()) {
            emit({poly_record(instance, normalization)}, json, out);
        } else if (profile->parsed()) {
            emit({profile_record(instance)}, json, out);
        } else if (classify->parsed()) {
            if (n_single.has_value() == n_max.has_value()) {
                throw std::domain_error("classify: pass exactly one of <n> or --nmax");
            }
            if (n_single) {
                emit(classify_records(instance, *n_single), json, out);
            } else {
                emit(classify_sweep_records(instance, *n_max), json, out);
            }
        } else if (search->parsed()) {
            x_max = Int(x_max_text);
            emit(search_records(instance, x_max, search_n_max), json, out);
        } else if (verify->parsed()) {
            std::vector<OutputRecord> records = verify_records(verify_options);
            emit(records, json, out);
            const nlohmann::json& summary = records.back().result;
            if (!summary.at("all_passed").get<bool>()) return 2;
        }
    } catch (const invariant_violation& e) {
        if (json) out << to_json(error_record(command, e.what())).dump() << "\n";
        err << "internal invariant violation: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        if (json) out << to_json(error_record(command, e.what())).dump() << "\n";
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        if (json) out << to_json(error_record(command, e.what())).dump() << "\n";
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace psums
