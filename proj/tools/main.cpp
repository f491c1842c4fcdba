#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "rootpair/cli.hpp"
#include "rootpair/errors.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Primitive-root pair counting and bound verification over F_p"};
    app.require_subcommand(1);

    rootpair::RunConfig cfg;
    std::string format = "table";
    std::string range_text;
    std::string output;
    uint64_t p_value = 0;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "Output format: json, csv or table")
            ->check(CLI::IsMember({"json", "csv", "table"}));
        cmd->add_option("--output", output,
                        "Write the report to this file instead of stdout");
    };
    auto add_p = [&](CLI::App* cmd) {
        cmd->add_option("--p", p_value, "Odd prime modulus, 3 <= p <= 10^7")
            ->required();
    };
    auto add_poly = [&](CLI::App* cmd) {
        cmd->add_option("--poly", cfg.poly_spec,
                        "Polynomial f over F_p, e.g. \"x^2+4x+1\"")
            ->required();
    };
    auto add_alpha = [&](CLI::App* cmd) {
        cmd->add_option("--alpha", cfg.alpha,
                        "Integer exponent alpha in xi^alpha * f(xi)");
    };

    CLI::App* count = app.add_subcommand(
        "count", "Exact pair count plus its character-sum decomposition");
    add_p(count);
    add_alpha(count);
    add_poly(count);
    add_common(count);

    CLI::App* verify = app.add_subcommand(
        "verify", "Theorem and claim verification for one instance");
    add_p(verify);
    add_alpha(verify);
    add_poly(verify);
    add_common(verify);

    CLI::App* sweep = app.add_subcommand(
        "sweep", "Verify the theorem at every admissible prime in a range");
    sweep->add_option("--p-range", range_text, "Inclusive prime range lo..hi")
        ->required();
    add_alpha(sweep);
    add_poly(sweep);
    sweep->add_option("--parallelism", cfg.parallelism, "Worker threads")
        ->check(CLI::PositiveNumber);
    add_common(sweep);

    CLI::App* weil = app.add_subcommand(
        "weil", "Weil bound across one character of each order");
    add_p(weil);
    add_poly(weil);
    add_common(weil);

    CLI::App* exists = app.add_subcommand(
        "exists", "Smallest xi with xi and f(xi) both primitive roots");
    add_p(exists);
    add_poly(exists);
    add_common(exists);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    auto given = [](CLI::App* sub, const std::string& name) {
        const CLI::Option* opt = sub->get_option_no_throw(name);
        return opt != nullptr && opt->count() > 0;
    };

    try {
        CLI::App* sub = app.get_subcommands().front();
        if (sub == count) {
            cfg.command = rootpair::RunConfig::Command::count;
        } else if (sub == verify) {
            cfg.command = rootpair::RunConfig::Command::verify;
        } else if (sub == sweep) {
            cfg.command = rootpair::RunConfig::Command::sweep;
        } else if (sub == weil) {
            cfg.command = rootpair::RunConfig::Command::weil;
        } else {
            cfg.command = rootpair::RunConfig::Command::exists;
        }
        if (given(sub, "--p")) {
            cfg.p = p_value;
        }
        if (given(sub, "--p-range")) {
            cfg.p_range = rootpair::parse_p_range(range_text);
        }
        if (given(sub, "--output")) {
            cfg.output_path = output;
        }
        if (format == "json") {
            cfg.output_format = rootpair::RunConfig::Format::json;
        } else if (format == "csv") {
            cfg.output_format = rootpair::RunConfig::Format::csv;
        } else {
            cfg.output_format = rootpair::RunConfig::Format::table;
        }
        return rootpair::run(cfg, std::cout, std::cerr);
    } catch (const rootpair::usage_error& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 1;
    }
}
