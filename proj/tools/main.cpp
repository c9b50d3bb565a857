#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mseg/commands.hpp"

namespace {

struct IoOptions {
    std::string input_path;
    std::string output_path;
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) mseg::fail(mseg::errc::io_error, "cannot open input file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

int emit(const mseg::cli::Outcome& outcome, const std::string& output_path) {
    const std::string text = outcome.report.dump(2) + "\n";
    if (output_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(output_path, std::ios::binary);
        if (!out) {
            std::cerr << "cannot write output file '" << output_path << "'\n";
            return 2;
        }
        out << text;
    }
    return outcome.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"distinction calculator for multisegments over a quadratic extension"};
    app.require_subcommand(1);

    mseg::cli::Options options;
    IoOptions io;
    std::string mode = "gl";

    const auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("input", io.input_path, "DSL input file ('-' for standard input)")
            ->required();
        cmd->add_option("--pi", options.pi_name, "binding to use (defaults to the sole one)");
    };
    const auto add_output = [&](CLI::App* cmd) {
        cmd->add_option("--output", io.output_path, "write the JSON report to a file");
    };

    CLI::App* classify = app.add_subcommand("classify", "decide distinction of a multisegment");
    classify->add_option("--mode", mode, "gl (split form) or h (inner form)")
        ->required()
        ->check(CLI::IsMember({"gl", "h"}));
    add_input(classify);
    add_output(classify);

    CLI::App* generic = app.add_subcommand("generic", "decide genericity of a multisegment");
    add_input(generic);
    add_output(generic);

    CLI::App* jacquet = app.add_subcommand("jacquet", "Jacquet factors of a single segment");
    jacquet->add_option("--partition", options.partition, "comma-separated block sizes")
        ->required()
        ->delimiter(',');
    add_input(jacquet);
    add_output(jacquet);

    CLI::App* cosets = app.add_subcommand("cosets", "double-coset data for a partition");
    cosets->add_option("--partition", options.partition, "comma-separated block sizes")
        ->required()
        ->delimiter(',');
    add_output(cosets);

    CLI::App* bc = app.add_subcommand("bc", "decide base-change existence");
    add_input(bc);
    add_output(bc);

    CLI::App* eta = app.add_subcommand("eta", "component-group character of the parameter");
    add_input(eta);
    add_output(eta);

    CLI::App* check_main = app.add_subcommand("check-main", "base-change vs distinction check");
    add_input(check_main);
    add_output(check_main);

    CLI::App* fuzz = app.add_subcommand("fuzz", "randomized cross-check battery");
    fuzz->add_option("--trials", options.trials, "number of trials")->check(CLI::PositiveNumber);
    fuzz->add_option("--seed", options.seed, "base seed");
    fuzz->add_option("--max-r", options.max_r, "largest segment count per instance")
        ->check(CLI::PositiveNumber);
    fuzz->add_option("--max-l", options.max_l, "largest segment length")
        ->check(CLI::PositiveNumber);
    add_output(fuzz);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    options.command = app.get_subcommands().front()->get_name();
    options.mode = mode == "h" ? mseg::DistinctionMode::h : mseg::DistinctionMode::gl;

    std::string input_text;
    if (!io.input_path.empty()) {
        try {
            input_text = read_input(io.input_path);
        } catch (const mseg::Error& e) {
            std::cerr << e.what() << "\n";
            return 2;
        }
    }

    return emit(mseg::cli::run(options, input_text), io.output_path);
}
