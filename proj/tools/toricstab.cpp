// toricstab: exact Okounkov bodies, S/T-invariants and coupled stability
// thresholds for torus-invariant data on Q-factorial projective toric
// varieties.  One JSON job per invocation; exit codes: 0 success, 2 invalid
// input, 3 violated mathematical precondition.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "toricstab/io.hpp"

namespace {

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("--input", "cannot read '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

int write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return 0;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "cannot write '" << path << "'\n";
        return 2;
    }
    out << text;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toric Okounkov bodies and stability thresholds"};
    app.require_subcommand(0, 1);

    std::string input = "-";
    std::string output;
    unsigned precision = 128;
    bool corpus = false;
    app.add_option("--precision", precision, "working precision in bits for interval outputs")
        ->capture_default_str();
    app.add_flag("--corpus", corpus, "run the bundled example suite and exit");

    const std::vector<std::string> commands = {
        "okounkov-body", "s-invariant",   "flag-s",     "log-discrepancy",
        "delta",         "alpha",         "az-bound",   "zariski-surface",
        "product-check", "hirzebruch",    "bary-bounds", "curve-delta"};
    for (const auto& name : commands) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--input", input, "input JSON file (default: stdin)");
        sub->add_option("--output", output, "output file (default: stdout)");
        sub->add_option("--precision", precision,
                        "working precision in bits for interval outputs");
    }

    CLI11_PARSE(app, argc, argv);

    if (corpus) {
        toric::JobResult r = toric::run_corpus();
        std::cout << r.output;
        return r.exit_code;
    }
    if (app.get_subcommands().empty()) {
        std::cerr << app.help();
        return 2;
    }
    const std::string command = app.get_subcommands()[0]->get_name();

    std::string text;
    try {
        text = read_input(input);
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    toric::JobResult r = toric::run_job(command, text, precision);
    int werr = write_output(output, r.output);
    return werr ? werr : r.exit_code;
}
