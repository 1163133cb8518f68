#include "p13/error.hpp"
#include "p13/report.hpp"
#include "p13/suite.hpp"

#include "CLI11.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

[[nodiscard]] std::string suite_list() {
    std::string out;
    for (const std::string& n : p13::suite_names()) {
        if (!out.empty()) out += ", ";
        out += n;
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"p13cert: certifies the operator identities behind the massless "
                 "two-component equation catalog"};

    p13::SuiteConfig cfg;
    std::string format = "text";
    std::string out_path;
    std::uint64_t seed = 1;
    double tol = 1e-9;

    app.add_option("--suite", cfg.suite, "check suite to run (" + suite_list() + ")")
        ->capture_default_str();
    app.add_option("--rep", cfg.reps, "restrict to one or more representation ids (repeatable)");
    app.add_option("--seed", seed, "sample stream seed")->capture_default_str();
    app.add_option("--tol", tol, "relative float tolerance")->capture_default_str();
    app.add_option("--max-degree", cfg.max_degree, "polynomial degree guard")
        ->capture_default_str();
    app.add_option("--format", format, "output format: text or json")->capture_default_str();
    app.add_option("--out", out_path, "write the report here instead of stdout");
    app.add_option("--manifest", cfg.manifest_path, "expected classification table")
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    if (format != "text" && format != "json") {
        std::cerr << "error: unknown format: " << format << "\n";
        return 2;
    }
    cfg.plan.seed = seed;
    cfg.plan.tol = tol;

    std::vector<p13::CheckedResult> results;
    try {
        results = p13::run_suite(cfg);
    } catch (const p13::Error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "internal error: " << err.what() << "\n";
        return 2;
    }

    std::string body;
    if (format == "json") {
        body = p13::emit_json(results);
    } else {
        body = "# plane-wave convention: psi ~ exp(-i(omega t - p.x)), omega = +-E, "
               "E = sqrt(p1^2 + p2^2 + p3^2) > 0\n";
        body += p13::emit_text(results);
    }

    if (out_path.empty()) {
        std::cout << body;
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot open " << out_path << "\n";
            return 2;
        }
        f << body;
    }
    return p13::exit_code(results);
}
