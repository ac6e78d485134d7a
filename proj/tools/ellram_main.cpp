// ellram CLI: exact ramification and triviality analysis of quaternion
// symbols (x, f), (x-p, f), (x-q, f) on stable elliptic surfaces
// y^2 = x(x-p)(x-q) over P^1.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "ellram/ellram.hpp"

namespace {

ellram::SymbolRequest parse_symbol_option(const std::string& option) {
    const std::size_t colon = option.find(':');
    if (colon == std::string::npos)
        ellram::fail(ellram::ErrorCode::ValidationError,
                     "--symbol expects slot:expr, e.g. x:t or x-p:(t-1)*(t+3)");
    return {ellram::slot_from_name(option.substr(0, colon)), option.substr(colon + 1)};
}

ellram::AnalysisRequest load_request_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        ellram::fail(ellram::ErrorCode::ValidationError, "cannot open request file " + path);
    ellram::Json parsed;
    try {
        parsed = ellram::Json::parse(in);
    } catch (const std::exception& e) {
        ellram::fail(ellram::ErrorCode::ValidationError,
                     "request file " + path + " is not valid JSON: " + e.what());
    }
    return ellram::request_from_json(parsed);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Brauer-class ramification analysis for elliptic surfaces"
                 " y^2 = x(x-p)(x-q)"};
    app.require_subcommand(1);

    auto* analyze = app.add_subcommand(
        "analyze", "classify fibers, compute invariants and analyze quaternion symbols");
    std::string p_expr, q_expr, mode = "complex", format = "text", request_path;
    std::vector<std::string> symbol_options;
    bool invariants_only = false;
    analyze->add_option("--p", p_expr, "polynomial p(t), e.g. \"3*(t+1)^3*(t-3)\"");
    analyze->add_option("--q", q_expr, "polynomial q(t)");
    analyze->add_option("--symbol", symbol_options,
                        "quaternion symbol slot:expr with slot one of x, x-p, x-q (repeatable)");
    analyze->add_option("--mode", mode, "base field mode: complex (default) or rational")
        ->check(CLI::IsMember({"complex", "rational"}));
    analyze->add_option("--format", format, "output format: text (default) or json")
        ->check(CLI::IsMember({"text", "json"}));
    analyze->add_flag("--invariants-only", invariants_only,
                      "skip symbols and report only fibers and invariants");
    analyze->add_option("--request", request_path,
                        "JSON request file with the same fields as the flags");

    CLI11_PARSE(app, argc, argv);

    bool json_errors = format == "json";
    try {
        ellram::AnalysisRequest request;
        if (!request_path.empty()) {
            if (!p_expr.empty() || !q_expr.empty() || !symbol_options.empty())
                ellram::fail(ellram::ErrorCode::ValidationError,
                             "--request cannot be combined with --p/--q/--symbol");
            request = load_request_file(request_path);
            if (analyze->count("--mode") > 0) request.mode = ellram::mode_from_name(mode);
            if (analyze->count("--format") > 0) request.format = ellram::format_from_name(format);
            if (invariants_only) request.invariants_only = true;
        } else {
            if (p_expr.empty() || q_expr.empty())
                ellram::fail(ellram::ErrorCode::ValidationError,
                             "analyze needs --p and --q (or --request)");
            request.p_expr = p_expr;
            request.q_expr = q_expr;
            request.mode = ellram::mode_from_name(mode);
            request.format = ellram::format_from_name(format);
            request.invariants_only = invariants_only;
            for (const std::string& option : symbol_options)
                request.symbols.push_back(parse_symbol_option(option));
        }
        json_errors = request.format == ellram::AnalysisRequest::Format::Json;

        const ellram::AnalysisReport report = ellram::run_analysis(request);
        if (request.format == ellram::AnalysisRequest::Format::Json)
            std::cout << ellram::report_json(report).dump(2) << "\n";
        else
            std::cout << ellram::report_text(report);
        return 0;
    } catch (const ellram::Error& e) {
        if (json_errors)
            std::cerr << ellram::error_json(e).dump(2) << "\n";
        else
            std::cerr << "error (" << ellram::error_code_name(e.code()) << "): " << e.what()
                      << "\n";
        return e.exit_status();
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return ellram::error_exit_status(ellram::ErrorCode::InvariantViolation);
    }
}
