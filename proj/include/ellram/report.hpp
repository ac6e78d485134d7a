#pragma once

#include <json.hpp>

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ellram/brauer.hpp"
#include "ellram/parse.hpp"

namespace ellram {

using Json = nlohmann::ordered_json;

struct SymbolRequest {
    SymbolSlot slot;
    std::string f_expr;
};

struct AnalysisRequest {
    std::string p_expr;
    std::string q_expr;
    std::vector<SymbolRequest> symbols;
    BaseFieldMode mode = BaseFieldMode::Complex;
    enum class Format { Text, Json };
    Format format = Format::Text;
    bool invariants_only = false;
};

struct SymbolAnalysis {
    SymbolSlot slot;
    std::string f_text; // canonical rendering of the parsed f
    RamificationReport ramification;
    TrivialityVerdict triviality;
};

struct AnalysisReport {
    std::string p_text, q_text, diff_text;
    BaseFieldMode mode = BaseFieldMode::Complex;
    std::vector<FiberReport> fibers;
    SurfaceInvariants invariants;
    std::vector<SymbolAnalysis> symbols;
    std::vector<std::string> warnings;
};

inline SymbolSlot slot_from_name(std::string_view name) {
    if (name == "x") return SymbolSlot::X0;
    if (name == "x-p") return SymbolSlot::XminusP;
    if (name == "x-q") return SymbolSlot::XminusQ;
    fail(ErrorCode::ValidationError,
         "unknown symbol slot '" + std::string(name) + "'; expected x, x-p or x-q");
}

inline BaseFieldMode mode_from_name(std::string_view name) {
    if (name == "complex") return BaseFieldMode::Complex;
    if (name == "rational") return BaseFieldMode::Rational;
    fail(ErrorCode::ValidationError,
         "unknown mode '" + std::string(name) + "'; expected complex or rational");
}

inline AnalysisRequest::Format format_from_name(std::string_view name) {
    if (name == "text") return AnalysisRequest::Format::Text;
    if (name == "json") return AnalysisRequest::Format::Json;
    fail(ErrorCode::ValidationError,
         "unknown format '" + std::string(name) + "'; expected text or json");
}

inline AnalysisReport run_analysis(const AnalysisRequest& req) {
    if (!req.invariants_only && req.symbols.empty())
        fail(ErrorCode::ValidationError,
             "request has no symbols; pass --invariants-only to analyze the surface alone");

    const WeierstrassData w(parse_polynomial(req.p_expr), parse_polynomial(req.q_expr));

    AnalysisReport report;
    report.p_text = w.p().to_string();
    report.q_text = w.q().to_string();
    report.diff_text = w.difference().to_string();
    report.mode = req.mode;
    report.fibers = fiber_table(w);
    report.invariants = surface_invariants_of_table(report.fibers);

    for (const FiberReport& fiber : report.fibers)
        if (fiber.place.is_finite() && fiber.place.degree() >= 2)
            report.warnings.push_back("place " + fiber.place.to_string() + " bundles " +
                                      std::to_string(fiber.place.degree()) +
                                      " conjugate geometric points");

    for (const SymbolRequest& request : req.symbols) {
        QuaternionSymbol sym(request.slot, parse_rational_function(request.f_expr));
        SymbolAnalysis analysis{sym.slot, sym.f.to_string(),
                                ramification_verdict(w, sym, req.mode),
                                triviality_verdict(w, sym, report.invariants, req.mode)};
        for (const CheckedPlace& checked : analysis.ramification.checked_places)
            if (checked.place.is_finite() && checked.place.degree() >= 2)
                report.warnings.push_back("place " + checked.place.to_string() + " of symbol (" +
                                          std::string(slot_name(sym.slot)) + ", " +
                                          analysis.f_text + ") bundles " +
                                          std::to_string(checked.place.degree()) +
                                          " conjugate geometric points");
        for (const auto& [place, residue] : analysis.ramification.symbolic_conditions)
            report.warnings.push_back("squareness of " + residue.to_string() + " in Q[t]/(" +
                                      place.to_string() + ") is left symbolic for symbol (" +
                                      std::string(slot_name(sym.slot)) + ", " + analysis.f_text +
                                      ")");
        report.symbols.push_back(std::move(analysis));
    }
    return report;
}

inline Json place_json(const Place& v) {
    if (v.is_infinity()) return Json{{"kind", "infinity"}};
    return Json{{"kind", "finite"}, {"poly", v.poly().to_string()}, {"degree", v.degree()}};
}

inline Json triviality_json(const TrivialityVerdict& t) {
    Json out;
    switch (t.kind) {
        case TrivialityVerdict::Kind::Trivial:
            out["verdict"] = "trivial";
            out["case"] = t.trivial_case;
            break;
        case TrivialityVerdict::Kind::Nontrivial:
            out["verdict"] = "nontrivial";
            break;
        case TrivialityVerdict::Kind::Inconclusive:
            out["verdict"] = "inconclusive";
            out["reason"] = std::string(inconclusive_reason_name(t.reason));
            break;
    }
    return out;
}

inline Json report_json(const AnalysisReport& report) {
    Json surface;
    surface["p"] = report.p_text;
    surface["q"] = report.q_text;
    surface["p_minus_q"] = report.diff_text;
    surface["mode"] = std::string(mode_name(report.mode));
    surface["fibers"] = Json::array();
    for (const FiberReport& fiber : report.fibers) {
        Json entry;
        entry["place"] = place_json(fiber.place);
        entry["signature"] = Json{{"a", fiber.signature.a},
                                  {"b", fiber.signature.b},
                                  {"n", fiber.signature.n}};
        entry["stable"] = fiber.stable;
        entry["kodaira"] = fiber.kodaira_name();
        surface["fibers"].push_back(std::move(entry));
    }
    surface["invariants"] = Json{
        {"euler", report.invariants.euler},
        {"chi", report.invariants.chi},
        {"h11", report.invariants.h11},
        {"sum_m_minus_1", report.invariants.sum_m_minus_1},
        {"mw_rank_bound", report.invariants.mw_rank_bound},
        {"mw_rank_bound_note", "upper bound; exact iff Picard number is maximal"},
    };

    Json symbols = Json::array();
    for (const SymbolAnalysis& analysis : report.symbols) {
        Json entry;
        entry["slot"] = std::string(slot_name(analysis.slot));
        entry["f"] = analysis.f_text;
        Json ram;
        ram["overall_extends"] = analysis.ramification.overall_extends;
        ram["places"] = Json::array();
        for (const CheckedPlace& checked : analysis.ramification.checked_places) {
            ram["places"].push_back(Json{
                {"place", place_json(checked.place)},
                {"verdict",
                 checked.verdict == PlaceVerdict::Unramified ? "unramified" : "ramified"},
                {"reason", std::string(reason_name(checked.reason))},
            });
        }
        entry["ramification"] = std::move(ram);
        entry["required_squares"] = Json::array();
        for (const Rational& value : analysis.ramification.required_squares)
            entry["required_squares"].push_back(value.str());
        entry["symbolic_conditions"] = Json::array();
        for (const auto& [place, residue] : analysis.ramification.symbolic_conditions)
            entry["symbolic_conditions"].push_back(
                Json{{"place", place_json(place)}, {"must_be_square", residue.to_string()}});
        entry["triviality"] = triviality_json(analysis.triviality);
        symbols.push_back(std::move(entry));
    }

    Json out;
    out["surface"] = std::move(surface);
    out["symbols"] = std::move(symbols);
    out["warnings"] = report.warnings;
    return out;
}

inline std::string report_text(const AnalysisReport& report) {
    std::ostringstream out;
    out << "surface y^2 = x*(x-p)*(x-q), mode " << mode_name(report.mode) << "\n";
    out << "  p     = " << report.p_text << "\n";
    out << "  q     = " << report.q_text << "\n";
    out << "  p - q = " << report.diff_text << "\n\n";

    out << "fibers (place / kodaira / a b n):\n";
    for (const FiberReport& fiber : report.fibers) {
        out << "  " << fiber.place.to_string() << "  " << fiber.kodaira_name() << "  ("
            << fiber.signature.a << " " << fiber.signature.b << " " << fiber.signature.n << ")\n";
    }
    out << "\ninvariants:\n";
    out << "  euler = " << report.invariants.euler << ", chi = " << report.invariants.chi
        << ", h11 = " << report.invariants.h11 << "\n";
    out << "  sum(m_v - 1) = " << report.invariants.sum_m_minus_1 << "\n";
    out << "  mw rank bound = " << report.invariants.mw_rank_bound
        << "  (upper bound; exact iff Picard number is maximal)\n";

    for (const SymbolAnalysis& analysis : report.symbols) {
        out << "\nsymbol (" << slot_name(analysis.slot) << ", " << analysis.f_text << "):\n";
        out << "  extends to an Azumaya algebra: "
            << (analysis.ramification.overall_extends ? "yes" : "no") << "\n";
        for (const CheckedPlace& checked : analysis.ramification.checked_places) {
            out << "    " << checked.place.to_string() << ": "
                << (checked.verdict == PlaceVerdict::Unramified ? "unramified" : "ramified");
            if (checked.verdict == PlaceVerdict::Ramified)
                out << " (" << reason_name(checked.reason) << ")";
            out << "\n";
        }
        if (!analysis.ramification.required_squares.empty()) {
            out << "  required squares in the base field:";
            for (const Rational& value : analysis.ramification.required_squares)
                out << " " << value.str();
            out << "\n";
        }
        for (const auto& [place, residue] : analysis.ramification.symbolic_conditions)
            out << "  symbolic condition: " << residue.to_string() << " must be a square in Q[t]/("
                << place.to_string() << ")\n";
        const TrivialityVerdict& t = analysis.triviality;
        out << "  triviality: ";
        switch (t.kind) {
            case TrivialityVerdict::Kind::Trivial:
                out << "trivial (case " << t.trivial_case << ")";
                break;
            case TrivialityVerdict::Kind::Nontrivial:
                out << "nontrivial";
                break;
            case TrivialityVerdict::Kind::Inconclusive:
                out << "inconclusive (" << inconclusive_reason_name(t.reason) << ")";
                break;
        }
        out << "\n";
    }

    if (!report.warnings.empty()) {
        out << "\nwarnings:\n";
        for (const std::string& warning : report.warnings) out << "  - " << warning << "\n";
    }
    return out.str();
}

inline Json error_json(const Error& e) {
    return Json{{"error",
                 Json{{"code", std::string(error_code_name(e.code()))},
                      {"message", e.what()},
                      {"exit_status", e.exit_status()}}}};
}

// Request file layout for --request: the CLI flags, as JSON.
inline AnalysisRequest request_from_json(const Json& j) {
    AnalysisRequest req;
    if (!j.is_object()) fail(ErrorCode::ValidationError, "request file must hold a JSON object");
    if (!j.contains("p") || !j.contains("q"))
        fail(ErrorCode::ValidationError, "request file needs string fields 'p' and 'q'");
    if (!j.at("p").is_string() || !j.at("q").is_string())
        fail(ErrorCode::ValidationError, "request fields 'p' and 'q' must be strings");
    req.p_expr = j.at("p").get<std::string>();
    req.q_expr = j.at("q").get<std::string>();
    if (j.contains("mode")) req.mode = mode_from_name(j.at("mode").get<std::string>());
    if (j.contains("output")) req.format = format_from_name(j.at("output").get<std::string>());
    if (j.contains("invariants_only")) req.invariants_only = j.at("invariants_only").get<bool>();
    if (j.contains("symbols")) {
        if (!j.at("symbols").is_array())
            fail(ErrorCode::ValidationError, "request field 'symbols' must be an array");
        for (const auto& entry : j.at("symbols")) {
            if (!entry.is_object() || !entry.contains("slot") || !entry.contains("f"))
                fail(ErrorCode::ValidationError,
                     "each symbol needs string fields 'slot' and 'f'");
            req.symbols.push_back({slot_from_name(entry.at("slot").get<std::string>()),
                                   entry.at("f").get<std::string>()});
        }
    }
    return req;
}

} // namespace ellram
