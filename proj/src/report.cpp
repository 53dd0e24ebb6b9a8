#include "qeuler/report.hpp"

#include <cmath>

#include <json.hpp>

namespace qeuler {

std::optional<OutputFormat> parse_format(std::string_view name) {
    if (name == "plain") return OutputFormat::plain;
    if (name == "json") return OutputFormat::json;
    if (name == "csv") return OutputFormat::csv;
    return std::nullopt;
}

std::string params_to_string(const VerificationReport& r, char sep) {
    std::string out;
    for (const auto& [name, value] : r.params) {
        if (!out.empty()) out += sep;
        out += name + "=" + std::to_string(value);
    }
    return out;
}

std::string report_header(OutputFormat format) {
    return format == OutputFormat::csv ? "claim,params,verdict,witness" : "";
}

std::string format_report(const VerificationReport& r, OutputFormat format) {
    const std::string witness = witness_to_string(r.witness);
    switch (format) {
        case OutputFormat::plain: {
            std::string line = std::string(claim_id(r.claim)) + " " + params_to_string(r) + " " +
                               std::string(verdict_name(r.verdict));
            if (!witness.empty()) line += (r.verdict == Verdict::fails ? " remainder=" : " witness=") + witness;
            if (!r.note.empty()) line += " (" + r.note + ")";
            if (r.forced) line += " [forced]";
            return line;
        }
        case OutputFormat::json: {
            nlohmann::ordered_json j;
            j["claim"] = claim_id(r.claim);
            nlohmann::ordered_json params = nlohmann::ordered_json::object();
            for (const auto& [name, value] : r.params) params[name] = value;
            j["params"] = std::move(params);
            j["verdict"] = verdict_name(r.verdict);
            j["witness"] = witness;
            j["elapsed_ms"] = std::round(r.elapsed.count() * 1000.0) / 1000.0;
            if (!r.note.empty()) j["note"] = r.note;
            if (r.forced) j["forced"] = true;
            return j.dump();
        }
        case OutputFormat::csv:
            // Witnesses contain no commas or quotes, so no quoting is needed.
            return std::string(claim_id(r.claim)) + "," + params_to_string(r, ';') + "," +
                   std::string(verdict_name(r.verdict)) + "," + witness;
    }
    return {};
}

}  // namespace qeuler
