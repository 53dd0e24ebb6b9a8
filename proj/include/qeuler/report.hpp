#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "qeuler/divisibility.hpp"

namespace qeuler {

enum class OutputFormat { plain, json, csv };

std::optional<OutputFormat> parse_format(std::string_view name);

/// `n=1 k=3 i=2` style parameter list.
std::string params_to_string(const VerificationReport& r, char sep = ' ');

/// Header line for `format`, or empty when the format has none.
std::string report_header(OutputFormat format);

/// One record, without a trailing newline. JSON records carry elapsed_ms.
std::string format_report(const VerificationReport& r, OutputFormat format);

}  // namespace qeuler
