#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace kgdim {

// Strips leading/trailing whitespace and collapses internal whitespace runs
// to a single space. UTF-8 aware (U+00A0 counts as whitespace).
std::string collapse_whitespace(std::string_view s);

// Unicode simple case folding over UTF-8 for the scripts that occur in the
// supported sources (Basic Latin, Latin-1, Latin Extended-A, Greek,
// Cyrillic). Other codepoints and malformed bytes pass through unchanged.
std::string case_fold(std::string_view s);

// Substring before the first '|' of a multi-valued label (whole string when
// there is none).
std::string_view first_label(std::string_view label);

// Splits on '\t', keeping empty fields. Views into the input.
std::vector<std::string_view> split_tabs(std::string_view line);

// True when the field contains none of '\t', '\n', '\r'.
bool tsv_safe(std::string_view field);

}  // namespace kgdim
