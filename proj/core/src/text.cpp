#include "kgdim/text.hpp"

#include <cstdint>

namespace kgdim {

namespace {

// Decodes one UTF-8 codepoint starting at s[i]. On malformed input, consumes
// a single byte and reports it as-is (cp set to the raw byte value, raw=true).
struct Decoded {
  uint32_t cp;
  std::size_t len;
  bool raw;
};

Decoded decode_utf8(std::string_view s, std::size_t i) {
  const auto b0 = static_cast<unsigned char>(s[i]);
  if (b0 < 0x80) return {b0, 1, false};

  auto cont = [&](std::size_t k) {
    return i + k < s.size() &&
           (static_cast<unsigned char>(s[i + k]) & 0xC0) == 0x80;
  };
  auto cb = [&](std::size_t k) {
    return static_cast<uint32_t>(static_cast<unsigned char>(s[i + k]) & 0x3F);
  };

  if ((b0 & 0xE0) == 0xC0 && cont(1)) {
    return {(static_cast<uint32_t>(b0 & 0x1F) << 6) | cb(1), 2, false};
  }
  if ((b0 & 0xF0) == 0xE0 && cont(1) && cont(2)) {
    return {(static_cast<uint32_t>(b0 & 0x0F) << 12) | (cb(1) << 6) | cb(2), 3,
            false};
  }
  if ((b0 & 0xF8) == 0xF0 && cont(1) && cont(2) && cont(3)) {
    return {(static_cast<uint32_t>(b0 & 0x07) << 18) | (cb(1) << 12) |
                (cb(2) << 6) | cb(3),
            4, false};
  }
  return {b0, 1, true};
}

void encode_utf8(uint32_t cp, std::string& out) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

bool is_space_cp(uint32_t cp) {
  return cp == ' ' || cp == '\t' || cp == '\n' || cp == '\r' || cp == '\v' ||
         cp == '\f' || cp == 0xA0;
}

// Simple case folding (CaseFolding.txt C+S status) for the scripts we meet.
uint32_t fold_cp(uint32_t c) {
  if (c >= 'A' && c <= 'Z') return c + 32;
  if (c < 0x80) return c;
  // Latin-1 supplement: À..Þ except ×.
  if ((c >= 0x00C0 && c <= 0x00D6) || (c >= 0x00D8 && c <= 0x00DE)) {
    return c + 32;
  }
  if (c == 0x00B5) return 0x03BC;  // micro sign folds to Greek mu
  // Latin Extended-A: alternating upper/lower pairs.
  if (c >= 0x0100 && c <= 0x0137) {
    if (c == 0x0130 || c == 0x0131) return c;  // dotted/dotless i: no S fold
    return (c % 2 == 0) ? c + 1 : c;
  }
  if (c >= 0x0139 && c <= 0x0148) return (c % 2 == 1) ? c + 1 : c;
  if (c >= 0x014A && c <= 0x0177) return (c % 2 == 0) ? c + 1 : c;
  if (c == 0x0178) return 0x00FF;  // Ÿ
  if (c >= 0x0179 && c <= 0x017E) return (c % 2 == 1) ? c + 1 : c;
  if (c == 0x1E9E) return 0x00DF;  // ẞ -> ß
  // Greek.
  if (c == 0x0386) return 0x03AC;
  if (c >= 0x0388 && c <= 0x038A) return c + 0x25;
  if (c == 0x038C) return 0x03CC;
  if (c == 0x038E || c == 0x038F) return c + 0x3F;
  if ((c >= 0x0391 && c <= 0x03A1) || (c >= 0x03A3 && c <= 0x03AB)) {
    return c + 32;
  }
  if (c == 0x03C2) return 0x03C3;  // final sigma
  // Cyrillic.
  if (c >= 0x0400 && c <= 0x040F) return c + 80;
  if (c >= 0x0410 && c <= 0x042F) return c + 32;
  return c;
}

}  // namespace

std::string collapse_whitespace(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  bool pending_space = false;
  for (std::size_t i = 0; i < s.size();) {
    const Decoded d = decode_utf8(s, i);
    i += d.len;
    if (!d.raw && is_space_cp(d.cp)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    if (d.raw) {
      out.push_back(static_cast<char>(d.cp));
    } else {
      encode_utf8(d.cp, out);
    }
  }
  return out;
}

std::string case_fold(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size();) {
    const Decoded d = decode_utf8(s, i);
    i += d.len;
    if (d.raw) {
      out.push_back(static_cast<char>(d.cp));
    } else {
      encode_utf8(fold_cp(d.cp), out);
    }
  }
  return out;
}

std::string_view first_label(std::string_view label) {
  const auto pos = label.find('|');
  return pos == std::string_view::npos ? label : label.substr(0, pos);
}

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find('\t', start);
    if (pos == std::string_view::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return fields;
}

bool tsv_safe(std::string_view field) {
  return field.find_first_of("\t\n\r") == std::string_view::npos;
}

}  // namespace kgdim
