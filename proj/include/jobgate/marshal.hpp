#pragma once

// Conversions between domain values and flat payloads of 32-bit integers.
// Text travels as one code point per element; numbers travel as their
// decimal text; multi-field records join fields with code 10.

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

namespace jobgate {

using Payload = std::vector<std::int32_t>;
using PayloadView = std::span<const std::int32_t>;

class MarshalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::int32_t kFieldSeparator = 10;
inline constexpr char32_t kMaxCodePoint = 0x10FFFF;

constexpr bool is_scalar_value(std::int64_t cp) noexcept {
  return cp >= 0 && cp <= kMaxCodePoint && !(cp >= 0xD800 && cp <= 0xDFFF);
}

namespace detail {

inline void append_utf8(std::string& out, char32_t cp) {
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

// Strict UTF-8 decoder: rejects overlong forms, surrogates and truncation.
inline std::u32string utf8_to_code_points(std::string_view text) {
  std::u32string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    const auto lead = static_cast<unsigned char>(text[i]);
    std::size_t len = 0;
    char32_t cp = 0;
    char32_t min = 0;
    if (lead < 0x80) {
      len = 1; cp = lead;
    } else if ((lead & 0xE0) == 0xC0) {
      len = 2; cp = lead & 0x1F; min = 0x80;
    } else if ((lead & 0xF0) == 0xE0) {
      len = 3; cp = lead & 0x0F; min = 0x800;
    } else if ((lead & 0xF8) == 0xF0) {
      len = 4; cp = lead & 0x07; min = 0x10000;
    } else {
      throw MarshalError("invalid UTF-8 lead byte at offset " + std::to_string(i));
    }
    if (i + len > text.size()) {
      throw MarshalError("truncated UTF-8 sequence at offset " + std::to_string(i));
    }
    for (std::size_t k = 1; k < len; ++k) {
      const auto cont = static_cast<unsigned char>(text[i + k]);
      if ((cont & 0xC0) != 0x80) {
        throw MarshalError("invalid UTF-8 continuation at offset " + std::to_string(i + k));
      }
      cp = (cp << 6) | (cont & 0x3F);
    }
    if (cp < min || !is_scalar_value(cp)) {
      throw MarshalError("invalid code point in UTF-8 at offset " + std::to_string(i));
    }
    out.push_back(cp);
    i += len;
  }
  return out;
}

// [+-]? (digits (. digits*)? | . digits) ([eE] [+-]? digits)?
constexpr bool is_decimal_literal(std::string_view s) noexcept {
  std::size_t i = 0;
  auto digits = [&] {
    std::size_t start = i;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
    return i - start;
  };
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  std::size_t mantissa = digits();
  if (i < s.size() && s[i] == '.') {
    ++i;
    mantissa += digits();
  }
  if (mantissa == 0) return false;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    if (digits() == 0) return false;
  }
  return i == s.size();
}

}  // namespace detail

inline Payload encode_text(std::u32string_view text) {
  Payload out;
  out.reserve(text.size());
  for (char32_t cp : text) {
    if (!is_scalar_value(cp)) {
      throw MarshalError("code point out of range: " + std::to_string(static_cast<std::uint32_t>(cp)));
    }
    out.push_back(static_cast<std::int32_t>(cp));
  }
  return out;
}

/// Encodes UTF-8 text, one element per code point.
inline Payload encode_text(std::string_view utf8) {
  return encode_text(std::u32string_view(detail::utf8_to_code_points(utf8)));
}

inline std::u32string decode_code_points(PayloadView payload) {
  std::u32string out;
  out.reserve(payload.size());
  for (std::size_t i = 0; i < payload.size(); ++i) {
    if (!is_scalar_value(payload[i])) {
      throw MarshalError("element " + std::to_string(i) + " is not a valid code point: " +
                         std::to_string(payload[i]));
    }
    out.push_back(static_cast<char32_t>(payload[i]));
  }
  return out;
}

/// Decodes to UTF-8. Inverse of encode_text.
inline std::string decode_text(PayloadView payload) {
  std::string out;
  out.reserve(payload.size());
  for (char32_t cp : decode_code_points(payload)) detail::append_utf8(out, cp);
  return out;
}

/// Decimal text with the fewest significant digits that parses back to the
/// same double. Fixed notation for exponents in [-4, 17), scientific
/// otherwise, as %g would choose.
inline std::string format_shortest(double x) {
  if (!std::isfinite(x)) throw MarshalError("cannot encode non-finite number");
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::scientific);
  const std::string_view sci(buf, static_cast<std::size_t>(res.ptr - buf));

  const std::size_t e = sci.find('e');
  std::string_view mantissa = sci.substr(0, e);
  const bool negative = !mantissa.empty() && mantissa.front() == '-';
  if (negative) mantissa.remove_prefix(1);
  std::string digits;
  for (char c : mantissa) {
    if (c != '.') digits.push_back(c);
  }
  int exponent = 0;
  std::from_chars(sci.data() + e + 1 + (sci[e + 1] == '+' ? 1 : 0), sci.data() + sci.size(), exponent);

  if (exponent < -4 || exponent >= 17) return std::string(sci);

  std::string out = negative ? "-" : "";
  if (exponent < 0) {
    out += "0.";
    out.append(static_cast<std::size_t>(-exponent - 1), '0');
    out += digits;
  } else if (static_cast<std::size_t>(exponent) + 1 >= digits.size()) {
    out += digits;
    out.append(static_cast<std::size_t>(exponent) + 1 - digits.size(), '0');
  } else {
    out += digits.substr(0, static_cast<std::size_t>(exponent) + 1);
    out += '.';
    out += digits.substr(static_cast<std::size_t>(exponent) + 1);
  }
  return out;
}

/// Decimal text with a fixed number of significant digits.
inline std::string format_significant(double x, int digits) {
  if (!std::isfinite(x)) throw MarshalError("cannot encode non-finite number");
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, digits);
  return std::string(buf, res.ptr);
}

inline double parse_decimal(std::string_view s) {
  if (!detail::is_decimal_literal(s)) {
    throw MarshalError("not a decimal literal: \"" + std::string(s) + "\"");
  }
  std::string_view body = s;
  if (!body.empty() && body.front() == '+') body.remove_prefix(1);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), value);
  if (ec == std::errc::result_out_of_range) {
    // from_chars leaves value untouched on range errors; strtod gives the
    // correctly rounded zero or subnormal for underflow and HUGE_VAL for overflow.
    const std::string copy(body);
    value = std::strtod(copy.c_str(), nullptr);
    if (!std::isfinite(value)) {
      throw MarshalError("decimal literal out of range: \"" + std::string(s) + "\"");
    }
    return value;
  }
  if (ec != std::errc() || ptr != body.data() + body.size()) {
    throw MarshalError("not a decimal literal: \"" + std::string(s) + "\"");
  }
  return value;
}

inline Payload encode_decimal(double x) { return encode_text(format_shortest(x)); }

inline double decode_decimal(PayloadView payload) {
  return parse_decimal(decode_text(payload));
}

/// Joins fields with the separator code. Fields must not contain it.
inline Payload join_fields(std::span<const std::string> fields) {
  Payload out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i != 0) out.push_back(kFieldSeparator);
    if (fields[i].find('\n') != std::string::npos) {
      throw MarshalError("field " + std::to_string(i) + " contains the field separator");
    }
    const Payload encoded = encode_text(fields[i]);
    out.insert(out.end(), encoded.begin(), encoded.end());
  }
  return out;
}

/// Splits a record on the separator code. An empty payload is one empty field.
inline std::vector<std::string> split_fields(PayloadView payload) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= payload.size(); ++i) {
    if (i == payload.size() || payload[i] == kFieldSeparator) {
      fields.push_back(decode_text(payload.subspan(start, i - start)));
      start = i + 1;
    }
  }
  return fields;
}

}  // namespace jobgate
