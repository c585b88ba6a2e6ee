#pragma once

// Line-based service manifest:
//
//   library <name>
//   version <MAJOR.MINOR.PATCH> <YYYY-MM-DD>
//   service <name> base <int> stages <int>     (one or more)
//
// '#' starts a comment; blank lines are ignored.

#include <charconv>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "jobgate/names.hpp"
#include "jobgate/status.hpp"

namespace jobgate::bindgen {

struct ServiceSummary {
  std::string name;
  std::int32_t base = 0;
  std::int32_t stages = 0;

  friend bool operator==(const ServiceSummary&, const ServiceSummary&) = default;
};

struct LibraryVersion {
  int major = 0;
  int minor = 0;
  int patch = 0;
  std::string date;

  std::string number() const {
    return std::to_string(major) + "." + std::to_string(minor) + "." + std::to_string(patch);
  }

  friend bool operator==(const LibraryVersion&, const LibraryVersion&) = default;
};

struct Manifest {
  std::string library_name;
  LibraryVersion version;
  std::vector<ServiceSummary> services;

  friend bool operator==(const Manifest&, const Manifest&) = default;
};

/// `line` is 1-based; 0 means the error concerns the whole manifest.
class ManifestError : public std::runtime_error {
 public:
  ManifestError(int line, const std::string& message)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

namespace detail {

inline std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) words.push_back(line.substr(start, i - start));
  }
  return words;
}

template <typename Int>
bool parse_unsigned(std::string_view s, Int& out) {
  if (s.empty() || s.front() < '0' || s.front() > '9') return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

inline bool is_iso_date(std::string_view s) {
  if (s.size() != 10 || s[4] != '-' || s[7] != '-') return false;
  for (std::size_t i : {0, 1, 2, 3, 5, 6, 8, 9}) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  const int month = (s[5] - '0') * 10 + (s[6] - '0');
  const int day = (s[8] - '0') * 10 + (s[9] - '0');
  return month >= 1 && month <= 12 && day >= 1 && day <= 31;
}

inline LibraryVersion parse_version(int line, std::string_view number, std::string_view date) {
  LibraryVersion v;
  int* parts[] = {&v.major, &v.minor, &v.patch};
  std::size_t pos = 0;
  for (int k = 0; k < 3; ++k) {
    const std::size_t dot = k < 2 ? number.find('.', pos) : number.size();
    if (dot == std::string_view::npos || !parse_unsigned(number.substr(pos, dot - pos), *parts[k])) {
      throw ManifestError(line, "version must be MAJOR.MINOR.PATCH, got \"" + std::string(number) + "\"");
    }
    pos = dot + 1;
  }
  if (!is_iso_date(date)) {
    throw ManifestError(line, "release date must be YYYY-MM-DD, got \"" + std::string(date) + "\"");
  }
  v.date = std::string(date);
  return v;
}

}  // namespace detail

inline Manifest parse_manifest(std::string_view text) {
  Manifest m;
  int library_line = 0;
  int version_line = 0;
  std::map<std::int32_t, int> base_lines;
  std::map<std::string, int, std::less<>> name_lines;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (eol == text.size() && line.empty()) break;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto words = detail::split_words(line);
    if (words.empty()) continue;

    const std::string_view keyword = words.front();
    if (keyword == "library") {
      if (library_line != 0) {
        throw ManifestError(line_no, "duplicate library directive (first on line " + std::to_string(library_line) + ")");
      }
      if (words.size() != 2) throw ManifestError(line_no, "expected 'library <name>'");
      if (!is_lower_identifier(words[1])) {
        throw ManifestError(line_no, "library name must match [a-z][a-z0-9_]*, got \"" + std::string(words[1]) + "\"");
      }
      m.library_name = std::string(words[1]);
      library_line = line_no;
    } else if (keyword == "version") {
      if (version_line != 0) {
        throw ManifestError(line_no, "duplicate version directive (first on line " + std::to_string(version_line) + ")");
      }
      if (words.size() != 3) throw ManifestError(line_no, "expected 'version <MAJOR.MINOR.PATCH> <YYYY-MM-DD>'");
      m.version = detail::parse_version(line_no, words[1], words[2]);
      version_line = line_no;
    } else if (keyword == "service") {
      if (words.size() != 6 || words[2] != "base" || words[4] != "stages") {
        throw ManifestError(line_no, "expected 'service <name> base <int> stages <int>'");
      }
      ServiceSummary s;
      s.name = std::string(words[1]);
      if (!is_lower_identifier(s.name)) {
        throw ManifestError(line_no, "service name must match [a-z][a-z0-9_]*, got \"" + s.name + "\"");
      }
      if (!detail::parse_unsigned(words[3], s.base) || s.base % kJobStride != 0) {
        throw ManifestError(line_no, "service " + s.name + ": base must be a non-negative multiple of 10, got \"" +
                                         std::string(words[3]) + "\"");
      }
      if (!detail::parse_unsigned(words[5], s.stages) || s.stages < 1 || s.stages > kMaxStages) {
        throw ManifestError(line_no, "service " + s.name + ": stages must be in [1, 4], got \"" +
                                         std::string(words[5]) + "\"");
      }
      if (auto it = base_lines.find(s.base); it != base_lines.end()) {
        throw ManifestError(line_no, "service " + s.name + ": duplicate base " + std::to_string(s.base) +
                                         " (first on line " + std::to_string(it->second) + ")");
      }
      if (auto it = name_lines.find(s.name); it != name_lines.end()) {
        throw ManifestError(line_no, "duplicate service name " + s.name + " (first on line " +
                                         std::to_string(it->second) + ")");
      }
      base_lines.emplace(s.base, line_no);
      name_lines.emplace(s.name, line_no);
      m.services.push_back(std::move(s));
    } else {
      throw ManifestError(line_no, "unknown directive \"" + std::string(keyword) + "\"");
    }
  }

  if (library_line == 0) throw ManifestError(0, "missing required directive: library");
  if (version_line == 0) throw ManifestError(0, "missing required directive: version");
  if (m.services.empty()) throw ManifestError(0, "missing required directive: service (at least one)");
  return m;
}

/// Canonical form; parse_manifest(print_manifest(m)) == m.
inline std::string print_manifest(const Manifest& m) {
  std::ostringstream out;
  out << "library " << m.library_name << '\n';
  out << "version " << m.version.number() << ' ' << m.version.date << '\n';
  for (const auto& s : m.services) {
    out << "service " << s.name << " base " << s.base << " stages " << s.stages << '\n';
  }
  return out.str();
}

}  // namespace jobgate::bindgen
