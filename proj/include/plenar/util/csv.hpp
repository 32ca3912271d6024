#pragma once

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace plenar::util {

// Shortest round-trip representation; locale-free and deterministic.
inline std::string fmt_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

inline std::string csv_escape(std::string_view field) {
  bool needs_quotes = field.find_first_of(",\"\n") != std::string_view::npos;
  if (!needs_quotes) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out.push_back('"');
  return out;
}

class CsvWriter {
public:
  void row(const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) buf_.push_back(',');
      buf_ += csv_escape(fields[i]);
    }
    buf_.push_back('\n');
  }
  // Leading comment lines ("# ...") carry provenance notes.
  void comment(std::string_view text) {
    buf_ += "# ";
    buf_ += text;
    buf_.push_back('\n');
  }
  const std::string& str() const { return buf_; }

private:
  std::string buf_;
};

}  // namespace plenar::util
