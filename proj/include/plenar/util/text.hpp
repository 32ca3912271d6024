#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace plenar::util {

// Minimal UTF-8 handling, tuned for Portuguese text: full coverage of
// ASCII + Latin-1 Supplement + Latin Extended-A is all the corpus needs.
// Malformed bytes decode as U+FFFD and advance one byte.

inline char32_t utf8_decode(std::string_view s, std::size_t& pos) {
  const auto b0 = static_cast<unsigned char>(s[pos]);
  if (b0 < 0x80) {
    pos += 1;
    return b0;
  }
  auto cont = [&](std::size_t i) {
    return i < s.size() && (static_cast<unsigned char>(s[i]) & 0xc0) == 0x80;
  };
  if ((b0 & 0xe0) == 0xc0 && cont(pos + 1)) {
    char32_t cp = (b0 & 0x1fu) << 6 | (static_cast<unsigned char>(s[pos + 1]) & 0x3fu);
    pos += 2;
    return cp;
  }
  if ((b0 & 0xf0) == 0xe0 && cont(pos + 1) && cont(pos + 2)) {
    char32_t cp = (b0 & 0x0fu) << 12 | (static_cast<unsigned char>(s[pos + 1]) & 0x3fu) << 6 |
                  (static_cast<unsigned char>(s[pos + 2]) & 0x3fu);
    pos += 3;
    return cp;
  }
  if ((b0 & 0xf8) == 0xf0 && cont(pos + 1) && cont(pos + 2) && cont(pos + 3)) {
    char32_t cp = (b0 & 0x07u) << 18 | (static_cast<unsigned char>(s[pos + 1]) & 0x3fu) << 12 |
                  (static_cast<unsigned char>(s[pos + 2]) & 0x3fu) << 6 |
                  (static_cast<unsigned char>(s[pos + 3]) & 0x3fu);
    pos += 4;
    return cp;
  }
  pos += 1;
  return 0xfffd;
}

inline void utf8_append(char32_t cp, std::string& out) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xc0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xe0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3f)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
  } else {
    out.push_back(static_cast<char>(0xf0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3f)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3f)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
  }
}

inline std::vector<char32_t> utf8_codepoints(std::string_view s) {
  std::vector<char32_t> cps;
  cps.reserve(s.size());
  std::size_t pos = 0;
  while (pos < s.size()) cps.push_back(utf8_decode(s, pos));
  return cps;
}

inline std::string utf8_encode(const std::vector<char32_t>& cps) {
  std::string out;
  out.reserve(cps.size());
  for (char32_t cp : cps) utf8_append(cp, out);
  return out;
}

inline bool is_ascii_digit(char32_t cp) { return cp >= U'0' && cp <= U'9'; }

inline bool is_letter(char32_t cp) {
  if ((cp >= U'a' && cp <= U'z') || (cp >= U'A' && cp <= U'Z')) return true;
  if (cp == 0xaa || cp == 0xba) return true;  // ordinal indicators (ª º)
  if (cp >= 0xc0 && cp <= 0xff) return cp != 0xd7 && cp != 0xf7;
  if (cp >= 0x100 && cp <= 0x17f) return true;  // Latin Extended-A
  return false;
}

inline bool is_upper(char32_t cp) {
  if (cp >= U'A' && cp <= U'Z') return true;
  return cp >= 0xc0 && cp <= 0xde && cp != 0xd7;
}

inline char32_t to_lower(char32_t cp) {
  if (cp >= U'A' && cp <= U'Z') return cp + 0x20;
  if (cp >= 0xc0 && cp <= 0xde && cp != 0xd7) return cp + 0x20;
  return cp;
}

inline char32_t to_upper(char32_t cp) {
  if (cp >= U'a' && cp <= U'z') return cp - 0x20;
  if (cp >= 0xe0 && cp <= 0xfe && cp != 0xf7) return cp - 0x20;
  return cp;
}

inline bool is_space(char32_t cp) {
  return cp == U' ' || cp == U'\t' || cp == U'\n' || cp == U'\r' || cp == U'\f' ||
         cp == U'\v' || cp == 0xa0;
}

inline std::string lowercase(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  std::size_t pos = 0;
  while (pos < s.size()) utf8_append(to_lower(utf8_decode(s, pos)), out);
  return out;
}

// Collapse every whitespace run to one ASCII space and trim the ends.
inline std::string collapse_whitespace(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  std::size_t pos = 0;
  bool pending_space = false;
  while (pos < s.size()) {
    char32_t cp = utf8_decode(s, pos);
    if (is_space(cp)) {
      pending_space = !out.empty();
    } else {
      if (pending_space) out.push_back(' ');
      pending_space = false;
      utf8_append(cp, out);
    }
  }
  return out;
}

// ASCII-only byte test, safe to apply inside UTF-8 sequences.
inline bool is_ascii_space_byte(char c) {
  unsigned char u = static_cast<unsigned char>(c);
  return u < 0x80 && std::isspace(u);
}

inline std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && is_ascii_space_byte(s[b])) ++b;
  while (e > b && is_ascii_space_byte(s[e - 1])) --e;
  return std::string(s.substr(b, e - b));
}

inline std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.emplace_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

// Maximal letter/digit runs; the word units used by stylometry.
inline std::vector<std::string> word_tokens(std::string_view s) {
  std::vector<std::string> words;
  std::string cur;
  std::size_t pos = 0;
  while (pos < s.size()) {
    char32_t cp = utf8_decode(s, pos);
    if (is_letter(cp) || is_ascii_digit(cp)) {
      utf8_append(cp, cur);
    } else if (!cur.empty()) {
      words.push_back(std::move(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) words.push_back(std::move(cur));
  return words;
}

inline bool is_alphabetic_word(std::string_view w) {
  if (w.empty()) return false;
  std::size_t pos = 0;
  while (pos < w.size())
    if (!is_letter(utf8_decode(w, pos))) return false;
  return true;
}

// "JOÃO DA SILVA" -> "João da Silva". Connectives stay lowercase.
inline std::string title_case_name(std::string_view name) {
  auto words = split_ws(name);
  static const char* kConnectives[] = {"da", "de", "do", "das", "dos", "e"};
  std::string out;
  for (std::size_t w = 0; w < words.size(); ++w) {
    std::string low = lowercase(words[w]);
    bool connective = false;
    for (const char* c : kConnectives)
      if (low == c) connective = true;
    if (!out.empty()) out.push_back(' ');
    if (connective && w != 0) {
      out += low;
    } else {
      std::size_t pos = 0;
      char32_t first = utf8_decode(low, pos);
      utf8_append(to_upper(first), out);
      out += low.substr(pos);
    }
  }
  return out;
}

}  // namespace plenar::util
