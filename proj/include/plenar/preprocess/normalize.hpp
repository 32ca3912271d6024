#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "plenar/util/io.hpp"
#include "plenar/util/text.hpp"

namespace plenar::preprocess {

// Parliamentary formalities removed before anything else (a configurable
// list; this seed covers the standard forms of address).
inline std::vector<std::string> default_honorifics() {
  return {
      "Vossa Excelência",
      "Vossas Excelências",
      "V.Exa.",
      "V. Exa.",
      "Senhor Presidente",
      "Senhora Presidente",
      "Senhora Presidenta",
      "Sr. Presidente",
      "Sra. Presidente",
      "Sra. Presidenta",
      "senhoras e senhores deputados",
      "senhores e senhoras deputados",
      "senhoras e senhores",
      "Srs. Deputados",
      "Sras. Deputadas",
      "senhores deputados",
      "senhoras deputadas",
      "nobres colegas",
      "nobre colega",
      "caros colegas",
      "meus caros colegas",
  };
}

// One pattern per line; '#' lines are comments.
inline std::vector<std::string> load_honorifics(const util::fs::path& path) {
  std::vector<std::string> out;
  for (const auto& line : util::read_lines(path)) {
    std::string t = util::trim(line);
    if (t.empty() || t[0] == '#') continue;
    out.push_back(t);
  }
  return out;
}

namespace detail {

inline bool is_word_cp(char32_t cp) { return util::is_letter(cp) || util::is_ascii_digit(cp); }

// Case-insensitive phrase match over codepoints at position i; both sides
// must sit on word boundaries. Returns match length in codepoints, or 0.
inline std::size_t phrase_match(const std::vector<char32_t>& text, std::size_t i,
                                const std::vector<char32_t>& pat) {
  if (pat.empty() || i + pat.size() > text.size()) return 0;
  if (i > 0 && is_word_cp(text[i - 1]) && is_word_cp(pat.front())) return 0;
  for (std::size_t k = 0; k < pat.size(); ++k)
    if (util::to_lower(text[i + k]) != util::to_lower(pat[k])) return 0;
  std::size_t end = i + pat.size();
  if (end < text.size() && is_word_cp(text[end]) && is_word_cp(pat.back())) return 0;
  return pat.size();
}

inline std::vector<char32_t> remove_phrases_once(const std::vector<char32_t>& text,
                                                 const std::vector<std::vector<char32_t>>& pats,
                                                 bool* changed) {
  std::vector<char32_t> out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t len = 0;
    for (const auto& p : pats) {
      len = phrase_match(text, i, p);
      if (len) break;
    }
    if (len) {
      out.push_back(U' ');
      i += len;
      if (changed) *changed = true;
    } else {
      out.push_back(text[i]);
      ++i;
    }
  }
  return out;
}

// Balanced (...) and [...] spans drop entirely.
inline std::vector<char32_t> remove_bracketed(const std::vector<char32_t>& text) {
  std::vector<char32_t> out;
  out.reserve(text.size());
  int paren = 0, bracket = 0;
  for (char32_t cp : text) {
    if (cp == U'(') {
      paren++;
      continue;
    }
    if (cp == U')') {
      if (paren > 0) paren--;
      continue;
    }
    if (cp == U'[') {
      bracket++;
      continue;
    }
    if (cp == U']') {
      if (bracket > 0) bracket--;
      continue;
    }
    if (paren == 0 && bracket == 0) out.push_back(cp);
  }
  return out;
}

// Legislative number references: "nº 123", "n° 45/2021", "N.º 7".
inline std::vector<char32_t> remove_number_refs(const std::vector<char32_t>& text) {
  std::vector<char32_t> out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    char32_t cp = text[i];
    bool at_boundary = i == 0 || !is_word_cp(out.empty() ? 0 : out.back());
    if (at_boundary && (cp == U'n' || cp == U'N')) {
      std::size_t j = i + 1;
      if (j < text.size() && text[j] == U'.') ++j;
      if (j < text.size() && (text[j] == 0xba || text[j] == 0xb0)) {  // º or °
        ++j;
        if (j < text.size() && (text[j] == U's' || text[j] == U'S')) ++j;
        std::size_t k = j;
        while (k < text.size() && text[k] == U' ') ++k;
        if (k < text.size() && util::is_ascii_digit(text[k])) {
          while (k < text.size() &&
                 (util::is_ascii_digit(text[k]) || text[k] == U'.' || text[k] == U'/' ||
                  text[k] == U'-'))
            ++k;
          out.push_back(U' ');
          i = k;
          continue;
        }
      }
    }
    out.push_back(cp);
    ++i;
  }
  return out;
}

inline bool is_dash_or_special(char32_t cp) {
  switch (cp) {
    case U'-':
    case 0x2010:  // hyphen
    case 0x2012:  // figure dash
    case 0x2013:  // en dash
    case 0x2014:  // em dash
    case 0x2015:  // horizontal bar
    case U'/':
    case U'\\':
    case U'_':
    case U'|':
      return true;
    default:
      return false;
  }
}

// A pattern normalized the way body text looks после steps ii-iv, for the
// post-collapse fixpoint pass.
inline std::vector<char32_t> normalize_pattern(std::string_view pat) {
  std::vector<char32_t> cps = util::utf8_codepoints(pat);
  std::vector<char32_t> out;
  bool pending_space = false;
  for (char32_t cp : cps) {
    if (is_dash_or_special(cp) || util::is_space(cp)) {
      pending_space = !out.empty();
      continue;
    }
    if (!is_word_cp(cp)) continue;  // punctuation drops
    if (pending_space) out.push_back(U' ');
    pending_space = false;
    out.push_back(cp);
  }
  return out;
}

}  // namespace detail

// Normalization pipeline, applied in order:
//   i    honorific/formality removal (case-insensitive, word-bounded)
//   ii   parenthetical and legislative-annotation removal ("nº 123")
//   iii  dash/special characters to spaces
//   iv   punctuation/non-alphanumeric removal (accented letters stay)
//   v    whitespace collapse + honorific fixpoint re-scan
//   vi   lowercase
// The re-scan in step v removes forms that only become contiguous once
// asides and punctuation are gone, which is what makes the function
// idempotent. Deputy-name title-casing (the paper's step vi) applies to
// the name field, not the body: see util::title_case_name.
inline std::string normalize_text(std::string_view text,
                                  const std::vector<std::string>& honorifics =
                                      default_honorifics()) {
  std::vector<std::vector<char32_t>> raw_pats, collapsed_pats;
  for (const auto& h : honorifics) {
    raw_pats.push_back(util::utf8_codepoints(h));
    auto norm = detail::normalize_pattern(h);
    if (!norm.empty()) collapsed_pats.push_back(std::move(norm));
  }

  std::vector<char32_t> cps = util::utf8_codepoints(text);
  cps = detail::remove_phrases_once(cps, raw_pats, nullptr);
  cps = detail::remove_bracketed(cps);
  cps = detail::remove_number_refs(cps);

  std::vector<char32_t> kept;
  kept.reserve(cps.size());
  for (char32_t cp : cps) {
    if (detail::is_dash_or_special(cp) || util::is_space(cp)) {
      kept.push_back(U' ');
    } else if (detail::is_word_cp(cp)) {
      kept.push_back(cp);
    }
    // anything else is punctuation: dropped
  }

  auto collapse = [](const std::vector<char32_t>& in) {
    std::vector<char32_t> out;
    out.reserve(in.size());
    bool pending = false;
    for (char32_t cp : in) {
      if (cp == U' ') {
        pending = !out.empty();
      } else {
        if (pending) out.push_back(U' ');
        pending = false;
        out.push_back(cp);
      }
    }
    return out;
  };

  kept = collapse(kept);
  for (int pass = 0; pass < 16; ++pass) {
    bool changed = false;
    kept = collapse(detail::remove_phrases_once(kept, collapsed_pats, &changed));
    if (!changed) break;
  }

  std::string out;
  out.reserve(kept.size());
  for (char32_t cp : kept) util::utf8_append(util::to_lower(cp), out);
  return out;
}

}  // namespace plenar::preprocess
