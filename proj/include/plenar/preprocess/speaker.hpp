#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "plenar/util/text.hpp"

namespace plenar::preprocess {

// Speaker-introduction grammar for Chamber transcripts. An intro is:
//   (1) a title  ("O SR.", "A SRA.", "O DEPUTADO", ...)
//   (2) a name   (run of UPPERCASE words, internal hyphens allowed)
//   (3) optional "(PARTY - UF)" block, possibly with trailing remarks
//   (4) a terminal dash ("-", "–" or "—")
// Hand-written scanner rather than one monolithic regex: each component
// is testable on its own and the offsets stay byte-exact.

struct SpeakerIntro {
  std::size_t start = 0;       // byte offset of the title
  std::size_t body_start = 0;  // first byte after the terminal dash (+spaces)
  std::size_t dash_pos = 0;    // byte offset of the terminal dash
  std::string title;
  std::string name;
  std::optional<std::pair<std::string, std::string>> party_state;  // (party, UF)
};

inline const std::set<std::string>& brazilian_state_codes() {
  static const std::set<std::string> codes = {
      "AC", "AL", "AP", "AM", "BA", "CE", "DF", "ES", "GO", "MA", "MT", "MS", "MG", "PA",
      "PB", "PR", "PE", "PI", "RJ", "RN", "RS", "RO", "RR", "SC", "SP", "SE", "TO"};
  return codes;
}

namespace detail {

// Longest first so "O SR. DEPUTADO" wins over "O SR.".
inline const std::vector<std::string>& speaker_titles() {
  static const std::vector<std::string> titles = {
      "O SR. DEPUTADO", "A SRA. DEPUTADA", "O SR. PRESIDENTE", "A SRA. PRESIDENTA",
      "A SRA. PRESIDENTE", "O SENHOR DEPUTADO", "A SENHORA DEPUTADA", "O DEPUTADO",
      "A DEPUTADA", "O SENHOR", "A SENHORA", "O SR.", "A SRA.", "O SR", "A SRA"};
  return titles;
}

inline bool is_dash(char32_t cp) { return cp == U'-' || cp == 0x2013 || cp == 0x2014; }

// ASCII-case-insensitive prefix match (titles are plain ASCII).
inline bool matches_at(std::string_view text, std::size_t pos, std::string_view pat) {
  if (pos + pat.size() > text.size()) return false;
  for (std::size_t i = 0; i < pat.size(); ++i) {
    char a = text[pos + i], b = pat[i];
    if (std::toupper(static_cast<unsigned char>(a)) != std::toupper(static_cast<unsigned char>(b)))
      return false;
  }
  return true;
}

// One UPPERCASE name word starting at pos: UPPER+ ('-' UPPER+)* ('.')?
// Returns the end offset, or pos when there is no word here.
inline std::size_t scan_name_word(std::string_view text, std::size_t pos) {
  std::size_t p = pos;
  bool any = false;
  while (true) {
    std::size_t q = p;
    bool run = false;
    while (q < text.size()) {
      std::size_t r = q;
      char32_t cp = util::utf8_decode(text, r);
      if (!util::is_upper(cp)) break;
      q = r;
      run = true;
    }
    if (!run) break;
    any = true;
    p = q;
    if (p < text.size() && text[p] == '-') {
      std::size_t r = p + 1;
      char32_t cp = r < text.size() ? util::utf8_decode(text, r) : 0;
      if (util::is_upper(cp)) {
        p += 1;  // hyphenated surname continues
        continue;
      }
    }
    break;
  }
  if (!any) return pos;
  if (p < text.size() && text[p] == '.') p += 1;  // initials like "J."
  return p;
}

struct ParenBlock {
  std::size_t end = 0;  // byte just after ')'
  std::optional<std::pair<std::string, std::string>> party_state;
};

// "(PARTY - UF ...)" — party/UF extracted when the prefix parses and the
// UF is a real state code; the block is skipped either way.
inline std::optional<ParenBlock> scan_paren_block(std::string_view text, std::size_t pos) {
  if (pos >= text.size() || text[pos] != '(') return std::nullopt;
  int depth = 0;
  std::size_t close = std::string_view::npos;
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (text[i] == '(') depth++;
    if (text[i] == ')') {
      depth--;
      if (depth == 0) {
        close = i;
        break;
      }
    }
  }
  if (close == std::string_view::npos) return std::nullopt;

  ParenBlock block;
  block.end = close + 1;
  std::string_view inner = text.substr(pos + 1, close - pos - 1);

  std::size_t p = 0, dash = std::string_view::npos;
  while (p < inner.size()) {
    std::size_t q = p;
    char32_t cp = util::utf8_decode(inner, q);
    if (is_dash(cp)) {
      dash = p;
      break;
    }
    p = q;
  }
  if (dash != std::string_view::npos) {
    std::string party = util::trim(inner.substr(0, dash));
    std::size_t after = dash;
    util::utf8_decode(inner, after);
    while (after < inner.size() && inner[after] == ' ') ++after;
    if (after + 2 <= inner.size()) {
      std::string uf(inner.substr(after, 2));
      bool party_ok = !party.empty() && party.size() <= 24;
      for (std::size_t i = 0; party_ok && i < party.size();) {
        char32_t cp = util::utf8_decode(party, i);
        if (!util::is_letter(cp) && !util::is_ascii_digit(cp) && cp != U' ') party_ok = false;
      }
      if (party_ok && brazilian_state_codes().count(uf))
        block.party_state = std::make_pair(party, uf);
    }
  }
  return block;
}

}  // namespace detail

// All speaker intros in the transcript, in byte order.
inline std::vector<SpeakerIntro> find_speaker_intros(std::string_view text) {
  std::vector<SpeakerIntro> found;
  std::size_t pos = 0;
  char32_t prev_cp = 0;
  while (pos < text.size()) {
    bool at_boundary = pos == 0 || !util::is_letter(prev_cp);
    if (at_boundary) {
      for (const auto& title : detail::speaker_titles()) {
        if (!detail::matches_at(text, pos, title)) continue;
        std::size_t p = pos + title.size();
        // a title must be followed by whitespace
        if (p >= text.size() || text[p] != ' ') continue;
        while (p < text.size() && text[p] == ' ') ++p;

        // name: one or more uppercase words separated by single spaces
        std::size_t name_begin = p, name_end = p;
        while (true) {
          std::size_t we = detail::scan_name_word(text, name_end == p ? p : name_end + 1);
          if (we == (name_end == p ? p : name_end + 1)) break;
          name_end = we;
          if (name_end < text.size() && text[name_end] == ' ' &&
              name_end + 1 < text.size()) {
            std::size_t probe = detail::scan_name_word(text, name_end + 1);
            if (probe == name_end + 1) break;
            continue;
          }
          break;
        }
        if (name_end == name_begin) continue;  // no name here

        SpeakerIntro intro;
        intro.start = pos;
        intro.title = std::string(text.substr(pos, title.size()));
        intro.name = std::string(text.substr(name_begin, name_end - name_begin));

        std::size_t q = name_end;
        while (q < text.size() && text[q] == ' ') ++q;
        if (auto block = detail::scan_paren_block(text, q)) {
          intro.party_state = block->party_state;
          q = block->end;
          while (q < text.size() && text[q] == ' ') ++q;
        }
        if (q >= text.size()) continue;
        std::size_t dash_end = q;
        char32_t cp = util::utf8_decode(text, dash_end);
        if (!detail::is_dash(cp)) continue;

        intro.dash_pos = q;
        std::size_t body = dash_end;
        while (body < text.size() && text[body] == ' ') ++body;
        intro.body_start = body;
        found.push_back(intro);
        pos = dash_end;
        break;
      }
    }
    std::size_t adv = pos;
    prev_cp = util::utf8_decode(text, adv);
    pos = adv;
  }
  return found;
}

struct MonologueResult {
  std::string text;
  int speaker_count = 0;
  bool no_intro = false;                            // transcript may be a procedural note
  std::size_t truncated_at = std::string::npos;     // byte offset of the 2nd intro
  std::optional<SpeakerIntro> first_intro;
};

// Keeps the first speaker's continuous segment: everything between the
// first intro's terminal dash and the second intro (or the end). With no
// intro at all the text passes through unchanged, flagged.
inline MonologueResult isolate_monologue(std::string_view raw_text) {
  MonologueResult res;
  auto intros = find_speaker_intros(raw_text);
  res.speaker_count = static_cast<int>(intros.size());
  if (intros.empty()) {
    res.text = std::string(raw_text);
    res.no_intro = true;
    return res;
  }
  res.first_intro = intros[0];
  std::size_t begin = intros[0].body_start;
  std::size_t end = raw_text.size();
  if (intros.size() >= 2) {
    end = intros[1].start;
    res.truncated_at = end;
  }
  std::string_view body = raw_text.substr(begin, end - begin);
  while (!body.empty() && util::is_ascii_space_byte(body.back())) body.remove_suffix(1);
  res.text = std::string(body);
  return res;
}

}  // namespace plenar::preprocess
