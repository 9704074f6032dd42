#ifndef BALAGHA_SRC_CLITICS_HPP
#define BALAGHA_SRC_CLITICS_HPP

#include <array>
#include <string_view>

namespace balagha::clitics {

inline constexpr char32_t kWaw = U'و';
inline constexpr char32_t kFa = U'ف';
inline constexpr char32_t kSin = U'س';
inline constexpr char32_t kBa = U'ب';
inline constexpr char32_t kLam = U'ل';
inline constexpr char32_t kKaf = U'ك';
inline constexpr char32_t kAlef = U'ا';

inline constexpr std::u32string_view kArticle = U"ال";

inline bool is_conjunction(char32_t c) { return c == kWaw || c == kFa; }
inline bool is_future(char32_t c) { return c == kSin; }
inline bool is_preposition(char32_t c) {
  return c == kBa || c == kLam || c == kKaf;
}
inline bool is_proclitic(char32_t c) {
  return is_conjunction(c) || is_future(c) || is_preposition(c);
}

// Longest first.
inline constexpr std::array<std::u32string_view, 11> kEnclitics = {
    U"هما",
    U"كما",
    U"ها",
    U"نا",
    U"كم",
    U"كن",
    U"هم",
    U"هن",
    U"ي",
    U"ك",
    U"ه",
};

inline bool is_enclitic(std::u32string_view s) {
  for (auto e : kEnclitics) {
    if (e == s) return true;
  }
  return false;
}

}  // namespace balagha::clitics

#endif  // BALAGHA_SRC_CLITICS_HPP
