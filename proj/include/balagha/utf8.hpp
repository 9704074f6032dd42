#ifndef BALAGHA_UTF8_HPP
#define BALAGHA_UTF8_HPP

#include <cstddef>
#include <string>
#include <string_view>

namespace balagha::utf8 {

// Decodes UTF-8 into Unicode scalar values. Throws EncodingError on
// ill-formed input (overlongs, surrogates, truncated sequences).
std::u32string decode(std::string_view bytes);

std::string encode(std::u32string_view scalars);
void append(std::string& out, char32_t scalar);

// Byte offset of the first ill-formed sequence, or npos when valid.
std::size_t find_invalid(std::string_view bytes);

// Number of scalar values; input must be valid UTF-8.
std::size_t length(std::string_view bytes);

}  // namespace balagha::utf8

namespace balagha::script {

enum class CharClass {
  kArabicLetter,
  kArabicMark,  // harakat, tanwin, shadda, Quranic annotation marks, tatweel
  kDigit,       // ASCII, Arabic-Indic and extended Arabic-Indic
  kLatinLetter,
  kSeparator,   // whitespace and punctuation
  kOther,
};

CharClass classify(char32_t c);

inline bool is_arabic_letter(char32_t c) {
  return classify(c) == CharClass::kArabicLetter;
}
inline bool is_arabic_mark(char32_t c) {
  return classify(c) == CharClass::kArabicMark;
}

// Removes every kArabicMark scalar.
std::u32string strip_marks(std::u32string_view text);
std::string strip_marks(std::string_view utf8_text);

}  // namespace balagha::script

#endif  // BALAGHA_UTF8_HPP
