#include "balagha/utf8.hpp"

#include "balagha/errors.hpp"

namespace balagha::utf8 {

namespace {

// Decodes one scalar at `pos`. Returns the sequence length, or 0 when the
// bytes at `pos` are ill-formed.
std::size_t decode_one(std::string_view s, std::size_t pos, char32_t* out) {
  const auto b0 = static_cast<unsigned char>(s[pos]);
  if (b0 < 0x80) {
    *out = b0;
    return 1;
  }
  std::size_t len;
  char32_t cp;
  char32_t min;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
    min = 0x80;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
    min = 0x800;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
    min = 0x10000;
  } else {
    return 0;
  }
  if (pos + len > s.size()) return 0;
  for (std::size_t i = 1; i < len; ++i) {
    const auto b = static_cast<unsigned char>(s[pos + i]);
    if ((b & 0xC0) != 0x80) return 0;
    cp = (cp << 6) | (b & 0x3F);
  }
  if (cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return 0;
  *out = cp;
  return len;
}

}  // namespace

std::u32string decode(std::string_view bytes) {
  std::u32string out;
  out.reserve(bytes.size());
  std::size_t pos = 0;
  while (pos < bytes.size()) {
    char32_t cp;
    const std::size_t n = decode_one(bytes, pos, &cp);
    if (n == 0) {
      throw EncodingError(
          "invalid UTF-8 at byte offset " + std::to_string(pos), pos);
    }
    out.push_back(cp);
    pos += n;
  }
  return out;
}

void append(std::string& out, char32_t c) {
  if (c < 0x80) {
    out.push_back(static_cast<char>(c));
  } else if (c < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (c >> 6)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else if (c < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (c >> 12)));
    out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (c >> 18)));
    out.push_back(static_cast<char>(0x80 | ((c >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  }
}

std::string encode(std::u32string_view scalars) {
  std::string out;
  out.reserve(scalars.size() * 2);
  for (char32_t c : scalars) append(out, c);
  return out;
}

std::size_t find_invalid(std::string_view bytes) {
  std::size_t pos = 0;
  while (pos < bytes.size()) {
    char32_t cp;
    const std::size_t n = decode_one(bytes, pos, &cp);
    if (n == 0) return pos;
    pos += n;
  }
  return std::string_view::npos;
}

std::size_t length(std::string_view bytes) {
  std::size_t n = 0;
  for (char ch : bytes) {
    if ((static_cast<unsigned char>(ch) & 0xC0) != 0x80) ++n;
  }
  return n;
}

}  // namespace balagha::utf8

namespace balagha::script {

CharClass classify(char32_t c) {
  if (c >= U'0' && c <= U'9') return CharClass::kDigit;
  if ((c >= U'a' && c <= U'z') || (c >= U'A' && c <= U'Z')) {
    return CharClass::kLatinLetter;
  }
  if (c < 0x80) return CharClass::kSeparator;

  // Arabic block.
  if (c >= 0x0660 && c <= 0x0669) return CharClass::kDigit;
  if (c >= 0x06F0 && c <= 0x06F9) return CharClass::kDigit;
  if ((c >= 0x064B && c <= 0x065F) || c == 0x0670 || c == 0x0640 ||
      (c >= 0x0610 && c <= 0x061A) || (c >= 0x06D6 && c <= 0x06DC) ||
      (c >= 0x06DF && c <= 0x06E8) || (c >= 0x06EA && c <= 0x06ED)) {
    return CharClass::kArabicMark;
  }
  if ((c >= 0x0621 && c <= 0x063F) || (c >= 0x0641 && c <= 0x064A) ||
      (c >= 0x066E && c <= 0x066F) || (c >= 0x0671 && c <= 0x06D3) ||
      c == 0x06D5 || (c >= 0x06EE && c <= 0x06EF) ||
      (c >= 0x06FA && c <= 0x06FC) || c == 0x06FF ||
      (c >= 0x0750 && c <= 0x077F)) {
    return CharClass::kArabicLetter;
  }
  if (c >= 0x0600 && c <= 0x06FF) return CharClass::kSeparator;

  // Latin-1 and Latin Extended letters.
  if ((c >= 0x00C0 && c <= 0x024F && c != 0x00D7 && c != 0x00F7) ||
      (c >= 0x1E00 && c <= 0x1EFF)) {
    return CharClass::kLatinLetter;
  }
  if (c <= 0x00BF) return CharClass::kSeparator;  // Latin-1 punctuation, NBSP
  if (c == 0x00D7 || c == 0x00F7) return CharClass::kSeparator;
  if (c == 0x1680 || (c >= 0x2000 && c <= 0x206F) || c == 0x3000 ||
      (c >= 0x3001 && c <= 0x3003) || c == 0xFEFF || c == 0xFD3E ||
      c == 0xFD3F) {
    return CharClass::kSeparator;
  }
  // Presentation-form ligatures are treated as letters.
  if ((c >= 0xFB50 && c <= 0xFDFF) || (c >= 0xFE70 && c <= 0xFEFC)) {
    return CharClass::kArabicLetter;
  }
  return CharClass::kOther;
}

std::u32string strip_marks(std::u32string_view text) {
  std::u32string out;
  out.reserve(text.size());
  for (char32_t c : text) {
    if (classify(c) != CharClass::kArabicMark) out.push_back(c);
  }
  return out;
}

std::string strip_marks(std::string_view utf8_text) {
  return utf8::encode(strip_marks(utf8::decode(utf8_text)));
}

}  // namespace balagha::script
