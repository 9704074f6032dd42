#include <fstream>
#include <istream>
#include <sstream>

#include "balagha/errors.hpp"
#include "balagha/morphology.hpp"
#include "balagha/utf8.hpp"
#include "clitics.hpp"

namespace balagha {

namespace {

// Common words whose first or last letters collide with clitics.
constexpr std::string_view kBuiltinLexicon = R"(# surface	forced segmentation
ولد	ولد
وقت	وقت
وجه	وجه
وطن	وطن
وزير	وزير
وزارة	وزارة
وحيد	وحيد
وضع	وضع
وجد	وجد
فكر	فكر
فكرة	فكرة
فيلم	فيلم
فوق	فوق
فقط	فقط
فصل	فصل
فريق	فريق
كبير	كبير
كبيرة	كبيرة
كتاب	كتاب
كثير	كثير
كثيرة	كثيرة
كلام	كلام
كلمة	كلمة
كرسي	كرسي
كان	كان
كانت	كانت
بحر	بحر
بلد	بلد
بنت	بنت
بيت	بيت
لون	لون
لعب	لعب
ليل	ليل
ليلة	ليلة
لحم	لحم
لغة	لغة
سنة	سنة
سوق	سوق
سؤال	سؤال
سيارة	سيارة
سماء	سماء
سلام	سلام
سعيد	سعيد
الله	الله
اللهم	اللهم
لله	ل+له
)";

std::vector<std::u32string> split_pieces(const std::u32string& s) {
  std::vector<std::u32string> out(1);
  for (char32_t c : s) {
    if (c == U'+') {
      out.emplace_back();
    } else {
      out.back().push_back(c);
    }
  }
  return out;
}

std::vector<ExceptionLexicon::Piece> classify_pieces(
    const std::vector<std::u32string>& pieces, std::size_t line) {
  std::vector<ExceptionLexicon::Piece> out;
  std::size_t i = 0;
  const std::size_t n = pieces.size();
  for (const auto& p : pieces) {
    if (p.empty()) throw LexiconError("empty segment", line);
  }
  while (i + 1 < n) {
    const auto& p = pieces[i];
    if (p == clitics::kArticle) {
      out.push_back({p, SegmentKind::kDefiniteArticle});
    } else if (p.size() == 1 && clitics::is_proclitic(p[0])) {
      out.push_back({p, SegmentKind::kProclitic});
    } else {
      break;
    }
    ++i;
  }
  out.push_back({pieces[i], SegmentKind::kStem});
  ++i;
  if (i < n) {
    if (i + 1 != n || !clitics::is_enclitic(pieces[i])) {
      throw LexiconError("segments after the stem must be one enclitic", line);
    }
    out.push_back({pieces[i], SegmentKind::kEncliticPronoun});
  }
  return out;
}

}  // namespace

ExceptionLexicon ExceptionLexicon::parse(std::istream& in) {
  ExceptionLexicon lex;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (raw.empty() || raw[0] == '#') continue;
    const auto tab = raw.find('\t');
    if (tab == std::string::npos) {
      throw LexiconError("expected surface<TAB>segmentation", line_no);
    }
    std::u32string surface;
    std::u32string forced;
    try {
      surface = script::strip_marks(utf8::decode(raw.substr(0, tab)));
      forced = script::strip_marks(utf8::decode(raw.substr(tab + 1)));
    } catch (const EncodingError&) {
      throw LexiconError("invalid UTF-8", line_no);
    }
    if (surface.empty()) throw LexiconError("empty surface", line_no);
    for (char32_t c : surface) {
      if (!script::is_arabic_letter(c)) {
        throw LexiconError("surface must contain Arabic letters only",
                           line_no);
      }
    }
    const auto pieces = split_pieces(forced);
    std::u32string joined;
    for (const auto& p : pieces) joined += p;
    if (joined != surface) {
      throw LexiconError("segmentation does not spell the surface", line_no);
    }
    lex.entries_[surface] = classify_pieces(pieces, line_no);
  }
  return lex;
}

ExceptionLexicon ExceptionLexicon::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error("cannot open lexicon file " + path.string());
  }
  return parse(in);
}

const ExceptionLexicon& ExceptionLexicon::builtin() {
  static const ExceptionLexicon instance = [] {
    std::istringstream in{std::string(kBuiltinLexicon)};
    return parse(in);
  }();
  return instance;
}

void ExceptionLexicon::merge(const ExceptionLexicon& other) {
  for (const auto& [surface, pieces] : other.entries_) {
    entries_[surface] = pieces;
  }
}

const std::vector<ExceptionLexicon::Piece>* ExceptionLexicon::find(
    std::u32string_view letters) const {
  const auto it = entries_.find(std::u32string(letters));
  return it == entries_.end() ? nullptr : &it->second;
}

bool ExceptionLexicon::is_bare_stem(std::u32string_view letters) const {
  const auto* pieces = find(letters);
  return pieces && pieces->size() == 1;
}

}  // namespace balagha
