#ifndef BALAGHA_MORPHOLOGY_HPP
#define BALAGHA_MORPHOLOGY_HPP

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace balagha {

enum class TokenKind { kArabicWord, kNumber, kLatin, kOther };

// A token with offsets in Unicode scalar values, [start, end).
struct Token {
  std::string surface;
  std::size_t start = 0;
  std::size_t end = 0;
  TokenKind kind = TokenKind::kOther;

  friend bool operator==(const Token&, const Token&) = default;
};

enum class SegmentKind { kProclitic, kDefiniteArticle, kStem, kEncliticPronoun };

struct Segment {
  std::string text;  // diacritics preserved
  SegmentKind kind;
  bool counted;

  friend bool operator==(const Segment&, const Segment&) = default;
};

struct MorphemeBreakdown {
  Token token;
  std::vector<Segment> segments;
  int token_count = 0;

  friend bool operator==(const MorphemeBreakdown&,
                         const MorphemeBreakdown&) = default;
};

enum class MorphemeSource { kRuleBased, kManualOverride };

struct MorphemeCount {
  int total = 0;
  std::vector<MorphemeBreakdown> breakdowns;
  MorphemeSource source = MorphemeSource::kRuleBased;

  friend bool operator==(const MorphemeCount&, const MorphemeCount&) = default;
};

const char* to_string(TokenKind kind);
const char* to_string(SegmentKind kind);
const char* to_string(MorphemeSource source);

// Splits text into Arabic words, digit runs, Latin runs and runs of other
// letters. Whitespace and punctuation produce no tokens. Arabic combining
// marks never start or split a token; they extend the token in progress.
std::vector<Token> tokenize(std::string_view text);

// Forced segmentations for words whose leading or trailing letters merely
// look like clitics. Entries are keyed by the diacritic-free surface.
class ExceptionLexicon {
 public:
  struct Piece {
    std::u32string letters;
    SegmentKind kind;
  };

  ExceptionLexicon() = default;

  // The small lexicon shipped with the toolkit.
  static const ExceptionLexicon& builtin();

  // One entry per line: `surface<TAB>forced_segmentation`, where the
  // segmentation joins pieces with '+', e.g. `بالبيت<TAB>ب+ال+بيت`.
  // Blank lines and lines starting with '#' are ignored. Throws LexiconError.
  static ExceptionLexicon parse(std::istream& in);
  static ExceptionLexicon load(const std::filesystem::path& path);

  // Entries in `other` replace entries with the same surface.
  void merge(const ExceptionLexicon& other);

  const std::vector<Piece>* find(std::u32string_view letters) const;

  // True when `letters` is listed as a bare stem and so must not lose
  // leading or trailing letters to clitic stripping.
  bool is_bare_stem(std::u32string_view letters) const;

  std::size_t size() const { return entries_.size(); }

 private:
  std::unordered_map<std::u32string, std::vector<Piece>> entries_;
};

// Rule-based clitic segmenter.
//
// Proclitics are matched in the order [و|ف][س][ب|ل|ك][ال] and one enclitic
// pronoun (longest of ي ك ه ها نا كم كن هم هن هما كما) at the end. Each
// proclitic and the enclitic count as one morpheme; the definite article
// does not. A candidate split is kept only if the remaining stem has at
// least three letters (two when it directly follows the article with no
// enclitic) or is a known particle or bare-stem lexicon entry. Among valid
// splits the one stripping the most clitics wins; ties prefer keeping the
// article, then keeping the enclitic.
class Segmenter {
 public:
  Segmenter();
  explicit Segmenter(ExceptionLexicon lexicon);

  MorphemeBreakdown segment(const Token& token) const;
  MorphemeCount count(std::string_view text) const;

  const ExceptionLexicon& lexicon() const { return lexicon_; }

 private:
  ExceptionLexicon lexicon_;
};

// Shorthands over a Segmenter with the built-in lexicon.
MorphemeBreakdown segment_token(const Token& token);
MorphemeCount count_morphemes(std::string_view text);

// Standalone function words that always count as one morpheme.
bool is_particle(std::u32string_view letters);

}  // namespace balagha

#endif  // BALAGHA_MORPHOLOGY_HPP
