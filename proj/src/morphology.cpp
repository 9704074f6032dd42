#include "balagha/morphology.hpp"

#include <algorithm>
#include <optional>
#include <unordered_set>

#include "balagha/utf8.hpp"
#include "clitics.hpp"

namespace balagha {

using script::CharClass;

const char* to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::kArabicWord:
      return "arabic_word";
    case TokenKind::kNumber:
      return "number";
    case TokenKind::kLatin:
      return "latin";
    case TokenKind::kOther:
      return "other";
  }
  return "other";
}

const char* to_string(SegmentKind kind) {
  switch (kind) {
    case SegmentKind::kProclitic:
      return "proclitic";
    case SegmentKind::kDefiniteArticle:
      return "definite_article";
    case SegmentKind::kStem:
      return "stem";
    case SegmentKind::kEncliticPronoun:
      return "enclitic_pronoun";
  }
  return "stem";
}

const char* to_string(MorphemeSource source) {
  return source == MorphemeSource::kManualOverride ? "manual_override"
                                                   : "rule_based";
}

namespace {

std::optional<TokenKind> token_kind_for(CharClass cls) {
  switch (cls) {
    case CharClass::kArabicLetter:
      return TokenKind::kArabicWord;
    case CharClass::kDigit:
      return TokenKind::kNumber;
    case CharClass::kLatinLetter:
      return TokenKind::kLatin;
    case CharClass::kOther:
      return TokenKind::kOther;
    case CharClass::kArabicMark:
    case CharClass::kSeparator:
      return std::nullopt;
  }
  return std::nullopt;
}

const std::unordered_set<std::u32string>& particles() {
  static const std::unordered_set<std::u32string> kParticles = {
      U"في",   U"من",   U"إلى",  U"الى",  U"على",  U"عن",    U"مع",
      U"ثم",   U"أو",   U"أم",   U"لا",   U"لم",   U"لن",    U"ما",
      U"هل",   U"قد",   U"إن",   U"أن",   U"إذا",  U"إذ",    U"لو",
      U"كي",   U"حتى",  U"بل",   U"لكن",  U"لما",  U"كما",   U"فيما",
      U"التي", U"الذي", U"الذين", U"اللذان", U"اللتان", U"اللاتي", U"اللواتي",
      U"هذا",  U"هذه",  U"ذلك",  U"تلك",  U"هؤلاء", U"هو",    U"هي",
      U"هم",   U"هن",   U"أنا",  U"نحن",  U"أنت",  U"أنتم",  U"منذ",
      U"عند",  U"لدى",  U"بين",  U"إلا",  U"ليس",
  };
  return kParticles;
}

// A letter together with the marks that follow it.
struct Cluster {
  char32_t letter;
  std::u32string raw;
};

std::vector<Cluster> clusters_of(std::u32string_view scalars) {
  std::vector<Cluster> out;
  for (char32_t c : scalars) {
    if (script::is_arabic_mark(c) && !out.empty()) {
      out.back().raw.push_back(c);
    } else if (!script::is_arabic_mark(c)) {
      out.push_back({c, std::u32string(1, c)});
    }
  }
  return out;
}

struct Span {
  std::size_t length;  // in letters
  SegmentKind kind;
};

std::vector<Segment> render(const std::vector<Cluster>& clusters,
                            const std::vector<Span>& spans) {
  std::vector<Segment> out;
  std::size_t pos = 0;
  for (const Span& s : spans) {
    std::u32string raw;
    for (std::size_t i = pos; i < pos + s.length; ++i) raw += clusters[i].raw;
    pos += s.length;
    out.push_back({utf8::encode(raw), s.kind,
                   s.kind != SegmentKind::kDefiniteArticle});
  }
  return out;
}

struct Candidate {
  std::size_t prefixes;  // proclitics kept, article included
  bool enclitic;
  bool is_protected;
  bool article;
  int stripped() const { return static_cast<int>(prefixes) + (enclitic ? 1 : 0); }
};

// True when `a` is preferred over `b`.
bool better(const Candidate& a, const Candidate& b) {
  if (a.is_protected != b.is_protected) return a.is_protected;
  if (a.stripped() != b.stripped()) return a.stripped() > b.stripped();
  if (a.article != b.article) return a.article;
  return a.enclitic && !b.enclitic;
}

std::vector<Span> split_word(const std::u32string& w,
                             const ExceptionLexicon& lexicon) {
  if (const auto* forced = lexicon.find(w)) {
    std::vector<Span> spans;
    for (const auto& piece : *forced) {
      spans.push_back({piece.letters.size(), piece.kind});
    }
    return spans;
  }
  if (particles().contains(w)) return {{w.size(), SegmentKind::kStem}};

  // Proclitic chain, greedy in the fixed slot order.
  std::vector<Span> chain;
  std::size_t pos = 0;
  auto take_letter = [&](bool (*matches)(char32_t)) {
    if (pos + 1 < w.size() && matches(w[pos])) {
      chain.push_back({1, SegmentKind::kProclitic});
      ++pos;
    }
  };
  take_letter(clitics::is_conjunction);
  take_letter(clitics::is_future);
  take_letter(clitics::is_preposition);
  if (pos + 2 < w.size() &&
      std::u32string_view(w).substr(pos, 2) == clitics::kArticle) {
    chain.push_back({2, SegmentKind::kDefiniteArticle});
  }

  std::size_t enclitic_len = 0;
  for (auto e : clitics::kEnclitics) {
    if (e.size() < w.size() && std::u32string_view(w).ends_with(e)) {
      enclitic_len = e.size();
      break;
    }
  }

  std::optional<Candidate> best;
  for (std::size_t kept = 0; kept <= chain.size(); ++kept) {
    std::size_t prefix_len = 0;
    for (std::size_t i = 0; i < kept; ++i) prefix_len += chain[i].length;
    const bool article =
        kept > 0 && chain[kept - 1].kind == SegmentKind::kDefiniteArticle;
    for (bool enclitic : {false, true}) {
      if (enclitic && enclitic_len == 0) continue;
      const std::size_t suffix_len = enclitic ? enclitic_len : 0;
      if (prefix_len + suffix_len >= w.size()) continue;
      const std::u32string_view stem = std::u32string_view(w).substr(
          prefix_len, w.size() - prefix_len - suffix_len);
      const bool is_protected =
          (kept > 0 || enclitic) &&
          (particles().contains(std::u32string(stem)) ||
           lexicon.is_bare_stem(stem));
      const std::size_t min_len = (article && !enclitic) ? 2 : 3;
      const bool whole = kept == 0 && !enclitic;
      if (!whole && !is_protected && stem.size() < min_len) continue;
      const Candidate c{kept, enclitic, is_protected, article};
      if (!best || better(c, *best)) best = c;
    }
  }

  std::vector<Span> spans(chain.begin(), chain.begin() + best->prefixes);
  std::size_t used = 0;
  for (const Span& s : spans) used += s.length;
  const std::size_t suffix_len = best->enclitic ? enclitic_len : 0;
  spans.push_back({w.size() - used - suffix_len, SegmentKind::kStem});
  if (best->enclitic) {
    spans.push_back({suffix_len, SegmentKind::kEncliticPronoun});
  }
  return spans;
}

}  // namespace

bool is_particle(std::u32string_view letters) {
  return particles().contains(std::u32string(letters));
}

std::vector<Token> tokenize(std::string_view text) {
  const std::u32string scalars = utf8::decode(text);
  const std::u32string_view view(scalars);
  std::vector<Token> tokens;
  std::optional<std::size_t> start;
  std::size_t end = 0;
  TokenKind kind = TokenKind::kOther;

  auto flush = [&] {
    if (start) {
      tokens.push_back(
          {utf8::encode(view.substr(*start, end - *start)), *start, end, kind});
      start.reset();
    }
  };

  for (std::size_t i = 0; i < scalars.size(); ++i) {
    const CharClass cls = script::classify(scalars[i]);
    if (cls == CharClass::kArabicMark) {
      if (start) end = i + 1;
      continue;
    }
    const auto k = token_kind_for(cls);
    if (!k) {
      flush();
      continue;
    }
    if (!start || kind != *k) {
      flush();
      start = i;
      kind = *k;
    }
    end = i + 1;
  }
  flush();
  return tokens;
}

Segmenter::Segmenter() : lexicon_(ExceptionLexicon::builtin()) {}

Segmenter::Segmenter(ExceptionLexicon lexicon) : lexicon_(std::move(lexicon)) {}

MorphemeBreakdown Segmenter::segment(const Token& token) const {
  MorphemeBreakdown out{token, {}, 0};
  if (token.kind != TokenKind::kArabicWord) {
    out.segments.push_back({token.surface, SegmentKind::kStem, true});
    out.token_count = 1;
    return out;
  }
  const auto clusters = clusters_of(utf8::decode(token.surface));
  std::u32string letters;
  for (const Cluster& c : clusters) letters.push_back(c.letter);
  out.segments = render(clusters, split_word(letters, lexicon_));
  out.token_count = static_cast<int>(std::count_if(
      out.segments.begin(), out.segments.end(),
      [](const Segment& s) { return s.counted; }));
  return out;
}

MorphemeCount Segmenter::count(std::string_view text) const {
  MorphemeCount out;
  for (const Token& t : tokenize(text)) {
    out.breakdowns.push_back(segment(t));
    out.total += out.breakdowns.back().token_count;
  }
  return out;
}

MorphemeBreakdown segment_token(const Token& token) {
  static const Segmenter segmenter;
  return segmenter.segment(token);
}

MorphemeCount count_morphemes(std::string_view text) {
  static const Segmenter segmenter;
  return segmenter.count(text);
}

}  // namespace balagha
