// The embedded literary-device catalogue, in proforma order.

#include <cctype>
#include <stdexcept>
#include <vector>

#include "balagha/errors.hpp"
#include "balagha/taxonomy.hpp"

namespace balagha::detail {

extern const char kTaxonomyVersion[] = "1.0.0";

namespace {

struct Row {
  const char* code;
  const char* name_en;
  const char* name_ar;
  const char* note;  // nullptr when the standard scale applies unqualified
  const char* definition;
};

constexpr const char* kFigurativeNote =
    "Figurative speech on one lexical item is scored once across the B "
    "devices; a non-figurative device on the same item scores separately.";

// Arabic names are stored as printed in the source catalogue. A-2 and A-4
// have no legible Arabic heading there; the conventional terms are used and
// remain unverified.
constexpr Row kRows[] = {
    // Domain A: Word Order and Sentence Structure
    {"A-1", "Reporting vs informing sentences",
     "ظهر جملة خبرية في مكان مقتضى لجملة إنشائية وعكسه", nullptr,
     "A reporting (factual) sentence is used where an informing sentence such "
     "as a question or command is expected, or the reverse, to produce a "
     "rhetorical effect."},
    {"A-2", "Affirmation", "التوكيد",
     "No mark for an affirmatory device per se; award only when the level of "
     "affirmation departs from what the addressee's stance calls for.",
     "Affirmatory constructions (inna, oath letters, qad, emphatic suffixes "
     "and similar) are used at a level of emphasis that deviates from the "
     "addressee's neutral, doubtful or denying stance."},
    {"A-3", "The Imperative", "الأمر",
     "No mark when the imperative merely issues a command.",
     "An imperative form is used for a purpose other than commanding, such as "
     "advice, supplication, challenge, threat, sarcasm or permission."},
    {"A-4", "Prohibition", "النهي",
     "No mark when the prohibitive merely prohibits.",
     "The prohibitive (la with the jussive) is used for a purpose other than "
     "prohibition, such as supplication, threat, sarcasm, guidance or rebuke."},
    {"A-5", "The Interrogative", "الاستفهام",
     "No mark when the interrogative merely asks a question.",
     "An interrogative particle is used for a purpose other than asking, such "
     "as commanding, prohibiting, rebuking, warning or expressing "
     "astonishment."},
    {"A-6", "Wish", "التمنى",
     "No mark for wish particles in their expected usage.",
     "Particles of wishing for possible outcomes (la'alla, 'asa) and for "
     "impossible outcomes (layta, law, hal) are swapped or otherwise used "
     "unexpectedly for effect."},
    {"A-7", "The Vocative", "النداء",
     "No mark for vocative particles in their expected usage.",
     "Vocative particles are used in ways other than simply calling an "
     "addressee, to achieve a rhetorical effect."},
    {"A-8", "Definiteness & Indefiniteness", "التعريف والتنكير", nullptr,
     "Definite or indefinite forms (pronouns, demonstratives, relatives, "
     "al-) are used where the other is expected, or in unexpected ways, for "
     "example to glorify, belittle or conceal."},
    {"A-9", "Brevity, Verbosity & Moderation", "الإيجاز والإطناب والمساواة",
     nullptr,
     "The length of a lexical item is deliberately succinct, expansive or "
     "balanced to suit the context and the communicative need."},
    {"A-10", "Foregrounding & Backgrounding", "التقديم والتأخير", nullptr,
     "Lexical items are moved toward the start of a sentence for emphasis or "
     "toward its end for suspense or de-emphasis (anastrophe)."},
    {"A-11", "Ellipsis", "الذكر والحذف", nullptr,
     "Lexical items are omitted for succinctness, emotion, suspense, rhyme or "
     "because the addressee already knows them."},
    {"A-12", "Exophora", "الإضمار مقام الإظهار", nullptr,
     "A pronoun is used without an antecedent because context or shared "
     "knowledge supplies its referent."},
    {"A-13", "Use of Noun in Place of Pronoun", "الإظهار مقام الإضمار",
     nullptr,
     "A name is repeated where a pronoun would be expected, emphasising and "
     "highlighting it."},
    {"A-14", "Appropriate Style & Register", "استخدام الأسلوب المناسب",
     "Scale: 0 inappropriate, 1 somewhat appropriate, 2 totally appropriate "
     "style and register.",
     "The style and register suit the subject matter and the intended "
     "audience."},

    // Domain B: Figures of Speech
    {"B-1", "Simile", "التشبيه", kFigurativeNote,
     "One thing is compared with another sharing a common attribute, through "
     "a simile particle, verb or noun; elements may be omitted (single, "
     "compound, effective, implicit and other similes)."},
    {"B-2", "Metaphor", "الاستعارة", kFigurativeNote,
     "Derived from the effective simile by omitting either the likened-to or "
     "the likened; includes explicit, implicit, enhanced, naked, absolute and "
     "proverbial metaphor."},
    {"B-3", "Allegory", "المجاز", kFigurativeNote,
     "A word is used in a different but closely related sense, either "
     "cognitively (a non-literal subject) or linguistically through "
     "part-whole, place, cause, time and similar relationships."},
    {"B-4", "Metonymy / Implicit Reference", "الكناية", kFigurativeNote,
     "A descriptive phrase alluding to intrinsic characteristics replaces the "
     "real name while remaining literally possible."},
    {"B-5", "Hinting", "التعريض", kFigurativeNote,
     "The intended meaning is suggested indirectly through an aphorism, "
     "proverb, riddle or innuendo rather than stated."},
    {"B-6", "Pun / Paronomasia / Double-Entendre", "التورية", kFigurativeNote,
     "An expression with more than one valid interpretation is used to "
     "create a joking, ironic or mocking effect."},

    // Domain C, Part A: Word Choice
    {"CA-1", "Meaningful Proper Nouns", "التوجيه", nullptr,
     "Names of people or places are chosen for their meaning or for the "
     "multiple interpretations they admit."},
    {"CA-2", "Oxymoron", "الاراداف الخلفي / اجتماع لفظتين متناقضتين", nullptr,
     "Two antonyms are placed side by side."},
    {"CA-3", "Amphibology", "الإبهام", nullptr,
     "A word or phrase is used ambiguously so that two opposite meanings can "
     "be understood."},
    {"CA-4", "Onomatopoeia", "المحاكاة الصوتية", nullptr,
     "The pronunciation of a word mimics the sound it denotes."},
    {"CA-5", "Litotes", "الإثبات بالنفي", nullptr,
     "A quality is affirmed by negating its antonym."},
    {"CA-6", "Alliteration", "المجانسة الاستهلاكية", nullptr,
     "A succession of words begins with the same letter."},
    {"CA-7", "Palindrome", "القلب / ما لا يستحيل بالانعكاس", nullptr,
     "A lexical item reads the same forwards and backwards."},
    {"CA-8", "Equivocation", "المواربة", nullptr,
     "A word whose meaning changes through a small change in the word "
     "itself is used deliberately."},
    {"CA-9", "Adornment", "التدبيج", nullptr,
     "Contrasting colours such as black and white are mentioned together."},
    {"CA-10", "Metabole", "التكرار بعبارات مختلفة", nullptr,
     "A lexical item is modified by two or more descriptors."},
    {"CA-11", "Zeugma", "العبارة الجامعة", nullptr,
     "One word governs two others, literally for one and figuratively for the "
     "other."},
    {"CA-12", "Al-Istikhdām", "الاستخدام", nullptr,
     "A pronoun apparently refers back to something mentioned, but a related "
     "different sense of it is intended."},
    {"CA-13", "Epizeuxis", "التكرار التوكيدي / التوكيد اللفظي", nullptr,
     "The same word or expression is repeated for affirmation."},
    {"CA-14", "Epistrophe", "تكرار النهاية", nullptr,
     "The same word or expression is repeated at the end of sentences for "
     "affirmation."},

    // Part B: Addressing Groups
    {"CB-1", "Congeries", "مراجعة النظير", nullptr,
     "Discrete related items are gathered together to amplify the effect."},
    {"CB-2", "Collectiveness", "الجمع", nullptr,
     "Several things are combined and given one collective verdict."},
    {"CB-3", "Al-Taqsīm", "التقسيم", nullptr,
     "All members of a group are enumerated, or each is mentioned with "
     "something specific to it."},
    {"CB-4", "Differentiation of Similar Items", "التفريق", nullptr,
     "Two things that might be mistaken for the same are explicitly "
     "distinguished."},
    {"CB-5", "Epanodos", "الطبي والنشر / اللف والنشر", nullptr,
     "Several items are listed, then information about each follows and the "
     "addressee matches them without explicit pairing."},

    // Part C: Sentence Construction
    {"CC-1", "Antithesis / Antonymy", "الطباق / المقابلة",
     "Award 1 or 2 marks per antonym pair (three pairs score 3 or 6); record "
     "one annotation per pair.",
     "Words or phrases with opposite meanings appear together, either as "
     "direct opposites or as a word and its negation."},
    {"CC-2", "Chiasmus / Antimetabole", "المقابلة العكسية", nullptr,
     "The word order of the first part of a two-part phrase is reversed in "
     "the second part."},
    {"CC-3", "Al-Jinās", "الجناس / التجنيس", nullptr,
     "Two words sound similar but differ in meaning; complete jinas uses "
     "identical words, incomplete jinas differs in one aspect."},
    {"CC-4", "Tail-Head", "رد العجز على الصدر / التصدير", nullptr,
     "The first and last words of a sentence are the same or morphologically "
     "related."},
    {"CC-5", "Head-Tail", "رد الصدر على العجز", nullptr,
     "The last word of one sentence and the first word of the next are the "
     "same or morphologically related."},
    {"CC-6", "Similarities of the Start & Finish", "تشابه الأطراف", nullptr,
     "The end of a sentence echoes the meaning of the start of the next, "
     "bridging the two."},
    {"CC-7", "Parallelism", "الموازنة / مقابلة اللفظ باللفظ", nullptr,
     "The lexical structure of a sentence is repeated over two or more "
     "sentences to create assonance and rhyme."},

    // Part D: Musicality
    {"CD-1", "Assonance", "السجع", nullptr,
     "The final words of two sentences agree in their vowel endings; graded "
     "by how much of the morphology also agrees."},
    {"CD-2", "Homeoptoton", "الترصيع / المرادف", nullptr,
     "The ends of the two hemistichs of a line agree in metre, voweling and "
     "rhyme."},
    {"CD-3", "Concordance of the Pronunciation & Meaning",
     "ائتلاف اللفظ والمعنى", nullptr,
     "The sound of the words matches their meaning, soft sounds for a "
     "delicate tone and harsh sounds for a harsh one."},
    {"CD-4", "Concordance of Pronunciations", "ائتلاف اللفظ مع اللفظ", nullptr,
     "Strange or unexpected words are brought together for effect."},
    {"CD-5", "Al-Tashrīḥ", "التشريع", nullptr,
     "A poem keeps its rhyme or metre even when some words are omitted."},
    {"CD-6", "Proportioning", "الازدواج", nullptr,
     "A passage is divided into sentences of equal length and metre."},
    {"CD-7", "Excellence of Division", "حسن التقسيم", nullptr,
     "Each line of a poem is divided into two equal hemistichs."},

    // Part E: Strengthening the Argument
    {"CE-1", "Integration of Imagery", "الإدماج", nullptr,
     "Imagery implies the existence of something without mentioning it."},
    {"CE-2", "Stacked-up Descriptions", "الاستتبع", nullptr,
     "Two or more related statements of praise or criticism are linked to "
     "intensify the effect."},
    {"CE-3", "Incorporation of Proverbs", "إرسال المثل / الكلام الجامع",
     nullptr,
     "A proverb, parable or well-known saying is worked in to strengthen the "
     "argument."},
    {"CE-4", "Abstraction", "التجريد", nullptr,
     "The text side-tracks to something that epitomises the quality of the "
     "original proposition."},
    {"CE-5", "Quotation", "الاقتباس", nullptr,
     "A well-known text such as a poem, saying or verse is incorporated into "
     "the new text."},
    {"CE-6", "Hinting at the Source", "التلميح", nullptr,
     "A quotation is accompanied by a clue to its source."},
    {"CE-7", "Euphemism", "التهوين", nullptr,
     "Something unpleasant or embarrassing is referred to implicitly."},
    {"CE-8", "Rhetorical Shift", "الالتفات", nullptr,
     "The text shifts between persons, tenses, verb forms or sentence types "
     "to keep the addressee engaged."},
    {"CE-9", "Epitrope", "التسليم الخطابي", nullptr,
     "The opponent's argument is apparently conceded and then countered."},
    {"CE-10", "Evasive Response", "أسلوب الحكيم", nullptr,
     "A question is answered evasively or ambiguously."},
    {"CE-11", "Feigned Ignorance", "تجاهل العارف", nullptr,
     "The communicator pretends not to know something, to express amazement, "
     "praise, reproach or familiarity."},
    {"CE-12", "Observation", "الإرصاد / التسهيم", nullptr,
     "Early hints let the addressee predict what will be said."},
    {"CE-13", "Apostrophe", "مخاطبة غير العاقل",
     "Scale labels: 1 present in a basic way, 2 significantly adds value.",
     "A non-human object is addressed directly as if it were human."},
    {"CE-14", "Personification", "تشخيص، تجسيد",
     "Scale labels: 1 present in a basic way, 2 significantly adds value.",
     "Non-human objects are referred to as if they were human."},
    {"CE-15", "Hyperbole", "المبالغة", nullptr,
     "A proposition is exaggerated, graded from normally possible to "
     "conceptually impossible."},
    {"CE-16", "Beauty of Rationale / Conceit", "حسن التعليل", nullptr,
     "The obvious cause of an event is denied and a fanciful cause that "
     "serves the communicator's purpose is proposed."},
    {"CE-17", "Asteism / Affirmed Praise", "تأكيد المدح بما يُشبه الذم",
     nullptr,
     "Praise is followed by an apparent exception that in fact affirms the "
     "praise."},
    {"CE-18", "Affirmed Dispraise", "تأكيد الذم بما يُشبه المدح", nullptr,
     "Criticism is followed by an apparent exception that in fact affirms the "
     "criticism."},
    {"CE-19", "Al-Mughāyra", "المغايرة", nullptr,
     "Praise is followed by criticism of the same thing, or the reverse."},
    {"CE-20", "Tapinosis", "التحقير", nullptr,
     "Something is belittled by terms suggesting it is less important than "
     "it is."},
    {"CE-21", "Sarcasm", "الاستهزاء", nullptr,
     "Criticism or refutation is delivered by mentioning something positive "
     "that is understood as negative."},
    {"CE-22", "Scholastic Approach", "المذهب الكلامي", nullptr,
     "Reasoning, logic or evidence is used to convince the addressee or to "
     "refute opposing views."},

    // Part F: Paragraph Construction
    {"CF-1", "Multi-Genre", "الافتنان", nullptr,
     "Two or more literary arts such as eulogy, satire or condolence are "
     "combined in one piece."},
    {"CF-2", "Pleasantness of the Opening", "حسن الابداء", nullptr,
     "The text opens in a pleasant and agreeable way."},
    {"CF-3", "Exordium / Finesse of Initiation", "براعة الاستهلال", nullptr,
     "The opening hints at the main objective and makes the addressee eager "
     "for the main proposition."},
    {"CF-4", "Digression / Excursus", "الاستطراد", nullptr,
     "The text leaves its topic for a contrasting one and then returns to "
     "complete the original."},
    {"CF-5", "Change of Topic", "حسن التخلص", nullptr,
     "The transition from the introduction to the main point is smooth and "
     "subtle."},
    {"CF-6", "Finesse of Requesting", "براعة الطلب", nullptr,
     "A desire or need is conveyed without an explicit request."},
    {"CF-7", "Pleasantness of the Ending", "حسن الانتهاء", nullptr,
     "The text concludes in a lexically pleasing way."},
    {"CF-8", "Finesse of the Ending", "براعة المقطع", nullptr,
     "The conclusion links back to and summarises the objective of the text."},

    // Part G: Miscellaneous
    {"CG-1", "Negative elements in the text", "الأساليب السلبية",
     "Deduct one mark for each occurrence of a negative element.",
     "Inkhorn transliterations, catachresis, grammatical or morphological "
     "errors, phonetic incongruity and unfamiliar usage detract from the "
     "text."},
};

std::string slug_for(const std::string& code) {
  std::string slug;
  for (char c : code) {
    slug.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return slug;
}

}  // namespace

std::vector<Device> embedded_devices() {
  std::vector<Device> out;
  out.reserve(std::size(kRows));
  for (const Row& row : kRows) {
    const auto code = DeviceCode::parse(row.code);
    if (!code) {
      throw InternalDataCorrupt(std::string("malformed device code ") +
                                row.code);
    }
    const bool deduction = code->domain() == Domain::kC &&
                           code->part() == Part::kG;
    out.push_back(Device{
        *code,
        row.name_en,
        row.name_ar,
        code->domain(),
        code->part(),
        deduction ? std::set<int>{0, -1} : std::set<int>{0, 1, 2},
        row.note ? std::optional<std::string>(row.note) : std::nullopt,
        row.definition,
        slug_for(row.code),
    });
  }
  return out;
}

}  // namespace balagha::detail
