// tagset.cc --- tag registry and the default Sinhala tag set.

#include "hmmtag/tagset.h"

#include <sstream>

#include "hmmtag/error.h"
#include "strings.h"

namespace hmmtag {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnknownTag: return "UnknownTag";
    case ErrorCode::kMalformedTag: return "MalformedTag";
    case ErrorCode::kNoSeparator: return "NoSeparator";
    case ErrorCode::kMalformedToken: return "MalformedToken";
    case ErrorCode::kMalformedCorpus: return "MalformedCorpus";
    case ErrorCode::kEmptyCorpus: return "EmptyCorpus";
    case ErrorCode::kArityMismatch: return "ArityMismatch";
    case ErrorCode::kUnknownWord: return "UnknownWord";
    case ErrorCode::kNoPath: return "NoPath";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kSearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorCode::kUnsupportedVersion: return "UnsupportedVersion";
    case ErrorCode::kCorruptModel: return "CorruptModel";
    case ErrorCode::kIoFailure: return "IoFailure";
    case ErrorCode::kEmptyPairSet: return "EmptyPairSet";
    case ErrorCode::kTooFewSentences: return "TooFewSentences";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

constexpr std::string_view kPseudoSymbols[] = {".", ",", "!", "?"};

struct TagRow {
  const char *symbol;
  const char *description;
  bool open_class;
};

// Pronouns, determiners, particles, postpositions and conjunctions are the
// closed classes; everything else accepts new members.
constexpr TagRow kSinhalaTags[] = {
    {"NNR", "Common Noun Root", true},
    {"NNM", "Common Noun Masculine", true},
    {"NNF", "Common Noun Feminine", true},
    {"NNN", "Common Noun Neuter", true},
    {"NNPA", "Proper Noun Animate", true},
    {"NNPI", "Proper Noun Inanimate", true},
    {"PRPM", "Pronoun Masculine", false},
    {"PRPF", "Pronoun Feminine", false},
    {"PRPN", "Pronoun Neuter", false},
    {"PRPC", "Pronoun Common", false},
    {"QFNUM", "Number Quantifier", true},
    {"DET", "Determiner", false},
    {"JJ", "Adjective", true},
    {"RB", "Adverb", true},
    {"RP", "Particle", false},
    {"VFM", "Verb Finite Main", true},
    {"VNF", "Verb Non Finite", true},
    {"VP", "Verb Participle", true},
    {"VNN", "Verbal Non Finite Noun", true},
    {"POST", "Postpositions", false},
    {"CC", "Conjunctions", false},
    {"NVB", "Noun in Kriya Mula", true},
    {"JVB", "Adjective in Kriya Mula", true},
    {"UH", "Interjection", true},
    {"FRW", "Foreign Word", true},
    {"SYM", "Not Classified", true},
};

}  // namespace

bool TagSet::IsPseudoSymbol(std::string_view symbol) {
  for (auto p : kPseudoSymbols) {
    if (p == symbol) return true;
  }
  return false;
}

bool TagSet::IsReservedSymbol(std::string_view symbol) {
  return symbol == kStartSymbol || symbol == kEndSymbol;
}

bool TagSet::IsValidSymbol(std::string_view symbol) {
  if (symbol.empty()) return false;
  for (char c : symbol) {
    if (c == '_' || internal::IsSpace(c)) return false;
  }
  return true;
}

const Tag &TagSet::Add(std::string_view symbol, bool open_class,
                       std::string_view description) {
  if (!IsValidSymbol(symbol) || IsReservedSymbol(symbol)) {
    throw Error(ErrorCode::kMalformedTag,
                "malformed tag symbol '" + std::string(symbol) + "'");
  }
  if (index_.count(std::string(symbol))) {
    throw Error(ErrorCode::kInvalidArgument,
                "duplicate tag symbol '" + std::string(symbol) + "'");
  }
  Tag tag;
  tag.symbol = std::string(symbol);
  tag.description = std::string(description);
  tag.pseudo = IsPseudoSymbol(symbol);
  tag.open_class = tag.pseudo ? false : open_class;
  tag.index = static_cast<TagId>(tags_.size());
  index_.emplace(tag.symbol, tag.index);
  tags_.push_back(std::move(tag));
  return tags_.back();
}

const Tag &TagSet::Resolve(std::string_view symbol) {
  if (!IsValidSymbol(symbol) || IsReservedSymbol(symbol)) {
    throw Error(ErrorCode::kMalformedTag,
                "malformed tag symbol '" + std::string(symbol) + "'");
  }
  if (auto id = Find(symbol)) return tags_[static_cast<size_t>(*id)];
  if (mode_ == TagSetMode::kStrict) {
    throw Error(ErrorCode::kUnknownTag,
                "unknown tag '" + std::string(symbol) + "'");
  }
  return Add(symbol, true);
}

std::optional<TagId> TagSet::Find(std::string_view symbol) const {
  auto it = index_.find(std::string(symbol));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::string_view TagSet::Symbol(TagId id) const {
  if (id == kStartTag) return kStartSymbol;
  if (id == kEndTag) return kEndSymbol;
  return at(id).symbol;
}

TagSet TagSet::FromStream(std::istream &in, TagSetMode mode) {
  TagSet ts(TagSetMode::kOpen);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    internal::StripCarriageReturn(line);
    if (internal::IsBlank(line) || line[0] == '#') continue;
    auto fields = internal::Split(line, '\t');
    if (fields.size() < 2 || (fields[1] != "open" && fields[1] != "closed")) {
      throw Error(ErrorCode::kMalformedTag,
                  "tag-set line " + std::to_string(line_no) +
                      ": expected SYMBOL<TAB>open|closed<TAB>description");
    }
    std::string_view desc = fields.size() > 2 ? fields[2] : std::string_view{};
    ts.Add(fields[0], fields[1] == "open", desc);
  }
  for (auto p : kPseudoSymbols) {
    if (!ts.Find(p)) ts.Add(p, false);
  }
  ts.set_mode(mode);
  return ts;
}

TagSet DefaultSinhalaTagSet() {
  TagSet ts(TagSetMode::kOpen);
  for (const auto &row : kSinhalaTags) {
    ts.Add(row.symbol, row.open_class, row.description);
  }
  for (auto p : kPseudoSymbols) ts.Add(p, false, "punctuation");
  return ts;
}

}  // namespace hmmtag
