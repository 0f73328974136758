// corpus.cc --- lexical parser and tokenizer.

#include "hmmtag/corpus.h"

#include <sstream>
#include <unordered_set>

#include "strings.h"

namespace hmmtag {

namespace {

std::string FormatDiagnostics(const std::vector<CorpusDiagnostic> &diags) {
  std::ostringstream os;
  os << "malformed corpus (" << diags.size() << " error"
     << (diags.size() == 1 ? "" : "s") << ")";
  if (!diags.empty()) {
    const auto &d = diags.front();
    os << ": line " << d.line << " token " << d.token << ": " << d.message;
  }
  return os.str();
}

constexpr std::string_view kTerminators[] = {".", "!", "?", "\xd8\x9f"};

bool IsTerminator(std::string_view token) {
  for (auto t : kTerminators) {
    if (t == token) return true;
  }
  return false;
}

}  // namespace

Sentence TaggedSentence::Words() const {
  Sentence s;
  s.tokens.reserve(items.size());
  for (const auto &item : items) s.tokens.push_back(item.surface);
  return s;
}

std::vector<TagId> TaggedSentence::Tags() const {
  std::vector<TagId> tags;
  tags.reserve(items.size());
  for (const auto &item : items) tags.push_back(item.tag);
  return tags;
}

CorpusStats Corpus::Stats() const {
  CorpusStats stats;
  std::unordered_set<std::string_view> vocab;
  stats.sentence_count = sentences.size();
  for (const auto &s : sentences) {
    stats.token_count += s.size();
    for (const auto &item : s.items) vocab.insert(item.surface);
  }
  stats.vocabulary_size = vocab.size();
  return stats;
}

CorpusError::CorpusError(std::vector<CorpusDiagnostic> diagnostics)
    : Error(ErrorCode::kMalformedCorpus, FormatDiagnostics(diagnostics)),
      diagnostics_(std::move(diagnostics)) {}

TaggedToken ParseTaggedToken(std::string_view raw, TagSet &ts) {
  size_t sep = raw.rfind('_');
  if (sep == std::string_view::npos) {
    throw Error(ErrorCode::kNoSeparator,
                "no '_' separator in token '" + std::string(raw) + "'");
  }
  std::string_view surface = raw.substr(0, sep);
  std::string_view symbol = raw.substr(sep + 1);
  if (surface.empty() || symbol.empty()) {
    throw Error(ErrorCode::kMalformedToken,
                "empty surface or tag in token '" + std::string(raw) + "'");
  }
  for (char c : raw) {
    if (internal::IsSpace(c)) {
      throw Error(ErrorCode::kMalformedToken,
                  "whitespace inside token '" + std::string(raw) + "'");
    }
  }
  TaggedToken token;
  token.surface = std::string(surface);
  token.tag = ts.Resolve(symbol).index;
  return token;
}

Corpus ParseTaggedCorpus(std::istream &in, TagSet &ts,
                         const ParseOptions &options) {
  Corpus corpus;
  std::vector<CorpusDiagnostic> diags;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    internal::StripCarriageReturn(line);
    if (internal::IsBlank(line)) continue;
    auto pieces = internal::SplitWhitespace(line);
    if (pieces.front().front() == '#') continue;

    TaggedSentence sentence;
    sentence.items.reserve(pieces.size());
    bool ok = true;
    for (size_t i = 0; i < pieces.size(); ++i) {
      try {
        sentence.items.push_back(ParseTaggedToken(pieces[i], ts));
      } catch (const Error &e) {
        ok = false;
        diags.push_back({line_no, i + 1, e.code(), e.what()});
        if (options.policy == ErrorPolicy::kFailFast ||
            diags.size() >= options.max_errors) {
          throw CorpusError(std::move(diags));
        }
      }
    }
    if (ok) corpus.sentences.push_back(std::move(sentence));
  }
  if (in.bad()) throw Error(ErrorCode::kIoFailure, "read error on corpus");
  if (!diags.empty()) throw CorpusError(std::move(diags));
  return corpus;
}

Corpus ParseTaggedCorpus(std::string_view text, TagSet &ts,
                         const ParseOptions &options) {
  std::istringstream in{std::string(text)};
  return ParseTaggedCorpus(in, ts, options);
}

std::vector<Sentence> TokenizeRaw(std::string_view text) {
  std::vector<Sentence> out;
  Sentence current;
  for (auto piece : internal::SplitWhitespace(text)) {
    current.tokens.emplace_back(piece);
    if (IsTerminator(piece)) {
      out.push_back(std::move(current));
      current = Sentence{};
    }
  }
  if (!current.empty()) out.push_back(std::move(current));
  return out;
}

std::string RenderTagged(const Sentence &sentence,
                         const std::vector<TagId> &tags, const TagSet &ts) {
  std::string out;
  for (size_t i = 0; i < sentence.size(); ++i) {
    if (i) out += ' ';
    out += sentence.tokens[i];
    out += '_';
    out += ts.Symbol(tags.at(i));
  }
  return out;
}

std::string RenderTagged(const TaggedSentence &sentence, const TagSet &ts) {
  return RenderTagged(sentence.Words(), sentence.Tags(), ts);
}

}  // namespace hmmtag
