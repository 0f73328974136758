// corpus.h --- tagged-corpus parsing and raw-text tokenization.
//
// Tagged corpora hold one sentence per line; each whitespace-separated
// token is `surface_TAG`, split at the last underscore.

#ifndef HMMTAG_CORPUS_H_
#define HMMTAG_CORPUS_H_

#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "hmmtag/error.h"
#include "hmmtag/tagset.h"

namespace hmmtag {

struct TaggedToken {
  std::string surface;
  TagId tag = 0;

  bool operator==(const TaggedToken &) const = default;
};

struct Sentence {
  std::vector<std::string> tokens;

  size_t size() const { return tokens.size(); }
  bool empty() const { return tokens.empty(); }
  bool operator==(const Sentence &) const = default;
};

struct TaggedSentence {
  std::vector<TaggedToken> items;

  size_t size() const { return items.size(); }
  Sentence Words() const;
  std::vector<TagId> Tags() const;
  bool operator==(const TaggedSentence &) const = default;
};

struct CorpusStats {
  size_t sentence_count = 0;
  size_t token_count = 0;
  size_t vocabulary_size = 0;

  bool operator==(const CorpusStats &) const = default;
};

struct Corpus {
  std::vector<TaggedSentence> sentences;

  CorpusStats Stats() const;
  bool empty() const { return sentences.empty(); }
};

// One problem found while parsing a corpus. `line` is 1-based; `token` is
// the 1-based token index within the line.
struct CorpusDiagnostic {
  size_t line = 0;
  size_t token = 0;
  ErrorCode code = ErrorCode::kMalformedToken;
  std::string message;
};

class CorpusError : public Error {
 public:
  explicit CorpusError(std::vector<CorpusDiagnostic> diagnostics);

  const std::vector<CorpusDiagnostic> &diagnostics() const {
    return diagnostics_;
  }

 private:
  std::vector<CorpusDiagnostic> diagnostics_;
};

enum class ErrorPolicy { kFailFast, kCollect };

struct ParseOptions {
  ErrorPolicy policy = ErrorPolicy::kCollect;
  // Collection stops (and the parse aborts) once this many errors are seen.
  size_t max_errors = 100;
};

// Throws kNoSeparator, kMalformedToken, kMalformedTag or kUnknownTag.
TaggedToken ParseTaggedToken(std::string_view raw, TagSet &ts);

// Throws CorpusError (code kMalformedCorpus) carrying every diagnostic.
Corpus ParseTaggedCorpus(std::istream &in, TagSet &ts,
                         const ParseOptions &options = {});
Corpus ParseTaggedCorpus(std::string_view text, TagSet &ts,
                         const ParseOptions &options = {});

// Splits raw text into sentences ending at ".", "!", "?" or "؟" tokens.
// The terminator stays in its sentence.
std::vector<Sentence> TokenizeRaw(std::string_view text);

// `surface_TAG` tokens joined by single spaces.
std::string RenderTagged(const TaggedSentence &sentence, const TagSet &ts);
std::string RenderTagged(const Sentence &sentence,
                         const std::vector<TagId> &tags, const TagSet &ts);

}  // namespace hmmtag

#endif  // HMMTAG_CORPUS_H_
