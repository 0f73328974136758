// model.h --- the queryable tagging model.
//
// An HmmModel owns raw counts plus the lookup-time configuration
// (smoothing and unknown-word policy), so the same counts can be queried
// under different settings without retraining.

#ifndef HMMTAG_MODEL_H_
#define HMMTAG_MODEL_H_

#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "hmmtag/corpus.h"
#include "hmmtag/counts.h"
#include "hmmtag/tagset.h"

namespace hmmtag {

enum class SmoothingKind { kNone, kAddK };

struct SmoothingConfig {
  SmoothingKind kind = SmoothingKind::kNone;
  double k = 1.0;
  bool transitions = true;
  bool emissions = true;

  bool operator==(const SmoothingConfig &) const = default;
};

enum class UnknownPolicy { kFail, kUniform, kOpenClass };

std::string_view SmoothingKindName(SmoothingKind kind);
std::string_view UnknownPolicyName(UnknownPolicy policy);
// Accept "none"/"add-k" and "fail"/"uniform"/"open-class" ("add_k" and
// "open_class" too). Throw kInvalidArgument otherwise.
SmoothingKind ParseSmoothingKind(std::string_view name);
UnknownPolicy ParseUnknownPolicy(std::string_view name);

struct ModelOptions {
  SmoothingConfig smoothing;
  UnknownPolicy unknown = UnknownPolicy::kFail;

  bool operator==(const ModelOptions &) const = default;
};

struct TrainConfig {
  int order = 3;
  bool model_eos = false;
  ModelOptions options;
};

class HmmModel {
 public:
  static constexpr int kFormatVersion = 1;

  // Throws kInvalidArgument if the smoothing k is not positive or a tag in
  // the counts is missing from the tag set.
  HmmModel(CountsTable counts, TagSet tagset, ModelOptions options = {});

  int order() const { return counts_.order(); }
  const CountsTable &counts() const { return counts_; }
  const TagSet &tagset() const { return tagset_; }
  const ModelOptions &options() const { return options_; }
  int format_version() const { return kFormatVersion; }

  // Same counts under different lookup settings.
  HmmModel WithOptions(const ModelOptions &options) const;

  // Throws kArityMismatch unless context.size() == order() - 1.
  double TransitionLookup(const TagTuple &context, TagId tag) const;
  // Throws kUnknownWord for an out-of-vocabulary surface under kFail.
  double EmissionLookup(std::string_view surface, TagId tag) const;

  bool IsKnown(std::string_view surface) const {
    return counts_.InVocabulary(surface);
  }
  // Tags that can follow a context: every tag in the counts, plus "</s>"
  // when end-of-sentence transitions are modelled.
  size_t TransitionOutcomes() const;
  size_t VocabularySize() const { return counts_.vocabulary().size(); }
  // Non-boundary tags in the counts, ascending.
  const std::vector<TagId> &tags() const { return tags_; }

  // Tags with nonzero emission under the unknown-word policy.
  std::vector<TagId> UnknownWordTags() const;

 private:
  CountsTable counts_;
  TagSet tagset_;
  ModelOptions options_;
  std::vector<TagId> tags_;
};

// Throws kEmptyCorpus, kInvalidArgument.
HmmModel Train(const Corpus &corpus, const TagSet &tagset,
               const TrainConfig &config = {});

// Writes the versioned text format. Output is byte-deterministic.
// Throws kIoFailure.
void SaveModel(const HmmModel &model, std::ostream &out);
std::string SaveModelToString(const HmmModel &model);

// Throws kUnsupportedVersion or kCorruptModel.
HmmModel LoadModel(std::istream &in);
HmmModel LoadModelFromString(std::string_view text);

// 64-bit FNV-1a.
uint64_t Fnv1a64(std::string_view bytes);

}  // namespace hmmtag

#endif  // HMMTAG_MODEL_H_
