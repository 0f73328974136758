// eval.h --- accuracy, confusion matrices and k-fold cross-validation.

#ifndef HMMTAG_EVAL_H_
#define HMMTAG_EVAL_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hmmtag/corpus.h"
#include "hmmtag/decoder.h"
#include "hmmtag/model.h"

namespace hmmtag {

// Tags are carried as symbols so pair sets from different tag sets (or
// transcribed by hand) compare directly.
struct TagPair {
  std::string actual;
  std::string predicted;
  std::string surface;
};

struct PairSet {
  std::vector<TagPair> pairs;

  size_t size() const { return pairs.size(); }
  bool empty() const { return pairs.empty(); }
  void Add(std::string actual, std::string predicted, std::string surface = {});
  size_t Correct() const;
};

class ConfusionMatrix {
 public:
  // Labels in order of first appearance, actual before predicted.
  const std::vector<std::string> &labels() const { return labels_; }
  uint64_t at(std::string_view actual, std::string_view predicted) const;
  uint64_t cell(size_t row, size_t col) const { return cells_[row][col]; }
  uint64_t Trace() const;
  uint64_t Total() const;
  uint64_t RowSum(size_t row) const;
  uint64_t ColSum(size_t col) const;
  std::optional<size_t> IndexOf(std::string_view label) const;

  void Add(const std::string &actual, const std::string &predicted,
           uint64_t count = 1);

 private:
  size_t Intern(const std::string &label);

  std::vector<std::string> labels_;
  std::vector<std::vector<uint64_t>> cells_;
};

struct TagStats {
  uint64_t correct = 0;
  uint64_t actual_total = 0;
  uint64_t predicted_total = 0;
};

struct EvalReport {
  double accuracy_pct = 0.0;
  uint64_t correct = 0;
  uint64_t total = 0;
  ConfusionMatrix matrix;
  // Keyed by label, iterated in matrix label order by the renderers.
  std::map<std::string, TagStats> per_tag;

  // Known = surface in the training vocabulary.
  bool has_vocabulary_split = false;
  uint64_t known_correct = 0;
  uint64_t known_total = 0;
  uint64_t unknown_correct = 0;
  // Unknown tokens among evaluated pairs.
  uint64_t unknown_total = 0;
  // Unknown tokens in the whole test set, skipped sentences included.
  uint64_t unknown_word_count = 0;

  uint64_t skipped_sentences = 0;
  uint64_t skipped_tokens = 0;
  std::vector<std::string> failures;

  std::optional<double> KnownWordAccuracyPct() const;
  std::optional<double> UnknownWordAccuracyPct() const;
};

// Throws kEmptyPairSet.
double Accuracy(const PairSet &ps);
ConfusionMatrix BuildConfusionMatrix(const PairSet &ps);
// Accuracy, matrix and per-tag counts; vocabulary split left empty.
EvalReport ReportFromPairs(const PairSet &ps);

enum class FailurePolicy { kSkip, kAbort };

struct EvalOptions {
  // Drop pairs whose gold tag is a punctuation pseudo-tag.
  bool exclude_punctuation = true;
  FailurePolicy on_failure = FailurePolicy::kSkip;
  DecodeOptions decode;
};

// `tagset` is the tag set the test corpus was parsed with; it must extend
// the model's tag set (same ids for shared tags). Throws kEmptyCorpus;
// under kAbort rethrows the decode error.
EvalReport Evaluate(const HmmModel &model, const Corpus &test,
                    const TagSet &tagset, const EvalOptions &options = {});

// Deterministic 64-bit generator used for fold shuffles.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}
  uint64_t Next();

 private:
  uint64_t state_;
};

struct CvReport {
  int k = 0;
  uint64_t seed = 0;
  // fold_of[i] = test fold of corpus sentence i.
  std::vector<int> fold_of;
  std::vector<std::vector<size_t>> folds;
  std::vector<EvalReport> fold_reports;
  // Pooled over every fold's pairs.
  EvalReport aggregate;
  double macro_accuracy_pct = 0.0;
};

// Shuffled sentence indices split into k folds whose sizes differ by at
// most one. Throws kTooFewSentences, kInvalidArgument (k < 2).
std::vector<std::vector<size_t>> AssignFolds(size_t sentence_count, int k,
                                             uint64_t seed);

CvReport CrossValidate(const Corpus &corpus, const TagSet &tagset, int k,
                       uint64_t seed, const TrainConfig &config,
                       const EvalOptions &options = {});

}  // namespace hmmtag

#endif  // HMMTAG_EVAL_H_
