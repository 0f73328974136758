// eval.cc --- evaluation harness.

#include "hmmtag/eval.h"

#include <algorithm>
#include <numeric>

#include "hmmtag/error.h"

namespace hmmtag {

namespace {

double Percent(uint64_t correct, uint64_t total) {
  return 100.0 * static_cast<double>(correct) / static_cast<double>(total);
}

// Known/unknown and skip counters, summed across folds.
void AddSideCounts(EvalReport &into, const EvalReport &from) {
  into.has_vocabulary_split = into.has_vocabulary_split || from.has_vocabulary_split;
  into.known_correct += from.known_correct;
  into.known_total += from.known_total;
  into.unknown_correct += from.unknown_correct;
  into.unknown_total += from.unknown_total;
  into.unknown_word_count += from.unknown_word_count;
  into.skipped_sentences += from.skipped_sentences;
  into.skipped_tokens += from.skipped_tokens;
  into.failures.insert(into.failures.end(), from.failures.begin(),
                       from.failures.end());
}

EvalReport EvaluatePairs(const HmmModel &model, const Corpus &test,
                         const TagSet &tagset, const EvalOptions &options,
                         PairSet &pairs) {
  if (test.empty()) {
    throw Error(ErrorCode::kEmptyCorpus, "test corpus is empty");
  }
  EvalReport side;
  side.has_vocabulary_split = true;
  for (size_t s = 0; s < test.sentences.size(); ++s) {
    const TaggedSentence &gold = test.sentences[s];
    std::vector<bool> included(gold.size());
    uint64_t included_count = 0;
    for (size_t i = 0; i < gold.size(); ++i) {
      included[i] = !(options.exclude_punctuation && tagset.IsPseudo(gold.items[i].tag));
      if (!included[i]) continue;
      ++included_count;
      if (!model.IsKnown(gold.items[i].surface)) ++side.unknown_word_count;
    }

    TagPath path;
    try {
      path = Decode(model, gold.Words(), options.decode);
    } catch (const Error &e) {
      if (options.on_failure == FailurePolicy::kAbort) throw;
      if (e.code() != ErrorCode::kUnknownWord && e.code() != ErrorCode::kNoPath) {
        throw;
      }
      ++side.skipped_sentences;
      side.skipped_tokens += included_count;
      side.failures.push_back("sentence " + std::to_string(s + 1) + ": " +
                              e.what());
      continue;
    }

    for (size_t i = 0; i < gold.size(); ++i) {
      if (!included[i]) continue;
      const auto &item = gold.items[i];
      std::string actual(tagset.Symbol(item.tag));
      std::string predicted(model.tagset().Symbol(path.tags[i]));
      bool hit = item.tag == path.tags[i];
      if (model.IsKnown(item.surface)) {
        ++side.known_total;
        side.known_correct += hit;
      } else {
        ++side.unknown_total;
        side.unknown_correct += hit;
      }
      pairs.Add(std::move(actual), std::move(predicted), item.surface);
    }
  }
  return side;
}

EvalReport Combine(const PairSet &pairs, const EvalReport &side) {
  EvalReport report;
  if (!pairs.empty()) report = ReportFromPairs(pairs);
  AddSideCounts(report, side);
  return report;
}

}  // namespace

void PairSet::Add(std::string actual, std::string predicted,
                  std::string surface) {
  pairs.push_back({std::move(actual), std::move(predicted), std::move(surface)});
}

size_t PairSet::Correct() const {
  return static_cast<size_t>(std::count_if(
      pairs.begin(), pairs.end(),
      [](const TagPair &p) { return p.actual == p.predicted; }));
}

size_t ConfusionMatrix::Intern(const std::string &label) {
  if (auto idx = IndexOf(label)) return *idx;
  labels_.push_back(label);
  for (auto &row : cells_) row.push_back(0);
  cells_.emplace_back(labels_.size(), 0);
  return labels_.size() - 1;
}

void ConfusionMatrix::Add(const std::string &actual,
                          const std::string &predicted, uint64_t count) {
  size_t row = Intern(actual);
  size_t col = Intern(predicted);
  cells_[row][col] += count;
}

std::optional<size_t> ConfusionMatrix::IndexOf(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<size_t>(it - labels_.begin());
}

uint64_t ConfusionMatrix::at(std::string_view actual,
                             std::string_view predicted) const {
  auto row = IndexOf(actual);
  auto col = IndexOf(predicted);
  if (!row || !col) return 0;
  return cells_[*row][*col];
}

uint64_t ConfusionMatrix::Trace() const {
  uint64_t sum = 0;
  for (size_t i = 0; i < labels_.size(); ++i) sum += cells_[i][i];
  return sum;
}

uint64_t ConfusionMatrix::Total() const {
  uint64_t sum = 0;
  for (size_t i = 0; i < labels_.size(); ++i) sum += RowSum(i);
  return sum;
}

uint64_t ConfusionMatrix::RowSum(size_t row) const {
  return std::accumulate(cells_[row].begin(), cells_[row].end(), uint64_t{0});
}

uint64_t ConfusionMatrix::ColSum(size_t col) const {
  uint64_t sum = 0;
  for (const auto &row : cells_) sum += row[col];
  return sum;
}

double Accuracy(const PairSet &ps) {
  if (ps.empty()) {
    throw Error(ErrorCode::kEmptyPairSet, "accuracy of an empty pair set");
  }
  return Percent(ps.Correct(), ps.size());
}

ConfusionMatrix BuildConfusionMatrix(const PairSet &ps) {
  if (ps.empty()) {
    throw Error(ErrorCode::kEmptyPairSet,
                "confusion matrix of an empty pair set");
  }
  ConfusionMatrix m;
  for (const auto &p : ps.pairs) m.Add(p.actual, p.predicted);
  return m;
}

EvalReport ReportFromPairs(const PairSet &ps) {
  EvalReport report;
  report.matrix = BuildConfusionMatrix(ps);
  report.correct = report.matrix.Trace();
  report.total = report.matrix.Total();
  report.accuracy_pct = Percent(report.correct, report.total);
  const auto &labels = report.matrix.labels();
  for (size_t i = 0; i < labels.size(); ++i) {
    report.per_tag[labels[i]] = {report.matrix.cell(i, i),
                                 report.matrix.RowSum(i),
                                 report.matrix.ColSum(i)};
  }
  return report;
}

std::optional<double> EvalReport::KnownWordAccuracyPct() const {
  if (!has_vocabulary_split || known_total == 0) return std::nullopt;
  return Percent(known_correct, known_total);
}

std::optional<double> EvalReport::UnknownWordAccuracyPct() const {
  if (!has_vocabulary_split || unknown_total == 0) return std::nullopt;
  return Percent(unknown_correct, unknown_total);
}

EvalReport Evaluate(const HmmModel &model, const Corpus &test,
                    const TagSet &tagset, const EvalOptions &options) {
  PairSet pairs;
  EvalReport side = EvaluatePairs(model, test, tagset, options, pairs);
  return Combine(pairs, side);
}

uint64_t SplitMix64::Next() {
  uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::vector<std::vector<size_t>> AssignFolds(size_t sentence_count, int k,
                                             uint64_t seed) {
  if (k < 2) {
    throw Error(ErrorCode::kInvalidArgument, "cross-validation needs k >= 2");
  }
  const auto folds_n = static_cast<size_t>(k);
  if (sentence_count < folds_n) {
    throw Error(ErrorCode::kTooFewSentences,
                std::to_string(sentence_count) + " sentences cannot fill " +
                    std::to_string(k) + " folds");
  }
  std::vector<size_t> order(sentence_count);
  std::iota(order.begin(), order.end(), size_t{0});
  SplitMix64 rng(seed);
  for (size_t i = order.size(); i > 1; --i) {
    size_t j = static_cast<size_t>(rng.Next() % i);
    std::swap(order[i - 1], order[j]);
  }

  std::vector<std::vector<size_t>> folds(folds_n);
  size_t base = sentence_count / folds_n, extra = sentence_count % folds_n;
  size_t pos = 0;
  for (size_t f = 0; f < folds_n; ++f) {
    size_t len = base + (f < extra ? 1 : 0);
    folds[f].assign(order.begin() + static_cast<ptrdiff_t>(pos),
                    order.begin() + static_cast<ptrdiff_t>(pos + len));
    std::sort(folds[f].begin(), folds[f].end());
    pos += len;
  }
  return folds;
}

CvReport CrossValidate(const Corpus &corpus, const TagSet &tagset, int k,
                       uint64_t seed, const TrainConfig &config,
                       const EvalOptions &options) {
  CvReport cv;
  cv.k = k;
  cv.seed = seed;
  cv.folds = AssignFolds(corpus.sentences.size(), k, seed);
  cv.fold_of.assign(corpus.sentences.size(), -1);
  for (size_t f = 0; f < cv.folds.size(); ++f) {
    for (size_t idx : cv.folds[f]) cv.fold_of[idx] = static_cast<int>(f);
  }

  PairSet pooled;
  EvalReport pooled_side;
  double macro_sum = 0.0;
  for (size_t f = 0; f < cv.folds.size(); ++f) {
    Corpus train, test;
    for (size_t i = 0; i < corpus.sentences.size(); ++i) {
      (cv.fold_of[i] == static_cast<int>(f) ? test : train)
          .sentences.push_back(corpus.sentences[i]);
    }
    HmmModel model = Train(train, tagset, config);
    PairSet pairs;
    EvalReport side = EvaluatePairs(model, test, tagset, options, pairs);
    pooled.pairs.insert(pooled.pairs.end(), pairs.pairs.begin(),
                        pairs.pairs.end());
    AddSideCounts(pooled_side, side);
    cv.fold_reports.push_back(Combine(pairs, side));
    macro_sum += cv.fold_reports.back().accuracy_pct;
  }
  cv.aggregate = Combine(pooled, pooled_side);
  cv.macro_accuracy_pct = macro_sum / static_cast<double>(cv.folds.size());
  return cv;
}

}  // namespace hmmtag
