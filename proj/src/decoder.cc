// decoder.cc --- Viterbi lattice, backtrace and the exhaustive oracle.

#include "hmmtag/decoder.h"

#include <algorithm>
#include <cmath>
#include <map>

#include "hmmtag/error.h"

namespace hmmtag {

namespace {

double SafeLog(double p) { return p > 0.0 ? std::log(p) : kNegInf; }

std::vector<TagId> Candidates(const HmmModel &model, const std::string &word,
                              const DecodeOptions &options) {
  if (model.IsKnown(word)) {
    const auto &sm = model.options().smoothing;
    if (options.open_emissions && sm.kind != SmoothingKind::kNone &&
        sm.emissions) {
      return model.tags();
    }
    auto seen = model.counts().WordTags(word);
    return {seen.begin(), seen.end()};
  }
  if (model.options().unknown == UnknownPolicy::kFail) {
    throw Error(ErrorCode::kUnknownWord, "unknown word '" + word + "'");
  }
  return model.UnknownWordTags();
}

void RequireNonEmpty(const Sentence &sentence) {
  if (sentence.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "cannot decode an empty sentence");
  }
}

// Ordering key shared by Viterbi's tie-break and the oracle: the final
// state tuple, then the earlier tags from right to left.
std::vector<TagId> TieKey(const std::vector<TagId> &tags, int order) {
  size_t state_len = std::min(tags.size(), static_cast<size_t>(order - 1));
  std::vector<TagId> key(tags.end() - static_cast<ptrdiff_t>(state_len),
                         tags.end());
  for (size_t i = tags.size() - state_len; i-- > 0;) key.push_back(tags[i]);
  return key;
}

}  // namespace

Lattice BuildLattice(const HmmModel &model, const Sentence &sentence,
                     const DecodeOptions &options) {
  RequireNonEmpty(sentence);
  const size_t state_len = static_cast<size_t>(model.order() - 1);

  Lattice lattice;
  lattice.columns.reserve(sentence.size() + 1);
  lattice.columns.push_back({LatticeCell{TagTuple::Starts(state_len), 0.0, -1}});

  for (const auto &word : sentence.tokens) {
    const auto &prev = lattice.columns.back();
    std::vector<TagId> candidates = Candidates(model, word, options);
    std::vector<double> emit(candidates.size());
    for (size_t c = 0; c < candidates.size(); ++c) {
      emit[c] = SafeLog(model.EmissionLookup(word, candidates[c])) +
                options.emission_log_offset;
    }

    // Predecessors are visited in ascending state order, so on a tie the
    // incumbent already has the smaller predecessor tuple.
    std::map<TagTuple, LatticeCell> next;
    for (size_t j = 0; j < prev.size(); ++j) {
      const LatticeCell &from = prev[j];
      if (from.log_prob == kNegInf) continue;
      for (size_t c = 0; c < candidates.size(); ++c) {
        if (emit[c] == kNegInf) continue;
        double trans = SafeLog(model.TransitionLookup(from.state, candidates[c]));
        if (trans == kNegInf) continue;
        double score = from.log_prob + trans + emit[c];
        TagTuple state = from.state.Shift(candidates[c]);
        auto [it, inserted] = next.try_emplace(
            state, LatticeCell{state, score, static_cast<int64_t>(j)});
        if (!inserted && score > it->second.log_prob + kTieEpsilon) {
          it->second.log_prob = score;
          it->second.back = static_cast<int64_t>(j);
        }
      }
    }

    std::vector<LatticeCell> column;
    column.reserve(next.size());
    for (auto &[state, cell] : next) column.push_back(cell);
    lattice.columns.push_back(std::move(column));
  }
  return lattice;
}

TagPath Decode(const HmmModel &model, const Sentence &sentence,
               const DecodeOptions &options) {
  Lattice lattice = BuildLattice(model, sentence, options);
  const auto &last = lattice.columns.back();

  int64_t best = -1;
  double best_score = kNegInf;
  for (size_t j = 0; j < last.size(); ++j) {
    double score = last[j].log_prob;
    if (model.counts().model_eos() && score != kNegInf) {
      score += SafeLog(model.TransitionLookup(last[j].state, kEndTag));
    }
    if (score == kNegInf) continue;
    if (best < 0 || score > best_score + kTieEpsilon) {
      best = static_cast<int64_t>(j);
      best_score = score;
    }
  }
  if (best < 0) {
    throw Error(ErrorCode::kNoPath,
                "no tag sequence has nonzero probability (try smoothing)");
  }

  TagPath path;
  path.log_prob = best_score;
  path.tags.resize(sentence.size());
  int64_t cell = best;
  for (size_t col = sentence.size(); col > 0; --col) {
    const LatticeCell &c = lattice.columns[col][static_cast<size_t>(cell)];
    path.tags[col - 1] = c.state.back();
    cell = c.back;
  }
  return path;
}

double SequenceLogProb(const HmmModel &model, const Sentence &sentence,
                       const std::vector<TagId> &tags) {
  if (tags.size() != sentence.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "sentence has " + std::to_string(sentence.size()) +
                    " tokens but " + std::to_string(tags.size()) +
                    " tags were given");
  }
  TagTuple history = TagTuple::Starts(static_cast<size_t>(model.order() - 1));
  double total = 0.0;
  for (size_t i = 0; i < tags.size(); ++i) {
    // Emission first so an unknown word always raises.
    total += SafeLog(model.EmissionLookup(sentence.tokens[i], tags[i]));
    total += SafeLog(model.TransitionLookup(history, tags[i]));
    history = history.Shift(tags[i]);
  }
  if (model.counts().model_eos()) {
    total += SafeLog(model.TransitionLookup(history, kEndTag));
  }
  return total;
}

TagPath BruteForceDecode(const HmmModel &model, const Sentence &sentence,
                         const std::vector<TagId> &tag_pool) {
  RequireNonEmpty(sentence);
  uint64_t space = 1;
  for (size_t i = 0; i < sentence.size(); ++i) {
    space *= tag_pool.size();
    if (space > kBruteForceLimit) {
      throw Error(ErrorCode::kSearchSpaceTooLarge,
                  "search space " + std::to_string(tag_pool.size()) + "^" +
                      std::to_string(sentence.size()) + " exceeds 10^6");
    }
  }

  TagPath best;
  std::vector<TagId> best_key;
  std::vector<size_t> digits(sentence.size(), 0);
  std::vector<TagId> tags(sentence.size());
  for (uint64_t n = 0; n < space; ++n) {
    for (size_t i = 0; i < digits.size(); ++i) tags[i] = tag_pool[digits[i]];
    double score = SequenceLogProb(model, sentence, tags);
    if (score != kNegInf) {
      bool take = best.tags.empty() || score > best.log_prob + kTieEpsilon;
      std::vector<TagId> key;
      if (!take && score >= best.log_prob - kTieEpsilon) {
        key = TieKey(tags, model.order());
        take = key < best_key;
      }
      if (take) {
        best.tags = tags;
        best.log_prob = score;
        best_key = key.empty() ? TieKey(tags, model.order()) : std::move(key);
      }
    }
    for (size_t i = digits.size(); i-- > 0;) {
      if (++digits[i] < tag_pool.size()) break;
      digits[i] = 0;
    }
  }
  if (best.tags.empty()) {
    throw Error(ErrorCode::kNoPath, "no tag sequence has nonzero probability");
  }
  return best;
}

}  // namespace hmmtag
