// decoder.h --- log-space Viterbi decoding and path scoring.

#ifndef HMMTAG_DECODER_H_
#define HMMTAG_DECODER_H_

#include <cstdint>
#include <limits>
#include <vector>

#include "hmmtag/corpus.h"
#include "hmmtag/counts.h"
#include "hmmtag/model.h"

namespace hmmtag {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();
// Scores closer than this are ties, resolved toward the smaller tag tuple.
inline constexpr double kTieEpsilon = 1e-12;

struct TagPath {
  std::vector<TagId> tags;
  double log_prob = kNegInf;
};

struct DecodeOptions {
  // Under emission smoothing, consider every tag for a known word instead
  // of only the tags it was seen with.
  bool open_emissions = false;
  // Added to every log emission score. Shifts path scores uniformly.
  double emission_log_offset = 0.0;
};

// One Viterbi column: states are the last order-1 tags of a partial path.
struct LatticeCell {
  TagTuple state;
  double log_prob = kNegInf;
  // Index into the previous column; -1 in column 0.
  int64_t back = -1;
};

struct Lattice {
  // columns[0] holds the all-start state with log_prob 0.
  std::vector<std::vector<LatticeCell>> columns;
};

// Fills the lattice for `sentence`. Throws kUnknownWord under the fail
// policy and kInvalidArgument for an empty sentence.
Lattice BuildLattice(const HmmModel &model, const Sentence &sentence,
                     const DecodeOptions &options = {});

// Best tag path; throws kUnknownWord or kNoPath.
TagPath Decode(const HmmModel &model, const Sentence &sentence,
               const DecodeOptions &options = {});

// Sum of log transition and log emission terms with start padding, plus
// the end transition when the model has one. -inf if any factor is 0.
// Throws kLengthMismatch, kUnknownWord.
double SequenceLogProb(const HmmModel &model, const Sentence &sentence,
                       const std::vector<TagId> &tags);

// Exhaustive search over tag_pool^n with the same tie-break as Decode.
// Throws kSearchSpaceTooLarge when the space exceeds kBruteForceLimit,
// kNoPath when every sequence scores -inf.
inline constexpr uint64_t kBruteForceLimit = 1000000;
TagPath BruteForceDecode(const HmmModel &model, const Sentence &sentence,
                         const std::vector<TagId> &tag_pool);

}  // namespace hmmtag

#endif  // HMMTAG_DECODER_H_
