// fixtures.h --- bundled test data and random-model generators.

#ifndef HMMTAG_FIXTURES_H_
#define HMMTAG_FIXTURES_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hmmtag/corpus.h"
#include "hmmtag/eval.h"
#include "hmmtag/model.h"

namespace hmmtag::fixtures {

// Published Sinhala test output (data/fixtures/reference_test_data.txt).
struct ReferenceSentence {
  int number = 0;
  std::vector<std::pair<std::string, std::string>> predicted;  // surface, tag
  std::vector<std::pair<std::string, std::string>> actual;
};

std::string_view ReferenceText();
std::vector<ReferenceSentence> ReferenceSentences();
// Labels of the published confusion matrix, in its row order.
std::vector<std::string> ReferenceLabels();

// The 22 scored (actual, predicted) pairs, in sentence order: punctuation
// dropped and only tokens whose actual tag is a published matrix label.
PairSet ReferencePairs();
// All 24 non-punctuation pairs.
PairSet ReferenceAllPairs();

// Hand-countable toy corpus:
//   a_D b_N
//   a_D c_N
// order 2 bigrams (<s>,D)=2 (D,N)=2; emissions (D,a)=2 (N,b)=1 (N,c)=1.
inline constexpr std::string_view kToyCorpus = "a_D b_N\na_D c_N\n";

// Every surface carries exactly one tag, so a model trained on it
// reproduces it.
inline constexpr std::string_view kDeterministicCorpus =
    "a_D b_N ._.\n"
    "a_D c_N ._.\n"
    "the_D dog_N runs_V ._.\n"
    "a_D dog_N sleeps_V !_.\n"
    "the_D b_N runs_V ._.\n";

// Explicit order-2 model with P(D|<s>)=0.6, P(N|<s>)=0.4, P(x|D)=0.5,
// P(x|N)=1.0 (counts: (<s>,D)=3, (<s>,N)=2; D emits x,y once each; N
// emits x twice).
HmmModel ExplicitModel();

// Deterministic pseudo-random counts in 1..20 for every context and tag
// and for a random subset of (tag, word) pairs; every word has at least one
// tag and every tag emits at least one word. Tags are T0.., words w0...
// Requires 2 <= n_tags <= 5, 2 <= n_words <= 8; throws kInvalidArgument.
HmmModel RandomModel(uint64_t seed, int n_tags, int n_words, int order = 2,
                     ModelOptions options = {});

// Sentence of `length` words drawn from the model's vocabulary.
Sentence RandomSentence(uint64_t seed, const HmmModel &model, size_t length);

}  // namespace hmmtag::fixtures

#endif  // HMMTAG_FIXTURES_H_
