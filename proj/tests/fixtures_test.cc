#include <cmath>

#include "doctest.h"
#include "hmmtag/error.h"
#include "hmmtag/fixtures.h"

using namespace hmmtag;

TEST_CASE("reference test data") {
  auto sentences = fixtures::ReferenceSentences();
  REQUIRE(!sentences.empty());
  for (const auto &s : sentences) {
    REQUIRE(s.predicted.size() == s.actual.size());
    for (size_t i = 0; i < s.actual.size(); ++i) {
      CHECK(s.predicted[i].first == s.actual[i].first);
    }
  }
  CHECK(fixtures::ReferenceLabels() ==
        std::vector<std::string>{"NNM", "NNN", "NNPI", "NVB", "JJ", "VFM", "VP"});

  PairSet ps = fixtures::ReferencePairs();
  REQUIRE(ps.size() == 22);
  CHECK(ps.pairs[0].actual == "NNM");
  CHECK(ps.pairs[0].predicted == "NNM");
  CHECK(ps.pairs[0].surface == "ලාංකිකයින්ට");
  size_t wrong = 0;
  for (const auto &p : ps.pairs) {
    if (p.actual == p.predicted) continue;
    ++wrong;
    CHECK(p.actual == "NNN");
    CHECK(p.predicted == "NVB");
  }
  CHECK(wrong == 2);

  PairSet all = fixtures::ReferenceAllPairs();
  CHECK(all.size() == 24);
  CHECK(all.Correct() == 22);
  CHECK(Accuracy(all) == doctest::Approx(91.6667).epsilon(1e-5));
}

TEST_CASE("toy fixtures parse") {
  TagSet ts;
  Corpus toy = ParseTaggedCorpus(fixtures::kToyCorpus, ts);
  CHECK(toy.Stats().sentence_count == 2);
  Corpus det = ParseTaggedCorpus(fixtures::kDeterministicCorpus, ts);
  CHECK(det.Stats().token_count == 18);
  HmmModel m = Train(det, ts, {2, false, {}});
  for (const auto &s : det.sentences) {
    for (const auto &t : s.items) {
      CHECK(m.counts().WordTags(t.surface).size() == 1);
    }
  }
}

TEST_CASE("random models are seed determined and normalized") {
  for (uint64_t seed = 1; seed <= 25; ++seed) {
    int order = seed % 2 ? 2 : 3;
    int n_tags = 2 + static_cast<int>(seed % 4);
    HmmModel a = fixtures::RandomModel(seed, n_tags, 2 + seed % 7, order);
    HmmModel b = fixtures::RandomModel(seed, n_tags, 2 + seed % 7, order);
    CHECK(SaveModelToString(a) == SaveModelToString(b));
    CHECK(a.tags().size() == static_cast<size_t>(n_tags));
    for (const auto &[ctx, total] : a.counts().Contexts(static_cast<size_t>(order - 1))) {
      double sum = 0;
      for (TagId t : a.tags()) sum += a.TransitionLookup(ctx, t);
      CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    }
    for (TagId t : a.tags()) {
      double sum = 0;
      for (const auto &w : a.counts().vocabulary()) sum += a.EmissionLookup(w, t);
      CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    }
    Sentence s = fixtures::RandomSentence(seed, a, 6);
    CHECK(s.size() == 6);
    for (const auto &w : s.tokens) CHECK(a.IsKnown(w));
  }
  CHECK(SaveModelToString(fixtures::RandomModel(1, 3, 4)) !=
        SaveModelToString(fixtures::RandomModel(2, 3, 4)));
  CHECK_THROWS_AS(fixtures::RandomModel(1, 1, 4), Error);
  CHECK_THROWS_AS(fixtures::RandomModel(1, 3, 9), Error);
}
