#include <cmath>

#include "doctest.h"
#include "hmmtag/error.h"
#include "hmmtag/eval.h"
#include "hmmtag/fixtures.h"
#include "hmmtag/model.h"

using namespace hmmtag;

namespace {

HmmModel ToyModel(int order, ModelOptions options = {}, bool eos = false) {
  TagSet ts;
  Corpus corpus = ParseTaggedCorpus(fixtures::kToyCorpus, ts);
  TrainConfig config;
  config.order = order;
  config.model_eos = eos;
  config.options = options;
  return Train(corpus, ts, config);
}

ModelOptions AddK(double k, UnknownPolicy unknown = UnknownPolicy::kFail) {
  ModelOptions o;
  o.smoothing.kind = SmoothingKind::kAddK;
  o.smoothing.k = k;
  o.unknown = unknown;
  return o;
}

ErrorCode CodeOf(auto &&fn) {
  try {
    fn();
  } catch (const Error &e) {
    return e.code();
  }
  return ErrorCode::kInvalidArgument;
}

}  // namespace

TEST_CASE("train reproduces hand counts through lookups") {
  HmmModel m = ToyModel(3);
  TagId D = *m.tagset().Find("D"), N = *m.tagset().Find("N");
  CHECK(m.order() == 3);
  CHECK(m.TransitionLookup({kStartTag, kStartTag}, D) == 1.0);
  CHECK(m.TransitionLookup({kStartTag, D}, N) == 1.0);
  CHECK(m.TransitionLookup({D, N}, D) == 0.0);
  CHECK(m.EmissionLookup("a", D) == 1.0);
  CHECK(m.EmissionLookup("b", N) == 0.5);

  HmmModel m2 = ToyModel(2);
  CHECK(m2.TransitionLookup({D}, N) == 1.0);
  CHECK(m2.TransitionLookup({N}, D) == 0.0);
  CHECK(CodeOf([&] { m2.TransitionLookup({D, N}, N); }) == ErrorCode::kArityMismatch);
}

TEST_CASE("empty corpus is rejected") {
  TagSet ts;
  CHECK(CodeOf([&] { Train(Corpus{}, ts); }) == ErrorCode::kEmptyCorpus);
}

TEST_CASE("add-k arithmetic") {
  HmmModel m = ToyModel(2, AddK(1.0, UnknownPolicy::kUniform));
  TagId D = *m.tagset().Find("D"), N = *m.tagset().Find("N");
  CHECK(m.TransitionOutcomes() == 2);
  // (0 + 1) / (0 + 1 * 2)
  CHECK(m.TransitionLookup({N}, D) == 0.5);
  // (2 + 1) / (2 + 2)
  CHECK(m.TransitionLookup({D}, N) == 0.75);
  // emissions use |V| = 3: (1 + 1) / (2 + 3)
  CHECK(m.EmissionLookup("b", N) == doctest::Approx(0.4));
  // the known word stays known, but "z" is now OOV and takes 1/|V|
  CHECK(m.EmissionLookup("z", N) == doctest::Approx(1.0 / 3));
  CHECK(m.EmissionLookup("z", N) > 0.0);
  CHECK(m.TransitionLookup({N}, kStartTag) == 0.0);
  CHECK(m.TransitionLookup({N}, kEndTag) == 0.0);
}

TEST_CASE("smoothing scope flags") {
  ModelOptions o = AddK(1.0);
  o.smoothing.emissions = false;
  HmmModel m = ToyModel(2, o);
  TagId D = *m.tagset().Find("D"), N = *m.tagset().Find("N");
  CHECK(m.TransitionLookup({N}, D) == 0.5);
  CHECK(m.EmissionLookup("b", N) == 0.5);
  o.smoothing.emissions = true;
  o.smoothing.transitions = false;
  HmmModel m2 = m.WithOptions(o);
  CHECK(m2.TransitionLookup({N}, D) == 0.0);
  CHECK(m2.EmissionLookup("b", N) == doctest::Approx(0.4));
}

TEST_CASE("add-k needs a positive k") {
  CHECK_THROWS_AS(ToyModel(2, AddK(0.0)), Error);
  CHECK_THROWS_AS(ToyModel(2, AddK(-1.0)), Error);
}

TEST_CASE("unknown-word policies") {
  TagSet ts;
  ts.Add("N", true);
  ts.Add("P", false);
  Corpus corpus = ParseTaggedCorpus("a_N b_P\nc_N\n", ts);
  TrainConfig config;
  config.order = 2;
  HmmModel fail = Train(corpus, ts, config);
  CHECK(CodeOf([&] { fail.EmissionLookup("zzz", 0); }) == ErrorCode::kUnknownWord);
  CHECK(fail.UnknownWordTags().empty());

  HmmModel uniform = fail.WithOptions({{}, UnknownPolicy::kUniform});
  CHECK(uniform.EmissionLookup("zzz", 0) == doctest::Approx(1.0 / 3));
  CHECK(uniform.EmissionLookup("zzz", 1) == doctest::Approx(1.0 / 3));
  CHECK(uniform.UnknownWordTags() == std::vector<TagId>{0, 1});

  HmmModel open = fail.WithOptions({{}, UnknownPolicy::kOpenClass});
  CHECK(open.EmissionLookup("zzz", 0) > 0.0);
  CHECK(open.EmissionLookup("zzz", 1) == 0.0);
  CHECK(open.UnknownWordTags() == std::vector<TagId>{0});
}

TEST_CASE("policy names") {
  CHECK(ParseUnknownPolicy("open-class") == UnknownPolicy::kOpenClass);
  CHECK(ParseUnknownPolicy("open_class") == UnknownPolicy::kOpenClass);
  CHECK(ParseSmoothingKind("add-k") == SmoothingKind::kAddK);
  CHECK_THROWS_AS(ParseSmoothingKind("kneser-ney"), Error);
  CHECK_THROWS_AS(ParseUnknownPolicy("guess"), Error);
  CHECK(UnknownPolicyName(UnknownPolicy::kOpenClass) == "open-class");
}

TEST_CASE("property: smoothed rows are normalized") {
  for (uint64_t seed = 1; seed <= 25; ++seed) {
    for (int order : {2, 3}) {
      for (bool eos : {false, true}) {
        TagSet ts;
        SplitMix64 rng(seed);
        std::string text;
        for (int s = 0; s < 8; ++s) {
          size_t len = 1 + rng.Next() % 5;
          for (size_t i = 0; i < len; ++i) {
            text += "w" + std::to_string(rng.Next() % 5) + "_T" +
                    std::to_string(rng.Next() % 3) + " ";
          }
          text += "\n";
        }
        Corpus corpus = ParseTaggedCorpus(text, ts);
        TrainConfig config{order, eos, AddK(0.1 + static_cast<double>(seed % 4))};
        HmmModel m = Train(corpus, ts, config);
        std::vector<TagId> outcomes = m.tags();
        if (eos) outcomes.push_back(kEndTag);
        for (const auto &[ctx, total] : m.counts().Contexts(static_cast<size_t>(order - 1))) {
          double sum = 0.0;
          for (TagId t : outcomes) sum += m.TransitionLookup(ctx, t);
          CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
        }
        // an unseen context is uniform over the outcomes
        TagTuple unseen = TagTuple::Starts(static_cast<size_t>(order - 1)).Shift(999);
        double sum = 0.0;
        for (TagId t : outcomes) sum += m.TransitionLookup(unseen, t);
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
        for (TagId t : m.tags()) {
          double esum = 0.0;
          for (const auto &w : m.counts().vocabulary()) esum += m.EmissionLookup(w, t);
          CHECK(esum == doctest::Approx(1.0).epsilon(1e-9));
        }
      }
    }
  }
}

TEST_CASE("property: add-k lies between the raw estimate and uniform") {
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    HmmModel raw = fixtures::RandomModel(seed, 3, 5, 2);
    HmmModel tiny = raw.WithOptions(AddK(1e-9));
    HmmModel one = raw.WithOptions(AddK(1.0));
    double uniform_t = 1.0 / static_cast<double>(raw.TransitionOutcomes());
    double uniform_e = 1.0 / static_cast<double>(raw.VocabularySize());
    for (const auto &[ng, count] : raw.counts().Ngrams(2)) {
      TagTuple ctx = ng.Context();
      double r = raw.TransitionLookup(ctx, ng.back());
      CHECK(tiny.TransitionLookup(ctx, ng.back()) == doctest::Approx(r).epsilon(1e-6));
      double s = one.TransitionLookup(ctx, ng.back());
      if (std::abs(r - uniform_t) > 1e-12) {
        CHECK(s > std::min(r, uniform_t));
        CHECK(s < std::max(r, uniform_t));
      }
    }
    for (const auto &[key, count] : raw.counts().emissions()) {
      double r = raw.EmissionLookup(key.second, key.first);
      CHECK(tiny.EmissionLookup(key.second, key.first) == doctest::Approx(r).epsilon(1e-6));
      double s = one.EmissionLookup(key.second, key.first);
      if (std::abs(r - uniform_e) > 1e-12) {
        CHECK(s > std::min(r, uniform_e));
        CHECK(s < std::max(r, uniform_e));
      }
    }
  }
}

TEST_CASE("model construction checks the tag set covers the counts") {
  CountsTable counts(2);
  counts.AddNgram({kStartTag, 3});
  counts.AddEmission(3, "x");
  TagSet ts;
  ts.Add("A", true);
  CHECK_THROWS_AS(HmmModel(counts, ts), Error);
}
