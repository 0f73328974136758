#include <cmath>

#include "doctest.h"
#include "hmmtag/decoder.h"
#include "hmmtag/error.h"
#include "hmmtag/fixtures.h"

using namespace hmmtag;

namespace {

Sentence S(std::initializer_list<const char *> words) {
  Sentence s;
  for (const char *w : words) s.tokens.emplace_back(w);
  return s;
}

HmmModel TheDog() {
  TagSet ts;
  Corpus corpus = ParseTaggedCorpus("the_D dog_N\n", ts);
  return Train(corpus, ts, {2, false, {}});
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

TEST_CASE("single admissible path") {
  HmmModel m = TheDog();
  TagPath p = Decode(m, S({"the", "dog"}));
  CHECK(p.tags == std::vector<TagId>{0, 1});
  CHECK(p.log_prob == 0.0);
  CHECK(SequenceLogProb(m, S({"the", "dog"}), {0, 1}) == 0.0);
  CHECK(BruteForceDecode(m, S({"the", "dog"}), m.tags()).tags == p.tags);
}

TEST_CASE("explicit model picks the larger product") {
  HmmModel m = fixtures::ExplicitModel();
  TagId N = *m.tagset().Find("N");
  CHECK(m.TransitionLookup({kStartTag}, 0) == doctest::Approx(0.6));
  TagPath p = Decode(m, S({"x"}));
  CHECK(p.tags == std::vector<TagId>{N});
  CHECK(p.log_prob == doctest::Approx(std::log(0.4)).epsilon(1e-12));
  CHECK(SequenceLogProb(m, S({"x"}), {N}) == doctest::Approx(std::log(0.4)));
  CHECK(SequenceLogProb(m, S({"x"}), {0}) == doctest::Approx(std::log(0.3)));
  TagPath b = BruteForceDecode(m, S({"x"}), m.tags());
  CHECK(b.tags == p.tags);
  CHECK(b.log_prob == doctest::Approx(p.log_prob).epsilon(1e-12));
}

TEST_CASE("errors") {
  HmmModel m = fixtures::ExplicitModel();
  CHECK(CodeOf([&] { Decode(m, S({"x", "zzz"})); }) == ErrorCode::kUnknownWord);
  CHECK(CodeOf([&] { SequenceLogProb(m, S({"zzz"}), {0}); }) == ErrorCode::kUnknownWord);
  CHECK(CodeOf([&] { SequenceLogProb(m, S({"x"}), {0, 1}); }) == ErrorCode::kLengthMismatch);
  CHECK(CodeOf([&] { Decode(m, Sentence{}); }) == ErrorCode::kInvalidArgument);

  // x followed by y: "<s> D/N" are seen, but nothing follows D or N.
  CHECK(CodeOf([&] { Decode(m, S({"x", "y"})); }) == ErrorCode::kNoPath);
  CHECK(CodeOf([&] { BruteForceDecode(m, S({"x", "y"}), m.tags()); }) == ErrorCode::kNoPath);
  CHECK(SequenceLogProb(m, S({"x", "y"}), {0, 0}) == kNegInf);

  HmmModel three = fixtures::RandomModel(1, 3, 4);
  Sentence long14 = fixtures::RandomSentence(1, three, 14);
  CHECK(CodeOf([&] { BruteForceDecode(three, long14, three.tags()); }) ==
        ErrorCode::kSearchSpaceTooLarge);
  // 3^12 = 531441 is inside the guard
  CHECK_NOTHROW(BruteForceDecode(three, fixtures::RandomSentence(2, three, 12), three.tags()));
}

TEST_CASE("smoothing opens a path that was dead") {
  ModelOptions o;
  o.smoothing.kind = SmoothingKind::kAddK;
  HmmModel m = fixtures::ExplicitModel().WithOptions(o);
  TagPath p = Decode(m, S({"x", "y"}));
  // y only seen with D
  CHECK(p.tags.back() == 0);
  CHECK(std::isfinite(p.log_prob));
}

TEST_CASE("unknown-word policies in decoding") {
  TagSet ts;
  ts.Add("N", true);
  ts.Add("P", false);
  Corpus corpus = ParseTaggedCorpus("a_N b_P\nb_P a_N\nb_P b_P\nb_P b_P\n", ts);
  HmmModel fail = Train(corpus, ts, {2, false, {}});
  CHECK(CodeOf([&] { Decode(fail, S({"b", "zzz"})); }) == ErrorCode::kUnknownWord);
  HmmModel open = fail.WithOptions({{}, UnknownPolicy::kOpenClass});
  TagPath p = Decode(open, S({"b", "zzz"}));
  CHECK(p.tags == std::vector<TagId>{1, 0});
  HmmModel uniform = fail.WithOptions({{}, UnknownPolicy::kUniform});
  TagPath u = Decode(uniform, S({"b", "zzz"}));
  CHECK(u.tags.size() == 2);
  // P -> P is twice as frequent as P -> N here
  CHECK(u.tags[1] == 1);
}

TEST_CASE("lattice shape") {
  HmmModel m = fixtures::RandomModel(3, 3, 4, 3);
  Sentence s = fixtures::RandomSentence(9, m, 4);
  Lattice lat = BuildLattice(m, s);
  REQUIRE(lat.columns.size() == 5);
  REQUIRE(lat.columns[0].size() == 1);
  CHECK(lat.columns[0][0].state == TagTuple::Starts(2));
  CHECK(lat.columns[0][0].log_prob == 0.0);
  for (size_t c = 1; c < lat.columns.size(); ++c) {
    for (size_t i = 0; i < lat.columns[c].size(); ++i) {
      const auto &cell = lat.columns[c][i];
      if (i) CHECK(lat.columns[c][i - 1].state < cell.state);
      if (cell.log_prob == kNegInf) continue;
      REQUIRE(cell.back >= 0);
      const auto &prev = lat.columns[c - 1][static_cast<size_t>(cell.back)];
      CHECK(prev.log_prob != kNegInf);
      CHECK(prev.state.Shift(cell.state.back()) == cell.state);
    }
  }
}

TEST_CASE("exact ties go to the smaller tag tuple") {
  // Two tags with identical rows: every path through them ties.
  TagSet ts;
  ts.Add("A", true);
  ts.Add("B", true);
  for (int order : {2, 3}) {
    CountsTable counts(order);
    std::vector<TagTuple> ctx;
    if (order == 2) {
      ctx = {{kStartTag}, {0}, {1}};
    } else {
      ctx = {{kStartTag, kStartTag}, {kStartTag, 0}, {kStartTag, 1},
             {0, 0}, {0, 1}, {1, 0}, {1, 1}};
    }
    for (const auto &c : ctx) {
      counts.AddNgram(c.Append(0), 1);
      counts.AddNgram(c.Append(1), 1);
    }
    counts.AddEmission(0, "x", 1);
    counts.AddEmission(1, "x", 1);
    HmmModel m(counts, ts);
    for (size_t n = 1; n <= 5; ++n) {
      Sentence s;
      s.tokens.assign(n, "x");
      TagPath v = Decode(m, s);
      TagPath b = BruteForceDecode(m, s, {1, 0});
      CHECK(v.tags == std::vector<TagId>(n, 0));
      CHECK(b.tags == v.tags);
    }
  }
}

TEST_CASE("property: decode agrees with exhaustive search") {
  int cases = 0;
  for (uint64_t seed = 1; seed <= 120; ++seed) {
    int order = seed % 2 ? 2 : 3;
    int n_tags = 2 + static_cast<int>(seed % 4);
    ModelOptions o;
    if (seed % 5 == 0) {
      o.smoothing.kind = SmoothingKind::kAddK;
      o.smoothing.k = 0.5;
      o.smoothing.emissions = false;
    }
    HmmModel m = fixtures::RandomModel(seed, n_tags, 2 + static_cast<int>(seed % 7), order, o);
    Sentence s = fixtures::RandomSentence(seed * 31, m, 1 + seed % 6);
    TagPath v = Decode(m, s);
    TagPath b = BruteForceDecode(m, s, m.tags());
    CHECK(v.tags == b.tags);
    CHECK(v.log_prob == doctest::Approx(b.log_prob).epsilon(1e-9));
    CHECK(std::abs(SequenceLogProb(m, s, v.tags) - v.log_prob) < 1e-12);
    ++cases;
  }
  CHECK(cases == 120);
}

TEST_CASE("property: decode is optimal, deterministic and shift invariant") {
  for (uint64_t seed = 1; seed <= 40; ++seed) {
    HmmModel m = fixtures::RandomModel(seed, 3, 5, seed % 2 ? 2 : 3);
    Sentence s = fixtures::RandomSentence(seed, m, 1 + seed % 5);
    TagPath v = Decode(m, s);
    CHECK(Decode(m, s).tags == v.tags);

    // optimality certificate over every sequence
    std::vector<TagId> tags(s.size(), 0);
    for (;;) {
      CHECK(v.log_prob >= SequenceLogProb(m, s, tags) - 1e-12);
      size_t i = tags.size();
      while (i-- > 0) {
        if (++tags[i] < 3) break;
        tags[i] = 0;
      }
      if (i == static_cast<size_t>(-1)) break;
    }

    DecodeOptions shifted;
    shifted.emission_log_offset = -2.5;
    TagPath w = Decode(m, s, shifted);
    CHECK(w.tags == v.tags);
    CHECK(w.log_prob == doctest::Approx(v.log_prob - 2.5 * static_cast<double>(s.size())));
  }
}

TEST_CASE("end-of-sentence transition changes the objective") {
  // Without </s>, "x" alone prefers A; with it, A can never end a sentence.
  TagSet ts;
  Corpus corpus = ParseTaggedCorpus("x_A y_B\nx_A y_B\nx_B\n", ts);
  HmmModel plain = Train(corpus, ts, {2, false, {}});
  HmmModel eos = Train(corpus, ts, {2, true, {}});
  Sentence s = S({"x"});
  CHECK(Decode(plain, s).tags == std::vector<TagId>{0});
  CHECK(Decode(eos, s).tags == std::vector<TagId>{1});
  CHECK(BruteForceDecode(eos, s, eos.tags()).tags == Decode(eos, s).tags);
  CHECK(SequenceLogProb(eos, s, {1}) == doctest::Approx(Decode(eos, s).log_prob));
}

TEST_CASE("open emissions widen candidates under emission smoothing") {
  TagSet ts;
  Corpus corpus = ParseTaggedCorpus("a_A b_B\nb_B b_B\nb_B b_B\n", ts);
  ModelOptions o;
  o.smoothing.kind = SmoothingKind::kAddK;
  HmmModel m = Train(corpus, ts, {2, false, o});
  DecodeOptions wide;
  wide.open_emissions = true;
  Sentence s = S({"a", "b"});
  TagPath narrow = Decode(m, s);
  TagPath open = Decode(m, s, wide);
  TagPath oracle = BruteForceDecode(m, s, m.tags());
  CHECK(open.tags == oracle.tags);
  CHECK(open.log_prob >= narrow.log_prob - 1e-12);
}
