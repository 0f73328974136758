// fixtures.cc --- reference data parsing and random models.

#include "hmmtag/fixtures.h"

#include <algorithm>
#include <sstream>

#include "hmmtag/error.h"
#include "strings.h"

namespace hmmtag::fixtures {

namespace detail {
extern const char kReferenceText[];
}  // namespace detail

namespace {

std::vector<std::pair<std::string, std::string>> SplitTokens(
    const std::vector<std::string_view> &pieces) {
  std::vector<std::pair<std::string, std::string>> out;
  for (size_t i = 2; i < pieces.size(); ++i) {
    size_t sep = pieces[i].rfind('_');
    if (sep == std::string_view::npos) {
      throw Error(ErrorCode::kMalformedToken, "bad reference token");
    }
    out.emplace_back(pieces[i].substr(0, sep), pieces[i].substr(sep + 1));
  }
  return out;
}

PairSet CollectPairs(bool restrict_to_labels) {
  auto labels = ReferenceLabels();
  PairSet ps;
  for (const auto &s : ReferenceSentences()) {
    for (size_t i = 0; i < s.actual.size(); ++i) {
      const auto &[surface, actual] = s.actual[i];
      if (TagSet::IsPseudoSymbol(actual)) continue;
      if (restrict_to_labels &&
          std::find(labels.begin(), labels.end(), actual) == labels.end()) {
        continue;
      }
      ps.Add(actual, s.predicted[i].second, surface);
    }
  }
  return ps;
}

}  // namespace

std::string_view ReferenceText() { return detail::kReferenceText; }

std::vector<ReferenceSentence> ReferenceSentences() {
  std::vector<ReferenceSentence> out;
  std::istringstream in{std::string(ReferenceText())};
  std::string line;
  while (std::getline(in, line)) {
    auto pieces = internal::SplitWhitespace(line);
    if (pieces.empty() || pieces[0].front() == '#' || pieces[0] == "labels") {
      continue;
    }
    int number = std::stoi(std::string(pieces[0]));
    if (out.empty() || out.back().number != number) {
      out.push_back({number, {}, {}});
    }
    auto tokens = SplitTokens(pieces);
    (pieces[1] == "predicted" ? out.back().predicted : out.back().actual) =
        std::move(tokens);
  }
  for (const auto &s : out) {
    if (s.predicted.size() != s.actual.size()) {
      throw Error(ErrorCode::kMalformedCorpus,
                  "reference sentence " + std::to_string(s.number) +
                      " has unaligned predicted/actual rows");
    }
  }
  return out;
}

std::vector<std::string> ReferenceLabels() {
  std::istringstream in{std::string(ReferenceText())};
  std::string line;
  while (std::getline(in, line)) {
    auto pieces = internal::SplitWhitespace(line);
    if (!pieces.empty() && pieces[0] == "labels") {
      return {pieces.begin() + 1, pieces.end()};
    }
  }
  return {};
}

PairSet ReferencePairs() { return CollectPairs(true); }
PairSet ReferenceAllPairs() { return CollectPairs(false); }

HmmModel ExplicitModel() {
  TagSet ts;
  TagId d = ts.Add("D", true).index;
  TagId n = ts.Add("N", true).index;
  CountsTable counts(2);
  counts.AddNgram({kStartTag, d}, 3);
  counts.AddNgram({kStartTag, n}, 2);
  counts.AddEmission(d, "x", 1);
  counts.AddEmission(d, "y", 1);
  counts.AddEmission(n, "x", 2);
  return HmmModel(std::move(counts), std::move(ts));
}

HmmModel RandomModel(uint64_t seed, int n_tags, int n_words, int order,
                     ModelOptions options) {
  if (n_tags < 2 || n_tags > 5 || n_words < 2 || n_words > 8) {
    throw Error(ErrorCode::kInvalidArgument,
                "random model needs 2..5 tags and 2..8 words");
  }
  SplitMix64 rng(seed);
  auto count = [&] { return 1 + rng.Next() % 20; };

  TagSet ts;
  std::vector<TagId> tags;
  for (int t = 0; t < n_tags; ++t) {
    tags.push_back(ts.Add("T" + std::to_string(t), rng.Next() % 3 != 0).index);
  }

  // Every context the decoder can reach: all-start, start-padded, and
  // every tag tuple.
  std::vector<TagTuple> contexts;
  if (order == 2) {
    contexts.push_back({kStartTag});
    for (TagId a : tags) contexts.push_back({a});
  } else {
    contexts.push_back({kStartTag, kStartTag});
    for (TagId a : tags) contexts.push_back({kStartTag, a});
    for (TagId a : tags) {
      for (TagId b : tags) contexts.push_back({a, b});
    }
  }
  CountsTable counts(order);
  for (const auto &ctx : contexts) {
    for (TagId t : tags) counts.AddNgram(ctx.Append(t), count());
  }

  std::vector<std::vector<bool>> emits(
      static_cast<size_t>(n_tags), std::vector<bool>(static_cast<size_t>(n_words)));
  for (int w = 0; w < n_words; ++w) {
    bool any = false;
    for (int t = 0; t < n_tags; ++t) {
      bool on = rng.Next() % 2 == 0;
      emits[static_cast<size_t>(t)][static_cast<size_t>(w)] = on;
      any = any || on;
    }
    if (!any) emits[rng.Next() % static_cast<size_t>(n_tags)][static_cast<size_t>(w)] = true;
  }
  for (int t = 0; t < n_tags; ++t) {
    auto &row = emits[static_cast<size_t>(t)];
    if (std::find(row.begin(), row.end(), true) == row.end()) {
      row[rng.Next() % static_cast<size_t>(n_words)] = true;
    }
    for (int w = 0; w < n_words; ++w) {
      if (row[static_cast<size_t>(w)]) {
        counts.AddEmission(tags[static_cast<size_t>(t)], "w" + std::to_string(w), count());
      }
    }
  }
  return HmmModel(std::move(counts), std::move(ts), options);
}

Sentence RandomSentence(uint64_t seed, const HmmModel &model, size_t length) {
  const auto &vocab = model.counts().vocabulary();
  std::vector<std::string> words(vocab.begin(), vocab.end());
  SplitMix64 rng(seed);
  Sentence s;
  for (size_t i = 0; i < length; ++i) {
    s.tokens.push_back(words[rng.Next() % words.size()]);
  }
  return s;
}

}  // namespace hmmtag::fixtures
