// counts.h --- tag n-gram and emission event counts.
//
// Every position of a sentence contributes one tag n-gram at each length
// 1..order (padded on the left with start symbols) and one (tag, surface)
// emission. Context totals are kept as sums over the following tag, so the
// relative-frequency estimates below are normalized by construction.

#ifndef HMMTAG_COUNTS_H_
#define HMMTAG_COUNTS_H_

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hmmtag/corpus.h"
#include "hmmtag/tagset.h"

namespace hmmtag {

inline constexpr int kMaxOrder = 3;

// A short tuple of tag ids (length 0..3), ordered by length and then
// lexicographically by id. Boundary ids are negative and sort first.
class TagTuple {
 public:
  TagTuple() = default;
  TagTuple(std::initializer_list<TagId> ids);
  explicit TagTuple(std::span<const TagId> ids);

  size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  TagId operator[](size_t i) const { return ids_[i]; }
  TagId back() const { return ids_[size_ - 1]; }
  std::span<const TagId> ids() const { return {ids_.data(), size_}; }

  // Tuple with `tag` appended (size + 1).
  TagTuple Append(TagId tag) const;
  // Last `n` elements.
  TagTuple Suffix(size_t n) const;
  // All but the last element.
  TagTuple Context() const { return TagTuple(ids().first(size_ - 1)); }
  // Drops the first element and appends `tag`; size is unchanged.
  TagTuple Shift(TagId tag) const;

  static TagTuple Starts(size_t n);

  std::strong_ordering operator<=>(const TagTuple &other) const;
  bool operator==(const TagTuple &other) const;

 private:
  std::array<TagId, kMaxOrder> ids_{};
  uint8_t size_ = 0;
};

class CountsTable {
 public:
  explicit CountsTable(int order = 3, bool model_eos = false);

  int order() const { return order_; }
  bool model_eos() const { return model_eos_; }

  // Records `count` occurrences of a full-order n-gram and all of its
  // suffixes. `ngram.size()` must equal order().
  void AddNgram(const TagTuple &ngram, uint64_t count = 1);
  void AddEmission(TagId tag, std::string_view surface, uint64_t count = 1);
  // Counts every event of one tagged sentence.
  void AddSentence(const TaggedSentence &sentence);
  // Sums another table into this one. Orders and eos flags must agree.
  void Merge(const CountsTable &other);

  // Count of an n-gram of any length 1..order.
  uint64_t NgramCount(const TagTuple &ngram) const;
  // Sum of NgramCount(context + t) over every t; length 0..order-1.
  uint64_t ContextTotal(const TagTuple &context) const;
  uint64_t EmissionCount(TagId tag, std::string_view surface) const;
  uint64_t EmissionTotal(TagId tag) const;
  uint64_t TagCount(TagId tag) const { return NgramCount(TagTuple{tag}); }

  // n-grams of the given length, in TagTuple order.
  const std::map<TagTuple, uint64_t> &Ngrams(size_t length) const {
    return ngrams_.at(length);
  }
  const std::map<TagTuple, uint64_t> &Contexts(size_t length) const {
    return contexts_.at(length);
  }
  const std::map<std::pair<TagId, std::string>, uint64_t> &emissions() const {
    return emissions_;
  }
  const std::map<TagId, uint64_t> &emission_totals() const {
    return emission_totals_;
  }
  const std::set<std::string, std::less<>> &vocabulary() const {
    return vocabulary_;
  }
  bool InVocabulary(std::string_view surface) const {
    return vocabulary_.find(surface) != vocabulary_.end();
  }
  // Tags seen with `surface`, ascending. Empty for unknown words.
  std::span<const TagId> WordTags(std::string_view surface) const;
  // Non-boundary tags with a nonzero unigram count, ascending.
  std::vector<TagId> Tags() const;

  bool operator==(const CountsTable &other) const;

 private:
  int order_;
  bool model_eos_;
  // Index = tuple length; entry 0 of ngrams_ is unused.
  std::array<std::map<TagTuple, uint64_t>, kMaxOrder + 1> ngrams_;
  std::array<std::map<TagTuple, uint64_t>, kMaxOrder> contexts_;
  std::map<std::pair<TagId, std::string>, uint64_t> emissions_;
  std::map<TagId, uint64_t> emission_totals_;
  std::set<std::string, std::less<>> vocabulary_;
  std::map<std::string, std::vector<TagId>, std::less<>> word_tags_;
};

// Throws kEmptyCorpus or kInvalidArgument (order outside {2, 3}).
CountsTable CountEvents(const Corpus &corpus, int order,
                        bool model_eos = false);

// Relative-frequency estimate c(context, tag) / c(context); 0 when the
// n-gram or the context is unseen. Throws kArityMismatch unless
// context.size() == order - 1.
double TransitionProb(const CountsTable &counts, const TagTuple &context,
                      TagId tag);

// As TransitionProb, for any history length 0..order-1. The order-2
// estimate is this with a one-tag history.
double ConditionalTagProb(const CountsTable &counts, const TagTuple &history,
                          TagId tag);

// c(tag, surface) / c(tag); 0 when unseen.
double EmissionProb(const CountsTable &counts, std::string_view surface,
                    TagId tag);

}  // namespace hmmtag

#endif  // HMMTAG_COUNTS_H_
