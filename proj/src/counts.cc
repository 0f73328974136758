// counts.cc --- event counting and relative-frequency estimates.

#include "hmmtag/counts.h"

#include <algorithm>

#include "hmmtag/error.h"

namespace hmmtag {

TagTuple::TagTuple(std::initializer_list<TagId> ids)
    : TagTuple(std::span<const TagId>(ids.begin(), ids.size())) {}

TagTuple::TagTuple(std::span<const TagId> ids) {
  if (ids.size() > kMaxOrder) {
    throw Error(ErrorCode::kArityMismatch, "tag tuple longer than 3");
  }
  std::copy(ids.begin(), ids.end(), ids_.begin());
  size_ = static_cast<uint8_t>(ids.size());
}

TagTuple TagTuple::Append(TagId tag) const {
  if (size_ == kMaxOrder) {
    throw Error(ErrorCode::kArityMismatch, "tag tuple longer than 3");
  }
  TagTuple out = *this;
  out.ids_[out.size_++] = tag;
  return out;
}

TagTuple TagTuple::Suffix(size_t n) const { return TagTuple(ids().last(n)); }

TagTuple TagTuple::Shift(TagId tag) const {
  if (size_ == 0) return *this;
  TagTuple out;
  out.size_ = size_;
  for (size_t i = 1; i < size_; ++i) out.ids_[i - 1] = ids_[i];
  out.ids_[size_ - 1] = tag;
  return out;
}

TagTuple TagTuple::Starts(size_t n) {
  TagTuple out;
  out.size_ = static_cast<uint8_t>(n);
  for (size_t i = 0; i < n; ++i) out.ids_[i] = kStartTag;
  return out;
}

std::strong_ordering TagTuple::operator<=>(const TagTuple &other) const {
  if (auto c = size_ <=> other.size_; c != 0) return c;
  for (size_t i = 0; i < size_; ++i) {
    if (auto c = ids_[i] <=> other.ids_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

bool TagTuple::operator==(const TagTuple &other) const {
  return (*this <=> other) == 0;
}

CountsTable::CountsTable(int order, bool model_eos)
    : order_(order), model_eos_(model_eos) {
  if (order != 2 && order != 3) {
    throw Error(ErrorCode::kInvalidArgument,
                "order must be 2 or 3, got " + std::to_string(order));
  }
}

void CountsTable::AddNgram(const TagTuple &ngram, uint64_t count) {
  if (ngram.size() != static_cast<size_t>(order_)) {
    throw Error(ErrorCode::kArityMismatch, "n-gram length must equal order");
  }
  if (count == 0) return;
  for (size_t len = 1; len <= ngram.size(); ++len) {
    TagTuple suffix = ngram.Suffix(len);
    ngrams_[len][suffix] += count;
    contexts_[len - 1][suffix.Context()] += count;
  }
}

void CountsTable::AddEmission(TagId tag, std::string_view surface,
                              uint64_t count) {
  if (count == 0) return;
  auto [it, inserted] = emissions_.try_emplace({tag, std::string(surface)}, 0);
  it->second += count;
  emission_totals_[tag] += count;
  vocabulary_.emplace(surface);
  if (inserted) {
    auto &tags = word_tags_[std::string(surface)];
    tags.insert(std::lower_bound(tags.begin(), tags.end(), tag), tag);
  }
}

void CountsTable::AddSentence(const TaggedSentence &sentence) {
  TagTuple history = TagTuple::Starts(static_cast<size_t>(order_ - 1));
  for (const auto &item : sentence.items) {
    AddNgram(history.Append(item.tag));
    AddEmission(item.tag, item.surface);
    history = history.Shift(item.tag);
  }
  if (model_eos_) AddNgram(history.Append(kEndTag));
}

void CountsTable::Merge(const CountsTable &other) {
  if (other.order_ != order_ || other.model_eos_ != model_eos_) {
    throw Error(ErrorCode::kInvalidArgument,
                "cannot merge count tables of different shape");
  }
  for (const auto &[ngram, count] : other.ngrams_[order_]) {
    AddNgram(ngram, count);
  }
  for (const auto &[key, count] : other.emissions_) {
    AddEmission(key.first, key.second, count);
  }
}

uint64_t CountsTable::NgramCount(const TagTuple &ngram) const {
  if (ngram.empty() || ngram.size() > static_cast<size_t>(order_)) return 0;
  const auto &table = ngrams_[ngram.size()];
  auto it = table.find(ngram);
  return it == table.end() ? 0 : it->second;
}

uint64_t CountsTable::ContextTotal(const TagTuple &context) const {
  if (context.size() >= static_cast<size_t>(order_)) return 0;
  const auto &table = contexts_[context.size()];
  auto it = table.find(context);
  return it == table.end() ? 0 : it->second;
}

uint64_t CountsTable::EmissionCount(TagId tag, std::string_view surface) const {
  auto it = emissions_.find({tag, std::string(surface)});
  return it == emissions_.end() ? 0 : it->second;
}

uint64_t CountsTable::EmissionTotal(TagId tag) const {
  auto it = emission_totals_.find(tag);
  return it == emission_totals_.end() ? 0 : it->second;
}

std::span<const TagId> CountsTable::WordTags(std::string_view surface) const {
  auto it = word_tags_.find(surface);
  if (it == word_tags_.end()) return {};
  return it->second;
}

std::vector<TagId> CountsTable::Tags() const {
  std::vector<TagId> tags;
  for (const auto &[unigram, count] : ngrams_[1]) {
    if (unigram[0] >= 0 && count > 0) tags.push_back(unigram[0]);
  }
  return tags;
}

bool CountsTable::operator==(const CountsTable &other) const {
  return order_ == other.order_ && model_eos_ == other.model_eos_ &&
         ngrams_ == other.ngrams_ && emissions_ == other.emissions_;
}

CountsTable CountEvents(const Corpus &corpus, int order, bool model_eos) {
  CountsTable counts(order, model_eos);
  if (corpus.empty()) {
    throw Error(ErrorCode::kEmptyCorpus, "cannot train on an empty corpus");
  }
  for (const auto &sentence : corpus.sentences) counts.AddSentence(sentence);
  return counts;
}

double ConditionalTagProb(const CountsTable &counts, const TagTuple &history,
                          TagId tag) {
  if (history.size() >= static_cast<size_t>(counts.order())) {
    throw Error(ErrorCode::kArityMismatch,
                "history longer than order - 1");
  }
  uint64_t total = counts.ContextTotal(history);
  if (total == 0) return 0.0;
  return static_cast<double>(counts.NgramCount(history.Append(tag))) /
         static_cast<double>(total);
}

double TransitionProb(const CountsTable &counts, const TagTuple &context,
                      TagId tag) {
  if (context.size() != static_cast<size_t>(counts.order() - 1)) {
    throw Error(ErrorCode::kArityMismatch,
                "context must hold order - 1 = " +
                    std::to_string(counts.order() - 1) + " tags, got " +
                    std::to_string(context.size()));
  }
  return ConditionalTagProb(counts, context, tag);
}

double EmissionProb(const CountsTable &counts, std::string_view surface,
                    TagId tag) {
  uint64_t total = counts.EmissionTotal(tag);
  if (total == 0) return 0.0;
  return static_cast<double>(counts.EmissionCount(tag, surface)) /
         static_cast<double>(total);
}

}  // namespace hmmtag
