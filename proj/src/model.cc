// model.cc --- smoothed lookups and unknown-word policies.

#include "hmmtag/model.h"

#include <cmath>

#include "hmmtag/error.h"

namespace hmmtag {

std::string_view SmoothingKindName(SmoothingKind kind) {
  return kind == SmoothingKind::kAddK ? "add-k" : "none";
}

std::string_view UnknownPolicyName(UnknownPolicy policy) {
  switch (policy) {
    case UnknownPolicy::kFail: return "fail";
    case UnknownPolicy::kUniform: return "uniform";
    case UnknownPolicy::kOpenClass: return "open-class";
  }
  return "fail";
}

SmoothingKind ParseSmoothingKind(std::string_view name) {
  if (name == "none") return SmoothingKind::kNone;
  if (name == "add-k" || name == "add_k") return SmoothingKind::kAddK;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown smoothing kind '" + std::string(name) + "'");
}

UnknownPolicy ParseUnknownPolicy(std::string_view name) {
  if (name == "fail") return UnknownPolicy::kFail;
  if (name == "uniform") return UnknownPolicy::kUniform;
  if (name == "open-class" || name == "open_class") {
    return UnknownPolicy::kOpenClass;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "unknown word policy '" + std::string(name) + "'");
}

HmmModel::HmmModel(CountsTable counts, TagSet tagset, ModelOptions options)
    : counts_(std::move(counts)),
      tagset_(std::move(tagset)),
      options_(options),
      tags_(counts_.Tags()) {
  if (options_.smoothing.kind == SmoothingKind::kAddK &&
      !(options_.smoothing.k > 0.0 && std::isfinite(options_.smoothing.k))) {
    throw Error(ErrorCode::kInvalidArgument, "add-k smoothing needs k > 0");
  }
  for (TagId t : tags_) {
    if (static_cast<size_t>(t) >= tagset_.size()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "tag id " + std::to_string(t) + " missing from tag set");
    }
  }
}

HmmModel HmmModel::WithOptions(const ModelOptions &options) const {
  return HmmModel(counts_, tagset_, options);
}

size_t HmmModel::TransitionOutcomes() const {
  return tags_.size() + (counts_.model_eos() ? 1 : 0);
}

double HmmModel::TransitionLookup(const TagTuple &context, TagId tag) const {
  const auto &sm = options_.smoothing;
  if (sm.kind == SmoothingKind::kNone || !sm.transitions) {
    return TransitionProb(counts_, context, tag);
  }
  if (context.size() != static_cast<size_t>(order() - 1)) {
    throw Error(ErrorCode::kArityMismatch, "context must hold order - 1 tags");
  }
  // "<s>" never follows anything; "</s>" only when modelled.
  if (tag == kStartTag || (tag == kEndTag && !counts_.model_eos())) return 0.0;
  double count = static_cast<double>(counts_.NgramCount(context.Append(tag)));
  double total = static_cast<double>(counts_.ContextTotal(context));
  return (count + sm.k) /
         (total + sm.k * static_cast<double>(TransitionOutcomes()));
}

std::vector<TagId> HmmModel::UnknownWordTags() const {
  std::vector<TagId> out;
  if (options_.unknown == UnknownPolicy::kFail) return out;
  for (TagId t : tags_) {
    if (counts_.EmissionTotal(t) == 0) continue;
    if (options_.unknown == UnknownPolicy::kOpenClass &&
        !tagset_.IsOpenClass(t)) {
      continue;
    }
    out.push_back(t);
  }
  return out;
}

double HmmModel::EmissionLookup(std::string_view surface, TagId tag) const {
  if (!IsKnown(surface)) {
    switch (options_.unknown) {
      case UnknownPolicy::kFail:
        throw Error(ErrorCode::kUnknownWord,
                    "unknown word '" + std::string(surface) + "'");
      case UnknownPolicy::kUniform:
        break;
      case UnknownPolicy::kOpenClass:
        if (tag < 0 || !tagset_.IsOpenClass(tag)) return 0.0;
        break;
    }
    if (tag < 0 || counts_.EmissionTotal(tag) == 0) return 0.0;
    return 1.0 / static_cast<double>(VocabularySize());
  }
  const auto &sm = options_.smoothing;
  if (sm.kind == SmoothingKind::kNone || !sm.emissions) {
    return EmissionProb(counts_, surface, tag);
  }
  if (tag < 0) return 0.0;
  double count = static_cast<double>(counts_.EmissionCount(tag, surface));
  double total = static_cast<double>(counts_.EmissionTotal(tag));
  return (count + sm.k) /
         (total + sm.k * static_cast<double>(VocabularySize()));
}

HmmModel Train(const Corpus &corpus, const TagSet &tagset,
               const TrainConfig &config) {
  return HmmModel(CountEvents(corpus, config.order, config.model_eos), tagset,
                  config.options);
}

}  // namespace hmmtag
