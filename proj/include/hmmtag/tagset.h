// tagset.h --- registry of POS tag symbols and their word-class flags.

#ifndef HMMTAG_TAGSET_H_
#define HMMTAG_TAGSET_H_

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace hmmtag {

// Dense index of a tag inside its TagSet. The two negative values are the
// decoder-internal sentence boundaries and never name a registered tag.
using TagId = int32_t;
inline constexpr TagId kStartTag = -1;
inline constexpr TagId kEndTag = -2;
inline constexpr std::string_view kStartSymbol = "<s>";
inline constexpr std::string_view kEndSymbol = "</s>";

struct Tag {
  std::string symbol;
  std::string description;
  bool open_class = true;
  // Punctuation tags that label punctuation tokens (".", ",", "!", "?").
  bool pseudo = false;
  TagId index = 0;
};

enum class TagSetMode { kStrict, kOpen };

class TagSet {
 public:
  explicit TagSet(TagSetMode mode = TagSetMode::kOpen) : mode_(mode) {}

  // Reads `SYMBOL<TAB>open|closed<TAB>description` lines; `#` lines and
  // blank lines are skipped. Punctuation pseudo-tags missing from the file
  // are appended so that strict sets still admit punctuation tokens.
  static TagSet FromStream(std::istream &in, TagSetMode mode);

  // Returns the registered tag; in open mode an unseen symbol is registered
  // first. Throws kMalformedTag or, in strict mode, kUnknownTag.
  const Tag &Resolve(std::string_view symbol);

  // Registers a new tag. Throws kMalformedTag on a bad or reserved symbol,
  // kInvalidArgument on a duplicate.
  const Tag &Add(std::string_view symbol, bool open_class,
                 std::string_view description = {});

  std::optional<TagId> Find(std::string_view symbol) const;
  const Tag &at(TagId id) const { return tags_.at(static_cast<size_t>(id)); }

  // Boundary ids map to "<s>" / "</s>".
  std::string_view Symbol(TagId id) const;
  bool IsOpenClass(TagId id) const { return at(id).open_class; }
  bool IsPseudo(TagId id) const { return at(id).pseudo; }

  size_t size() const { return tags_.size(); }
  const std::vector<Tag> &tags() const { return tags_; }
  TagSetMode mode() const { return mode_; }
  void set_mode(TagSetMode mode) { mode_ = mode; }

  static bool IsPseudoSymbol(std::string_view symbol);
  static bool IsReservedSymbol(std::string_view symbol);
  // Non-empty, no whitespace, no underscore.
  static bool IsValidSymbol(std::string_view symbol);

 private:
  TagSetMode mode_;
  std::vector<Tag> tags_;
  std::unordered_map<std::string, TagId> index_;
};

// The 26-tag Sinhala tag set in table order followed by the four
// punctuation pseudo-tags. Open mode.
TagSet DefaultSinhalaTagSet();

inline bool IsOpenClass(const TagSet &ts, TagId tag) {
  return ts.IsOpenClass(tag);
}

}  // namespace hmmtag

#endif  // HMMTAG_TAGSET_H_
