// error.h --- error type shared by every hmmtag module.

#ifndef HMMTAG_ERROR_H_
#define HMMTAG_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace hmmtag {

enum class ErrorCode {
  kUnknownTag,
  kMalformedTag,
  kNoSeparator,
  kMalformedToken,
  kMalformedCorpus,
  kEmptyCorpus,
  kArityMismatch,
  kUnknownWord,
  kNoPath,
  kLengthMismatch,
  kSearchSpaceTooLarge,
  kUnsupportedVersion,
  kCorruptModel,
  kIoFailure,
  kEmptyPairSet,
  kTooFewSentences,
  kInvalidArgument,
};

std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hmmtag

#endif  // HMMTAG_ERROR_H_
