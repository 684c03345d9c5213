#pragma once

#include <stdexcept>
#include <string>

namespace fcgs {

// Numeric values are mirrored by fcgs_status in include/fcgs/fcgs.h.
enum class ErrorCode : int {
  kEmptyInput = 1,
  kInvalidCharacter = 2,
  kEmptyRecord = 3,
  kInvalidInterval = 4,
  kOverlap = 5,
  kParse = 6,
  kRange = 7,
  kFetch = 8,
  kIo = 9,
  kAmbiguousBase = 10,
  kEmptyTrajectory = 11,
  kNoValidWords = 12,
  kOrderTooLarge = 13,
  kOrderMismatch = 14,
  kSequenceTooShort = 15,
  kInvalidScale = 16,
  kEmptySignal = 17,
  kInvalidParameter = 18,
  kEmptyBand = 19,
  kLabelNotFound = 20,
  kEmptyWindow = 21,
  kConfig = 22,
};

class Error : public std::runtime_error {
 public:
  // `detail` carries the byte position, line number or coordinate the error
  // refers to; -1 when there is none.
  Error(ErrorCode code, const std::string& what, long long detail = -1)
      : std::runtime_error(what), code_(code), detail_(detail) {}

  ErrorCode code() const noexcept { return code_; }
  long long detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  long long detail_;
};

}  // namespace fcgs
