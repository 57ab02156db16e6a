#pragma once

#include <stdexcept>
#include <string>

namespace gcda {

// Every failure the library can signal. Codes are part of the public
// contract; tests match on them rather than on message text.
enum class ErrorCode {
  // corpus
  EmptyCollection,
  EmptyDocument,
  TerminatorInDocument,
  PositionOutOfRange,
  // suffix index
  EmptyPattern,
  TerminatorInPattern,
  // grammar / repair
  EmptySequence,
  SymbolOutOfRange,
  AlreadyCompleted,
  GrammarNotCompleted,
  // gcda navigation
  InvalidRange,
  // doclists
  UnknownSymbol,
  NotSampled,
  UnsortedList,
  DocIdOutOfRange,
  InvalidParameter,
  // listing
  UnsortedInput,
  // synth
  RateOutOfRange,
  InvalidSpec,
  PatternLengthInfeasible,
  // io / cli
  BadIndexFile,
  IoError,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + detail),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& detail) {
  throw Error(code, detail);
}

}  // namespace gcda
