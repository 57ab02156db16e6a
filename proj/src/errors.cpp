#include "gcda/errors.hpp"

namespace gcda {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::EmptyCollection: return "EmptyCollection";
    case ErrorCode::EmptyDocument: return "EmptyDocument";
    case ErrorCode::TerminatorInDocument: return "TerminatorInDocument";
    case ErrorCode::PositionOutOfRange: return "PositionOutOfRange";
    case ErrorCode::EmptyPattern: return "EmptyPattern";
    case ErrorCode::TerminatorInPattern: return "TerminatorInPattern";
    case ErrorCode::EmptySequence: return "EmptySequence";
    case ErrorCode::SymbolOutOfRange: return "SymbolOutOfRange";
    case ErrorCode::AlreadyCompleted: return "AlreadyCompleted";
    case ErrorCode::GrammarNotCompleted: return "GrammarNotCompleted";
    case ErrorCode::InvalidRange: return "InvalidRange";
    case ErrorCode::UnknownSymbol: return "UnknownSymbol";
    case ErrorCode::NotSampled: return "NotSampled";
    case ErrorCode::UnsortedList: return "UnsortedList";
    case ErrorCode::DocIdOutOfRange: return "DocIdOutOfRange";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::UnsortedInput: return "UnsortedInput";
    case ErrorCode::RateOutOfRange: return "RateOutOfRange";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::PatternLengthInfeasible: return "PatternLengthInfeasible";
    case ErrorCode::BadIndexFile: return "BadIndexFile";
    case ErrorCode::IoError: return "IoError";
  }
  return "UnknownError";
}

}  // namespace gcda
