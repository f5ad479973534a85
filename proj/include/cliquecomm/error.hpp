#pragma once

#include <stdexcept>
#include <string>

namespace cliquecomm {

enum class ErrorKind {
  kInvalidParams,
  kEmptyGraph,
  kDimensionMismatch,
  kInconsistent,
  kConditionsFailed,
  kCapExceeded,
  kSearchExhausted,
  kConstructionFailed,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Process exit code used by the command-line tool for each error kind.
inline int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidParams:
    case ErrorKind::kEmptyGraph:
    case ErrorKind::kDimensionMismatch:
      return 2;
    case ErrorKind::kInconsistent:
    case ErrorKind::kConditionsFailed:
      return 3;
    case ErrorKind::kCapExceeded:
      return 4;
    case ErrorKind::kSearchExhausted:
    case ErrorKind::kConstructionFailed:
      return 5;
  }
  return 1;
}

}  // namespace cliquecomm
