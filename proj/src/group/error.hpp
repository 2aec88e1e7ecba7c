#pragma once

#include <stdexcept>
#include <string>

namespace formalab {

enum class ErrorCode {
  InvalidArgument,
  InvalidPermutation,
  InvalidTable,
  ClosureCapExceeded,
  IsoCapExceeded,
  SubgroupCountCapExceeded,
  NotNormal,
  NotAutomorphism,
  NotActionHomomorphism,
  RelationMismatch,
  PreconditionViolated,
  NotSoluble,
  NoSatellite,
  LoadError,
  ConstructionFailed,
  Internal,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  [[nodiscard]] ErrorCode code() const { return code_; }

  [[nodiscard]] bool is_cap() const {
    return code_ == ErrorCode::ClosureCapExceeded || code_ == ErrorCode::IsoCapExceeded ||
           code_ == ErrorCode::SubgroupCountCapExceeded;
  }

 private:
  ErrorCode code_;
};

/// Size limits shared by constructions and searches.
struct Limits {
  std::size_t closure_cap = 512;
  std::size_t iso_cap = 128;
  std::size_t subgroup_cap = 20000;
};

}  // namespace formalab
