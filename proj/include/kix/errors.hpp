#pragma once

#include <stdexcept>
#include <string>

namespace kix {

enum class ErrorCode {
    LoopEdge,
    MultiplicityExceeded,
    DegreeExceeded,
    BadRotation,
    NonPlanarEmbedding,
    NotOnFace,
    MultiplicityAboveK,
    EdgeAlreadyColored,
    NotACycle,
    PreconditionViolated,
    BindingInvalid,
    LiftNotGood,
    ExtensionFailed,
    NoConfigurationFound,
    Disconnected,
    UnknownLemmaId,
    SizeLimit,
    ParseError,
    InvalidInput,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

}  // namespace kix
