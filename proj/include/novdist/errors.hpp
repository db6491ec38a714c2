#pragma once

#include <stdexcept>
#include <string>

namespace novdist {

// Exit-code categories used by the CLI: 3 validation, 4 budget, 5 inconclusive.
enum class ErrorCode {
    Validation = 3,
    Budget = 4,
    Inconclusive = 5,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

struct LengthMismatch : Error {
    explicit LengthMismatch(const std::string& w) : Error(ErrorCode::Validation, w) {}
};
struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& w) : Error(ErrorCode::Validation, w) {}
};
struct InvalidAction : Error {
    explicit InvalidAction(const std::string& w) : Error(ErrorCode::Validation, w) {}
};
struct InvalidDistance : Error {
    explicit InvalidDistance(const std::string& w) : Error(ErrorCode::Validation, w) {}
};
struct SpecValidation : Error {
    explicit SpecValidation(const std::string& w) : Error(ErrorCode::Validation, w) {}
};
struct EpisodeFinished : Error {
    explicit EpisodeFinished(const std::string& w) : Error(ErrorCode::Validation, w) {}
};
struct KindMismatch : Error {
    explicit KindMismatch(const std::string& w) : Error(ErrorCode::Validation, w) {}
};
struct InvalidNovelty : Error {
    explicit InvalidNovelty(const std::string& w) : Error(ErrorCode::Validation, w) {}
};
struct EnumerationBudgetExceeded : Error {
    explicit EnumerationBudgetExceeded(const std::string& w) : Error(ErrorCode::Budget, w) {}
};
struct EmptySolutionSpaces : Error {
    explicit EmptySolutionSpaces(const std::string& w) : Error(ErrorCode::Inconclusive, w) {}
};
struct GenerationFailed : Error {
    explicit GenerationFailed(const std::string& w) : Error(ErrorCode::Validation, w) {}
};
struct DegenerateRanks : Error {
    explicit DegenerateRanks(const std::string& w) : Error(ErrorCode::Validation, w) {}
};
struct InternalInvariantViolation : Error {
    explicit InternalInvariantViolation(const std::string& w) : Error(ErrorCode::Validation, w) {}
};

}  // namespace novdist
