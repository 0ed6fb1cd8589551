#ifndef HSOQ_ERROR_HPP
#define HSOQ_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hsoq {

enum class ErrorKind {
    // field construction / arithmetic
    NonPrime,
    DegreeTooLarge,
    ConjOnOddDegree,
    FieldMismatch,
    DivisionByZero,
    NoConjugation,
    NotInSubfield,
    ZeroInput,
    // linear codes
    LengthMismatch,
    TooLarge,
    RankDeficient,
    // partition / kmax
    EOutOfRange,
    NOutOfRange,
    // derivations
    DimensionOverflow,
    DimensionUnderflow,
    KTooLarge,
    BudgetExceeded,
    NoValidExtension,
    // constructor
    SearchExhausted,
    NoSolution,
    MalformedCertificate,
    // catalog
    MalformedCsv,
    UnknownTable,
    InvalidArgument,
};

const char* to_string(ErrorKind kind);

/// Library-wide exception. Carries a machine-checkable kind next to the
/// human-readable message; the CLI maps kinds onto exit codes.
class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

}  // namespace hsoq

#endif
