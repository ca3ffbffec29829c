#ifndef MONOCYC_ERRORS_HPP
#define MONOCYC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace monocyc {

// One code per failure mode the library can signal. The C API maps these
// one-to-one onto mc_status values.
enum class ErrorCode {
    NotDivisible,
    ZeroPolynomial,
    NonMonic,
    ModulusMismatch,
    ModulusTooLarge,
    OutOfRange,
    IndexOutOfRange,
    FactorizationTooHard,
    NotASquareQuotient,
    DegreeMismatch,
    EvenIndex,
    ProductMismatch,
    ParseError,
    UnsupportedModulus,
    InternalInconsistency,
    InvalidArgument,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

const char* error_code_name(ErrorCode code) noexcept;

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

} // namespace monocyc

#endif
