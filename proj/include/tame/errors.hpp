#ifndef TAME_ERRORS_HPP
#define TAME_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tame {

// Exit-code classes used by the CLI: 2 = configuration / hypothesis violation,
// 3 = internal inconsistency (aborts a scan), 4 = I/O.
struct Error : std::runtime_error {
    int exit_code;
    Error(std::string msg, int code) : std::runtime_error(std::move(msg)), exit_code(code) {}
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& m) : Error(m, 2) {}
};
struct InternalError : Error {
    explicit InternalError(const std::string& m) : Error(m, 3) {}
};
struct IoError : Error {
    explicit IoError(const std::string& m) : Error(m, 4) {}
};

#define TAME_ERROR_KIND(NAME, BASE)                       \
    struct NAME : BASE {                                  \
        explicit NAME(const std::string& m)               \
            : BASE(std::string(#NAME) + ": " + m) {}      \
    }

// exact-arith
TAME_ERROR_KIND(RamifiedModulus, ConfigError);
TAME_ERROR_KIND(DimensionMismatch, InternalError);
TAME_ERROR_KIND(FactorizationTooHard, ConfigError);
TAME_ERROR_KIND(BadPrime, ConfigError);
// cyclic-module
TAME_ERROR_KIND(InvalidModule, ConfigError);
TAME_ERROR_KIND(InvalidCase, ConfigError);
// pgroup-lab
TAME_ERROR_KIND(OrderCapExceeded, ConfigError);
TAME_ERROR_KIND(NotPGroup, ConfigError);
TAME_ERROR_KIND(PreconditionFailed, ConfigError);
// quad-field
TAME_ERROR_KIND(NotFundamental, ConfigError);
TAME_ERROR_KIND(Ramified, ConfigError);
TAME_ERROR_KIND(SearchExhausted, InternalError);
TAME_ERROR_KIND(NotApplicable, ConfigError);
// ext-field-data
TAME_ERROR_KIND(BundleInvalid, ConfigError);
TAME_ERROR_KIND(IsNotUnit, ConfigError);
TAME_ERROR_KIND(SigmaOrder, ConfigError);
TAME_ERROR_KIND(NonGeneratingBundle, ConfigError);
TAME_ERROR_KIND(RankDeficit, ConfigError);
TAME_ERROR_KIND(NotInSpan, InternalError);
TAME_ERROR_KIND(SigmaInconsistent, InternalError);
TAME_ERROR_KIND(NotSigmaFixed, InternalError);
// tame-classifier
TAME_ERROR_KIND(TooManyPrimes, ConfigError);
TAME_ERROR_KIND(PreconditionSplit, ConfigError);

#undef TAME_ERROR_KIND

}  // namespace tame

#endif
