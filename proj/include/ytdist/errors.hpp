#pragma once

#include <stdexcept>
#include <string>

namespace ytdist {

enum class Errc {
    // parsing
    NotABijection,
    LengthMismatch,
    MalformedCycle,
    ElementOutOfRange,
    // tree validation
    NotConnected,
    HasCycle,
    NonPositiveWeight,
    DegreeTooHigh,
    // queries
    OutOfRange,
    SizeMismatch,
    NotAYTree,
    CenterHasNoBranch,
    // solvers
    NotOnPath,
    CenterNotInCycle,
    NotBalanced,
    NotUnbalanced,
    NonSortingInput,
    NoProgress,
    // oracle
    BudgetExceeded,
    Internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace ytdist
