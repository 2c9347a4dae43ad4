#pragma once

#include <stdexcept>
#include <string>

namespace hxplain {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IllegalAction : Error {
    using Error::Error;
};
struct PolicyUndefined : Error {
    using Error::Error;
};
struct SchemaMismatch : Error {
    using Error::Error;
};
struct TerminalState : Error {
    using Error::Error;
};
struct UnknownPredicate : Error {
    using Error::Error;
};
struct MissingReference : Error {
    using Error::Error;
};
struct SpaceTooLarge : Error {
    using Error::Error;
};
struct EmptyMatchSet : Error {
    using Error::Error;
};
struct EmptyHistory : Error {
    using Error::Error;
};
struct IllegalColumn : Error {
    using Error::Error;
};
struct TerminalBoard : Error {
    using Error::Error;
};
struct CrashedAgent : Error {
    using Error::Error;
};
struct SamplingExhausted : Error {
    using Error::Error;
};

} // namespace hxplain
