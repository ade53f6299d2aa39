#pragma once

#include <stdexcept>
#include <string>

namespace zxcf {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionError : Error {
    using Error::Error;
};

struct InconsistentSystemError : Error {
    using Error::Error;
};

struct InvalidFreeSetError : Error {
    using Error::Error;
};

struct UnknownVertexError : Error {
    using Error::Error;
};

struct SizeLimitError : Error {
    using Error::Error;
};

struct PreconditionError : Error {
    using Error::Error;
};

struct NotStabilizerError : Error {
    using Error::Error;
};

struct MalformedDiagramError : Error {
    using Error::Error;
};

struct NoFlowError : Error {
    using Error::Error;
};

struct MalformedFlowError : Error {
    using Error::Error;
};

/// File fails to parse against its JSON schema.
struct SchemaError : Error {
    using Error::Error;
};

} // namespace zxcf
