#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nullfront {

// Error identifiers shared with the C API status codes.
enum class ErrorCode {
    Syntax = 1,
    UnknownIdentifier,
    UnknownCatalogEntry,
    Domain,
    DenominatorNearZero,
    NotOnAdS3,
    NotUnitSpeed,
    InvalidInitialFrame,
    StepTooLarge,
    SingularFrameMatrix,
    InsufficientSamples,
    InvalidArgument,
    BadInput,
    Io,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

// Parse failure; offset is a byte position into the source text.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t offset, const std::string& what)
        : Error(ErrorCode::Syntax, what + " (at byte " + std::to_string(offset) + ")"),
          offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

class UnknownIdentifier : public Error {
public:
    UnknownIdentifier(std::size_t offset, const std::string& name)
        : Error(ErrorCode::UnknownIdentifier,
                "unknown identifier '" + name + "' (at byte " + std::to_string(offset) + ")"),
          offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(ErrorCode::Domain, what) {}
};

class DenominatorNearZero : public Error {
public:
    explicit DenominatorNearZero(const std::string& what)
        : Error(ErrorCode::DenominatorNearZero, what) {}
};

inline Error make_error(ErrorCode code, const std::string& what) { return Error(code, what); }

}  // namespace nullfront
