#ifndef TRIENUM_ERRORS_HPP
#define TRIENUM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace trienum {

// Fatal input problems (bad edge list, bad k-expression text).
class ParseError : public std::runtime_error {
public:
    ParseError(std::string msg, std::size_t line)
        : std::runtime_error("line " + std::to_string(line) + ": " + std::move(msg)),
          line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// A caller-supplied structure does not satisfy an algorithm's precondition.
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotFeedbackSetError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class NotDeletionSetError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class EdgeOutsideDError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class NotBipartiteError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class NotChordalError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class NotCographError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class TreeGraphMismatchError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

// Explicit refusal instead of silent blow-up (2^|D| kernels, O(n^4) scans).
class ParameterTooLargeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnsupportedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace trienum

#endif
