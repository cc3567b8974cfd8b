#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tqcube {

/// Caller supplied an invalid value: bad label, bad dimension, malformed input.
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A request that is well-formed but not supported for the given dimension,
/// e.g. asking for two edge-disjoint Hamiltonian cycles of TQ_3.
class UnsupportedDimensionError : public ArgumentError {
public:
    using ArgumentError::ArgumentError;
};

/// The operation would enumerate or materialize more state than the
/// configured cap allows.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Text input failed to parse; position is a 0-based character offset into
/// the offending string (or byte offset for structured documents).
class ParseError : public ArgumentError {
public:
    ParseError(const std::string& what, std::size_t position)
        : ArgumentError(what), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Two paths were joined across a non-edge.
class JunctionError : public ArgumentError {
public:
    JunctionError(const std::string& what, std::uint64_t tail, std::uint64_t head)
        : ArgumentError(what), tail_(tail), head_(head) {}
    std::uint64_t tail() const noexcept { return tail_; }
    std::uint64_t head() const noexcept { return head_; }

private:
    std::uint64_t tail_;
    std::uint64_t head_;
};

/// Two paths that must not share nodes do.
class DisjointnessError : public ArgumentError {
public:
    using ArgumentError::ArgumentError;
};

/// A broadcast schedule combination that the simulator cannot run.
class ConfigError : public ArgumentError {
public:
    using ArgumentError::ArgumentError;
};

/// An internal assembly invariant failed. This indicates a defect in the
/// library (or corrupted constant data), never a usage error.
class ConstructionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace tqcube
