#pragma once

#include <stdexcept>
#include <string>

namespace hullwalk {

/// A requested numeric tolerance could not be reached.
class ToleranceError : public std::runtime_error {
public:
    explicit ToleranceError(const std::string& what) : std::runtime_error(what) {}
};

/// The computation would exceed a hard resource cap (e.g. brute-force
/// enumeration beyond its step limit).
class ResourceLimitError : public std::runtime_error {
public:
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

/// Conditioning on an event of probability zero. Distinct from a valid
/// zero probability among realizable outcomes.
class NullBridgeError : public std::domain_error {
public:
    explicit NullBridgeError(const std::string& what) : std::domain_error(what) {}
};

} // namespace hullwalk
