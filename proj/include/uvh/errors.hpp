#ifndef UVH_ERRORS_HPP
#define UVH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace uvh {

/// Rejected input: malformed files, out-of-range indices, invalid parameters.
/// Maps to CLI exit code 2.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// Broken internal invariant (basis mismatch, non-cycle where a cycle is
/// required, ...). Never silent. Maps to CLI exit code 3.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

/// Requested degree exceeds what the constructed complex can answer.
class not_computed_error : public input_error {
public:
    explicit not_computed_error(const std::string& what) : input_error(what) {}
};

} // namespace uvh

#endif
