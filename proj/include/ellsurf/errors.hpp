#pragma once

#include <stdexcept>
#include <string>

namespace ellsurf {

// Bad user-supplied data (malformed files, models that are not elliptic
// surfaces, out-of-range parameters).  CLI maps this to exit code 1.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A cross-check that must hold by construction failed (Euler sum off,
// certificate mismatch, solver ambiguity).  CLI maps this to exit code 2.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace ellsurf
