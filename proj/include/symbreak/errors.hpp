#ifndef SYMBREAK_ERRORS_HPP
#define SYMBREAK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace symbreak {

// Bad caller input: malformed graphs, out-of-range parameters, domain
// violations (e.g. asking for the motion of an asymmetric graph).
// CLI maps this to exit code 2.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Instance is too large for the documented implementation bounds
// (enumeration budget, automorphism-group cap, lattice cap).
// CLI maps this to exit code 3.
class capacity_error : public std::runtime_error {
public:
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

// A proven invariant failed at runtime (e.g. |Aut| does not divide a
// distinguishing-coloring count). Always a bug, never a user mistake.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace symbreak

#endif
