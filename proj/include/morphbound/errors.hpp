#ifndef MORPHBOUND_ERRORS_HPP
#define MORPHBOUND_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace morphbound {

// Bad user-supplied data: CLI flags, file contents, out-of-domain arguments.
class input_error : public std::invalid_argument {
public:
    explicit input_error(const std::string& what) : std::invalid_argument(what) {}
};

// A supplied (F, phi) tuple that fails the sum-of-squares identity.
class witness_error : public std::runtime_error {
public:
    explicit witness_error(const std::string& what) : std::runtime_error(what) {}
};

// A precondition violated by calling code.
class contract_error : public std::logic_error {
public:
    explicit contract_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace morphbound

#endif
