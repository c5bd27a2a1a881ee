#ifndef PTOPO_ERROR_HPP
#define PTOPO_ERROR_HPP

#include <stdexcept>
#include <string>

namespace ptopo {

// Malformed input documents (bad JSON, schema violations). CLI exit code 2.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Geometrically invalid data (self-intersecting polygon, negative radius).
// CLI exit code 2.
class GeometryError : public std::runtime_error {
public:
    explicit GeometryError(const std::string& msg) : std::runtime_error(msg) {}
};

// Valid input outside an operation's domain (precondition not met,
// e.g. asking for an obstruction of a set with connected complement).
// CLI exit code 1.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace ptopo

#endif
