#pragma once

#include <stdexcept>
#include <string>

namespace beid {

// Malformed textual input (edge lists, graph6, labelings). CLI exit code 2.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A configured resource bound was exceeded (search caps, pair queues). CLI exit code 3.
class CapacityError : public std::runtime_error {
public:
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace beid
