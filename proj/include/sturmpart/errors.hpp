#pragma once

#include <stdexcept>
#include <string>

namespace sturmpart {

// Bad user input or violated operation precondition. CLI exit code 2.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A configured cap was exceeded (refinement power, cutpoint count, CF depth,
// enumeration length, integer overflow). CLI exit code 3.
class resource_limit_error : public std::runtime_error {
public:
    explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace sturmpart
