#pragma once

#include <stdexcept>
#include <string>

namespace bdet {

// Constraint set (or requested construction) admits no solution.
class infeasibility_error : public std::runtime_error {
public:
    explicit infeasibility_error(const std::string& what) : std::runtime_error(what) {}
};

// A numeric routine could not reach its certified tolerance.
class numeric_error : public std::runtime_error {
public:
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace bdet
