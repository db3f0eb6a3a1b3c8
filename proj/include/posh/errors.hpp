#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace posh {

// Bad argument values (n < 2, a == b, degree too large, ...).
class DomainError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Malformed structures: broken rotation, unplaced vertex, dangling edge.
class StructuralError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Caller broke a documented precondition.
class PreconditionError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Something that should be unreachable happened inside a pipeline.
class InvariantError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

class NonPlanarError : public std::runtime_error {
  public:
    NonPlanarError(const std::string& what, std::vector<int> witness_edges)
        : std::runtime_error(what), witness(std::move(witness_edges)) {}
    std::vector<int> witness;  // edge ids of a Kuratowski subdivision
};

class NotBipartiteError : public std::runtime_error {
  public:
    NotBipartiteError(const std::string& what, std::vector<int> cycle)
        : std::runtime_error(what), odd_cycle(std::move(cycle)) {}
    std::vector<int> odd_cycle;  // vertex ids, closed implicitly
};

}  // namespace posh
