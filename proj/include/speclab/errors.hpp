#pragma once

#include <stdexcept>
#include <string>

namespace speclab {

// All library failures derive from Error so callers can catch one type.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Unparseable graph6 / rotation-system / family-spec input.
struct MalformedInput : Error {
  explicit MalformedInput(const std::string& msg) : Error(msg) {}
};

// Bad numeric parameter to a generator or checker.
struct InvalidParameter : Error {
  explicit InvalidParameter(const std::string& msg) : Error(msg) {}
};

// An exact search exceeded its node budget.
struct BudgetExceeded : Error {
  explicit BudgetExceeded(const std::string& msg) : Error(msg) {}
};

// Operation requires a connected graph.
struct NotConnected : Error {
  explicit NotConnected(const std::string& msg) : Error(msg) {}
};

// Iterative numeric method failed to converge within its cap.
struct NonConvergence : Error {
  explicit NonConvergence(const std::string& msg) : Error(msg) {}
};

// Rotation system does not describe a sphere embedding.
struct NotPlanar : Error {
  explicit NotPlanar(const std::string& msg) : Error(msg) {}
};

// Rotation system inconsistent with the graph it claims to embed.
struct InvalidRotationSystem : Error {
  explicit InvalidRotationSystem(const std::string& msg) : Error(msg) {}
};

// Hypergraph operation that needs at least one edge.
struct EmptyHypergraph : Error {
  explicit EmptyHypergraph(const std::string& msg) : Error(msg) {}
};

// Local search was seeded with a graph violating the constraint set.
struct InfeasibleSeed : Error {
  explicit InfeasibleSeed(const std::string& msg) : Error(msg) {}
};

}  // namespace speclab
