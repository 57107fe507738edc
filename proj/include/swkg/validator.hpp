#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "swkg/axioms.hpp"
#include "swkg/graph.hpp"

namespace swkg {

enum class ValidationMode : std::uint8_t { Closed, MaterializeFirst };

// "closed" or "materialize-first"; throws std::invalid_argument otherwise.
ValidationMode parse_mode(std::string_view text);
std::string_view to_string(ValidationMode mode);

enum class ViolationKind : std::uint8_t {
  MissingWitness,
  RangeBreach,
  CardinalityExceeded
};

std::string_view to_string(ViolationKind kind);

struct Violation {
  std::string axiom_id;
  ViolationKind kind;
  Term focus;
  std::vector<Term> witnesses;
  std::string message;
};

struct ValidationStats {
  std::size_t checks = 0;         // (constraint, focus node) evaluations
  std::size_t nodes = 0;          // distinct focus nodes inspected
  std::size_t derived = 0;        // triples added before checking
  std::size_t nulls_created = 0;  // materialize-first only
};

struct ValidationReport {
  bool conforms = true;
  std::vector<Violation> violations;  // sorted by axiom id, then focus
  std::vector<InformationalNote> info;
  ValidationStats stats;
};

// Saturates a private copy of `graph` with the theory's inference rules (and,
// in materialize-first mode, chases its generating rules), then runs every
// constraint under the closed-world reading. Missing-witness checks apply in
// closed mode only. Untyped fillers never count toward a cardinality.
ValidationReport validate(const Graph& graph, const CompiledTheory& theory,
                          ValidationMode mode);

}  // namespace swkg
