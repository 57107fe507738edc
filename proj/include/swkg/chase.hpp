#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "swkg/graph.hpp"
#include "swkg/rules.hpp"

namespace swkg {

struct ChaseResult {
  std::vector<Triple> added;  // in insertion order
  std::size_t nulls_created = 0;
  std::size_t rounds = 0;
  std::size_t firings = 0;
  bool terminated = false;
};

inline constexpr std::size_t kDefaultMaxRounds = 32;

// Datalog saturation to fixpoint. Throws std::invalid_argument if any rule
// has existential variables.
ChaseResult saturate(Graph& graph, const std::vector<ExistentialRule>& rules);

// Restricted chase. Each round collects the body matches of every rule
// (rules by id, matches by sorted binding) against the graph as it stood at
// the start of the round, then fires each trigger whose head has no
// extension into the current graph, minting one fresh null per existential
// variable. A trigger whose head would place a literal in subject position
// is not applicable and never fires. `terminated` is set when a round completes with no firing within
// `max_rounds` rounds. Throws std::invalid_argument when max_rounds is 0.
ChaseResult chase(Graph& graph, const std::vector<ExistentialRule>& rules,
                  std::size_t max_rounds = kDefaultMaxRounds);

class ChainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Properties followed by response_chain.
struct ChainVocabulary {
  std::string requires_response;
  std::string has_first_response;
  std::string has_next_response;

  static ChainVocabulary space_weather();
};

// Follows requiresResponse -> hasFirstResponse -> hasNextResponse* from the
// event. Returns an empty list when no response is attached; throws
// ChainError on a branch or cycle.
std::vector<Term> response_chain(
    const Graph& graph, const Term& solar_event,
    const ChainVocabulary& vocab = ChainVocabulary::space_weather());

}  // namespace swkg
