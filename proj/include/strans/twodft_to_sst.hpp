#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "strans/sst.hpp"
#include "strans/twodft.hpp"

namespace strans {

/// Equivalent machine that starts on the right endmarker and never emits on
/// the left one. A rewind state walks to ⊢ first; pending ⊢-output is carried
/// by annotated states and emitted on the next transition.
TwoDFT normalize_2dft(const TwoDFT& machine);

using StateSet = std::uint64_t;

/// Vertices of a merge forest in canonical order (size, then member list);
/// phi[i] is the target state of the tree holding vertex i. The forest edges
/// are implied: the parent of a vertex is its smallest strict superset.
struct SstState {
  std::vector<StateSet> vertices;
  std::vector<StateId> phi;

  auto operator<=>(const SstState&) const = default;
};

/// Variable j is the label of vertex j.
struct StepResult {
  SstState next;
  Substitution update;  // over old labels, one image per variable of the pool
};

/// Smallest vertex containing q, if any.
std::optional<std::size_t> smallest_vertex(const SstState& s, StateId q);
std::optional<std::size_t> parent_vertex(const SstState& s, std::size_t v);
/// Labels on the path from vertex v to its root.
ItemString label_path(const SstState& s, std::size_t v);

/// One induction step of the merge forest over `letter`. Only right-to-right
/// runs starting in a state of `tracked` are recorded. `pool` is the number
/// of variables in the produced substitution. Throws InvariantViolation if
/// the result is not a merge forest.
StepResult forest_step(const SstState& s, Letter letter, const TwoDFT& machine,
                       StateSet tracked, std::size_t pool);

std::string forest_name(const SstState& s, const TwoDFT& machine);
void check_forest(const SstState& s);

struct CopylessConversion {
  SST sst;
  TwoDFT normalized;
  StateSet tracked = 0;
  std::vector<SstState> states;  // aligned with sst.states
  std::size_t max_vertices = 0;
};

/// Merge-forest construction. Throws StateCapExceeded above (2n)^{2n} states.
CopylessConversion twodft_to_copyless_sst_detailed(const TwoDFT& machine);
SST twodft_to_copyless_sst(const TwoDFT& machine);

}  // namespace strans
