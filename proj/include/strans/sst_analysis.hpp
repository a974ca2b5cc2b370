#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "strans/monoid.hpp"
#include "strans/sst.hpp"

namespace strans {

using Coefficient = std::uint64_t;
inline constexpr Coefficient kOmega = std::numeric_limits<Coefficient>::max();

/// Element of the flow transition monoid. Per source state p: target[p] is
/// the state reached (-1 for ⊥) and at(p, X, Y) counts the occurrences of X
/// in the run's σ(Y). Coefficients above the cap are kOmega.
struct FlowMatrix {
  std::size_t states = 0;
  std::size_t vars = 0;
  std::vector<std::int32_t> target;
  std::vector<Coefficient> coeff;

  FlowMatrix() = default;
  FlowMatrix(std::size_t n, std::size_t l) : states(n), vars(l), target(n, -1), coeff(n * l * l) {}
  static FlowMatrix identity(std::size_t n, std::size_t l);

  Coefficient at(StateId p, VarId x, VarId y) const { return coeff[(p * vars + x) * vars + y]; }
  Coefficient& at(StateId p, VarId x, VarId y) { return coeff[(p * vars + x) * vars + y]; }
  bool has_omega() const;

  auto operator<=>(const FlowMatrix&) const = default;
};

/// Coefficient arithmetic: saturating at `cap` when set, exact otherwise
/// (exact overflow of 64 bits raises CapExceeded).
FlowMatrix multiply_flow(const FlowMatrix& u, const FlowMatrix& v,
                         std::optional<Coefficient> cap);

FlowMatrix flow_of_letter(const SST& machine, Symbol a, std::optional<Coefficient> cap);

/// Flow matrix of an arbitrary run substitution (used by oracles and the
/// projection from the substitution monoid).
FlowMatrix flow_of_word(const SST& machine, const Word& w, std::optional<Coefficient> cap);

/// cap = nullopt computes the exact monoid, which is infinite for unbounded
/// machines and then ends in CapExceeded.
MonoidClosure<FlowMatrix> ftm_closure(const SST& machine, std::optional<Coefficient> cap,
                                      std::size_t element_cap = kDefaultElementCap);

bool check_k_bounded(const SST& machine, Coefficient k,
                     std::size_t element_cap = kDefaultElementCap);
bool check_copyless(const SST& machine);

/// Element of the substitution transition monoid: per source state, the
/// reached state (-1 for ⊥) and the letter-erased substitution.
struct StmElement {
  std::vector<std::int32_t> target;
  std::vector<std::vector<std::vector<VarId>>> images;  // [p][Y] -> variables of σ̃(Y)

  auto operator<=>(const StmElement&) const = default;
};

StmElement multiply_stm(const StmElement& u, const StmElement& v);
StmElement stm_of_letter(const SST& machine, Symbol a);
StmElement stm_identity(const SST& machine);

/// Throws NotBounded unless check_k_bounded(machine, k).
MonoidClosure<StmElement> stm_closure(const SST& machine, Coefficient k,
                                      std::size_t element_cap = kDefaultElementCap);

FlowMatrix project_stm_to_ftm(const StmElement& e, std::size_t vars,
                              std::optional<Coefficient> cap);

struct IndexBoundReport {
  std::size_t ftm_size = 0;
  std::size_t stm_size = 0;
  std::size_t ftm_index = 0;
  std::optional<std::size_t> stm_index;  // nullopt: STM not aperiodic
  std::size_t bound = 0;
  bool holds = false;
};

/// Throws NotBounded when not k-bounded, PreconditionFailed when the FTM is
/// not aperiodic.
IndexBoundReport check_index_bound(const SST& machine, Coefficient k,
                                   std::size_t element_cap = kDefaultElementCap);

/// Occurrences of X in the final output contributed through state q when
/// the rest of the input has flow m. Zero when m leads to a state without
/// output. Throws NoRun when m has no run from q.
Coefficient useful_count(const SST& machine, const FlowMatrix& m, StateId q, VarId x);

/// Largest number of times one variable value of a reachable configuration
/// is copied into the final output, over all suffix flows. 1-bounded
/// machines whose multiplicity is ≤ 1 are those the output follower handles.
Coefficient output_multiplicity(const SST& machine, const MonoidClosure<FlowMatrix>& ftm);

}  // namespace strans
