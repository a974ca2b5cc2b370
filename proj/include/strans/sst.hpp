#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "strans/alphabet.hpp"
#include "strans/substitution.hpp"

namespace strans {

/// Deterministic streaming string transducer.
///
/// `delta` and `rho` are kept as separate dense tables indexed by
/// state * |A| + symbol so that a document defining an update without a
/// transition (or the converse) can be represented and reported by
/// validate_machine. Well-formed machines have matching domains.
struct SST {
  Alphabet input_alphabet;
  Alphabet output_alphabet;
  std::vector<std::string> states;
  StateId initial = 0;
  std::set<StateId> finals;
  std::vector<std::string> variables;
  std::vector<std::optional<StateId>> delta;
  std::vector<std::optional<Substitution>> rho;
  std::vector<std::optional<ItemString>> output;  // per state

  SST() = default;
  SST(Alphabet input, Alphabet output_symbols, std::vector<std::string> state_names,
      StateId initial_state, std::set<StateId> final_states,
      std::vector<std::string> variable_names);

  std::size_t num_states() const { return states.size(); }
  std::size_t num_variables() const { return variables.size(); }
  std::size_t index(StateId q, Symbol a) const { return q * input_alphabet.size() + a; }
  bool is_final(StateId q) const { return finals.contains(q); }

  const std::optional<StateId>& next(StateId q, Symbol a) const { return delta[index(q, a)]; }
  const std::optional<Substitution>& update(StateId q, Symbol a) const {
    return rho[index(q, a)];
  }

  void set_transition(StateId q, Symbol a, StateId target, Substitution sigma);

  StateId state_id(std::string_view name) const;
  VarId variable_id(std::string_view name) const;

  /// Fixture helper: images are written in the `${X}` expression syntax;
  /// variables missing from `images` are reset to ε.
  void add(std::string_view from, std::string_view read, std::string_view to,
           const std::vector<std::pair<std::string, std::string>>& images);
  void set_output(std::string_view state, std::string_view expression);

  bool operator==(const SST&) const = default;
};

/// Expression syntax shared by fixtures and documents: `${X}` is variable X,
/// `$[s]` is output symbol s, any other code point is a single-code-point
/// output symbol.
ItemString parse_expression(std::string_view text, const std::vector<std::string>& variables,
                            const Alphabet& output_alphabet);
std::string format_expression(const ItemString& text, const std::vector<std::string>& variables,
                              const Alphabet& output_alphabet);

/// Runs the SST; nullopt when the run dies or ends outside the output domain.
std::optional<Word> eval_sst(const SST& machine, const Word& word);

/// σ_r for the run of `word` from `from`, or nullopt when the run dies.
std::optional<std::pair<StateId, Substitution>> run_substitution(const SST& machine,
                                                                  StateId from,
                                                                  const Word& word);

/// States reachable from the initial state.
std::vector<StateId> reachable_states(const SST& machine);

}  // namespace strans
