#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "strans/alphabet.hpp"

namespace strans {

enum class Direction { LeftToRight, RightToLeft };

struct SequentialTransition {
  StateId target = 0;
  Symbol output = 0;

  auto operator<=>(const SequentialTransition&) const = default;
};

/// Deterministic length-preserving relabeler. Every state is accepting; an
/// undefined transition rejects.
struct SequentialTransducer {
  Direction direction = Direction::LeftToRight;
  Alphabet input_alphabet;
  Alphabet output_alphabet;
  std::vector<std::string> states;
  StateId initial = 0;
  std::vector<std::optional<SequentialTransition>> delta;  // state * |A| + symbol

  SequentialTransducer() = default;
  SequentialTransducer(Direction dir, Alphabet input, Alphabet output,
                       std::vector<std::string> state_names, StateId initial_state);

  std::size_t num_states() const { return states.size(); }
  const std::optional<SequentialTransition>& transition(StateId q, Symbol a) const {
    return delta[q * input_alphabet.size() + a];
  }
  void set_transition(StateId q, Symbol a, SequentialTransition t) {
    delta[q * input_alphabet.size() + a] = t;
  }
  StateId state_id(std::string_view name) const;
  void add(std::string_view from, std::string_view read, std::string_view write,
           std::string_view to);

  bool operator==(const SequentialTransducer&) const = default;
};

/// Output is always in left-to-right order, whatever the reading direction.
std::optional<Word> eval_sequential(const SequentialTransducer& machine, const Word& word);

}  // namespace strans
