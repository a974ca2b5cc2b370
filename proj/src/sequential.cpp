#include "strans/sequential.hpp"

#include <algorithm>

#include "strans/errors.hpp"

namespace strans {

SequentialTransducer::SequentialTransducer(Direction dir, Alphabet input, Alphabet output,
                                           std::vector<std::string> state_names,
                                           StateId initial_state)
    : direction(dir),
      input_alphabet(std::move(input)),
      output_alphabet(std::move(output)),
      states(std::move(state_names)),
      initial(initial_state),
      delta(states.size() * input_alphabet.size()) {}

StateId SequentialTransducer::state_id(std::string_view name) const {
  auto it = std::find(states.begin(), states.end(), name);
  if (it == states.end()) throw MalformedMachine("unknown state '" + std::string(name) + "'");
  return static_cast<StateId>(it - states.begin());
}

void SequentialTransducer::add(std::string_view from, std::string_view read,
                               std::string_view write, std::string_view to) {
  set_transition(state_id(from), input_alphabet.at(read),
                 {state_id(to), output_alphabet.at(write)});
}

std::optional<Word> eval_sequential(const SequentialTransducer& machine, const Word& word) {
  Word out(word.size());
  StateId q = machine.initial;
  const std::size_t n = word.size();
  for (std::size_t step = 0; step < n; ++step) {
    const std::size_t i = machine.direction == Direction::LeftToRight ? step : n - 1 - step;
    const auto& t = machine.transition(q, word[i]);
    if (!t) return std::nullopt;
    out[i] = t->output;
    q = t->target;
  }
  return out;
}

}  // namespace strans
