#include "strans/sst.hpp"

#include <algorithm>
#include <deque>

#include "strans/errors.hpp"

namespace strans {

SST::SST(Alphabet input, Alphabet output_symbols, std::vector<std::string> state_names,
         StateId initial_state, std::set<StateId> final_states,
         std::vector<std::string> variable_names)
    : input_alphabet(std::move(input)),
      output_alphabet(std::move(output_symbols)),
      states(std::move(state_names)),
      initial(initial_state),
      finals(std::move(final_states)),
      variables(std::move(variable_names)),
      delta(states.size() * input_alphabet.size()),
      rho(states.size() * input_alphabet.size()),
      output(states.size()) {}

void SST::set_transition(StateId q, Symbol a, StateId target, Substitution sigma) {
  delta[index(q, a)] = target;
  rho[index(q, a)] = std::move(sigma);
}

StateId SST::state_id(std::string_view name) const {
  auto it = std::find(states.begin(), states.end(), name);
  if (it == states.end()) throw MalformedMachine("unknown state '" + std::string(name) + "'");
  return static_cast<StateId>(it - states.begin());
}

VarId SST::variable_id(std::string_view name) const {
  auto it = std::find(variables.begin(), variables.end(), name);
  if (it == variables.end())
    throw MalformedMachine("unknown variable '" + std::string(name) + "'");
  return static_cast<VarId>(it - variables.begin());
}

void SST::add(std::string_view from, std::string_view read, std::string_view to,
              const std::vector<std::pair<std::string, std::string>>& images) {
  Substitution sigma = Substitution::reset(num_variables());
  for (const auto& [var, text] : images)
    sigma.images[variable_id(var)] = parse_expression(text, variables, output_alphabet);
  set_transition(state_id(from), input_alphabet.at(read), state_id(to), std::move(sigma));
}

void SST::set_output(std::string_view state, std::string_view expression) {
  output[state_id(state)] = parse_expression(expression, variables, output_alphabet);
}

ItemString parse_expression(std::string_view text, const std::vector<std::string>& variables,
                            const Alphabet& output_alphabet) {
  ItemString out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == '$') {
      if (i + 1 >= text.size() || (text[i + 1] != '{' && text[i + 1] != '['))
        throw MalformedMachine("stray '$' in expression '" + std::string(text) + "'");
      const char close = text[i + 1] == '{' ? '}' : ']';
      const auto end = text.find(close, i + 2);
      if (end == std::string_view::npos)
        throw MalformedMachine("unterminated escape in expression '" + std::string(text) + "'");
      const auto name = text.substr(i + 2, end - i - 2);
      if (close == '}') {
        auto it = std::find(variables.begin(), variables.end(), name);
        if (it == variables.end())
          throw MalformedMachine("unknown variable '" + std::string(name) + "'");
        out.push_back(Item::var(static_cast<VarId>(it - variables.begin())));
      } else {
        out.push_back(Item::sym(output_alphabet.at(name)));
      }
      i = end + 1;
      continue;
    }
    const auto cps = split_code_points(text.substr(i, 4));
    const std::string& cp = cps.front();
    out.push_back(Item::sym(output_alphabet.at(cp)));
    i += cp.size();
  }
  return out;
}

std::string format_expression(const ItemString& text, const std::vector<std::string>& variables,
                              const Alphabet& output_alphabet) {
  std::string out;
  for (const Item& it : text) {
    if (it.is_var) {
      out += "${" + variables.at(it.id) + "}";
      continue;
    }
    const std::string& name = output_alphabet.name(it.id);
    if (split_code_points(name).size() == 1 && name != "$")
      out += name;
    else
      out += "$[" + name + "]";
  }
  return out;
}

std::optional<Word> eval_sst(const SST& machine, const Word& word) {
  std::vector<Word> values(machine.num_variables());
  StateId q = machine.initial;
  for (Symbol a : word) {
    const auto& next = machine.next(q, a);
    const auto& sigma = machine.update(q, a);
    if (!next || !sigma) return std::nullopt;
    std::vector<Word> fresh(values.size());
    for (VarId x = 0; x < values.size(); ++x) fresh[x] = evaluate(values, sigma->images[x]);
    values = std::move(fresh);
    q = *next;
  }
  if (!machine.is_final(q) || !machine.output[q]) return std::nullopt;
  return evaluate(values, *machine.output[q]);
}

std::optional<std::pair<StateId, Substitution>> run_substitution(const SST& machine,
                                                                  StateId from,
                                                                  const Word& word) {
  Substitution sigma = Substitution::identity(machine.num_variables());
  StateId q = from;
  for (Symbol a : word) {
    const auto& next = machine.next(q, a);
    const auto& step = machine.update(q, a);
    if (!next || !step) return std::nullopt;
    sigma = compose(sigma, *step);
    q = *next;
  }
  return std::make_pair(q, std::move(sigma));
}

std::vector<StateId> reachable_states(const SST& machine) {
  std::vector<bool> seen(machine.num_states());
  std::vector<StateId> order;
  std::deque<StateId> queue;
  if (machine.num_states() == 0) return order;
  seen[machine.initial] = true;
  queue.push_back(machine.initial);
  while (!queue.empty()) {
    StateId q = queue.front();
    queue.pop_front();
    order.push_back(q);
    for (Symbol a = 0; a < machine.input_alphabet.size(); ++a) {
      if (auto n = machine.next(q, a); n && !seen[*n]) {
        seen[*n] = true;
        queue.push_back(*n);
      }
    }
  }
  std::sort(order.begin(), order.end());
  return order;
}

}  // namespace strans
