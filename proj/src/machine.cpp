#include "strans/machine.hpp"

#include "strans/errors.hpp"

namespace strans {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void check_alphabet(const Alphabet& a, const std::string& what, std::vector<std::string>& out) {
  if (a.empty()) out.push_back("empty alphabet: " + what + " alphabet has no symbols");
  for (const auto& name : a.names())
    if (is_reserved_name(name))
      out.push_back("reserved symbol: '" + name + "' used in " + what + " alphabet");
}

void check_word(const Word& w, const Alphabet& a, const std::string& where,
                std::vector<std::string>& out) {
  for (Symbol s : w)
    if (s >= a.size()) out.push_back("output symbol out of range at " + where);
}

void check_items(const ItemString& text, const SST& m, const std::string& where,
                 std::vector<std::string>& out) {
  for (const Item& it : text) {
    if (it.is_var && it.id >= m.num_variables())
      out.push_back("unknown variable at " + where);
    if (!it.is_var && it.id >= m.output_alphabet.size())
      out.push_back("output symbol out of range at " + where);
  }
}

std::string letter_name(const TwoDFT& m, std::size_t column) {
  if (column == m.input_alphabet.size()) return std::string(kBeginName);
  if (column == m.input_alphabet.size() + 1) return std::string(kEndName);
  return m.input_alphabet.name(static_cast<Symbol>(column));
}

void validate(const TwoDFT& m, std::vector<std::string>& out) {
  check_alphabet(m.input_alphabet, "input", out);
  check_alphabet(m.output_alphabet, "output", out);
  if (m.num_states() == 0) {
    out.push_back("no states");
    return;
  }
  if (m.initial >= m.num_states()) out.push_back("initial state out of range");
  for (StateId f : m.finals)
    if (f >= m.num_states()) out.push_back("final state out of range");
  if (m.delta.size() != m.num_states() * m.columns()) {
    out.push_back("transition table has wrong shape");
    return;
  }
  const std::size_t begin_col = m.input_alphabet.size();
  for (StateId q = 0; q < m.num_states(); ++q) {
    for (std::size_t c = 0; c < m.columns(); ++c) {
      const auto& t = m.delta[q * m.columns() + c];
      if (!t) continue;
      const std::string where = "(" + m.states[q] + ", " + letter_name(m, c) + ")";
      if (t->target >= m.num_states()) out.push_back("target state out of range at " + where);
      check_word(t->output, m.output_alphabet, where, out);
      if (c == begin_col && t->move == Move::Left)
        out.push_back("endmarker move: left move on BEGIN at " + where);
      if (c == begin_col + 1 && t->move == Move::Right)
        out.push_back("endmarker move: right move on END at " + where);
      if (c == begin_col && m.start_side == StartSide::Right && !t->output.empty())
        out.push_back("begin output: right-start machine emits on BEGIN at " + where);
    }
  }
}

void validate(const SST& m, std::vector<std::string>& out) {
  check_alphabet(m.input_alphabet, "input", out);
  check_alphabet(m.output_alphabet, "output", out);
  for (const auto& v : m.variables)
    if (is_reserved_name(v)) out.push_back("reserved symbol: '" + v + "' used as a variable");
  if (m.num_states() == 0) {
    out.push_back("no states");
    return;
  }
  if (m.initial >= m.num_states()) out.push_back("initial state out of range");
  for (StateId f : m.finals)
    if (f >= m.num_states()) out.push_back("final state out of range");
  const std::size_t cells = m.num_states() * m.input_alphabet.size();
  if (m.delta.size() != cells || m.rho.size() != cells || m.output.size() != m.num_states()) {
    out.push_back("transition table has wrong shape");
    return;
  }
  for (StateId q = 0; q < m.num_states(); ++q) {
    for (Symbol a = 0; a < m.input_alphabet.size(); ++a) {
      const std::string where = "(" + m.states[q] + ", " + m.input_alphabet.name(a) + ")";
      const auto& next = m.next(q, a);
      const auto& sigma = m.update(q, a);
      if (sigma && !next) out.push_back("update domain: update without transition at " + where);
      if (next && !sigma) out.push_back("update domain: transition without update at " + where);
      if (next && *next >= m.num_states())
        out.push_back("target state out of range at " + where);
      if (!sigma) continue;
      if (sigma->num_variables() != m.num_variables()) {
        out.push_back("update domain: substitution not defined on exactly the variables at " +
                      where);
        continue;
      }
      for (const auto& img : sigma->images) check_items(img, m, where, out);
    }
    if (m.output[q]) {
      if (!m.is_final(q))
        out.push_back("output domain: output defined on non-final state " + m.states[q]);
      check_items(*m.output[q], m, "output of " + m.states[q], out);
    }
  }
}

void validate(const SequentialTransducer& m, std::vector<std::string>& out) {
  check_alphabet(m.input_alphabet, "input", out);
  check_alphabet(m.output_alphabet, "output", out);
  if (m.num_states() == 0) {
    out.push_back("no states");
    return;
  }
  if (m.initial >= m.num_states()) out.push_back("initial state out of range");
  if (m.delta.size() != m.num_states() * m.input_alphabet.size()) {
    out.push_back("transition table has wrong shape");
    return;
  }
  for (StateId q = 0; q < m.num_states(); ++q) {
    for (Symbol a = 0; a < m.input_alphabet.size(); ++a) {
      const auto& t = m.transition(q, a);
      if (!t) continue;
      const std::string where = "(" + m.states[q] + ", " + m.input_alphabet.name(a) + ")";
      if (t->target >= m.num_states()) out.push_back("target state out of range at " + where);
      if (t->output >= m.output_alphabet.size())
        out.push_back("output symbol out of range at " + where);
    }
  }
}

void validate(const Pipeline& p, std::vector<std::string>& out) {
  for (std::size_t i = 0; i < p.stages().size(); ++i) {
    std::vector<std::string> inner;
    std::visit([&](const auto& m) { validate(m, inner); }, p.stages()[i]);
    for (auto& v : inner) out.push_back("stage " + std::to_string(i) + ": " + v);
  }
}

}  // namespace

const Alphabet& input_alphabet(const Machine& m) {
  return std::visit(Overloaded{[](const Pipeline& p) -> const Alphabet& {
                                 return p.input_alphabet();
                               },
                               [](const auto& x) -> const Alphabet& { return x.input_alphabet; }},
                    m);
}

const Alphabet& output_alphabet(const Machine& m) {
  return std::visit(Overloaded{[](const Pipeline& p) -> const Alphabet& {
                                 return p.output_alphabet();
                               },
                               [](const auto& x) -> const Alphabet& { return x.output_alphabet; }},
                    m);
}

std::optional<Word> evaluate(const Machine& m, const Word& word) {
  return std::visit(
      Overloaded{[&](const TwoDFT& x) { return eval_2dft(x, word); },
                 [&](const SST& x) { return eval_sst(x, word); },
                 [&](const SequentialTransducer& x) { return eval_sequential(x, word); },
                 [&](const Pipeline& x) { return eval_pipeline(x, word); }},
      m);
}

std::string kind_name(const Machine& m) {
  static const char* names[] = {"2dft", "sst", "sequential", "pipeline"};
  return names[m.index()];
}

std::vector<std::string> validate_machine(const Machine& m) {
  std::vector<std::string> out;
  std::visit([&](const auto& x) { validate(x, out); }, m);
  return out;
}

}  // namespace strans
