#include "strans/document.hpp"

#include <json.hpp>
#include <set>

#include "strans/errors.hpp"

namespace strans {

namespace {

using Json = nlohmann::ordered_json;

// Field access with the JSON path kept for error messages.
class Cursor {
 public:
  Cursor(const Json& j, std::string path) : j_(j), path_(std::move(path)) {}

  const std::string& path() const { return path_; }
  const Json& json() const { return j_; }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(path_, message); }

  bool has(const char* key) const { return j_.is_object() && j_.contains(key); }

  Cursor operator[](const char* key) const {
    if (!j_.is_object()) fail("expected an object");
    if (!j_.contains(key)) fail(std::string("missing field '") + key + "'");
    return {j_.at(key), child(key)};
  }

  std::string str() const {
    if (!j_.is_string()) fail("expected a string");
    return j_.get<std::string>();
  }

  long long integer() const {
    if (!j_.is_number_integer()) fail("expected an integer");
    return j_.get<long long>();
  }

  std::vector<Cursor> items() const {
    if (!j_.is_array()) fail("expected an array");
    std::vector<Cursor> out;
    for (std::size_t i = 0; i < j_.size(); ++i)
      out.emplace_back(j_[i], path_ + "[" + std::to_string(i) + "]");
    return out;
  }

  std::vector<std::pair<std::string, Cursor>> members() const {
    if (!j_.is_object()) fail("expected an object");
    std::vector<std::pair<std::string, Cursor>> out;
    for (const auto& [k, v] : j_.items()) out.emplace_back(k, Cursor(v, child(k)));
    return out;
  }

  std::vector<std::string> strings() const {
    std::vector<std::string> out;
    for (const auto& c : items()) out.push_back(c.str());
    return out;
  }

 private:
  std::string child(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

  const Json& j_;
  std::string path_;
};

template <class F>
auto guarded(const Cursor& at, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const MalformedMachine& e) {
    at.fail(e.what());
  }
}

Alphabet alphabet(const Cursor& c) {
  return guarded(c, [&] { return Alphabet(c.strings()); });
}

StateId state_index(const std::vector<std::string>& states, const Cursor& c) {
  const std::string name = c.str();
  auto it = std::find(states.begin(), states.end(), name);
  if (it == states.end()) c.fail("unknown state '" + name + "'");
  return static_cast<StateId>(it - states.begin());
}

std::vector<std::string> state_list(const Cursor& c) {
  auto states = c.strings();
  std::set<std::string> seen;
  for (const auto& s : states)
    if (!seen.insert(s).second) c.fail("duplicate state '" + s + "'");
  return states;
}

std::set<StateId> finals(const std::vector<std::string>& states, const Cursor& c) {
  std::set<StateId> out;
  for (const auto& f : c.items()) out.insert(state_index(states, f));
  return out;
}

Word output_word(const Alphabet& out, const Cursor& c) {
  return guarded(c, [&] {
    Word w;
    for (const Item& it : parse_expression(c.str(), {}, out)) w.push_back(it.id);
    return w;
  });
}

std::string word_text(const Alphabet& out, const Word& w) {
  ItemString items;
  for (Symbol s : w) items.push_back(Item::sym(s));
  return format_expression(items, {}, out);
}

[[noreturn]] void duplicate(const Cursor& c) { c.fail("duplicate transition"); }

TwoDFT parse_2dft(const Cursor& doc) {
  const auto states = state_list(doc["states"]);
  StartSide side = StartSide::Left;
  if (doc.has("start_side")) {
    const auto s = doc["start_side"].str();
    if (s == "right")
      side = StartSide::Right;
    else if (s != "left")
      doc["start_side"].fail("expected \"left\" or \"right\"");
  }
  TwoDFT m(alphabet(doc["input_alphabet"]), alphabet(doc["output_alphabet"]), states,
           state_index(states, doc["initial"]), finals(states, doc["finals"]), side);
  for (const auto& t : doc["transitions"].items()) {
    const StateId from = state_index(states, t["from"]);
    const Cursor read = t["read"];
    const Letter letter = guarded(read, [&] { return m.letter_id(read.str()); });
    const long long move = t["move"].integer();
    if (move < -1 || move > 1) t["move"].fail("move must be -1, 0 or 1");
    if (m.transition(from, letter)) duplicate(t);
    m.set_transition(from, letter,
                     {output_word(m.output_alphabet, t["output"]), state_index(states, t["to"]),
                      static_cast<Move>(move)});
  }
  return m;
}

SST parse_sst(const Cursor& doc) {
  const auto states = state_list(doc["states"]);
  auto variables = doc["variables"].strings();
  if (std::set<std::string>(variables.begin(), variables.end()).size() != variables.size())
    doc["variables"].fail("duplicate variable");
  SST m(alphabet(doc["input_alphabet"]), alphabet(doc["output_alphabet"]), states,
        state_index(states, doc["initial"]), finals(states, doc["finals"]), variables);
  std::set<std::pair<StateId, Symbol>> seen;
  for (const auto& t : doc["transitions"].items()) {
    const StateId from = state_index(states, t["from"]);
    const Cursor read = t["read"];
    const Symbol a = guarded(read, [&] { return m.input_alphabet.at(read.str()); });
    if (!seen.emplace(from, a).second) duplicate(t);
    if (t.has("to")) m.delta[m.index(from, a)] = state_index(states, t["to"]);
    if (t.has("update")) {
      Substitution sigma = Substitution::reset(m.num_variables());
      for (const auto& [var, text] : t["update"].members()) {
        const VarId x = guarded(text, [&] { return m.variable_id(var); });
        sigma.images[x] = guarded(
            text, [&] { return parse_expression(text.str(), m.variables, m.output_alphabet); });
      }
      m.rho[m.index(from, a)] = std::move(sigma);
    }
  }
  if (doc.has("output"))
    for (const auto& [state, text] : doc["output"].members()) {
      const auto q = static_cast<StateId>(
          std::find(states.begin(), states.end(), state) - states.begin());
      if (q == states.size()) text.fail("unknown state '" + state + "'");
      m.output[q] =
          guarded(text, [&] { return parse_expression(text.str(), m.variables, m.output_alphabet); });
    }
  return m;
}

SequentialTransducer parse_sequential(const Cursor& doc) {
  const auto states = state_list(doc["states"]);
  Direction dir = Direction::LeftToRight;
  const auto d = doc["direction"].str();
  if (d == "right-to-left")
    dir = Direction::RightToLeft;
  else if (d != "left-to-right")
    doc["direction"].fail("expected \"left-to-right\" or \"right-to-left\"");
  SequentialTransducer m(dir, alphabet(doc["input_alphabet"]), alphabet(doc["output_alphabet"]),
                         states, state_index(states, doc["initial"]));
  for (const auto& t : doc["transitions"].items()) {
    const StateId from = state_index(states, t["from"]);
    const Cursor read = t["read"];
    const Cursor write = t["write"];
    const Symbol a = guarded(read, [&] { return m.input_alphabet.at(read.str()); });
    if (m.transition(from, a)) duplicate(t);
    m.set_transition(from, a,
                     {state_index(states, t["to"]),
                      guarded(write, [&] { return m.output_alphabet.at(write.str()); })});
  }
  return m;
}

Machine parse_any(const Cursor& doc);

Pipeline parse_pipeline(const Cursor& doc) {
  std::vector<Stage> stages;
  for (const auto& s : doc["stages"].items()) {
    Machine m = parse_any(s);
    if (auto* t = std::get_if<TwoDFT>(&m))
      stages.emplace_back(std::move(*t));
    else if (auto* q = std::get_if<SequentialTransducer>(&m))
      stages.emplace_back(std::move(*q));
    else
      s.fail("pipeline stages must be 2dft or sequential");
  }
  std::optional<std::string> end;
  if (doc.has("end_token")) end = doc["end_token"].str();
  try {
    return Pipeline(std::move(stages), end);
  } catch (const AlphabetMismatch& e) {
    doc.fail(e.what());
  }
}

Machine parse_any(const Cursor& doc) {
  const auto kind = doc["kind"].str();
  if (kind == "2dft") return parse_2dft(doc);
  if (kind == "sst") return parse_sst(doc);
  if (kind == "sequential") return parse_sequential(doc);
  if (kind == "pipeline") return parse_pipeline(doc);
  doc["kind"].fail("unknown kind '" + kind + "'");
}

Json write(const TwoDFT& m) {
  Json j;
  j["kind"] = "2dft";
  j["input_alphabet"] = m.input_alphabet.names();
  j["output_alphabet"] = m.output_alphabet.names();
  j["states"] = m.states;
  j["initial"] = m.states[m.initial];
  Json finals = Json::array();
  for (StateId f : m.finals) finals.push_back(m.states[f]);
  j["finals"] = finals;
  j["start_side"] = m.start_side == StartSide::Left ? "left" : "right";
  Json ts = Json::array();
  for (StateId q = 0; q < m.num_states(); ++q)
    for (std::size_t c = 0; c < m.columns(); ++c) {
      const auto& t = m.delta[q * m.columns() + c];
      if (!t) continue;
      const std::string read = c < m.input_alphabet.size()
                                   ? m.input_alphabet.name(static_cast<Symbol>(c))
                                   : std::string(c == m.input_alphabet.size() ? kBeginName
                                                                              : kEndName);
      ts.push_back({{"from", m.states[q]},
                    {"read", read},
                    {"output", word_text(m.output_alphabet, t->output)},
                    {"to", m.states[t->target]},
                    {"move", static_cast<int>(t->move)}});
    }
  j["transitions"] = ts;
  return j;
}

Json write(const SST& m) {
  Json j;
  j["kind"] = "sst";
  j["input_alphabet"] = m.input_alphabet.names();
  j["output_alphabet"] = m.output_alphabet.names();
  j["states"] = m.states;
  j["initial"] = m.states[m.initial];
  Json finals = Json::array();
  for (StateId f : m.finals) finals.push_back(m.states[f]);
  j["finals"] = finals;
  j["variables"] = m.variables;
  Json ts = Json::array();
  for (StateId q = 0; q < m.num_states(); ++q)
    for (Symbol a = 0; a < m.input_alphabet.size(); ++a) {
      const auto& next = m.next(q, a);
      const auto& sigma = m.update(q, a);
      if (!next && !sigma) continue;
      Json t = {{"from", m.states[q]}, {"read", m.input_alphabet.name(a)}};
      if (next) t["to"] = m.states[*next];
      if (sigma) {
        Json u = Json::object();
        for (VarId x = 0; x < sigma->num_variables() && x < m.num_variables(); ++x)
          if (!sigma->images[x].empty())
            u[m.variables[x]] = format_expression(sigma->images[x], m.variables, m.output_alphabet);
        t["update"] = u;
      }
      ts.push_back(t);
    }
  j["transitions"] = ts;
  Json out = Json::object();
  for (StateId q = 0; q < m.num_states(); ++q)
    if (m.output[q])
      out[m.states[q]] = format_expression(*m.output[q], m.variables, m.output_alphabet);
  j["output"] = out;
  return j;
}

Json write(const SequentialTransducer& m) {
  Json j;
  j["kind"] = "sequential";
  j["direction"] = m.direction == Direction::LeftToRight ? "left-to-right" : "right-to-left";
  j["input_alphabet"] = m.input_alphabet.names();
  j["output_alphabet"] = m.output_alphabet.names();
  j["states"] = m.states;
  j["initial"] = m.states[m.initial];
  Json ts = Json::array();
  for (StateId q = 0; q < m.num_states(); ++q)
    for (Symbol a = 0; a < m.input_alphabet.size(); ++a)
      if (const auto& t = m.transition(q, a))
        ts.push_back({{"from", m.states[q]},
                      {"read", m.input_alphabet.name(a)},
                      {"write", m.output_alphabet.name(t->output)},
                      {"to", m.states[t->target]}});
  j["transitions"] = ts;
  return j;
}

Json write(const Pipeline& p) {
  Json j;
  j["kind"] = "pipeline";
  if (p.end_token()) j["end_token"] = *p.end_token();
  Json stages = Json::array();
  for (const Stage& s : p.stages()) std::visit([&](const auto& m) { stages.push_back(write(m)); }, s);
  j["stages"] = stages;
  return j;
}

}  // namespace

MachineDocument parse_machine(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte), e.what());
  }
  const Cursor doc(j, "");
  MachineDocument out{parse_any(doc), {}, {}};
  if (doc.has("name")) out.name = doc["name"].str();
  if (doc.has("notes")) out.notes = doc["notes"].str();
  if (auto violations = validate_machine(out.machine); !violations.empty())
    throw ValidationError(std::move(violations));
  return out;
}

std::string serialize_machine(const MachineDocument& doc) {
  Json j = std::visit([](const auto& m) { return write(m); }, doc.machine);
  Json out;
  out["kind"] = j["kind"];
  if (!doc.name.empty()) out["name"] = doc.name;
  if (!doc.notes.empty()) out["notes"] = doc.notes;
  for (auto& [k, v] : j.items())
    if (k != "kind") out[k] = v;
  return out.dump(2) + "\n";
}

std::string serialize_machine(const Machine& m) { return serialize_machine({m, {}, {}}); }

}  // namespace strans
