#include "strans/sst_analysis.hpp"

#include <algorithm>

#include "strans/errors.hpp"

namespace strans {

namespace {

Coefficient add(Coefficient a, Coefficient b, std::optional<Coefficient> cap) {
  if (a == kOmega || b == kOmega) return kOmega;
  if (a > kOmega - 1 - b) {
    if (!cap) throw CapExceeded("flow coefficient overflow in exact arithmetic");
    return kOmega;
  }
  const Coefficient s = a + b;
  return cap && s > *cap ? kOmega : s;
}

Coefficient mul(Coefficient a, Coefficient b, std::optional<Coefficient> cap) {
  if (a == 0 || b == 0) return 0;
  if (a == kOmega || b == kOmega) return kOmega;
  if (a > (kOmega - 1) / b) {
    if (!cap) throw CapExceeded("flow coefficient overflow in exact arithmetic");
    return kOmega;
  }
  const Coefficient p = a * b;
  return cap && p > *cap ? kOmega : p;
}

void add_flow(const Substitution& sigma, std::size_t vars, std::optional<Coefficient> cap,
              FlowMatrix& m, StateId p) {
  for (VarId y = 0; y < vars; ++y)
    for (const Item& it : sigma.images[y])
      if (it.is_var) m.at(p, it.id, y) = add(m.at(p, it.id, y), 1, cap);
}

}  // namespace

FlowMatrix FlowMatrix::identity(std::size_t n, std::size_t l) {
  FlowMatrix m(n, l);
  for (StateId p = 0; p < n; ++p) {
    m.target[p] = static_cast<std::int32_t>(p);
    for (VarId x = 0; x < l; ++x) m.at(p, x, x) = 1;
  }
  return m;
}

bool FlowMatrix::has_omega() const {
  return std::find(coeff.begin(), coeff.end(), kOmega) != coeff.end();
}

FlowMatrix multiply_flow(const FlowMatrix& u, const FlowMatrix& v,
                         std::optional<Coefficient> cap) {
  FlowMatrix out(u.states, u.vars);
  const std::size_t l = u.vars;
  for (StateId p = 0; p < u.states; ++p) {
    if (u.target[p] < 0) continue;
    const auto q = static_cast<StateId>(u.target[p]);
    if (v.target[q] < 0) continue;
    out.target[p] = v.target[q];
    for (VarId x = 0; x < l; ++x)
      for (VarId y = 0; y < l; ++y) {
        const Coefficient a = u.at(p, x, y);
        if (a == 0) continue;
        for (VarId z = 0; z < l; ++z)
          out.at(p, x, z) = add(out.at(p, x, z), mul(a, v.at(q, y, z), cap), cap);
      }
  }
  return out;
}

FlowMatrix flow_of_letter(const SST& machine, Symbol a, std::optional<Coefficient> cap) {
  FlowMatrix m(machine.num_states(), machine.num_variables());
  for (StateId p = 0; p < machine.num_states(); ++p) {
    const auto& next = machine.next(p, a);
    const auto& sigma = machine.update(p, a);
    if (!next || !sigma) continue;
    m.target[p] = static_cast<std::int32_t>(*next);
    add_flow(*sigma, machine.num_variables(), cap, m, p);
  }
  return m;
}

FlowMatrix flow_of_word(const SST& machine, const Word& w, std::optional<Coefficient> cap) {
  FlowMatrix m = FlowMatrix::identity(machine.num_states(), machine.num_variables());
  for (Symbol a : w) m = multiply_flow(m, flow_of_letter(machine, a, cap), cap);
  return m;
}

MonoidClosure<FlowMatrix> ftm_closure(const SST& machine, std::optional<Coefficient> cap,
                                      std::size_t element_cap) {
  std::vector<FlowMatrix> gens;
  for (Symbol a = 0; a < machine.input_alphabet.size(); ++a)
    gens.push_back(flow_of_letter(machine, a, cap));
  return generate_closure<FlowMatrix>(
      gens, [cap](const FlowMatrix& u, const FlowMatrix& v) { return multiply_flow(u, v, cap); },
      FlowMatrix::identity(machine.num_states(), machine.num_variables()), element_cap);
}

bool check_k_bounded(const SST& machine, Coefficient k, std::size_t element_cap) {
  const auto ftm = ftm_closure(machine, k, element_cap);
  return std::none_of(ftm.elements().begin(), ftm.elements().end(),
                      [](const FlowMatrix& m) { return m.has_omega(); });
}

bool check_copyless(const SST& machine) {
  return std::all_of(machine.rho.begin(), machine.rho.end(),
                     [](const std::optional<Substitution>& s) { return !s || is_copyless(*s); });
}

StmElement multiply_stm(const StmElement& u, const StmElement& v) {
  StmElement out;
  const std::size_t n = u.target.size();
  out.target.assign(n, -1);
  out.images.resize(n);
  for (StateId p = 0; p < n; ++p) {
    if (u.target[p] < 0) continue;
    const auto q = static_cast<StateId>(u.target[p]);
    if (v.target[q] < 0) continue;
    out.target[p] = v.target[q];
    auto& imgs = out.images[p];
    imgs.resize(v.images[q].size());
    for (std::size_t z = 0; z < imgs.size(); ++z)
      for (VarId y : v.images[q][z])
        imgs[z].insert(imgs[z].end(), u.images[p][y].begin(), u.images[p][y].end());
  }
  return out;
}

StmElement stm_of_letter(const SST& machine, Symbol a) {
  StmElement e;
  e.target.assign(machine.num_states(), -1);
  e.images.resize(machine.num_states());
  for (StateId p = 0; p < machine.num_states(); ++p) {
    const auto& next = machine.next(p, a);
    const auto& sigma = machine.update(p, a);
    if (!next || !sigma) continue;
    e.target[p] = static_cast<std::int32_t>(*next);
    for (const auto& img : sigma->images) e.images[p].push_back(erase_symbols(img));
  }
  return e;
}

StmElement stm_identity(const SST& machine) {
  StmElement e;
  e.target.resize(machine.num_states());
  e.images.resize(machine.num_states());
  for (StateId p = 0; p < machine.num_states(); ++p) {
    e.target[p] = static_cast<std::int32_t>(p);
    for (VarId x = 0; x < machine.num_variables(); ++x) e.images[p].push_back({x});
  }
  return e;
}

MonoidClosure<StmElement> stm_closure(const SST& machine, Coefficient k,
                                      std::size_t element_cap) {
  if (!check_k_bounded(machine, k, element_cap))
    throw NotBounded("machine is not " + std::to_string(k) + "-bounded");
  std::vector<StmElement> gens;
  for (Symbol a = 0; a < machine.input_alphabet.size(); ++a)
    gens.push_back(stm_of_letter(machine, a));
  return generate_closure<StmElement>(gens, multiply_stm, stm_identity(machine), element_cap);
}

FlowMatrix project_stm_to_ftm(const StmElement& e, std::size_t vars,
                              std::optional<Coefficient> cap) {
  FlowMatrix m(e.target.size(), vars);
  for (StateId p = 0; p < e.target.size(); ++p) {
    m.target[p] = e.target[p];
    if (e.target[p] < 0) continue;
    for (VarId y = 0; y < vars; ++y)
      for (VarId x : e.images[p][y]) m.at(p, x, y) = add(m.at(p, x, y), 1, cap);
  }
  return m;
}

IndexBoundReport check_index_bound(const SST& machine, Coefficient k, std::size_t element_cap) {
  IndexBoundReport r;
  const auto stm = stm_closure(machine, k, element_cap);
  const auto ftm = ftm_closure(machine, k, element_cap);
  const auto ftm_index = aperiodicity_index(ftm);
  if (!ftm_index) throw PreconditionFailed("flow transition monoid is not aperiodic");
  r.ftm_size = ftm.size();
  r.stm_size = stm.size();
  r.ftm_index = *ftm_index;
  r.stm_index = aperiodicity_index(stm);
  r.bound = *ftm_index + (k + 1) * machine.num_variables();
  r.holds = r.stm_index && *r.stm_index <= r.bound;
  return r;
}

Coefficient useful_count(const SST& machine, const FlowMatrix& m, StateId q, VarId x) {
  if (m.target[q] < 0) throw NoRun("flow element has no run from state " + machine.states[q]);
  const auto t = static_cast<StateId>(m.target[q]);
  if (!machine.is_final(t) || !machine.output[t]) return 0;
  Coefficient total = 0;
  for (VarId y = 0; y < machine.num_variables(); ++y) {
    const Coefficient occurrences = count_var(*machine.output[t], y);
    total = add(total, mul(m.at(q, x, y), occurrences, std::nullopt), std::nullopt);
  }
  return total;
}

Coefficient output_multiplicity(const SST& machine, const MonoidClosure<FlowMatrix>& ftm) {
  Coefficient worst = 0;
  for (StateId q : reachable_states(machine))
    for (const FlowMatrix& m : ftm.elements()) {
      if (m.target[q] < 0) continue;
      for (VarId x = 0; x < machine.num_variables(); ++x)
        worst = std::max(worst, useful_count(machine, m, q, x));
    }
  return worst;
}

}  // namespace strans
