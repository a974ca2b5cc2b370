#include "strans/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "strans/behaviors.hpp"
#include "strans/corpus.hpp"
#include "strans/document.hpp"
#include "strans/equiv.hpp"
#include "strans/errors.hpp"
#include "strans/k_to_1.hpp"
#include "strans/sst_analysis.hpp"
#include "strans/sst_to_2dft.hpp"
#include "strans/twodft_to_sst.hpp"

namespace strans {

namespace {

// A usage problem detected after argument parsing (wrong machine kind, bad file).
struct UsageError : Error {
  using Error::Error;
};

// Built-in corpus names take precedence over paths.
Machine load_machine(const std::string& source) {
  if (auto m = corpus::find(source)) return *m;
  std::ifstream in(source, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + source + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_machine(buf.str()).machine;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

template <class E>
std::string index_text(const MonoidClosure<E>& m) {
  auto n = aperiodicity_index(m);
  return n ? std::to_string(*n) : "none";
}

struct AnalyzeOptions {
  std::size_t element_cap = kDefaultElementCap;
  Coefficient kmax = 4;
};

// Returns whether the machine was found aperiodic.
bool analyze_2dft(const TwoDFT& m, const AnalyzeOptions& opt, std::ostream& out,
                  const std::string& prefix) {
  out << prefix << "states: " << m.num_states() << "\n";
  const auto monoid = transition_monoid_2dft(m, opt.element_cap);
  const auto index = aperiodicity_index(monoid);
  out << prefix << "behavior_monoid_size: " << monoid.size() << "\n";
  out << prefix << "behavior_monoid_index: " << index_text(monoid) << "\n";
  out << prefix << "aperiodic: " << yes_no(index.has_value()) << "\n";
  return index.has_value();
}

bool analyze_sequential(const SequentialTransducer& m, const AnalyzeOptions& opt,
                        std::ostream& out, const std::string& prefix) {
  out << prefix << "direction: "
      << (m.direction == Direction::LeftToRight ? "left-to-right" : "right-to-left") << "\n";
  out << prefix << "states: " << m.num_states() << "\n";
  const auto monoid = transition_monoid_sequential(m, opt.element_cap);
  const auto index = aperiodicity_index(monoid);
  out << prefix << "transition_monoid_size: " << monoid.size() << "\n";
  out << prefix << "transition_monoid_index: " << index_text(monoid) << "\n";
  out << prefix << "aperiodic: " << yes_no(index.has_value()) << "\n";
  return index.has_value();
}

bool analyze_sst(const SST& m, const AnalyzeOptions& opt, std::ostream& out) {
  out << "states: " << m.num_states() << "\n";
  out << "variables: " << m.num_variables() << "\n";
  out << "copyless: " << yes_no(check_copyless(m)) << "\n";
  std::optional<Coefficient> bound;
  std::string sweep;
  for (Coefficient k = 1; k <= opt.kmax; ++k) {
    const bool ok = check_k_bounded(m, k, opt.element_cap);
    if (ok && !bound) bound = k;
    sweep += (k > 1 ? " " : "") + std::to_string(k) + "=" + yes_no(ok);
  }
  out << "k_bounded_sweep: " << sweep << "\n";
  out << "k_bound: " << (bound ? std::to_string(*bound) : "none") << "\n";

  // The capped FTM is finite either way; without a bound it is only an
  // approximation saturated at kmax.
  const auto ftm = ftm_closure(m, bound ? *bound : opt.kmax, opt.element_cap);
  const auto ftm_index = aperiodicity_index(ftm);
  out << "ftm_cap: " << (bound ? *bound : opt.kmax) << "\n";
  out << "ftm_exact: " << yes_no(bound.has_value()) << "\n";
  out << "ftm_size: " << ftm.size() << "\n";
  out << "ftm_index: " << index_text(ftm) << "\n";
  bool aperiodic = ftm_index.has_value();
  if (bound) {
    const auto stm = stm_closure(m, *bound, opt.element_cap);
    const auto stm_index = aperiodicity_index(stm);
    out << "stm_size: " << stm.size() << "\n";
    out << "stm_index: " << index_text(stm) << "\n";
    aperiodic = aperiodic && stm_index.has_value();
    if (ftm_index && stm_index)
      out << "stm_index_bound: " << *ftm_index + (*bound + 1) * m.num_variables() << "\n";
  } else {
    out << "stm_size: unbounded\n";
  }
  out << "aperiodic: " << yes_no(aperiodic) << "\n";
  return aperiodic;
}

int cmd_analyze(const std::string& source, const AnalyzeOptions& opt, std::ostream& out) {
  const Machine m = load_machine(source);
  out << "kind: " << kind_name(m) << "\n";
  bool aperiodic = true;
  if (auto* t = std::get_if<TwoDFT>(&m)) {
    aperiodic = analyze_2dft(*t, opt, out, "");
  } else if (auto* s = std::get_if<SST>(&m)) {
    aperiodic = analyze_sst(*s, opt, out);
  } else if (auto* q = std::get_if<SequentialTransducer>(&m)) {
    aperiodic = analyze_sequential(*q, opt, out, "");
  } else {
    const auto& p = std::get<Pipeline>(m);
    out << "stages: " << p.stages().size() << "\n";
    for (std::size_t i = 0; i < p.stages().size(); ++i) {
      const std::string prefix = "stage_" + std::to_string(i) + ".";
      const Stage& st = p.stages()[i];
      if (auto* t = std::get_if<TwoDFT>(&st)) {
        out << prefix << "kind: 2dft\n";
        aperiodic = analyze_2dft(*t, opt, out, prefix) && aperiodic;
      } else {
        out << prefix << "kind: sequential\n";
        aperiodic =
            analyze_sequential(std::get<SequentialTransducer>(st), opt, out, prefix) && aperiodic;
      }
    }
    out << "aperiodic: " << yes_no(aperiodic) << "\n";
  }
  return aperiodic ? kExitOk : kExitNegative;
}

int cmd_run(const std::string& source, const std::string& text, std::ostream& out) {
  const Machine m = load_machine(source);
  Word w;
  try {
    w = parse_word(input_alphabet(m), text);
  } catch (const MalformedMachine& e) {
    throw UsageError(std::string("bad input word: ") + e.what());
  }
  const auto result = evaluate(m, w);
  if (!result) {
    out << "reject\n";
    return kExitNegative;
  }
  out << format_word(output_alphabet(m), *result) << "\n";
  return kExitOk;
}

struct ConvertOptions {
  std::string target;
  Coefficient k = 0;
  bool skip_useful_vars = false;
  std::size_t element_cap = kDefaultElementCap;
  Coefficient kmax = 4;
  std::string output;
};

template <class M>
const M& require(const Machine& m, const char* kind, const std::string& target) {
  if (auto* x = std::get_if<M>(&m)) return *x;
  throw UsageError("--to " + target + " needs a " + kind + " input, got " + kind_name(m));
}

int cmd_convert(const std::string& source, const ConvertOptions& opt, std::ostream& out) {
  const Machine m = load_machine(source);
  Machine result;
  if (opt.target == "2dft-pipeline") {
    result = sst_to_2dft(require<SST>(m, "sst", opt.target), opt.skip_useful_vars);
  } else if (opt.target == "copyless-sst") {
    const auto conv = twodft_to_copyless_sst_detailed(require<TwoDFT>(m, "2dft", opt.target));
    out << "forest_vertices_max: " << conv.max_vertices << "\n";
    result = conv.sst;
  } else {
    const SST& t = require<SST>(m, "sst", opt.target);
    Coefficient k = opt.k;
    if (k == 0) {
      for (Coefficient j = 1; j <= opt.kmax && k == 0; ++j)
        if (check_k_bounded(t, j, opt.element_cap)) k = j;
      if (k == 0) throw NotBounded("not k-bounded for any k up to " + std::to_string(opt.kmax));
    }
    const auto conv = k_to_1_detailed(t, k, opt.element_cap);
    out << "k: " << k << "\n";
    out << "monoid_size: " << conv.monoid_size << "\n";
    result = conv.sst;
  }
  out << "kind: " << kind_name(result) << "\n";
  if (auto* s = std::get_if<SST>(&result)) {
    out << "states: " << s->num_states() << "\n";
    out << "variables: " << s->num_variables() << "\n";
  } else if (auto* p = std::get_if<Pipeline>(&result)) {
    out << "stages: " << p->stages().size() << "\n";
  }
  const std::string text = serialize_machine(result);
  if (opt.output.empty() || opt.output == "-") {
    out << text;
  } else {
    std::ofstream file(opt.output, std::ios::binary);
    if (!file) throw UsageError("cannot write '" + opt.output + "'");
    file << text;
    out << "written: " << opt.output << "\n";
  }
  return kExitOk;
}

struct EquivOptions {
  std::size_t max_len = 6;
  std::size_t samples = 0;
  std::size_t sample_max_len = 40;
  std::uint64_t seed = kDefaultSeed;
};

int cmd_check_equiv(const std::string& a, const std::string& b, const EquivOptions& opt,
                    std::ostream& out) {
  const Machine m1 = load_machine(a);
  const Machine m2 = load_machine(b);
  EquivVerdict v = check_equiv(m1, m2, opt.max_len);
  if (v.equal && opt.samples > 0) {
    const std::size_t checked = v.words_checked;
    v = check_equiv_sampled(m1, m2, opt.samples, opt.max_len + 1,
                            std::max(opt.sample_max_len, opt.max_len + 1), opt.seed);
    v.words_checked += checked;
  }
  if (v.equal) {
    out << "equal\n";
    out << "words_checked: " << v.words_checked << "\n";
    return kExitOk;
  }
  const auto show = [](const Machine& m, const Output& o) {
    return o ? "\"" + format_word(output_alphabet(m), *o) + "\"" : std::string("reject");
  };
  out << "counterexample: \"" << format_word(input_alphabet(m1), v.witness) << "\"\n";
  out << "left: " << show(m1, v.left) << "\n";
  out << "right: " << show(m2, v.right) << "\n";
  out << "words_checked: " << v.words_checked << "\n";
  return kExitNegative;
}

int cmd_examples(const std::string& dir, std::ostream& out) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw UsageError("cannot create '" + dir + "': " + ec.message());
  for (const auto& [name, machine] : corpus::all()) {
    const auto path = std::filesystem::path(dir) / (name + ".json");
    std::ofstream file(path, std::ios::binary);
    if (!file) throw UsageError("cannot write '" + path.string() + "'");
    file << serialize_machine(MachineDocument{machine, name, {}});
    out << "written: " << path.string() << "\n";
  }
  return kExitOk;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-way transducers and streaming string transducers", "strans"};
  app.require_subcommand(1);

  std::string source, source2, word, dir;
  AnalyzeOptions analyze;
  ConvertOptions convert;
  EquivOptions equiv;

  auto* run = app.add_subcommand("run", "Evaluate a machine on a word");
  run->add_option("machine", source, "Machine file or built-in name")->required();
  run->add_option("word", word, "Input word")->required();

  auto* an = app.add_subcommand("analyze", "Report monoids, aperiodicity and boundedness");
  an->add_option("machine", source, "Machine file or built-in name")->required();
  an->add_option("--cap", analyze.element_cap, "Monoid element cap")->capture_default_str();
  an->add_option("--kmax", analyze.kmax, "Largest k tried by the k-bounded sweep")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  auto* cv = app.add_subcommand("convert", "Convert between machine models");
  cv->add_option("machine", source, "Machine file or built-in name")->required();
  cv->add_option("--to", convert.target, "Target model")
      ->required()
      ->check(CLI::IsMember({"2dft-pipeline", "copyless-sst", "1bounded-sst"}));
  cv->add_option("--k", convert.k, "Bound of the input SST (default: smallest k up to --kmax)");
  cv->add_option("--kmax", convert.kmax, "Largest k tried when --k is omitted")
      ->capture_default_str();
  cv->add_option("--cap", convert.element_cap, "Monoid element cap")->capture_default_str();
  cv->add_flag("--skip-useful-vars", convert.skip_useful_vars,
               "Omit the useful-variables stage (copyless inputs only)");
  cv->add_option("-o,--output", convert.output, "Output file (default: stdout)");

  auto* eq = app.add_subcommand("check-equiv", "Compare two machines on all short words");
  eq->add_option("m1", source, "First machine")->required();
  eq->add_option("m2", source2, "Second machine")->required();
  eq->add_option("--max-len", equiv.max_len, "Largest word length checked exhaustively")
      ->capture_default_str();
  eq->add_option("--samples", equiv.samples, "Random longer words checked afterwards")
      ->capture_default_str();
  eq->add_option("--sample-max-len", equiv.sample_max_len, "Length limit of sampled words")
      ->capture_default_str();
  eq->add_option("--seed", equiv.seed, "Sampling seed")->capture_default_str();

  auto* ex = app.add_subcommand("examples", "Write the built-in machines as documents");
  ex->add_option("--emit", dir, "Target directory")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*run) return cmd_run(source, word, out);
    if (*an) return cmd_analyze(source, analyze, out);
    if (*cv) return cmd_convert(source, convert, out);
    if (*eq) return cmd_check_equiv(source, source2, equiv, out);
    return cmd_examples(dir, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ValidationError& e) {
    err << "invalid machine:\n";
    for (const auto& v : e.violations()) err << "  " << v << "\n";
    return kExitUsage;
  } catch (const AlphabetMismatch& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    // Precondition failures of the analyses are negative verdicts.
    out << "error: " << e.what() << "\n";
    return kExitNegative;
  }
}

}  // namespace strans
