#include "covkit/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <sstream>

#include "covkit/batch.hpp"
#include "covkit/convert.hpp"
#include "covkit/dfa.hpp"
#include "covkit/engines.hpp"
#include "covkit/io.hpp"
#include "covkit/size.hpp"

namespace covkit {

namespace {

/// Unreadable input or unwritable output; carries its exit code.
struct FileError : std::runtime_error {
  FileError(int code, const std::string& what) : std::runtime_error(what), code(code) {}
  int code;
};

/// Bad flag combination detected after parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError(exit_code::no_input, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw FileError(73, "cannot write " + path);
}

AnyModel load_model(const std::string& path) { return parse_model(read_file(path)); }

CoverInstance load_instance(const std::string& model_path, const std::string& instance_path) {
  Model model = as_cover_model(load_model(model_path));
  auto [source, target] = parse_instance(read_file(instance_path), model);
  return CoverInstance{model, source, target, Encoding::Unary};
}

std::optional<Int> parse_bound(const std::string& text, const char* flag) {
  if (text.empty()) return std::nullopt;
  auto v = parse_int(text);
  if (!v || *v < 0) throw UsageError(std::string(flag) + " expects a natural number");
  return v;
}

const char* verdict_name(VerdictKind k) {
  switch (k) {
    case VerdictKind::Coverable: return "coverable";
    case VerdictKind::NotCoverable: return "not-coverable";
    case VerdictKind::Inconclusive: return "inconclusive";
  }
  return "?";
}

std::string real(double x) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(6) << x;
  return out.str();
}

// ---------------------------------------------------------------------------
// Subcommands

struct CheckArgs {
  std::string engine = "backward";
  std::string max_len;
  std::string max_value;
  std::string witness_out;
  std::string model;
  std::string instance;
};

int run_check(const CheckArgs& a, std::ostream& out) {
  static const std::map<std::string, Engine> engines{
      {"backward", Engine::Backward}, {"karp-miller", Engine::KarpMiller}, {"forward", Engine::Forward}};
  SearchLimits limits;
  if (auto n = parse_bound(a.max_len, "--max-len")) {
    if (!n->fits_ulong_p()) throw UsageError("--max-len is too large");
    limits.max_length = n->get_ui();
  }
  limits.max_component = parse_bound(a.max_value, "--max-value");
  const Engine engine = engines.at(a.engine);
  if (engine == Engine::Forward && !limits.max_length && !limits.max_component)
    throw UsageError("the forward engine needs --max-len or --max-value");

  CoverInstance instance = load_instance(a.model, a.instance);
  Verdict verdict = decide(instance, engine, limits);
  out << "engine: " << a.engine << '\n' << "result: " << verdict_name(verdict.kind) << '\n';
  if (verdict.kind == VerdictKind::Coverable) {
    out << "witness-length: " << verdict.witness.size() << '\n';
    if (!a.witness_out.empty()) write_file(a.witness_out, serialize_witness(instance.model, verdict.witness));
  }
  switch (verdict.kind) {
    case VerdictKind::Coverable: return exit_code::coverable;
    case VerdictKind::NotCoverable: return exit_code::not_coverable;
    default: return exit_code::inconclusive;
  }
}

struct ConvertArgs {
  std::string to;
  std::string model;
  std::string instance;
  std::string output;
  std::string instance_out;
};

int run_convert(const ConvertArgs& a, std::ostream& out) {
  static const std::map<std::string, ModelKind> kinds{
      {"vas", ModelKind::Vas}, {"vass", ModelKind::Vass}, {"pn", ModelKind::Pn}};
  if (!a.instance_out.empty() && a.instance.empty())
    throw UsageError("--instance-out needs an INSTANCE argument");
  const ModelKind kind = kinds.at(a.to);
  if (a.instance.empty()) {
    Model model = as_cover_model(load_model(a.model));
    write_file(a.output, serialize_model(convert_model(model, kind)));
    return 0;
  }
  CoverInstance converted = convert_instance(load_instance(a.model, a.instance), kind);
  write_file(a.output, serialize_model(converted.model));
  std::string inst = serialize_instance(converted.model, converted.source, converted.target);
  if (a.instance_out.empty())
    out << inst;
  else
    write_file(a.instance_out, inst);
  return 0;
}

std::vector<Dfa> load_dfas(const std::vector<std::string>& paths) {
  std::vector<Dfa> dfas;
  for (const auto& path : paths) {
    AnyModel m = load_model(path);
    const auto* dfa = std::get_if<Dfa>(&m);
    if (!dfa) throw SemanticError(0, path + ": expected a dfa model");
    dfas.push_back(*dfa);
  }
  return dfas;
}

struct ReduceArgs {
  std::vector<std::string> dfas;
  std::string output;
  std::string instance_out;
};

int run_reduce(const ReduceArgs& a, std::ostream& out) {
  ReductionOutput r = build_reduction(normalize(load_dfas(a.dfas)));
  write_file(a.output, serialize_model(Model(r.vass)));
  if (!a.instance_out.empty()) write_file(a.instance_out, serialize_instance(r.vass, r.source, r.target));
  out << "automata: " << r.layout.k << '\n'
      << "states-per-automaton: " << r.layout.s << '\n'
      << "dimension: " << r.vass.dim() << '\n'
      << "vass-states: " << r.vass.states().size() << '\n'
      << "vass-transitions: " << r.vass.transitions().size() << '\n';
  return 0;
}

int run_oracle(const std::vector<std::string>& paths, std::ostream& out, std::ostream& err) {
  auto word = product_oracle(load_dfas(paths));
  if (!word) {
    err << "intersection is empty\n";
    return 1;
  }
  out << format_word(*word) << '\n';
  return 0;
}

struct StatsArgs {
  std::string encoding = "unary";
  std::string model;
  std::string instance;
};

int run_stats(const StatsArgs& a, std::ostream& out) {
  AnyModel any = load_model(a.model);
  out << "model: " << model_keyword(any) << '\n';
  if (const auto* dfa = std::get_if<Dfa>(&any)) {
    if (!a.instance.empty()) throw UsageError("a dfa has no instances");
    out << "states: " << dfa->state_count() << '\n'
        << "alphabet-size: " << dfa->alphabet().size() << '\n'
        << "size: " << dfa->size() << '\n';
    return 0;
  }
  Model model = as_cover_model(any);
  SizeReport report;
  if (a.instance.empty()) {
    report = size_report(model);
  } else {
    auto [source, target] = parse_instance(read_file(a.instance), model);
    report = size_report(CoverInstance{model, source, target,
                                       a.encoding == "binary" ? Encoding::Binary : Encoding::Unary});
  }
  if (const auto* vass = std::get_if<Vass>(&model)) out << "states: " << vass->states().size() << '\n';
  if (const auto* net = std::get_if<PetriNet>(&model)) out << "places: " << net->places().size() << '\n';
  out << "dimension: " << report.dimension << '\n'
      << (std::holds_alternative<Vas>(model) ? "vectors: " : "transitions: ") << report.vector_count << '\n'
      << "unary-model-size: " << report.unary_model_size.get_str() << '\n'
      << "binary-model-size: " << real(report.binary_model_size.value) << '\n'
      << "binary-model-size-ceil: " << report.binary_model_size.ceiling.get_str() << '\n';
  if (report.unary_instance_size) {
    out << "unary-instance-size: " << report.unary_instance_size->get_str() << '\n'
        << "binary-instance-size: " << real(report.binary_instance_size->value) << '\n'
        << "binary-instance-size-ceil: " << report.binary_instance_size->ceiling.get_str() << '\n';
  }
  out << "encoding: " << a.encoding << '\n';
  const bool binary = a.encoding == "binary";
  if (report.unary_instance_size)
    out << "size: "
        << (binary ? report.binary_instance_size->ceiling : *report.unary_instance_size).get_str() << '\n';
  else
    out << "size: " << (binary ? report.binary_model_size.ceiling : report.unary_model_size).get_str() << '\n';
  return 0;
}

struct ShortestArgs {
  std::size_t cap = 0;
  std::string model;
  std::string instance;
};

int run_shortest(const ShortestArgs& a, std::ostream& out) {
  auto length = shortest_witness_length(load_instance(a.model, a.instance), a.cap);
  if (!length) {
    out << "exceeded\n";
    return exit_code::inconclusive;
  }
  out << *length << '\n';
  return 0;
}

struct GrowthArgs {
  std::string model;
  std::string targets;
  std::size_t cap = 0;
};

int run_growth(const GrowthArgs& a, std::ostream& out) {
  Model model = as_cover_model(load_model(a.model));
  auto family = parse_family(read_file(a.targets), model);
  for (const auto& row : witness_growth(model, family, a.cap)) {
    out << row.size.get_str() << '\t';
    if (row.length)
      out << *row.length;
    else
      out << "exceeded";
    out << '\n';
  }
  return 0;
}

}  // namespace

int cli_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coverability toolkit for VAS, VASS and Petri nets", "covkit"};
  app.require_subcommand(1);

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Decide coverability of an instance");
  check_cmd->add_option("--engine", check.engine, "backward | karp-miller | forward")
      ->check(CLI::IsMember({"backward", "karp-miller", "forward"}));
  check_cmd->add_option("--max-len", check.max_len, "Forward engine: maximal witness length");
  check_cmd->add_option("--max-value", check.max_value, "Forward engine: maximal counter value");
  check_cmd->add_option("--witness", check.witness_out, "Write the witness to this file");
  check_cmd->add_option("model", check.model)->required();
  check_cmd->add_option("instance", check.instance)->required();

  ConvertArgs convert;
  auto* convert_cmd = app.add_subcommand("convert", "Translate between vas, vass and pn");
  convert_cmd->add_option("--to", convert.to)->required()->check(CLI::IsMember({"vas", "vass", "pn"}));
  convert_cmd->add_option("model", convert.model)->required();
  convert_cmd->add_option("instance", convert.instance);
  convert_cmd->add_option("-o,--output", convert.output)->required();
  convert_cmd->add_option("--instance-out", convert.instance_out);

  ReduceArgs reduce;
  auto* reduce_cmd = app.add_subcommand("reduce-dfa", "Compile DFA intersection to VASS coverability");
  reduce_cmd->add_option("dfas", reduce.dfas)->required();
  reduce_cmd->add_option("-o,--output", reduce.output)->required();
  reduce_cmd->add_option("--emit-instance", reduce.instance_out);

  std::vector<std::string> oracle_dfas;
  auto* oracle_cmd = app.add_subcommand("oracle-intersection", "Shortest word in a DFA intersection");
  oracle_cmd->add_option("dfas", oracle_dfas)->required();

  StatsArgs stats;
  auto* stats_cmd = app.add_subcommand("stats", "Model and instance sizes");
  stats_cmd->add_option("--encoding", stats.encoding)->check(CLI::IsMember({"unary", "binary"}));
  stats_cmd->add_option("model", stats.model)->required();
  stats_cmd->add_option("instance", stats.instance);

  ShortestArgs shortest;
  auto* shortest_cmd = app.add_subcommand("shortest-witness", "Exact shortest covering witness length");
  shortest_cmd->add_option("--cap", shortest.cap)->required();
  shortest_cmd->add_option("model", shortest.model)->required();
  shortest_cmd->add_option("instance", shortest.instance)->required();

  auto* experiment_cmd = app.add_subcommand("experiment", "Experiments over instance families");
  experiment_cmd->require_subcommand(1);
  GrowthArgs growth;
  auto* growth_cmd = experiment_cmd->add_subcommand("witness-growth", "Shortest witness length against n");
  growth_cmd->add_option("model", growth.model)->required();
  growth_cmd->add_option("--targets", growth.targets)->required();
  growth_cmd->add_option("--cap", growth.cap)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : exit_code::usage;
  }

  try {
    if (*check_cmd) return run_check(check, out);
    if (*convert_cmd) return run_convert(convert, out);
    if (*reduce_cmd) return run_reduce(reduce, out);
    if (*oracle_cmd) return run_oracle(oracle_dfas, out, err);
    if (*stats_cmd) return run_stats(stats, out);
    if (*shortest_cmd) return run_shortest(shortest, out);
    if (*growth_cmd) return run_growth(growth, out);
  } catch (const UsageError& e) {
    err << "covkit: " << e.what() << '\n';
    return exit_code::usage;
  } catch (const FileError& e) {
    err << "covkit: " << e.what() << '\n';
    return e.code;
  } catch (const ParseError& e) {
    err << "covkit: parse error: " << e.what() << '\n';
    return exit_code::data_error;
  } catch (const SemanticError& e) {
    err << "covkit: " << e.what() << '\n';
    return exit_code::data_error;
  } catch (const std::invalid_argument& e) {
    // ModelError, ShapeMismatch, ReductionError
    err << "covkit: " << e.what() << '\n';
    return exit_code::data_error;
  }
  return exit_code::usage;
}

}  // namespace covkit
