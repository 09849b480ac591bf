#include "covkit/io.hpp"

#include <map>
#include <set>
#include <sstream>

namespace covkit {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> significant_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view raw = text.substr(pos, eol - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::istringstream in{std::string(raw)};
    Line line{number, {}};
    for (std::string tok; in >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) out.push_back(std::move(line));
    pos = eol + 1;
  }
  return out;
}

Int integer(const Line& line, const std::string& token) {
  auto v = parse_int(token);
  if (!v) throw ParseError(line.number, "expected an integer, got '" + token + "'");
  return *v;
}

Int natural(const Line& line, const std::string& token) {
  Int v = integer(line, token);
  if (v < 0) throw SemanticError(line.number, "expected a natural number, got " + token);
  return v;
}

std::size_t count(const Line& line, const std::string& token) {
  Int v = natural(line, token);
  if (!v.fits_ulong_p()) throw SemanticError(line.number, "value too large: " + token);
  return v.get_ui();
}

void expect_arity(const Line& line, std::size_t n) {
  if (line.tokens.size() != n)
    throw ParseError(line.number, "'" + line.tokens[0] + "' expects " + std::to_string(n - 1) +
                                      " field(s), got " + std::to_string(line.tokens.size() - 1));
}

IntVector vector_of(const Line& line, std::size_t from, std::size_t dim) {
  if (line.tokens.size() - from != dim)
    throw SemanticError(line.number, "expected " + std::to_string(dim) + " components, got " +
                                         std::to_string(line.tokens.size() - from));
  std::vector<Int> values;
  for (std::size_t i = from; i < line.tokens.size(); ++i) values.push_back(integer(line, line.tokens[i]));
  return IntVector(std::move(values));
}

std::size_t require_dim(const Line& line, std::size_t dim) {
  if (dim == 0) throw SemanticError(line.number, "'dim' must precede '" + line.tokens[0] + "'");
  return dim;
}

std::size_t parse_dim(const Line& line, std::size_t current) {
  expect_arity(line, 2);
  if (current) throw SemanticError(line.number, "repeated 'dim'");
  std::size_t d = count(line, line.tokens[1]);
  if (d == 0) throw SemanticError(line.number, "dimension must be positive");
  return d;
}

[[noreturn]] void unknown(const Line& line) {
  throw ParseError(line.number, "unexpected '" + line.tokens[0] + "'");
}

template <typename F>
auto semantic(std::size_t line, F&& build) {
  try {
    return build();
  } catch (const ModelError& e) {
    throw SemanticError(line, e.what());
  }
}

Vas parse_vas(const std::vector<Line>& lines) {
  std::size_t dim = 0;
  std::vector<IntVector> vectors;
  std::set<IntVector> seen;
  for (const auto& line : lines) {
    const auto& kw = line.tokens[0];
    if (kw == "dim") {
      dim = parse_dim(line, dim);
    } else if (kw == "vec") {
      IntVector v = vector_of(line, 1, require_dim(line, dim));
      if (!seen.insert(v).second) throw SemanticError(line.number, "duplicate vector " + v.str());
      vectors.push_back(std::move(v));
    } else {
      unknown(line);
    }
  }
  if (!dim) throw SemanticError(0, "missing 'dim'");
  return semantic(0, [&] { return Vas(dim, vectors); });
}

Vass parse_vass(const std::vector<Line>& lines) {
  std::size_t dim = 0;
  std::vector<std::string> states;
  std::set<std::string> declared;
  std::vector<std::pair<std::size_t, Vass::Arrow>> arrows;
  for (const auto& line : lines) {
    const auto& kw = line.tokens[0];
    if (kw == "dim") {
      dim = parse_dim(line, dim);
    } else if (kw == "state") {
      expect_arity(line, 2);
      if (!declared.insert(line.tokens[1]).second)
        throw SemanticError(line.number, "duplicate state " + line.tokens[1]);
      states.push_back(line.tokens[1]);
    } else if (kw == "trans") {
      if (line.tokens.size() < 4 || line.tokens[3] != ":")
        throw ParseError(line.number, "expected 'trans SRC DST : z1 ... zD'");
      IntVector update = vector_of(line, 4, require_dim(line, dim));
      arrows.push_back({line.number, {line.tokens[1], line.tokens[2], std::move(update)}});
    } else {
      unknown(line);
    }
  }
  if (!dim) throw SemanticError(0, "missing 'dim'");
  std::set<std::tuple<std::string, std::string, IntVector>> seen;
  for (const auto& [number, a] : arrows) {
    for (const auto& name : {a.source, a.target})
      if (!declared.count(name)) throw SemanticError(number, "undeclared state " + name);
    if (!seen.emplace(a.source, a.target, a.update).second)
      throw SemanticError(number, "duplicate transition");
  }
  std::vector<Vass::Arrow> plain;
  for (auto& [number, a] : arrows) plain.push_back(std::move(a));
  return semantic(0, [&] { return Vass(dim, states, plain); });
}

PetriNet parse_pn(const std::vector<Line>& lines) {
  std::vector<std::string> places;
  std::vector<std::string> transitions;
  std::set<std::string> place_set;
  std::set<std::string> transition_set;
  std::vector<std::pair<std::size_t, PetriNet::Arc>> arcs;
  for (const auto& line : lines) {
    const auto& kw = line.tokens[0];
    if (kw == "place" || kw == "ptrans") {
      expect_arity(line, 2);
      const auto& name = line.tokens[1];
      if (place_set.count(name) || transition_set.count(name))
        throw SemanticError(line.number, "duplicate name " + name);
      (kw == "place" ? place_set : transition_set).insert(name);
      (kw == "place" ? places : transitions).push_back(name);
    } else if (kw == "arc") {
      if (line.tokens.size() != 6 || line.tokens[2] != "->" || line.tokens[4] != ":")
        throw ParseError(line.number, "expected 'arc A -> B : W'");
      arcs.push_back({line.number, {line.tokens[1], line.tokens[3], natural(line, line.tokens[5])}});
    } else {
      unknown(line);
    }
  }
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& [number, arc] : arcs) {
    const bool input = place_set.count(arc.from) && transition_set.count(arc.to);
    const bool output = transition_set.count(arc.from) && place_set.count(arc.to);
    if (!input && !output)
      throw SemanticError(number, "arc " + arc.from + " -> " + arc.to +
                                      " must join a declared place and a declared transition");
    if (!seen.emplace(arc.from, arc.to).second)
      throw SemanticError(number, "duplicate arc " + arc.from + " -> " + arc.to);
  }
  if (places.empty()) throw SemanticError(0, "a Petri net needs at least one place");
  std::vector<PetriNet::Arc> plain;
  for (auto& [number, arc] : arcs) plain.push_back(std::move(arc));
  return semantic(0, [&] { return PetriNet(places, transitions, plain); });
}

Dfa parse_dfa(const std::vector<Line>& lines) {
  std::optional<std::vector<std::string>> alphabet;
  std::optional<std::size_t> states;
  std::optional<std::size_t> initial;
  std::optional<std::vector<std::size_t>> finals;
  std::vector<std::pair<std::size_t, Dfa::Move>> moves;
  auto once = [](const Line& line, bool already) {
    if (already) throw SemanticError(line.number, "repeated '" + line.tokens[0] + "'");
  };
  for (const auto& line : lines) {
    const auto& kw = line.tokens[0];
    if (kw == "alphabet") {
      once(line, alphabet.has_value());
      alphabet.emplace(line.tokens.begin() + 1, line.tokens.end());
      if (std::set<std::string>(alphabet->begin(), alphabet->end()).size() != alphabet->size())
        throw SemanticError(line.number, "repeated alphabet symbol");
    } else if (kw == "states") {
      once(line, states.has_value());
      expect_arity(line, 2);
      states = count(line, line.tokens[1]);
    } else if (kw == "initial") {
      once(line, initial.has_value());
      expect_arity(line, 2);
      initial = count(line, line.tokens[1]);
    } else if (kw == "final") {
      once(line, finals.has_value());
      finals.emplace();
      for (std::size_t i = 1; i < line.tokens.size(); ++i) finals->push_back(count(line, line.tokens[i]));
    } else if (kw == "trans") {
      expect_arity(line, 4);
      moves.push_back({line.number, {count(line, line.tokens[1]), line.tokens[2], count(line, line.tokens[3])}});
    } else {
      unknown(line);
    }
  }
  if (!alphabet) throw SemanticError(0, "missing 'alphabet'");
  if (!states) throw SemanticError(0, "missing 'states'");
  if (!initial) throw SemanticError(0, "missing 'initial'");
  if (!finals) finals.emplace();
  std::set<std::string> symbols(alphabet->begin(), alphabet->end());
  std::set<std::pair<std::size_t, std::string>> used;
  std::vector<Dfa::Move> plain;
  for (const auto& [number, m] : moves) {
    if (m.from < 1 || m.from > *states || m.to < 1 || m.to > *states)
      throw SemanticError(number, "undeclared state in transition");
    if (!symbols.count(m.symbol)) throw SemanticError(number, "symbol " + m.symbol + " is not in the alphabet");
    if (!used.emplace(m.from, m.symbol).second)
      throw SemanticError(number, "nondeterministic transitions from state " + std::to_string(m.from) +
                                      " on " + m.symbol);
    plain.push_back(m);
  }
  return semantic(0, [&] { return Dfa(*alphabet, *states, *initial, *finals, plain); });
}

std::string join(const IntVector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) out += ' ';
    out += v[i].get_str();
  }
  return out;
}

}  // namespace

AnyModel parse_model(std::string_view text) {
  auto lines = significant_lines(text);
  if (lines.empty()) throw ParseError(0, "empty model file");
  const Line& header = lines.front();
  if (header.tokens[0] != "model" || header.tokens.size() != 2)
    throw ParseError(header.number, "expected 'model vas|vass|pn|dfa'");
  std::vector<Line> body(lines.begin() + 1, lines.end());
  const auto& kind = header.tokens[1];
  if (kind == "vas") return parse_vas(body);
  if (kind == "vass") return parse_vass(body);
  if (kind == "pn") return parse_pn(body);
  if (kind == "dfa") return parse_dfa(body);
  throw ParseError(header.number, "unknown model kind '" + kind + "'");
}

std::string model_keyword(const AnyModel& model) {
  static const char* names[] = {"vas", "vass", "pn", "dfa"};
  return names[model.index()];
}

Model as_cover_model(const AnyModel& model) {
  if (const auto* m = std::get_if<Vas>(&model)) return *m;
  if (const auto* m = std::get_if<Vass>(&model)) return *m;
  if (const auto* m = std::get_if<PetriNet>(&model)) return *m;
  throw SemanticError(0, "expected a vas, vass or pn model, got a dfa");
}

std::string serialize_model(const Model& model) {
  return std::visit([](const auto& m) { return serialize_model(AnyModel(m)); }, model);
}

std::string serialize_model(const AnyModel& model) {
  std::ostringstream out;
  out << "model " << model_keyword(model) << '\n';
  if (const auto* vas = std::get_if<Vas>(&model)) {
    out << "dim " << vas->dim() << '\n';
    for (const auto& v : vas->vectors()) out << "vec " << join(v) << '\n';
  } else if (const auto* vass = std::get_if<Vass>(&model)) {
    out << "dim " << vass->dim() << '\n';
    for (const auto& s : vass->states()) out << "state " << s << '\n';
    for (const auto& t : vass->transitions())
      out << "trans " << vass->state_name(t.source) << ' ' << vass->state_name(t.target) << " : "
          << join(t.update) << '\n';
  } else if (const auto* net = std::get_if<PetriNet>(&model)) {
    for (const auto& p : net->places()) out << "place " << p << '\n';
    for (const auto& t : net->transitions()) out << "ptrans " << t << '\n';
    for (std::size_t t = 0; t < net->transitions().size(); ++t) {
      for (std::size_t p = 0; p < net->dim(); ++p)
        if (sgn(net->input(t)[p]) != 0)
          out << "arc " << net->places()[p] << " -> " << net->transitions()[t] << " : "
              << net->input(t)[p].get_str() << '\n';
      for (std::size_t p = 0; p < net->dim(); ++p)
        if (sgn(net->output(t)[p]) != 0)
          out << "arc " << net->transitions()[t] << " -> " << net->places()[p] << " : "
              << net->output(t)[p].get_str() << '\n';
    }
  } else {
    const auto& dfa = std::get<Dfa>(model);
    out << "alphabet";
    for (const auto& a : dfa.alphabet()) out << ' ' << a;
    out << "\nstates " << dfa.state_count() << "\ninitial " << dfa.initial() << "\nfinal";
    for (std::size_t f : dfa.finals()) out << ' ' << f;
    out << '\n';
    for (const auto& m : dfa.moves()) out << "trans " << m.from << ' ' << m.symbol << ' ' << m.to << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Instances

namespace {

Configuration parse_config(const Line& line, const Model& model) {
  if (const auto* vas = std::get_if<Vas>(&model)) {
    IntVector v = vector_of(line, 1, vas->dim());
    if (!v.is_nonnegative()) throw SemanticError(line.number, "configuration must be nonnegative");
    return v;
  }
  if (const auto* vass = std::get_if<Vass>(&model)) {
    if (line.tokens.size() < 3 || line.tokens[2] != ":")
      throw ParseError(line.number, "expected '" + line.tokens[0] + " STATE : v1 ... vD'");
    auto state = vass->find_state(line.tokens[1]);
    if (!state) throw SemanticError(line.number, "undeclared state " + line.tokens[1]);
    IntVector v = vector_of(line, 3, vass->dim());
    if (!v.is_nonnegative()) throw SemanticError(line.number, "configuration must be nonnegative");
    return VassConfig{*state, v};
  }
  const auto& net = std::get<PetriNet>(model);
  IntVector marking(net.dim());
  std::set<std::size_t> seen;
  for (std::size_t i = 1; i < line.tokens.size(); ++i) {
    const auto& tok = line.tokens[i];
    auto eq = tok.find('=');
    if (eq == std::string::npos) throw ParseError(line.number, "expected PLACE=COUNT, got '" + tok + "'");
    auto place = net.find_place(tok.substr(0, eq));
    if (!place) throw SemanticError(line.number, "undeclared place " + tok.substr(0, eq));
    if (!seen.insert(*place).second) throw SemanticError(line.number, "place listed twice: " + tok.substr(0, eq));
    marking[*place] = natural(line, tok.substr(eq + 1));
  }
  return marking;
}

}  // namespace

std::vector<std::pair<Configuration, Configuration>> parse_family(std::string_view text,
                                                                  const Model& model) {
  std::vector<std::pair<Configuration, Configuration>> out;
  std::optional<Configuration> source;
  for (const auto& line : significant_lines(text)) {
    if (line.tokens[0] == "init") {
      source = parse_config(line, model);
    } else if (line.tokens[0] == "target") {
      if (!source) throw SemanticError(line.number, "'target' before any 'init'");
      out.emplace_back(*source, parse_config(line, model));
    } else {
      unknown(line);
    }
  }
  return out;
}

std::pair<Configuration, Configuration> parse_instance(std::string_view text, const Model& model) {
  std::optional<Configuration> source;
  std::optional<Configuration> target;
  for (const auto& line : significant_lines(text)) {
    const auto& kw = line.tokens[0];
    if (kw != "init" && kw != "target") unknown(line);
    auto& slot = kw == "init" ? source : target;
    if (slot) throw SemanticError(line.number, "repeated '" + kw + "'");
    slot = parse_config(line, model);
  }
  if (!source) throw SemanticError(0, "missing 'init'");
  if (!target) throw SemanticError(0, "missing 'target'");
  return {*source, *target};
}

std::string format_config(const Model& model, const Configuration& config) {
  if (const auto* vass = std::get_if<Vass>(&model)) {
    const auto& c = std::get<VassConfig>(config);
    return vass->state_name(c.state) + " : " + join(c.counters);
  }
  const auto& v = std::get<IntVector>(config);
  if (const auto* net = std::get_if<PetriNet>(&model)) {
    std::string out;
    for (std::size_t p = 0; p < net->dim(); ++p) {
      if (sgn(v[p]) == 0) continue;
      if (!out.empty()) out += ' ';
      out += net->places()[p] + "=" + v[p].get_str();
    }
    return out;
  }
  return join(v);
}

std::string serialize_instance(const Model& model, const Configuration& source,
                               const Configuration& target) {
  auto line = [&](const char* kw, const Configuration& c) {
    std::string body = format_config(model, c);
    return std::string(kw) + (body.empty() ? "" : " " + body) + "\n";
  };
  return line("init", source) + line("target", target);
}

// ---------------------------------------------------------------------------
// Witnesses

Witness parse_witness(std::string_view text, const Model& model) {
  auto lines = significant_lines(text);
  if (lines.empty() || lines[0].tokens[0] != "witness")
    throw ParseError(lines.empty() ? 0 : lines[0].number, "expected 'witness LENGTH'");
  expect_arity(lines[0], 2);
  const std::size_t declared = count(lines[0], lines[0].tokens[1]);
  const bool is_vas = std::holds_alternative<Vas>(model);
  const char* keyword = is_vas ? "vec" : "trans";

  Witness out;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens[0] != keyword) unknown(line);
    expect_arity(line, 2);
    const auto& id = line.tokens[1];
    if (const auto* net = std::get_if<PetriNet>(&model)) {
      auto t = net->find_transition(id);
      if (!t) throw SemanticError(line.number, "undeclared transition " + id);
      out.push_back(*t);
      continue;
    }
    std::size_t index = count(line, id);
    std::size_t limit = is_vas ? std::get<Vas>(model).vectors().size()
                               : std::get<Vass>(model).transitions().size();
    if (index >= limit) throw SemanticError(line.number, "step index " + id + " out of range");
    out.push_back(index);
  }
  if (out.size() != declared)
    throw SemanticError(lines[0].number, "declared length " + std::to_string(declared) +
                                             " but found " + std::to_string(out.size()) + " steps");
  return out;
}

std::string serialize_witness(const Model& model, const Witness& witness) {
  std::ostringstream out;
  out << "witness " << witness.size() << '\n';
  for (std::size_t step : witness) {
    if (std::holds_alternative<Vas>(model))
      out << "vec " << step << '\n';
    else if (const auto* net = std::get_if<PetriNet>(&model))
      out << "trans " << net->transitions().at(step) << '\n';
    else
      out << "trans " << step << '\n';
  }
  return out.str();
}

}  // namespace covkit
