#include "covkit/model.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace covkit {

Vas::Vas(std::size_t dim, std::vector<IntVector> vectors) : dim_(dim), vectors_(std::move(vectors)) {
  if (dim_ == 0) throw ModelError("VAS dimension must be positive");
  std::unordered_set<IntVector, IntVectorHash> seen;
  for (const auto& v : vectors_) {
    if (v.dim() != dim_)
      throw ModelError("vector " + v.str() + " does not have dimension " + std::to_string(dim_));
    if (!seen.insert(v).second) throw ModelError("duplicate vector " + v.str());
  }
}

Vass::Vass(std::size_t dim, std::vector<std::string> states, const std::vector<Arrow>& arrows)
    : dim_(dim), states_(std::move(states)) {
  if (dim_ == 0) throw ModelError("VASS dimension must be positive");
  if (states_.empty()) throw ModelError("VASS needs at least one state");
  std::sort(states_.begin(), states_.end());
  if (std::adjacent_find(states_.begin(), states_.end()) != states_.end())
    throw ModelError("duplicate state " + *std::adjacent_find(states_.begin(), states_.end()));

  outgoing_.resize(states_.size());
  incoming_.resize(states_.size());
  std::set<std::tuple<std::size_t, std::size_t, std::vector<Int>>> seen;
  transitions_.reserve(arrows.size());
  for (const auto& a : arrows) {
    if (a.update.dim() != dim_)
      throw ModelError("transition " + a.source + " -> " + a.target + " has update of dimension " +
                       std::to_string(a.update.dim()));
    std::size_t src = state_index(a.source);
    std::size_t dst = state_index(a.target);
    if (!seen.emplace(src, dst, a.update.values()).second)
      throw ModelError("duplicate transition " + a.source + " -> " + a.target + " : " +
                       a.update.str());
    outgoing_[src].push_back(transitions_.size());
    incoming_[dst].push_back(transitions_.size());
    transitions_.push_back({src, dst, a.update});
  }
}

std::optional<std::size_t> Vass::find_state(const std::string& name) const {
  auto it = std::lower_bound(states_.begin(), states_.end(), name);
  if (it == states_.end() || *it != name) return std::nullopt;
  return static_cast<std::size_t>(it - states_.begin());
}

std::size_t Vass::state_index(const std::string& name) const {
  if (auto i = find_state(name)) return *i;
  throw ModelError("undeclared state " + name);
}

static std::optional<std::size_t> find_name(const std::vector<std::string>& names,
                                            const std::string& name) {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names.begin());
}

PetriNet::PetriNet(std::vector<std::string> places, std::vector<std::string> transitions,
                   const std::vector<Arc>& arcs)
    : places_(std::move(places)), transitions_(std::move(transitions)) {
  if (places_.empty()) throw ModelError("Petri net needs at least one place");
  std::set<std::string> names;
  for (const auto& p : places_)
    if (!names.insert(p).second) throw ModelError("duplicate place or transition name " + p);
  for (const auto& t : transitions_)
    if (!names.insert(t).second) throw ModelError("duplicate place or transition name " + t);

  input_.assign(transitions_.size(), IntVector(places_.size()));
  output_.assign(transitions_.size(), IntVector(places_.size()));
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& arc : arcs) {
    if (sgn(arc.weight) < 0) throw ModelError("negative flow on arc " + arc.from + " -> " + arc.to);
    if (!seen.emplace(arc.from, arc.to).second)
      throw ModelError("duplicate arc " + arc.from + " -> " + arc.to);
    if (auto p = find_place(arc.from)) {
      auto t = find_transition(arc.to);
      if (!t) throw ModelError("arc " + arc.from + " -> " + arc.to + ": undeclared transition");
      input_[*t][*p] = arc.weight;
    } else if (auto t = find_transition(arc.from)) {
      auto p = find_place(arc.to);
      if (!p) throw ModelError("arc " + arc.from + " -> " + arc.to + ": undeclared place");
      output_[*t][*p] = arc.weight;
    } else {
      throw ModelError("arc " + arc.from + " -> " + arc.to + ": undeclared source");
    }
  }
}

std::optional<std::size_t> PetriNet::find_place(const std::string& name) const {
  return find_name(places_, name);
}

std::optional<std::size_t> PetriNet::find_transition(const std::string& name) const {
  return find_name(transitions_, name);
}

std::string to_string(const Vass& vass, const VassConfig& config) {
  return vass.state_name(config.state) + config.counters.str();
}

namespace {

std::size_t model_dim(const Model& m) {
  return std::visit([](const auto& x) { return x.dim(); }, m);
}

void check_config(const Model& model, const Configuration& c, const char* what) {
  const bool is_vass = std::holds_alternative<Vass>(model);
  if (is_vass != std::holds_alternative<VassConfig>(c))
    throw ShapeMismatch(std::string(what) + " configuration kind does not match the model");
  const IntVector& v = is_vass ? std::get<VassConfig>(c).counters : std::get<IntVector>(c);
  if (v.dim() != model_dim(model))
    throw ShapeMismatch(std::string(what) + " has dimension " + std::to_string(v.dim()) +
                        ", model has " + std::to_string(model_dim(model)));
  if (!v.is_nonnegative())
    throw ShapeMismatch(std::string(what) + " configuration has a negative component");
  if (is_vass && std::get<VassConfig>(c).state >= std::get<Vass>(model).states().size())
    throw ShapeMismatch(std::string(what) + " state out of range");
}

}  // namespace

void check_instance(const CoverInstance& instance) {
  check_config(instance.model, instance.source, "source");
  check_config(instance.model, instance.target, "target");
}

IntVector vas_step(const Vas& vas, const IntVector& config, std::size_t vector_index) {
  if (vector_index >= vas.vectors().size())
    throw StepError(StepErrorKind::BadIndex, "no vector with index " + std::to_string(vector_index));
  IntVector next = config + vas.vectors()[vector_index];
  if (!next.is_nonnegative())
    throw StepError(StepErrorKind::NegativeCounter,
                    config.str() + " + " + vas.vectors()[vector_index].str() + " is negative");
  return next;
}

VassConfig vass_step(const Vass& vass, const VassConfig& config, std::size_t transition) {
  if (transition >= vass.transitions().size())
    throw StepError(StepErrorKind::BadIndex, "no transition with index " + std::to_string(transition));
  const auto& t = vass.transitions()[transition];
  if (t.source != config.state)
    throw StepError(StepErrorKind::WrongState, "transition " + std::to_string(transition) +
                                                   " does not leave " + vass.state_name(config.state));
  IntVector next = config.counters + t.update;
  if (!next.is_nonnegative())
    throw StepError(StepErrorKind::NegativeCounter,
                    to_string(vass, config) + " + " + t.update.str() + " is negative");
  return {t.target, std::move(next)};
}

std::optional<VassConfig> try_vass_step(const Vass& vass, const VassConfig& config,
                                        std::size_t transition) {
  const auto& t = vass.transitions()[transition];
  if (t.source != config.state) return std::nullopt;
  for (std::size_t i = 0; i < config.counters.dim(); ++i)
    if (config.counters[i] + t.update[i] < 0) return std::nullopt;
  return VassConfig{t.target, config.counters + t.update};
}

IntVector pn_fire(const PetriNet& net, const IntVector& marking, std::size_t transition) {
  if (transition >= net.transitions().size())
    throw StepError(StepErrorKind::BadIndex, "no transition with index " + std::to_string(transition));
  if (!leq(net.input(transition), marking))
    throw StepError(StepErrorKind::NotEnabled,
                    net.transitions()[transition] + " is not enabled at " + marking.str());
  return marking - net.input(transition) + net.output(transition);
}

bool covers(const IntVector& a, const IntVector& b) { return leq(b, a); }

bool covers(const VassConfig& a, const VassConfig& b) {
  // Shape is checked before the state comparison.
  bool counters = leq(b.counters, a.counters);
  return a.state == b.state && counters;
}

bool covers(const Configuration& a, const Configuration& b) {
  if (a.index() != b.index()) throw ShapeMismatch("cannot compare VAS and VASS configurations");
  return std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        return covers(x, std::get<T>(b));
      },
      a);
}

WitnessCheck validate_witness(const CoverInstance& instance, const Witness& witness) {
  check_instance(instance);
  WitnessCheck result;
  result.final_config = instance.source;
  for (std::size_t i = 0; i < witness.size(); ++i) {
    try {
      result.final_config = std::visit(
          [&](const auto& model) -> Configuration {
            using M = std::decay_t<decltype(model)>;
            if constexpr (std::is_same_v<M, Vas>)
              return vas_step(model, std::get<IntVector>(result.final_config), witness[i]);
            else if constexpr (std::is_same_v<M, Vass>)
              return vass_step(model, std::get<VassConfig>(result.final_config), witness[i]);
            else
              return pn_fire(model, std::get<IntVector>(result.final_config), witness[i]);
          },
          instance.model);
    } catch (const StepError&) {
      result.failed_step = i;
      return result;
    }
  }
  result.valid = covers(result.final_config, instance.target);
  if (!result.valid) result.failed_step = witness.size();
  return result;
}

}  // namespace covkit
