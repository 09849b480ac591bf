#include "covkit/convert.hpp"

namespace covkit {

// ---------------------------------------------------------------------------
// Petri net -> VASS

std::optional<IntVector> PnToVass::decode(const VassConfig& config) const {
  if (config.state != hub) return std::nullopt;
  return config.counters;
}

std::optional<Witness> PnToVass::lift(const Witness& vass_witness) const {
  if (vass_witness.size() % 2 != 0) return std::nullopt;
  Witness out;
  for (std::size_t i = 0; i < vass_witness.size(); i += 2) {
    bool found = false;
    for (std::size_t t = 0; t < gadget.size() && !found; ++t) {
      if (gadget[t][0] == vass_witness[i] && gadget[t][1] == vass_witness[i + 1]) {
        out.push_back(t);
        found = true;
      }
    }
    if (!found) return std::nullopt;
  }
  return out;
}

PnToVass pn_to_vass(const PetriNet& net) {
  const std::string hub_name = "q0";
  std::vector<std::string> states{hub_name};
  std::vector<Vass::Arrow> arrows;
  IntVector zero(net.dim());
  for (std::size_t t = 0; t < net.transitions().size(); ++t) {
    const std::string mid = "q_" + net.transitions()[t];
    states.push_back(mid);
    arrows.push_back({hub_name, mid, zero - net.input(t)});
    arrows.push_back({mid, hub_name, net.output(t)});
  }
  Vass vass(net.dim(), states, arrows);

  PnToVass out{vass, vass.state_index(hub_name), {}, {}};
  for (std::size_t t = 0; t < net.transitions().size(); ++t) {
    out.middle.push_back(vass.state_index("q_" + net.transitions()[t]));
    out.gadget.push_back({2 * t, 2 * t + 1});
  }
  return out;
}

// ---------------------------------------------------------------------------
// VAS -> Petri net, VAS -> VASS

PetriNet vas_to_pn(const Vas& vas) {
  std::vector<std::string> places;
  for (std::size_t i = 0; i < vas.dim(); ++i) places.push_back("p" + std::to_string(i + 1));
  std::vector<std::string> transitions;
  std::vector<PetriNet::Arc> arcs;
  for (std::size_t v = 0; v < vas.vectors().size(); ++v) {
    const std::string name = "t" + std::to_string(v + 1);
    transitions.push_back(name);
    for (std::size_t i = 0; i < vas.dim(); ++i) {
      const Int& z = vas.vectors()[v][i];
      if (z < 0) arcs.push_back({places[i], name, -z});
      if (z > 0) arcs.push_back({name, places[i], z});
    }
  }
  return PetriNet(places, transitions, arcs);
}

Vass vas_to_vass(const Vas& vas) {
  std::vector<Vass::Arrow> arrows;
  for (const auto& v : vas.vectors()) arrows.push_back({"q", "q", v});
  return Vass(vas.dim(), {"q"}, arrows);
}

// ---------------------------------------------------------------------------
// VASS -> VAS

StateEncoding::StateEncoding(std::size_t state_count) : state_count_(state_count) {}

std::array<Int, 3> StateEncoding::code(std::size_t state) const {
  const Int n(state_count_ + 1);
  const Int j(state + 1);
  return {j, n * (n - j), Int(0)};
}

Int StateEncoding::bound() const {
  const Int n(state_count_ + 1);
  return n * n;
}

std::optional<std::size_t> StateEncoding::decode(const Int& a, const Int& b, const Int& c) const {
  if (c != 0 || a < 1 || a > static_cast<unsigned long>(state_count_)) return std::nullopt;
  const std::size_t state = a.get_ui() - 1;
  if (code(state)[1] != b) return std::nullopt;
  return state;
}

// From code(j) the gadget passes through (0, N−j, N·j) and (N·(N−j), 0, j),
// which are rotations of codes and reachable from no other state's code.
std::array<std::array<Int, 3>, 3> StateEncoding::gadget(std::size_t src, std::size_t dst) const {
  const Int n(state_count_ + 1);
  const Int j(src + 1);
  const Int k(dst + 1);
  return {{
      {-j, -(n - j) * (n - 1), n * j},
      {n * (n - j), -(n - j), j - n * j},
      {k - n * (n - j), n * (n - k), -j},
  }};
}

IntVector VassToVas::encode(const VassConfig& config) const {
  std::vector<Int> values = config.counters.values();
  for (const auto& x : encoding.code(config.state)) values.push_back(x);
  return IntVector(std::move(values));
}

std::optional<VassConfig> VassToVas::decode(const IntVector& config) const {
  if (config.dim() != base_dim + 3) return std::nullopt;
  auto state = encoding.decode(config[base_dim], config[base_dim + 1], config[base_dim + 2]);
  if (!state) return std::nullopt;
  std::vector<Int> counters(config.begin(), config.begin() + static_cast<long>(base_dim));
  return VassConfig{*state, IntVector(std::move(counters))};
}

Witness VassToVas::expand(const Witness& vass_witness) const {
  Witness out;
  out.reserve(3 * vass_witness.size());
  for (std::size_t t : vass_witness)
    for (std::size_t v : gadget.at(t)) out.push_back(v);
  return out;
}

// The two check vectors depend on the source state only. They are emitted
// once per source state, right before the apply vector of its first
// outgoing transition; a VAS is a set and cannot hold them twice.
VassToVas vass_to_vas(const Vass& vass) {
  StateEncoding encoding(vass.states().size());
  const std::size_t d = vass.dim();
  std::vector<IntVector> vectors;
  std::vector<std::array<std::size_t, 3>> gadgets;
  std::vector<std::optional<std::array<std::size_t, 2>>> checks(vass.states().size());
  auto lift = [d](const IntVector* update, const std::array<Int, 3>& tail) {
    std::vector<Int> values = update ? update->values() : std::vector<Int>(d, Int(0));
    for (const auto& x : tail) values.push_back(x);
    return IntVector(std::move(values));
  };
  for (const auto& t : vass.transitions()) {
    auto steps = encoding.gadget(t.source, t.target);
    auto& check = checks[t.source];
    if (!check) {
      vectors.push_back(lift(nullptr, steps[0]));
      vectors.push_back(lift(nullptr, steps[1]));
      check = {vectors.size() - 2, vectors.size() - 1};
    }
    vectors.push_back(lift(&t.update, steps[2]));
    gadgets.push_back({(*check)[0], (*check)[1], vectors.size() - 1});
  }
  return VassToVas{Vas(d + 3, std::move(vectors)), encoding, d, std::move(gadgets)};
}

// ---------------------------------------------------------------------------
// Instance-level dispatch

namespace {

struct Converted {
  Model model;
  std::function<Configuration(const Configuration&)> map;
};

Converted convert_impl(const Model& model, ModelKind to) {
  auto identity = [](const Configuration& c) { return c; };
  if (const auto* vas = std::get_if<Vas>(&model)) {
    switch (to) {
      case ModelKind::Vas: return {*vas, identity};
      case ModelKind::Pn: return {vas_to_pn(*vas), identity};
      case ModelKind::Vass:
        return {vas_to_vass(*vas), [](const Configuration& c) -> Configuration {
                  return VassConfig{0, std::get<IntVector>(c)};
                }};
    }
  }
  if (const auto* vass = std::get_if<Vass>(&model)) {
    if (to == ModelKind::Vass) return {*vass, identity};
    auto conv = std::make_shared<VassToVas>(vass_to_vas(*vass));
    auto map = [conv](const Configuration& c) -> Configuration {
      return conv->encode(std::get<VassConfig>(c));
    };
    if (to == ModelKind::Vas) return {conv->vas, map};
    return {vas_to_pn(conv->vas), map};
  }
  const auto& net = std::get<PetriNet>(model);
  if (to == ModelKind::Pn) return {net, identity};
  auto conv = std::make_shared<PnToVass>(pn_to_vass(net));
  auto to_vass = [conv](const Configuration& c) -> Configuration {
    return conv->encode(std::get<IntVector>(c));
  };
  if (to == ModelKind::Vass) return {conv->vass, to_vass};
  Converted rest = convert_impl(conv->vass, ModelKind::Vas);
  return {rest.model, [to_vass, next = rest.map](const Configuration& c) { return next(to_vass(c)); }};
}

}  // namespace

Model convert_model(const Model& model, ModelKind to) { return convert_impl(model, to).model; }

CoverInstance convert_instance(const CoverInstance& instance, ModelKind to) {
  check_instance(instance);
  Converted c = convert_impl(instance.model, to);
  return CoverInstance{c.model, c.map(instance.source), c.map(instance.target), instance.encoding};
}

}  // namespace covkit
