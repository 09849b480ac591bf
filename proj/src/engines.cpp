#include "covkit/engines.hpp"

#include <deque>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "covkit/convert.hpp"

namespace covkit {

// ---------------------------------------------------------------------------
// UpwardBasis

bool UpwardBasis::contains(std::size_t state, const IntVector& value) const {
  for (const auto& e : entries_.at(state))
    if (leq(e.value, value)) return true;
  return false;
}

bool UpwardBasis::insert(std::size_t state, IntVector value, std::size_t tag,
                         std::vector<std::size_t>* removed) {
  auto& list = entries_.at(state);
  for (const auto& e : list)
    if (leq(e.value, value)) return false;
  std::size_t kept = 0;
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (leq(value, list[i].value)) {
      if (removed) removed->push_back(list[i].tag);
      continue;
    }
    if (kept != i) list[kept] = std::move(list[i]);
    ++kept;
  }
  list.resize(kept);
  list.push_back({std::move(value), tag});
  return true;
}

std::size_t UpwardBasis::size() const {
  std::size_t n = 0;
  for (const auto& l : entries_) n += l.size();
  return n;
}

bool UpwardBasis::is_antichain() const {
  for (const auto& list : entries_)
    for (std::size_t i = 0; i < list.size(); ++i)
      for (std::size_t j = 0; j < list.size(); ++j)
        if (i != j && leq(list[i].value, list[j].value)) return false;
  return true;
}

IntVector pre_basis(const IntVector& m, const IntVector& update) {
  IntVector out = m - update;
  for (std::size_t i = 0; i < out.dim(); ++i)
    if (out[i] < 0) out[i] = 0;
  return out;
}

// ---------------------------------------------------------------------------
// Backward fixpoint

namespace {

struct Derivation {
  std::size_t state;
  IntVector value;
  // Transition and successor element this one was derived from; absent for
  // the target.
  std::optional<std::size_t> via;
  std::optional<std::size_t> successor;
};

Witness replay_derivations(const std::vector<Derivation>& arena, std::size_t start) {
  Witness out;
  for (std::optional<std::size_t> id = start; id && arena[*id].via; id = arena[*id].successor)
    out.push_back(*arena[*id].via);
  return out;
}

}  // namespace

Verdict backward_cover(const Vass& vass, const VassConfig& source, const VassConfig& target,
                       const BackwardOptions& options) {
  Verdict verdict;
  std::vector<Derivation> arena{{target.state, target.counters, std::nullopt, std::nullopt}};
  std::vector<bool> alive{true};
  UpwardBasis basis(vass.states().size());
  basis.insert(target.state, target.counters, 0);

  auto found = [&](std::size_t id) {
    verdict.kind = VerdictKind::Coverable;
    verdict.witness = replay_derivations(arena, id);
    verdict.explored = arena.size();
    return verdict;
  };
  if (options.stop_at_source && covers(source, target)) return found(0);

  std::deque<std::size_t> worklist{0};
  std::vector<std::size_t> removed;
  while (!worklist.empty()) {
    const std::size_t id = worklist.front();
    worklist.pop_front();
    if (!alive[id]) continue;
    for (std::size_t t : vass.incoming(arena[id].state)) {
      const auto& tr = vass.transitions()[t];
      IntVector pre = pre_basis(arena[id].value, tr.update);
      if (basis.contains(tr.source, pre)) continue;
      const std::size_t next = arena.size();
      arena.push_back({tr.source, pre, t, id});
      alive.push_back(true);
      removed.clear();
      basis.insert(tr.source, std::move(pre), next, &removed);
      for (std::size_t r : removed) alive[r] = false;
      worklist.push_back(next);
      if (options.stop_at_source && source.state == tr.source &&
          leq(arena[next].value, source.counters))
        return found(next);
    }
  }

  verdict.explored = arena.size();
  for (const auto& e : basis.entries(source.state)) {
    if (leq(e.value, source.counters)) return found(e.tag);
  }
  verdict.kind = VerdictKind::NotCoverable;
  verdict.basis = std::move(basis);
  return verdict;
}

bool is_backward_fixpoint(const Vass& vass, const UpwardBasis& basis, const VassConfig& target) {
  if (basis.state_count() != vass.states().size()) return false;
  if (!basis.is_antichain() || !basis.contains(target)) return false;
  for (std::size_t q = 0; q < basis.state_count(); ++q)
    for (const auto& e : basis.entries(q))
      for (std::size_t t : vass.incoming(q)) {
        const auto& tr = vass.transitions()[t];
        if (!basis.contains(tr.source, pre_basis(e.value, tr.update))) return false;
      }
  return true;
}

// ---------------------------------------------------------------------------
// ω-vectors

OmegaVector to_omega(const IntVector& v) {
  OmegaVector out;
  out.reserve(v.dim());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

bool leq(const OmegaVector& a, const OmegaVector& b) {
  if (a.size() != b.size()) throw ShapeMismatch("ω-vector dimension mismatch");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] <= b[i])) return false;
  return true;
}

bool covers(const OmegaVector& a, const IntVector& b) {
  if (a.size() != b.dim()) throw ShapeMismatch("ω-vector dimension mismatch");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_omega() && a[i].value() < b[i]) return false;
  return true;
}

bool has_omega(const OmegaVector& v) {
  for (const auto& x : v)
    if (x.is_omega()) return true;
  return false;
}

std::string to_string(const OmegaVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += v[i].is_omega() ? "ω" : v[i].value().get_str();
  }
  return out + ")";
}

// ---------------------------------------------------------------------------
// Karp–Miller

namespace {

std::optional<OmegaVector> omega_step(const OmegaVector& label, const IntVector& update) {
  OmegaVector out;
  out.reserve(label.size());
  for (std::size_t i = 0; i < label.size(); ++i) {
    OmegaInt x = label[i] + update[i];
    if (!x.is_omega() && x.value() < 0) return std::nullopt;
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace

KarpMillerTree KarpMillerTree::build(const Vass& vass, const VassConfig& source) {
  KarpMillerTree tree;
  tree.nodes_.push_back({source.state, to_omega(source.counters), std::nullopt, std::nullopt, true});
  // A node whose (state, label) was met before is a leaf: the earlier node
  // is expanded and covers everything this one would.
  std::set<std::pair<std::size_t, std::string>> seen{{source.state, to_string(tree.nodes_[0].label)}};

  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t n = queue.front();
    queue.pop_front();
    for (std::size_t t : vass.outgoing(tree.nodes_[n].state)) {
      const auto& tr = vass.transitions()[t];
      auto next = omega_step(tree.nodes_[n].label, tr.update);
      if (!next) continue;
      OmegaVector label = std::move(*next);

      // Accelerate against strictly smaller ancestors on the path.
      for (std::optional<std::size_t> a = n; a; a = tree.nodes_[*a].parent) {
        const Node& anc = tree.nodes_[*a];
        if (anc.state != tr.target || !leq(anc.label, label) || anc.label == label) continue;
        for (std::size_t i = 0; i < label.size(); ++i)
          if (anc.label[i] < label[i]) label[i] = OmegaInt::omega();
      }

      const bool fresh = seen.emplace(tr.target, to_string(label)).second;
      const std::size_t id = tree.nodes_.size();
      tree.nodes_.push_back({tr.target, std::move(label), n, t, fresh});
      if (fresh) queue.push_back(id);
    }
  }
  return tree;
}

std::optional<std::size_t> KarpMillerTree::covering_node(const VassConfig& target) const {
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const Node& n = nodes_[i];
    if (n.state != target.state || !covers(n.label, target.counters)) continue;
    if (!has_omega(n.label)) return i;  // nodes are in BFS order
    if (!best) best = i;
  }
  return best;
}

Witness KarpMillerTree::path_to(std::size_t node) const {
  Witness out;
  for (std::optional<std::size_t> n = node; n && nodes_[*n].via; n = nodes_[*n].parent)
    out.push_back(*nodes_[*n].via);
  return {out.rbegin(), out.rend()};
}

Verdict karp_miller_cover(const Vass& vass, const VassConfig& source, const VassConfig& target) {
  KarpMillerTree tree = KarpMillerTree::build(vass, source);
  Verdict verdict;
  verdict.explored = tree.nodes().size();
  auto node = tree.covering_node(target);
  if (!node) {
    verdict.kind = VerdictKind::NotCoverable;
    return verdict;
  }
  verdict.kind = VerdictKind::Coverable;
  if (!has_omega(tree.nodes()[*node].label)) {
    verdict.witness = tree.path_to(*node);
  } else {
    Verdict backward = backward_cover(vass, source, target);
    if (backward.kind != VerdictKind::Coverable)
      throw std::logic_error("Karp-Miller and backward engines disagree");
    verdict.witness = std::move(backward.witness);
  }
  return verdict;
}

// ---------------------------------------------------------------------------
// Forward search

namespace {

bool exceeds(const IntVector& v, const std::optional<Int>& cap) {
  if (!cap) return false;
  for (const auto& x : v)
    if (x > *cap) return true;
  return false;
}

}  // namespace

Verdict forward_search(const Vass& vass, const VassConfig& source, const VassConfig& target,
                       const ForwardOptions& options) {
  const auto& limits = options.limits;
  if (!limits.max_length && !limits.max_component)
    throw std::invalid_argument("forward search needs a length or value limit");

  auto is_goal = [&](const VassConfig& c) {
    return options.goal == Goal::Cover ? covers(c, target) : c == target;
  };

  Verdict verdict;
  if (is_goal(source)) {
    verdict.kind = VerdictKind::Coverable;
    verdict.explored = 1;
    return verdict;
  }

  struct Node {
    VassConfig config;
    std::size_t parent;
    std::size_t via;
  };
  std::vector<Node> nodes{{source, 0, 0}};
  std::unordered_map<VassConfig, std::size_t, VassConfigHash> index{{source, 0}};
  std::vector<std::vector<std::size_t>> by_state(vass.states().size());
  by_state[source.state].push_back(0);
  bool value_pruned = exceeds(source.counters, limits.max_component);

  auto witness_to = [&](std::size_t parent, std::size_t via) {
    Witness w{via};
    for (std::size_t n = parent; n != 0; n = nodes[n].parent) w.push_back(nodes[n].via);
    return Witness(w.rbegin(), w.rend());
  };

  std::size_t level_begin = 0;
  std::size_t level_end = value_pruned ? 0 : 1;
  std::size_t depth = 0;
  while (level_begin < level_end) {
    if (limits.max_length && depth >= *limits.max_length) break;
    for (std::size_t n = level_begin; n < level_end; ++n) {
      const VassConfig current = nodes[n].config;
      for (std::size_t t : vass.outgoing(current.state)) {
        auto next = try_vass_step(vass, current, t);
        if (!next) continue;
        if (is_goal(*next)) {
          verdict.kind = VerdictKind::Coverable;
          verdict.witness = witness_to(n, t);
          verdict.explored = nodes.size();
          return verdict;
        }
        if (exceeds(next->counters, limits.max_component)) {
          value_pruned = true;
          continue;
        }
        if (index.count(*next)) continue;
        if (options.subsumption) {
          bool below = false;
          for (std::size_t s : by_state[next->state])
            if (leq(next->counters, nodes[s].config.counters)) {
              below = true;
              break;
            }
          if (below) continue;
        }
        index.emplace(*next, nodes.size());
        by_state[next->state].push_back(nodes.size());
        nodes.push_back({std::move(*next), n, t});
      }
    }
    level_begin = level_end;
    level_end = nodes.size();
    ++depth;
  }

  verdict.explored = nodes.size();
  const bool exhausted = level_begin == level_end;
  verdict.kind = exhausted && !value_pruned ? VerdictKind::NotCoverable : VerdictKind::Inconclusive;
  return verdict;
}

std::optional<std::size_t> shortest_witness_length(const Vass& vass, const VassConfig& source,
                                                   const VassConfig& target, std::size_t cap) {
  ForwardOptions options;
  options.limits.max_length = cap;
  Verdict v = forward_search(vass, source, target, options);
  if (v.kind != VerdictKind::Coverable) return std::nullopt;
  return v.witness.size();
}

std::vector<VassConfig> explore(const Vass& vass, const VassConfig& source, const SearchLimits& limits) {
  if (!limits.max_length && !limits.max_component)
    throw std::invalid_argument("exploration needs a length or value limit");
  std::vector<VassConfig> out;
  if (exceeds(source.counters, limits.max_component)) return out;
  std::unordered_map<VassConfig, std::size_t, VassConfigHash> depth{{source, 0}};
  out.push_back(source);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const std::size_t d = depth.at(out[i]);
    if (limits.max_length && d >= *limits.max_length) continue;
    for (std::size_t t : vass.outgoing(out[i].state)) {
      auto next = try_vass_step(vass, out[i], t);
      if (!next || exceeds(next->counters, limits.max_component)) continue;
      if (depth.emplace(*next, d + 1).second) out.push_back(std::move(*next));
    }
  }
  return out;
}

bool brute_force_cover(const Vass& vass, const VassConfig& source, const VassConfig& target,
                       const SearchLimits& limits) {
  for (const auto& c : explore(vass, source, limits))
    if (covers(c, target)) return true;
  return false;
}

// ---------------------------------------------------------------------------
// Instance-level entry points

namespace {

Verdict run_engine(const Vass& vass, const VassConfig& source, const VassConfig& target,
                   Engine engine, const SearchLimits& limits) {
  switch (engine) {
    case Engine::Backward: return backward_cover(vass, source, target);
    case Engine::KarpMiller: return karp_miller_cover(vass, source, target);
    case Engine::Forward: {
      ForwardOptions options;
      options.limits = limits;
      return forward_search(vass, source, target, options);
    }
  }
  throw std::logic_error("unknown engine");
}

}  // namespace

Verdict decide(const CoverInstance& instance, Engine engine, const SearchLimits& limits) {
  check_instance(instance);
  if (const auto* vas = std::get_if<Vas>(&instance.model)) {
    Vass vass = vas_to_vass(*vas);
    return run_engine(vass, {0, std::get<IntVector>(instance.source)},
                      {0, std::get<IntVector>(instance.target)}, engine, limits);
  }
  if (const auto* vass = std::get_if<Vass>(&instance.model)) {
    return run_engine(*vass, std::get<VassConfig>(instance.source),
                      std::get<VassConfig>(instance.target), engine, limits);
  }
  const auto& net = std::get<PetriNet>(instance.model);
  PnToVass conv = pn_to_vass(net);
  SearchLimits doubled = limits;
  if (doubled.max_length) *doubled.max_length *= 2;
  Verdict v = run_engine(conv.vass, conv.encode(std::get<IntVector>(instance.source)),
                         conv.encode(std::get<IntVector>(instance.target)), engine, doubled);
  if (v.kind == VerdictKind::Coverable) {
    auto lifted = conv.lift(v.witness);
    if (!lifted) throw std::logic_error("witness does not follow the net gadgets");
    v.witness = std::move(*lifted);
  }
  return v;
}

std::optional<std::size_t> shortest_witness_length(const CoverInstance& instance, std::size_t cap) {
  SearchLimits limits;
  limits.max_length = cap;
  Verdict v = decide(instance, Engine::Forward, limits);
  if (v.kind != VerdictKind::Coverable) return std::nullopt;
  return v.witness.size();
}

}  // namespace covkit
