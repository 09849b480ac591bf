#pragma once

// Shared test helpers: fixture loading, seeded generators and oracles that
// are written independently of the library's engines.

#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "covkit/dfa.hpp"
#include "covkit/io.hpp"
#include "covkit/model.hpp"

namespace covkit::test {

inline std::string fixture_path(const std::string& name) { return std::string(COVKIT_FIXTURES) + "/" + name; }

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

template <typename T>
T load(const std::string& name) {
  return std::get<T>(parse_model(read_fixture(name)));
}

inline std::vector<Dfa> fig4_dfas() { return {load<Dfa>("d1.dfa"), load<Dfa>("d2.dfa"), load<Dfa>("d3.dfa")}; }

inline long uniform(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

/// Uniform index in [0, n).
inline std::size_t pick(std::mt19937_64& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

inline IntVector random_vector(std::mt19937_64& rng, std::size_t dim, long lo, long hi) {
  std::vector<Int> v;
  for (std::size_t i = 0; i < dim; ++i) v.emplace_back(uniform(rng, lo, hi));
  return IntVector(v);
}

struct RandomShape {
  std::size_t max_dim = 4;
  std::size_t max_states = 1;
  std::size_t max_transitions = 5;
  long update = 3;
  long entry = 4;
};

/// Random VASS with distinct transitions; state names are s0, s1, ...
inline Vass random_vass(std::mt19937_64& rng, const RandomShape& shape) {
  const std::size_t dim = uniform(rng, 1, shape.max_dim);
  const std::size_t states = uniform(rng, 1, shape.max_states);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < states; ++i) names.push_back("s" + std::to_string(i));
  std::vector<Vass::Arrow> arrows;
  const std::size_t n = uniform(rng, 1, shape.max_transitions);
  std::set<std::tuple<std::size_t, std::size_t, IntVector>> seen;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t from = pick(rng, states), to = pick(rng, states);
    IntVector update = random_vector(rng, dim, -shape.update, shape.update);
    if (seen.emplace(from, to, update).second) arrows.push_back({names[from], names[to], update});
  }
  return Vass(dim, names, arrows);
}

/// Random VAS with distinct vectors.
inline Vas random_vas(std::mt19937_64& rng, const RandomShape& shape) {
  const std::size_t dim = uniform(rng, 1, shape.max_dim);
  std::set<IntVector> seen;
  std::vector<IntVector> vectors;
  const std::size_t n = uniform(rng, 1, shape.max_transitions);
  for (std::size_t i = 0; i < n; ++i) {
    IntVector v = random_vector(rng, dim, -shape.update, shape.update);
    if (seen.insert(v).second) vectors.push_back(v);
  }
  return Vas(dim, vectors);
}

inline PetriNet random_net(std::mt19937_64& rng, std::size_t max_places, std::size_t max_transitions,
                           long max_weight) {
  const std::size_t places = uniform(rng, 1, max_places);
  const std::size_t transitions = uniform(rng, 1, max_transitions);
  std::vector<std::string> p, t;
  for (std::size_t i = 0; i < places; ++i) p.push_back("p" + std::to_string(i));
  for (std::size_t i = 0; i < transitions; ++i) t.push_back("t" + std::to_string(i));
  std::vector<PetriNet::Arc> arcs;
  for (const auto& tn : t)
    for (const auto& pn : p) {
      if (long w = uniform(rng, 0, max_weight); w > 0 && uniform(rng, 0, 1)) arcs.push_back({pn, tn, Int(w)});
      if (long w = uniform(rng, 0, max_weight); w > 0 && uniform(rng, 0, 1)) arcs.push_back({tn, pn, Int(w)});
    }
  return PetriNet(p, t, arcs);
}

// ---------------------------------------------------------------------------
// Oracles

/// Plain-long replay of a VASS: depth-first iterative deepening over
/// explicit transition tables. Returns the shortest covering length up to
/// `max_len`, without memoisation or sharing with the library's search.
struct IddfsOracle {
  struct Edge {
    std::size_t from, to;
    std::vector<long> delta;
  };
  std::vector<Edge> edges;
  std::size_t target_state;
  std::vector<long> target;

  IddfsOracle(const Vass& vass, const VassConfig& tgt) : target_state(tgt.state) {
    for (const auto& t : vass.transitions()) {
      Edge e{t.source, t.target, {}};
      for (std::size_t i = 0; i < t.update.dim(); ++i) e.delta.push_back(t.update[i].get_si());
      edges.push_back(e);
    }
    for (std::size_t i = 0; i < tgt.counters.dim(); ++i) target.push_back(tgt.counters[i].get_si());
  }

  bool covered(std::size_t q, const std::vector<long>& c) const {
    if (q != target_state) return false;
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c[i] < target[i]) return false;
    return true;
  }

  bool dfs(std::size_t q, std::vector<long>& c, std::size_t budget) const {
    if (covered(q, c)) return true;
    if (budget == 0) return false;
    for (const auto& e : edges) {
      if (e.from != q) continue;
      bool ok = true;
      for (std::size_t i = 0; i < c.size(); ++i) ok = ok && c[i] + e.delta[i] >= 0;
      if (!ok) continue;
      for (std::size_t i = 0; i < c.size(); ++i) c[i] += e.delta[i];
      const bool found = dfs(e.to, c, budget - 1);
      for (std::size_t i = 0; i < c.size(); ++i) c[i] -= e.delta[i];
      if (found) return true;
    }
    return false;
  }

  std::optional<std::size_t> shortest(const VassConfig& src, std::size_t max_len) const {
    std::vector<long> c;
    for (std::size_t i = 0; i < src.counters.dim(); ++i) c.push_back(src.counters[i].get_si());
    for (std::size_t len = 0; len <= max_len; ++len)
      if (dfs(src.state, c, len)) return len;
    return std::nullopt;
  }
};

/// A DFA as a bare table, simulated without the library.
struct RawDfa {
  std::size_t states;  // 1-based
  std::size_t initial;
  std::set<std::size_t> finals;
  // delta[state][symbol], 0 = undefined
  std::vector<std::vector<std::size_t>> delta;

  bool accepts(const std::vector<std::size_t>& word) const {
    std::size_t q = initial;
    for (auto a : word) {
      q = delta[q][a];
      if (q == 0) return false;
    }
    return finals.count(q) > 0;
  }

  Dfa build(const std::vector<std::string>& alphabet) const {
    std::vector<Dfa::Move> moves;
    for (std::size_t q = 1; q <= states; ++q)
      for (std::size_t a = 0; a < alphabet.size(); ++a)
        if (delta[q][a]) moves.push_back({q, alphabet[a], delta[q][a]});
    return Dfa(alphabet, states, initial, {finals.begin(), finals.end()}, moves);
  }
};

/// Up to `max_states` states; each move is missing with probability ~1/8.
inline RawDfa random_raw_dfa(std::mt19937_64& rng, std::size_t max_states, std::size_t symbols) {
  RawDfa d;
  d.states = uniform(rng, 1, max_states);
  d.initial = uniform(rng, 1, d.states);
  for (std::size_t q = 1; q <= d.states; ++q)
    if (uniform(rng, 0, 2) == 0) d.finals.insert(q);
  d.delta.assign(d.states + 1, std::vector<std::size_t>(symbols, 0));
  for (std::size_t q = 1; q <= d.states; ++q)
    for (std::size_t a = 0; a < symbols; ++a)
      if (uniform(rng, 0, 7) != 0) d.delta[q][a] = uniform(rng, 1, d.states);
  return d;
}

/// Every word over {0..symbols-1} of length ≤ max_len, shortest first, then
/// lexicographic.
inline std::vector<std::vector<std::size_t>> all_words(std::size_t symbols, std::size_t max_len) {
  std::vector<std::vector<std::size_t>> out{{}};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i)
      for (std::size_t a = 0; a < symbols; ++a) {
        auto w = out[i];
        w.push_back(a);
        out.push_back(w);
      }
    begin = end;
  }
  return out;
}

inline Word spell(const std::vector<std::size_t>& w, const std::vector<std::string>& alphabet) {
  Word out;
  for (auto a : w) out.push_back(alphabet[a]);
  return out;
}

/// Minimal u with u + v ⊒ m (componentwise, u ≥ 0), by enumerating u over
/// the box [0, ‖m‖∞ + ‖v‖∞]^d.
inline std::vector<long> enumerate_pre(const std::vector<long>& m, const std::vector<long>& v) {
  long box = 0;
  for (auto x : m) box = std::max(box, std::abs(x));
  for (auto x : v) box = std::max(box, std::abs(x));
  box *= 2;
  const std::size_t d = m.size();
  std::vector<std::vector<long>> sols;
  std::vector<long> u(d, 0);
  while (true) {
    bool ok = true;
    for (std::size_t i = 0; i < d; ++i) ok = ok && u[i] + v[i] >= m[i];
    if (ok) sols.push_back(u);
    std::size_t i = 0;
    while (i < d && u[i] == box) u[i++] = 0;
    if (i == d) break;
    ++u[i];
  }
  // the unique minimal solution is below every other
  for (const auto& s : sols) {
    bool least = true;
    for (const auto& t : sols)
      for (std::size_t i = 0; i < d; ++i) least = least && s[i] <= t[i];
    if (least) return s;
  }
  return {};
}

}  // namespace covkit::test
