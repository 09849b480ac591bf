#include "covkit/dfa.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace covkit {

std::string format_word(const Word& word) {
  bool single = std::all_of(word.begin(), word.end(), [](const auto& s) { return s.size() == 1; });
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i && !single) out += ' ';
    out += word[i];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Dfa

Dfa::Dfa(std::vector<std::string> alphabet, std::size_t state_count, std::size_t initial,
         std::vector<std::size_t> finals, const std::vector<Move>& moves)
    : alphabet_(std::move(alphabet)),
      state_count_(state_count),
      initial_(initial),
      finals_(std::move(finals)) {
  if (state_count_ == 0) throw ModelError("DFA needs at least one state");
  std::set<std::string> symbols(alphabet_.begin(), alphabet_.end());
  if (symbols.size() != alphabet_.size()) throw ModelError("repeated alphabet symbol");
  auto in_range = [&](std::size_t q) { return q >= 1 && q <= state_count_; };
  if (!in_range(initial_)) throw ModelError("initial state " + std::to_string(initial_) + " out of range");
  std::sort(finals_.begin(), finals_.end());
  finals_.erase(std::unique(finals_.begin(), finals_.end()), finals_.end());
  for (std::size_t f : finals_)
    if (!in_range(f)) throw ModelError("final state " + std::to_string(f) + " out of range");

  delta_.assign(state_count_, std::vector<std::optional<std::size_t>>(alphabet_.size()));
  for (const auto& m : moves) {
    if (!in_range(m.from) || !in_range(m.to))
      throw ModelError("transition " + std::to_string(m.from) + " " + m.symbol + " " +
                       std::to_string(m.to) + " uses an undeclared state");
    auto sym = symbol_index(m.symbol);
    if (!sym) throw ModelError("symbol " + m.symbol + " is not in the alphabet");
    auto& slot = delta_[m.from - 1][*sym];
    if (slot) throw ModelError("nondeterministic transitions from state " + std::to_string(m.from) + " on " + m.symbol);
    slot = m.to;
  }
}

bool Dfa::is_final(std::size_t state) const {
  return std::binary_search(finals_.begin(), finals_.end(), state);
}

std::optional<std::size_t> Dfa::symbol_index(const std::string& symbol) const {
  auto it = std::find(alphabet_.begin(), alphabet_.end(), symbol);
  if (it == alphabet_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - alphabet_.begin());
}

std::optional<std::size_t> Dfa::next(std::size_t state, std::size_t symbol) const {
  return delta_.at(state - 1).at(symbol);
}

std::optional<std::size_t> Dfa::next(std::size_t state, const std::string& symbol) const {
  auto sym = symbol_index(symbol);
  if (!sym) return std::nullopt;
  return next(state, *sym);
}

std::vector<Dfa::Move> Dfa::moves() const {
  std::vector<Move> out;
  for (std::size_t q = 1; q <= state_count_; ++q)
    for (std::size_t a = 0; a < alphabet_.size(); ++a)
      if (auto r = delta_[q - 1][a]) out.push_back({q, alphabet_[a], *r});
  return out;
}

bool Dfa::accepts(const Word& word) const {
  std::size_t q = initial_;
  for (const auto& sym : word) {
    auto r = next(q, sym);
    if (!r) return false;
    q = *r;
  }
  return is_final(q);
}

// ---------------------------------------------------------------------------
// Normalization

namespace {

void require_common_alphabet(const std::vector<Dfa>& dfas) {
  if (dfas.empty()) throw ReductionError(ReductionErrorKind::EmptyList, "no automata given");
  std::set<std::string> first(dfas[0].alphabet().begin(), dfas[0].alphabet().end());
  for (std::size_t i = 1; i < dfas.size(); ++i) {
    std::set<std::string> other(dfas[i].alphabet().begin(), dfas[i].alphabet().end());
    if (other != first)
      throw ReductionError(ReductionErrorKind::AlphabetMismatch,
                           "automaton " + std::to_string(i + 1) + " has a different alphabet");
  }
}

}  // namespace

NormalizedDfas normalize(const std::vector<Dfa>& dfas) {
  require_common_alphabet(dfas);
  NormalizedDfas out{dfas[0].alphabet(), 0, {}};
  for (const auto& d : dfas) out.states = std::max(out.states, d.state_count());

  for (const auto& d : dfas) {
    const std::size_t init = d.initial();
    auto rename = [init](std::size_t q) { return q == init ? 1 : (q == 1 ? init : q); };
    std::vector<Dfa::Move> moves;
    for (const auto& m : d.moves()) moves.push_back({rename(m.from), m.symbol, rename(m.to)});
    std::vector<std::size_t> finals;
    for (std::size_t f : d.finals()) finals.push_back(rename(f));
    out.dfas.emplace_back(out.alphabet, out.states, 1, finals, moves);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Compilation to a 2k-VASS

namespace {

class ReductionBuilder {
 public:
  explicit ReductionBuilder(std::size_t dim) : dim_(dim) {}

  void state(const std::string& name) { states_.push_back(name); }

  // Returns the declaration index of the new transition.
  std::size_t arrow(const std::string& from, const std::string& to, IntVector update) {
    arrows_.push_back({from, to, std::move(update)});
    return arrows_.size() - 1;
  }
  std::size_t neutral(const std::string& from, const std::string& to) {
    return arrow(from, to, IntVector(dim_));
  }

  Vass finish() const { return Vass(dim_, states_, arrows_); }

 private:
  std::size_t dim_;
  std::vector<std::string> states_;
  std::vector<Vass::Arrow> arrows_;
};

std::string part_name(const std::string& section, std::size_t i) {
  return section + ".part[" + std::to_string(i + 1) + "]";
}

}  // namespace

ReductionOutput build_reduction(const NormalizedDfas& norm) {
  if (norm.dfas.empty()) throw ReductionError(ReductionErrorKind::EmptyList, "no automata given");
  const std::size_t k = norm.dfas.size();
  const std::size_t s = norm.states;
  const long sl = static_cast<long>(s);
  ReductionBuilder b(2 * k);

  auto pair_update = [&](std::size_t i, long x, long y) {
    IntVector v(2 * k);
    v[ReductionLayout::x(i)] = x;
    v[ReductionLayout::y(i)] = y;
    return v;
  };

  // Transition indices are recorded by name first and resolved after the
  // VASS sorts its states.
  struct PendingPart {
    std::string start, end;
    std::size_t enter;
    std::map<std::size_t, std::array<std::size_t, 2>> moves;
  };
  struct PendingCheck {
    std::string start, end;
    std::size_t enter;
    std::map<std::size_t, std::size_t> accept;
  };
  std::vector<std::vector<PendingPart>> sections;
  std::vector<std::size_t> exits;
  std::vector<PendingCheck> checks;

  b.state("p");
  b.state("q");
  for (const auto& sym : norm.alphabet) {
    const std::string sec = "sec[" + sym + "]";
    std::vector<PendingPart> parts;
    std::string previous = "p";
    for (std::size_t i = 0; i < k; ++i) {
      const Dfa& d = norm.dfas[i];
      PendingPart part{part_name(sec, i) + ".start", part_name(sec, i) + ".end", 0, {}};
      b.state(part.start);
      b.state(part.end);
      part.enter = b.neutral(previous, part.start);
      for (std::size_t a = 1; a <= s; ++a) {
        auto to = d.next(a, sym);
        if (!to) continue;
        const long al = static_cast<long>(a);
        const long bl = static_cast<long>(*to);
        const std::string via =
            part_name(sec, i) + ".via[" + std::to_string(a) + "->" + std::to_string(*to) + "]";
        b.state(via);
        std::size_t check = b.arrow(part.start, via, pair_update(i, -al, -(sl - al)));
        std::size_t apply = b.arrow(via, part.end, pair_update(i, bl, sl - bl));
        part.moves[a] = {check, apply};
      }
      previous = part.end;
      parts.push_back(std::move(part));
    }
    exits.push_back(b.neutral(previous, "p"));
    sections.push_back(std::move(parts));
  }

  std::string previous = "p";
  for (std::size_t i = 0; i < k; ++i) {
    PendingCheck part{part_name("chk", i) + ".start", part_name("chk", i) + ".end", 0, {}};
    b.state(part.start);
    b.state(part.end);
    part.enter = b.neutral(previous, part.start);
    for (std::size_t f : norm.dfas[i].finals()) {
      const long fl = static_cast<long>(f);
      part.accept[f] = b.arrow(part.start, part.end, pair_update(i, -fl, -(sl - fl)));
    }
    previous = part.end;
    checks.push_back(std::move(part));
  }
  const std::size_t check_exit = b.neutral(previous, "q");

  Vass vass = b.finish();
  ReductionLayout layout{k, s, vass.state_index("p"), vass.state_index("q"), {}, {}, check_exit};
  for (std::size_t a = 0; a < sections.size(); ++a) {
    ReductionLayout::Section section{{}, exits[a]};
    for (const auto& part : sections[a])
      section.parts.push_back(
          {vass.state_index(part.start), vass.state_index(part.end), part.enter, part.moves});
    layout.sections.push_back(std::move(section));
  }
  for (const auto& part : checks)
    layout.checking.push_back(
        {vass.state_index(part.start), vass.state_index(part.end), part.enter, part.accept});

  IntVector u(2 * k);
  for (std::size_t i = 0; i < k; ++i) {
    u[ReductionLayout::x(i)] = 1;
    u[ReductionLayout::y(i)] = sl - 1;
  }
  VassConfig source{layout.p, u};
  VassConfig target{layout.q, IntVector(2 * k)};
  return ReductionOutput{norm, std::move(vass), std::move(source), std::move(target), std::move(layout)};
}

// ---------------------------------------------------------------------------
// Product automaton oracle

namespace {

struct Product {
  std::vector<std::string> alphabet;
  std::vector<std::vector<std::size_t>> states;
  // edges[u][a]: successor of product state u on symbol a
  std::vector<std::vector<std::optional<std::size_t>>> edges;
  std::vector<std::size_t> parent;
  std::vector<std::size_t> via;
  std::vector<bool> accepting;
};

// Breadth-first construction of the reachable product, symbols in the first
// automaton's alphabet order. Discovery order makes parent links spell the
// least shortest word to each product state.
Product explore_product(const std::vector<Dfa>& dfas) {
  require_common_alphabet(dfas);
  Product prod;
  prod.alphabet = dfas[0].alphabet();
  std::map<std::vector<std::size_t>, std::size_t> ids;
  auto add = [&](std::vector<std::size_t> st, std::size_t parent, std::size_t via) {
    bool acc = true;
    for (std::size_t i = 0; i < dfas.size(); ++i) acc = acc && dfas[i].is_final(st[i]);
    ids.emplace(st, prod.states.size());
    prod.states.push_back(std::move(st));
    prod.edges.emplace_back(prod.alphabet.size());
    prod.parent.push_back(parent);
    prod.via.push_back(via);
    prod.accepting.push_back(acc);
  };
  std::vector<std::size_t> init;
  for (const auto& d : dfas) init.push_back(d.initial());
  add(init, 0, 0);

  for (std::size_t u = 0; u < prod.states.size(); ++u) {
    for (std::size_t a = 0; a < prod.alphabet.size(); ++a) {
      std::vector<std::size_t> next;
      for (std::size_t i = 0; i < dfas.size(); ++i) {
        auto r = dfas[i].next(prod.states[u][i], prod.alphabet[a]);
        if (!r) break;
        next.push_back(*r);
      }
      if (next.size() != dfas.size()) continue;
      auto it = ids.find(next);
      if (it == ids.end()) {
        add(next, u, a);
        prod.edges[u][a] = prod.states.size() - 1;
      } else {
        prod.edges[u][a] = it->second;
      }
    }
  }
  return prod;
}

}  // namespace

std::optional<Word> product_oracle(const std::vector<Dfa>& dfas) {
  Product prod = explore_product(dfas);
  for (std::size_t u = 0; u < prod.states.size(); ++u) {
    if (!prod.accepting[u]) continue;
    Word word;
    for (std::size_t v = u; v != 0; v = prod.parent[v]) word.push_back(prod.alphabet[prod.via[v]]);
    std::reverse(word.begin(), word.end());
    return word;
  }
  return std::nullopt;
}

std::vector<Word> all_shortest_words(const std::vector<Dfa>& dfas) {
  Product prod = explore_product(dfas);
  const std::size_t n = prod.states.size();
  constexpr std::size_t unreachable = static_cast<std::size_t>(-1);

  // Distance from every product state to an accepting one.
  std::vector<std::vector<std::size_t>> reverse(n);
  for (std::size_t u = 0; u < n; ++u)
    for (const auto& e : prod.edges[u])
      if (e) reverse[*e].push_back(u);
  std::vector<std::size_t> to_accept(n, unreachable);
  std::deque<std::size_t> queue;
  for (std::size_t u = 0; u < n; ++u)
    if (prod.accepting[u]) {
      to_accept[u] = 0;
      queue.push_back(u);
    }
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t u : reverse[v])
      if (to_accept[u] == unreachable) {
        to_accept[u] = to_accept[v] + 1;
        queue.push_back(u);
      }
  }

  std::vector<Word> out;
  if (to_accept[0] == unreachable) return out;
  Word current;
  auto walk = [&](auto&& self, std::size_t u) -> void {
    if (to_accept[u] == 0) {
      out.push_back(current);
      return;
    }
    for (std::size_t a = 0; a < prod.alphabet.size(); ++a) {
      auto v = prod.edges[u][a];
      if (!v || to_accept[*v] + 1 != to_accept[u]) continue;
      current.push_back(prod.alphabet[a]);
      self(self, *v);
      current.pop_back();
    }
  };
  walk(walk, 0);
  return out;
}

// ---------------------------------------------------------------------------
// Words <-> covering runs

Witness word_to_path(const ReductionOutput& reduction, const Word& word) {
  const auto& layout = reduction.layout;
  const auto& dfas = reduction.input.dfas;
  std::vector<std::size_t> current(layout.k, 1);
  Witness path;

  for (std::size_t j = 0; j < word.size(); ++j) {
    auto sym = dfas[0].symbol_index(word[j]);
    if (!sym)
      throw ReductionError(ReductionErrorKind::WordRejected, "symbol " + word[j] + " is not in the alphabet");
    const auto& section = layout.sections[*sym];
    for (std::size_t i = 0; i < layout.k; ++i) {
      const auto& part = section.parts[i];
      auto move = part.moves.find(current[i]);
      if (move == part.moves.end())
        throw ReductionError(ReductionErrorKind::WordRejected,
                             "automaton " + std::to_string(i + 1) + " has no move on letter " +
                                 std::to_string(j + 1));
      path.push_back(part.enter);
      path.push_back(move->second[0]);
      path.push_back(move->second[1]);
      current[i] = *dfas[i].next(current[i], *sym);
    }
    path.push_back(section.exit);
  }

  for (std::size_t i = 0; i < layout.k; ++i) {
    const auto& part = layout.checking[i];
    auto accept = part.accept.find(current[i]);
    if (accept == part.accept.end())
      throw ReductionError(ReductionErrorKind::WordRejected,
                           "automaton " + std::to_string(i + 1) + " rejects the word");
    path.push_back(part.enter);
    path.push_back(accept->second);
  }
  path.push_back(layout.check_exit);
  return path;
}

Word path_to_word(const ReductionOutput& reduction, const Witness& witness) {
  const auto& layout = reduction.layout;
  const auto& vass = reduction.vass;
  auto malformed = [](const std::string& why) {
    return ReductionError(ReductionErrorKind::MalformedPath, why);
  };

  // Entry transitions of the letter sections, keyed by transition index.
  std::map<std::size_t, std::size_t> section_entry;
  for (std::size_t a = 0; a < layout.sections.size(); ++a)
    section_entry[layout.sections[a].parts.at(0).enter] = a;

  VassConfig config = reduction.source;
  Word word;
  for (std::size_t n = 0; n < witness.size(); ++n) {
    const std::size_t t = witness[n];
    if (t >= vass.transitions().size()) throw malformed("unknown transition " + std::to_string(t));
    const auto& tr = vass.transitions()[t];
    if (tr.source != config.state)
      throw malformed("step " + std::to_string(n) + " does not continue the path");
    auto next = try_vass_step(vass, config, t);
    if (!next) throw malformed("step " + std::to_string(n) + " drives a counter negative");
    if (config.state == layout.p) {
      auto entry = section_entry.find(t);
      if (entry != section_entry.end()) {
        word.push_back(reduction.input.alphabet[entry->second]);
      } else if (t != layout.checking.at(0).enter) {
        throw malformed("step " + std::to_string(n) + " leaves p outside any section");
      }
    }
    config = std::move(*next);
  }
  if (config.state != layout.q) throw malformed("path does not end in q");
  return word;
}

bool decide_intersection(const std::vector<Dfa>& dfas, Engine engine) {
  ReductionOutput reduction = build_reduction(normalize(dfas));
  // Every reachable counter value is at most s, so a value-capped forward
  // search is exhaustive.
  SearchLimits limits;
  limits.max_component = Int(reduction.layout.s);
  Verdict v = decide(reduction.instance(), engine, limits);
  if (v.kind == VerdictKind::Inconclusive) throw std::logic_error("inconclusive search on a bounded VASS");
  return v.kind == VerdictKind::Coverable;
}

}  // namespace covkit
