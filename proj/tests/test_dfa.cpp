#include <doctest.h>

#include "support.hpp"

using namespace covkit;
using namespace covkit::test;

namespace {

Word w(const std::string& s) {
  Word out;
  for (char c : s) out.push_back(std::string(1, c));
  return out;
}

IntVector v6(long a, long b, long c, long d, long e, long f) { return IntVector{a, b, c, d, e, f}; }

// Configurations at state p along a run.
std::vector<IntVector> p_visits(const ReductionOutput& r, const Witness& path) {
  std::vector<IntVector> out{r.source.counters};
  VassConfig c = r.source;
  for (auto t : path) {
    c = vass_step(r.vass, c, t);
    if (c.state == r.layout.p) out.push_back(c.counters);
  }
  return out;
}

}  // namespace

TEST_CASE("dfa basics") {
  Dfa d1 = load<Dfa>("d1.dfa");
  CHECK(d1.size() == 4);
  CHECK(d1.accepts(w("")));
  CHECK(d1.accepts(w("ab")));
  CHECK_FALSE(d1.accepts(w("aba")));
  CHECK_FALSE(d1.accepts(Word{"c"}));
  CHECK(format_word(w("aaab")) == "aaab");
  CHECK(format_word(Word{"ab", "c"}) == "ab c");
  CHECK_THROWS_AS(Dfa({"a"}, 3, 1, {2}, {{1, "a", 2}, {1, "a", 3}}), ModelError);
  CHECK_THROWS_AS(Dfa({"a"}, 2, 1, {2}, {{1, "b", 2}}), ModelError);
  CHECK_THROWS_AS(Dfa({"a"}, 2, 3, {2}, {}), ModelError);
}

TEST_CASE("normalization") {
  auto norm = normalize(fig4_dfas());
  CHECK(norm.states == 4);
  CHECK(norm.dfas[0].state_count() == 4);
  CHECK(norm.dfas[0].finals() == std::vector<std::size_t>{1});

  Dfa single({"a"}, 1, 1, {1}, {});
  auto one = normalize({single});
  CHECK(one.states == 1);
  CHECK(one.dfas[0] == single);

  CHECK_THROWS_AS(normalize({}), ReductionError);
  Dfa other({"b", "a"}, 1, 1, {1}, {});
  CHECK_THROWS_AS(normalize({single, Dfa({"a", "b"}, 1, 1, {1}, {})}), ReductionError);
  // same symbols in another order
  CHECK_NOTHROW(normalize({Dfa({"a", "b"}, 1, 1, {1}, {}), other}));
}

TEST_CASE("normalization keeps languages") {
  std::mt19937_64 rng(41);
  const std::vector<std::string> ab{"a", "b"};
  const auto words = all_words(2, 6);
  for (int round = 0; round < 100; ++round) {
    std::vector<RawDfa> raw{random_raw_dfa(rng, 4, 2), random_raw_dfa(rng, 4, 2)};
    std::vector<Dfa> dfas{raw[0].build(ab), raw[1].build(ab)};
    auto norm = normalize(dfas);
    for (std::size_t i = 0; i < 2; ++i) {
      CHECK(norm.dfas[i].initial() == 1);
      CHECK(norm.dfas[i].state_count() == norm.states);
      for (const auto& word : words) REQUIRE(norm.dfas[i].accepts(spell(word, ab)) == raw[i].accepts(word));
    }
  }
}

TEST_CASE("compiled updates of the three-automaton example") {
  auto r = build_reduction(normalize(fig4_dfas()));
  CHECK(r.vass.dim() == 6);
  CHECK(r.source == VassConfig{r.layout.p, v6(1, 3, 1, 3, 1, 3)});
  CHECK(r.target == VassConfig{r.layout.q, v6(0, 0, 0, 0, 0, 0)});

  // D2 reads a from state 1 to state 2 in the a-section, part 2
  const auto& part = r.layout.sections[0].parts[1];
  const auto [check, apply] = part.moves.at(1);
  CHECK(r.vass.transitions()[check].update == v6(0, 0, -1, -3, 0, 0));
  CHECK(r.vass.transitions()[apply].update == v6(0, 0, 2, 2, 0, 0));

  const auto& accept3 = r.layout.checking[2].accept;
  REQUIRE(accept3.size() == 2);
  CHECK(r.vass.transitions()[accept3.at(2)].update == v6(0, 0, 0, 0, -2, -2));
  CHECK(r.vass.transitions()[accept3.at(4)].update == v6(0, 0, 0, 0, -4, 0));
}

TEST_CASE("shape and size of the compiled vass") {
  std::mt19937_64 rng(42);
  const std::vector<std::string> ab{"a", "b"};
  for (int round = 0; round < 50; ++round) {
    std::vector<Dfa> dfas;
    const std::size_t k = uniform(rng, 1, 3);
    for (std::size_t i = 0; i < k; ++i) dfas.push_back(random_raw_dfa(rng, 4, 2).build(ab));
    auto norm = normalize(dfas);
    auto r = build_reduction(norm);
    CHECK(r.vass.dim() == 2 * k);

    std::size_t moves = 0, finals = 0;
    for (const auto& d : norm.dfas) {
      moves += d.moves().size();
      finals += d.finals().size();
    }
    // p, q; per section and part start, end and one state per move; two
    // states per checking part
    CHECK(r.vass.states().size() == 2 + 2 * k * ab.size() + moves + 2 * k);
    // per section: k entries, 2 per move, 1 exit; checking: k entries,
    // 1 per final state, 1 exit
    CHECK(r.vass.transitions().size() == ab.size() * (k + 1) + 2 * moves + k + finals + 1);

    for (const auto& t : r.vass.transitions()) {
      if (t.update.is_zero()) continue;
      std::set<std::size_t> touched;
      for (std::size_t c = 0; c < t.update.dim(); ++c)
        if (t.update[c] != 0) touched.insert(c / 2);
      CHECK(touched.size() == 1);
    }
  }
}

TEST_CASE("product oracle") {
  auto dfas = fig4_dfas();
  CHECK(product_oracle(dfas) == w("aaab"));
  // aabb is accepted too: even length, contains a and b, starts with aa
  CHECK(all_shortest_words(dfas) == std::vector<Word>{w("aaab"), w("aaba"), w("aabb")});
  for (const auto& d : dfas) CHECK(d.accepts(w("aabb")));
  CHECK_FALSE(product_oracle({load<Dfa>("d1.dfa"), load<Dfa>("odd.dfa")}));
  CHECK(product_oracle({load<Dfa>("d2.dfa")}) == w("ab"));
  CHECK(product_oracle({load<Dfa>("d3.dfa")}) == w("a"));
}

TEST_CASE("word to path milestones") {
  auto r = build_reduction(normalize(fig4_dfas()));
  Witness path = word_to_path(r, w("aaab"));
  auto check = validate_witness(r.instance(), path);
  CHECK(check.valid);
  CHECK(std::get<VassConfig>(check.final_config) == r.target);
  CHECK(p_visits(r, path) == std::vector<IntVector>{v6(1, 3, 1, 3, 1, 3), v6(2, 2, 2, 2, 2, 2),
                                                    v6(1, 3, 2, 2, 4, 0), v6(2, 2, 2, 2, 4, 0),
                                                    v6(1, 3, 4, 0, 4, 0)});
  CHECK(path_to_word(r, path) == w("aaab"));

  Witness other = word_to_path(r, w("aaba"));
  CHECK(validate_witness(r.instance(), other).valid);
  CHECK(path_to_word(r, other) == w("aaba"));

  CHECK_THROWS_AS(word_to_path(r, w("ab")), ReductionError);
  CHECK_THROWS_AS(path_to_word(r, Witness{}), ReductionError);
}

TEST_CASE("empty word through the checking section only") {
  Dfa trivial({"a"}, 1, 1, {1}, {});
  auto r = build_reduction(normalize({trivial}));
  CHECK(r.source == VassConfig{r.layout.p, IntVector{1, 0}});
  Witness path = word_to_path(r, {});
  CHECK(path.size() == 3);
  CHECK(validate_witness(r.instance(), path).valid);
  CHECK(path_to_word(r, path).empty());
  CHECK(decide(r.instance(), Engine::Backward).kind == VerdictKind::Coverable);
}

TEST_CASE("shortest covering runs spell shortest words") {
  auto r = build_reduction(normalize(fig4_dfas()));
  auto v = decide(r.instance(), Engine::Backward);
  REQUIRE(v.kind == VerdictKind::Coverable);
  Word word = path_to_word(r, v.witness);
  CHECK(word.size() == 4);
  for (const auto& d : fig4_dfas()) CHECK(d.accepts(word));

  auto len = shortest_witness_length(r.instance(), 80);
  REQUIRE(len);
  // each letter costs 3k+1 steps and the checking section 2k+1
  CHECK(*len == 4 * 10 + 7);
}

TEST_CASE("decide_intersection") {
  CHECK(decide_intersection(fig4_dfas(), Engine::Backward));
  CHECK(decide_intersection(fig4_dfas(), Engine::Forward));
  CHECK_FALSE(decide_intersection({load<Dfa>("d1.dfa"), load<Dfa>("odd.dfa")}, Engine::Backward));
  CHECK_FALSE(decide_intersection({load<Dfa>("d1.dfa"), load<Dfa>("odd.dfa")}, Engine::KarpMiller));
}

TEST_CASE("random reductions agree with a word-enumeration oracle") {
  std::mt19937_64 rng(43);
  const std::vector<std::string> ab{"a", "b"};
  // a product of two 3-state automata has at most 9 states, so a shortest
  // word in a nonempty intersection has length at most 8
  const auto words = all_words(2, 8);
  for (int round = 0; round < 40; ++round) {
    std::vector<RawDfa> raw{random_raw_dfa(rng, 3, 2), random_raw_dfa(rng, 3, 2)};
    std::vector<Dfa> dfas{raw[0].build(ab), raw[1].build(ab)};
    std::optional<std::vector<std::size_t>> first;
    for (const auto& word : words)
      if (raw[0].accepts(word) && raw[1].accepts(word)) {
        first = word;
        break;
      }
    auto oracle = product_oracle(dfas);
    REQUIRE(oracle.has_value() == first.has_value());
    if (first) CHECK(*oracle == spell(*first, ab));
    CHECK(decide_intersection(dfas, Engine::Backward) == oracle.has_value());
  }
}
