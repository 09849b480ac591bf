#include <doctest.h>

#include "covkit/convert.hpp"
#include "covkit/engines.hpp"
#include "support.hpp"

using namespace covkit;
using namespace covkit::test;

TEST_CASE("net to vass on the single-place net") {
  auto out = pn_to_vass(load<PetriNet>("fig1a.pn"));
  CHECK(out.vass == load<Vass>("fig1b.vass"));
  CHECK(out.vass.state_name(out.hub) == "q0");

  // one firing = two VASS steps through the intermediate state
  VassConfig c = out.encode(IntVector{1});
  c = vass_step(out.vass, c, out.gadget[0][0]);
  CHECK(out.vass.state_name(c.state) == "q_t");
  CHECK_FALSE(out.decode(c));
  c = vass_step(out.vass, c, out.gadget[0][1]);
  CHECK(out.decode(c) == IntVector{2});
  CHECK(out.lift({0, 1}) == Witness{0});
  CHECK_FALSE(out.lift({0}));
}

TEST_CASE("net with a neutral transition") {
  auto out = pn_to_vass(PetriNet({"p", "r"}, {"t"}, {}));
  REQUIRE(out.vass.transitions().size() == 2);
  for (const auto& t : out.vass.transitions()) CHECK(t.update.is_zero());
}

TEST_CASE("vas to net splits signs") {
  auto net = vas_to_pn(Vas(2, {IntVector{1, -1}}));
  CHECK(net.places() == std::vector<std::string>{"p1", "p2"});
  CHECK(net.input(0) == IntVector{0, 1});
  CHECK(net.output(0) == IntVector{1, 0});
  auto zero = vas_to_pn(Vas(2, {IntVector{0, 0}}));
  CHECK(zero.input(0).is_zero());
  CHECK(zero.output(0).is_zero());
}

TEST_CASE("vas to vass") {
  auto vass = vas_to_vass(Vas(1, {IntVector{1}}));
  CHECK(vass.states() == std::vector<std::string>{"q"});
  REQUIRE(vass.transitions().size() == 1);
  CHECK(vass.transitions()[0] == VassTransition{0, 0, IntVector{1}});
}

TEST_CASE("vass to vas reproduces the four-dimensional figure") {
  auto out = vass_to_vas(load<Vass>("fig1b.vass"));
  CHECK(out.vas == load<Vas>("fig1c.vas"));
  CHECK(out.base_dim == 1);
  const auto q0 = 0, qt = 1;
  CHECK(out.encode({q0, IntVector{1}}) == IntVector{1, 1, 6, 0});
  CHECK(out.encode({qt, IntVector{0}}) == IntVector{0, 2, 3, 0});
  CHECK(out.decode(IntVector{2, 1, 6, 0}) == VassConfig{q0, IntVector{2}});
  CHECK_FALSE(out.decode(IntVector{2, 0, 3, 3}));
  CHECK(out.expand({0, 1}) == Witness{0, 1, 2, 3, 4, 5});
}

TEST_CASE("state codes are pairwise incomparable and bounded") {
  for (std::size_t n = 1; n <= 12; ++n) {
    StateEncoding enc(n);
    CHECK(enc.bound() == Int((n + 1) * (n + 1)));
    for (std::size_t a = 0; a < n; ++a) {
      auto ca = enc.code(a);
      for (const auto& x : ca) CHECK(x <= enc.bound());
      CHECK(enc.decode(ca[0], ca[1], ca[2]) == a);
      for (std::size_t b = 0; b < n; ++b) {
        if (a == b) continue;
        auto cb = enc.code(b);
        bool below = true;
        for (int i = 0; i < 3; ++i) below = below && ca[i] <= cb[i];
        CHECK_FALSE(below);
      }
    }
  }
}

TEST_CASE("dimension and vector count of the state encoding") {
  std::mt19937_64 rng(21);
  RandomShape shape;
  shape.max_states = 4;
  for (int round = 0; round < 50; ++round) {
    Vass vass = random_vass(rng, shape);
    auto out = vass_to_vas(vass);
    CHECK(out.vas.dim() == vass.dim() + 3);
    std::set<std::size_t> sources;
    for (const auto& t : vass.transitions()) sources.insert(t.source);
    CHECK(out.vas.vectors().size() == 2 * sources.size() + vass.transitions().size());
    REQUIRE(out.gadget.size() == vass.transitions().size());
    for (std::size_t t = 0; t < out.gadget.size(); ++t)
      for (std::size_t u = 0; u < t; ++u)
        if (vass.transitions()[t].source == vass.transitions()[u].source) {
          CHECK(out.gadget[t][0] == out.gadget[u][0]);
          CHECK(out.gadget[t][1] == out.gadget[u][1]);
        }
  }
}

// Runs of the encoded VAS between encoded configurations have length 3k and
// project to VASS runs: enumerate all VAS runs up to length 9 from an
// encoded configuration and check every encoded configuration met.
TEST_CASE("encoded runs project to vass runs") {
  std::mt19937_64 rng(22);
  RandomShape shape;
  shape.max_dim = 2;
  shape.max_states = 3;
  shape.max_transitions = 4;
  shape.update = 2;
  for (int round = 0; round < 40; ++round) {
    Vass vass = random_vass(rng, shape);
    auto out = vass_to_vas(vass);
    VassConfig start{pick(rng, vass.states().size()), random_vector(rng, vass.dim(), 0, 3)};

    struct Node {
      IntVector config;
      std::size_t depth;
      Witness path;
    };
    std::vector<Node> frontier{{out.encode(start), 0, {}}};
    while (!frontier.empty()) {
      Node n = frontier.back();
      frontier.pop_back();
      if (auto decoded = out.decode(n.config)) {
        CHECK(n.depth % 3 == 0);
        // group the VAS path into transitions and replay in the VASS
        VassConfig c = start;
        for (std::size_t i = 0; i < n.path.size(); i += 3) {
          // the third vector identifies the transition
          std::optional<std::size_t> t;
          for (std::size_t k = 0; k < out.gadget.size(); ++k)
            if (out.gadget[k][2] == n.path[i + 2]) t = k;
          REQUIRE(t);
          CHECK(n.path[i] == out.gadget[*t][0]);
          CHECK(n.path[i + 1] == out.gadget[*t][1]);
          auto next = try_vass_step(vass, c, *t);
          REQUIRE(next);
          c = *next;
        }
        CHECK(c == *decoded);
      }
      if (n.depth == 9) continue;
      for (std::size_t v = 0; v < out.vas.vectors().size(); ++v) {
        IntVector next = n.config + out.vas.vectors()[v];
        if (!next.is_nonnegative()) continue;
        Witness p = n.path;
        p.push_back(v);
        frontier.push_back({next, n.depth + 1, p});
      }
    }
  }
}

TEST_CASE("coverability is preserved by every conversion") {
  std::mt19937_64 rng(23);
  RandomShape shape;
  shape.max_dim = 3;
  shape.max_states = 3;
  shape.max_transitions = 4;
  shape.update = 2;
  shape.entry = 3;
  for (int round = 0; round < 100; ++round) {
    Vass vass = random_vass(rng, shape);
    CoverInstance inst{vass,
                       VassConfig{pick(rng, vass.states().size()), random_vector(rng, vass.dim(), 0, 3)},
                       VassConfig{pick(rng, vass.states().size()), random_vector(rng, vass.dim(), 0, 3)}};
    const auto expected = decide(inst, Engine::Backward).kind;
    for (auto kind : {ModelKind::Vas, ModelKind::Pn, ModelKind::Vass}) {
      auto mapped = convert_instance(inst, kind);
      auto verdict = decide(mapped, Engine::Backward);
      CHECK(verdict.kind == expected);
      if (verdict.kind == VerdictKind::Coverable) CHECK(validate_witness(mapped, verdict.witness).valid);
    }
  }
}

TEST_CASE("vas round trip through net and vass") {
  std::mt19937_64 rng(24);
  RandomShape shape;
  shape.max_dim = 3;
  shape.update = 2;
  for (int round = 0; round < 100; ++round) {
    Vas vas = random_vas(rng, shape);
    CoverInstance inst{vas, random_vector(rng, vas.dim(), 0, 3), random_vector(rng, vas.dim(), 0, 3)};
    auto pn = convert_instance(inst, ModelKind::Pn);
    auto vass = convert_instance(pn, ModelKind::Vass);
    auto back = convert_instance(vass, ModelKind::Vas);
    const auto expected = decide(inst, Engine::Backward).kind;
    CHECK(decide(pn, Engine::Backward).kind == expected);
    CHECK(decide(vass, Engine::Backward).kind == expected);
    CHECK(decide(back, Engine::Backward).kind == expected);
  }
}

TEST_CASE("converting to the same formalism is the identity") {
  CoverInstance inst{load<Vas>("fig1c.vas"), IntVector{1, 1, 6, 0}, IntVector{2, 1, 6, 0}};
  auto same = convert_instance(inst, ModelKind::Vas);
  CHECK(std::get<Vas>(same.model) == std::get<Vas>(inst.model));
  CHECK(std::get<IntVector>(same.source) == IntVector{1, 1, 6, 0});
}
