#pragma once

// Coverability decision procedures over VASS. A VAS is handled as a
// single-state VASS whose transition indices coincide with vector indices,
// and a Petri net through pn_to_vass (witnesses are mapped back).

#include <cstddef>
#include <optional>
#include <vector>

#include "covkit/model.hpp"

namespace covkit {

// ---------------------------------------------------------------------------
// Upward-closed sets

/// Minimal elements of an upward-closed set of VASS configurations, kept
/// per state as a strict antichain. Every element carries a caller-chosen
/// tag (the backward engine stores its derivation there).
class UpwardBasis {
 public:
  struct Entry {
    IntVector value;
    std::size_t tag;
  };

  explicit UpwardBasis(std::size_t state_count) : entries_(state_count) {}

  /// True iff some element at `state` lies below `value`.
  bool contains(std::size_t state, const IntVector& value) const;
  bool contains(const VassConfig& config) const { return contains(config.state, config.counters); }

  /// Inserts unless already contained; elements above `value` are dropped
  /// and their tags appended to `removed` (if given). Returns whether the
  /// value was inserted.
  bool insert(std::size_t state, IntVector value, std::size_t tag = 0,
              std::vector<std::size_t>* removed = nullptr);

  const std::vector<Entry>& entries(std::size_t state) const { return entries_.at(state); }
  std::size_t state_count() const { return entries_.size(); }
  std::size_t size() const;
  bool is_antichain() const;

 private:
  std::vector<std::vector<Entry>> entries_;
};

/// Minimal configuration from which one `update` step lands above `m`:
/// componentwise max(m − update, 0).
IntVector pre_basis(const IntVector& m, const IntVector& update);

// ---------------------------------------------------------------------------
// ω-vectors

/// A natural number or ω. ω absorbs addition and dominates every natural.
class OmegaInt {
 public:
  OmegaInt() = default;
  explicit OmegaInt(Int value) : value_(std::move(value)) {}
  static OmegaInt omega() {
    OmegaInt w;
    w.omega_ = true;
    return w;
  }

  bool is_omega() const { return omega_; }
  /// Only meaningful when finite.
  const Int& value() const { return value_; }

  OmegaInt operator+(const Int& z) const { return omega_ ? *this : OmegaInt(value_ + z); }
  friend bool operator==(const OmegaInt& a, const OmegaInt& b) {
    return a.omega_ == b.omega_ && (a.omega_ || a.value_ == b.value_);
  }
  friend bool operator<=(const OmegaInt& a, const OmegaInt& b) {
    return b.omega_ || (!a.omega_ && a.value_ <= b.value_);
  }
  friend bool operator<(const OmegaInt& a, const OmegaInt& b) { return a <= b && !(a == b); }

 private:
  bool omega_ = false;
  Int value_ = 0;
};

using OmegaVector = std::vector<OmegaInt>;

OmegaVector to_omega(const IntVector& v);
bool leq(const OmegaVector& a, const OmegaVector& b);
bool covers(const OmegaVector& a, const IntVector& b);
bool has_omega(const OmegaVector& v);
std::string to_string(const OmegaVector& v);

// ---------------------------------------------------------------------------
// Verdicts

struct SearchLimits {
  std::optional<std::size_t> max_length;
  std::optional<Int> max_component;
};

enum class VerdictKind { Coverable, NotCoverable, Inconclusive };

struct Verdict {
  VerdictKind kind = VerdictKind::Inconclusive;
  /// Set for Coverable.
  Witness witness;
  /// Backward engine: the final basis when NotCoverable. Absent for the
  /// other engines, whose NotCoverable means an exhausted search.
  std::optional<UpwardBasis> basis;
  /// Configurations (or tree nodes, or basis insertions) processed.
  std::size_t explored = 0;
};

// ---------------------------------------------------------------------------
// Backward fixpoint

struct BackwardOptions {
  /// Stop as soon as the source enters the basis. Disable to always compute
  /// the full fixpoint.
  bool stop_at_source = true;
};

Verdict backward_cover(const Vass& vass, const VassConfig& source, const VassConfig& target,
                       const BackwardOptions& options = {});

/// The basis contains the target and is closed under pre_basis along every
/// transition.
bool is_backward_fixpoint(const Vass& vass, const UpwardBasis& basis, const VassConfig& target);

// ---------------------------------------------------------------------------
// Karp–Miller

class KarpMillerTree {
 public:
  struct Node {
    std::size_t state;
    OmegaVector label;
    std::optional<std::size_t> parent;
    /// Transition leading here from the parent.
    std::optional<std::size_t> via;
    /// False for leaves repeating an earlier (state, label) pair.
    bool expanded = false;
  };

  static KarpMillerTree build(const Vass& vass, const VassConfig& source);

  const std::vector<Node>& nodes() const { return nodes_; }

  /// Shallowest node whose label covers the target, preferring ω-free
  /// labels.
  std::optional<std::size_t> covering_node(const VassConfig& target) const;
  bool can_cover(const VassConfig& target) const { return covering_node(target).has_value(); }

  /// Transitions from the root to a node.
  Witness path_to(std::size_t node) const;

 private:
  std::vector<Node> nodes_;
};

/// A Coverable verdict carries the tree path when the covering label is
/// ω-free; otherwise the witness is extracted by the backward engine.
Verdict karp_miller_cover(const Vass& vass, const VassConfig& source, const VassConfig& target);

// ---------------------------------------------------------------------------
// Bounded forward search

enum class Goal { Cover, Reach };

struct ForwardOptions {
  SearchLimits limits;
  Goal goal = Goal::Cover;
  /// Skip configurations below an already visited one. Keeps the decision
  /// sound but witnesses need no longer be shortest.
  bool subsumption = false;
};

/// Breadth-first search; transitions in declaration order. Requires at
/// least one limit.
Verdict forward_search(const Vass& vass, const VassConfig& source, const VassConfig& target,
                       const ForwardOptions& options);

/// Exact length of a shortest covering witness if it is at most `cap`.
std::optional<std::size_t> shortest_witness_length(const Vass& vass, const VassConfig& source,
                                                   const VassConfig& target, std::size_t cap);

/// Every configuration reachable within the limits (components ≤ max
/// component, runs ≤ max length), in discovery order.
std::vector<VassConfig> explore(const Vass& vass, const VassConfig& source, const SearchLimits& limits);

/// Brute-force oracle: does the bounded reachable set contain a
/// configuration covering the target?
bool brute_force_cover(const Vass& vass, const VassConfig& source, const VassConfig& target,
                       const SearchLimits& limits);

// ---------------------------------------------------------------------------
// Instance-level entry points

enum class Engine { Backward, KarpMiller, Forward };

/// Runs an engine on any model. Witnesses refer to the instance's own
/// model (vector indices for a VAS, net transitions for a Petri net).
/// `limits` is used by the forward engine only.
Verdict decide(const CoverInstance& instance, Engine engine, const SearchLimits& limits = {});

std::optional<std::size_t> shortest_witness_length(const CoverInstance& instance, std::size_t cap);

}  // namespace covkit
