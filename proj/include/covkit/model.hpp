#pragma once

// Vector addition systems, VAS with states, Petri nets, and their step
// semantics. Models are immutable once constructed.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "covkit/vector.hpp"

namespace covkit {

/// Rejected model construction: duplicates, undeclared names, bad arity.
class ModelError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class StepErrorKind { NegativeCounter, BadIndex, WrongState, NotEnabled };

class StepError : public std::runtime_error {
 public:
  StepError(StepErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  StepErrorKind kind() const { return kind_; }

 private:
  StepErrorKind kind_;
};

class Vas {
 public:
  Vas(std::size_t dim, std::vector<IntVector> vectors);

  std::size_t dim() const { return dim_; }
  const std::vector<IntVector>& vectors() const { return vectors_; }

  friend bool operator==(const Vas&, const Vas&) = default;

 private:
  std::size_t dim_;
  std::vector<IntVector> vectors_;
};

struct VassTransition {
  std::size_t source;
  std::size_t target;
  IntVector update;

  friend bool operator==(const VassTransition&, const VassTransition&) = default;
};

/// States are kept in lexicographic order; a state's index is its rank in
/// that order. Transitions keep declaration order, which is also the order
/// every engine explores them in.
class Vass {
 public:
  struct Arrow {
    std::string source;
    std::string target;
    IntVector update;
  };

  Vass(std::size_t dim, std::vector<std::string> states, const std::vector<Arrow>& arrows);

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& states() const { return states_; }
  const std::vector<VassTransition>& transitions() const { return transitions_; }
  const std::string& state_name(std::size_t i) const { return states_.at(i); }

  std::optional<std::size_t> find_state(const std::string& name) const;
  /// Throws ModelError for unknown names.
  std::size_t state_index(const std::string& name) const;

  /// Transitions leaving / entering a state, in declaration order.
  const std::vector<std::size_t>& outgoing(std::size_t state) const { return outgoing_.at(state); }
  const std::vector<std::size_t>& incoming(std::size_t state) const { return incoming_.at(state); }

  friend bool operator==(const Vass& a, const Vass& b) {
    return a.dim_ == b.dim_ && a.states_ == b.states_ && a.transitions_ == b.transitions_;
  }

 private:
  std::size_t dim_;
  std::vector<std::string> states_;
  std::vector<VassTransition> transitions_;
  std::vector<std::vector<std::size_t>> outgoing_;
  std::vector<std::vector<std::size_t>> incoming_;
};

/// Places and transitions keep declaration order. A marking is an IntVector
/// indexed by place order.
class PetriNet {
 public:
  /// Either place -> transition (input flow) or transition -> place (output).
  struct Arc {
    std::string from;
    std::string to;
    Int weight;
  };

  PetriNet(std::vector<std::string> places, std::vector<std::string> transitions,
           const std::vector<Arc>& arcs);

  std::size_t dim() const { return places_.size(); }
  const std::vector<std::string>& places() const { return places_; }
  const std::vector<std::string>& transitions() const { return transitions_; }

  /// W(p, t) for every place p.
  const IntVector& input(std::size_t t) const { return input_.at(t); }
  /// W(t, p) for every place p.
  const IntVector& output(std::size_t t) const { return output_.at(t); }

  std::optional<std::size_t> find_place(const std::string& name) const;
  std::optional<std::size_t> find_transition(const std::string& name) const;

  friend bool operator==(const PetriNet&, const PetriNet&) = default;

 private:
  std::vector<std::string> places_;
  std::vector<std::string> transitions_;
  std::vector<IntVector> input_;
  std::vector<IntVector> output_;
};

struct VassConfig {
  std::size_t state = 0;
  IntVector counters;

  friend bool operator==(const VassConfig&, const VassConfig&) = default;
};

struct VassConfigHash {
  std::size_t operator()(const VassConfig& c) const {
    return IntVectorHash{}(c.counters) * 31 + c.state;
  }
};

/// "q(1,2)"
std::string to_string(const Vass& vass, const VassConfig& config);

/// VAS configurations and Petri net markings are plain vectors.
using Configuration = std::variant<IntVector, VassConfig>;
using Model = std::variant<Vas, Vass, PetriNet>;

enum class Encoding { Unary, Binary };

struct CoverInstance {
  Model model;
  Configuration source;
  Configuration target;
  Encoding encoding = Encoding::Unary;
};

/// Throws ShapeMismatch if source/target do not fit the model or are negative.
void check_instance(const CoverInstance& instance);

/// Step identifiers: vector index for a VAS, transition index otherwise.
using Witness = std::vector<std::size_t>;

IntVector vas_step(const Vas& vas, const IntVector& config, std::size_t vector_index);
VassConfig vass_step(const Vass& vass, const VassConfig& config, std::size_t transition);
IntVector pn_fire(const PetriNet& net, const IntVector& marking, std::size_t transition);

/// Non-throwing variants used by the engines.
std::optional<VassConfig> try_vass_step(const Vass& vass, const VassConfig& config,
                                        std::size_t transition);

/// a ⊒ b. VASS configurations additionally require equal states.
bool covers(const IntVector& a, const IntVector& b);
bool covers(const VassConfig& a, const VassConfig& b);
bool covers(const Configuration& a, const Configuration& b);

struct WitnessCheck {
  bool valid = false;
  Configuration final_config;
  /// Index of the first step that could not be taken; equals the witness
  /// length when every step fired but the target is not covered.
  std::optional<std::size_t> failed_step;
};

WitnessCheck validate_witness(const CoverInstance& instance, const Witness& witness);

}  // namespace covkit
