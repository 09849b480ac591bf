#pragma once

// Coverability-preserving translations between Petri nets, VASS and VAS.
// Each translation returns the new model together with the map that carries
// configurations (and witnesses, where needed) across.

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "covkit/model.hpp"

namespace covkit {

/// Net -> VASS: hub state plus one intermediate state per net transition.
struct PnToVass {
  Vass vass;
  std::size_t hub;
  /// Intermediate state of each net transition.
  std::vector<std::size_t> middle;
  /// VASS transitions (hub -> middle, middle -> hub) of each net transition.
  std::vector<std::array<std::size_t, 2>> gadget;

  VassConfig encode(const IntVector& marking) const { return {hub, marking}; }
  /// Defined only at the hub.
  std::optional<IntVector> decode(const VassConfig& config) const;
  /// Maps a VASS witness back to net transitions. The witness must consist
  /// of complete hub -> middle -> hub gadgets.
  std::optional<Witness> lift(const Witness& vass_witness) const;
};

PnToVass pn_to_vass(const PetriNet& net);

/// VAS -> net. Places p1..pd, transition t<i> for vector i; markings are the
/// configurations themselves.
PetriNet vas_to_pn(const Vas& vas);

/// VAS -> single-state VASS with one self-loop per vector (same order).
Vass vas_to_vass(const Vas& vas);

/// Three extra counters holding a per-state code. State j (1-based, in the
/// VASS's lexicographic order) with N = |Q|+1 gets (j, N·(N−j), 0).
class StateEncoding {
 public:
  explicit StateEncoding(std::size_t state_count);

  std::size_t state_count() const { return state_count_; }
  /// Code of a (0-based) state.
  std::array<Int, 3> code(std::size_t state) const;
  /// Largest value any code or intermediate gadget value may take.
  Int bound() const;
  /// Inverse of code(); nullopt for non-codes.
  std::optional<std::size_t> decode(const Int& a, const Int& b, const Int& c) const;

  /// The three extra-counter updates simulating one transition src -> dst:
  /// two checks of the source code followed by the re-encoding to dst.
  std::array<std::array<Int, 3>, 3> gadget(std::size_t src, std::size_t dst) const;

 private:
  std::size_t state_count_;
};

struct VassToVas {
  Vas vas;
  StateEncoding encoding;
  std::size_t base_dim;
  /// VAS vectors (check, check, apply) simulating each VASS transition.
  /// Transitions leaving the same state share their two check vectors.
  std::vector<std::array<std::size_t, 3>> gadget;

  IntVector encode(const VassConfig& config) const;
  /// Defined only on configurations whose last three components are a code.
  std::optional<VassConfig> decode(const IntVector& config) const;
  /// Replaces each VASS transition by its three VAS vectors.
  Witness expand(const Witness& vass_witness) const;
};

VassToVas vass_to_vas(const Vass& vass);

/// Instance-level translation used by the CLI: converts the model of an
/// instance to the requested formalism and maps source/target along.
enum class ModelKind { Vas, Vass, Pn };
CoverInstance convert_instance(const CoverInstance& instance, ModelKind to);
Model convert_model(const Model& model, ModelKind to);

}  // namespace covkit
