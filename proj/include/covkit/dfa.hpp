#pragma once

// Deterministic finite automata, the compiler from k DFAs to a 2k-VASS
// coverability instance, and the translations between words in the
// intersection and covering runs of the compiled VASS.

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "covkit/engines.hpp"
#include "covkit/model.hpp"

namespace covkit {

enum class ReductionErrorKind { AlphabetMismatch, EmptyList, WordRejected, MalformedPath };

class ReductionError : public std::invalid_argument {
 public:
  ReductionError(ReductionErrorKind kind, const std::string& what)
      : std::invalid_argument(what), kind_(kind) {}
  ReductionErrorKind kind() const { return kind_; }

 private:
  ReductionErrorKind kind_;
};

/// A word is a sequence of symbol names.
using Word = std::vector<std::string>;

/// Concatenates single-character symbols; otherwise joins with spaces.
std::string format_word(const Word& word);

/// States are numbered 1..state_count. The transition function may be
/// partial.
class Dfa {
 public:
  struct Move {
    std::size_t from;
    std::string symbol;
    std::size_t to;
  };

  /// Throws ModelError on out-of-range states, unknown or repeated symbols,
  /// and on two moves for the same (state, symbol).
  Dfa(std::vector<std::string> alphabet, std::size_t state_count, std::size_t initial,
      std::vector<std::size_t> finals, const std::vector<Move>& moves);

  const std::vector<std::string>& alphabet() const { return alphabet_; }
  std::size_t state_count() const { return state_count_; }
  std::size_t initial() const { return initial_; }
  /// Sorted.
  const std::vector<std::size_t>& finals() const { return finals_; }
  bool is_final(std::size_t state) const;

  std::optional<std::size_t> symbol_index(const std::string& symbol) const;
  std::optional<std::size_t> next(std::size_t state, std::size_t symbol) const;
  std::optional<std::size_t> next(std::size_t state, const std::string& symbol) const;

  /// Moves sorted by (state, symbol order).
  std::vector<Move> moves() const;

  bool accepts(const Word& word) const;
  /// |Q|·|Σ|
  std::size_t size() const { return state_count_ * alphabet_.size(); }

  friend bool operator==(const Dfa&, const Dfa&) = default;

 private:
  std::vector<std::string> alphabet_;
  std::size_t state_count_;
  std::size_t initial_;
  std::vector<std::size_t> finals_;
  // delta_[state - 1][symbol]
  std::vector<std::vector<std::optional<std::size_t>>> delta_;
};

/// All automata over the alphabet of the first one, with s states each and
/// initial state 1.
struct NormalizedDfas {
  std::vector<std::string> alphabet;
  std::size_t states;
  std::vector<Dfa> dfas;
};

/// Pads every automaton with non-final sink states up to the largest state
/// count and swaps its initial state with state 1.
NormalizedDfas normalize(const std::vector<Dfa>& dfas);

struct ReductionLayout {
  struct Part {
    std::size_t start;
    std::size_t end;
    /// Counter-neutral transition into `start`.
    std::size_t enter;
    /// DFA source state a -> (subtract (a, s-a), add (b, s-b)) transitions.
    std::map<std::size_t, std::array<std::size_t, 2>> moves;
  };
  struct Section {
    std::vector<Part> parts;
    /// Last part's end back to p.
    std::size_t exit;
  };
  struct CheckPart {
    std::size_t start;
    std::size_t end;
    std::size_t enter;
    /// Final state f -> transition subtracting (f, s-f).
    std::map<std::size_t, std::size_t> accept;
  };

  std::size_t k;
  std::size_t s;
  std::size_t p;
  std::size_t q;
  /// One section per alphabet symbol, in alphabet order.
  std::vector<Section> sections;
  std::vector<CheckPart> checking;
  /// Last checking part's end to q.
  std::size_t check_exit;

  /// Counter indices of automaton i (0-based).
  static std::size_t x(std::size_t i) { return 2 * i; }
  static std::size_t y(std::size_t i) { return 2 * i + 1; }
};

struct ReductionOutput {
  NormalizedDfas input;
  Vass vass;
  /// p(1, s−1, …, 1, s−1)
  VassConfig source;
  /// q(0, …, 0)
  VassConfig target;
  ReductionLayout layout;

  CoverInstance instance() const { return {vass, source, target, Encoding::Unary}; }
};

ReductionOutput build_reduction(const NormalizedDfas& norm);

/// Shortest word accepted by every automaton (least in alphabet order among
/// the shortest), or nothing if the intersection is empty.
std::optional<Word> product_oracle(const std::vector<Dfa>& dfas);

/// Every word of minimal length in the intersection, in alphabet order.
std::vector<Word> all_shortest_words(const std::vector<Dfa>& dfas);

/// Covering run of the compiled VASS spelling `word`; ends exactly in q(0).
Witness word_to_path(const ReductionOutput& reduction, const Word& word);

/// Word spelled by a covering run from the reduction's source to state q.
Word path_to_word(const ReductionOutput& reduction, const Witness& witness);

/// Compiles and runs a coverability engine.
bool decide_intersection(const std::vector<Dfa>& dfas, Engine engine);

}  // namespace covkit
