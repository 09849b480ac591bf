#pragma once

// Line-oriented text formats. `#` starts a comment; fields are separated by
// whitespace. The first significant line of a model file is
// `model vas|vass|pn|dfa`.

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "covkit/dfa.hpp"
#include "covkit/model.hpp"

namespace covkit {

/// Malformed syntax. `line` is 1-based; 0 when no single line is at fault.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Well-formed but meaningless input: undeclared names, wrong arity,
/// duplicates, nondeterminism.
class SemanticError : public std::runtime_error {
 public:
  SemanticError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

using AnyModel = std::variant<Vas, Vass, PetriNet, Dfa>;

AnyModel parse_model(std::string_view text);
std::string serialize_model(const AnyModel& model);
std::string serialize_model(const Model& model);

/// "vas", "vass", "pn" or "dfa".
std::string model_keyword(const AnyModel& model);

/// Narrow to a coverability model; throws SemanticError for a DFA.
Model as_cover_model(const AnyModel& model);

/// `init ...` and `target ...` lines. VAS: naturals; VASS: `STATE : v1 ...`;
/// Petri net: `PLACE=COUNT ...` (unlisted places are 0).
std::pair<Configuration, Configuration> parse_instance(std::string_view text, const Model& model);
std::string serialize_instance(const Model& model, const Configuration& source,
                               const Configuration& target);

/// Any number of `init` and `target` lines; each target is paired with the
/// latest preceding init.
std::vector<std::pair<Configuration, Configuration>> parse_family(std::string_view text,
                                                                  const Model& model);

/// Configuration as it appears after `init`/`target`.
std::string format_config(const Model& model, const Configuration& config);

/// `witness N` followed by N lines `vec INDEX` (VAS) or `trans NAME`
/// (transition index for a VASS, transition name for a Petri net).
Witness parse_witness(std::string_view text, const Model& model);
std::string serialize_witness(const Model& model, const Witness& witness);

}  // namespace covkit
