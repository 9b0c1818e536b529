#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "amalgam/amalgamation.hpp"

namespace amalgam {

struct SExpr {
  bool atom = true;
  std::string text;
  std::vector<SExpr> items;
  int line = 1;
  int column = 1;

  std::string str() const;
};

struct SpecError {
  enum class Kind { Syntax, UnknownConstructor, UnresolvedReference, Duplicate, Build, Budget };
  Kind kind = Kind::Syntax;
  int line = 0;
  int column = 0;
  std::string message;
  std::string entry;  // name of the failing definition, when known

  /// Syntax-level errors mean the file itself is malformed.
  bool syntax_level() const { return kind != Kind::Build && kind != Kind::Budget; }
  std::string str() const;
};

class SpecParseError : public Error {
 public:
  explicit SpecParseError(SpecError e) : Error(e.str()), error_(std::move(e)) {}
  const SpecError& error() const { return error_; }

 private:
  SpecError error_;
};

/// Reads every top-level form; throws SpecParseError on unbalanced input.
std::vector<SExpr> read_sexprs(std::string_view text);

/// Result of evaluating one expression.
struct SpecValue {
  enum class Kind { Ring, Ideal, Hom, Amalgamation, FiberProduct };
  Kind kind = Kind::Ring;
  Ring ring;  // the ring itself, or the carrier for amalgamations and fiber products
  std::optional<Ideal> ideal;
  std::optional<RingHom> hom;
  std::shared_ptr<const AmalgamatedRing> amalg;
  std::shared_ptr<const FiberProduct> fiber;

  const char* kind_name() const;
};

struct Definition {
  std::string name;
  std::string expression;  // canonical text of the defining form
  int line = 0;
  SpecValue value;
};

/// (expect NAME BASIS (VERDICT BOOL) ...): verdicts registered before the run.
struct Expectation {
  std::string entry;
  std::string basis;  // published | derived | trivial
  std::vector<std::pair<std::string, bool>> verdicts;
  int line = 0;
};

struct SpecFile {
  std::vector<Definition> defs;
  std::vector<Expectation> expectations;
  /// Entries that failed; they are absent from defs.
  std::vector<SpecError> errors;

  const Definition* find(std::string_view name) const;
  bool has_syntax_errors() const;
};

/// Parses and builds every definition in order. Definitions may only refer to
/// earlier ones. A failing definition is recorded in `errors` and skipped.
SpecFile parse_spec(std::string_view text, const Budget& budget = {});

/// Evaluates one expression against the definitions of `env` (may be null).
SpecValue evaluate_expression(std::string_view text, const SpecFile* env, const Budget& budget = {});

/// Named canonical homomorphism between two rings (identity, reduction,
/// inclusion, diagonal, proj1, proj2), resolved from how the rings were built.
RingHom named_hom(const std::string& name, const Ring& source, const Ring& target);

}  // namespace amalgam
