// Polymodal formulas: syntax tree, parsing, rendering and the guard
// constructions used by the GLP.3 decision procedure.
#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace plog {

enum class Op { Top, Var, Not, And, Or, Imp, Box, Dia };

/// Immutable formula value. Children are shared, so copies are cheap and
/// the whole tree can be read from several threads at once.
class Formula {
 public:
  /// Default-constructed formula is T.
  Formula();

  static Formula top();
  static Formula bottom();  // ~T
  static Formula var(std::string name);
  static Formula neg(Formula f);
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula imp(Formula a, Formula b);
  static Formula box(unsigned index, Formula f);
  static Formula dia(unsigned index, Formula f);

  Op op() const;
  /// Variable name; empty for non-variables.
  const std::string& name() const;
  /// Modality index of a Box/Dia node.
  unsigned index() const;
  /// Operand of a unary node or left operand of a binary one.
  const Formula& lhs() const;
  /// Right operand of a binary node.
  const Formula& rhs() const;

  bool is_unary() const { return op() == Op::Not || op() == Op::Box || op() == Op::Dia; }
  bool is_binary() const { return op() == Op::And || op() == Op::Or || op() == Op::Imp; }
  bool is_closed() const;
  std::size_t size() const;
  std::size_t modal_depth() const;

  friend bool operator==(const Formula& a, const Formula& b);
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Conjunction of a list, left-associated; the empty conjunction is T.
Formula conj_all(const std::vector<Formula>& fs);
/// Disjunction of a list, left-associated; the empty disjunction is ~T.
Formula disj_all(const std::vector<Formula>& fs);

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

Formula parse_formula(std::string_view text);
std::string render_formula(const Formula& f);

/// Rewrites every <m>A as ~[m]~A. Idempotent.
Formula box_normalize(const Formula& f);

std::set<Formula> subformulas(const Formula& f);

/// Least set containing the subformulas of box_normalize(f), closed under
/// single negation of non-negated members and under re-indexing of boxes to
/// every index below n. Throws std::invalid_argument if n is below the
/// modal signature of f.
std::set<Formula> closure_sigma(const Formula& f, unsigned n);

/// Monotonicity guard: conjunction of [m]A -> [k]A for every box subformula
/// [m]A of box_normalize(f) and every m < k < n.
Formula m_guard(const Formula& f, unsigned n);
/// m_guard(f, n) & [0]m_guard(f, n) & ... & [n-1]m_guard(f, n).
Formula m_plus(const Formula& f, unsigned n);

/// Replaces each variable with a closed formula. Throws
/// std::invalid_argument on a missing variable or a non-closed image.
Formula substitute_closed(const Formula& f, const std::map<std::string, Formula>& subst);

/// 1 + largest modality index, 0 if the formula has no modalities.
unsigned modal_signature(const Formula& f);
/// Number of Box and Dia nodes.
std::size_t modal_count(const Formula& f);

std::set<std::string> variables(const Formula& f);

/// Adds `by` to every modality index.
Formula shift_modalities(const Formula& f, unsigned by);

/// <i1><i2>...<ik>T. The empty worm is T.
struct Worm {
  std::vector<unsigned> indices;

  Formula to_formula() const;
  /// Throws std::invalid_argument unless f has the shape <i1>...<ik>T.
  static Worm from_formula(const Formula& f);

  friend bool operator==(const Worm&, const Worm&) = default;
};

}  // namespace plog
