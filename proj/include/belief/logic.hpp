#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "belief/errors.hpp"
#include "belief/rational.hpp"

namespace belt {

// Set of thresholds the language can express beliefs up to: either an
// explicit finite set or all rationals in [0,1].
struct ThresholdSet {
  bool dense = true;
  std::vector<Rat> values;  // sorted, unique; empty iff dense

  static ThresholdSet dense_rationals() { return {}; }
  static ThresholdSet explicit_set(std::vector<Rat> vals);
  static ThresholdSet parse(std::string_view text);  // "dense" or "a/b,c/d,..."

  bool contains(const Rat& theta) const;
  // True for explicit sets that do not contain 1; introspection formulas
  // are then inexpressible.
  bool missing_one() const;
  std::string to_string() const;

  bool operator==(const ThresholdSet&) const = default;
};

enum class Conn { Atom, Not, And, Believes };

// Immutable formula AST for the graded-belief language: atoms, negation,
// conjunction, and B{i,theta}. Derived connectives are expanded at
// construction. Cheap to copy (shared nodes).
class Formula {
 public:
  static Formula atom(std::string name);
  static Formula lnot(Formula f);
  static Formula land(Formula a, Formula b);
  static Formula lor(Formula a, Formula b);      // !(!a & !b)
  static Formula implies(Formula a, Formula b);  // !(a & !b)
  static Formula iff(Formula a, Formula b);
  static Formula believes(int agent, Rat theta, Formula f);

  Conn kind() const { return node_->kind; }
  const std::string& atom_name() const { return node_->atom; }
  int agent() const { return node_->agent; }
  const Rat& theta() const { return node_->theta; }
  Formula child() const { return Formula(node_->lhs); }  // Not / Believes
  Formula lhs() const { return Formula(node_->lhs); }
  Formula rhs() const { return Formula(node_->rhs); }

  int modal_depth() const { return node_->depth; }
  std::size_t size() const { return node_->size; }
  bool purely_propositional() const { return node_->depth == 0; }
  // True iff every maximal non-Boolean subtree is a B-node for `agent`.
  bool is_i_formula(int agent) const;

  std::string render() const;

  bool operator==(const Formula& other) const;
  std::size_t hash() const;

 private:
  struct Node {
    Conn kind;
    std::string atom;
    int agent = 0;
    Rat theta;
    std::shared_ptr<const Node> lhs, rhs;
    int depth = 0;
    std::size_t size = 1;
    std::size_t hash = 0;
  };

  Formula() = default;
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

// Parses the concrete syntax
//   formula := iff ; iff := imp ("<->" imp)* ; imp := or ("->" or)* ;
//   or := and ("|" and)* ; and := unary ("&" unary)* ;
//   unary := "!" unary | "B" "{" nat "," rational "}" unary
//          | "(" formula ")" | atom ;
// against a vocabulary, agent count, and threshold set. |, ->, <-> are
// expanded into !,&. Throws Error with kind Syntax / UnknownAtom /
// ThresholdOutOfRange / ThresholdNotInSet / AgentOutOfRange.
Formula parse_formula(std::string_view text,
                      const std::vector<std::string>& vocab, int agent_count,
                      const ThresholdSet& thresholds);

// Exhaustive, duplicate-free, deterministic enumeration of formulas with
// modal_depth <= max_depth and node count <= max_size, in ascending size
// order. Requires an explicit threshold set. Throws BudgetExceeded once
// more than `budget` formulas would be produced.
std::vector<Formula> enumerate_formulas(const std::vector<std::string>& vocab,
                                        int agent_count,
                                        const ThresholdSet& thresholds,
                                        int max_depth, std::size_t max_size,
                                        std::size_t budget);

}  // namespace belt
