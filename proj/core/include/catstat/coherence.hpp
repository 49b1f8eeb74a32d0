#pragma once

#include <bitset>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "catstat/report.hpp"

namespace catstat {

/// Immutable syntax tree of a monoidal expression with unit and duals.
/// Copies share structure.
class TensorExpr {
 public:
  enum class Kind { Atom, Unit, Tensor, Dual };

  static TensorExpr atom(std::string name);
  static TensorExpr unit();
  static TensorExpr tensor(TensorExpr left, TensorExpr right);
  static TensorExpr dual(TensorExpr inner);

  Kind kind() const noexcept;
  const std::string& name() const;  // Atom only
  const TensorExpr& left() const;   // Tensor only
  const TensorExpr& right() const;  // Tensor only
  const TensorExpr& inner() const;  // Dual only

  /// Number of nodes.
  std::size_t size() const noexcept;

  /// Surface syntax: "(x)" for the tensor product, postfix "^" for duals, "I"
  /// for the unit. Tensor operands that are themselves products are
  /// parenthesized, so the output parses back to the same tree.
  std::string to_string() const;

  friend bool operator==(const TensorExpr& a, const TensorExpr& b);

 private:
  struct Node;
  explicit TensorExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// expr := term { "(x)" term }   (left-associative)
/// term := primary { "^" }
/// primary := identifier | "I" | "(" expr ")"
/// The three characters "(x)" always form the tensor operator.
TensorExpr parse_expr(std::string_view text);

enum class Rule : std::uint8_t {
  Associate,     // (a (x) b) (x) c -> a (x) (b (x) c)
  LeftUnit,      // I (x) a -> a
  RightUnit,     // a (x) I -> a
  DualOfTensor,  // (a (x) b)^ -> b^ (x) a^
  DoubleDual,    // a^^ -> a
  DualOfUnit,    // I^ -> I
};
inline constexpr std::size_t kRuleCount = 6;
using RuleSet = std::bitset<kRuleCount>;

RuleSet all_rules();
RuleSet without(RuleSet rules, Rule rule);
const char* to_string(Rule rule) noexcept;

/// A rule applicable at the subterm reached by `path` (0 = left/inner, 1 = right).
struct Redex {
  std::vector<std::uint8_t> path;
  Rule rule;
};

/// Applicable redexes in pre-order: outermost first, left before right.
std::vector<Redex> find_redexes(const TensorExpr& e, RuleSet rules = all_rules());
TensorExpr rewrite_at(const TensorExpr& e, const Redex& redex);

struct RewriteResult {
  TensorExpr expr;
  std::size_t steps = 0;
};

/// Rewrites until no rule applies, always taking the first redex. Raises
/// Internal if more than 10 m^2 steps are needed for an m-node input.
RewriteResult rewrite_canonical(const TensorExpr& e, RuleSet rules = all_rules());
/// Same, choosing uniformly among the applicable redexes at every step.
RewriteResult rewrite_random(const TensorExpr& e, std::mt19937_64& rng, RuleSet rules = all_rules());

std::size_t rewrite_step_cap(const TensorExpr& e) noexcept;

/// Unit, or a right-nested product of atoms and dualized atoms.
class NormalForm {
 public:
  struct Leaf {
    std::string atom;
    bool dual = false;
    friend bool operator==(const Leaf&, const Leaf&) = default;
  };

  NormalForm() = default;
  explicit NormalForm(std::vector<Leaf> leaves) : leaves_(std::move(leaves)) {}

  /// The tree must already be in normal shape; nullopt otherwise.
  static std::optional<NormalForm> from_expr(const TensorExpr& e);

  bool is_unit() const noexcept { return leaves_.empty(); }
  const std::vector<Leaf>& leaves() const noexcept { return leaves_; }

  TensorExpr to_expr() const;
  /// "B^ (x) A^", or "I" for the unit.
  std::string to_string() const;

  friend bool operator==(const NormalForm&, const NormalForm&) = default;

 private:
  std::vector<Leaf> leaves_;
};

NormalForm normalize(const TensorExpr& e);
bool equal_up_to_coherence(const TensorExpr& a, const TensorExpr& b);

/// Random expression with between 1 and max(1, max_leaves) leaves, with
/// scattered units and (possibly repeated) duals.
TensorExpr random_expr(std::mt19937_64& rng, std::size_t max_leaves);

/// Generates `trials` random expressions and rewrites each in canonical and in
/// random order. Passes iff every pair of results coincides and is a normal
/// form. The defect is the number of failing trials.
CheckReport coherence_fuzz(std::uint64_t seed, std::size_t size, std::size_t trials,
                           RuleSet rules = all_rules());

}  // namespace catstat
