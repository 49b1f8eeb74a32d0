#include "catstat/coherence.hpp"

#include <algorithm>
#include <cctype>

#include "catstat/error.hpp"

namespace catstat {

struct TensorExpr::Node {
  Kind kind;
  std::string name;
  std::optional<TensorExpr> a;
  std::optional<TensorExpr> b;
  std::size_t size;
};

TensorExpr TensorExpr::atom(std::string name) {
  if (name.empty()) raise(ErrorKind::Syntax, "atom names must be nonempty");
  return TensorExpr(std::make_shared<const Node>(Node{Kind::Atom, std::move(name), std::nullopt, std::nullopt, 1}));
}

TensorExpr TensorExpr::unit() {
  static const TensorExpr shared(std::make_shared<const Node>(Node{Kind::Unit, {}, std::nullopt, std::nullopt, 1}));
  return shared;
}

TensorExpr TensorExpr::tensor(TensorExpr left, TensorExpr right) {
  const auto n = 1 + left.size() + right.size();
  return TensorExpr(std::make_shared<const Node>(Node{Kind::Tensor, {}, std::move(left), std::move(right), n}));
}

TensorExpr TensorExpr::dual(TensorExpr inner) {
  const auto n = 1 + inner.size();
  return TensorExpr(std::make_shared<const Node>(Node{Kind::Dual, {}, std::move(inner), std::nullopt, n}));
}

TensorExpr::Kind TensorExpr::kind() const noexcept { return node_->kind; }

const std::string& TensorExpr::name() const {
  if (node_->kind != Kind::Atom) raise(ErrorKind::Internal, "name() on a non-atom");
  return node_->name;
}

const TensorExpr& TensorExpr::left() const {
  if (node_->kind != Kind::Tensor) raise(ErrorKind::Internal, "left() on a non-tensor");
  return *node_->a;
}

const TensorExpr& TensorExpr::right() const {
  if (node_->kind != Kind::Tensor) raise(ErrorKind::Internal, "right() on a non-tensor");
  return *node_->b;
}

const TensorExpr& TensorExpr::inner() const {
  if (node_->kind != Kind::Dual) raise(ErrorKind::Internal, "inner() on a non-dual");
  return *node_->a;
}

std::size_t TensorExpr::size() const noexcept { return node_->size; }

std::string TensorExpr::to_string() const {
  switch (kind()) {
    case Kind::Atom: return name();
    case Kind::Unit: return "I";
    case Kind::Dual: {
      const auto& x = inner();
      if (x.kind() == Kind::Tensor) return "(" + x.to_string() + ")^";
      return x.to_string() + "^";
    }
    case Kind::Tensor: {
      const auto side = [](const TensorExpr& x) {
        return x.kind() == Kind::Tensor ? "(" + x.to_string() + ")" : x.to_string();
      };
      return side(left()) + " (x) " + side(right());
    }
  }
  return {};
}

bool operator==(const TensorExpr& a, const TensorExpr& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.size() != b.size()) return false;
  switch (a.kind()) {
    case TensorExpr::Kind::Atom: return a.name() == b.name();
    case TensorExpr::Kind::Unit: return true;
    case TensorExpr::Kind::Dual: return a.inner() == b.inner();
    case TensorExpr::Kind::Tensor: return a.left() == b.left() && a.right() == b.right();
  }
  return false;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  TensorExpr parse() {
    auto e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    if (pos_ >= text_.size()) throw Error(ErrorKind::Syntax, "syntax error at end: " + what);
    throw Error(ErrorKind::Syntax,
                "syntax error at position " + std::to_string(pos_) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_tensor() {
    skip_ws();
    return text_.substr(pos_, 3) == "(x)";
  }

  TensorExpr expr() {
    auto e = term();
    while (at_tensor()) {
      pos_ += 3;
      e = TensorExpr::tensor(std::move(e), term());
    }
    return e;
  }

  TensorExpr term() {
    auto e = primary();
    while (true) {
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '^') {
        ++pos_;
        e = TensorExpr::dual(std::move(e));
      } else {
        return e;
      }
    }
  }

  TensorExpr primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("expected an operand");
    if (text_.substr(pos_, 3) == "(x)") fail("expected an operand before '(x)'");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      auto e = expr();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const auto start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      auto ident = std::string(text_.substr(start, pos_ - start));
      if (ident == "I") return TensorExpr::unit();
      return TensorExpr::atom(std::move(ident));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

TensorExpr parse_expr(std::string_view text) { return Parser(text).parse(); }

// ---------------------------------------------------------------------------
// Rewriting

RuleSet all_rules() { return RuleSet{}.set(); }

RuleSet without(RuleSet rules, Rule rule) { return rules.reset(static_cast<std::size_t>(rule)); }

const char* to_string(Rule rule) noexcept {
  switch (rule) {
    case Rule::Associate: return "associate";
    case Rule::LeftUnit: return "left-unit";
    case Rule::RightUnit: return "right-unit";
    case Rule::DualOfTensor: return "dual-of-tensor";
    case Rule::DoubleDual: return "double-dual";
    case Rule::DualOfUnit: return "dual-of-unit";
  }
  return "unknown";
}

namespace {

using Kind = TensorExpr::Kind;

bool has(RuleSet rules, Rule r) { return rules.test(static_cast<std::size_t>(r)); }

void collect(const TensorExpr& e, RuleSet rules, std::vector<std::uint8_t>& path, std::vector<Redex>& out) {
  if (e.kind() == Kind::Tensor) {
    if (has(rules, Rule::Associate) && e.left().kind() == Kind::Tensor) out.push_back({path, Rule::Associate});
    if (has(rules, Rule::LeftUnit) && e.left().kind() == Kind::Unit) out.push_back({path, Rule::LeftUnit});
    if (has(rules, Rule::RightUnit) && e.right().kind() == Kind::Unit) out.push_back({path, Rule::RightUnit});
    path.push_back(0);
    collect(e.left(), rules, path, out);
    path.back() = 1;
    collect(e.right(), rules, path, out);
    path.pop_back();
  } else if (e.kind() == Kind::Dual) {
    const auto k = e.inner().kind();
    if (has(rules, Rule::DualOfTensor) && k == Kind::Tensor) out.push_back({path, Rule::DualOfTensor});
    if (has(rules, Rule::DoubleDual) && k == Kind::Dual) out.push_back({path, Rule::DoubleDual});
    if (has(rules, Rule::DualOfUnit) && k == Kind::Unit) out.push_back({path, Rule::DualOfUnit});
    path.push_back(0);
    collect(e.inner(), rules, path, out);
    path.pop_back();
  }
}

TensorExpr apply_rule(const TensorExpr& e, Rule rule) {
  switch (rule) {
    case Rule::Associate:
      return TensorExpr::tensor(e.left().left(), TensorExpr::tensor(e.left().right(), e.right()));
    case Rule::LeftUnit: return e.right();
    case Rule::RightUnit: return e.left();
    case Rule::DualOfTensor:
      return TensorExpr::tensor(TensorExpr::dual(e.inner().right()), TensorExpr::dual(e.inner().left()));
    case Rule::DoubleDual: return e.inner().inner();
    case Rule::DualOfUnit: return TensorExpr::unit();
  }
  raise(ErrorKind::Internal, "unknown rewrite rule");
}

TensorExpr rewrite_path(const TensorExpr& e, const std::vector<std::uint8_t>& path, std::size_t depth, Rule rule) {
  if (depth == path.size()) return apply_rule(e, rule);
  if (e.kind() == Kind::Tensor) {
    if (path[depth] == 0) return TensorExpr::tensor(rewrite_path(e.left(), path, depth + 1, rule), e.right());
    return TensorExpr::tensor(e.left(), rewrite_path(e.right(), path, depth + 1, rule));
  }
  if (e.kind() == Kind::Dual) return TensorExpr::dual(rewrite_path(e.inner(), path, depth + 1, rule));
  raise(ErrorKind::Internal, "redex path leads into a leaf");
}

template <class Pick>
RewriteResult rewrite_with(const TensorExpr& e, RuleSet rules, Pick pick) {
  const auto cap = rewrite_step_cap(e);
  RewriteResult result{e, 0};
  while (true) {
    const auto redexes = find_redexes(result.expr, rules);
    if (redexes.empty()) return result;
    if (result.steps == cap) {
      raise(ErrorKind::Internal, "rewriting " + e.to_string() + " exceeded " + std::to_string(cap) + " steps");
    }
    result.expr = rewrite_at(result.expr, redexes[pick(redexes.size())]);
    ++result.steps;
  }
}

}  // namespace

std::vector<Redex> find_redexes(const TensorExpr& e, RuleSet rules) {
  std::vector<Redex> out;
  std::vector<std::uint8_t> path;
  collect(e, rules, path, out);
  return out;
}

TensorExpr rewrite_at(const TensorExpr& e, const Redex& redex) { return rewrite_path(e, redex.path, 0, redex.rule); }

std::size_t rewrite_step_cap(const TensorExpr& e) noexcept { return 10 * e.size() * e.size(); }

RewriteResult rewrite_canonical(const TensorExpr& e, RuleSet rules) {
  return rewrite_with(e, rules, [](std::size_t) { return std::size_t{0}; });
}

RewriteResult rewrite_random(const TensorExpr& e, std::mt19937_64& rng, RuleSet rules) {
  return rewrite_with(e, rules, [&rng](std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
  });
}

// ---------------------------------------------------------------------------
// Normal forms

std::optional<NormalForm> NormalForm::from_expr(const TensorExpr& e) {
  if (e.kind() == Kind::Unit) return NormalForm{};
  std::vector<Leaf> leaves;
  const TensorExpr* cur = &e;
  const auto leaf = [](const TensorExpr& x) -> std::optional<Leaf> {
    if (x.kind() == Kind::Atom) return Leaf{x.name(), false};
    if (x.kind() == Kind::Dual && x.inner().kind() == Kind::Atom) return Leaf{x.inner().name(), true};
    return std::nullopt;
  };
  while (cur->kind() == Kind::Tensor) {
    auto l = leaf(cur->left());
    if (!l) return std::nullopt;
    leaves.push_back(std::move(*l));
    cur = &cur->right();
  }
  auto last = leaf(*cur);
  if (!last) return std::nullopt;
  leaves.push_back(std::move(*last));
  return NormalForm(std::move(leaves));
}

TensorExpr NormalForm::to_expr() const {
  if (leaves_.empty()) return TensorExpr::unit();
  const auto make = [](const Leaf& l) {
    auto a = TensorExpr::atom(l.atom);
    return l.dual ? TensorExpr::dual(std::move(a)) : a;
  };
  auto e = make(leaves_.back());
  for (auto it = leaves_.rbegin() + 1; it != leaves_.rend(); ++it) e = TensorExpr::tensor(make(*it), std::move(e));
  return e;
}

std::string NormalForm::to_string() const {
  if (leaves_.empty()) return "I";
  std::string s;
  for (std::size_t i = 0; i < leaves_.size(); ++i) {
    if (i) s += " (x) ";
    s += leaves_[i].atom;
    if (leaves_[i].dual) s += "^";
  }
  return s;
}

NormalForm normalize(const TensorExpr& e) {
  const auto result = rewrite_canonical(e);
  auto nf = NormalForm::from_expr(result.expr);
  if (!nf) raise(ErrorKind::Internal, "rewriting stopped at a non-normal term " + result.expr.to_string());
  return *nf;
}

bool equal_up_to_coherence(const TensorExpr& a, const TensorExpr& b) { return normalize(a) == normalize(b); }

// ---------------------------------------------------------------------------
// Fuzzing

namespace {

TensorExpr random_tree(std::mt19937_64& rng, std::size_t leaves) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  TensorExpr e = TensorExpr::unit();
  if (leaves <= 1) {
    if (u(rng) < 0.15) {
      e = TensorExpr::unit();
    } else {
      static constexpr const char* kNames[] = {"A", "B", "C", "D", "E"};
      e = TensorExpr::atom(kNames[std::uniform_int_distribution<int>(0, 4)(rng)]);
    }
  } else {
    const auto left = std::uniform_int_distribution<std::size_t>(1, leaves - 1)(rng);
    e = TensorExpr::tensor(random_tree(rng, left), random_tree(rng, leaves - left));
  }
  while (u(rng) < 0.3) e = TensorExpr::dual(std::move(e));
  return e;
}

}  // namespace

TensorExpr random_expr(std::mt19937_64& rng, std::size_t max_leaves) {
  const auto leaves = std::uniform_int_distribution<std::size_t>(1, std::max<std::size_t>(1, max_leaves))(rng);
  return random_tree(rng, leaves);
}

CheckReport coherence_fuzz(std::uint64_t seed, std::size_t size, std::size_t trials, RuleSet rules) {
  std::mt19937_64 rng(seed);
  std::size_t failures = 0;
  std::string witness;
  for (std::size_t t = 0; t < trials; ++t) {
    const auto e = random_expr(rng, size);
    const auto canonical = rewrite_canonical(e, rules).expr;
    const auto shuffled = rewrite_random(e, rng, rules).expr;
    const bool ok = canonical == shuffled && NormalForm::from_expr(canonical) && NormalForm::from_expr(shuffled);
    if (!ok) {
      if (failures == 0) witness = e.to_string() + " -> " + canonical.to_string() + " | " + shuffled.to_string();
      ++failures;
    }
  }
  CheckReport report;
  report.add(graded_check("coherence_confluence", static_cast<double>(failures), 0.0, witness));
  return report;
}

}  // namespace catstat
