#pragma once

#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "eala/jordan.hpp"
#include "eala/operator.hpp"

namespace eala {

/// Expression tree over left multiplications, right translations and shifts.
/// Printed as "L[x^(1,0)]", "r[(0,1)]", "chi[(2,0)]", "[A,B]", "(A . B)".
class OperatorExpr {
 public:
  enum class Kind { Left, Right, Shift, Compose, Commutator, Sum, Scale };

  static OperatorExpr left(const LatticeVector& sigma);
  static OperatorExpr right(const LatticeVector& sigma);
  static OperatorExpr shift(const LatticeVector& mu);
  static OperatorExpr compose(const OperatorExpr& f, const OperatorExpr& g);
  static OperatorExpr commutator(const OperatorExpr& f, const OperatorExpr& g);
  static OperatorExpr sum(std::vector<OperatorExpr> terms);
  static OperatorExpr scale(const Scalar& c, const OperatorExpr& f);

  Kind kind() const { return node_->kind; }
  const LatticeVector& vector() const { return node_->v; }
  const Scalar& scalar() const { return node_->c; }
  const std::vector<OperatorExpr>& children() const { return node_->kids; }
  /// Degree of the operator (sum of shifts); sums take the degree of the first term.
  LatticeVector degree() const;

  std::string to_string() const;

 private:
  struct Node {
    Kind kind;
    LatticeVector v;
    Scalar c;
    std::vector<OperatorExpr> kids;
  };
  explicit OperatorExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Symbolic value of the expression.
OperatorSum lower(const JordanTorusSpec& spec, const OperatorExpr& expr);

/// Opt-in record of every expression passed to lower(), deduplicated by
/// family and printed form; used for spot-checking against direct evaluation.
class OperatorLog {
 public:
  void record(const JordanTorusSpec& spec, const OperatorExpr& expr);
  std::vector<std::pair<JordanTorusSpec, OperatorExpr>> entries() const;
  std::size_t size() const;

 private:
  mutable std::mutex mu_;
  std::set<std::pair<std::string, std::string>> seen_;
  std::vector<std::pair<JordanTorusSpec, OperatorExpr>> entries_;
};

/// Installs (or clears, with nullptr) the process-wide log.
void set_operator_log(OperatorLog* log);

}  // namespace eala
