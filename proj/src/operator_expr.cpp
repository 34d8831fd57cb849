#include "eala/operator_expr.hpp"

#include <atomic>
#include <stdexcept>

namespace eala {

namespace {
std::atomic<OperatorLog*> g_log{nullptr};
}  // namespace

OperatorExpr OperatorExpr::left(const LatticeVector& sigma) {
  return OperatorExpr(std::make_shared<const Node>(Node{Kind::Left, sigma, Scalar(1), {}}));
}

OperatorExpr OperatorExpr::right(const LatticeVector& sigma) {
  return OperatorExpr(std::make_shared<const Node>(Node{Kind::Right, sigma, Scalar(1), {}}));
}

OperatorExpr OperatorExpr::shift(const LatticeVector& mu) {
  return OperatorExpr(std::make_shared<const Node>(Node{Kind::Shift, mu, Scalar(1), {}}));
}

OperatorExpr OperatorExpr::compose(const OperatorExpr& f, const OperatorExpr& g) {
  return OperatorExpr(std::make_shared<const Node>(Node{Kind::Compose, {}, Scalar(1), {f, g}}));
}

OperatorExpr OperatorExpr::commutator(const OperatorExpr& f, const OperatorExpr& g) {
  return OperatorExpr(std::make_shared<const Node>(Node{Kind::Commutator, {}, Scalar(1), {f, g}}));
}

OperatorExpr OperatorExpr::sum(std::vector<OperatorExpr> terms) {
  if (terms.empty()) throw std::invalid_argument("empty operator sum");
  return OperatorExpr(std::make_shared<const Node>(Node{Kind::Sum, {}, Scalar(1), std::move(terms)}));
}

OperatorExpr OperatorExpr::scale(const Scalar& c, const OperatorExpr& f) {
  return OperatorExpr(std::make_shared<const Node>(Node{Kind::Scale, {}, c, {f}}));
}

LatticeVector OperatorExpr::degree() const {
  switch (kind()) {
    case Kind::Left:
    case Kind::Right:
    case Kind::Shift: return vector();
    case Kind::Compose:
    case Kind::Commutator: return children()[0].degree() + children()[1].degree();
    case Kind::Sum:
    case Kind::Scale: return children()[0].degree();
  }
  return {};
}

std::string OperatorExpr::to_string() const {
  switch (kind()) {
    case Kind::Left: return "L[x^" + vector().to_string() + "]";
    case Kind::Right: return "r[" + vector().to_string() + "]";
    case Kind::Shift: return "chi[" + vector().to_string() + "]";
    case Kind::Compose: return "(" + children()[0].to_string() + " . " + children()[1].to_string() + ")";
    case Kind::Commutator: return "[" + children()[0].to_string() + "," + children()[1].to_string() + "]";
    case Kind::Sum: {
      std::string out;
      for (const auto& k : children()) {
        if (!out.empty()) out += " + ";
        out += k.to_string();
      }
      return out;
    }
    case Kind::Scale: return coefficient_prefix(scalar()) + "(" + children()[0].to_string() + ")";
  }
  return {};
}

namespace {

OperatorSum lower_impl(const JordanTorusSpec& spec, const OperatorExpr& e) {
  switch (e.kind()) {
    case OperatorExpr::Kind::Left: return left_mult(spec, e.vector());
    case OperatorExpr::Kind::Right: return right_translation(spec, e.vector());
    case OperatorExpr::Kind::Shift: return shift_operator(spec, e.vector());
    case OperatorExpr::Kind::Compose:
      return compose(lower_impl(spec, e.children()[0]), lower_impl(spec, e.children()[1]));
    case OperatorExpr::Kind::Commutator:
      return commutator(lower_impl(spec, e.children()[0]), lower_impl(spec, e.children()[1]));
    case OperatorExpr::Kind::Sum: {
      OperatorSum out(spec.nu(), spec.q_mode());
      for (const auto& k : e.children()) out += lower_impl(spec, k);
      return out;
    }
    case OperatorExpr::Kind::Scale: return e.scalar() * lower_impl(spec, e.children()[0]);
  }
  return {};
}

}  // namespace

OperatorSum lower(const JordanTorusSpec& spec, const OperatorExpr& expr) {
  if (OperatorLog* log = g_log.load(std::memory_order_acquire)) log->record(spec, expr);
  return lower_impl(spec, expr);
}

void OperatorLog::record(const JordanTorusSpec& spec, const OperatorExpr& expr) {
  std::lock_guard lock(mu_);
  if (seen_.emplace(spec.descriptor(), expr.to_string()).second) entries_.emplace_back(spec, expr);
}

std::vector<std::pair<JordanTorusSpec, OperatorExpr>> OperatorLog::entries() const {
  std::lock_guard lock(mu_);
  return entries_;
}

std::size_t OperatorLog::size() const {
  std::lock_guard lock(mu_);
  return entries_.size();
}

void set_operator_log(OperatorLog* log) { g_log.store(log, std::memory_order_release); }

}  // namespace eala
