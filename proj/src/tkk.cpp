#include "eala/tkk.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>

#include "eala/linalg.hpp"

namespace eala {

TkkElement TkkElement::component(const LatticeVector& lambda) const {
  TkkElement out;
  if (auto c = plus_.coefficient(lambda); !c.is_zero()) out.plus_.add_term(lambda, c);
  if (auto c = minus_.coefficient(lambda); !c.is_zero()) out.minus_.add_term(lambda, c);
  if (auto it = mid_.parts().find(lambda); it != mid_.parts().end()) out.mid_.add(HomOperator(lambda, it->second));
  return out;
}

std::vector<LatticeVector> TkkElement::degrees() const {
  std::set<LatticeVector> out;
  for (const auto& [d, c] : plus_.terms()) out.insert(d);
  for (const auto& [d, c] : mid_.parts()) out.insert(d);
  for (const auto& [d, c] : minus_.terms()) out.insert(d);
  return {out.begin(), out.end()};
}

TkkElement TkkElement::operator-() const { return {-plus_, -mid_, -minus_}; }

TkkElement& TkkElement::operator+=(const TkkElement& o) {
  plus_ += o.plus_;
  mid_ += o.mid_;
  minus_ += o.minus_;
  return *this;
}

TkkElement& TkkElement::operator-=(const TkkElement& o) {
  plus_ -= o.plus_;
  mid_ -= o.mid_;
  minus_ -= o.minus_;
  return *this;
}

TkkElement& TkkElement::operator*=(const Scalar& c) {
  plus_ *= c;
  mid_ *= c;
  minus_ *= c;
  return *this;
}

std::string TkkElement::to_string() const {
  const auto j = [](const JordanElement& x) { return x.is_zero() ? std::string("0") : x.to_string(); };
  return "(" + j(plus_) + " | " + mid_.to_string() + " | " + j(minus_) + ")";
}

OperatorSum triangle(const JordanTorusSpec& spec, const JordanElement& x, const JordanElement& y) {
  return left_mult(spec, multiply(spec, x, y)) + commutator(left_mult(spec, x), left_mult(spec, y));
}

OperatorSum involution(const JordanTorusSpec& spec, const OperatorSum& e) {
  const LDSplit s = l_d_split(spec, e);
  return s.d - left_mult(spec, s.x);
}

TkkElement tkk_bracket(const JordanTorusSpec& spec, const TkkElement& a, const TkkElement& b) {
  const OperatorSum& e1 = a.mid();
  const OperatorSum& e2 = b.mid();
  JordanElement plus = e1.apply(b.plus()) - e2.apply(a.plus());
  JordanElement minus = involution(spec, e1).apply(b.minus()) - involution(spec, e2).apply(a.minus());
  OperatorSum mid = triangle(spec, a.plus(), b.minus()) - triangle(spec, b.plus(), a.minus()) + commutator(e1, e2);
  return {std::move(plus), std::move(mid), std::move(minus)};
}

namespace {

// Independent commutators [L_{x^(mu+tau)}, L_{x^-tau}] for one family and degree.
struct Generators {
  int radius = 0;
  std::vector<LatticeVector> taus;
  std::vector<HomOperator> ops;
  std::map<CoeffFunction::Key, std::size_t> index;
  SparseEchelon<Scalar> echelon;
};

std::mutex g_cache_mu;
std::map<std::pair<std::string, LatticeVector>, Generators> g_cache;

std::map<std::size_t, Scalar> coords(const CoeffFunction& c, std::map<CoeffFunction::Key, std::size_t>& index) {
  std::map<std::size_t, Scalar> out;
  for (const auto& [k, v] : c.terms()) {
    auto [it, fresh] = index.emplace(k, index.size());
    out.emplace(it->second, v);
  }
  return out;
}

void extend(const JordanTorusSpec& spec, const LatticeVector& mu, Generators& g, int radius) {
  for (const auto& tau : window(spec.nu(), radius)) {
    if (tau.norm_inf() <= g.radius) continue;
    const HomOperator op = commutator(left_mult(spec, mu + tau), left_mult(spec, -tau));
    if (op.is_zero()) continue;
    if (g.echelon.insert(coords(op.coeff(), g.index))) {
      g.taus.push_back(tau);
      g.ops.push_back(op);
    }
  }
  g.radius = radius;
}

std::optional<std::vector<std::pair<LatticeVector, Scalar>>> try_solve(const Generators& g, const HomOperator& d) {
  std::map<CoeffFunction::Key, std::size_t> rows;
  for (const auto& op : g.ops)
    for (const auto& [k, v] : op.coeff().terms()) rows.emplace(k, rows.size());
  for (const auto& [k, v] : d.coeff().terms())
    if (!rows.contains(k)) return std::nullopt;
  Matrix a = Matrix::Constant(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(g.ops.size()),
                              Scalar());
  Vector b = Vector::Constant(static_cast<Eigen::Index>(rows.size()), Scalar());
  for (std::size_t j = 0; j < g.ops.size(); ++j)
    for (const auto& [k, v] : g.ops[j].coeff().terms())
      a(static_cast<Eigen::Index>(rows.at(k)), static_cast<Eigen::Index>(j)) = v;
  for (const auto& [k, v] : d.coeff().terms()) b(static_cast<Eigen::Index>(rows.at(k))) = v;
  auto x = solve_exact<Scalar>(a, b);
  if (!x) return std::nullopt;
  std::vector<std::pair<LatticeVector, Scalar>> out;
  for (std::size_t j = 0; j < g.ops.size(); ++j)
    if (!(*x)(static_cast<Eigen::Index>(j)).is_zero()) out.emplace_back(g.taus[j], (*x)(static_cast<Eigen::Index>(j)));
  return out;
}

constexpr int kMaxPresentationRadius = 4;

}  // namespace

std::vector<std::pair<LatticeVector, Scalar>> commutator_presentation(const JordanTorusSpec& spec,
                                                                      const HomOperator& d) {
  if (d.is_zero()) return {};
  if (!d.coeff().evaluate(LatticeVector::zero(spec.nu())).is_zero())
    throw std::domain_error("operator does not kill the unit");
  std::unique_lock lock(g_cache_mu);
  Generators& g = g_cache[{spec.descriptor(), d.degree()}];
  for (int r = std::max(g.radius, 2); r <= kMaxPresentationRadius; ++r) {
    if (g.radius < r) extend(spec, d.degree(), g, r);
    if (auto sol = try_solve(g, d)) return *sol;
  }
  throw std::domain_error("operator of degree " + d.degree().to_string() + " is not a sum of commutators");
}

Scalar pair_with_commutator(const JordanTorusSpec& spec, const OperatorSum& d, const JordanElement& a,
                            const JordanElement& b) {
  return epsilon(multiply(spec, d.apply(a), b));
}

Scalar instrl_form(const JordanTorusSpec& spec, const OperatorSum& e1, const OperatorSum& e2) {
  const LDSplit s1 = l_d_split(spec, e1);
  const LDSplit s2 = l_d_split(spec, e2);
  Scalar out = epsilon(multiply(spec, s1.x, s2.x));
  for (const auto& [mu, c] : s2.d.parts()) {
    const HomOperator d1 = s1.d.component(-mu);
    if (d1.is_zero()) continue;
    for (const auto& [tau, k] : commutator_presentation(spec, HomOperator(mu, c)))
      out += k * pair_with_commutator(spec, d1, JordanElement::monomial(mu + tau), JordanElement::monomial(-tau));
  }
  return out;
}

Scalar tkk_form(const JordanTorusSpec& spec, const TkkElement& a, const TkkElement& b) {
  return epsilon(multiply(spec, a.plus(), b.minus())) + epsilon(multiply(spec, b.plus(), a.minus())) +
         instrl_form(spec, a.mid(), b.mid());
}

bool jacobi_check(const JordanTorusSpec& spec, const TkkElement& a, const TkkElement& b, const TkkElement& c) {
  const auto br = [&](const TkkElement& u, const TkkElement& v) { return tkk_bracket(spec, u, v); };
  return (br(br(a, b), c) + br(br(b, c), a) + br(br(c, a), b)).is_zero();
}

TkkElement q_grading_component(const TkkElement& a, int m) {
  switch (m) {
    case 1: return TkkElement::from_plus(a.plus());
    case 0: return TkkElement::from_mid(a.mid());
    case -1: return TkkElement::from_minus(a.minus());
    default: return {};
  }
}

}  // namespace eala
