#include "eala/eala.hpp"

#include <mutex>
#include <set>
#include <stdexcept>

#include "eala/linalg.hpp"
#include "eala/operator_expr.hpp"

namespace eala {

namespace {

std::mutex g_centroid_mu;
std::map<std::pair<std::string, LatticeVector>, bool> g_centroid_cache;

bool compute_centroidal(const JordanTorusSpec& spec, const LatticeVector& mu) {
  const CosetClass shift = coset_of(mu);
  for (CosetClass r : spec.support_classes())
    if (!spec.in_support(r + shift)) return false;
  const HomOperator chi = shift_operator(spec, mu);
  for (const auto& s : window(spec.nu(), 2)) {
    if (!spec.in_support(s)) continue;
    const HomOperator l = left_mult(spec, s);
    if (compose(chi, l) != compose(l, chi)) return false;
  }
  return true;
}

template <typename K>
void accumulate(std::map<K, Scalar>& m, const K& k, const Scalar& v) {
  if (v.is_zero()) return;
  auto [it, fresh] = m.emplace(k, v);
  if (fresh) return;
  it->second += v;
  if (it->second.is_zero()) m.erase(it);
}

LatticeVector zero2() { return LatticeVector::zero(2); }

// [chi^mu d_theta, chi^nu d_psi] = chi^(mu+nu) (theta(nu) d_psi - psi(mu) d_theta).
std::map<DerKey, Scalar> der_bracket(const std::map<DerKey, Scalar>& a, const std::map<DerKey, Scalar>& b) {
  std::map<DerKey, Scalar> out;
  for (const auto& [ka, va] : a) {
    for (const auto& [kb, vb] : b) {
      const IntegralFunctional theta = der_theta(ka), psi = der_theta(kb);
      const std::int64_t t_nu = theta(kb.mu), p_mu = psi(ka.mu);
      LatticeVector phi = t_nu * psi.coeffs() - p_mu * theta.coeffs();
      if (phi.is_zero()) continue;
      const LatticeVector deg = ka.mu + kb.mu;
      const Scalar v = va * vb;
      if (deg.is_zero()) {
        accumulate(out, DerKey{deg, 1}, Scalar(phi[0]) * v);
        accumulate(out, DerKey{deg, 2}, Scalar(phi[1]) * v);
        continue;
      }
      const LatticeVector basis = theta_sigma(deg).coeffs();
      // phi is a rational multiple of theta_deg by skewness.
      const std::int64_t num = dot(phi, basis), den = dot(basis, basis);
      mpq_class t(num, den);
      t.canonicalize();
      if (phi[0] * den != basis[0] * num || phi[1] * den != basis[1] * num)
        throw std::logic_error("bracket of skew derivations left the skew space");
      accumulate(out, DerKey{deg, 0}, Scalar(t) * v);
    }
  }
  return out;
}

Scalar c_eval(const std::map<DerKey, Scalar>& c, const std::map<DerKey, Scalar>& d) {
  Scalar out;
  for (const auto& [k, v] : c)
    if (auto it = d.find(dual_key(k)); it != d.end()) out += v * it->second;
  return out;
}

// (d . phi)(d') = phi([d', d]).
std::map<DerKey, Scalar> der_act(const JordanTorusSpec& spec, const std::map<DerKey, Scalar>& d,
                                 const std::map<DerKey, Scalar>& c) {
  std::map<DerKey, Scalar> out;
  for (const auto& [kd, vd] : d) {
    for (const auto& [kc, vc] : c) {
      const LatticeVector deg = kc.mu + kd.mu;
      std::vector<DerKey> targets;
      if (deg.is_zero()) targets = {DerKey{deg, 1}, DerKey{deg, 2}};
      else if (is_centroidal(spec, -deg)) targets = {DerKey{deg, 0}};
      const std::map<DerKey, Scalar> phi{{kc, vc}};
      for (const DerKey& t : targets) {
        const auto br = der_bracket({{dual_key(t), Scalar(1)}}, {{kd, vd}});
        accumulate(out, t, c_eval(phi, br));
      }
    }
  }
  return out;
}

}  // namespace

bool is_centroidal(const JordanTorusSpec& spec, const LatticeVector& mu) {
  if (mu.is_zero()) return true;
  const std::pair<std::string, LatticeVector> key{spec.descriptor(), mu};
  {
    std::lock_guard lock(g_centroid_mu);
    if (auto it = g_centroid_cache.find(key); it != g_centroid_cache.end()) return it->second;
  }
  const bool v = compute_centroidal(spec, mu);
  std::lock_guard lock(g_centroid_mu);
  g_centroid_cache.emplace(key, v);
  return v;
}

TkkElement shift_tkk(const JordanTorusSpec& spec, const LatticeVector& mu, const TkkElement& a) {
  const HomOperator chi = shift_operator(spec, mu);
  return {chi.apply(a.plus()), compose(OperatorSum(chi), a.mid()), chi.apply(a.minus())};
}

CentralGradingGroup central_grading_group(const JordanTorusSpec& spec, int radius) {
  CentralGradingGroup out;
  out.radius = radius;
  std::set<LatticeVector> in;
  for (const auto& mu : window(spec.nu(), radius))
    if (is_centroidal(spec, mu)) {
      out.members.push_back(mu);
      in.insert(mu);
    }
  out.closed = true;
  for (const auto& a : out.members) {
    if (!in.contains(-a)) out.closed = false;
    for (const auto& b : out.members)
      if ((a + b).norm_inf() <= radius && !in.contains(a + b)) out.closed = false;
  }
  out.label = "other";
  if (out.members.size() == 1) out.label = "{0}";
  for (int n = 1; n <= radius && out.label == "other"; ++n) {
    std::set<LatticeVector> expect;
    for (const auto& v : window(spec.nu(), radius)) {
      bool div = true;
      for (int i = 0; i < v.rank(); ++i) div = div && v[i] % n == 0;
      if (div) expect.insert(v);
    }
    if (expect == in) out.label = n == 1 ? "L" : std::to_string(n) + "L";
  }
  return out;
}

std::string DerKey::to_string() const {
  if (mu.is_zero()) return "#" + std::to_string(index);
  return mu.to_string();
}

IntegralFunctional der_theta(const DerKey& k) {
  if (!k.mu.is_zero()) return theta_sigma(k.mu);
  if (k.index < 1 || k.index > k.mu.rank()) throw std::invalid_argument("degree derivation index out of range");
  return IntegralFunctional(LatticeVector::unit(k.mu.rank(), k.index - 1));
}

DerKey dual_key(const DerKey& c) { return DerKey{-c.mu, c.index}; }

EalaElement EalaElement::derivation(const DerKey& k, const Scalar& c) {
  EalaElement e;
  e.add_d(k, c);
  return e;
}

EalaElement EalaElement::central(const DerKey& k, const Scalar& c) {
  EalaElement e;
  e.add_c(k, c);
  return e;
}

std::vector<LatticeVector> EalaElement::degrees() const {
  std::set<LatticeVector> out;
  for (const auto& d : g_.degrees()) out.insert(d);
  for (const auto& [k, v] : c_) out.insert(k.mu);
  for (const auto& [k, v] : d_) out.insert(k.mu);
  return {out.begin(), out.end()};
}

void EalaElement::add_c(const DerKey& k, const Scalar& v) { accumulate(c_, k, v); }
void EalaElement::add_d(const DerKey& k, const Scalar& v) { accumulate(d_, k, v); }

EalaElement EalaElement::operator-() const { return Scalar(-1) * EalaElement(*this); }

EalaElement& EalaElement::operator+=(const EalaElement& o) {
  g_ += o.g_;
  for (const auto& [k, v] : o.c_) add_c(k, v);
  for (const auto& [k, v] : o.d_) add_d(k, v);
  return *this;
}

EalaElement& EalaElement::operator-=(const EalaElement& o) { return *this += -o; }

EalaElement& EalaElement::operator*=(const Scalar& s) {
  if (s.is_zero()) return *this = EalaElement();
  g_ *= s;
  for (auto& [k, v] : c_) v *= s;
  for (auto& [k, v] : d_) v *= s;
  return *this;
}

std::string EalaElement::to_string() const {
  std::string out = g_.to_string();
  for (const auto& [k, v] : c_) out += " + " + coefficient_prefix(v) + "c" + k.to_string();
  for (const auto& [k, v] : d_) out += " + " + coefficient_prefix(v) + "d" + k.to_string();
  return out;
}

TkkElement apply_derivation(const JordanTorusSpec& spec, const std::map<DerKey, Scalar>& d, const TkkElement& x) {
  TkkElement out;
  if (d.empty() || x.is_zero()) return out;
  const std::vector<LatticeVector> degs = x.degrees();
  for (const auto& [k, v] : d) {
    const IntegralFunctional theta = der_theta(k);
    for (const auto& lambda : degs) {
      const std::int64_t t = theta(lambda);
      if (t == 0) continue;
      out += (Scalar(t) * v) * shift_tkk(spec, k.mu, x.component(lambda));
    }
  }
  return out;
}

std::map<DerKey, Scalar> central_cocycle(const JordanTorusSpec& spec, const TkkElement& x, const TkkElement& y) {
  std::map<DerKey, Scalar> out;
  if (x.is_zero() || y.is_zero()) return out;
  const std::vector<LatticeVector> ydegs = y.degrees();
  for (const auto& lambda : x.degrees()) {
    const TkkElement xl = x.component(lambda);
    for (const auto& nu : ydegs) {
      const LatticeVector s = lambda + nu;
      std::vector<DerKey> cs;
      if (s.is_zero()) cs = {DerKey{s, 1}, DerKey{s, 2}};
      else if (is_centroidal(spec, -s)) cs = {DerKey{s, 0}};
      for (const DerKey& c : cs) {
        const TkkElement dx = apply_derivation(spec, {{dual_key(c), Scalar(1)}}, xl);
        accumulate(out, c, tkk_form(spec, dx, y.component(nu)));
      }
    }
  }
  return out;
}

EalaElement e_bracket(const JordanTorusSpec& spec, const EalaElement& a, const EalaElement& b) {
  EalaElement out(tkk_bracket(spec, a.g(), b.g()) + apply_derivation(spec, a.d(), b.g()) -
                  apply_derivation(spec, b.d(), a.g()));
  for (const auto& [k, v] : central_cocycle(spec, a.g(), b.g())) out.add_c(k, v);
  for (const auto& [k, v] : der_act(spec, a.d(), b.c())) out.add_c(k, v);
  for (const auto& [k, v] : der_act(spec, b.d(), a.c())) out.add_c(k, -v);
  for (const auto& [k, v] : der_bracket(a.d(), b.d())) out.add_d(k, v);
  return out;
}

Scalar e_form(const JordanTorusSpec& spec, const EalaElement& a, const EalaElement& b) {
  return tkk_form(spec, a.g(), b.g()) + c_eval(a.c(), b.d()) + c_eval(b.c(), a.d());
}

namespace {

int operator_rank(const JordanTorusSpec& spec, const LatticeVector& sigma, int tau_radius) {
  SparseEchelon<Scalar> ech;
  std::map<CoeffFunction::Key, std::size_t> index;
  const auto insert = [&](const OperatorExpr& e) {
    const HomOperator op = lower(spec, e).component(sigma);
    if (op.is_zero()) return;
    std::map<std::size_t, Scalar> row;
    for (const auto& [k, v] : op.coeff().terms()) row.emplace(index.emplace(k, index.size()).first->second, v);
    ech.insert(row);
  };
  insert(OperatorExpr::left(sigma));
  for (const auto& tau : window(spec.nu(), tau_radius))
    insert(OperatorExpr::commutator(OperatorExpr::left(sigma + tau), OperatorExpr::left(-tau)));
  return static_cast<int>(ech.rank());
}

}  // namespace

IsotropicDim isotropic_dim(const JordanTorusSpec& spec, const LatticeVector& sigma, int tau_radius) {
  if (sigma.is_zero()) throw std::invalid_argument("the root space at 0 is the Cartan subalgebra");
  IsotropicDim out;
  out.op_dim = operator_rank(spec, sigma, tau_radius);
  out.stable = operator_rank(spec, sigma, tau_radius + 1) == out.op_dim;
  out.d_dim = out.c_dim = is_centroidal(spec, sigma) ? 1 : 0;
  return out;
}

ClosedFormDim closed_form_dim(const JordanTorusSpec& spec, const LatticeVector& sigma) {
  if (sigma.is_zero()) throw std::invalid_argument("closed form is stated for sigma != 0");
  const bool even = coset_of(sigma).is_zero();
  switch (spec.family()) {
    case JordanFamily::Semilattice:
      if (spec.semilattice().is_full()) {
        if (even) return {1, "left multiplication only (sigma in 2L)"};
        return {2, "left multiplication and one commutator (sigma outside 2L)"};
      }
      if (spec.in_support(sigma)) return {1, "left multiplication only (sigma in S)"};
      return {1, "single commutator class (sigma outside S)"};
    case JordanFamily::QuantumPlus:
      if (rad_f_contains(sigma, spec.q_mode())) return {1, "left multiplication only (sigma in rad f)"};
      return {2, "left multiplication and one commutator (sigma outside rad f)"};
    case JordanFamily::Hermitian:
      if (spec.sign() > 0) return {1, "left multiplication only (commutative torus)"};
      if (spec.in_support(sigma)) return {1, "left multiplication only (sigma in support)"};
      return {1, "single commutator [L_{x^(sigma+s1)}, L_{x^-s1}] (sigma outside support)"};
  }
  return {};
}

bool evaluation_map_injective(const std::vector<IntegralFunctional>& d0, int radius) {
  std::set<std::vector<std::int64_t>> seen;
  for (const auto& v : window(2, radius)) {
    std::vector<std::int64_t> image;
    for (const auto& f : d0) image.push_back(f(v));
    if (!seen.insert(image).second) return false;
  }
  return true;
}

bool check_permissible(const JordanTorusSpec& spec, int radius) {
  return evaluation_map_injective({der_theta(DerKey{zero2(), 1}), der_theta(DerKey{zero2(), 2})}, radius) &&
         spec.nu() == 2;
}

}  // namespace eala
