#include "eala/operator.hpp"

#include <numeric>
#include <stdexcept>

namespace eala {

namespace {

std::int64_t floor_mod(std::int64_t k, std::int64_t n) {
  std::int64_t r = k % n;
  return r < 0 ? r + n : r;
}

/// Modulus for exponent reduction on a fixed coset: q^(2 ell . delta) only
/// depends on ell modulo n / gcd(n, 2).
std::int64_t exponent_modulus(QMode mode) {
  if (!mode.is_root_of_unity()) return 0;
  const int n = mode.order();
  return n / std::gcd(n, 2);
}

}  // namespace

void CoeffFunction::add_term(CosetClass coset, LatticeVector ell, const Scalar& c) {
  if (c.is_zero()) return;
  Scalar coeff = c;
  if (mode_.is_generic()) {
    if (!ell.is_zero()) throw std::logic_error("q exponent in a q-free coefficient function");
  } else if (const std::int64_t m = exponent_modulus(mode_); m > 0) {
    const LatticeVector rep = coset.representative();
    std::int64_t extra = 0;
    for (int i = 0; i < ell.rank(); ++i) {
      const std::int64_t reduced = floor_mod(ell[i], m);
      extra += (ell[i] - reduced) * rep[i];
      ell[i] = reduced;
    }
    if (extra != 0) coeff = coeff * Scalar::q_power(extra, mode_);
  }
  auto [it, fresh] = terms_.try_emplace(Key{coset.bits(), ell}, coeff);
  if (fresh) return;
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

Scalar CoeffFunction::evaluate(const LatticeVector& gamma) const {
  const std::uint32_t coset = CosetClass::of(gamma).bits();
  Scalar out;
  for (auto it = terms_.lower_bound(Key{coset, LatticeVector()}); it != terms_.end() && it->first.coset == coset;
       ++it) {
    const std::int64_t e = dot(it->first.ell, gamma);
    out += e == 0 ? it->second : it->second * Scalar::q_power(e, mode_);
  }
  return out;
}

CoeffFunction CoeffFunction::translated(const LatticeVector& sigma) const {
  CoeffFunction out(nu_, mode_);
  const CosetClass shift = CosetClass::of(sigma);
  for (const auto& [key, c] : terms_) {
    const std::int64_t e = dot(key.ell, sigma);
    out.add_term(CosetClass(nu_, key.coset) + shift, key.ell, e == 0 ? c : c * Scalar::q_power(e, mode_));
  }
  return out;
}

CoeffFunction CoeffFunction::operator-() const {
  CoeffFunction out = *this;
  for (auto& [k, c] : out.terms_) c = -c;
  return out;
}

CoeffFunction& CoeffFunction::operator+=(const CoeffFunction& o) {
  mode_ = combine_modes(mode_, o.mode_);
  for (const auto& [k, c] : o.terms_) add_term(CosetClass(nu_, k.coset), k.ell, c);
  return *this;
}

CoeffFunction& CoeffFunction::operator-=(const CoeffFunction& o) {
  mode_ = combine_modes(mode_, o.mode_);
  for (const auto& [k, c] : o.terms_) add_term(CosetClass(nu_, k.coset), k.ell, -c);
  return *this;
}

CoeffFunction& CoeffFunction::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, x] : terms_) x = x * c;
  return *this;
}

CoeffFunction operator*(const CoeffFunction& a, const CoeffFunction& b) {
  CoeffFunction out(a.nu_, combine_modes(a.mode_, b.mode_));
  for (auto ia = a.terms_.begin(); ia != a.terms_.end();) {
    const std::uint32_t coset = ia->first.coset;
    auto a_end = ia;
    while (a_end != a.terms_.end() && a_end->first.coset == coset) ++a_end;
    auto ib = b.terms_.lower_bound(CoeffFunction::Key{coset, LatticeVector()});
    for (auto x = ia; x != a_end; ++x)
      for (auto y = ib; y != b.terms_.end() && y->first.coset == coset; ++y)
        out.add_term(CosetClass(a.nu_, coset), x->first.ell + y->first.ell, x->second * y->second);
    ia = a_end;
  }
  return out;
}

std::string CoeffFunction::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "[" + CosetClass(nu_, k.coset).to_string() + "] (" + c.to_string() + ")";
    if (!k.ell.is_zero()) out += "*q^" + k.ell.to_string();
  }
  return out;
}

std::string OperatorSum::to_string() const {
  if (parts_.empty()) return "0";
  std::string out;
  for (const auto& [deg, c] : parts_) {
    if (!out.empty()) out += "; ";
    out += "deg " + deg.to_string() + ": " + c.to_string();
  }
  return out;
}

JordanElement HomOperator::apply(const JordanElement& x) const {
  JordanElement out;
  if (is_zero()) return out;
  for (const auto& [gamma, c] : x.terms()) out.add_term(degree_ + gamma, c * coeff_.evaluate(gamma));
  return out;
}

HomOperator compose(const HomOperator& f, const HomOperator& g) {
  if (f.is_zero() || g.is_zero()) return {};
  return HomOperator(f.degree_ + g.degree_, g.coeff_ * f.coeff_.translated(g.degree_));
}

HomOperator commutator(const HomOperator& f, const HomOperator& g) {
  if (f.is_zero() || g.is_zero()) return {};
  HomOperator fg = compose(f, g);
  HomOperator gf = compose(g, f);
  return HomOperator(fg.degree_, fg.coeff_ - gf.coeff_);
}

OperatorSum::OperatorSum(const HomOperator& op) {
  if (op.degree().rank() > 0) nu_ = op.degree().rank();
  mode_ = op.coeff().mode();
  add(op);
}

HomOperator OperatorSum::component(const LatticeVector& degree) const {
  auto it = parts_.find(degree);
  if (it == parts_.end()) return HomOperator(degree, CoeffFunction(nu_, mode_));
  return HomOperator(degree, it->second);
}

void OperatorSum::add_part(const LatticeVector& degree, const CoeffFunction& c) {
  if (c.is_zero()) return;
  mode_ = combine_modes(mode_, c.mode());
  auto [it, fresh] = parts_.try_emplace(degree, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) parts_.erase(it);
}

void OperatorSum::add(const HomOperator& op) {
  if (!op.is_zero()) add_part(op.degree(), op.coeff());
}

JordanElement OperatorSum::apply(const JordanElement& x) const {
  JordanElement out;
  for (const auto& [deg, c] : parts_) out += HomOperator(deg, c).apply(x);
  return out;
}

OperatorSum OperatorSum::operator-() const {
  OperatorSum out = *this;
  for (auto& [d, c] : out.parts_) c = -c;
  return out;
}

OperatorSum& OperatorSum::operator+=(const OperatorSum& o) {
  for (const auto& [d, c] : o.parts_) add_part(d, c);
  return *this;
}

OperatorSum& OperatorSum::operator-=(const OperatorSum& o) {
  for (const auto& [d, c] : o.parts_) add_part(d, -c);
  return *this;
}

OperatorSum& OperatorSum::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    parts_.clear();
    return *this;
  }
  for (auto& [d, x] : parts_) x *= c;
  return *this;
}

OperatorSum compose(const OperatorSum& f, const OperatorSum& g) {
  OperatorSum out(f.nu_, combine_modes(f.mode_, g.mode_));
  for (const auto& [df, cf] : f.parts_)
    for (const auto& [dg, cg] : g.parts_) out.add(compose(HomOperator(df, cf), HomOperator(dg, cg)));
  return out;
}

OperatorSum commutator(const OperatorSum& f, const OperatorSum& g) {
  OperatorSum out(f.nu_, combine_modes(f.mode_, g.mode_));
  for (const auto& [df, cf] : f.parts_)
    for (const auto& [dg, cg] : g.parts_) out.add(commutator(HomOperator(df, cf), HomOperator(dg, cg)));
  return out;
}

HomOperator left_mult(const JordanTorusSpec& spec, const LatticeVector& sigma) {
  CoeffFunction c(spec.nu(), spec.q_mode());
  if (!spec.in_support(sigma)) return HomOperator(sigma, c);
  const CosetClass cs = CosetClass::of(sigma);
  const Scalar half(mpq_class(1, 2));
  for (const auto& r : spec.support_classes()) {
    if (!spec.in_support(r + cs)) continue;
    if (spec.family() == JordanFamily::Semilattice) {
      if (spec.class_gamma(cs, r)) c.add_term(r, LatticeVector::zero(spec.nu()), Scalar(1));
    } else {
      // m(sigma, gamma) = (q^(sigma_1 gamma_2) + q^(sigma_2 gamma_1)) / 2.
      c.add_term(r, LatticeVector{0, sigma[0]}, half);
      c.add_term(r, LatticeVector{sigma[1], 0}, half);
    }
  }
  return HomOperator(sigma, c);
}

OperatorSum left_mult(const JordanTorusSpec& spec, const JordanElement& x) {
  OperatorSum out(spec.nu(), spec.q_mode());
  for (const auto& [lambda, c] : x.terms()) {
    HomOperator l = left_mult(spec, lambda);
    out.add(HomOperator(lambda, c * l.coeff()));
  }
  return out;
}

HomOperator right_translation(const JordanTorusSpec& spec, const LatticeVector& sigma) {
  if (!spec.is_quantum_like()) throw std::invalid_argument("right translations need a quantum-type torus");
  CoeffFunction c(spec.nu(), spec.q_mode());
  const CosetClass cs = CosetClass::of(sigma);
  for (const auto& r : spec.support_classes())
    if (spec.in_support(r + cs)) c.add_term(r, LatticeVector{sigma[1], 0}, Scalar(1));
  return HomOperator(sigma, c);
}

HomOperator shift_operator(const JordanTorusSpec& spec, const LatticeVector& mu) {
  CoeffFunction c(spec.nu(), spec.q_mode());
  const CosetClass cs = CosetClass::of(mu);
  for (const auto& r : spec.support_classes())
    if (spec.in_support(r + cs)) c.add_term(r, LatticeVector::zero(spec.nu()), Scalar(1));
  return HomOperator(mu, c);
}

HomOperator identity_operator(const JordanTorusSpec& spec) { return left_mult(spec, LatticeVector::zero(spec.nu())); }

LDSplit l_d_split(const JordanTorusSpec& spec, const OperatorSum& e) {
  LDSplit out;
  const LatticeVector zero = LatticeVector::zero(spec.nu());
  for (const auto& [deg, c] : e.parts()) out.x.add_term(deg, c.evaluate(zero));
  out.d = e - left_mult(spec, out.x);
  return out;
}

}  // namespace eala
