#include "eala/jordan.hpp"

#include <stdexcept>

namespace eala {

namespace {

Semilattice hermitian_minus_support() {
  return Semilattice::from_classes(2, {CosetClass::parse("00"), CosetClass::parse("10"), CosetClass::parse("01")});
}

std::string_view strip_prefix(std::string_view text, std::string_view prefix) {
  if (text.substr(0, prefix.size()) == prefix) text.remove_prefix(prefix.size());
  return text;
}

}  // namespace

JordanTorusSpec JordanTorusSpec::semilattice_torus(const Semilattice& s) {
  JordanTorusSpec spec;
  spec.family_ = JordanFamily::Semilattice;
  spec.nu_ = s.nu();
  spec.semilattice_ = s;
  spec.support_ = s;
  spec.mode_ = QMode::generic();
  return spec;
}

JordanTorusSpec JordanTorusSpec::quantum_plus(QMode mode) {
  if (mode.is_generic()) throw std::invalid_argument("quantum torus needs a q mode");
  JordanTorusSpec spec;
  spec.family_ = JordanFamily::QuantumPlus;
  spec.nu_ = 2;
  spec.semilattice_ = Semilattice::full(2);
  spec.support_ = spec.semilattice_;
  spec.mode_ = mode;
  return spec;
}

JordanTorusSpec JordanTorusSpec::hermitian(int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("hermitian sign must be +1 or -1");
  JordanTorusSpec spec;
  spec.family_ = JordanFamily::Hermitian;
  spec.nu_ = 2;
  spec.sign_ = sign;
  spec.semilattice_ = sign == 1 ? Semilattice::full(2) : hermitian_minus_support();
  spec.support_ = spec.semilattice_;
  spec.mode_ = QMode::root_of_unity(sign == 1 ? 1 : 2);
  return spec;
}

JordanTorusSpec JordanTorusSpec::parse(std::string_view d) {
  const std::string original(d);
  d = strip_prefix(d, "jordan=");
  try {
    if (d == "laurent") return hermitian(1);
    if (d.substr(0, 12) == "semilattice:") return semilattice_torus(Semilattice::parse(d.substr(12)));
    if (d.substr(0, 10) == "quantum:q=") return quantum_plus(QMode::parse(d.substr(10)));
    if (d == "hermitian:sign=-1") return hermitian(-1);
    if (d == "hermitian:sign=+1" || d == "hermitian:sign=1") return hermitian(1);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument("bad jordan descriptor '" + original + "': " + e.what());
  }
  throw std::invalid_argument("unknown jordan descriptor: " + original);
}

std::string JordanTorusSpec::descriptor() const {
  std::string out;
  switch (family_) {
    case JordanFamily::Semilattice: out = "semilattice:" + semilattice_.descriptor(); break;
    case JordanFamily::QuantumPlus: out = "quantum:q=" + mode_.to_string(); break;
    case JordanFamily::Hermitian: out = sign_ == 1 ? "laurent" : "hermitian:sign=-1"; break;
  }
  if (fault_) out += "+fault";
  return out;
}

int JordanTorusSpec::class_gamma(CosetClass a, CosetClass b) const {
  if (fault_ && a != b && !a.is_zero() && !b.is_zero() && a.bits() <= 2 && b.bits() <= 2 && support_.contains(a) &&
      support_.contains(b))
    return 1;
  return gamma(a, b, semilattice_);
}

Scalar JordanTorusSpec::mult_coeff(const LatticeVector& lambda, const LatticeVector& mu) const {
  if (!in_support(lambda) || !in_support(mu)) return Scalar();
  if (family_ == JordanFamily::Semilattice) return Scalar(class_gamma(coset_of(lambda), coset_of(mu)));
  const Scalar half(mpq_class(1, 2));
  return half * (Scalar::q_power(eta_exponent(lambda, mu), mode_) + Scalar::q_power(eta_exponent(mu, lambda), mode_));
}

JordanTorusSpec JordanTorusSpec::with_fault() const {
  if (family_ != JordanFamily::Semilattice) throw std::invalid_argument("fault injection targets semilattice tori");
  JordanTorusSpec spec = *this;
  spec.fault_ = true;
  return spec;
}

Scalar eta(const LatticeVector& lambda, const LatticeVector& mu, QMode mode) {
  if (lambda.rank() != 2 || mu.rank() != 2) throw std::invalid_argument("eta is defined for rank 2");
  return Scalar::q_power(eta_exponent(lambda, mu), mode);
}

bool rad_f_contains(const LatticeVector& lambda, QMode mode) {
  if (mode.is_generic()) return true;
  if (mode.is_formal()) return lambda.is_zero();
  const int n = mode.order();
  return lambda[0] % n == 0 && lambda[1] % n == 0;
}

bool hermitian_support(const LatticeVector& lambda, int sign) {
  if (sign == 1) return true;
  return (lambda[0] * lambda[1]) % 2 == 0;
}

JordanElement JordanElement::monomial(const LatticeVector& lambda, Scalar c) {
  JordanElement x;
  x.add_term(lambda, c);
  return x;
}

Scalar JordanElement::coefficient(const LatticeVector& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? Scalar() : it->second;
}

void JordanElement::add_term(const LatticeVector& lambda, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(lambda, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

JordanElement JordanElement::operator-() const {
  JordanElement r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

JordanElement& JordanElement::operator+=(const JordanElement& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

JordanElement& JordanElement::operator-=(const JordanElement& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

JordanElement& JordanElement::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, x] : terms_) x = x * c;
  return *this;
}

std::string coefficient_prefix(const Scalar& c) {
  if (c.is_one()) return "";
  if ((-c).is_one()) return "-";
  const std::string s = c.to_string();
  if (s.find(' ') != std::string::npos) return "(" + s + ")*";
  return s + "*";
}

std::string JordanElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : terms_) {
    std::string term = coefficient_prefix(c) + "x^" + k.to_string();
    if (out.empty()) out = term;
    else if (term[0] == '-') out += " - " + term.substr(1);
    else out += " + " + term;
  }
  return out;
}

JordanElement multiply(const JordanTorusSpec& spec, const JordanElement& x, const JordanElement& y) {
  JordanElement out;
  for (const auto& [a, ca] : x.terms()) {
    for (const auto& [b, cb] : y.terms()) {
      Scalar m = spec.mult_coeff(a, b);
      if (m.is_zero()) continue;
      out.add_term(a + b, ca * cb * m);
    }
  }
  return out;
}

Scalar epsilon(const JordanElement& x) {
  if (x.terms().empty()) return Scalar();
  return x.coefficient(LatticeVector::zero(x.terms().begin()->first.rank()));
}

}  // namespace eala
