#include "eala/polynomial.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace eala {

QPolynomial::QPolynomial(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

QPolynomial QPolynomial::constant(const mpq_class& c) { return QPolynomial(std::vector<mpq_class>{c}); }

QPolynomial QPolynomial::monomial(const mpq_class& c, std::size_t degree) {
  std::vector<mpq_class> v(degree + 1);
  v[degree] = c;
  return QPolynomial(std::move(v));
}

void QPolynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

std::size_t QPolynomial::low_order() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (sgn(coeffs_[i]) != 0) return i;
  return 0;
}

QPolynomial QPolynomial::shifted_down(std::size_t k) const {
  if (k == 0 || is_zero()) return *this;
  QPolynomial r;
  r.coeffs_.assign(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end());
  return r;
}

QPolynomial QPolynomial::shifted_up(std::size_t k) const {
  if (k == 0 || is_zero()) return *this;
  QPolynomial r;
  r.coeffs_.assign(k, mpq_class(0));
  r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return r;
}

QPolynomial QPolynomial::monic() const {
  if (is_zero()) return *this;
  QPolynomial r = *this;
  const mpq_class lc = leading();
  if (lc == 1) return r;
  for (auto& c : r.coeffs_) c /= lc;
  return r;
}

bool QPolynomial::has_integer_coefficients() const {
  for (const auto& c : coeffs_)
    if (c.get_den() != 1) return false;
  return true;
}

QPolynomial QPolynomial::operator-() const {
  QPolynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

QPolynomial& QPolynomial::operator*=(const mpq_class& c) {
  if (sgn(c) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return QPolynomial(std::move(out));
}

std::pair<QPolynomial, QPolynomial> QPolynomial::divmod(const QPolynomial& a, const QPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {QPolynomial{}, a};
  std::vector<mpq_class> r = a.coeffs_;
  std::vector<mpq_class> q(a.coeffs_.size() - b.coeffs_.size() + 1);
  const mpq_class& lb = b.leading();
  const std::size_t db = b.coeffs_.size() - 1;
  for (std::size_t k = q.size(); k-- > 0;) {
    const mpq_class& top = r[k + db];
    if (sgn(top) == 0) continue;
    mpq_class f = top / lb;
    for (std::size_t j = 0; j <= db; ++j) r[k + j] -= f * b.coeffs_[j];
    q[k] = std::move(f);
  }
  r.resize(db);
  return {QPolynomial(std::move(q)), QPolynomial(std::move(r))};
}

QPolynomial gcd(QPolynomial a, QPolynomial b) {
  while (!b.is_zero()) {
    QPolynomial r = a.rem(b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::optional<QPolynomial> inverse_mod(const QPolynomial& a, const QPolynomial& m) {
  // Extended Euclid tracking only the coefficient of a.
  QPolynomial r0 = m, r1 = a.rem(m);
  QPolynomial s0, s1 = QPolynomial::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = QPolynomial::divmod(r0, r1);
    QPolynomial s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) return std::nullopt;
  const mpq_class inv = 1 / r0.leading();
  return (s0 * inv).rem(m);
}

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

const QPolynomial& cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic order must be positive");
  thread_local std::map<int, const QPolynomial*> local;
  if (auto it = local.find(n); it != local.end()) return *it->second;
  static std::mutex mu;
  static std::map<int, QPolynomial> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find(n); it != cache.end()) {
    local.emplace(n, &it->second);
    return it->second;
  }
  // x^n - 1 divided by every Phi_d with d | n, d < n.
  QPolynomial p = QPolynomial::monomial(1, static_cast<std::size_t>(n)) - QPolynomial::constant(1);
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    auto it = cache.find(d);
    if (it == cache.end()) {
      // Recursion without re-locking: build the divisor table bottom-up.
      QPolynomial q = QPolynomial::monomial(1, static_cast<std::size_t>(d)) - QPolynomial::constant(1);
      for (int e = 1; e < d; ++e)
        if (d % e == 0) q = QPolynomial::divmod(q, cache.at(e)).first;
      it = cache.emplace(d, q).first;
    }
    p = QPolynomial::divmod(p, it->second).first;
  }
  const QPolynomial& result = cache.emplace(n, std::move(p)).first->second;
  local.emplace(n, &result);
  return result;
}

}  // namespace eala
