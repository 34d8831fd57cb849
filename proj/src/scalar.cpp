#include "eala/scalar.hpp"

#include <cctype>
#include <charconv>
#include <ostream>
#include <stdexcept>

namespace eala {

QMode QMode::root_of_unity(int n) {
  if (n < 1) throw std::invalid_argument("root of unity order must be positive");
  if (n % 8 == 0) throw std::invalid_argument("root of unity order divisible by 8 contains sqrt2");
  return QMode(n);
}

QMode QMode::parse(std::string_view text) {
  if (text == "formal") return formal();
  if (text == "generic") return generic();
  if (text.substr(0, 5) == "root:") {
    int n = 0;
    auto body = text.substr(5);
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), n);
    if (ec != std::errc() || ptr != body.data() + body.size())
      throw std::invalid_argument("bad root of unity order: " + std::string(text));
    return root_of_unity(n);
  }
  throw std::invalid_argument("unknown q mode: " + std::string(text));
}

std::string QMode::to_string() const {
  if (is_generic()) return "generic";
  if (is_formal()) return "formal";
  return "root:" + std::to_string(order_);
}

QMode combine_modes(QMode a, QMode b) {
  if (a.is_generic()) return b;
  if (b.is_generic() || a == b) return a;
  throw std::invalid_argument("mixed q modes: " + a.to_string() + " and " + b.to_string());
}

namespace {

std::int64_t floor_mod(std::int64_t k, std::int64_t n) {
  std::int64_t r = k % n;
  return r < 0 ? r + n : r;
}

std::string monomial_string(const mpq_class& c, std::int64_t e) {
  if (e == 0) return c.get_str();
  std::string qpart = e == 1 ? "q" : "q^" + std::to_string(e);
  if (c == 1) return qpart;
  if (c == -1) return "-" + qpart;
  return c.get_str() + "*" + qpart;
}

void append_signed(std::string& out, const std::string& term) {
  if (out.empty()) {
    out = term;
  } else if (term[0] == '-') {
    out += " - ";
    out.append(term, 1);
  } else {
    out += " + ";
    out += term;
  }
}

std::string laurent_string(const QPolynomial& p, std::int64_t shift) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& cs = p.coefficients();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (sgn(cs[i]) == 0) continue;
    append_signed(out, monomial_string(cs[i], shift + static_cast<std::int64_t>(i)));
  }
  return out;
}

}  // namespace

KqElement::KqElement(QMode mode, std::int64_t shift, QPolynomial num, QPolynomial den)
    : mode_(mode), shift_(shift), num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void KqElement::normalize() {
  if (num_.is_zero()) {
    mode_ = QMode::generic();
    shift_ = 0;
    den_ = QPolynomial::constant(1);
    return;
  }
  if (mode_.is_formal()) {
    if (std::size_t k = den_.low_order(); k > 0) {
      den_ = den_.shifted_down(k);
      shift_ -= static_cast<std::int64_t>(k);
    }
    if (std::size_t k = num_.low_order(); k > 0) {
      num_ = num_.shifted_down(k);
      shift_ += static_cast<std::int64_t>(k);
    }
    if (!den_.is_constant()) {
      QPolynomial g = gcd(num_, den_);
      if (g.degree() > 0) {
        num_ = QPolynomial::divmod(num_, g).first;
        den_ = QPolynomial::divmod(den_, g).first;
      }
    }
    if (den_.leading() != 1) {
      const mpq_class inv = 1 / den_.leading();
      num_ *= inv;
      den_ *= inv;
    }
    if (shift_ == 0 && num_.is_constant() && den_.is_constant()) mode_ = QMode::generic();
  } else if (mode_.is_root_of_unity()) {
    shift_ = 0;
    den_ = QPolynomial::constant(1);
    const QPolynomial& phi = cyclotomic_polynomial(mode_.order());
    if (num_.degree() >= phi.degree()) num_ = num_.rem(phi);
    if (num_.is_zero() || num_.is_constant()) mode_ = QMode::generic();
    if (num_.is_zero()) return normalize();
  }
}

KqElement KqElement::q_power(std::int64_t k, QMode mode) {
  if (k == 0) return KqElement(1);
  if (mode.is_generic()) throw std::invalid_argument("q used without a q mode");
  if (mode.is_formal()) return KqElement(mode, k, QPolynomial::constant(1), QPolynomial::constant(1));
  const std::int64_t r = floor_mod(k, mode.order());
  return KqElement(mode, 0, QPolynomial::monomial(1, static_cast<std::size_t>(r)), QPolynomial::constant(1));
}

KqElement KqElement::laurent(const QPolynomial& p, std::int64_t shift, QMode mode) {
  if (mode.is_generic()) {
    if (shift != 0 || !p.is_constant()) throw std::invalid_argument("q used without a q mode");
    return KqElement(p.coeff(0));
  }
  if (mode.is_formal()) return KqElement(mode, shift, p, QPolynomial::constant(1));
  return KqElement(mode, 0, p * q_power(shift, mode).num_, QPolynomial::constant(1));
}

std::optional<mpq_class> KqElement::as_rational() const {
  if (!mode_.is_generic()) return std::nullopt;
  return num_.coeff(0);
}

bool KqElement::is_integer() const { return mode_.is_generic() && num_.has_integer_coefficients(); }

bool KqElement::is_integer_laurent() const { return den_.is_constant() && num_.has_integer_coefficients(); }

std::size_t KqElement::term_count() const {
  std::size_t n = 0;
  for (const auto& c : num_.coefficients())
    if (sgn(c) != 0) ++n;
  return n;
}

KqElement KqElement::operator-() const {
  KqElement r = *this;
  r.num_ = -r.num_;
  return r;
}

KqElement KqElement::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (mode_.is_generic()) return KqElement(mpq_class(1 / num_.coeff(0)));
  if (mode_.is_formal()) return KqElement(mode_, -shift_, den_, num_);
  auto inv = inverse_mod(num_, cyclotomic_polynomial(mode_.order()));
  if (!inv) throw std::domain_error("non-invertible cyclotomic residue");
  return KqElement(mode_, 0, *inv, QPolynomial::constant(1));
}

KqElement operator+(const KqElement& a, const KqElement& b) {
  const QMode mode = combine_modes(a.mode_, b.mode_);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (mode.is_generic()) return KqElement(mpq_class(a.num_.coeff(0) + b.num_.coeff(0)));
  if (mode.is_root_of_unity()) return KqElement(mode, 0, a.num_ + b.num_, QPolynomial::constant(1));
  const std::int64_t s = std::min(a.shift_, b.shift_);
  QPolynomial na = a.num_.shifted_up(static_cast<std::size_t>(a.shift_ - s));
  QPolynomial nb = b.num_.shifted_up(static_cast<std::size_t>(b.shift_ - s));
  if (a.den_ == b.den_) return KqElement(mode, s, na + nb, a.den_);
  return KqElement(mode, s, na * b.den_ + nb * a.den_, a.den_ * b.den_);
}

KqElement operator-(const KqElement& a, const KqElement& b) { return a + (-b); }

KqElement operator*(const KqElement& a, const KqElement& b) {
  const QMode mode = combine_modes(a.mode_, b.mode_);
  if (a.is_zero() || b.is_zero()) return KqElement();
  if (a.mode_.is_generic() || b.mode_.is_generic()) {
    const KqElement& c = a.mode_.is_generic() ? a : b;
    KqElement r = a.mode_.is_generic() ? b : a;
    r.num_ *= c.num_.coeff(0);
    return r;
  }
  if (mode.is_root_of_unity()) return KqElement(mode, 0, a.num_ * b.num_, QPolynomial::constant(1));
  return KqElement(mode, a.shift_ + b.shift_, a.num_ * b.num_, a.den_ * b.den_);
}

std::string KqElement::to_string() const {
  if (den_.is_constant()) return laurent_string(num_, shift_);
  return "(" + laurent_string(num_, shift_) + ")/(" + laurent_string(den_, 0) + ")";
}

std::string to_string(IntegralityRing ring) {
  switch (ring) {
    case IntegralityRing::Z: return "Z";
    case IntegralityRing::ZLaurent: return "Z-Laurent";
    case IntegralityRing::ZSqrt2: return "Z-adjoin-sqrt2";
  }
  return "?";
}

IntegralityRing parse_ring(std::string_view text) {
  if (text == "Z") return IntegralityRing::Z;
  if (text == "Z-Laurent") return IntegralityRing::ZLaurent;
  if (text == "Z-adjoin-sqrt2") return IntegralityRing::ZSqrt2;
  throw std::invalid_argument("unknown integrality ring: " + std::string(text));
}

Scalar::Scalar(KqElement a, KqElement b) : a_(std::move(a)), b_(std::move(b)) { combine_modes(a_.mode(), b_.mode()); }

QMode Scalar::mode() const { return combine_modes(a_.mode(), b_.mode()); }

bool Scalar::is_one() const { return b_.is_zero() && a_ == KqElement(1); }

std::optional<mpq_class> Scalar::as_rational() const {
  if (!b_.is_zero()) return std::nullopt;
  return a_.as_rational();
}

bool Scalar::is_integral(IntegralityRing ring) const {
  switch (ring) {
    case IntegralityRing::Z: return b_.is_zero() && a_.is_integer();
    case IntegralityRing::ZLaurent: return b_.is_zero() && a_.is_integer_laurent();
    case IntegralityRing::ZSqrt2: return a_.is_integer_laurent() && b_.is_integer_laurent();
  }
  return false;
}

Scalar Scalar::inverse() const {
  if (b_.is_zero()) return Scalar(a_.inverse());
  const KqElement norm_inv = (a_ * a_ - KqElement(2) * b_ * b_).inverse();
  return Scalar(a_ * norm_inv, -(b_ * norm_inv));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  a_ = a_ + o.a_;
  if (!o.b_.is_zero()) b_ = b_ + o.b_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  a_ = a_ - o.a_;
  if (!o.b_.is_zero()) b_ = b_ - o.b_;
  return *this;
}

Scalar operator*(const Scalar& x, const Scalar& y) {
  if (x.b_.is_zero() && y.b_.is_zero()) return Scalar(x.a_ * y.a_);
  return Scalar(x.a_ * y.a_ + KqElement(2) * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_);
}

std::string Scalar::to_string() const {
  if (b_.is_zero()) return a_.to_string();
  std::string bpart;
  if (auto c = b_.as_rational()) {
    if (*c == 1) bpart = "sqrt2";
    else if (*c == -1) bpart = "-sqrt2";
    else bpart = c->get_str() + "*sqrt2";
  } else if (b_.term_count() == 1 && !b_.has_denominator()) {
    bpart = b_.to_string() + "*sqrt2";
  } else {
    bpart = "(" + b_.to_string() + ")*sqrt2";
  }
  if (a_.is_zero()) return bpart;
  std::string out = a_.to_string();
  append_signed(out, bpart);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

namespace {

Scalar power(Scalar base, std::int64_t e) {
  if (e < 0) return power(base.inverse(), -e);
  Scalar r(1);
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

class ScalarParser {
 public:
  ScalarParser(std::string_view text, QMode mode) : text_(text), mode_(mode) {}

  Scalar run() {
    Scalar v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing characters");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("scalar parse error at " + std::to_string(pos_) + ": " + what + " in '" +
                                std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Scalar expr() {
    Scalar v = term();
    for (;;) {
      if (accept('+')) v += term();
      else if (accept('-')) v -= term();
      else return v;
    }
  }

  Scalar term() {
    Scalar v = unary();
    for (;;) {
      if (accept('*')) v *= unary();
      else if (accept('/')) v = v / unary();
      else return v;
    }
  }

  Scalar unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power_expr();
  }

  Scalar power_expr() {
    skip_ws();
    bool is_q = pos_ < text_.size() && text_[pos_] == 'q';
    Scalar base = primary();
    if (!accept('^')) return base;
    skip_ws();
    bool neg = false;
    if (accept('-')) neg = true;
    else accept('+');
    skip_ws();
    std::int64_t e = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), e);
    if (ec != std::errc()) fail("expected integer exponent");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    if (neg) e = -e;
    if (is_q) return Scalar::q_power(e, mode_);
    return power(base, e);
  }

  Scalar primary() {
    skip_ws();
    if (accept('(')) {
      Scalar v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (text_.substr(pos_, 5) == "sqrt2") {
      pos_ += 5;
      return Scalar::sqrt2();
    }
    if (pos_ < text_.size() && text_[pos_] == 'q') {
      ++pos_;
      if (mode_.is_generic()) fail("q needs a q mode");
      return Scalar::q_power(1, mode_);
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected number, q, sqrt2 or '('");
    return Scalar(mpq_class(mpz_class(std::string(text_.substr(start, pos_ - start)))));
  }

  std::string_view text_;
  QMode mode_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar Scalar::parse(std::string_view text, QMode mode) { return ScalarParser(text, mode).run(); }

}  // namespace eala
