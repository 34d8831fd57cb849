#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace eala {

inline constexpr int kMaxRank = 4;

/// Element of Z^nu, nu <= kMaxRank. Ordered by rank, then lexicographically.
class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(int rank);
  LatticeVector(std::initializer_list<std::int64_t> coords);

  static LatticeVector zero(int rank) { return LatticeVector(rank); }
  static LatticeVector unit(int rank, int i);
  /// "(1,-2)".
  static LatticeVector parse(std::string_view text);

  int rank() const { return rank_; }
  std::int64_t operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  std::int64_t& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }

  bool is_zero() const;
  std::int64_t norm_inf() const;
  std::string to_string() const;

  LatticeVector operator-() const;
  LatticeVector& operator+=(const LatticeVector& o);
  LatticeVector& operator-=(const LatticeVector& o);
  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
  friend LatticeVector operator*(std::int64_t k, LatticeVector v);

  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
  friend auto operator<=>(const LatticeVector&, const LatticeVector&) = default;

 private:
  int rank_ = 0;
  std::array<std::int64_t, kMaxRank> c_{};
};

std::int64_t dot(const LatticeVector& a, const LatticeVector& b);

/// All vectors of the given rank with sup-norm at most radius, in lexicographic order.
std::vector<LatticeVector> window(int rank, int radius);

/// Class of a vector modulo 2*Lambda; bit i is the parity of coordinate i.
class CosetClass {
 public:
  CosetClass() = default;
  CosetClass(int rank, std::uint32_t bits);

  static CosetClass of(const LatticeVector& v);
  /// Bit string with coordinate 0 first, e.g. "10" is the class of (1,0).
  static CosetClass parse(std::string_view text);
  static std::vector<CosetClass> all(int rank);

  int rank() const { return rank_; }
  std::uint32_t bits() const { return bits_; }
  bool bit(int i) const { return (bits_ >> i) & 1U; }
  bool is_zero() const { return bits_ == 0; }
  /// The 0/1 representative.
  LatticeVector representative() const;
  std::string to_string() const;

  friend CosetClass operator+(CosetClass a, CosetClass b) { return CosetClass(a.rank_, a.bits_ ^ b.bits_); }
  friend bool operator==(const CosetClass&, const CosetClass&) = default;
  friend auto operator<=>(const CosetClass&, const CosetClass&) = default;

 private:
  int rank_ = 0;
  std::uint32_t bits_ = 0;
};

inline CosetClass coset_of(const LatticeVector& v) { return CosetClass::of(v); }

/// A union of 2*Lambda cosets containing the zero class and spanning Lambda.
class Semilattice {
 public:
  Semilattice() = default;
  static Semilattice full(int nu);
  /// Throws std::invalid_argument unless the classes contain zero and span.
  static Semilattice from_classes(int nu, const std::vector<CosetClass>& classes);
  /// "S:v=2,cosets=00+10+01" or "S:full,v=2".
  static Semilattice parse(std::string_view descriptor);

  int nu() const { return nu_; }
  bool contains(CosetClass c) const { return (mask_ >> c.bits()) & 1U; }
  bool contains(const LatticeVector& v) const { return contains(CosetClass::of(v)); }
  bool is_full() const;
  std::vector<CosetClass> classes() const;
  /// Classes of S + S.
  std::vector<CosetClass> sum_classes() const;
  bool sum_contains(CosetClass c) const;
  std::string descriptor() const;

  friend bool operator==(const Semilattice&, const Semilattice&) = default;

 private:
  int nu_ = 0;
  std::uint32_t mask_ = 0;
};

/// 1 iff both classes lie in s and they are equal or one of them is zero.
int gamma(CosetClass c1, CosetClass c2, const Semilattice& s);

/// Linear functional on Lambda given by integer coefficients.
class IntegralFunctional {
 public:
  IntegralFunctional() = default;
  explicit IntegralFunctional(LatticeVector coeffs) : coeffs_(coeffs) {}

  std::int64_t operator()(const LatticeVector& v) const { return dot(coeffs_, v); }
  const LatticeVector& coeffs() const { return coeffs_; }
  std::string to_string() const { return coeffs_.to_string(); }

  friend IntegralFunctional operator+(const IntegralFunctional& a, const IntegralFunctional& b) {
    return IntegralFunctional(a.coeffs_ + b.coeffs_);
  }
  friend IntegralFunctional operator-(const IntegralFunctional& a) { return IntegralFunctional(-a.coeffs_); }
  friend bool operator==(const IntegralFunctional&, const IntegralFunctional&) = default;

 private:
  LatticeVector coeffs_;
};

/// theta_sigma = k2*theta_1 - k1*theta_2 for sigma = (k1, k2) != 0; no gcd reduction.
IntegralFunctional theta_sigma(const LatticeVector& sigma);

/// m * alpha + lambda with m in {-1, 0, 1}.
struct Root {
  int m = 0;
  LatticeVector lambda;

  bool is_isotropic() const { return m == 0; }
  /// "(1,0)", "a+(1,0)", "-a+(1,0)".
  std::string to_string() const;
  static Root parse(std::string_view text);

  friend bool operator==(const Root&, const Root&) = default;
  friend auto operator<=>(const Root&, const Root&) = default;
};

/// (beta, gamma) with (alpha, alpha) = 1 and the isotropic part radical.
inline std::int64_t root_form(const Root& a, const Root& b) { return static_cast<std::int64_t>(a.m) * b.m; }

/// Exact membership in R = (S+S) u (+-alpha + S).
bool is_root(const Semilattice& s, int m, const LatticeVector& lambda);

/// Roots m*alpha + lambda with |lambda|_inf <= radius, ordered by (m, lambda).
std::vector<Root> roots_in_window(const Semilattice& s, int radius);

struct AxiomCheck {
  std::string axiom;
  /// "pass", "fail" or "structural".
  std::string status;
  std::size_t instances = 0;
  std::string witness;
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;
  bool passed() const;
};

AxiomReport check_ears_axioms_window(const Semilattice& s, int radius);

}  // namespace eala

template <>
struct std::hash<eala::LatticeVector> {
  std::size_t operator()(const eala::LatticeVector& v) const noexcept {
    std::size_t h = static_cast<std::size_t>(v.rank());
    for (int i = 0; i < v.rank(); ++i) h = h * 1000003U ^ static_cast<std::size_t>(v[i] + 0x9e3779b9);
    return h;
  }
};
