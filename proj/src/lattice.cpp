#include "eala/lattice.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <deque>
#include <set>
#include <stdexcept>

namespace eala {

namespace {

void check_rank(int rank) {
  if (rank < 1 || rank > kMaxRank) throw std::invalid_argument("lattice rank must be in [1, 4]");
}

std::int64_t parse_int(std::string_view s) {
  std::int64_t v = 0;
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw std::invalid_argument("bad integer: " + std::string(s));
  return v;
}

}  // namespace

LatticeVector::LatticeVector(int rank) : rank_(rank) { check_rank(rank); }

LatticeVector::LatticeVector(std::initializer_list<std::int64_t> coords) : rank_(static_cast<int>(coords.size())) {
  check_rank(rank_);
  std::copy(coords.begin(), coords.end(), c_.begin());
}

LatticeVector LatticeVector::unit(int rank, int i) {
  LatticeVector v(rank);
  v[i] = 1;
  return v;
}

LatticeVector LatticeVector::parse(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.size() < 2 || text.front() != '(' || text.back() != ')')
    throw std::invalid_argument("lattice vector must look like (a,b): " + std::string(text));
  text = text.substr(1, text.size() - 2);
  std::vector<std::int64_t> coords;
  for (;;) {
    auto comma = text.find(',');
    coords.push_back(parse_int(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  check_rank(static_cast<int>(coords.size()));
  LatticeVector v(static_cast<int>(coords.size()));
  for (std::size_t i = 0; i < coords.size(); ++i) v[static_cast<int>(i)] = coords[i];
  return v;
}

bool LatticeVector::is_zero() const {
  for (int i = 0; i < rank_; ++i)
    if ((*this)[i] != 0) return false;
  return true;
}

std::int64_t LatticeVector::norm_inf() const {
  std::int64_t n = 0;
  for (int i = 0; i < rank_; ++i) n = std::max(n, (*this)[i] < 0 ? -(*this)[i] : (*this)[i]);
  return n;
}

std::string LatticeVector::to_string() const {
  std::string out = "(";
  for (int i = 0; i < rank_; ++i) {
    if (i) out += ',';
    out += std::to_string((*this)[i]);
  }
  return out + ")";
}

LatticeVector LatticeVector::operator-() const {
  LatticeVector r = *this;
  for (int i = 0; i < rank_; ++i) r[i] = -r[i];
  return r;
}

LatticeVector& LatticeVector::operator+=(const LatticeVector& o) {
  if (o.rank_ != rank_) throw std::invalid_argument("lattice rank mismatch");
  for (int i = 0; i < rank_; ++i) (*this)[i] += o[i];
  return *this;
}

LatticeVector& LatticeVector::operator-=(const LatticeVector& o) {
  if (o.rank_ != rank_) throw std::invalid_argument("lattice rank mismatch");
  for (int i = 0; i < rank_; ++i) (*this)[i] -= o[i];
  return *this;
}

LatticeVector operator*(std::int64_t k, LatticeVector v) {
  for (int i = 0; i < v.rank(); ++i) v[i] *= k;
  return v;
}

std::int64_t dot(const LatticeVector& a, const LatticeVector& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("lattice rank mismatch");
  std::int64_t s = 0;
  for (int i = 0; i < a.rank(); ++i) s += a[i] * b[i];
  return s;
}

std::vector<LatticeVector> window(int rank, int radius) {
  std::vector<LatticeVector> out;
  LatticeVector v(rank);
  for (int i = 0; i < rank; ++i) v[i] = -radius;
  for (;;) {
    out.push_back(v);
    int i = rank - 1;
    while (i >= 0 && v[i] == radius) {
      v[i] = -radius;
      --i;
    }
    if (i < 0) break;
    ++v[i];
  }
  return out;
}

CosetClass::CosetClass(int rank, std::uint32_t bits) : rank_(rank), bits_(bits) {
  check_rank(rank);
  if (bits >= (1U << rank)) throw std::invalid_argument("coset bits out of range");
}

CosetClass CosetClass::of(const LatticeVector& v) {
  std::uint32_t bits = 0;
  for (int i = 0; i < v.rank(); ++i)
    if (v[i] & 1) bits |= 1U << i;
  return CosetClass(v.rank(), bits);
}

CosetClass CosetClass::parse(std::string_view text) {
  std::uint32_t bits = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') bits |= 1U << i;
    else if (text[i] != '0') throw std::invalid_argument("coset class must be a bit string: " + std::string(text));
  }
  return CosetClass(static_cast<int>(text.size()), bits);
}

std::vector<CosetClass> CosetClass::all(int rank) {
  std::vector<CosetClass> out;
  for (std::uint32_t b = 0; b < (1U << rank); ++b) out.emplace_back(rank, b);
  return out;
}

LatticeVector CosetClass::representative() const {
  LatticeVector v(rank_);
  for (int i = 0; i < rank_; ++i) v[i] = bit(i) ? 1 : 0;
  return v;
}

std::string CosetClass::to_string() const {
  std::string out;
  for (int i = 0; i < rank_; ++i) out += bit(i) ? '1' : '0';
  return out;
}

Semilattice Semilattice::full(int nu) {
  check_rank(nu);
  Semilattice s;
  s.nu_ = nu;
  s.mask_ = (1U << (1U << nu)) - 1U;
  return s;
}

Semilattice Semilattice::from_classes(int nu, const std::vector<CosetClass>& classes) {
  check_rank(nu);
  Semilattice s;
  s.nu_ = nu;
  for (const auto& c : classes) {
    if (c.rank() != nu) throw std::invalid_argument("coset class rank does not match semilattice rank");
    s.mask_ |= 1U << c.bits();
  }
  if (!(s.mask_ & 1U)) throw std::invalid_argument("semilattice must contain the zero class");
  // The classes must span (Z/2)^nu.
  std::vector<std::uint32_t> basis;
  for (const auto& c : s.classes()) {
    std::uint32_t v = c.bits();
    for (auto b : basis) v = std::min(v, v ^ b);
    if (v) basis.push_back(v);
  }
  if (static_cast<int>(basis.size()) != nu) throw std::invalid_argument("semilattice classes do not span the lattice");
  return s;
}

Semilattice Semilattice::parse(std::string_view d) {
  auto fail = [&] { throw std::invalid_argument("bad semilattice descriptor: " + std::string(d)); };
  if (d.substr(0, 2) != "S:") fail();
  std::string_view body = d.substr(2);
  int nu = 0;
  bool full = false;
  std::string_view cosets;
  bool have_cosets = false;
  while (!body.empty()) {
    auto comma = body.find(',');
    std::string_view item = body.substr(0, comma);
    if (item == "full") full = true;
    else if (item.substr(0, 2) == "v=") nu = static_cast<int>(parse_int(item.substr(2)));
    else if (item.substr(0, 7) == "cosets=") {
      cosets = item.substr(7);
      have_cosets = true;
    } else fail();
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  if (nu < 1 || nu > kMaxRank || full == have_cosets) fail();
  if (full) return Semilattice::full(nu);
  std::vector<CosetClass> classes;
  while (!cosets.empty()) {
    auto plus = cosets.find('+');
    CosetClass c = CosetClass::parse(cosets.substr(0, plus));
    if (c.rank() != nu) fail();
    classes.push_back(c);
    if (plus == std::string_view::npos) break;
    cosets.remove_prefix(plus + 1);
  }
  return from_classes(nu, classes);
}

bool Semilattice::is_full() const { return classes().size() == (1U << nu_); }

std::vector<CosetClass> Semilattice::classes() const {
  std::vector<CosetClass> out;
  for (std::uint32_t b = 0; b < (1U << nu_); ++b)
    if ((mask_ >> b) & 1U) out.emplace_back(nu_, b);
  return out;
}

bool Semilattice::sum_contains(CosetClass c) const {
  for (const auto& a : classes())
    if (contains(a + c)) return true;
  return false;
}

std::vector<CosetClass> Semilattice::sum_classes() const {
  std::vector<CosetClass> out;
  for (const auto& c : CosetClass::all(nu_))
    if (sum_contains(c)) out.push_back(c);
  return out;
}

std::string Semilattice::descriptor() const {
  if (is_full()) return "S:full,v=" + std::to_string(nu_);
  std::string out = "S:v=" + std::to_string(nu_) + ",cosets=";
  bool first = true;
  for (const auto& c : classes()) {
    if (!first) out += '+';
    out += c.to_string();
    first = false;
  }
  return out;
}

int gamma(CosetClass c1, CosetClass c2, const Semilattice& s) {
  if (!s.contains(c1) || !s.contains(c2)) return 0;
  return (c1 == c2 || c1.is_zero() || c2.is_zero()) ? 1 : 0;
}

IntegralFunctional theta_sigma(const LatticeVector& sigma) {
  if (sigma.rank() != 2) throw std::invalid_argument("theta_sigma needs rank 2");
  if (sigma.is_zero()) throw std::invalid_argument("theta_sigma undefined at 0");
  return IntegralFunctional(LatticeVector{sigma[1], -sigma[0]});
}

std::string Root::to_string() const {
  if (m == 0) return lambda.to_string();
  return (m > 0 ? "a+" : "-a+") + lambda.to_string();
}

Root Root::parse(std::string_view text) {
  Root r;
  if (text.substr(0, 2) == "a+") {
    r.m = 1;
    text.remove_prefix(2);
  } else if (text.substr(0, 3) == "-a+") {
    r.m = -1;
    text.remove_prefix(3);
  }
  r.lambda = LatticeVector::parse(text);
  return r;
}

bool is_root(const Semilattice& s, int m, const LatticeVector& lambda) {
  if (m == 0) return s.sum_contains(CosetClass::of(lambda));
  if (m == 1 || m == -1) return s.contains(lambda);
  return false;
}

std::vector<Root> roots_in_window(const Semilattice& s, int radius) {
  if (s.nu() != 2) throw std::invalid_argument("root windows are generated for rank 2");
  if (radius < 0) throw std::invalid_argument("radius must be non-negative");
  std::vector<Root> out;
  const auto points = window(2, radius);
  for (int m = -1; m <= 1; ++m)
    for (const auto& v : points)
      if (is_root(s, m, v)) out.push_back(Root{m, v});
  return out;
}

bool AxiomReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.status != "fail"; });
}

AxiomReport check_ears_axioms_window(const Semilattice& s, int radius) {
  const auto roots = roots_in_window(s, radius);
  AxiomReport report;
  auto add = [&](std::string axiom, bool ok, std::size_t n, std::string witness = {}) {
    report.checks.push_back(AxiomCheck{std::move(axiom), ok ? "pass" : "fail", n, std::move(witness)});
  };
  const LatticeVector zero = LatticeVector::zero(2);

  add("R1", is_root(s, 0, zero), 1);

  {
    bool ok = true;
    std::string witness;
    for (const auto& r : roots) {
      if (!is_root(s, -r.m, -r.lambda)) {
        ok = false;
        witness = r.to_string();
        break;
      }
    }
    add("R2", ok, roots.size(), witness);
  }

  {
    // Span of {(m, lambda)} in R^3: need alpha plus two independent isotropic directions.
    bool has_alpha = std::any_of(roots.begin(), roots.end(), [](const Root& r) { return r.m != 0; });
    std::int64_t best = 0;
    for (const auto& a : roots)
      for (const auto& b : roots)
        best = std::max(best, std::abs(a.lambda[0] * b.lambda[1] - a.lambda[1] * b.lambda[0]));
    add("R3", has_alpha && best != 0, roots.size(), has_alpha && best != 0 ? "" : "window does not span");
  }

  {
    bool ok = true;
    std::string witness;
    std::size_t n = 0;
    for (const auto& r : roots) {
      if (r.m == 0) continue;
      ++n;
      if (is_root(s, 2 * r.m, 2 * r.lambda)) {
        ok = false;
        witness = r.to_string();
      }
    }
    add("R4", ok, n, witness);
  }

  report.checks.push_back(AxiomCheck{"R5", "structural", 0, "lattice subset"});

  {
    bool ok = true;
    std::string witness;
    std::size_t n = 0;
    for (const auto& a : roots) {
      if (a.m == 0) continue;
      for (const auto& b : roots) {
        ++n;
        std::set<int> hits;
        for (int i = -4; i <= 4; ++i)
          if (is_root(s, b.m + i * a.m, b.lambda + i * a.lambda)) hits.insert(i);
        const int d = hits.empty() ? 1 : -*hits.begin();
        const int u = hits.empty() ? -1 : *hits.rbegin();
        const bool interval = !hits.empty() && static_cast<int>(hits.size()) == u + d + 1 && d >= 0 && u >= 0;
        const std::int64_t pairing = 2 * root_form(b, a) / root_form(a, a);
        if (!interval || d - u != pairing) {
          ok = false;
          witness = a.to_string() + " through " + b.to_string();
        }
      }
    }
    add("R6", ok, n, witness);
  }

  {
    bool ok = true;
    std::string witness;
    std::size_t n = 0;
    for (const auto& sigma : roots) {
      if (sigma.m != 0) continue;
      ++n;
      bool found = false;
      for (const auto& c : s.classes()) {
        if (is_root(s, 1, c.representative() + sigma.lambda)) {
          found = true;
          break;
        }
      }
      if (!found) {
        ok = false;
        witness = sigma.to_string();
      }
    }
    add("R7", ok, n, witness);
  }

  {
    std::vector<const Root*> nonisotropic;
    for (const auto& r : roots)
      if (r.m != 0) nonisotropic.push_back(&r);
    std::vector<bool> seen(nonisotropic.size(), false);
    std::deque<std::size_t> queue;
    if (!nonisotropic.empty()) {
      seen[0] = true;
      queue.push_back(0);
    }
    while (!queue.empty()) {
      std::size_t i = queue.front();
      queue.pop_front();
      for (std::size_t j = 0; j < nonisotropic.size(); ++j) {
        if (!seen[j] && root_form(*nonisotropic[i], *nonisotropic[j]) != 0) {
          seen[j] = true;
          queue.push_back(j);
        }
      }
    }
    bool ok = std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
    add("R8", ok, nonisotropic.size());
  }
  return report;
}

}  // namespace eala
