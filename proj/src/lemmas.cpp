#include "eala/lemmas.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "eala/operator.hpp"
#include "eala/operator_expr.hpp"

namespace eala {

namespace {

using Expr = OperatorExpr;

Expr L(const LatticeVector& v) { return Expr::left(v); }
Expr comm(const Expr& a, const Expr& b) { return Expr::commutator(a, b); }

class Sampler {
 public:
  Sampler(const JordanTorusSpec& spec, int radius, std::uint64_t seed, int per_class) : rng_(seed) {
    for (const auto& v : window(spec.nu(), radius))
      if (spec.in_support(v)) pool_[coset_of(v).bits()].push_back(v);
    for (auto& [bits, vs] : pool_) {
      std::shuffle(vs.begin(), vs.end(), rng_);
      if (static_cast<int>(vs.size()) > per_class) vs.resize(static_cast<std::size_t>(per_class));
      std::sort(vs.begin(), vs.end());
    }
  }

  const std::vector<LatticeVector>& reps(CosetClass c) const { return pool_.at(c.bits()); }
  LatticeVector even(int nu) {
    std::uniform_int_distribution<std::int64_t> d(-1, 1);
    LatticeVector v = LatticeVector::zero(nu);
    for (int i = 0; i < nu; ++i) v[i] = 2 * d(rng_);
    return v;
  }

 private:
  std::mt19937_64 rng_;
  std::map<std::uint32_t, std::vector<LatticeVector>> pool_;
};

std::string vecs(std::initializer_list<std::pair<const char*, LatticeVector>> named) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [n, v] : named) {
    out << (first ? "" : " ") << n << "=" << v.to_string();
    first = false;
  }
  return out.str();
}

}  // namespace

bool LemmaReport::passed() const {
  return std::all_of(lemmas.begin(), lemmas.end(), [](const LemmaResult& r) { return r.passed(); });
}

int double_commutator_sign(CosetClass i, CosetClass j) { return (i == j || i.is_zero() || j.is_zero()) ? 0 : 1; }

LemmaReport verify_structure_lemmas(const JordanTorusSpec& spec, int radius, std::uint64_t seed, int reps_per_class) {
  if (spec.family() != JordanFamily::Semilattice)
    throw std::invalid_argument("structure lemmas are stated for semilattice tori");
  if (radius < 1 || reps_per_class < 1) throw std::invalid_argument("radius and sample count must be positive");
  const int nu = spec.nu();
  Sampler sample(spec, radius, seed, reps_per_class);
  const std::vector<CosetClass> cls = spec.support_classes();
  const auto mono = [](const LatticeVector& g) { return JordanElement::monomial(g); };

  LemmaReport report;
  report.family = spec.descriptor();
  report.nu = nu;

  LemmaResult kills{"commutator-kills-unit-class", 0, {}};
  LemmaResult same{"same-class-commute", 0, {}};
  LemmaResult even{"even-shift-invariance", 0, {}};
  LemmaResult normal{"commutator-normal-form", 0, {}};
  for (CosetClass a : cls) {
    for (CosetClass b : cls) {
      for (const auto& s : sample.reps(a)) {
        for (const auto& t : sample.reps(b)) {
          const OperatorSum c = lower(spec, comm(L(s), L(t)));
          if (a == b) {
            ++same.instances;
            if (!c.is_zero()) same.counterexamples.push_back(vecs({{"s", s}, {"t", t}}));
          }
          for (const auto& tj : sample.reps(b)) {
            ++normal.instances;
            if (lower(spec, comm(L(s + t + tj), L(-tj))) != c)
              normal.counterexamples.push_back(vecs({{"s", s}, {"t", t}, {"t'", tj}}));
          }
          for (CosetClass g : cls) {
            for (const auto& gv : sample.reps(g)) {
              const JordanElement out = c.apply(mono(gv));
              if (a.is_zero() || b.is_zero() || g.is_zero()) {
                ++kills.instances;
                if (!out.is_zero()) kills.counterexamples.push_back(vecs({{"s", s}, {"t", t}, {"g", gv}}));
              }
              const LatticeVector e1 = sample.even(nu), e2 = sample.even(nu), e3 = -(e1 + e2);
              ++even.instances;
              if (lower(spec, comm(L(s + e1), L(t + e2))).apply(mono(gv + e3)) != out)
                even.counterexamples.push_back(
                    vecs({{"s", s}, {"t", t}, {"g", gv}, {"e1", e1}, {"e2", e2}, {"e3", e3}}));
            }
          }
        }
      }
    }
  }

  LemmaResult triple{"triple-commutator-vanishes", 0, {}};
  LemmaResult dbl{"double-commutator-left-mult", 0, {}};
  for (CosetClass i : cls) {
    for (CosetClass j : cls) {
      for (CosetClass k : cls) {
        if (!(i + j + k).is_zero()) continue;
        for (const auto& a : sample.reps(i))
          for (const auto& b : sample.reps(j))
            for (const auto& c : sample.reps(k)) {
              ++triple.instances;
              if (!lower(spec, comm(L(a), comm(L(b), L(c)))).is_zero())
                triple.counterexamples.push_back(vecs({{"a", a}, {"b", b}, {"c", c}}));
            }
      }
      const int e = double_commutator_sign(i, j);
      for (const auto& m : sample.reps(i))
        for (const auto& a : sample.reps(i))
          for (const auto& b : sample.reps(j)) {
            ++dbl.instances;
            const OperatorSum lhs = lower(spec, comm(L(m), comm(L(a), L(b))));
            const OperatorSum rhs = Scalar(e) * lower(spec, L(m + a + b));
            if (lhs != rhs) dbl.counterexamples.push_back(vecs({{"m", m}, {"a", a}, {"b", b}}));
          }
    }
  }

  report.lemmas = {kills, same, even, normal, triple, dbl};
  return report;
}

}  // namespace eala
