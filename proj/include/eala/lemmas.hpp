#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eala/jordan.hpp"

namespace eala {

/// Outcome of one operator identity over all its coset-class instantiations.
struct LemmaResult {
  std::string name;
  std::size_t instances = 0;
  /// One line per failing instance, naming the vectors involved.
  std::vector<std::string> counterexamples;
  bool passed() const { return counterexamples.empty(); }
};

struct LemmaReport {
  std::string family;
  int nu = 2;
  std::vector<LemmaResult> lemmas;
  bool passed() const;
};

/// Commutator identities of left multiplications on a semilattice torus:
///   commutator-kills-unit-class   [L_s,L_t](x^g) = 0 if one of s,t,g lies in 2Lambda
///   same-class-commute            [L_s,L_t] = 0 if s,t share a coset
///   even-shift-invariance         shifting s,t,g by even vectors summing to 0 changes nothing
///   commutator-normal-form        [L_s,L_t] = [L_{s+t+t'},L_{-t'}] for t' in the coset of t
///   triple-commutator-vanishes    [L_a,[L_b,L_c]] = 0 if the classes of a,b,c sum to 0
///   double-commutator-left-mult   [L_m,[L_a,L_b]] = e L_{m+a+b}, m,a in one class,
///                                 e = 0 if the classes coincide or one is 0, else 1
/// Every tuple of classes in the support is visited; within each, up to
/// reps_per_class representatives with norm <= radius are drawn with the seed.
LemmaReport verify_structure_lemmas(const JordanTorusSpec& spec, int radius, std::uint64_t seed,
                                    int reps_per_class = 2);

/// e in the double-commutator identity.
int double_commutator_sign(CosetClass i, CosetClass j);

}  // namespace eala
