#pragma once

#include <string>
#include <vector>

#include "eala/chevalley.hpp"
#include "eala/eala.hpp"
#include "eala/lemmas.hpp"

namespace eala {

struct DimsRow {
  LatticeVector sigma;
  IsotropicDim computed;
  ClosedFormDim predicted;
  bool match() const { return computed.stable && computed.op_dim == predicted.op_dim; }
};

/// One row per nonzero sigma with |sigma| <= radius, in lexicographic order.
std::vector<DimsRow> dims_sweep(const JordanTorusSpec& spec, int radius, int tau_radius, int workers = 0);

std::string dims_json(const JordanTorusSpec& spec, const std::vector<DimsRow>& rows);
/// Columns: sigma, coset, op_dim, d_dim, c_dim, total, predicted, lemma_tag, match.
std::string dims_csv(const std::vector<DimsRow>& rows);

/// Timing is left out so that reports are reproducible byte for byte.
std::string verification_json(const VerificationReport& r);
/// Columns: left, right, coeffs, bad; suppressed rows follow as "suppressed,<root>,<entry>".
std::string verification_csv(const VerificationReport& r);

struct PairingCheck {
  LatticeVector sigma;
  Scalar value;
  bool passed() const { return value == Scalar(-1); }
};

std::string lemmas_json(const LemmaReport* lemmas, const std::string& family, const std::vector<PairingCheck>& pairing);
std::string lemmas_csv(const LemmaReport* lemmas, const std::vector<PairingCheck>& pairing);

}  // namespace eala
