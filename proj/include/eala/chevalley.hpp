#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eala/eala.hpp"
#include "eala/lattice.hpp"

namespace eala {

enum class LabelKind { Xplus, Xminus, Lop, Comm, Rdiff, Rop, Halpha, DegDer, ChiDer, Dual, Dual0 };

/// Name of a basis element, e.g. "Xplus (1,0)", "Comm (1,1) by (0,1)",
/// "DegDer 2", "Halpha".
struct BasisLabel {
  LabelKind kind = LabelKind::Halpha;
  LatticeVector lambda = LatticeVector::zero(2);
  /// Second vector of Comm: [L_{x^(lambda+shift)}, L_{x^-shift}].
  LatticeVector shift = LatticeVector::zero(2);
  /// 1 or 2 for DegDer and Dual0.
  int index = 0;

  Root root() const;
  std::string to_string() const;
  static BasisLabel parse(std::string_view text);
  friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
};

/// The element of g + C + D a label stands for (sqrt2 x^l, L_{x^l}, 2 L_1, ...).
EalaElement label_value(const JordanTorusSpec& spec, const BasisLabel& label);

struct BasisElement {
  BasisLabel label;
  EalaElement value;
};

struct SuppressedRow {
  Root root;
  std::string entry;
};

/// Table row at one root. ChiDer and Dual entries whose degree fails the
/// centroid test are left out and appended to `suppressed` if given.
std::vector<BasisLabel> table_row(const JordanTorusSpec& spec, const Root& root,
                                  std::vector<SuppressedRow>* suppressed = nullptr);

/// Labeled basis over the roots of a window. Rows at roots outside the window
/// are built on demand so brackets can always be expressed.
class ChevalleyBasis {
 public:
  /// Throws std::domain_error if some row has a zero or dependent entry.
  static ChevalleyBasis build(const JordanTorusSpec& spec, int radius);

  const JordanTorusSpec& spec() const { return spec_; }
  int radius() const { return radius_; }
  const std::vector<BasisElement>& elements() const { return elements_; }
  const std::vector<SuppressedRow>& suppressed_rows() const { return suppressed_; }

  const std::vector<BasisElement>& row(const Root& root) const;
  /// Coordinates of a homogeneous element of degree root against row(root);
  /// nullopt if it is not homogeneous of that degree or lies outside the span.
  std::optional<std::vector<Scalar>> express(const EalaElement& elem, const Root& root) const;

 private:
  struct RowData;
  struct RootLess {
    bool operator()(const Root& a, const Root& b) const {
      return a.m != b.m ? a.m < b.m : a.lambda < b.lambda;
    }
  };
  const RowData& row_data(const Root& root) const;

  JordanTorusSpec spec_;
  int radius_ = 0;
  std::vector<BasisElement> elements_;
  std::vector<SuppressedRow> suppressed_;
  mutable std::shared_ptr<std::mutex> mu_ = std::make_shared<std::mutex>();
  mutable std::shared_ptr<std::map<Root, std::shared_ptr<const RowData>, RootLess>> rows_ =
      std::make_shared<std::map<Root, std::shared_ptr<const RowData>, RootLess>>();
};

struct PairFailure {
  std::string left;
  std::string right;
  std::vector<std::string> coeffs;
  std::string bad;
};

struct VerificationReport {
  std::string family;
  int radius = 0;
  std::string ring;
  std::size_t pairs = 0;
  std::size_t skipped = 0;
  std::vector<PairFailure> failures;
  std::vector<SuppressedRow> suppressed_rows;
  double seconds = 0;
  bool passed() const { return failures.empty(); }
};

/// Ring the integrality check uses by default: Z-Laurent for a formal q, Z otherwise.
IntegralityRing default_ring(const JordanTorusSpec& spec);

/// Brackets every ordered pair of basis elements in the window, expresses the
/// result in the row of the sum root and checks every coordinate lies in the
/// ring. Results whose root has norm above target_radius (default twice the
/// window radius) are skipped and counted.
VerificationReport verify_integrality(const ChevalleyBasis& basis, IntegralityRing ring, int workers = 0,
                                      int target_radius = -1);

/// ([x_{a+s}, x_{-a}], [x_{-a-s}, x_a]) with x_{a+s} = x^s, x_{-a} = 1-bar, x_a = 1 and
/// x_{-a-s} = x-bar^{-s} / (x^s, x-bar^{-s}), so that [x_b, x_{-b}] = t_b.
Scalar root_pairing(const JordanTorusSpec& spec, const LatticeVector& sigma);
/// The pairing equals -(a, a) = -(L_1, L_1).
bool verify_root_pairing(const JordanTorusSpec& spec, const LatticeVector& sigma);

/// s with r_l = s * [L_{x^(l+s1)}, L_{x^-s1}], if the two are proportional.
std::optional<Scalar> right_translation_ratio(const JordanTorusSpec& spec, const LatticeVector& lambda);

}  // namespace eala
