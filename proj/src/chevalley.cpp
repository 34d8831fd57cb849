#include "eala/chevalley.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <chrono>
#include <set>
#include <stdexcept>
#include <tuple>

#include "eala/linalg.hpp"
#include "eala/operator_expr.hpp"
#include "eala/parallel.hpp"

namespace eala {

namespace {

constexpr std::array<std::pair<LabelKind, std::string_view>, 11> kNames{{
    {LabelKind::Xplus, "Xplus"},
    {LabelKind::Xminus, "Xminus"},
    {LabelKind::Lop, "Lop"},
    {LabelKind::Comm, "Comm"},
    {LabelKind::Rdiff, "Rdiff"},
    {LabelKind::Rop, "Rop"},
    {LabelKind::Halpha, "Halpha"},
    {LabelKind::DegDer, "DegDer"},
    {LabelKind::ChiDer, "ChiDer"},
    {LabelKind::Dual, "Dual"},
    {LabelKind::Dual0, "Dual0"},
}};

std::string_view kind_name(LabelKind k) {
  for (const auto& [kind, name] : kNames)
    if (kind == k) return name;
  return "?";
}

bool has_vector(LabelKind k) {
  return k != LabelKind::Halpha && k != LabelKind::DegDer && k != LabelKind::Dual0;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

const LatticeVector kZero = LatticeVector::zero(2);
const LatticeVector kS1{1, 0};
const LatticeVector kS2{0, 1};

BasisLabel make(LabelKind kind, const LatticeVector& lambda = kZero, int index = 0) {
  BasisLabel l;
  l.kind = kind;
  l.lambda = lambda;
  l.index = index;
  return l;
}

BasisLabel comm(const LatticeVector& lambda, const LatticeVector& shift) {
  BasisLabel l = make(LabelKind::Comm, lambda);
  l.shift = shift;
  return l;
}

/// First of s2, s1, s1+s2 with both lambda+s and -s in the support.
LatticeVector commutator_shift(const JordanTorusSpec& spec, const LatticeVector& lambda) {
  for (const auto& s : {kS2, kS1, kS1 + kS2})
    if (spec.in_support(lambda + s) && spec.in_support(-s)) return s;
  throw std::domain_error("no commutator shift for " + lambda.to_string());
}

OperatorExpr commutator_expr(const LatticeVector& lambda, const LatticeVector& shift) {
  return OperatorExpr::commutator(OperatorExpr::left(lambda + shift), OperatorExpr::left(-shift));
}

EalaElement mid(const OperatorSum& e) { return EalaElement(TkkElement::from_mid(e)); }

/// Coordinates in the common frame: part (0 operator term, 1 plus, 2 minus,
/// 3 central, 4 derivation), degree, coset, exponent vector, index.
using Coord = std::tuple<int, LatticeVector, std::uint32_t, LatticeVector, int>;

std::map<Coord, Scalar> flatten(const EalaElement& e) {
  std::map<Coord, Scalar> out;
  for (const auto& [l, c] : e.g().plus().terms()) out.emplace(Coord{1, l, 0, kZero, 0}, c);
  for (const auto& [l, c] : e.g().minus().terms()) out.emplace(Coord{2, l, 0, kZero, 0}, c);
  for (const auto& [deg, cf] : e.g().mid().parts())
    for (const auto& [key, c] : cf.terms()) out.emplace(Coord{0, deg, key.coset, key.ell, 0}, c);
  for (const auto& [k, c] : e.c()) out.emplace(Coord{3, k.mu, 0, kZero, k.index}, c);
  for (const auto& [k, c] : e.d()) out.emplace(Coord{4, k.mu, 0, kZero, k.index}, c);
  return out;
}

bool coord_fits(const Coord& c, const Root& root) {
  if (std::get<1>(c) != root.lambda) return false;
  const int part = std::get<0>(c);
  if (root.m == 1) return part == 1;
  if (root.m == -1) return part == 2;
  return part == 0 || part == 3 || part == 4;
}

bool fits(const std::map<Coord, Scalar>& flat, const Root& root) {
  return std::all_of(flat.begin(), flat.end(), [&](const auto& kv) { return coord_fits(kv.first, root); });
}

}  // namespace

Root BasisLabel::root() const {
  switch (kind) {
    case LabelKind::Xplus:
      return Root{1, lambda};
    case LabelKind::Xminus:
      return Root{-1, lambda};
    case LabelKind::Halpha:
    case LabelKind::DegDer:
    case LabelKind::Dual0:
      return Root{0, kZero};
    default:
      return Root{0, lambda};
  }
}

std::string BasisLabel::to_string() const {
  std::string out(kind_name(kind));
  if (kind == LabelKind::DegDer || kind == LabelKind::Dual0) return out + " " + std::to_string(index);
  if (!has_vector(kind)) return out;
  out += " " + lambda.to_string();
  if (kind == LabelKind::Comm) out += " by " + shift.to_string();
  return out;
}

BasisLabel BasisLabel::parse(std::string_view text) {
  text = trim(text);
  const auto space = text.find(' ');
  const std::string_view name = text.substr(0, space);
  std::string_view rest = space == std::string_view::npos ? std::string_view{} : trim(text.substr(space + 1));
  const auto it = std::find_if(kNames.begin(), kNames.end(), [&](const auto& p) { return p.second == name; });
  if (it == kNames.end()) throw std::invalid_argument("unknown basis label: " + std::string(text));
  BasisLabel l = make(it->first);
  if (l.kind == LabelKind::Halpha) {
    if (!rest.empty()) throw std::invalid_argument("Halpha takes no argument");
    return l;
  }
  if (l.kind == LabelKind::DegDer || l.kind == LabelKind::Dual0) {
    const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), l.index);
    if (ec != std::errc{} || ptr != rest.data() + rest.size() || (l.index != 1 && l.index != 2))
      throw std::invalid_argument("expected index 1 or 2 in: " + std::string(text));
    return l;
  }
  if (l.kind == LabelKind::Comm) {
    const auto by = rest.find(" by ");
    if (by == std::string_view::npos) throw std::invalid_argument("Comm needs 'by <shift>': " + std::string(text));
    l.shift = LatticeVector::parse(trim(rest.substr(by + 4)));
    rest = trim(rest.substr(0, by));
  }
  l.lambda = LatticeVector::parse(rest);
  if (l.lambda.rank() != 2 || l.shift.rank() != 2) throw std::invalid_argument("expected rank 2: " + std::string(text));
  return l;
}

EalaElement label_value(const JordanTorusSpec& spec, const BasisLabel& label) {
  const Scalar r2 = Scalar::sqrt2();
  switch (label.kind) {
    case LabelKind::Xplus:
      return EalaElement(TkkElement::from_plus(JordanElement::monomial(label.lambda, r2)));
    case LabelKind::Xminus:
      return EalaElement(TkkElement::from_minus(JordanElement::monomial(label.lambda, r2)));
    case LabelKind::Lop:
      return mid(lower(spec, OperatorExpr::left(label.lambda)));
    case LabelKind::Comm:
      return mid(lower(spec, commutator_expr(label.lambda, label.shift)));
    case LabelKind::Rdiff:
      return mid(lower(spec, OperatorExpr::sum({OperatorExpr::left(label.lambda),
                                                OperatorExpr::scale(Scalar(-1), OperatorExpr::right(label.lambda))})));
    case LabelKind::Rop:
      return mid(lower(spec, OperatorExpr::right(label.lambda)));
    case LabelKind::Halpha:
      return mid(lower(spec, OperatorExpr::scale(Scalar(2), OperatorExpr::left(kZero))));
    case LabelKind::DegDer:
      return EalaElement::derivation(DerKey{kZero, label.index});
    case LabelKind::ChiDer:
      return EalaElement::derivation(DerKey{label.lambda, 0});
    case LabelKind::Dual:
      return EalaElement::central(DerKey{label.lambda, 0});
    case LabelKind::Dual0:
      return EalaElement::central(DerKey{kZero, label.index});
  }
  return {};
}

std::vector<BasisLabel> table_row(const JordanTorusSpec& spec, const Root& root, std::vector<SuppressedRow>* suppressed) {
  const LatticeVector& l = root.lambda;
  if (!is_root(spec.support(), root.m, l)) return {};
  if (root.m == 1) return {make(LabelKind::Xplus, l)};
  if (root.m == -1) return {make(LabelKind::Xminus, l)};
  if (l.is_zero())
    return {make(LabelKind::Halpha), make(LabelKind::DegDer, kZero, 1), make(LabelKind::DegDer, kZero, 2),
            make(LabelKind::Dual0, kZero, 1), make(LabelKind::Dual0, kZero, 2)};

  std::vector<BasisLabel> row;
  const CosetClass cls = coset_of(l);
  switch (spec.family()) {
    case JordanFamily::Semilattice:
      if (spec.semilattice().is_full()) {
        row.push_back(make(LabelKind::Lop, l));
        if (cls.bits() == 0b01 || cls.bits() == 0b11) row.push_back(comm(l, kS2));
        else if (cls.bits() == 0b10) row.push_back(comm(l, kS1));
      } else if (spec.in_support(l)) {
        row.push_back(make(LabelKind::Lop, l));
      } else {
        row.push_back(comm(l, commutator_shift(spec, l)));
      }
      break;
    case JordanFamily::QuantumPlus:
      row.push_back(make(LabelKind::Lop, l));
      if (!rad_f_contains(l, spec.q_mode())) row.push_back(make(LabelKind::Rdiff, l));
      break;
    case JordanFamily::Hermitian:
      row.push_back(make(spec.in_support(l) ? LabelKind::Lop : LabelKind::Rop, l));
      break;
  }
  for (const LabelKind k : {LabelKind::ChiDer, LabelKind::Dual}) {
    const BasisLabel label = make(k, l);
    if (is_centroidal(spec, l)) row.push_back(label);
    else if (suppressed) suppressed->push_back({root, label.to_string()});
  }
  return row;
}

struct ChevalleyBasis::RowData {
  std::vector<BasisElement> elements;
  std::vector<Coord> coords;
  Matrix matrix;
};

const ChevalleyBasis::RowData& ChevalleyBasis::row_data(const Root& root) const {
  {
    std::lock_guard lock(*mu_);
    if (auto it = rows_->find(root); it != rows_->end()) return *it->second;
  }
  auto data = std::make_shared<RowData>();
  std::vector<std::map<Coord, Scalar>> flats;
  std::set<Coord> coords;
  for (const auto& label : table_row(spec_, root)) {
    BasisElement e{label, label_value(spec_, label)};
    auto flat = flatten(e.value);
    if (flat.empty()) throw std::domain_error("basis element " + label.to_string() + " is zero");
    if (!fits(flat, root))
      throw std::domain_error("basis element " + label.to_string() + " is not homogeneous of degree " + root.to_string());
    for (const auto& [c, v] : flat) coords.insert(c);
    flats.push_back(std::move(flat));
    data->elements.push_back(std::move(e));
  }
  data->coords.assign(coords.begin(), coords.end());
  data->matrix = Matrix::Constant(static_cast<Eigen::Index>(coords.size()), static_cast<Eigen::Index>(flats.size()),
                                  Scalar(0));
  for (std::size_t j = 0; j < flats.size(); ++j)
    for (const auto& [c, v] : flats[j]) {
      const auto i = std::lower_bound(data->coords.begin(), data->coords.end(), c) - data->coords.begin();
      data->matrix(i, static_cast<Eigen::Index>(j)) = v;
    }
  if (exact_rank(data->matrix) != data->matrix.cols())
    throw std::domain_error("basis elements at root " + root.to_string() + " are dependent");
  std::lock_guard lock(*mu_);
  return *rows_->emplace(root, std::move(data)).first->second;
}

ChevalleyBasis ChevalleyBasis::build(const JordanTorusSpec& spec, int radius) {
  if (radius < 0) throw std::invalid_argument("radius must be non-negative");
  ChevalleyBasis b;
  b.spec_ = spec;
  b.radius_ = radius;
  for (const auto& root : roots_in_window(spec.support(), radius)) {
    table_row(spec, root, &b.suppressed_);
    for (const auto& e : b.row_data(root).elements) b.elements_.push_back(e);
  }
  return b;
}

const std::vector<BasisElement>& ChevalleyBasis::row(const Root& root) const { return row_data(root).elements; }

std::optional<std::vector<Scalar>> ChevalleyBasis::express(const EalaElement& elem, const Root& root) const {
  const RowData& data = row_data(root);
  const auto flat = flatten(elem);
  if (!fits(flat, root)) return std::nullopt;
  Vector rhs = Vector::Constant(static_cast<Eigen::Index>(data.coords.size()), Scalar(0));
  for (const auto& [c, v] : flat) {
    const auto it = std::lower_bound(data.coords.begin(), data.coords.end(), c);
    if (it == data.coords.end() || *it != c) return std::nullopt;
    rhs(it - data.coords.begin()) = v;
  }
  if (data.elements.empty()) return std::vector<Scalar>{};
  const auto x = solve_exact<Scalar>(data.matrix, rhs);
  if (!x) return std::nullopt;
  return std::vector<Scalar>(x->begin(), x->end());
}

IntegralityRing default_ring(const JordanTorusSpec& spec) {
  return spec.q_mode() == QMode::formal() ? IntegralityRing::ZLaurent : IntegralityRing::Z;
}

namespace {

std::optional<PairFailure> check_pair(const ChevalleyBasis& basis, const BasisElement& a, const BasisElement& b,
                                      IntegralityRing ring) {
  const JordanTorusSpec& spec = basis.spec();
  const Root ra = a.label.root();
  const Root rb = b.label.root();
  const Root target{ra.m + rb.m, ra.lambda + rb.lambda};
  const EalaElement br = e_bracket(spec, a.value, b.value);
  auto fail = [&](std::string bad, std::vector<std::string> coeffs = {}) {
    return PairFailure{a.label.to_string(), b.label.to_string(), std::move(coeffs), std::move(bad)};
  };
  if (br.is_zero()) return std::nullopt;
  if (target.m < -1 || target.m > 1 || !is_root(spec.support(), target.m, target.lambda))
    return fail("nonzero bracket at non-root " + target.to_string());
  if (!fits(flatten(br), target)) return fail("bracket not homogeneous of degree " + target.to_string());
  const auto coeffs = basis.express(br, target);
  if (!coeffs) return fail("bracket outside the span at " + target.to_string());
  std::vector<std::string> text;
  std::optional<std::string> bad;
  for (const auto& c : *coeffs) {
    text.push_back(c.to_string());
    if (!bad && !c.is_integral(ring)) bad = c.to_string();
  }
  if (bad) return fail(*bad, std::move(text));
  return std::nullopt;
}

}  // namespace

VerificationReport verify_integrality(const ChevalleyBasis& basis, IntegralityRing ring, int workers,
                                      int target_radius) {
  const auto start = std::chrono::steady_clock::now();
  if (target_radius < 0) target_radius = 2 * basis.radius();
  const auto& elems = basis.elements();
  const std::size_t n = elems.size();
  std::vector<std::vector<PairFailure>> failures(n);
  std::vector<std::size_t> checked(n, 0);
  std::vector<std::size_t> skipped(n, 0);
  parallel_for(n, workers, [&](std::size_t i) {
    const Root ri = elems[i].label.root();
    for (std::size_t j = 0; j < n; ++j) {
      const Root rj = elems[j].label.root();
      if ((ri.lambda + rj.lambda).norm_inf() > target_radius) {
        ++skipped[i];
        continue;
      }
      ++checked[i];
      if (auto f = check_pair(basis, elems[i], elems[j], ring)) failures[i].push_back(std::move(*f));
    }
  });
  VerificationReport report;
  report.family = basis.spec().descriptor();
  report.radius = basis.radius();
  report.ring = to_string(ring);
  for (std::size_t i = 0; i < n; ++i) {
    report.pairs += checked[i];
    report.skipped += skipped[i];
    for (auto& f : failures[i]) report.failures.push_back(std::move(f));
  }
  report.suppressed_rows = basis.suppressed_rows();
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

Scalar root_pairing(const JordanTorusSpec& spec, const LatticeVector& sigma) {
  if (!spec.in_support(sigma)) throw std::invalid_argument(sigma.to_string() + " is outside the support");
  auto plus = [](const LatticeVector& l, const Scalar& c) {
    return EalaElement(TkkElement::from_plus(JordanElement::monomial(l, c)));
  };
  auto minus = [](const LatticeVector& l, const Scalar& c) {
    return EalaElement(TkkElement::from_minus(JordanElement::monomial(l, c)));
  };
  const Scalar norm = spec.mult_coeff(sigma, -sigma);
  const EalaElement left = e_bracket(spec, plus(sigma, Scalar(1)), minus(kZero, Scalar(1)));
  const EalaElement right = e_bracket(spec, minus(-sigma, Scalar(1) / norm), plus(kZero, Scalar(1)));
  return e_form(spec, left, right);
}

bool verify_root_pairing(const JordanTorusSpec& spec, const LatticeVector& sigma) {
  return root_pairing(spec, sigma) == Scalar(-1);
}

std::optional<Scalar> right_translation_ratio(const JordanTorusSpec& spec, const LatticeVector& lambda) {
  const OperatorSum r = lower(spec, OperatorExpr::right(lambda));
  const OperatorSum c = lower(spec, commutator_expr(lambda, kS1));
  if (c.is_zero()) return r.is_zero() ? std::optional<Scalar>(Scalar(0)) : std::nullopt;
  const auto& [deg, cf] = *c.parts().begin();
  const auto& [key, cv] = *cf.terms().begin();
  const auto rp = r.parts().find(deg);
  if (rp == r.parts().end()) return std::nullopt;
  const auto rt = rp->second.terms().find(key);
  if (rt == rp->second.terms().end()) return std::nullopt;
  const Scalar s = rt->second / cv;
  if (!(s * c == r)) return std::nullopt;
  return s;
}

}  // namespace eala
