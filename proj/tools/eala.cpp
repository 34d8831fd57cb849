#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "eala/chevalley.hpp"
#include "eala/lemmas.hpp"
#include "eala/parallel.hpp"
#include "eala/reports.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct RunConfig {
  std::string jordan = "semilattice:S:full,v=2";
  bool jordan_given = false;
  int radius = 3;
  std::optional<int> tau_radius;
  std::optional<std::string> ring;
  std::string out;
  std::string format = "json";
  std::uint64_t seed = 1;
  int workers = eala::default_workers();
  std::optional<int> nu;
  bool inject_fault = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

eala::JordanTorusSpec parse_spec(const RunConfig& cfg) {
  eala::JordanTorusSpec spec;
  try {
    spec = eala::JordanTorusSpec::parse(cfg.jordan);
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad --jordan: ") + e.what());
  }
  if (cfg.inject_fault) {
    if (spec.family() != eala::JordanFamily::Semilattice)
      throw UsageError("--inject-fault applies to semilattice tori only");
    spec = spec.with_fault();
  }
  return spec;
}

void check_radii(const RunConfig& cfg) {
  if (cfg.radius < 1) throw UsageError("--radius must be at least 1");
  if (cfg.tau_radius && *cfg.tau_radius < cfg.radius) throw UsageError("--tau-radius must be at least --radius");
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + cfg.out);
  f << text;
}

int cmd_dims(const RunConfig& cfg) {
  check_radii(cfg);
  const auto spec = parse_spec(cfg);
  const auto rows = eala::dims_sweep(spec, cfg.radius, cfg.tau_radius.value_or(cfg.radius), cfg.workers);
  emit(cfg, cfg.format == "csv" ? eala::dims_csv(rows) : eala::dims_json(spec, rows));
  std::size_t bad = 0;
  for (const auto& r : rows) bad += r.match() ? 0 : 1;
  std::cerr << "dims: " << rows.size() << " rows, " << bad << " mismatches\n";
  return bad == 0 ? kOk : kFailed;
}

eala::IntegralityRing ring_of(const RunConfig& cfg, const eala::JordanTorusSpec& spec) {
  if (!cfg.ring) return eala::default_ring(spec);
  try {
    return eala::parse_ring(*cfg.ring);
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad --ring: ") + e.what());
  }
}

int cmd_verify(const RunConfig& cfg) {
  check_radii(cfg);
  const auto spec = parse_spec(cfg);
  const auto ring = ring_of(cfg, spec);
  const auto basis = eala::ChevalleyBasis::build(spec, cfg.radius);
  const auto report = eala::verify_integrality(basis, ring, cfg.workers);
  emit(cfg, cfg.format == "csv" ? eala::verification_csv(report) : eala::verification_json(report));
  std::cerr << "verify: " << report.family << " ring " << report.ring << ": " << report.pairs << " pairs, "
            << report.skipped << " skipped, " << report.failures.size() << " failures, "
            << report.suppressed_rows.size() << " suppressed entries\n";
  if (spec.q_mode().is_formal()) {
    for (const char* d : {"quantum:q=root:1", "quantum:q=root:2"}) {
      const auto s = eala::JordanTorusSpec::parse(d);
      const auto r = eala::verify_integrality(eala::ChevalleyBasis::build(s, cfg.radius), eala::IntegralityRing::Z,
                                              cfg.workers);
      std::cerr << "verify: specialization " << d << " ring Z: " << r.failures.size() << " failures\n";
    }
  }
  return report.passed() ? kOk : kFailed;
}

int cmd_lemmas(const RunConfig& cfg) {
  check_radii(cfg);
  RunConfig c = cfg;
  if (cfg.nu && (*cfg.nu < 2 || *cfg.nu > eala::kMaxRank)) throw UsageError("--nu must lie in 2..4");
  eala::JordanTorusSpec spec;
  if (cfg.nu && !cfg.jordan_given) {
    spec = eala::JordanTorusSpec::semilattice_torus(eala::Semilattice::full(*cfg.nu));
    if (cfg.inject_fault) spec = spec.with_fault();
  } else {
    spec = parse_spec(c);
    if (cfg.nu && spec.nu() != *cfg.nu) throw UsageError("--nu disagrees with the rank of --jordan");
  }
  std::optional<eala::LemmaReport> lemmas;
  if (spec.family() == eala::JordanFamily::Semilattice)
    lemmas = eala::verify_structure_lemmas(spec, cfg.radius, cfg.seed);
  std::vector<eala::PairingCheck> pairing;
  if (spec.nu() == 2)
    for (const auto& s : eala::window(2, cfg.radius))
      if (spec.in_support(s)) pairing.push_back({s, eala::root_pairing(spec, s)});
  const eala::LemmaReport* lp = lemmas ? &*lemmas : nullptr;
  emit(cfg, cfg.format == "csv" ? eala::lemmas_csv(lp, pairing) : eala::lemmas_json(lp, spec.descriptor(), pairing));
  bool ok = !lemmas || lemmas->passed();
  if (lemmas)
    for (const auto& l : lemmas->lemmas)
      for (const auto& w : l.counterexamples) std::cerr << l.name << ": " << w << "\n";
  for (const auto& p : pairing) {
    if (p.passed()) continue;
    ok = false;
    std::cerr << "root pairing at " << p.sigma.to_string() << " is " << p.value.to_string() << ", expected -1\n";
  }
  return ok ? kOk : kFailed;
}

/// "Xplus (1,0)" or "<coefficient> * Xplus (1,0)".
std::pair<eala::Scalar, eala::BasisLabel> parse_term(const eala::JordanTorusSpec& spec, const std::string& text) {
  try {
    const auto star = text.find(" * ");
    if (star == std::string::npos) return {eala::Scalar(1), eala::BasisLabel::parse(text)};
    return {eala::Scalar::parse(text.substr(0, star), spec.q_mode()), eala::BasisLabel::parse(text.substr(star + 3))};
  } catch (const std::exception& e) {
    throw UsageError("cannot parse element '" + text + "': " + e.what());
  }
}

int cmd_bracket(const RunConfig& cfg, const std::string& left, const std::string& right, bool show_raw) {
  check_radii(cfg);
  const auto spec = parse_spec(cfg);
  const auto [ca, la] = parse_term(spec, left);
  const auto [cb, lb] = parse_term(spec, right);
  for (const auto* l : {&la, &lb}) {
    if (l->root().lambda.norm_inf() > cfg.radius) throw UsageError(l->to_string() + " lies outside the window");
    const auto row = eala::table_row(spec, l->root());
    if (std::find(row.begin(), row.end(), *l) == row.end())
      throw UsageError(l->to_string() + " is not a basis element of " + spec.descriptor());
  }
  const auto basis = eala::ChevalleyBasis::build(spec, cfg.radius);
  const eala::EalaElement result =
      eala::e_bracket(spec, ca * eala::label_value(spec, la), cb * eala::label_value(spec, lb));
  if (show_raw) std::cout << "raw: " << result.to_string() << "\n";
  if (result.is_zero()) {
    std::cout << "0\n";
    return kOk;
  }
  const eala::Root target{la.root().m + lb.root().m, la.root().lambda + lb.root().lambda};
  const auto coeffs = target.m >= -1 && target.m <= 1 ? basis.express(result, target) : std::nullopt;
  if (!coeffs) {
    std::cerr << "bracket does not lie in the span of the basis at " << target.to_string() << "\n";
    return kFailed;
  }
  const auto& row = basis.row(target);
  std::string line;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if ((*coeffs)[i].is_zero()) continue;
    if (!line.empty()) line += " + ";
    line += (*coeffs)[i].to_string() + " * " + row[i].label.to_string();
  }
  std::cout << line << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Isotropic root spaces and Chevalley bases of elliptic extended affine Lie algebras"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--jordan", cfg.jordan, "Jordan torus descriptor")->each([&](const std::string&) {
      cfg.jordan_given = true;
    });
    sub->add_option("--radius", cfg.radius, "window radius (sup norm)");
    sub->add_option("--tau-radius", cfg.tau_radius, "radius of the commutator search window");
    sub->add_option("--ring", cfg.ring, "Z, Z-Laurent or Z-adjoin-sqrt2");
    sub->add_option("--out", cfg.out, "write the report here instead of stdout");
    sub->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--seed", cfg.seed, "seed for sampled representatives");
    sub->add_option("--workers", cfg.workers, "worker threads (default: EALA_WORKERS or all cores)")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--inject-fault", cfg.inject_fault, "break the semilattice product on purpose");
  };

  auto* dims = app.add_subcommand("dims", "isotropic root space dimensions against the closed form");
  common(dims);
  auto* verify = app.add_subcommand("verify", "integrality of the Chevalley basis structure constants");
  common(verify);
  auto* lemmas = app.add_subcommand("lemmas", "left multiplication identities and the root pairing");
  common(lemmas);
  lemmas->add_option("--nu", cfg.nu, "rank of the full semilattice torus when --jordan is absent");
  auto* bracket = app.add_subcommand("bracket", "bracket two basis elements and decompose the result");
  common(bracket);
  std::string left;
  std::string right;
  bool show_raw = false;
  bracket->add_option("left", left, "basis element, optionally '<c> * <label>'")->required();
  bracket->add_option("right", right, "basis element, optionally '<c> * <label>'")->required();
  bracket->add_flag("--raw", show_raw, "also print the unreduced bracket");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*dims) return cmd_dims(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*lemmas) return cmd_lemmas(cfg);
    return cmd_bracket(cfg, left, right, show_raw);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
}
