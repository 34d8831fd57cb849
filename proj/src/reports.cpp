#include "eala/reports.hpp"

#include <json.hpp>

#include <sstream>

#include "eala/parallel.hpp"

namespace eala {

namespace {

using nlohmann::ordered_json;

/// Quotes a CSV field when it holds a separator or a quote.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

}  // namespace

std::vector<DimsRow> dims_sweep(const JordanTorusSpec& spec, int radius, int tau_radius, int workers) {
  std::vector<LatticeVector> sigmas;
  for (const auto& s : window(spec.nu(), radius))
    if (!s.is_zero()) sigmas.push_back(s);
  std::vector<DimsRow> rows(sigmas.size());
  parallel_for(sigmas.size(), workers, [&](std::size_t i) {
    rows[i] = DimsRow{sigmas[i], isotropic_dim(spec, sigmas[i], tau_radius), closed_form_dim(spec, sigmas[i])};
  });
  return rows;
}

std::string dims_json(const JordanTorusSpec& spec, const std::vector<DimsRow>& rows) {
  ordered_json out;
  out["family"] = spec.descriptor();
  out["rows"] = ordered_json::array();
  bool all = true;
  for (const auto& r : rows) {
    all = all && r.match();
    out["rows"].push_back({{"sigma", r.sigma.to_string()},
                           {"coset", coset_of(r.sigma).to_string()},
                           {"op_dim", r.computed.op_dim},
                           {"d_dim", r.computed.d_dim},
                           {"c_dim", r.computed.c_dim},
                           {"total", r.computed.total()},
                           {"predicted", r.predicted.op_dim},
                           {"lemma_tag", r.predicted.tag},
                           {"match", r.match()}});
  }
  out["all_match"] = all;
  return out.dump(2) + "\n";
}

std::string dims_csv(const std::vector<DimsRow>& rows) {
  std::ostringstream os;
  os << "sigma,coset,op_dim,d_dim,c_dim,total,predicted,lemma_tag,match\n";
  for (const auto& r : rows)
    os << csv_field(r.sigma.to_string()) << ',' << coset_of(r.sigma).to_string() << ',' << r.computed.op_dim << ','
       << r.computed.d_dim << ',' << r.computed.c_dim << ',' << r.computed.total() << ',' << r.predicted.op_dim << ','
       << csv_field(r.predicted.tag) << ',' << (r.match() ? "true" : "false") << '\n';
  return os.str();
}

std::string verification_json(const VerificationReport& r) {
  ordered_json out;
  out["family"] = r.family;
  out["radius"] = r.radius;
  out["ring"] = r.ring;
  out["pairs"] = r.pairs;
  out["skipped"] = r.skipped;
  out["failures"] = ordered_json::array();
  for (const auto& f : r.failures)
    out["failures"].push_back({{"left", f.left}, {"right", f.right}, {"coeffs", f.coeffs}, {"bad", f.bad}});
  out["suppressed_rows"] = ordered_json::array();
  for (const auto& s : r.suppressed_rows)
    out["suppressed_rows"].push_back({{"root", s.root.to_string()}, {"entry", s.entry}});
  return out.dump(2) + "\n";
}

std::string verification_csv(const VerificationReport& r) {
  std::ostringstream os;
  os << "left,right,coeffs,bad\n";
  for (const auto& f : r.failures)
    os << csv_field(f.left) << ',' << csv_field(f.right) << ',' << csv_field(join(f.coeffs, "; ")) << ','
       << csv_field(f.bad) << '\n';
  for (const auto& s : r.suppressed_rows)
    os << "suppressed," << csv_field(s.root.to_string()) << ',' << csv_field(s.entry) << ",\n";
  return os.str();
}

std::string lemmas_json(const LemmaReport* lemmas, const std::string& family, const std::vector<PairingCheck>& pairing) {
  ordered_json out;
  out["family"] = family;
  if (lemmas) out["nu"] = lemmas->nu;
  out["lemmas"] = ordered_json::array();
  if (lemmas) {
    for (const auto& l : lemmas->lemmas)
      out["lemmas"].push_back({{"name", l.name},
                               {"instances", l.instances},
                               {"passed", l.passed()},
                               {"counterexamples", l.counterexamples}});
  }
  out["root_pairing"] = ordered_json::array();
  for (const auto& p : pairing)
    out["root_pairing"].push_back({{"sigma", p.sigma.to_string()}, {"value", p.value.to_string()}, {"passed", p.passed()}});
  return out.dump(2) + "\n";
}

std::string lemmas_csv(const LemmaReport* lemmas, const std::vector<PairingCheck>& pairing) {
  std::ostringstream os;
  os << "check,instances,passed,witness\n";
  if (lemmas)
    for (const auto& l : lemmas->lemmas)
      os << csv_field(l.name) << ',' << l.instances << ',' << (l.passed() ? "true" : "false") << ','
         << csv_field(l.counterexamples.empty() ? "" : l.counterexamples.front()) << '\n';
  for (const auto& p : pairing)
    os << csv_field("root-pairing " + p.sigma.to_string()) << ",1," << (p.passed() ? "true" : "false") << ','
       << csv_field(p.passed() ? "" : p.value.to_string()) << '\n';
  return os.str();
}

}  // namespace eala
