#include "report.hpp"

#include "qd/compiler.hpp"
#include "qd/group.hpp"
#include "qd/quantum_double.hpp"
#include "qd/recoupling.hpp"

namespace qdsim {
namespace {

using qd::shor::format_double;

ordered_json complex_json(std::complex<double> z) { return {{"re", z.real()}, {"im", z.imag()}}; }

ordered_json exact_json(const qd::ExactScalar& s) {
  ordered_json j{{"exact", s.to_string()}};
  j.update(complex_json(s.to_complex()));
  return j;
}

const char* status(bool ok) { return ok ? "pass" : "fail"; }

std::string variant_name(qd::TemplateVariant v) {
  return v == qd::TemplateVariant::corrected ? "corrected" : "as_printed";
}

ordered_json relation_json(const qd::BraidRelationReport& r) {
  ordered_json j{{"arity", r.arity}, {"pairing", r.pairing.name()}, {"unitary", r.unitary}};
  for (const auto& c : r.adjacent) j["adjacent"].push_back({{"i", c.i}, {"j", c.j}, {"holds", c.holds}});
  for (const auto& c : r.far) j["far"].push_back({{"i", c.i}, {"j", c.j}, {"holds", c.holds}});
  if (r.far.empty()) j["far"] = ordered_json::array();
  return j;
}

ordered_json compiled_json(const qd::CompiledGate& g) {
  ordered_json j{{"gate", g.name}, {"pairing", g.pairing.name()}, {"word", g.word.to_string()}, {"holds", g.holds}};
  if (g.embedding) j["embedding"] = g.embedding->slots;
  if (g.scalar) j["scalar"] = exact_json(*g.scalar);
  if (!g.failure.empty()) j["failure"] = g.failure;
  return j;
}

}  // namespace

Table group_table() {
  Table t;
  t.csv = "a,b,product\n";
  for (auto a : qd::kAllElements)
    for (auto b : qd::kAllElements) {
      const auto p = qd::multiply(a, b);
      t.csv += std::string(qd::name(a)) + ',' + std::string(qd::name(b)) + ',' + std::string(qd::name(p)) + '\n';
      t.json["cayley"].push_back({qd::name(a), qd::name(b), qd::name(p)});
    }
  for (auto c : qd::kAllClasses) {
    const auto cls = qd::conjugacy_class(c);
    ordered_json members = ordered_json::array();
    for (auto m : cls.members) members.push_back(qd::name(m));
    ordered_json cent = ordered_json::array();
    for (auto g : qd::centralizer(c)) cent.push_back(qd::name(g));
    t.json["classes"].push_back({{"label", qd::name(c)}, {"members", members}, {"centralizer", cent}});
  }
  return t;
}

Table s_matrix_table() {
  const qd::ModularData md;
  Table t;
  t.csv = "a,b,S\n";
  const auto& spec = qd::spectrum();
  for (int a = 0; a < qd::kNumCharges; ++a)
    for (int b = 0; b < qd::kNumCharges; ++b) {
      const auto s = md.s_entry(a, b);
      t.csv += spec[a].name() + ',' + spec[b].name() + ',' + s.to_string() + '\n';
      t.json["entries"].push_back({{"a", spec[a].name()}, {"b", spec[b].name()}, {"S", s.to_string()}});
    }
  t.json["symmetric"] = md.s_symmetric();
  t.json["unitary"] = md.s_unitary();
  for (const auto& d : qd::s_table_discrepancies(md))
    t.json["printed_discrepancies"].push_back({{"a", d.row.name()},
                                               {"b", d.col.name()},
                                               {"printed", d.printed.to_string()},
                                               {"computed", d.computed.to_string()},
                                               {"in_flux_block", d.in_flux_block}});
  return t;
}

Table t_matrix_table() {
  const qd::ModularData md;
  Table t;
  t.csv = "a,T,re,im\n";
  for (int a = 0; a < qd::kNumCharges; ++a) {
    const auto& s = md.t_entry(a);
    const auto z = s.to_complex();
    t.csv += qd::spectrum()[a].name() + ',' + s.to_string() + ',' + format_double(z.real()) + ',' +
             format_double(z.imag()) + '\n';
    ordered_json row{{"a", qd::spectrum()[a].name()}};
    row.update(exact_json(s));
    t.json["entries"].push_back(row);
  }
  return t;
}

Table fusion_table() {
  const qd::FusionTable ft{qd::ModularData{}};
  Table t;
  t.csv = "a,b,c,N\n";
  const auto& spec = qd::spectrum();
  for (int a = 0; a < qd::kNumCharges; ++a)
    for (int b = 0; b < qd::kNumCharges; ++b)
      for (int c = 0; c < qd::kNumCharges; ++c) {
        const int n = ft.multiplicity(a, b, c);
        if (n == 0) continue;
        t.csv += spec[a].name() + ',' + spec[b].name() + ',' + spec[c].name() + ',' + std::to_string(n) + '\n';
        t.json["rules"].push_back({{"a", spec[a].name()}, {"b", spec[b].name()}, {"c", spec[c].name()}, {"N", n}});
      }
  t.json["max_residual"] = ft.max_residual();
  for (const auto& c : qd::validate_fusion_table(ft))
    t.json["printed_rules"].push_back({{"source", c.rule.source},
                                       {"rule", c.rule.printed},
                                       {"holds", c.holds},
                                       {"mismatch", c.mismatch},
                                       {"reading", c.rule.reading}});
  return t;
}

Table braid_table(qd::TemplateVariant variant) {
  Table t;
  t.csv = "arity,pairing,generator,row,col,exact,re,im\n";
  t.json["variant"] = variant_name(variant);
  auto emit = [&](int arity, qd::Pairing p, int index, const qd::ExactMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (int r = 0; r < m.rows(); ++r) {
      ordered_json row = ordered_json::array();
      for (int c = 0; c < m.cols(); ++c) {
        const auto z = m(r, c).to_complex();
        t.csv += std::to_string(arity) + ',' + p.name() + ',' + std::to_string(index) + ',' + std::to_string(r) +
                 ',' + std::to_string(c) + ',' + m(r, c).to_string() + ',' + format_double(z.real()) + ',' +
                 format_double(z.imag()) + '\n';
        row.push_back(m(r, c).to_string());
      }
      rows.push_back(row);
    }
    t.json["generators"].push_back(
        {{"arity", arity}, {"pairing", p.name()}, {"index", index}, {"unitary", m.is_unitary()}, {"matrix", rows}});
  };
  for (qd::Pairing p : qd::kSingleQubitPairings)
    for (int i = 1; i <= 2; ++i) emit(1, p, i, qd::sigma_1q(p, i));
  for (qd::Pairing p : qd::kTwoQubitPairings)
    for (int i = 1; i <= 5; ++i) emit(2, p, i, qd::sigma_2q(p, i, variant));
  return t;
}

ordered_json verify_recoupling(unsigned threads) {
  const qd::RecouplingData data;
  const double iso = data.max_cg_isometry_error();
  const double intertwiner = data.max_cg_intertwiner_error();
  const auto pent = data.pentagon_scan(threads);
  const auto hex = data.hexagon_scan(threads);
  ordered_json j{{"cg_isometry_error", iso},
                 {"cg_intertwiner_error", intertwiner},
                 {"f_unitarity_error", data.max_f_unitarity_error()},
                 {"r_unitarity_error", data.max_r_unitarity_error()},
                 {"pentagon", {{"cases", pent.cases}, {"max_residual", pent.max_residual}}},
                 {"hexagon", {{"cases", hex.cases}, {"max_residual", hex.max_residual}}}};
  bool ok = iso < 1e-9 && intertwiner < 1e-9 && pent.max_residual < 1e-8 && hex.max_residual < 1e-8;
  for (qd::Pairing p : qd::kSingleQubitPairings) {
    const auto d = qd::derive_sigmas(data, p);
    const auto m = qd::match_printed(d, qd::sigma_1q(p, 1).to_complex(), qd::sigma_1q(p, 2).to_complex());
    ordered_json entry{{"pairing", p.name()},
                       {"branches", d.branches.size()},
                       {"matched", m.matched},
                       {"residual", m.residual}};
    if (m.matched) {
      entry["phase"] = complex_json(m.phase);
      entry["gauge"] = complex_json(m.gauge);
    }
    j["derived_sigmas"].push_back(entry);
    // The PhiPhi and SigmaSigma templates are the ones required to match.
    if (p == qd::kPhiPhi || p == qd::kSigmaSigma) ok = ok && m.matched;
  }
  j["status"] = status(ok);
  return j;
}

ordered_json verify_braids(qd::TemplateVariant variant) {
  ordered_json j{{"variant", variant_name(variant)}};
  bool ok = true;
  for (qd::Pairing p : qd::kSingleQubitPairings) {
    const auto r = qd::verify_braid_relations(1, p, variant);
    ok = ok && r.all_unitary() && r.all_adjacent();
    j["single_qubit"].push_back(relation_json(r));
  }
  for (qd::Pairing p : qd::kTwoQubitPairings) {
    const auto r = qd::verify_braid_relations(2, p, variant);
    ok = ok && r.all_unitary() && r.all_far();
    j["two_qubit"].push_back(relation_json(r));
  }
  j["status"] = status(ok);
  return j;
}

ordered_json verify_gates(qd::TemplateVariant variant) {
  ordered_json j{{"variant", variant_name(variant)}};
  bool ok = true;
  for (const auto& id : qd::gate_identities()) {
    if (id.arity != 1) continue;
    for (qd::Pairing p : qd::kSingleQubitPairings) {
      const auto g = qd::compile(id.name, p, std::nullopt, variant);
      if (p == qd::kPhiPhi) ok = ok && g.holds;
      j["single_qubit"].push_back(compiled_json(g));
    }
  }
  bool any_embedding = false;
  for (qd::Pairing p : qd::kTwoQubitPairings) {
    const auto s = qd::computational_embedding(p, variant);
    ordered_json e{{"pairing", p.name()}, {"candidates", s.candidates}};
    for (const char* key : {"cnot", "cz", "both"}) {
      const auto& list = std::string(key) == "cnot" ? s.cnot : std::string(key) == "cz" ? s.cz : s.both;
      ordered_json arr = ordered_json::array();
      for (const auto& emb : list) arr.push_back(emb.slots);
      e[key] = arr;
    }
    if (!s.cnot_failure.empty()) e["cnot_failure"] = s.cnot_failure;
    if (!s.cz_failure.empty()) e["cz_failure"] = s.cz_failure;
    if (s.chosen) {
      any_embedding = true;
      e["chosen"] = s.chosen->slots;
      for (const char* name : {"CNOT", "CZ"}) e["gates"].push_back(compiled_json(qd::compile(name, p, s.chosen, variant)));
    }
    j["embeddings"].push_back(e);
  }
  j["status"] = status(ok && any_embedding);
  return j;
}

ordered_json shor_json(const std::vector<qd::shor::EnsembleReport>& reports) {
  ordered_json j{{"version", QD_VERSION}};
  if (!reports.empty()) {
    const auto& c = reports.front().config;
    j["config"] = {{"realizations", c.realizations},
                   {"seed", c.seed},
                   {"backend", qd::shor::to_string(c.backend)},
                   {"threads", c.threads}};
  }
  j["rows"] = ordered_json::array();
  for (const auto& r : reports)
    for (std::size_t y = 0; y < qd::shor::kOutcomes; ++y)
      j["rows"].push_back({{"nu", r.config.nu},
                           {"y", y},
                           {"mean_prob", r.mean[y]},
                           {"stderr", r.stderr_[y]},
                           {"stderr_defined", r.stderr_defined},
                           {"discarded", r.discarded}});
  for (const auto& r : reports) {
    const auto best = static_cast<int>(std::max_element(r.mean.begin(), r.mean.end()) - r.mean.begin());
    j["summary"].push_back({{"nu", r.config.nu},
                            {"total_variation", r.total_variation()},
                            {"kept", r.kept},
                            {"discarded", r.discarded},
                            {"most_likely_y", best}});
  }
  return j;
}

}  // namespace qdsim
