#include "hopflink/commands.hpp"

#include <fstream>
#include <memory>

#include "hopflink/corpus.hpp"
#include "hopflink/errors.hpp"
#include "hopflink/io.hpp"
#include "hopflink/link.hpp"
#include "hopflink/radical.hpp"

namespace hopf {

namespace {

FinHopf load(const std::string& spec, const CommandOptions& opts) {
  FinHopf h = build_algebra(spec);
  if (opts.field_order > 0 && opts.field_order != h.field_order())
    h = with_field_order(h, opts.field_order);
  return h;
}

CoradicalData analyze(const FinHopf& h) {
  return h.has_algebra() ? analyze_coradical(h) : analyze_coradical(h.coalg);
}

nlohmann::ordered_json dims_of(const std::vector<Subspace>& spaces) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& s : spaces) arr.push_back(s.dim());
  return arr;
}

void describe(AnalysisReport& r, const FinHopf& h) {
  r.summary["dim"] = h.dim();
  r.summary["field_order"] = h.field_order();
  r.summary["has_algebra"] = h.has_algebra();
}

void cmd_check(AnalysisReport& r, const FinHopf& h) {
  for (const auto& a : check_axioms(h)) r.add("axiom-" + a.name, a.passed, a.witness);
  if (!h.has_algebra()) r.add_not_applicable("axiom-algebra", "input is a coalgebra");
}

void cmd_coradical(AnalysisReport& r, const FinHopf& h) {
  CoradicalData d = analyze(h);
  r.summary["coradical_dim"] = d.h0.dim();
  r.summary["filtration_dims"] = dims_of(d.filtration);
  auto sizes = nlohmann::ordered_json::array();
  Subspace reassembled(h.dim());
  for (const auto& s : d.simples) {
    sizes.push_back(s.size());
    reassembled = sum(reassembled, s.space);
  }
  r.summary["simple_matrix_sizes"] = sizes;
  r.summary["pointed"] = d.is_pointed;
  r.summary["cosemisimple"] = d.is_cosemisimple;
  if (h.has_algebra()) r.summary["dual_chevalley"] = d.has_dual_chevalley;
  r.add("coradical-equals-sum-of-simples", reassembled == d.h0,
        "trace-form radical vs simple subcoalgebras");
  r.add("filtration-exhausts", !d.filtration.empty() && d.filtration.back().dim() == h.dim());
  auto ic = check_idempotents(h.coalg, d.simples, d.idempotents);
  r.add("idempotents-restriction", ic.restriction);
  r.add("idempotents-orthogonal", ic.orthogonal);
  r.add("idempotents-complete", ic.complete);
}

struct Analysis {
  std::unique_ptr<LinkContext> ctx;
  LinkQuiver quiver;
  Decomposition dec;
};

Analysis link_analysis(const FinHopf& h) {
  Analysis a;
  if (h.has_algebra())
    a.ctx = std::make_unique<LinkContext>(h);
  else
    a.ctx = std::make_unique<LinkContext>(h.coalg, analyze_coradical(h.coalg));
  a.quiver = link_quiver(*a.ctx);
  a.dec = components(*a.ctx, a.quiver);
  return a;
}

void summarize_components(AnalysisReport& r, const Analysis& a) {
  r.summary["simples"] = a.ctx->simple_count();
  r.summary["components"] = a.dec.components.size();
  r.summary["component_dims"] = a.dec.dims();
  auto members = nlohmann::ordered_json::array();
  for (const auto& c : a.dec.components) members.push_back(c.simples);
  r.summary["component_simples"] = members;
}

void cmd_quiver(AnalysisReport& r, const FinHopf& h, const CommandOptions& opts) {
  Analysis a = link_analysis(h);
  r.summary["vertices"] = a.quiver.vertices;
  auto edges = nlohmann::ordered_json::array();
  for (const auto& [i, j] : a.quiver.edges) edges.push_back({i, j});
  r.summary["edges"] = edges;
  r.summary["classes"] = a.quiver.classes;
  r.add("wedge-primitive-equivalence", a.quiver.discrepancies == 0,
        std::to_string(a.quiver.discrepancies) + " discrepancies");
  if (opts.dot) {
    std::ofstream out(*opts.dot, std::ios::binary);
    if (!out) throw Error("cannot write " + *opts.dot);
    out << to_dot(*a.ctx, a.quiver, a.dec);
    r.artifacts["dot"] = *opts.dot;
  }
}

void cmd_components(AnalysisReport& r, const FinHopf& h) {
  Analysis a = link_analysis(h);
  summarize_components(r, a);
  r.add_all(link_theorem_checks(*a.ctx, a.quiver, a.dec));
  if (h.antipode && h.has_algebra())
    r.add_all(antipode_on_components(*a.ctx, a.dec));
  else
    r.add_not_applicable("antipode-maps-components", "no antipode");
}

void cmd_verify_dcp(AnalysisReport& r, const FinHopf& h) {
  if (!h.has_algebra() || !h.antipode) {
    r.add_not_applicable("dual-chevalley", "input is not a Hopf algebra");
    return;
  }
  Analysis a = link_analysis(h);
  summarize_components(r, a);
  r.summary["dual_chevalley"] = a.ctx->data.has_dual_chevalley;
  r.add_all(product_condition_checks(*a.ctx, a.dec));
  if (!a.ctx->data.has_dual_chevalley) {
    r.add_not_applicable("dual-chevalley", "H_0 is not a Hopf subalgebra");
    return;
  }
  r.add_all(verify_dcp(*a.ctx, a.dec));
  r.add_all(ideal_complement_check(*a.ctx, a.dec));
  r.summary["h1_normal"] = is_normal(*a.ctx, a.dec);
}

void cmd_smash(AnalysisReport& r, const std::string& spec) {
  if (!is_smash_spec(spec)) throw ParseError("smash expects smash:NAME, got '" + spec + "'");
  SmashCoproduct s = smash_fixture(spec.substr(6));
  r.summary["dim"] = s.h.dim();
  r.summary["dim_j"] = s.j.dim();
  r.summary["dim_q"] = s.q.q.dim;
  r.summary["hopf"] = s.has_hopf_structure();
  r.add_all(verify_smash_decomposition(s));
}

void cmd_corpus(AnalysisReport& r, const CommandOptions& opts) {
  auto paths = regen_corpus(opts.corpus_dir);
  const auto& entries = corpus_entries();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    FinHopf built = build_algebra(entries[i].spec);
    FinHopf loaded = load_file(paths[i]);
    bool same = loaded == built && save_string(loaded) == save_string(built);
    r.add("roundtrip-" + entries[i].file, same);
    r.add("axioms-" + entries[i].file, all_passed(check_axioms(loaded)));
  }
  r.summary["fixtures"] = paths.size();
  r.artifacts["corpus"] = opts.corpus_dir;
}

}  // namespace

AnalysisReport run_command(const std::string& command, const std::string& spec,
                           const CommandOptions& opts) {
  AnalysisReport r;
  r.command = command;
  r.algebra_id = command == "corpus" ? "corpus" : spec;
  if (command == "corpus") {
    cmd_corpus(r, opts);
    return r;
  }
  if (command == "smash") {
    cmd_smash(r, spec);
    return r;
  }
  FinHopf h = load(spec, opts);
  describe(r, h);
  if (command == "check")
    cmd_check(r, h);
  else if (command == "coradical")
    cmd_coradical(r, h);
  else if (command == "quiver")
    cmd_quiver(r, h, opts);
  else if (command == "components")
    cmd_components(r, h);
  else if (command == "verify-dcp")
    cmd_verify_dcp(r, h);
  else
    throw ParseError("unknown command '" + command + "'");
  return r;
}

}  // namespace hopf
