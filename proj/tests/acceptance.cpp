// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>

#include "fixtures.hpp"
#include "hopflink/commands.hpp"
#include "hopflink/corpus.hpp"
#include "hopflink/link.hpp"
#include "hopflink/smash.hpp"
#include "oracles.hpp"

using namespace hopf;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Entry {
  std::string spec;
  FinHopf h;
  std::unique_ptr<LinkContext> ctx;
  LinkQuiver quiver;
  Decomposition dec;

  bool hopf() const { return h.has_algebra() && h.antipode.has_value(); }
};

std::vector<std::unique_ptr<Entry>>& corpus() {
  static std::vector<std::unique_ptr<Entry>> all;
  if (all.empty())
    for (const auto& e : corpus_entries()) {
      auto x = std::make_unique<Entry>();
      x->spec = e.spec;
      x->h = build_algebra(e.spec);
      if (x->h.has_algebra())
        x->ctx = std::make_unique<LinkContext>(x->h);
      else
        x->ctx = std::make_unique<LinkContext>(x->h.coalg, analyze_coradical(x->h.coalg));
      x->quiver = link_quiver(*x->ctx);
      x->dec = components(*x->ctx, x->quiver);
      all.push_back(std::move(x));
    }
  return all;
}

Entry& find(const std::string& spec) {
  for (auto& e : corpus())
    if (e->spec == spec) return *e;
  throw std::runtime_error("not in corpus: " + spec);
}

bool none_failed(const std::vector<Check>& cs, std::string* which = nullptr) {
  for (const auto& c : cs)
    if (c.status == CheckStatus::fail) {
      if (which) *which = c.name;
      return false;
    }
  return true;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (auto x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return "[" + s + "]";
}

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;
  void fail(const std::string& why) {
    ok = false;
    notes.push_back(why);
  }
  void expect(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }
};

// ---------------------------------------------------------------------------

Outcome axiom_gate() {
  Outcome o;
  auto t0 = Clock::now();
  for (const auto& e : corpus_entries()) {
    FinHopf h = build_algebra(e.spec);
    auto ax = check_axioms(h);
    o.expect(all_passed(ax), e.spec + " fails its axioms");
    if (e.spec == "smash:H12") {
      // the fixture is a coalgebra; the Hopf structure asked for must come from Q's algebra
      o.expect(h.has_algebra(), "H12 has no algebra structure");
      SmashCoproduct cand = h12_hopf_candidate();
      for (const auto& a : check_axioms(cand.h))
        if (!a.passed) o.fail("H12 with k[v]/(v^2): " + a.name + " fails at " + a.witness);
    }
  }
  // negative controls must fail and name a witness
  FinHopf s = sweedler();
  std::vector<FinHopf> bad(4, s);
  bad[0].coalg.comul[1][0].c = Scalar(2L);
  bad[1].coalg.counit[2] = Scalar(0L);
  bad[2].set_mul_dense(1, 1, s.unit);
  (*bad[3].antipode)(1, 1) = Scalar(1L);
  for (std::size_t i = 0; i < bad.size(); ++i) {
    bool caught = false;
    for (const auto& a : check_axioms(bad[i])) caught = caught || (!a.passed && !a.witness.empty());
    o.expect(caught, "negative control " + std::to_string(i) + " not caught");
  }
  double t = seconds_since(t0);
  o.expect(t < 5.0, "took " + std::to_string(t) + " s");
  return o;
}

Outcome coradical_dual_oracle() {
  Outcome o;
  for (auto& e : corpus()) {
    const auto& d = e->ctx->data;
    Subspace sum_simples(e->h.dim());
    for (const auto& s : d.simples) sum_simples = sum(sum_simples, s.space);
    o.expect(sum_simples == d.h0, e->spec + ": simples do not reassemble H_0");
    o.expect(coradical(e->h.coalg) == d.h0, e->spec + ": trace-form coradical differs");
  }
  const std::vector<std::pair<std::string, std::size_t>> expected = {
      {"sweedler", 2}, {"taft:3:zeta3", 3}, {"dual-group:S3", 6}, {"smash:H12", 6}};
  for (const auto& [spec, dim] : expected) {
    std::size_t got = find(spec).ctx->data.h0.dim();
    o.expect(got == dim, spec + ": dim H_0 = " + std::to_string(got));
  }
  return o;
}

Outcome wedge_primitive_equivalence() {
  Outcome o;
  std::size_t pairs = 0;
  for (auto& e : corpus()) {
    o.expect(e->quiver.discrepancies == 0,
             e->spec + ": " + std::to_string(e->quiver.discrepancies) + " discrepancies");
    pairs += e->quiver.vertices * e->quiver.vertices;
  }
  o.notes.push_back(std::to_string(pairs) + " ordered pairs");
  return o;
}

HMatrix identity_over(const FinHopf& h, std::size_t n) { return scalar_hmatrix(Matrix::identity(n), h.unit); }

Outcome kronecker_antipode_identities() {
  Outcome o;
  auto t0 = Clock::now();
  std::mt19937_64 rng(2024);
  int instances = 0;
  for (const char* spec : {"sweedler", "taft:3:zeta3"}) {
    FinHopf h = build_algebra(spec);
    CoradicalData d = analyze_coradical(h);
    auto pool = fixtures::triangular_pool(h, d);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (int t = 0; t < 100; ++t, ++instances) {
      KronSide side = t % 2 ? KronSide::right : KronSide::left;
      const auto& ka = pool[pick(rng)];
      const auto& kb = pool[pick(rng)];
      // random similarity conjugates stay multiplicative
      Matrix pa = oracle::random_invertible(ka.g.size(), rng), pb = oracle::random_invertible(kb.g.size(), rng);
      HMatrix a = fixtures::conjugate(ka.g.mat, pa, *inverse(pa));
      HMatrix b = fixtures::conjugate(kb.g.mat, pb, *inverse(pb));
      Matrix pc = oracle::random_invertible(kb.g.size(), rng);
      HMatrix b2 = fixtures::conjugate(kb.g.mat, pc, *inverse(pc));

      HMatrix ab = kron(h, a, b, side);
      o.expect(transpose(ab) == kron(h, transpose(a), transpose(b), side), "transpose identity");
      HMatrix lhs = multiply(h, ab, kron(h, identity_over(h, a.cols), b2, side));
      o.expect(lhs == kron(h, a, multiply(h, b, b2), side), "mixed product identity");
      MultMatrix g{ab, false};
      o.expect(check_multiplicative(h.coalg, ab), "product not multiplicative");
      auto rep = antipode_identities(h, g.mat);
      o.expect(rep.ok(), std::string(spec) + ": antipode identity fails " + rep.witness);
    }
  }
  double t = seconds_since(t0);
  o.expect(t < 10.0, "took " + std::to_string(t) + " s");
  o.notes.push_back(std::to_string(instances) + " instances");
  return o;
}

struct DecomposeCase {
  const FinHopf* h;
  const CoradicalData* d;
  fixtures::Known known;
  bool coradical_valued;
};

HMatrix block_diag(const HMatrix& a, const HMatrix& b) {
  HMatrix out = HMatrix::zero(a.rows + b.rows, a.cols + b.cols, a.dim);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j) out.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows; ++i)
    for (std::size_t j = 0; j < b.cols; ++j) out.at(a.rows + i, a.cols + j) = b.at(i, j);
  return out;
}

std::vector<DecomposeCase> decompose_cases(std::mt19937_64& rng) {
  static FinHopf sw = sweedler(), t3 = taft(3, Scalar::zeta(3)), ds3 = build_algebra("dual-group:S3"),
                 h24 = smash_fixture("H24").h;
  static CoradicalData dsw = analyze_coradical(sw), dt3 = analyze_coradical(t3),
                       dds3 = analyze_coradical(ds3), dh24 = analyze_coradical(h24);
  std::vector<DecomposeCase> out;
  for (auto [h, d] : {std::pair{&sw, &dsw}, std::pair{&t3, &dt3}}) {
    auto pool = fixtures::triangular_pool(*h, *d);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (int i = 0; i < 10; ++i) {
      auto k = fixtures::kron_known(*h, *d, pool[pick(rng)], pool[pick(rng)],
                                    i % 2 ? KronSide::right : KronSide::left);
      out.push_back({h, d, k, false});
    }
    for (int i = 0; i < 5; ++i) out.push_back({h, d, pool[pick(rng)], false});
  }
  // coradical-valued: sums of basic matrices of non-pointed algebras
  for (auto [h, d] : {std::pair{&ds3, &dds3}, std::pair{&h24, &dh24}}) {
    std::uniform_int_distribution<std::size_t> pick(0, d->simples.size() - 1);
    for (int i = 0; i < 10; ++i) {
      std::size_t a = pick(rng), b = pick(rng);
      fixtures::Known k{{block_diag(d->simples[a].matrix.mat, d->simples[b].matrix.mat), false}, {a, b}};
      out.push_back({h, d, k, true});
    }
  }
  return out;
}

bool block_upper_triangular(const MultDecomposition& dec) {
  const auto& off = dec.offsets;
  for (std::size_t a = 0; a + 1 < off.size(); ++a)
    for (std::size_t b = 0; b < a; ++b)
      for (std::size_t i = off[a]; i < off[a + 1]; ++i)
        for (std::size_t j = off[b]; j < off[b + 1]; ++j)
          if (!is_zero(dec.conjugated.at(i, j))) return false;
  return true;
}

Outcome decomposition() {
  Outcome o;
  std::mt19937_64 rng(99);
  auto cases = decompose_cases(rng);
  int n = 0;
  for (const auto& c : cases) {
    ++n;
    const auto& g = c.known.g.mat;
    Matrix p = oracle::random_invertible(g.rows, rng);
    HMatrix conj = fixtures::conjugate(g, p, *inverse(p));
    auto dec = decompose_multiplicative(c.h->coalg, *c.d, conj);
    o.expect(block_upper_triangular(dec), "case " + std::to_string(n) + " not block upper triangular");
    o.expect(fixtures::conjugate(conj, dec.L, dec.L_inv) == dec.conjugated, "L G L^-1 mismatch");
    auto got = dec.simple_index, want = c.known.diagonal_simples;
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    o.expect(got == want, "case " + std::to_string(n) + ": diagonal simples " + join(got) + " vs " + join(want));
    for (const auto& blk : dec.diagonal) o.expect(is_basic(c.h->coalg, blk.mat), "diagonal block not basic");
    if (c.coradical_valued) {
      bool zero = true;
      for (const auto& [key, m] : dec.offdiag)
        for (const auto& e : m.entries) zero = zero && is_zero(e);
      o.expect(zero, "case " + std::to_string(n) + ": coradical input has off-diagonal blocks");
    }
  }
  o.notes.push_back(std::to_string(n) + " conjugates");
  o.expect(n >= 50, "fewer than 50 instances");
  return o;
}

Outcome link_decompositions() {
  Outcome o;
  const std::vector<std::pair<std::string, std::vector<std::size_t>>> expected = {
      {"sweedler", {4}}, {"taft:3:zeta3", {9}}, {"group:Z4", {1, 1, 1, 1}},
      {"dual-group:S3", {1, 1, 4}}, {"smash:H12", {4, 8}}};
  for (const auto& [spec, dims] : expected) {
    auto got = find(spec).dec.dims();
    std::sort(got.begin(), got.end());
    o.expect(got == dims, spec + ": " + join(got));
  }
  for (auto& e : corpus()) {
    std::size_t total = 0;
    for (auto d : e->dec.dims()) total += d;
    o.expect(e->dec.is_direct_sum && total == e->h.dim(), e->spec + ": dimension audit");
  }
  // the H12 components against the smash-side parts
  std::string which;
  auto checks = verify_smash_decomposition(smash_fixture("H12"));
  for (const auto& c : checks)
    if (c.name == "smash-parts-match-components") o.expect(c.status == CheckStatus::pass, "H12 pipelines disagree");
  return o;
}

Outcome dcp_structure() {
  Outcome o;
  int verified = 0;
  for (auto& e : corpus()) {
    auto t0 = Clock::now();
    if (!e->hopf() || !e->ctx->data.has_dual_chevalley) {
      if (e->spec == "smash:H12") o.fail("H12 is not a Hopf algebra here, so H_(C) = C H_(1) cannot be checked");
      continue;
    }
    std::string which;
    o.expect(none_failed(verify_dcp(*e->ctx, e->dec), &which), e->spec + ": " + which);
    ++verified;
    if (e->spec == "smash:H12") {
      double t = seconds_since(t0);
      o.expect(t < 30.0, "H12 took " + std::to_string(t) + " s");
    }
  }
  o.notes.push_back(std::to_string(verified) + " dual Chevalley algebras verified");
  return o;
}

Outcome smash_pipeline() {
  Outcome o;
  SmashCoproduct s = smash_fixture("H12");
  o.expect(s.j.dim() == 6 && s.q.q.dim == 2, "wrong J or Q");
  std::string which;
  auto checks = verify_smash_decomposition(s);
  o.expect(none_failed(checks, &which), "H12: " + which);
  for (const auto& c : checks)
    if (c.name == "smash-parts-subcoalgebras") o.notes.push_back("parts " + c.details);
  return o;
}

Outcome idempotents_and_triviality() {
  Outcome o;
  for (auto& e : corpus())
    o.expect(check_idempotents(e->h.coalg, e->ctx->data.simples, e->ctx->data.idempotents).ok(),
             e->spec + ": idempotent equations");
  std::mt19937_64 rng(99);
  int checked = 0;
  for (const auto& c : decompose_cases(rng)) {
    const auto& g = c.known.g.mat;
    Matrix p = oracle::random_invertible(g.rows, rng);
    auto dec = decompose_multiplicative(c.h->coalg, *c.d, fixtures::conjugate(g, p, *inverse(p)));
    const std::size_t t = dec.blocks();
    if (t < 2) continue;
    const auto& off = dec.offsets;
    for (std::size_t i = off[0]; i < off[1]; ++i)
      for (std::size_t j = off[t - 1]; j < off[t]; ++j) {
        const Vec& x = dec.conjugated.at(i, j);
        Vec projected = hit(c.h->coalg, *c.d, x, dec.simple_index[0], dec.simple_index[t - 1]);
        o.expect(c.d->h0.contains(sub(x, projected)), "corner minus its projection leaves H_0 on blocks " + join(dec.simple_index));
      }
    ++checked;
  }
  o.notes.push_back(std::to_string(checked) + " decompositions with at least two blocks");
  return o;
}

Outcome antipode_and_complement() {
  Outcome o;
  int applicable = 0;
  for (auto& e : corpus()) {
    if (!e->hopf()) continue;
    ++applicable;
    std::string which;
    o.expect(none_failed(antipode_on_components(*e->ctx, e->dec), &which), e->spec + ": " + which);
    if (e->ctx->data.has_dual_chevalley)
      o.expect(none_failed(ideal_complement_check(*e->ctx, e->dec), &which), e->spec + ": " + which);
  }
  o.notes.push_back(std::to_string(applicable) + " Hopf algebras");
  return o;
}

std::string full_run() {
  std::ostringstream os;
  for (const auto& e : corpus_entries()) {
    for (const char* cmd : {"check", "coradical", "quiver", "components", "verify-dcp"})
      os << run_command(cmd, e.spec).to_json();
    if (is_smash_spec(e.spec)) os << run_command("smash", e.spec).to_json();
  }
  return os.str();
}

Outcome determinism() {
  Outcome o;
  auto t0 = Clock::now();
  std::string a = full_run();
  double t = seconds_since(t0);
  std::string b = full_run();
  o.expect(a == b, "reports differ between runs");
  o.expect(t < 120.0, "corpus run took " + std::to_string(t) + " s");
  std::ostringstream ss;
  ss.precision(2);
  ss << std::fixed << t << " s per run, " << a.size() << " bytes";
  o.notes.push_back(ss.str());
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"axiom gate on the corpus with negative controls", axiom_gate},
      {"coradical by trace form equals the sum of simples", coradical_dual_oracle},
      {"wedge growth agrees with nontrivial primitive matrices", wedge_primitive_equivalence},
      {"Kronecker and antipode identities on random instances", kronecker_antipode_identities},
      {"block decomposition of random conjugates", decomposition},
      {"link decompositions of the corpus", link_decompositions},
      {"H_(C) = C H_(1) = H_(1) C on dual Chevalley algebras", dcp_structure},
      {"H12 smash pipeline", smash_pipeline},
      {"orthonormal idempotents and corner triviality", idempotents_and_triviality},
      {"antipode on components and the ideal complement", antipode_and_complement},
      {"determinism of corpus reports", determinism},
  };
  bool all_ok = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    all_ok = all_ok && o.ok;
    std::printf("criterion %2zu %s  %s (%.2f s)", i + 1, o.ok ? "PASS" : "FAIL", criteria[i].first.c_str(),
                seconds_since(t0));
    for (const auto& n : o.notes) std::printf("; %s", n.c_str());
    std::printf("\n");
  }
  return all_ok ? 0 : 1;
}
