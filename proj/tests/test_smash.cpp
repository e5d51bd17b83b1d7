#include "doctest.h"
#include "hopflink/corpus.hpp"
#include "hopflink/smash.hpp"

using namespace hopf;

namespace {
bool all_pass(const std::vector<Check>& cs) {
  for (const auto& c : cs)
    if (c.status == CheckStatus::fail) return false;
  return true;
}

Vec sign_character(const FinHopf& j) {
  Vec s(j.dim());
  for (std::size_t i = 0; i < j.dim(); ++i) s[i] = Scalar((i == 0 || i >= 4) ? 1L : -1L);
  return s;
}
}  // namespace

TEST_SUITE("smash") {
  TEST_CASE("smallest hopf subalgebras") {
    FinHopf j = build_algebra("dual-group:S3");
    Subspace sgn = Subspace::span(6, {sign_character(j)});
    CHECK(smallest_hopf_subalgebra(j, sgn).dim() == 2);
    CHECK(smallest_hopf_subalgebra(j, Subspace(6)) == Subspace::span(6, {j.unit}));
    CHECK(smallest_hopf_subalgebra(j, Subspace::whole(6)) == Subspace::whole(6));
  }

  TEST_CASE("module subcoalgebras of k^S3") {
    FinHopf j = build_algebra("dual-group:S3");
    Subspace k = smallest_hopf_subalgebra(j, Subspace::span(6, {sign_character(j)}));
    auto parts = module_subcoalgebra_decomposition(j, k);
    std::vector<std::size_t> dims;
    for (const auto& p : parts) dims.push_back(p.dim());
    std::sort(dims.begin(), dims.end());
    CHECK(dims == std::vector<std::size_t>{2, 4});
    CHECK(module_subcoalgebra_decomposition(j, Subspace::span(6, {j.unit})).size() == 3);
    CHECK(module_subcoalgebra_decomposition(j, Subspace::whole(6)).size() == 1);
    CHECK_THROWS_AS(module_subcoalgebra_decomposition(sweedler(), Subspace::span(4, {sweedler().unit})),
                    NotCosemisimple);
  }

  TEST_CASE("coaction checks") {
    ComoduleCoalgebra q = h12_comodule();
    FinHopf j = build_algebra("dual-group:S3");
    CHECK(is_coaction(j.coalg, q.rho, 2));
    CHECK(coefficient_space(j.coalg, q.rho, 2).dim() == 2);
    Matrix bad = q.rho;
    bad(0, 0) = Scalar(0L);
    CHECK_FALSE(is_coaction(j.coalg, bad, 2));
    CHECK_THROWS_AS(coefficient_space(j.coalg, bad, 2), InvalidCoaction);
    ComoduleCoalgebra moved = q;
    moved.rho = Matrix(12, 2);
    CHECK_THROWS_AS(smash_coproduct(j, moved), InvalidCoaction);
  }

  TEST_CASE("trivial Q gives back J") {
    FinHopf j = build_algebra("dual-group:S3");
    ComoduleCoalgebra q;
    q.q.dim = 1;
    q.q.names = {"1"};
    q.q.comul = {{{0, 0, Scalar(1L)}}};
    q.q.counit = {Scalar(1L)};
    q.rho = Matrix(6, 1);
    for (std::size_t a = 0; a < 6; ++a) q.rho(a, 0) = j.unit[a];
    SmashCoproduct s = smash_coproduct(j, q);
    for (std::size_t i = 0; i < 6; ++i) CHECK(s.h.coalg.comultiply_basis(i) == j.coalg.comultiply_basis(i));
    CHECK(all_pass(verify_smash_decomposition(s)));
  }

  TEST_CASE("H4 is sweedler") {
    SmashCoproduct s = smash_fixture("H4");
    REQUIRE(s.has_hopf_structure());
    CHECK(all_passed(check_axioms(s.h)));
    Vec v = s.h.basis("1#v"), g = s.h.basis("g#1");
    CHECK(s.h.multiply(v, g) == scale(s.h.multiply(g, v), Scalar(-1L)));
    CHECK(is_zero(s.h.multiply(v, v)));
    CHECK(all_pass(verify_smash_decomposition(s)));
  }

  TEST_CASE("H12 coalgebra") {
    SmashCoproduct s = smash_fixture("H12");
    CHECK_FALSE(s.has_hopf_structure());
    CHECK(all_passed(check_coalgebra_axioms(s.h.coalg)));
    auto checks = verify_smash_decomposition(s);
    CHECK(all_pass(checks));
    for (const auto& c : checks)
      if (c.name == "smash-parts-subcoalgebras") CHECK(c.details == "dims [4,8]");
  }

  TEST_CASE("H12 admits no compatible algebra over the exterior algebra") {
    SmashCoproduct s = h12_hopf_candidate();
    bool mult = true;
    for (const auto& a : check_axioms(s.h))
      if (a.name == "comul-multiplicative") mult = a.passed;
    CHECK_FALSE(mult);
  }

  TEST_CASE("H24") {
    SmashCoproduct s = smash_fixture("H24");
    REQUIRE(s.has_hopf_structure());
    CHECK(all_passed(check_axioms(s.h)));
    CHECK(all_pass(verify_smash_decomposition(s)));
  }

  TEST_CASE("quotient by the coradical ideal") {
    FinHopf h = smash_fixture("H24").h;
    CoradicalData d = analyze_coradical(h);
    QuotientCoalgebra q = quotient_Q(h, d);
    CHECK(q.q.dim == 2);
    CHECK(all_passed(check_coalgebra_axioms(q.q)));
    CHECK(coradical(q.q) == Subspace::span(2, {q.one}));

    FinHopf t = taft(3, Scalar::zeta(3));
    QuotientCoalgebra qt = quotient_Q(t, analyze_coradical(t));
    CHECK(qt.q.dim == 3);
  }

  TEST_CASE("coalgebra map from the action") {
    SmashCoproduct s = smash_fixture("H4");
    CHECK_THROWS_AS(
        [&] {
          ComoduleCoalgebra q = s.q;
          q.rho(3, 1) = Scalar(0L);  // v (x) g -> 0 breaks counitality
          return smash_coproduct(s.j, q);
        }(),
        InvalidCoaction);
  }

  TEST_CASE("coaction must respect the product") {
    SmashCoproduct s = smash_fixture("H4");
    ComoduleCoalgebra q = s.q;
    q.q_algebra->mul[3] = {{1, Scalar(1L)}};  // v^2 = v
    CHECK_THROWS_AS(smash_coproduct(s.j, q), CoactionNotAlgebraMap);
  }
}
