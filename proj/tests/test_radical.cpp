#include "doctest.h"
#include "hopflink/corpus.hpp"
#include "hopflink/matcalc.hpp"
#include "hopflink/radical.hpp"
#include "oracles.hpp"

using namespace hopf;

namespace {
CoradicalData analyze(const FinHopf& h) {
  return h.has_algebra() ? analyze_coradical(h) : analyze_coradical(h.coalg);
}

std::vector<std::size_t> filtration_dims(const CoradicalData& d) {
  std::vector<std::size_t> out;
  for (const auto& s : d.filtration) out.push_back(s.dim());
  return out;
}
}  // namespace

TEST_SUITE("radical") {
  TEST_CASE("pointed examples: coradical spanned by the group-like basis") {
    for (const char* spec : {"sweedler", "taft:3:zeta3", "taft:4:zeta4", "group:Z4", "group:S3",
                             "tensor(group:Z2,sweedler)", "tensor(sweedler,sweedler)", "smash:H4"}) {
      CAPTURE(spec);
      FinHopf h = build_algebra(spec);
      CoradicalData d = analyze(h);
      std::vector<Vec> gl;
      for (auto i : oracle::grouplike_basis(h.coalg)) gl.push_back(h.basis(i));
      CHECK(d.h0 == Subspace::span(h.dim(), gl));
      CHECK(d.is_pointed);
    }
  }

  TEST_CASE("dual group algebras: simple sizes are the irreducible degrees") {
    struct Case { const char* spec; GroupTable t; };
    for (const auto& c : {Case{"dual-group:S3", s3_table()}, Case{"dual-group:Z4", cyclic_table(4)},
                          Case{"dual-group:Z3", cyclic_table(3)}}) {
      CAPTURE(c.spec);
      CoradicalData d = analyze(build_algebra(c.spec));
      std::vector<std::size_t> sizes;
      for (const auto& s : d.simples) sizes.push_back(s.size());
      std::sort(sizes.begin(), sizes.end());
      CHECK(sizes == oracle::irreducible_degrees(c.t));
      CHECK(d.is_cosemisimple);
    }
  }

  TEST_CASE("taft filtration by x-degree") {
    for (int n : {2, 3, 4}) {
      FinHopf h = taft(n, Scalar::zeta(n));
      CoradicalData d = analyze(h);
      REQUIRE(d.filtration.size() == static_cast<std::size_t>(n));
      for (int k = 0; k < n; ++k) {
        std::vector<Vec> gens;
        for (int i = 0; i < n; ++i)
          for (int j = 0; j <= k; ++j) gens.push_back(h.basis(i * n + j));
        CHECK(d.filtration[k] == Subspace::span(h.dim(), gens));
      }
    }
  }

  TEST_CASE("filtration of the corpus") {
    CHECK(filtration_dims(analyze(sweedler())) == std::vector<std::size_t>{2, 4});
    CHECK(filtration_dims(analyze(build_algebra("smash:H12"))) == std::vector<std::size_t>{6, 12});
    CHECK(filtration_dims(analyze(build_algebra("dual-group:S3"))) == std::vector<std::size_t>{6});
  }

  TEST_CASE("wedge agrees with the preimage oracle") {
    for (const char* spec : {"sweedler", "taft:3:zeta3", "smash:H12", "dual(taft:3:zeta3)"}) {
      CAPTURE(spec);
      FinHopf h = build_algebra(spec);
      CoradicalData d = analyze(h);
      for (const auto& a : d.simples)
        for (const auto& b : d.simples)
          CHECK(wedge(h.coalg, a.space, b.space) == oracle::wedge_by_preimage(h.coalg, a.space, b.space));
      CHECK(wedge(h.coalg, d.h0, d.h0) == oracle::wedge_by_preimage(h.coalg, d.h0, d.h0));
    }
  }

  TEST_CASE("wedge in sweedler") {
    FinHopf h = sweedler();
    Subspace k1 = Subspace::span(4, {h.unit}), kg = Subspace::span(4, {h.basis("g")});
    CHECK(wedge(h.coalg, k1, kg) == Subspace::span(4, {h.unit, h.basis("x"), h.basis("g")}));
    CHECK(wedge(h.coalg, kg, k1) == Subspace::span(4, {h.unit, h.basis("gx"), h.basis("g")}));
    CHECK(wedge(h.coalg, k1, k1) == k1);
  }

  TEST_CASE("simples carry basic multiplicative matrices") {
    for (const char* spec : {"dual-group:S3", "smash:H12", "smash:H24", "taft:3:zeta3"}) {
      CAPTURE(spec);
      FinHopf h = build_algebra(spec);
      CoradicalData d = analyze(h);
      Subspace total(h.dim());
      for (const auto& s : d.simples) {
        CHECK(is_basic(h.coalg, s.matrix.mat));
        CHECK(entry_span(s.matrix.mat) == s.space);
        total = sum(total, s.space);
      }
      CHECK(total == d.h0);
      if (h.has_algebra()) CHECK(d.simples[0].space == Subspace::span(h.dim(), {h.unit}));
    }
  }

  TEST_CASE("orthonormal idempotents") {
    for (const char* spec : {"sweedler", "taft:4:zeta4", "dual-group:S3", "smash:H12",
                             "tensor(group:Z2,sweedler)"}) {
      CAPTURE(spec);
      FinHopf h = build_algebra(spec);
      CoradicalData d = analyze(h);
      CHECK(check_idempotents(h.coalg, d.simples, d.idempotents).ok());
    }
  }

  TEST_CASE("hit projections sum back to the element") {
    FinHopf h = build_algebra("smash:H12");
    CoradicalData d = analyze(h);
    for (std::size_t i = 0; i < h.dim(); ++i) {
      Vec total(h.dim());
      for (std::size_t a = 0; a < d.simples.size(); ++a)
        for (std::size_t b = 0; b < d.simples.size(); ++b)
          total = add(total, hit(h.coalg, d, h.basis(i), a, b));
      CHECK(total == h.basis(i));
      CHECK(hit(h.coalg, d, h.basis(i), std::nullopt, std::nullopt) == h.basis(i));
    }
  }

  TEST_CASE("non-split input names the order to use") {
    FinHopf h = dual_group_algebra(cyclic_table(3), cyclic_names(3), 1);
    try {
      analyze_coradical(h);
      FAIL("expected NonSplitField");
    } catch (const NonSplitField& e) {
      CHECK(std::string(e.what()).find("--field-order 3") != std::string::npos);
    }
    CHECK(analyze_coradical(with_field_order(h, 3)).simples.size() == 3);
  }

  TEST_CASE("dual chevalley flag") {
    CHECK(analyze(sweedler()).has_dual_chevalley);
    CHECK(analyze(build_algebra("smash:H24")).has_dual_chevalley);
    CHECK(analyze(build_algebra("dual(taft:3:zeta3)")).has_dual_chevalley);
  }
}
