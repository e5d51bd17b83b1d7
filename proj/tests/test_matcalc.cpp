#include "doctest.h"
#include "fixtures.hpp"
#include "hopflink/corpus.hpp"
#include "oracles.hpp"

using namespace hopf;

namespace {
HMatrix sweedler_g(const FinHopf& h) {
  return make_hmatrix(2, 2, {h.unit, h.basis("x"), Vec(4), h.basis("g")});
}

std::vector<std::size_t> sorted(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}
}  // namespace

TEST_SUITE("matcalc") {
  TEST_CASE("sweedler matrix is multiplicative but not basic") {
    FinHopf h = sweedler();
    HMatrix g = sweedler_g(h);
    CHECK(check_multiplicative(h.coalg, g));
    CHECK_FALSE(is_basic(h.coalg, g));
    CHECK(counit(h.coalg, g) == Matrix::identity(2));
    CHECK(comultiply(h.coalg, g) == tilde_tensor(g, g));
    HMatrix bad = g;
    bad.at(0, 1) = h.basis("gx");
    CHECK_FALSE(check_multiplicative(h.coalg, bad));
    CHECK_THROWS_AS(tilde_tensor(g, make_hmatrix(1, 1, {h.unit})), ShapeMismatch);
  }

  TEST_CASE("kronecker products against the definition") {
    FinHopf h = taft(3, Scalar::zeta(3));
    CoradicalData d = analyze_coradical(h);
    auto pool = fixtures::triangular_pool(h, d);
    REQUIRE(pool.size() > 3);
    for (const auto& a : pool)
      for (const auto& b : pool) {
        CHECK(kron(h, a.g.mat, b.g.mat, KronSide::left) == oracle::kron_left(h, a.g.mat, b.g.mat));
        CHECK(kron(h, a.g.mat, b.g.mat, KronSide::right) == oracle::kron_right(h, a.g.mat, b.g.mat));
        CHECK(check_multiplicative(h.coalg, kron(h, a.g, b.g, KronSide::left).mat));
      }
    FinHopf bare = h;
    bare.mul.clear();
    CHECK_THROWS_AS(kron(bare, pool[0].g.mat, pool[0].g.mat, KronSide::left), NotBialgebra);
  }

  TEST_CASE("sweedler kronecker example") {
    FinHopf h = sweedler();
    HMatrix g = make_hmatrix(1, 1, {h.basis("g")});
    HMatrix k = kron(h, g, sweedler_g(h), KronSide::left);
    HMatrix expect = make_hmatrix(2, 2, {h.basis("g"), scale(h.basis("gx"), Scalar(1L)), Vec(4), h.unit});
    CHECK(k == expect);
    HMatrix k2 = kron(h, sweedler_g(h), g, KronSide::left);
    CHECK(k2.at(0, 1) == scale(h.basis("gx"), Scalar(-1L)));
  }

  TEST_CASE("antipode identities") {
    FinHopf h = sweedler();
    auto rep = antipode_identities(h, sweedler_g(h));
    CHECK(rep.ok());
    FinHopf bare = h;
    bare.antipode.reset();
    CHECK_THROWS_AS(antipode_identities(bare, sweedler_g(h)), NoAntipode);
  }

  TEST_CASE("primitive spaces in sweedler") {
    FinHopf h = sweedler();
    CoradicalData d = analyze_coradical(h);
    const auto& one = d.simples[0].matrix;
    const auto& g = d.simples[1].matrix;
    auto ps = primitive_space(h.coalg, d.h0, one, g);
    CHECK(ps.space.dim() == 2);
    CHECK(ps.nontrivial_dim == 1);
    CHECK(primitive_space(h.coalg, d.h0, one, one).nontrivial_dim == 0);

    HMatrix x = make_hmatrix(1, 1, {h.basis("x")});
    auto rx = nontriviality_equivalences(h.coalg, d.h0, x, one, g);
    CHECK(rx.some_entry_outside);
    CHECK(rx.all_entries_outside);
    CHECK(rx.independent);
    HMatrix triv = make_hmatrix(1, 1, {sub(h.unit, h.basis("g"))});
    auto rt = nontriviality_equivalences(h.coalg, d.h0, triv, one, g);
    CHECK_FALSE(rt.some_entry_outside);
    CHECK(rt.equivalent());
    CHECK_THROWS_AS(nontriviality_equivalences(h.coalg, d.h0, x, g, one), NotPrimitive);
  }

  TEST_CASE("primitive nontriviality equivalences on random combinations") {
    FinHopf h = taft(3, Scalar::zeta(3));
    CoradicalData d = analyze_coradical(h);
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> coef(-2, 2);
    for (std::size_t c = 0; c < d.simples.size(); ++c)
      for (std::size_t e = 0; e < d.simples.size(); ++e) {
        auto ps = primitive_space(h.coalg, d.h0, d.simples[c].matrix, d.simples[e].matrix);
        for (int t = 0; t < 5; ++t) {
          Vec v(ps.space.ambient_dim());
          for (const auto& b : ps.space.vectors()) axpy(v, Scalar(coef(rng)), b);
          HMatrix x = ps.point(v);
          CHECK(is_primitive(h.coalg, x, d.simples[c].matrix.mat, d.simples[e].matrix.mat));
          CHECK(nontriviality_equivalences(h.coalg, d.h0, x, d.simples[c].matrix,
                                           d.simples[e].matrix).equivalent());
        }
      }
  }

  TEST_CASE("decomposition recovers the diagonal simples") {
    FinHopf h = sweedler();
    CoradicalData d = analyze_coradical(h);
    HMatrix g = sweedler_g(h);
    std::mt19937_64 rng(3);
    for (int t = 0; t < 5; ++t) {
      Matrix p = oracle::random_invertible(2, rng);
      HMatrix c = fixtures::conjugate(g, p, *inverse(p));
      auto dec = decompose_multiplicative(h.coalg, d, c);
      CHECK(dec.blocks() == 2);
      CHECK(sorted(dec.simple_index) == std::vector<std::size_t>{0, 1});
      CHECK(dec.conjugated == fixtures::conjugate(c, dec.L, dec.L_inv));
      CHECK(dec.L * dec.L_inv == Matrix::identity(2));
    }
  }

  TEST_CASE("coradical entries give a block diagonal form") {
    FinHopf h = build_algebra("dual-group:S3");
    CoradicalData d = analyze_coradical(h);
    const auto& big = d.simples.back();
    REQUIRE(big.size() == 2);
    auto dec = decompose_multiplicative(h.coalg, d, big.matrix.mat);
    CHECK(dec.blocks() == 1);
    CHECK(dec.offdiag.empty());
  }

  TEST_CASE("corner triviality needs the idempotent adapted basis") {
    FinHopf h = taft(3, Scalar::zeta(3));
    CoradicalData d = analyze_coradical(h);
    const Vec g2 = h.basis("g^2"), x = h.basis("x");
    // [[g^2, g^2 - 1, -x], [0, 1, x], [0, 0, g]]
    HMatrix g = make_hmatrix(3, 3, {g2, sub(g2, h.unit), scale(x, Scalar(-1L)),
                                    Vec(9), h.unit, x,
                                    Vec(9), Vec(9), h.basis("g")});
    REQUIRE(check_multiplicative(h.coalg, g));
    const std::size_t first = *d.simple_containing(g2), last = *d.simple_containing(h.basis("g"));
    const Vec corner = g.at(0, 2);
    CHECK(hit(h.coalg, d, corner, first, last) == Vec(9));
    CHECK_FALSE(d.h0.contains(corner));

    auto dec = decompose_multiplicative(h.coalg, d, g);
    REQUIRE(dec.blocks() == 3);
    for (const auto& [ab, x_ab] : dec.offdiag) {
      const auto [a, b] = ab;
      for (std::size_t i = 0; i < x_ab.rows; ++i)
        for (std::size_t j = 0; j < x_ab.cols; ++j) {
          const Vec& e = x_ab.at(i, j);
          CHECK(hit(h.coalg, d, e, dec.simple_index[a], dec.simple_index[b]) == e);
        }
    }
  }
}
