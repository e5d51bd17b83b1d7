#include "doctest.h"
#include "hopflink/corpus.hpp"
#include "hopflink/link.hpp"
#include "oracles.hpp"

using namespace hopf;

namespace {
struct Run {
  FinHopf h;
  std::unique_ptr<LinkContext> ctx;
  LinkQuiver quiver;
  Decomposition dec;
  explicit Run(const std::string& spec) : h(build_algebra(spec)) {
    if (h.has_algebra())
      ctx = std::make_unique<LinkContext>(h);
    else
      ctx = std::make_unique<LinkContext>(h.coalg, analyze_coradical(h.coalg));
    quiver = link_quiver(*ctx);
    dec = components(*ctx, quiver);
  }
};

std::vector<std::size_t> sorted_dims(const Decomposition& d) {
  auto v = d.dims();
  std::sort(v.begin(), v.end());
  return v;
}

bool all_pass(const std::vector<Check>& cs) {
  for (const auto& c : cs)
    if (c.status == CheckStatus::fail) return false;
  return true;
}
}  // namespace

TEST_SUITE("link") {
  TEST_CASE("component dimensions") {
    struct Case { const char* spec; std::vector<std::size_t> dims; };
    // cosemisimple cases follow the irreducible degrees; pointed cases follow cosets of the
    // group generated by the skew-primitive degrees
    const std::vector<Case> cases = {
        {"sweedler", {4}},
        {"taft:3:zeta3", {9}},
        {"taft:4:zeta4", {16}},
        {"group:Z4", {1, 1, 1, 1}},
        {"dual-group:S3", {1, 1, 4}},
        {"tensor(group:Z2,sweedler)", {4, 4}},
        {"dual(sweedler)", {4}},
        {"smash:H4", {4}},
        {"smash:H12", {4, 8}},
        {"smash:H24", {4, 4, 16}},
    };
    for (const auto& c : cases) {
      CAPTURE(c.spec);
      Run r(c.spec);
      CHECK(sorted_dims(r.dec) == c.dims);
      CHECK(r.dec.is_direct_sum);
      CHECK(r.quiver.discrepancies == 0);
    }
  }

  TEST_CASE("dual group algebra components match the character oracle") {
    Run r("dual-group:S3");
    std::vector<std::size_t> expect;
    for (auto d : oracle::irreducible_degrees(s3_table())) expect.push_back(d * d);
    std::sort(expect.begin(), expect.end());
    CHECK(sorted_dims(r.dec) == expect);
  }

  TEST_CASE("direct links in sweedler and taft") {
    Run s("sweedler");
    CHECK(s.quiver.vertices == 2);
    CHECK(s.quiver.edges == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}});
    auto t = direct_link_test(*s.ctx, 0, 1);
    CHECK(t.wedge_cd);
    CHECK(t.wedge_dc);
    CHECK(t.consistent());
    CHECK_FALSE(directly_linked(*s.ctx, 0, 0));

    // C -> gC: each group-like is linked to its neighbours only
    Run tf("taft:3:zeta3");
    CHECK(tf.quiver.edges.size() == 3);
    CHECK(tf.quiver.classes.size() == 1);
  }

  TEST_CASE("link theorem checks pass on the corpus") {
    for (const char* spec : {"sweedler", "taft:3:zeta3", "dual-group:S3", "smash:H12", "smash:H24",
                             "tensor(group:Z2,sweedler)", "dual(taft:3:zeta3)"}) {
      CAPTURE(spec);
      Run r(spec);
      CHECK(all_pass(link_theorem_checks(*r.ctx, r.quiver, r.dec)));
    }
  }

  TEST_CASE("antipode, products and the dual Chevalley structure") {
    for (const char* spec : {"sweedler", "taft:4:zeta4", "dual-group:S3", "smash:H24",
                             "tensor(group:Z2,sweedler)", "dual(taft:3:zeta3)", "group:S3"}) {
      CAPTURE(spec);
      Run r(spec);
      CHECK(all_pass(antipode_on_components(*r.ctx, r.dec)));
      CHECK(all_pass(product_condition_checks(*r.ctx, r.dec)));
      CHECK(all_pass(verify_dcp(*r.ctx, r.dec)));
      CHECK(all_pass(ideal_complement_check(*r.ctx, r.dec)));
    }
  }

  TEST_CASE("coalgebra-only input has no Hopf checks") {
    Run r("smash:H12");
    CHECK_THROWS_AS(verify_dcp(*r.ctx, r.dec), NotApplicable);
    CHECK_THROWS_AS(antipode_on_components(*r.ctx, r.dec), NotApplicable);
  }

  TEST_CASE("first component is H_(1) and S permutes simples") {
    Run r("smash:H24");
    auto c1 = r.dec.component_of_simple(0);
    REQUIRE(c1);
    CHECK(r.dec.components[*c1].space.contains(r.h.unit));
    CHECK(r.dec.components[*c1].space.dim() == 4);
  }

  TEST_CASE("coradical of a component") {
    Run r("taft:3:zeta3");
    CHECK(coradical_of(r.h.coalg, r.dec.components[0].space) == r.ctx->data.h0);
  }

  TEST_CASE("dot output") {
    Run r("sweedler");
    std::string dot = to_dot(*r.ctx, r.quiver, r.dec);
    CHECK(dot.find("graph link_quiver {") == 0);
    CHECK(dot.find("subgraph cluster_0") != std::string::npos);
    CHECK(dot.find("cluster_1") == std::string::npos);
    CHECK(dot.find("C0 -- C1;") != std::string::npos);
    CHECK(to_dot(*r.ctx, r.quiver, r.dec) == dot);
  }
}
