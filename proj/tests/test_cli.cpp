#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "hopflink/commands.hpp"
#include "hopflink/corpus.hpp"
#include "hopflink/io.hpp"

using namespace hopf;

TEST_SUITE("report") {
  TEST_CASE("names are unique") {
    AnalysisReport r;
    r.add("a", true);
    CHECK_THROWS_AS(r.add("a", false), Error);
  }

  TEST_CASE("not applicable is not a failure") {
    AnalysisReport r;
    r.algebra_id = "x";
    r.command = "check";
    r.add("a", true);
    r.add_not_applicable("b", "why");
    CHECK_FALSE(r.any_failed());
    std::string json = r.to_json();
    CHECK(json.find("\"report_version\": 1") != std::string::npos);
    CHECK(json.find("\"status\": \"not_applicable\"") != std::string::npos);
    CHECK(r.to_text().find("[N/A ] b") != std::string::npos);
    r.add("c", false, "witness");
    CHECK(r.any_failed());
    CHECK(r.to_text().find("[FAIL] c") != std::string::npos);
  }
}

TEST_SUITE("cli") {
  TEST_CASE("components of k^S3") {
    auto r = run_command("components", "dual-group:S3");
    CHECK_FALSE(r.any_failed());
    CHECK(r.summary["components"] == 3);
    CHECK(r.summary["component_dims"] == nlohmann::ordered_json({1, 1, 4}));
  }

  TEST_CASE("verify-dcp on taft") {
    auto r = run_command("verify-dcp", "taft:3:zeta3");
    CHECK_FALSE(r.any_failed());
    CHECK(r.summary["components"] == 1);
    for (const char* name : {"dcp-component-left", "dcp-component-right", "dcp-component-products",
                             "dcp-reassembly"}) {
      auto it = std::find_if(r.checks.begin(), r.checks.end(), [&](const Check& c) { return c.name == name; });
      REQUIRE(it != r.checks.end());
      CHECK(it->status == CheckStatus::pass);
    }
  }

  TEST_CASE("verify-dcp on a coalgebra is not applicable") {
    auto r = run_command("verify-dcp", "smash:H12");
    CHECK_FALSE(r.any_failed());
    CHECK(r.count(CheckStatus::not_applicable) == 1);
  }

  TEST_CASE("quiver writes DOT") {
    auto path = (std::filesystem::temp_directory_path() / "hopflink-test-q.dot").string();
    CommandOptions opts;
    opts.dot = path;
    auto r = run_command("quiver", "sweedler", opts);
    CHECK(r.artifacts.at("dot") == path);
    CHECK(r.summary["vertices"] == 2);
    CHECK(r.summary["edges"].size() == 1);
    CHECK(std::filesystem::exists(path));
  }

  TEST_CASE("reports are deterministic") {
    for (const char* cmd : {"check", "coradical", "components", "verify-dcp"})
      for (const char* spec : {"sweedler", "dual-group:S3", "tensor(group:Z2,sweedler)"}) {
        CAPTURE(cmd);
        CAPTURE(spec);
        CHECK(run_command(cmd, spec).to_json() == run_command(cmd, spec).to_json());
      }
    CHECK(run_command("smash", "smash:H12").to_json() == run_command("smash", "smash:H12").to_json());
  }

  TEST_CASE("field order override") {
    auto path = (std::filesystem::temp_directory_path() / "hopflink-test-dz3.json").string();
    save_file(dual_group_algebra(cyclic_table(3), cyclic_names(3), 1), path);
    CHECK_THROWS_AS(run_command("coradical", path), NonSplitField);
    CommandOptions opts;
    opts.field_order = 3;
    auto r = run_command("coradical", path, opts);
    CHECK(r.summary["coradical_dim"] == 3);
  }

  TEST_CASE("bad specs") {
    CHECK_THROWS_AS(run_command("check", "nonsense:1"), ParseError);
    CHECK_THROWS_AS(run_command("check", "tensor(sweedler)"), ParseError);
    CHECK_THROWS_AS(run_command("check", "taft:3:zetax"), ParseError);
    CHECK_THROWS_AS(run_command("smash", "sweedler"), ParseError);
    CHECK_THROWS_AS(run_command("bogus", "sweedler"), ParseError);
  }

  TEST_CASE("corpus regeneration round-trips") {
    auto dir = (std::filesystem::temp_directory_path() / "hopflink-test-corpus").string();
    CommandOptions opts;
    opts.corpus_dir = dir;
    auto r = run_command("corpus", "", opts);
    CHECK_FALSE(r.any_failed());
    CHECK(r.summary["fixtures"] == corpus_entries().size());
  }
}

TEST_SUITE("cli") {
  TEST_CASE("shipped fixtures match the generators") {
    for (const auto& e : corpus_entries()) {
      CAPTURE(e.file);
      std::ifstream in(std::string(HOPFLINK_CORPUS_DIR) + "/" + e.file, std::ios::binary);
      REQUIRE(in);
      std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
      CHECK(text == save_string(build_algebra(e.spec)));
    }
  }
}
