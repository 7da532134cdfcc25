#include "brb/catalog.hpp"
#include "brb/cli.hpp"
#include "brb/text_format.hpp"

#include <doctest.h>

#include <filesystem>
#include <sstream>

using namespace brb;

namespace
{
struct Outcome
{
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args)
{
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(BRB_DATA_DIR) + "/" + name; }
} // namespace

TEST_SUITE("cli")
{
  TEST_CASE("golden reports")
  {
    struct Golden
    {
      std::vector<std::string> args;
      std::string file;
      int code;
    };
    const std::vector<Golden> cases{
        {{"verify-table", "h3"}, "verify_table_h3.txt", exit_ok},
        {{"verify-table"}, "verify_table_all.txt", exit_check_failed},
        {{"verify-table", "h3n", "--n", "3", "--a", "1,2,3"}, "verify_table_h3n3.txt", exit_ok},
        {{"dual", "--entry", "e2"}, "dual_e2.txt", exit_ok},
        {{"classify", "--alg", data("e2.alg"), "--r", data("e2.rmat")}, "classify_e2.txt", exit_ok},
        {{"jacobi", "--alg", data("bad.alg")}, "jacobi_bad.txt", exit_check_failed},
        {{"schouten", "--alg", data("h3.alg"), "--r", data("h3.rmat")}, "schouten_h3.txt", exit_ok},
        {{"cobracket", "--entry", "galilei", "--x", "e3"}, "cobracket_galilei_e3.txt", exit_ok},
        {{"pair", "--alg", data("h3.alg"), "--r", data("h3.rmat"), "--rstar", data("h3.rstar.rmat")},
         "pair_h3.txt", exit_ok},
        {{"props", "--entry", "h3", "--ideal", "1"}, "props_h3.txt", exit_ok},
        {{"recognize-j3", "--entry", "e2"}, "recognize_e2.txt", exit_ok},
        {{"invariants", "--entry", "galilei"}, "invariants_galilei.txt", exit_ok},
    };
    for (const auto& g : cases) {
      CAPTURE(g.file);
      Outcome o = invoke(g.args);
      CHECK(o.code == g.code);
      CHECK(o.out == read_file(std::string(BRB_GOLDEN_DIR) + "/" + g.file));
      // Identical input, identical bytes.
      CHECK(invoke(g.args).out == o.out);
    }
  }

  TEST_CASE("classify prints the verdict first")
  {
    Outcome o = invoke({"classify", "--alg", data("e2.alg"), "--r", data("e2.rmat")});
    CHECK(o.out.rfind("triangular\n", 0) == 0);
  }

  TEST_CASE("usage and parse errors exit 2")
  {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {},
             {"nonsense"},
             {"dual"},
             {"dual", "--entry", "nope"},
             {"jacobi", "--alg", data("missing.alg")},
             {"cobracket", "--entry", "h3", "--x", "e9"},
             {"verify-table", "h3n", "--n", "2", "--a", "1"},
             {"verify-table", "h3n", "--a", "1,0"},
             {"props", "--entry", "h3", "--ideal", "4"},
             {"classify", "--alg", data("e2.alg"), "--r", data("bad.alg")},
             {"classify", "--alg", data("h3.alg"), "--r", data("p2super.rmat"), "--bogus"},
         }) {
      CAPTURE(args.size());
      Outcome o = invoke(args);
      CHECK(o.code == exit_usage);
      CHECK_FALSE(o.err.empty());
    }
  }

  TEST_CASE("mathematical failures exit 1")
  {
    CHECK(invoke({"recognize-j3", "--alg", data("h3.alg")}).code == exit_check_failed);
    CHECK(invoke({"pair", "--entry", "p2super"}).code == exit_check_failed);
    CHECK(invoke({"verify-table", "p2super"}).code == exit_check_failed);
    CHECK(invoke({"props", "--entry", "h3", "--ideal", "1", "--complement", "1,2"}).code == exit_check_failed);
  }

  TEST_CASE("help exits 0")
  {
    Outcome o = invoke({"--help"});
    CHECK(o.code == exit_ok);
    CHECK(o.out.find("verify-table") != std::string::npos);
  }

  TEST_CASE("export then re-import reproduces the entry")
  {
    const auto dir = std::filesystem::temp_directory_path() / "brb_cli_export";
    std::filesystem::remove_all(dir);
    for (const auto& e : default_catalog()) {
      std::vector<std::string> args{"export", e.name, "--dir", dir.string()};
      if (e.name == "h3n") {
        std::string a;
        for (std::size_t i = 0; i < e.params.size(); ++i)
          a += (i ? "," : "") + e.params[i].to_string();
        args.insert(args.end(), {"--a", a});
      }
      Outcome o = invoke(args);
      CAPTURE(o.err);
      REQUIRE(o.code == exit_ok);
      const std::string base = (dir / e.name).string();
      const std::string alg = read_file(base + ".alg");
      CHECK(parse_algebra(alg) == e.algebra);
      CHECK(render_algebra(parse_algebra(alg)) == alg);
      const std::string rm = read_file(base + ".rmat");
      NamedTensor r = parse_rmatrix(rm);
      CHECK(r.tensor == e.r);
      CHECK(render_rmatrix(r.name, r.tensor) == rm);
      CHECK(parse_algebra(read_file(base + ".dual.alg")) == e.expected_dual);
      CHECK(parse_rmatrix(read_file(base + ".rstar.rmat")).tensor == e.r_star);
      if (e.witness)
        CHECK(parse_matrix(read_file(base + ".witness")) == e.witness->matrix());
      // Files feed straight back into the CLI.
      CHECK(invoke({"jacobi", "--alg", base + ".alg"}).code == exit_ok);
    }
    std::filesystem::remove_all(dir);
  }
}
