#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "mortar/study.hpp"

using namespace mortar;
namespace fs = std::filesystem;

namespace
{

struct Outcome
{
  int code = -1;
  std::string out;
};

Outcome run_cli(const std::string &args)
{
  const std::string cmd = std::string(MORTAR_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE *pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  Outcome o;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0)
  {
    o.out.append(buf, n);
  }
  const int status = pclose(pipe);
  o.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return o;
}

std::string slurp(const fs::path &p)
{
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch_dir(const std::string &name)
{
  const fs::path d = fs::temp_directory_path() / ("mortar_cli_test_" + name);
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

}  // namespace

TEST_CASE("golden CSV header")
{
  CHECK(csv_header() ==
        "case,k_multiplier,k,mode,level,h,p,dofs_v,dofs_w,dofs_z,rel_l2_omega,rel_h1_omega,"
        "scaled_l2_mortar,scaled_l2_trace,rate_l2_omega,rate_h1_omega,rate_mortar,rate_trace,"
        "solver,residual,iterations");
}

TEST_CASE("config parsing")
{
  std::istringstream in("# study\ncase = tc1\nk_multiplier = 3   # eigenvalue\n"
                        "degrees = 1, 2\nlevels = 2\nsolver = gmres\nnear_eta = 1, 2, 4\n");
  const StudyConfig c = parse_config(in);
  CHECK(c.case_name == "tc1");
  CHECK(c.k_multiplier == 3.0);
  CHECK(c.degrees == std::vector<int>{1, 2});
  CHECK(c.levels == 2);
  CHECK(c.solver == "gmres");
  CHECK(c.quadrature.near_eta[2] == 4.0);
  CHECK(c.k() == doctest::Approx(3.0 * std::sqrt(3.0) * 3.141592653589793));
  CHECK_NOTHROW(validate_config(c));

  std::istringstream bad("case = tc1\nbogus = 1\n");
  CHECK_THROWS_WITH_AS(parse_config(bad, "s.cfg"), doctest::Contains("s.cfg:2"), ConfigError);

  StudyConfig z;
  apply_setting(z, "levels", "0");
  CHECK_THROWS_AS(validate_config(z), ConfigError);
  CHECK_THROWS_AS(apply_setting(z, "levels", "two"), ConfigError);

  StudyConfig t;
  apply_setting(t, "case", "tc2");
  CHECK(t.multiplier() == 1.0);
  CHECK_NOTHROW(validate_config(t));
  apply_setting(t, "k_multiplier", "1.5");
  CHECK_THROWS_AS(validate_config(t), ConfigError);

  StudyConfig d;
  apply_setting(d, "degrees", "1, 4");
  CHECK_THROWS_AS(validate_config(d), ConfigError);
}

TEST_CASE("atomic writes")
{
  const fs::path d = scratch_dir("atomic");
  const fs::path f = d / "out.csv";
  write_file_atomic(f.string(), "a\n");
  write_file_atomic(f.string(), "b\n");
  CHECK(slurp(f) == "b\n");
  CHECK(std::distance(fs::directory_iterator(d), fs::directory_iterator()) == 1);
  fs::remove_all(d);
}

TEST_CASE("command line")
{
  const fs::path d = scratch_dir("run");
  const fs::path cfg = d / "study.cfg";
  std::ofstream(cfg) << "case = tc1\nk_multiplier = 1.5\nfirst_level = 0\nlevels = 2\n"
                     << "output_dir = " << (d / "out").string() << "\n";

  SUBCASE("usage and config errors exit with 2")
  {
    CHECK(run_cli("verify --suite bogus").code == 2);
    CHECK(run_cli("run").code == 2);
    CHECK(run_cli("frobnicate").code == 2);
    CHECK(run_cli("run --config " + cfg.string() + " --set levels=0").code == 2);
    CHECK(run_cli("run --config " + cfg.string() + " --set nonsense").code == 2);
    CHECK(run_cli("run --config " + (d / "missing.cfg").string()).code == 2);
  }

  SUBCASE("verify reports JSON")
  {
    const Outcome o = run_cli("verify --suite jumps");
    CHECK(o.code == 0);
    CHECK(o.out.find("\"suite\": \"jumps\"") != std::string::npos);
    CHECK(o.out.find("\"pass\": true") != std::string::npos);
  }

  SUBCASE("h-version run writes a deterministic CSV")
  {
    const Outcome a = run_cli("run --config " + cfg.string() + " --export-matrices");
    REQUIRE(a.code == 0);
    const fs::path csv = d / "out" / "tc1_k1.5_h-version.csv";
    REQUIRE(fs::exists(csv));
    const std::string first = slurp(csv);
    std::istringstream lines(first);
    std::vector<std::string> rows;
    for (std::string line; std::getline(lines, line);)
    {
      rows.push_back(line);
    }
    REQUIRE(rows.size() == 3);
    CHECK(rows[0] == csv_header());
    CHECK(rows[1].rfind("tc1,1.5,", 0) == 0);
    // The first level has empty rate fields, the second has all four.
    CHECK(rows[1].find(",,,,") != std::string::npos);
    CHECK(rows[2].find(",,") == std::string::npos);
    CHECK(fs::exists(d / "out" / "matrices" / "tc1_L0_p1_V_ww.mtx"));
    CHECK(fs::exists(d / "out" / "matrices" / "tc1_L1_p1_W_zz.mtx"));

    const Outcome b = run_cli("run --config " + cfg.string() + " --threads 1");
    REQUIRE(b.code == 0);
    CHECK(slurp(csv) == first);
  }
  fs::remove_all(d);
}
