// Exit-code and determinism contract of the jcoord command line tool.
// Usage: cli_tests <path-to-jcoord>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "h2c/io.hpp"

using namespace h2c;
namespace fs = std::filesystem;

namespace {

std::string g_jcoord;
fs::path g_dir;
int g_failures = 0;

int run(const std::string& args, const std::string& log = "out.log") {
  std::string cmd = g_jcoord + " " + args + " > " + (g_dir / log).string() + " 2>&1";
  int status = std::system(cmd.c_str());
  if (status < 0) return -1;
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void expect(bool cond, const std::string& what) {
  std::cout << (cond ? "ok" : "FAIL") << " - " << what << "\n";
  if (!cond) ++g_failures;
}

void expect_exit(const std::string& args, int want) {
  int got = run(args);
  expect(got == want, args + " -> exit " + std::to_string(got) + " (want " +
                          std::to_string(want) + ")");
}

bool log_contains(const std::string& needle) {
  return slurp(g_dir / "out.log").find(needle) != std::string::npos;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cout << "usage: cli_tests <path-to-jcoord>\n";
    return 2;
  }
  g_jcoord = argv[1];
  g_dir = fs::temp_directory_path() / "jcoord_cli_tests";
  fs::remove_all(g_dir);
  fs::create_directories(g_dir);
  auto at = [&](const char* name) { return (g_dir / name).string(); };

  // make + check
  expect_exit("make h2f --field q --emit " + at("h2f.alg"), 0);
  expect_exit("check " + at("h2f.alg"), 0);
  expect(log_contains("jordan: PASS"), "check reports jordan: PASS");
  expect_exit("make m2 --field q --emit " + at("m2.alg"), 0);
  expect_exit("check " + at("m2.alg"), 1);
  expect(log_contains("commutative: FAIL"), "check reports commutative: FAIL");
  std::ofstream(g_dir / "bad.alg") << "{ not json\n";
  expect_exit("check " + at("bad.alg"), 2);
  expect_exit("check " + at("missing.alg"), 2);
  expect_exit("check " + at("h2f.alg") + " --random-checks 25 --seed 7", 0);

  // decompose
  expect_exit("make h4f --field gf13 --emit " + at("h4f.alg"), 0);
  expect_exit("decompose " + at("h4f.alg") + " --emit " + at("h4f.brk"), 0);
  expect(log_contains("dim Z: 3") && log_contains("dim N: 1"), "decompose reports dims 3/1");
  expect_exit("make spinfactor --vdim 3 --field q --emit " + at("spin3.alg"), 0);
  expect_exit("decompose " + at("spin3.alg") + " --emit " + at("spin3.brk"), 0);
  expect(log_contains("brackets trivial: YES"), "spin factor brackets are trivial");
  expect_exit("decompose " + at("h2f.alg") + " --e h", 1);
  expect(log_contains("RelationFailed: e*e=e"), "frame failure names the relation");
  expect_exit("decompose " + at("h2f.alg") + " --e nosuch", 2);

  // rebuild
  expect_exit("rebuild " + at("h4f.brk") + " --emit " + at("h4f_rebuilt.alg"), 0);
  expect_exit("check " + at("h4f_rebuilt.alg"), 0);
  expect_exit("rebuild " + at("spin3.brk"), 0);  // zero brackets over q, twist vacuous
  expect_exit("make h4f --field gf7 --emit " + at("h4f7.alg"), 0);
  expect_exit("decompose " + at("h4f7.alg") + " --emit " + at("h4f7.brk"), 0);
  expect_exit("rebuild " + at("h4f7.brk"), 1);  // 7 = 3 (mod 4)
  expect(log_contains("NoSqrtMinusOne"), "rebuild names the missing twist element");

  // roundtrip
  expect_exit("roundtrip " + at("h4f.alg"), 0);
  {
    AlgebraFile file = read_algebra_file(at("h4f.alg"));
    file.algebra.add_term(9, 9, 0, Scalar::one(file.algebra.field()));
    write_algebra_file(at("h4f_corrupt.alg"), file);
  }
  expect_exit("roundtrip " + at("h4f_corrupt.alg"), 1);
  expect(log_contains("stage jordan: FAIL"), "corrupted roundtrip names the failing stage");

  // envelope
  expect_exit("make m2plus --field q --bracket --emit " + at("m2p.brk"), 0);
  expect_exit("envelope " + at("m2p.brk") + " --emit " + at("env.alg"), 0);
  expect_exit("check " + at("env.alg"), 1);  // associative, not commutative
  expect(log_contains("associative: PASS"), "envelope output is associative");
  expect_exit("envelope " + at("spin3.brk"), 1);  // no b11 slot
  expect(log_contains("MissingBracketSlot"), "missing total bracket is reported");

  // m2table
  expect_exit("m2table --field q", 0);
  expect_exit("m2table --field gf5", 0);
  expect_exit("m2table --field gf13", 0);
  expect(log_contains("9/9"), "table reports 9/9");

  // bad CLI usage
  expect_exit("make nosuchkind --emit " + at("x.alg"), 2);
  expect_exit("make h2f --field r64 --emit " + at("x.alg"), 2);
  expect_exit("frobnicate", 2);

  // deterministic emission: identical bytes across runs, and emitted files
  // re-parse to identical objects
  expect_exit("make h2matrix --base m2 --star transpose --field gf13 --emit " + at("a1.alg"), 0);
  expect_exit("make h2matrix --base m2 --star transpose --field gf13 --emit " + at("a2.alg"), 0);
  expect(slurp(g_dir / "a1.alg") == slurp(g_dir / "a2.alg"), "make output is byte-deterministic");
  {
    AlgebraFile file = read_algebra_file(at("a1.alg"));
    write_algebra_file(at("a1_rewrite.alg"), file);
    expect(slurp(g_dir / "a1.alg") == slurp(g_dir / "a1_rewrite.alg"),
           "read/write round-trip is byte-identical");
    expect(file.algebra.dim() == 10, "h2matrix over m2/transpose has dim 10");
  }
  expect_exit("decompose " + at("a1.alg") + " --emit " + at("a1.brk"), 0);
  expect_exit("roundtrip " + at("a1.alg"), 0);
  expect_exit("make h2matrix --base m2 --star symplectic --field gf13 --emit " + at("symp.alg"), 0);
  expect_exit("roundtrip " + at("symp.alg"), 0);
  expect_exit("make h2matrix --base ff --star id --field gf5 --emit " + at("ffid.alg"), 0);
  expect_exit("roundtrip " + at("ffid.alg"), 0);  // direct sum of two H2(F)

  std::cout << (g_failures == 0 ? "cli contract: PASS" : "cli contract: FAIL") << "\n";
  return g_failures == 0 ? 0 : 1;
}
