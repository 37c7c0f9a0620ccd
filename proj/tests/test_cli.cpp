// End-to-end checks of the cdalg command line tool. The binary path comes
// from the CDALG_BIN environment variable so the same source works from any
// build directory. Failures are counted, not fatal, so one bad golden does
// not mask the rest of the report.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <nlohmann/json.hpp>

namespace {

int failures = 0;

#define CHECK(cond, msg)                                                      \
  do {                                                                        \
    if (!(cond)) {                                                            \
      std::cerr << "[FAIL] " << __FILE__ << ":" << __LINE__ << " " << (msg)   \
                << "\n";                                                      \
      ++failures;                                                             \
    }                                                                         \
  } while (0)

struct RunResult {
  int exit_code;
  std::string output;  // stdout and stderr merged
};

std::string g_bin;

RunResult run(const std::string& args) {
  std::string cmd = g_bin + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    std::cerr << "[FAIL] cannot spawn: " << cmd << "\n";
    std::exit(1);
  }
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, out};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

void expect(const std::string& args, int code, const std::string& fragment) {
  auto r = run(args);
  CHECK(r.exit_code == code, "'" + args + "' exited " +
                                 std::to_string(r.exit_code) + ", wanted " +
                                 std::to_string(code));
  CHECK(contains(r.output, fragment),
        "'" + args + "' output missing \"" + fragment + "\":\n" + r.output);
}

// one scratch directory per run; file basenames become algebra names
std::string scratch_dir() {
  static std::string dir = [] {
    std::string base = ::getenv("TMPDIR") ? ::getenv("TMPDIR") : "/tmp";
    std::string tmpl = base + "/cdalg_cli_XXXXXX";
    std::string buf(tmpl);
    if (!mkdtemp(buf.data())) {
      std::cerr << "cannot create scratch directory under " << base << "\n";
      std::exit(1);
    }
    return buf;
  }();
  return dir;
}

std::string write_temp(const std::string& name, const std::string& body) {
  std::string path = scratch_dir() + "/" + name;
  std::ofstream out(path);
  out << body;
  return path;
}

}  // namespace

int main() {
  const char* bin = ::getenv("CDALG_BIN");
  if (!bin || !*bin) {
    std::cerr << "CDALG_BIN must point at the cdalg binary\n";
    return 1;
  }
  g_bin = bin;

  // --- membership report ---------------------------------------------------
  {
    auto r = run("check b61");
    CHECK(r.exit_code == 0, "check b61 exit code");
    CHECK(contains(r.output, "algebra: b61(1)"), "b61 header");
    CHECK(contains(r.output, "dim: 6"), "b61 dim");
    // the Jacobi witness is pinned: deterministic iteration order
    CHECK(contains(r.output, "fails at (e1,e2,e5)"), "b61 lie witness");
    CHECK(contains(r.output, "binary-lie    yes"), "b61 binary-lie");
    CHECK(contains(r.output, "almost-lie    yes"), "b61 almost-lie");
    CHECK(contains(r.output, "cd            yes"), "b61 cd");
    CHECK(contains(r.output, "j-swap        yes"), "b61 j-swap");
    CHECK(contains(r.output, "malcev        no"), "b61 malcev");
  }
  expect("check malcev7", 0, "malcev        yes");
  expect("check malcev7", 0, "cd            no");
  expect("check sl2", 0, "lie           yes");
  expect("check abelian --dim 4 --field 'GF(5)'", 0, "field: GF(5)");

  // --- operator structures ---------------------------------------------------
  {
    auto r = run("ops sl2");
    CHECK(r.exit_code == 0, "ops sl2 exit code");
    CHECK(contains(r.output, "center: 0"), "sl2 center");
    CHECK(contains(r.output, "lie-center: 3"), "sl2 lie-center");
    CHECK(contains(r.output, "derivations: 3"), "sl2 derivations");
    CHECK(contains(r.output, "mult-algebra: 3"), "sl2 mult-algebra");
    CHECK(contains(r.output, "inner-derivations: 3"), "sl2 inner");
    CHECK(contains(r.output, "dim(LZ/Z) = 3, dim(R cap Der) = 3, equal"),
          "sl2 center-operator identity");
  }
  {
    auto r = run("ops b61 --alpha=-1");
    CHECK(r.exit_code == 0, "ops b61(-1) exit code");
    CHECK(contains(r.output, "algebra: b61(-1)"), "b61(-1) header");
    CHECK(contains(r.output, "center: 1"), "b61(-1) center");
    CHECK(contains(r.output, "lie-center: 1"), "b61(-1) lie-center");
    CHECK(contains(r.output, "derivations: 9"), "b61(-1) derivations");
    CHECK(contains(r.output, "mult-algebra: 8"), "b61(-1) mult-algebra");
    CHECK(contains(r.output, "inner-derivations: 3"), "b61(-1) inner");
    CHECK(contains(r.output, "r-cap-der: 0"), "b61(-1) r-cap-der");
    CHECK(contains(r.output, "dim(LZ/Z) = 0, dim(R cap Der) = 0, equal"),
          "b61(-1) center-operator identity");
  }

  // --- cohomology dimensions -----------------------------------------------
  {
    auto r = run("cohomology heisenberg3 --theory cd");
    CHECK(r.exit_code == 0, "cohomology h3 exit code");
    CHECK(contains(r.output, "cocycles (Z): 3"), "h3 Z");
    CHECK(contains(r.output, "coboundaries (B): 1"), "h3 B");
    CHECK(contains(r.output, "cohomology (H): 2"), "h3 H");
  }
  {
    auto r = run("cohomology sl2 --theory cd --coeff adjoint");
    CHECK(r.exit_code == 0, "cohomology sl2 adjoint exit code");
    CHECK(contains(r.output, "cocycles (Z): 6"), "sl2 adjoint Z");
    CHECK(contains(r.output, "coboundaries (B): 6"), "sl2 adjoint B");
    CHECK(contains(r.output, "cohomology (H): 0"), "sl2 adjoint H");
  }
  expect("cohomology r2k --theory ce", 0, "cohomology (H): 1");
  expect("cohomology r2k --theory almost-lie", 0, "cocycles (Z): 3");

  // --- identity consequences -------------------------------------------------
  {
    auto r = run("consequence --assume binary-lie,almost-lie --target cd");
    CHECK(r.exit_code == 0, "consequence exit code");
    CHECK(contains(r.output, "consequence space dim: 6"), "consequence dim");
    CHECK(contains(r.output, "derivable"), "consequence verdict");
    CHECK(contains(r.output, "certificate: [0, -1, 1, 0, 0, 0]"),
          "consequence certificate");
  }
  expect("consequence --assume almost-lie --target cd", 0,
         "not derivable at this degree");
  expect("consequence --assume lie --target malcev", 0, "derivable");

  // --- free algebra emission -------------------------------------------------
  {
    auto r = run("free --generators 2 --class 2");
    CHECK(r.exit_code == 0, "free exit code");
    CHECK(r.output == "field Q\ndim 3\n1 2 -> 1*3\n",
          "free(2,2) file body:\n" + r.output);
  }

  // --- files and central extensions ------------------------------------------
  auto r2_path = write_temp("r2.alg",
                            "field Q\n"
                            "dim 2\n"
                            "1 2 -> 1*2\n");
  auto cocycle_path = write_temp("cocycle.txt", "1 2 1\n");
  {
    auto r = run("extend " + r2_path + " --cocycle " + cocycle_path);
    CHECK(r.exit_code == 0, "extend exit code");
    CHECK(contains(r.output, "extension: r2 ext (dim 2 + 1)"), "extend header");
    CHECK(contains(r.output, "lie           yes"), "extension stays lie");
  }
  {
    // the written extension file loads back and passes the same report
    auto out_path = scratch_dir() + "/r2ext.alg";
    auto r = run("extend " + r2_path + " --cocycle " + cocycle_path +
                 " --out " + out_path);
    CHECK(r.exit_code == 0, "extend --out exit code");
    auto again = run("check " + out_path);
    CHECK(again.exit_code == 0, "round-trip exit code");
    CHECK(contains(again.output, "dim: 3"), "round-trip dim");
    CHECK(contains(again.output, "lie           yes"), "round-trip lie");
  }

  // --- machine-readable output -----------------------------------------------
  {
    auto a = run("check sl2 --json");
    auto b = run("check sl2 --json");
    CHECK(a.exit_code == 0, "check --json exit code");
    CHECK(a.output == b.output, "check --json not byte-deterministic");
    auto doc = nlohmann::json::parse(a.output);
    CHECK(doc["algebra"] == "sl2", "json algebra name");
    CHECK(doc["dim"] == 3, "json dim");
    CHECK(doc["varieties"]["lie"] == true, "json lie flag");
    CHECK(doc["varieties"]["malcev"] == true, "json malcev flag");
    CHECK(doc["witnesses"].is_null(), "json witnesses null when all hold");
  }
  {
    auto r = run("cohomology heisenberg3 --theory cd --json");
    auto doc = nlohmann::json::parse(r.output);
    CHECK(doc["dims"]["cocycles"] == 3, "json Z");
    CHECK(doc["dims"]["coboundaries"] == 1, "json B");
    CHECK(doc["dims"]["cohomology"] == 2, "json H");
  }

  // --- error paths -------------------------------------------------------------
  expect("check nosuch", 1,
         "unknown algebra 'nosuch': not a catalog name or a readable file");
  expect("cohomology b61 --theory ce", 1,
         "the classical theory needs a Lie algebra; 'b61(1)' is not");
  {
    auto r = run("");
    CHECK(r.exit_code == 2, "bare invocation exit code");
    CHECK(contains(r.output, "usage error:"), "bare invocation message");
  }
  auto gf3_path = write_temp("gf3.alg",
                             "field GF(3)\n"
                             "dim 2\n"
                             "1 2 -> 1*2\n");
  expect("check " + gf3_path, 1,
         "line 1: characteristic must differ from 2 and 3");
  auto bad_path = write_temp("badorder.alg",
                             "field Q\n"
                             "dim 2\n"
                             "2 1 -> 1*1\n");
  expect("check " + bad_path, 1, "line 3: products must be listed with i < j");

  if (failures) {
    std::cerr << failures << " CLI check(s) failed\n";
    return 1;
  }
  std::cout << "all CLI checks passed\n";
  return 0;
}
