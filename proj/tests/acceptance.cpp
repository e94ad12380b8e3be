// Acceptance suite: one PASS/FAIL line per criterion, driven through the C API.
// Usage: acceptance <scene.json>

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "beltrami/beltrami.h"

namespace {

struct Criterion {
  int total = 0;
  int failed = 0;
  std::string first_failure;
};

std::string read_file(const char* path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool render(const std::string& json, std::string& svg) {
  char* out = nullptr;
  if (bk_render_scene(json.c_str(), &out) != BK_OK) {
    std::fprintf(stderr, "render failed: %s\n", bk_last_error());
    return false;
  }
  svg = out;
  bk_string_free(out);
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::fprintf(stderr, "usage: %s <scene.json>\n", argv[0]);
    return 2;
  }

  bk_report* report = nullptr;
  if (bk_verify_run(1.0, &report) != BK_OK) {
    std::fprintf(stderr, "verify failed to run: %s\n", bk_last_error());
    return 1;
  }

  std::map<int, Criterion> criteria;
  for (size_t i = 0; i < bk_report_size(report); ++i) {
    const char* name = nullptr;
    int passed = 0;
    double measured = 0;
    double expected = 0;
    double tol = 0;
    bk_report_check(report, i, &name, &passed, &measured, &expected, &tol);
    const std::string n(name);
    const int id = std::stoi(n.substr(2, 2));
    Criterion& c = criteria[id];
    ++c.total;
    if (!passed) {
      ++c.failed;
      if (c.first_failure.empty()) c.first_failure = n;
    }
  }
  const bool verify_ok = bk_report_passed(report) != 0;
  bk_report_destroy(report);

  bool all = true;
  for (int id = 1; id <= 14; ++id) {
    const Criterion& c = criteria[id];
    const bool ok = c.total > 0 && c.failed == 0;
    all = all && ok;
    std::printf("%s AC%d  %d/%d checks%s%s\n", ok ? "PASS" : "FAIL", id,
                c.total - c.failed, c.total, ok ? "" : "; first failure: ",
                c.first_failure.c_str());
  }

  const std::string scene = read_file(argv[1]);
  std::string first;
  std::string second;
  const bool rendered = !scene.empty() && render(scene, first) && render(scene, second);
  const bool identical = rendered && first == second;
  const bool ok15 = verify_ok && identical;
  all = all && ok15;
  std::printf("%s AC15  verify %s; scene renders %s (%zu bytes)\n", ok15 ? "PASS" : "FAIL",
              verify_ok ? "passed" : "failed",
              identical ? "byte-identical" : "differ or failed", first.size());
  return all ? 0 : 1;
}
