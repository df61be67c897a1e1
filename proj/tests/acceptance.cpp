// Acceptance run: one pass/fail line per criterion. The first argument is the
// path of the command-line tool, used for the determinism criterion.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "tuttelab/verify.hpp"

using namespace tuttelab;

namespace {

struct Criterion {
  int id;
  const char* suite;
  const char* what;
};

// Output and exit status of a shell command.
std::pair<std::string, int> run(const std::string& cmd) {
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {"", -1};
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  return {out, pclose(p)};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {1, "map-counts", "map counts 1, 2, 9, 54, 378, 2916, 24057: generator, formula, oracle"},
      {2, "potts", "deletion-contraction = subset expansion = colouring interpolation, <= 4 edges"},
      {3, "series", "symbolic generating functions: iteration = brute force"},
      {4, "bijections", "bijection round trips and counting identities"},
      {5, "closed-forms", "closed formulas = brute force"},
      {6, "kernel", "kernel-method extractions = equation iteration"},
      {7, "algebraic", "algebraic theorems"},
      {8, "de", "differential systems and the triangulation ODE"},
      {9, "ising", "Ising maps = bipartite maps to t^4"},
  };
  bool all = true;
  for (const auto& c : criteria) {
    CheckReport r = run_suite(c.suite);
    long passed = 0;
    for (const auto& k : r.cases) passed += k.pass;
    const bool ok = r.pass();
    all = all && ok;
    std::cout << "criterion " << c.id << ": " << (ok ? "PASS" : "FAIL") << "  " << c.what << " (" << passed << '/'
              << r.cases.size() << ")\n";
    if (const CheckCase* f = r.first_failure())
      std::cout << "  first failure: " << f->name << ": expected " << f->expected << ", got " << f->got << '\n';
  }

  bool det = false;
  std::string note = "no tool path given";
  if (argc > 1) {
    const std::string cmd = std::string("\"") + argv[1] + "\" verify all --json";
    auto [a, ra] = run(cmd);
    auto [b, rb] = run(cmd);
    det = ra == 0 && rb == 0 && !a.empty() && a == b;
    note = std::to_string(a.size()) + " bytes, exit " + std::to_string(ra) + "/" + std::to_string(rb);
  }
  all = all && det;
  std::cout << "criterion 10: " << (det ? "PASS" : "FAIL") << "  two runs of verify all are byte-identical (" << note
            << ")\n";
  return all ? 0 : 1;
}
