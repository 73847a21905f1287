// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <thread>

#include <treecount/record.hpp>
#include <treecount/treecount.hpp>
#include <treecount/verify.hpp>

#include "figures.hpp"

namespace {

using namespace treecount;

struct Criterion {
  int id;
  std::string title;
  std::function<bool(std::string&)> body;
};

unsigned threads() { return std::max(1u, std::thread::hardware_concurrency()); }

bool all_of(const std::vector<CheckResult>& rs, std::string& note) {
  for (const auto& r : rs)
    if (!r.pass) {
      note = r.name + ": expected " + r.expected + ", got " + r.actual;
      return false;
    }
  return true;
}

// (n+1)^(n-1) for n = 1..8, and the five shape terms on three vertices.
bool postnikov(std::string& note) {
  if (shape_contributions(3) != std::vector<Rational>{3, 3, 4, 3, 3}) {
    note = "per-shape contributions at n=3 differ from {3,3,4,3,3}";
    return false;
  }
  for (int n = 1; n <= 8; ++n)
    if (!all_of(verify_postnikov(n, threads()), note)) return false;
  return true;
}

bool expanded(std::string& note) {
  for (int n = 1; n <= 8; ++n)
    if (!all_of(verify_expanded(n, 5), note)) return false;
  return true;
}

bool dn_count(std::string& note) {
  for (int n = 0; n <= 6; ++n)
    if (!all_of(verify_dn_count(n), note)) return false;
  return true;
}

// Injectivity, image and round trip of the full map; both intermediate stages
// are checked on every member. The image is compared against an independent
// enumeration of bicolored forests.
bool bijection(std::string& note) {
  for (int n = 0; n <= 5; ++n) {
    if (!all_of(verify_bijection(n, threads()), note)) return false;
    std::set<std::string> images, forests;
    for_each_in_Dn(n, [&](const ColoredBinary& d) { images.insert(dump_line(to_record(full_map(d)))); });
    for_each_forest(n, [&](const Forest& s) {
      for_each_bicoloring(s, [&](const ColoredForest& f) { forests.insert(dump_line(to_record(f))); });
    });
    if (images != forests) {
      note = "image differs from the bicolored forests at n=" + std::to_string(n);
      return false;
    }
  }
  return true;
}

bool figures(std::string& note) {
  using namespace treecount::testing;
  const std::string flip_got = dump_line(to_record(big_flip(figure_d())));
  const std::string flip_want = dump_line(to_record(figure_flipped()));
  if (flip_got != flip_want) {
    note = "big_flip: " + flip_got + " vs " + flip_want;
    return false;
  }
  const std::string phi_got = dump_line(to_record(phi(figure_flipped())));
  const std::string phi_want = dump_line(to_record(figure_phi()));
  if (phi_got != phi_want) {
    note = "phi: " + phi_got + " vs " + phi_want;
    return false;
  }
  return true;
}

bool polynomials(std::string& note) {
  auto same = [&](const PolyT& a, const PolyT& b, const std::string& what) {
    if (a == b) return true;
    note = what + ": " + a.to_string() + " vs " + b.to_string();
    return false;
  };
  for (int n = 0; n <= 6; ++n) {
    auto tag = " n=" + std::to_string(n);
    if (!same(poly_closed(Family::binary, n), poly_brute(Family::binary, n), "binary" + tag)) return false;
    if (!same(poly_closed(Family::forest, n), poly_brute(Family::forest, n), "forest" + tag)) return false;
    if (!same(poly_closed(Family::plane_forest, n), poly_brute(Family::plane_forest, n), "plane_forest" + tag))
      return false;
    if (!same(poly_closed(Family::rooted_tree, n), poly_brute(Family::rooted_tree, n), "rooted_tree" + tag))
      return false;
    if (!same(poly_closed(Family::plane_tree, n), poly_brute(Family::plane_tree, n), "plane_tree" + tag))
      return false;
  }
  for (int n = 0; n <= 5; ++n)
    if (!same(poly_closed(Family::kary, n, 3), poly_brute(Family::kary, n, 3), "ternary n=" + std::to_string(n)))
      return false;
  for (int k = 2; k <= 4; ++k)
    for (int n = 0; n <= 8; ++n)
      if (!same(poly_recurrence(n, k), poly_closed(PolyFamily::kary, n, k),
                "recurrence k=" + std::to_string(k) + " n=" + std::to_string(n)))
        return false;
  return true;
}

bool specializations(std::string& note) {
  for (int n = 1; n <= 10; ++n)
    for (int k = 2; k <= 4; ++k)
      if (!all_of(special_values(n, k), note)) return false;
  return true;
}

bool series(std::string& note) {
  auto ok = [&](const SeriesCheck& c, const std::string& what) {
    if (c.pass) return true;
    note = what + " fails at x^" + std::to_string(*c.first_failure);
    return false;
  };
  for (int k = 2; k <= 4; ++k)
    if (!ok(check_ode(PolyFamily::kary, 10, k), "ode k=" + std::to_string(k))) return false;
  if (!ok(check_ode(PolyFamily::forest, 10), "ode forest")) return false;
  if (!ok(check_ode(PolyFamily::plane_forest, 10), "ode plane_forest")) return false;
  const std::vector<std::pair<PolyFamily, int>> fams{{PolyFamily::kary, 2},   {PolyFamily::kary, 3},
                                                     {PolyFamily::kary, 4},   {PolyFamily::forest, 2},
                                                     {PolyFamily::plane_forest, 2}};
  for (auto [f, k] : fams)
    for (int t0 = -3; t0 <= 5; ++t0) {
      if (functional_exponent(f, t0, k) == 0) continue;
      if (!ok(check_functional(f, 8, t0, k), "functional t=" + std::to_string(t0))) return false;
    }
  SeriesQ p = specialize(build_series(PolyFamily::plane_forest, 8), Rational(1));
  if (p != SeriesQ::constant(8, 1) + (p * p).shift()) {
    note = "P = 1 + x P^2 fails";
    return false;
  }
  return true;
}

struct Run {
  int code;
  std::string out;
};

Run run_cli(const std::string& args, const std::string& input = "") {
  std::string cmd = "printf '%s' '" + input + "' | " TREECOUNT_CLI " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

template <class S>
bool roundtrips(const std::string& line) {
  Json j = Json::parse(line);
  if (j.contains("color")) return dump_line(to_record(colored_from_record<S>(j))) == line;
  return dump_line(to_record(from_record<S>(j))) == line;
}

bool cli_contract(std::string& note) {
  struct EnumCase {
    std::string args;
    std::function<bool(const std::string&)> check;
  };
  std::vector<EnumCase> cases;
  for (int n = 1; n <= 5; ++n) {
    auto N = " --n " + std::to_string(n);
    cases.push_back({"--family forest" + N, roundtrips<Forest>});
    cases.push_back({"--family rooted_tree" + N, roundtrips<LabeledTree>});
    cases.push_back({"--family plane_forest" + N, roundtrips<PlaneForest>});
    cases.push_back({"--family plane_tree" + N, roundtrips<PlaneTree>});
    cases.push_back({"--family binary" + N, roundtrips<SlottedTree>});
    cases.push_back({"--family kary --k 3" + N, roundtrips<SlottedTree>});
    cases.push_back({"--family binary --constraint Dn" + N, roundtrips<SlottedTree>});
    cases.push_back({"--family binary --constraint En" + N, roundtrips<SlottedTree>});
    if (n <= 4) {
      cases.push_back({"--family plane_tree --constraint Gn" + N, roundtrips<PlaneTree>});
      cases.push_back({"--family forest --constraint all" + N, roundtrips<Forest>});
    }
  }
  for (const auto& c : cases) {
    Run first = run_cli("enum " + c.args);
    if (first.code != 0) {
      note = "enum " + c.args + " exited " + std::to_string(first.code);
      return false;
    }
    std::istringstream in(first.out);
    for (std::string line; std::getline(in, line);)
      if (!c.check(line)) {
        note = "roundtrip failed: " + line;
        return false;
      }
    if (run_cli("enum " + c.args).out != first.out || run_cli("enum --parallel " + c.args).out != first.out) {
      note = "nondeterministic output for enum " + c.args;
      return false;
    }
  }
  const std::vector<std::pair<std::string, int>> codes{
      {"count --family forest --n 4", 0},
      {"verify --check postnikov --n 4", 0},
      {"count --family hedge --n 3", 2},
      {"count --family forest", 2},
      {"verify --check functional --family forest --t 1", 2},
      {"enum --family forest --n 9", 2},
  };
  for (const auto& [args, want] : codes) {
    int got = run_cli(args).code;
    if (got != want) {
      note = args + " exited " + std::to_string(got) + ", expected " + std::to_string(want);
      return false;
    }
  }
  if (run_cli("map --name gamma", "{]").code != 2 ||
      run_cli("map --name gamma", R"({"family":"rooted_tree","n":2,"parent":[0,1]})").code != 1) {
    note = "map exit codes";
    return false;
  }
  return true;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "sum over shapes of n!/2^n prod(1+1/h) = (n+1)^(n-1), n<=8", postnikov},
      {2, "expanded identity and subset sums", expanded},
      {3, "|Dn| = sum 2^pv = 2^n (n+1)^(n-1), n<=6", dn_count},
      {4, "Dn -> En -> Gn -> bicolored forests, n<=5", bijection},
      {5, "worked examples for big_flip and phi", figures},
      {6, "polynomials: closed = brute, recurrence = closed", polynomials},
      {7, "specializations at t=1 and t=2, n<=10", specializations},
      {8, "differential and functional equations", series},
      {9, "CLI roundtrip, exit codes, determinism", cli_contract},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    std::string note;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.body(note);
    } catch (const std::exception& e) {
      note = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s [%d] %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", c.id, c.title.c_str(), secs,
                note.empty() ? "" : ": ", note.c_str());
    failed += !ok;
  }
  std::fflush(stdout);
  return failed == 0 ? 0 : 1;
}
