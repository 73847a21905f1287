// treecount: counting, enumeration, proper-vertex polynomials, bijections and
// identity checks for labeled trees and forests.
//
// Exit codes: 0 success, 1 verification or domain failure, 2 usage or format
// error.

#include <algorithm>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include <treecount/record.hpp>
#include <treecount/treecount.hpp>
#include <treecount/verify.hpp>

namespace tc = treecount;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

// Raised for bad parameter combinations detected after parsing.
struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

unsigned thread_count(bool parallel) {
  return parallel ? std::max(1u, std::thread::hardware_concurrency()) : 1u;
}

int run_count(const std::string& family, int n, int k, const std::optional<std::string>& constraint) {
  tc::Family f = tc::parse_family(family);
  if (constraint)
    std::cout << tc::count_colored(f, n, tc::parse_constraint(*constraint), k) << "\n";
  else
    std::cout << tc::count(f, n, k) << "\n";
  return kOk;
}

int run_poly(const std::string& family, int n, std::optional<int> k, const std::string& method) {
  tc::Family f = tc::parse_family(family);
  if (n < 0) throw usage_error("n must be nonnegative");
  const bool slotted = f == tc::Family::kary || f == tc::Family::binary;
  int arity = f == tc::Family::binary ? 2 : k.value_or(2);
  tc::PolyRecord rec{tc::family_name(f), n, slotted ? std::optional<int>(arity) : std::nullopt, method, {}};
  if (method == "closed") {
    rec.poly = tc::poly_closed(f, n, arity);
  } else if (method == "brute") {
    rec.poly = tc::poly_brute(f, n, arity);
  } else if (method == "recurrence") {
    if (!slotted) throw usage_error("the recurrence method covers k-ary (and binary) trees only");
    rec.poly = tc::poly_recurrence(n, arity);
  } else {
    throw usage_error("unknown method " + method);
  }
  std::cout << tc::to_json(rec).dump() << "\n";
  return kOk;
}

struct VerifyParams {
  std::string check;
  int n = 3;
  int k = 2;
  std::string family = "kary";
  int order = 10;
  std::optional<int> t;
  bool json = false;
  bool parallel = false;
};

int run_verify(const VerifyParams& p) {
  std::vector<tc::CheckResult> results;
  tc::Json params{{"check", p.check}};
  auto series_family = [&] {
    tc::PolyFamily f = tc::poly_family(tc::parse_family(p.family));
    tc::equation_shape(f, p.k);  // rejects families without an equation
    return f;
  };
  if (p.check == "postnikov" || p.check == "expanded" || p.check == "bijection" || p.check == "special") {
    if (p.n < 1) throw usage_error("--n must be at least 1");
    params["n"] = p.n;
  }
  if (p.check == "postnikov") {
    results = tc::verify_postnikov(p.n, thread_count(p.parallel));
  } else if (p.check == "expanded") {
    results = tc::verify_expanded(p.n);
  } else if (p.check == "bijection") {
    results = tc::verify_bijection(p.n, thread_count(p.parallel));
  } else if (p.check == "special") {
    params["k"] = p.k;
    results = tc::special_values(p.n, p.k);
  } else if (p.check == "ode") {
    if (p.order < 2) throw usage_error("--order must be at least 2");
    auto f = series_family();
    params["family"] = p.family;
    params["order"] = p.order;
    if (f == tc::PolyFamily::kary) params["k"] = p.k;
    results = tc::verify_ode(f, p.order, p.k);
  } else if (p.check == "functional") {
    if (!p.t) throw usage_error("--t is required for the functional check");
    if (p.order < 1) throw usage_error("--order must be at least 1");
    auto f = series_family();
    params["family"] = p.family;
    params["order"] = p.order;
    params["t"] = *p.t;
    if (f == tc::PolyFamily::kary) params["k"] = p.k;
    results = tc::verify_functional(f, p.order, *p.t, p.k);
  } else {
    throw usage_error("unknown check " + p.check);
  }

  const bool ok = tc::all_pass(results);
  if (p.json) {
    tc::Json rs = tc::Json::array();
    for (const auto& r : results)
      rs.push_back({{"name", r.name}, {"expected", r.expected}, {"actual", r.actual}, {"pass", r.pass}});
    params["results"] = rs;
    params["pass"] = ok;
    std::cout << params.dump() << "\n";
  } else {
    for (const auto& r : results)
      std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << ": " << r.expected << " = " << r.actual << "\n";
    std::cout << (ok ? "verified" : "verification failed") << "\n";
  }
  return ok ? kOk : kFailed;
}

struct EnumParams {
  std::string family;
  int n = 0;
  int k = 2;
  std::optional<std::string> constraint;
  bool include_empty = false;
  bool parallel = false;
};

// Serializes every generated structure, one record per line. In parallel mode
// workers take every `parts`-th structure and the lines are interleaved back
// into generation order.
int run_enum(const EnumParams& p) {
  tc::Family f = tc::parse_family(p.family);
  if (p.n < 0) throw usage_error("n must be nonnegative");
  auto emit_all = [&](auto&& sink) {
    auto wrap = [&](const auto& s) {
      if (s.size() == 0 && !p.include_empty) return;
      sink(s);
    };
    if (p.constraint)
      tc::for_each_colored(f, p.n, p.k, tc::parse_constraint(*p.constraint), wrap);
    else
      tc::for_each_labeled(f, p.n, p.k, wrap);
  };
  const unsigned parts = thread_count(p.parallel);
  if (parts == 1) {
    emit_all([](const auto& s) { std::cout << tc::dump_line(tc::to_record(s)) << "\n"; });
    return kOk;
  }
  std::vector<std::vector<std::string>> lines(parts);
  std::vector<std::thread> workers;
  for (unsigned w = 0; w < parts; ++w)
    workers.emplace_back([&, w] {
      std::uint64_t index = 0;
      emit_all([&](const auto& s) {
        if (index++ % parts == w) lines[w].push_back(tc::dump_line(tc::to_record(s)));
      });
    });
  for (auto& t : workers) t.join();
  for (std::size_t i = 0;; ++i) {
    bool any = false;
    for (unsigned w = 0; w < parts; ++w)
      if (i < lines[w].size()) {
        std::cout << lines[w][i] << "\n";
        any = true;
      }
    if (!any) break;
  }
  return kOk;
}

struct MapParams {
  std::string name;
  std::string direction = "forward";
  std::optional<int> vertex;
};

tc::Json read_stdin_json() {
  std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
  try {
    return tc::Json::parse(text);
  } catch (const tc::Json::parse_error& e) {
    throw tc::record_error(std::string("malformed JSON: ") + e.what());
  }
}

template <class S, class Map>
tc::Json apply(const tc::Json& in, Map&& map) {
  if (tc::record_is_colored(in)) return tc::to_record(map(tc::colored_from_record<S>(in)));
  return tc::to_record(map(tc::from_record<S>(in)));
}

int run_map(const MapParams& p) {
  const bool forward = p.direction == "forward";
  if (!forward && p.direction != "inverse") throw usage_error("--direction is forward or inverse");
  tc::Json in = read_stdin_json();
  tc::Json out;
  auto colored_only = [&] {
    if (!tc::record_is_colored(in)) throw tc::record_error("map " + p.name + " needs a colored record");
  };
  if (p.name == "gamma") {
    out = forward ? apply<tc::LabeledTree>(in, [](const auto& t) { return tc::gamma(t); })
                  : apply<tc::Forest>(in, [](const auto& f) { return tc::gamma_inv(f); });
  } else if (p.name == "gamma_bar") {
    out = forward ? apply<tc::PlaneTree>(in, [](const auto& t) { return tc::gamma_bar(t); })
                  : apply<tc::PlaneForest>(in, [](const auto& f) { return tc::gamma_bar_inv(f); });
  } else if (p.name == "phi") {
    out = forward ? apply<tc::SlottedTree>(in, [](const auto& b) { return tc::phi(b); })
                  : apply<tc::PlaneTree>(in, [](const auto& q) { return tc::phi_inv(q); });
  } else if (p.name == "flip_at") {
    if (!p.vertex) throw usage_error("flip_at needs --vertex");
    colored_only();
    out = tc::to_record(tc::flip_at(tc::colored_from_record<tc::SlottedTree>(in), *p.vertex));
  } else if (p.name == "big_flip") {
    colored_only();
    auto b = tc::colored_from_record<tc::SlottedTree>(in);
    out = tc::to_record(forward ? tc::big_flip(b) : tc::big_flip_inv(b));
  } else if (p.name == "full") {
    colored_only();
    out = forward ? tc::to_record(tc::full_map(tc::colored_from_record<tc::SlottedTree>(in)))
                  : tc::to_record(tc::full_map_inv(tc::colored_from_record<tc::Forest>(in)));
  } else {
    throw usage_error("unknown map " + p.name);
  }
  std::cout << out.dump() << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact enumeration, bijections and identity checks for labeled trees"};
  app.require_subcommand(1);

  std::string family;
  int n = 0;
  std::optional<int> k;
  std::optional<std::string> constraint;

  auto* count = app.add_subcommand("count", "Closed-form size of a family");
  count->add_option("--family", family, "forest, rooted_tree, plane_tree, plane_forest, binary, kary")->required();
  count->add_option("--n", n, "Number of vertices")->required()->check(CLI::NonNegativeNumber);
  count->add_option("--k", k, "Arity for kary")->check(CLI::Range(2, 64));
  count->add_option("--constraint", constraint, "Colored sub-family: all, Dn, En, Gn, Qn");

  std::string method = "closed";
  auto* poly = app.add_subcommand("poly", "Proper-vertex polynomial as a JSON record");
  poly->add_option("--family", family)->required();
  poly->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
  poly->add_option("--k", k)->check(CLI::Range(2, 64));
  poly->add_option("--method", method, "closed, brute or recurrence")
      ->check(CLI::IsMember({"closed", "brute", "recurrence"}));

  VerifyParams vp;
  auto* verify = app.add_subcommand("verify", "Run an identity or bijection check");
  verify->add_option("--check", vp.check)
      ->required()
      ->check(CLI::IsMember({"postnikov", "expanded", "ode", "functional", "bijection", "special"}));
  verify->add_option("--n", vp.n);
  verify->add_option("--k", vp.k)->check(CLI::Range(2, 64));
  verify->add_option("--family", vp.family, "Series family: kary, forest, plane_forest");
  verify->add_option("--order", vp.order, "Truncation order for series checks");
  verify->add_option("--t", vp.t, "Integer value of t for the functional check");
  verify->add_flag("--json", vp.json, "Machine-readable summary");
  verify->add_flag("--parallel", vp.parallel, "Split work across threads");

  EnumParams ep;
  auto* enumerate = app.add_subcommand("enum", "Enumerate a family as JSON lines");
  enumerate->add_option("--family", ep.family)->required();
  enumerate->add_option("--n", ep.n)->required()->check(CLI::NonNegativeNumber);
  enumerate->add_option("--k", ep.k)->check(CLI::Range(2, 64));
  enumerate->add_option("--constraint", ep.constraint, "all, Dn, En, Gn, Qn");
  enumerate->add_flag("--include-empty", ep.include_empty, "Emit the record of the empty structure");
  enumerate->add_flag("--parallel", ep.parallel, "Serialize on several threads (same output)");

  MapParams mp;
  auto* map = app.add_subcommand("map", "Apply a bijection to a JSON record read from stdin");
  map->add_option("--name", mp.name)
      ->required()
      ->check(CLI::IsMember({"gamma", "gamma_bar", "flip_at", "big_flip", "phi", "full"}));
  map->add_option("--direction", mp.direction)->check(CLI::IsMember({"forward", "inverse"}));
  map->add_option("--vertex", mp.vertex, "Vertex for flip_at");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*count) return run_count(family, n, k.value_or(2), constraint);
    if (*poly) return run_poly(family, n, k, method);
    if (*verify) return run_verify(vp);
    if (*enumerate) return run_enum(ep);
    if (*map) return run_map(mp);
  } catch (const tc::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kFailed;
  } catch (const tc::ceiling_exceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    // invalid_argument, record_error, invalid_structure, degenerate_exponent,
    // usage_error: all caller mistakes.
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
