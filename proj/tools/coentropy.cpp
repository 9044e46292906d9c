#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

#if __has_include(<CLI/CLI.hpp>)
#include <CLI/CLI.hpp>
#else
#include <CLI11.hpp>
#endif
#include <nlohmann/json.hpp>

#include "coentropy/canon.hpp"
#include "coentropy/entropy.hpp"
#include "coentropy/graph.hpp"
#include "coentropy/graph6.hpp"
#include "coentropy/known_pairs.hpp"
#include "coentropy/properties.hpp"
#include "coentropy/quantum.hpp"
#include "coentropy/search.hpp"
#include "coentropy/spectral.hpp"
#include "coentropy/spectrum.hpp"

using namespace coentropy;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GraphInput {
  std::string graph6;
  std::string edges;
  int n = 0;

  void attach(CLI::App* app) {
    app->add_option("--graph6", graph6, "graph in graph6 format");
    app->add_option("--edges", edges, "edge list, 'n; {u,v} ...' or '{{u, v}, ...}' (1-based)");
    app->add_option("--n", n, "vertex count for --edges");
  }

  Graph load() const {
    if (graph6.empty() == edges.empty()) throw UsageError("give exactly one of --graph6 or --edges");
    try {
      if (!graph6.empty()) return graph6_decode(graph6);
      return parse_edge_list(edges, n > 0 ? std::optional<int>(n) : std::nullopt);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }
};

unsigned default_workers() {
  if (const char* env = std::getenv("COENTROPY_WORKERS")) {
    int w = std::atoi(env);
    if (w >= 1) return static_cast<unsigned>(w);
  }
  return 1;
}

json fingerprint_json(const EntropyFingerprint& f) {
  json j;
  j["kind"] = f.is_exact() ? "exact" : "numeric";
  if (f.is_exact()) {
    json m = json::object();
    for (const auto& [p, c] : f.exact) m[std::to_string(p)] = c.str();
    j["exact"] = m;
    j["closed_form"] = f.closed_form();
  }
  j["digits"] = f.precision_digits;
  j["numeric"] = f.numeric_text();
  return j;
}

std::string matrix_text(const ScaledSymMatrix& m) {
  std::ostringstream out;
  for (int r = 0; r < m.dim(); ++r) {
    for (int c = 0; c < m.dim(); ++c) out << (c ? " " : "") << std::setw(5) << m.at(r, c).str();
    out << '\n';
  }
  return out.str();
}

json matrix_json(const ScaledSymMatrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.dim(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.dim(); ++c) row.push_back(m.at(r, c).str());
    rows.push_back(row);
  }
  return rows;
}

void print_property(const PropertyResult& r, json* out) {
  if (out) {
    out->push_back({{"name", r.name}, {"checked", r.checked}, {"failures", r.failures},
                    {"passed", r.passed()}, {"first_failure", r.first_failure}});
    return;
  }
  std::cout << (r.passed() ? "PASS " : "FAIL ") << std::left << std::setw(32) << r.name << " checked=" << r.checked
            << " failures=" << r.failures;
  if (!r.first_failure.empty()) std::cout << " first=" << r.first_failure;
  std::cout << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coentropy: graph states, Laplacian entropy and coentropic pair search"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  // entropy
  auto* entropy_cmd = app.add_subcommand("entropy", "von Neumann entropy of L(G)/2m");
  GraphInput entropy_in;
  entropy_in.attach(entropy_cmd);
  unsigned entropy_digits = kDefaultDigits;
  bool unnormalized = false;
  entropy_cmd->add_option("--digits", entropy_digits, "decimal digits")->check(CLI::Range(1u, kMaxDigits));
  entropy_cmd->add_flag("--unnormalized", unnormalized, "-sum lambda ln lambda of L(G) instead");

  // spectrum
  auto* spectrum_cmd = app.add_subcommand("spectrum", "exact Laplacian spectrum and characteristic polynomial");
  GraphInput spectrum_in;
  spectrum_in.attach(spectrum_cmd);
  std::string which = "laplacian";
  unsigned spectrum_digits = 12;
  spectrum_cmd->add_option("--matrix", which, "laplacian | signless | edge")
      ->check(CLI::IsMember({"laplacian", "signless", "edge"}));
  spectrum_cmd->add_option("--digits", spectrum_digits, "digits for irrational eigenvalues")
      ->check(CLI::Range(1u, kMaxDigits));

  // state
  auto* state_cmd = app.add_subcommand("state", "incidence vector and its partial traces");
  GraphInput state_in;
  state_in.attach(state_cmd);
  bool signless = false;
  state_cmd->add_flag("--signless", signless, "use the signless vector phi_G");
  auto* dump_cmd = state_cmd->add_subcommand("dump", "amplitudes as exact k/sqrt2 strings");
  GraphInput dump_in;
  dump_in.attach(dump_cmd);
  dump_cmd->add_flag("--signless", signless, "use the signless vector phi_G");

  // check-props
  auto* props_cmd = app.add_subcommand("check-props", "exhaustive property suites");
  int props_n = 7;
  props_cmd->add_option("--max-n", props_n, "largest vertex count")->check(CLI::Range(2, 8));

  // enumerate
  auto* enum_cmd = app.add_subcommand("enumerate", "one graph6 line per isomorphism class");
  int enum_n = 0;
  std::string enum_class = "all";
  unsigned enum_workers = default_workers();
  bool enum_count = false;
  enum_cmd->add_option("--n", enum_n, "vertex count")->required()->check(CLI::Range(1, kEnumerateMaxOrder));
  enum_cmd->add_option("--class", enum_class, "all | connected")->check(CLI::IsMember({"all", "connected"}));
  enum_cmd->add_option("--workers", enum_workers, "threads")->check(CLI::PositiveNumber);
  enum_cmd->add_flag("--count", enum_count, "print only the number of classes");

  // search
  auto* search_cmd = app.add_subcommand("search", "coentropic, non-cospectral pairs");
  SearchConfig cfg;
  cfg.workers = default_workers();
  std::string search_class = "all";
  std::string out_path, summary_path, near_path, graph6_path, cache_path;
  bool no_group = false;
  search_cmd->add_option("--n", cfg.n, "vertex count")->required()->check(CLI::Range(1, kEnumerateMaxOrder));
  search_cmd->add_option("--class", search_class, "all | connected")->check(CLI::IsMember({"all", "connected"}));
  search_cmd->add_option("--digits", cfg.numeric_digits, "fingerprint precision")->check(CLI::Range(15u, kMaxDigits));
  search_cmd->add_option("--match-digits", cfg.match_digits, "digits required for a numeric match");
  search_cmd->add_option("--out", out_path, "pairs as JSON lines");
  search_cmd->add_option("--summary", summary_path, "CSV summary");
  search_cmd->add_option("--near-miss", near_path, "near misses as JSON lines");
  search_cmd->add_option("--graph6", graph6_path, "read graphs from a graph6 file");
  search_cmd->add_flag("--no-group-by-edges", no_group, "compare across edge counts too");
  search_cmd->add_option("--cache", cache_path, "resumable screening cache");
  search_cmd->add_option("--workers", cfg.workers, "threads")->check(CLI::PositiveNumber);

  // verify-paper
  auto* verify_cmd = app.add_subcommand("verify-paper", "table, example pair and pair counts");
  bool verify_n10 = false;
  unsigned verify_workers = default_workers();
  verify_cmd->add_flag("--with-n10", verify_n10, "include the n = 10 counts (long)");
  verify_cmd->add_option("--workers", verify_workers, "threads")->check(CLI::PositiveNumber);

  // convert
  auto* convert_cmd = app.add_subcommand("convert", "edge list <-> graph6");
  GraphInput convert_in;
  convert_in.attach(convert_cmd);
  std::string convert_to;
  convert_cmd->add_option("--to", convert_to, "graph6 | edges (default: the other format)")
      ->check(CLI::IsMember({"graph6", "edges"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*entropy_cmd) {
      Graph g = entropy_in.load();
      EntropyFingerprint f =
          unnormalized ? unnormalized_entropy(g, entropy_digits) : von_neumann_entropy(g, entropy_digits);
      if (as_json) {
        json j = fingerprint_json(f);
        j["graph6"] = graph6_encode(g);
        j["n"] = g.order();
        j["m"] = g.size();
        j["unnormalized"] = unnormalized;
        std::cout << j.dump() << '\n';
      } else {
        std::cout << (unnormalized ? "S^ = " : "S = ") << f.closed_form() << '\n' << f.to_string() << '\n';
      }
      return kExitOk;
    }

    if (*spectrum_cmd) {
      Graph g = spectrum_in.load();
      IntSymMatrix m = which == "laplacian"  ? laplacian(g)
                       : which == "signless" ? signless_laplacian(g)
                                             : edge_laplacian_oriented(g, default_orientation(g));
      CharPoly p = charpoly(m);
      Spectrum s = spectrum(p);
      std::vector<std::string> values;
      for (int i = 0; i < s.size(); ++i)
        values.push_back(s.eigenvalues[i].is_integer() ? s.eigenvalues[i].integer().str()
                                                       : refine_root(s, i, spectrum_digits));
      if (as_json) {
        std::cout << json{{"matrix", which}, {"charpoly", p.to_string()}, {"integral", s.is_integral},
                          {"eigenvalues", values}}
                         .dump()
                  << '\n';
      } else {
        std::cout << "charpoly: " << p.to_string() << "\nspectrum:";
        for (const auto& v : values) std::cout << ' ' << v;
        std::cout << '\n';
      }
      return kExitOk;
    }

    if (*state_cmd) {
      const bool dump = static_cast<bool>(*dump_cmd);
      Graph g = dump ? dump_in.load() : state_in.load();
      ExactPureState s;
      try {
        s = signless ? signless_incidence_vector(g) : incidence_vector(g);
      } catch (const Error& e) {
        throw UsageError(e.what());
      }
      auto lines = dump_amplitudes(s, g);
      if (dump) {
        if (as_json) std::cout << json(lines).dump() << '\n';
        else
          for (const auto& l : lines) std::cout << l << '\n';
        return kExitOk;
      }
      ScaledSymMatrix te = partial_trace_E(s), tv = partial_trace_V(s);
      if (as_json) {
        std::cout << json{{"dim_v", s.dim_v}, {"dim_e", s.dim_e}, {"norm_squared", s.norm_squared().str()},
                          {"amplitudes", lines}, {"trace_E", matrix_json(te)}, {"trace_V", matrix_json(tv)}}
                         .dump()
                  << '\n';
      } else {
        std::cout << (signless ? "phi_G" : "psi_G") << ": " << s.dim_v << " x " << s.dim_e
                  << ", norm^2 = " << s.norm_squared().str() << '\n';
        for (const auto& l : lines) std::cout << "  " << l << '\n';
        std::cout << "tr_E:\n" << matrix_text(te) << "tr_V:\n" << matrix_text(tv);
      }
      return kExitOk;
    }

    if (*props_cmd) {
      std::vector<PropertyResult> results;
      results.push_back(check_purification(props_n));
      results.push_back(check_schmidt(props_n));
      results.push_back(check_lu_equivalence(std::min(props_n, 6)));
      results.push_back(check_signless(std::min(props_n, 5)));
      results.push_back(check_entropy_bounds(props_n));
      results.push_back(check_graph6_roundtrip(props_n));
      json j = json::array();
      bool ok = true;
      for (const auto& r : results) {
        print_property(r, as_json ? &j : nullptr);
        ok = ok && r.passed();
      }
      if (as_json) std::cout << j.dump() << '\n';
      return ok ? kExitOk : kExitFailed;
    }

    if (*enum_cmd) {
      auto forms = enumerate_forms(enum_n, enum_class == "connected", enum_workers);
      if (enum_count) {
        std::cout << forms.size() << '\n';
      } else {
        std::string buf;
        for (const auto& f : forms) {
          buf += graph6_encode(to_graph(f));
          buf += '\n';
          if (buf.size() > (1 << 16)) {
            std::cout << buf;
            buf.clear();
          }
        }
        std::cout << buf;
      }
      return kExitOk;
    }

    if (*search_cmd) {
      cfg.graph_class = parse_graph_class(search_class);
      cfg.group_by_edges = !no_group;
      if (!graph6_path.empty()) cfg.graph6_path = graph6_path;
      if (!cache_path.empty()) cfg.cache_path = cache_path;
      try {
        cfg.validate();
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      SearchReport r = find_coentropic_pairs(cfg);
      auto write = [](const std::string& path, auto&& fn) {
        if (path.empty()) return;
        std::ofstream out(path);
        if (!out) throw SourceError("cannot write " + path);
        fn(out);
      };
      write(out_path, [&](std::ostream& o) { write_pairs_jsonl(o, r); });
      write(summary_path, [&](std::ostream& o) { write_summary_csv(o, r); });
      write(near_path, [&](std::ostream& o) { write_near_misses_jsonl(o, r); });
      if (as_json) {
        json j{{"n", r.n},
               {"graph_class", to_string(r.graph_class)},
               {"group_by_edges", r.group_by_edges},
               {"graphs_scanned", r.graphs_scanned},
               {"cospectral_classes_found", r.cospectral_classes_found},
               {"coentropic_pairs", r.coentropic_pairs.size()},
               {"pairs_with_equal_edges", r.pairs_with_equal_edges},
               {"pairs_with_unequal_edges", r.pairs_with_unequal_edges},
               {"near_misses", r.near_misses.size()},
               {"wall_time", r.wall_time}};
        std::cout << j.dump() << '\n';
      } else {
        write_summary_csv(std::cout, r);
        if (out_path.empty())
          for (const auto& p : r.coentropic_pairs)
            std::cout << p.graph6_first << ' ' << p.graph6_second << " m=" << p.first.size() << ' '
                      << p.match.to_string() << '\n';
      }
      return kExitOk;
    }

    if (*verify_cmd) {
      json j = json::array();
      bool ok = true;
      auto line = [&](const std::string& name, bool pass, const std::string& detail) {
        ok = ok && pass;
        if (as_json) j.push_back({{"check", name}, {"passed", pass}, {"detail", detail}});
        else std::cout << (pass ? "PASS " : "FAIL ") << std::left << std::setw(22) << name << ' ' << detail << '\n';
      };
      for (const auto& row : verify_table())
        line("table row " + std::to_string(row.row), row.passed(),
             row.match.to_string() + " S = " + row.entropy_first.closed_form().substr(0, 60));

      auto [ga, gb] = locate_example_pair(verify_workers);
      EntropyFingerprint fa = von_neumann_entropy(ga), fb = von_neumann_entropy(gb);
      std::map<long, BigRational> expected;
      for (auto [p, c] : known::kExampleEntropy) expected[p] = BigRational(std::string(c));
      line("example pair", fa.exact == expected && fb.exact == expected,
           graph6_encode(ga) + " " + graph6_encode(gb) + " S = " + fa.closed_form());

      std::vector<std::pair<int, int>> counts(known::kPairCounts.begin(), known::kPairCounts.end());
      if (!verify_n10) counts.pop_back();
      for (auto [n, expected_pairs] : counts) {
        std::string found;
        bool any = false;
        for (auto cls : {GraphClass::all, GraphClass::connected}) {
          SearchConfig c;
          c.n = n;
          c.graph_class = cls;
          c.workers = verify_workers;
          auto r = find_coentropic_pairs(c);
          found += to_string(cls) + "=" + std::to_string(r.coentropic_pairs.size()) + " ";
          any = any || static_cast<int>(r.coentropic_pairs.size()) == expected_pairs;
        }
        line("pairs n=" + std::to_string(n), any, "expected " + std::to_string(expected_pairs) + ", found " + found);
      }
      if (as_json) std::cout << j.dump() << '\n';
      return ok ? kExitOk : kExitFailed;
    }

    if (*convert_cmd) {
      Graph g = convert_in.load();
      std::string to = convert_to.empty() ? (convert_in.graph6.empty() ? "graph6" : "edges") : convert_to;
      std::string text = to == "graph6" ? graph6_encode(g) : std::to_string(g.order()) + "; " + format_edge_list(g);
      if (as_json) std::cout << json{{"n", g.order()}, {"format", to}, {"graph", text}}.dump() << '\n';
      else std::cout << text << '\n';
      return kExitOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SourceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailed;
  }
  return kExitUsage;
}
