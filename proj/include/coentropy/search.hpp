#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "coentropy/canon.hpp"
#include "coentropy/entropy.hpp"
#include "coentropy/graph6.hpp"
#include "coentropy/known_pairs.hpp"
#include "coentropy/spectral.hpp"
#include "coentropy/spectrum.hpp"

namespace coentropy {

enum class GraphClass { all, connected };

inline std::string to_string(GraphClass c) { return c == GraphClass::all ? "all" : "connected"; }

inline GraphClass parse_graph_class(std::string_view s) {
  if (s == "all") return GraphClass::all;
  if (s == "connected") return GraphClass::connected;
  throw std::invalid_argument("graph class must be 'all' or 'connected'");
}

struct SearchConfig {
  int n = 8;
  GraphClass graph_class = GraphClass::all;
  unsigned numeric_digits = kDefaultDigits;
  unsigned match_digits = 50;
  bool group_by_edges = true;
  std::optional<std::string> graph6_path;  // read graphs from file instead of enumerating
  std::optional<std::string> cache_path;
  unsigned workers = 1;

  void validate() const {
    if (n < 1 || n > kEnumerateMaxOrder) throw SizeLimit("search supports 1 <= n <= 10");
    check_digits(numeric_digits);
    if (match_digits < 10 || match_digits + 5 > numeric_digits)
      throw std::invalid_argument("match digits must be in 10..numeric_digits-5");
    if (workers < 1) throw std::invalid_argument("workers must be >= 1");
  }
};

struct CoentropicPair {
  Graph first, second;
  std::string graph6_first, graph6_second;
  std::shared_ptr<const EntropyFingerprint> fingerprint_first, fingerprint_second;
  EntropyMatch match;
  bool cospectral = false;
  std::string charpoly_first, charpoly_second;
  std::string spectrum_first, spectrum_second;

  bool equal_edges() const { return first.size() == second.size(); }
};

struct NearMiss {
  std::string graph6_first, graph6_second;
  unsigned matching_digits = 0;
  std::string entropy_first, entropy_second;
};

struct SearchReport {
  int n = 0;
  GraphClass graph_class = GraphClass::all;
  bool group_by_edges = true;
  std::size_t graphs_scanned = 0;
  std::size_t cospectral_classes_found = 0;
  std::size_t candidates_checked = 0;
  std::vector<CoentropicPair> coentropic_pairs;
  std::size_t pairs_with_equal_edges = 0;
  std::size_t pairs_with_unequal_edges = 0;
  std::vector<NearMiss> near_misses;
  double wall_time = 0;
};

/// Absolute width of the double-precision screen. The Jacobi entropies are
/// within 1e-15 of the exact value for n <= 9 (checked exhaustively at n = 8),
/// so any pair agreeing to 12 or more digits lands inside it.
inline constexpr double kScreenWindow = 1e-11;

namespace detail {

inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

inline std::uint64_t hash_coefficients(std::span<const std::int64_t> c) {
  std::uint64_t h = c.size();
  for (std::int64_t x : c) h = mix64(h ^ static_cast<std::uint64_t>(x));
  return h;
}

/// Screening data for one graph.
struct ScreenRecord {
  std::uint64_t poly_hash = 0;
  double entropy = 0;
  std::uint32_t index = 0;
  std::uint16_t m = 0;
  std::uint8_t zeros = 0;
};

inline std::vector<std::int64_t> laplacian_charpoly_i64(const Adjacency& a) {
  const int n = a.n;
  std::vector<std::int64_t> lap(std::size_t(n) * n, 0), coeff(n + 1);
  for (int u = 0; u < n; ++u) {
    lap[std::size_t(u) * n + u] = a.degree(u);
    for (int v = 0; v < n; ++v)
      if (a.edge(u, v)) lap[std::size_t(u) * n + v] = -1;
  }
  if (!charpoly_i64(lap, n, coeff)) throw std::overflow_error("charpoly overflow in screening");
  return coeff;
}

inline ScreenRecord screen(const Adjacency& a, std::uint32_t index) {
  const int n = a.n;
  ScreenRecord r;
  r.index = index;
  r.m = static_cast<std::uint16_t>(a.size());
  auto coeff = laplacian_charpoly_i64(a);
  r.poly_hash = hash_coefficients(coeff);
  int zeros = 0;
  while (zeros < n && coeff[zeros] == 0) ++zeros;
  r.zeros = static_cast<std::uint8_t>(zeros);
  if (r.m == 0) return r;
  std::vector<double> lap(std::size_t(n) * n, 0.0), eig(n);
  for (int u = 0; u < n; ++u) {
    lap[std::size_t(u) * n + u] = a.degree(u);
    for (int v = 0; v < n; ++v)
      if (a.edge(u, v)) lap[std::size_t(u) * n + v] = -1.0;
  }
  jacobi_eigenvalues(lap, n, eig);
  r.entropy = entropy_double(eig, 2.0 * r.m, zeros);
  return r;
}

inline std::string charpoly_text(std::span<const std::int64_t> c) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(c[i]);
  }
  return s;
}

inline std::string hexfloat(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%a", x);
  return buf;
}

/// Graph stream for a config: internal enumeration, or a graph6 file whose
/// graphs are canonicalized, deduplicated and put in enumeration order.
inline std::vector<CanonicalForm> load_forms(const SearchConfig& cfg) {
  if (!cfg.graph6_path) return enumerate_forms(cfg.n, cfg.graph_class == GraphClass::connected, cfg.workers);
  std::ifstream in(*cfg.graph6_path);
  if (!in) throw SourceError("cannot open graph6 file " + *cfg.graph6_path);
  std::vector<CanonicalForm> forms;
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    Graph g;
    try {
      g = graph6_decode(line);
    } catch (const Error& e) {
      throw SourceError("line " + std::to_string(lineno) + ": " + e.what());
    }
    if (g.order() != cfg.n)
      throw SourceError("line " + std::to_string(lineno) + ": graph has " + std::to_string(g.order()) +
                        " vertices, expected " + std::to_string(cfg.n));
    Adjacency a = to_adjacency(g);
    if (cfg.graph_class == GraphClass::connected && !is_connected(a)) continue;
    forms.push_back(canonical_form(a));
  }
  std::sort(forms.begin(), forms.end(), [](const CanonicalForm& x, const CanonicalForm& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
  return forms;
}

/// Screens every form. With a cache path, lines "graph6 TAB charpoly TAB
/// entropy" that agree with the stream prefix are reused, and new lines are
/// appended as chunks finish, so an interrupted run resumes.
inline std::vector<ScreenRecord> screen_all(const std::vector<CanonicalForm>& forms, const SearchConfig& cfg) {
  std::vector<ScreenRecord> records(forms.size());
  std::size_t done = 0;
  std::unique_ptr<std::ofstream> cache_out;
  if (cfg.cache_path) {
    std::vector<std::string> kept;
    if (std::ifstream in(*cfg.cache_path); in) {
      std::string line;
      while (done < forms.size() && std::getline(in, line)) {
        std::istringstream fields(line);
        std::string g6, poly, ent;
        if (!std::getline(fields, g6, '\t') || !std::getline(fields, poly, '\t') || !std::getline(fields, ent))
          break;
        if (g6 != graph6_encode(to_graph(forms[done]))) break;
        std::vector<std::int64_t> c;
        std::istringstream ps(poly);
        for (std::int64_t x; ps >> x;) c.push_back(x);
        if (static_cast<int>(c.size()) != cfg.n + 1) break;
        ScreenRecord& r = records[done];
        r.index = static_cast<std::uint32_t>(done);
        r.m = static_cast<std::uint16_t>(forms[done].size());
        r.poly_hash = hash_coefficients(c);
        int zeros = 0;
        while (zeros < cfg.n && c[zeros] == 0) ++zeros;
        r.zeros = static_cast<std::uint8_t>(zeros);
        r.entropy = std::strtod(ent.c_str(), nullptr);
        kept.push_back(std::move(line));
        ++done;
      }
    }
    // Rewrite the validated prefix so stale or partial lines are dropped.
    cache_out = std::make_unique<std::ofstream>(*cfg.cache_path, std::ios::trunc);
    if (!*cache_out) throw SourceError("cannot write cache file " + *cfg.cache_path);
    for (const auto& l : kept) *cache_out << l << '\n';
    cache_out->flush();
  }

  constexpr std::size_t kChunk = 1 << 16;
  while (done < forms.size()) {
    const std::size_t end = std::min(forms.size(), done + kChunk);
    std::vector<std::string> lines(cache_out ? end - done : 0);
    parallel_for_workers(cfg.workers, [&](unsigned w) {
      for (std::size_t i = done + w; i < end; i += cfg.workers) {
        Adjacency a = to_adjacency(forms[i]);
        records[i] = screen(a, static_cast<std::uint32_t>(i));
        if (cache_out)
          lines[i - done] = graph6_encode(to_graph(forms[i])) + '\t' + charpoly_text(laplacian_charpoly_i64(a)) +
                            '\t' + hexfloat(records[i].entropy);
      }
    });
    if (cache_out) {
      for (const auto& l : lines) *cache_out << l << '\n';
      cache_out->flush();
    }
    done = end;
  }
  return records;
}

/// Splits equal-hash runs into exact charpoly classes. Returns class member
/// lists (indices ascending), ordered by smallest member.
inline std::vector<std::vector<std::uint32_t>> exact_classes(const std::vector<CanonicalForm>& forms,
                                                             const std::vector<ScreenRecord>& records) {
  std::vector<std::uint32_t> order(records.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return records[a].poly_hash != records[b].poly_hash ? records[a].poly_hash < records[b].poly_hash : a < b;
  });
  std::vector<std::vector<std::uint32_t>> classes;
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i + 1;
    while (j < order.size() && records[order[j]].poly_hash == records[order[i]].poly_hash) ++j;
    if (j - i == 1) {
      classes.push_back({order[i]});
    } else {
      std::map<std::vector<std::int64_t>, std::vector<std::uint32_t>> split;
      for (std::size_t k = i; k < j; ++k)
        split[laplacian_charpoly_i64(to_adjacency(forms[order[k]]))].push_back(order[k]);
      for (auto& [poly, members] : split) classes.push_back(std::move(members));
    }
    i = j;
  }
  std::sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return classes;
}

}  // namespace detail

/// Partition of a graph stream by exact Laplacian characteristic polynomial.
/// Classes are listed by first occurrence; members are stream indices.
inline std::vector<std::vector<std::size_t>> cospectral_classes(std::span<const Graph> graphs) {
  std::map<std::string, std::size_t> slot;
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    std::string key = std::to_string(graphs[i].order()) + "|" + charpoly(laplacian(graphs[i])).to_string();
    auto [it, fresh] = slot.emplace(key, classes.size());
    if (fresh) classes.emplace_back();
    classes[it->second].push_back(i);
  }
  return classes;
}

inline SearchReport find_coentropic_pairs(const SearchConfig& cfg) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();
  SearchReport report;
  report.n = cfg.n;
  report.graph_class = cfg.graph_class;
  report.group_by_edges = cfg.group_by_edges;

  const std::vector<CanonicalForm> forms = detail::load_forms(cfg);
  report.graphs_scanned = forms.size();
  const std::vector<detail::ScreenRecord> records = detail::screen_all(forms, cfg);
  const auto classes = detail::exact_classes(forms, records);
  for (const auto& c : classes)
    if (c.size() >= 2) ++report.cospectral_classes_found;

  // One representative per spectrum, edgeless graphs excluded (entropy undefined).
  std::vector<std::size_t> reps;
  for (std::size_t k = 0; k < classes.size(); ++k)
    if (records[classes[k].front()].m > 0) reps.push_back(k);
  auto group = [&](std::size_t k) { return cfg.group_by_edges ? records[classes[k].front()].m : 0; };
  auto entropy = [&](std::size_t k) { return records[classes[k].front()].entropy; };
  std::sort(reps.begin(), reps.end(), [&](std::size_t a, std::size_t b) {
    if (group(a) != group(b)) return group(a) < group(b);
    if (entropy(a) != entropy(b)) return entropy(a) < entropy(b);
    return classes[a].front() < classes[b].front();
  });

  std::unordered_map<std::size_t, std::shared_ptr<const EntropyFingerprint>> fp_cache;
  auto fingerprint = [&](std::size_t k) {
    auto it = fp_cache.find(k);
    if (it != fp_cache.end()) return it->second;
    Graph g = to_graph(forms[classes[k].front()]);
    auto fp = std::make_shared<const EntropyFingerprint>(von_neumann_entropy(g, cfg.numeric_digits));
    fp_cache.emplace(k, fp);
    return fp;
  };

  std::vector<std::pair<std::size_t, std::size_t>> matched;
  std::map<std::pair<std::size_t, std::size_t>, EntropyMatch> match_of;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t j = i + 1; j < reps.size(); ++j) {
      const std::size_t a = reps[i], b = reps[j];
      if (group(a) != group(b) || entropy(b) - entropy(a) > kScreenWindow) break;
      ++report.candidates_checked;
      auto fa = fingerprint(a), fb = fingerprint(b);
      EntropyMatch mt = compare_entropy(*fa, *fb, cfg.match_digits);
      if (mt.equal()) {
        auto key = std::minmax(a, b);
        matched.push_back(key);
        match_of[key] = mt;
        continue;
      }
      unsigned digits = matching_digits(*fa, *fb);
      if (digits > 12) {
        NearMiss nm;
        std::uint32_t x = std::min(classes[a].front(), classes[b].front());
        std::uint32_t y = std::max(classes[a].front(), classes[b].front());
        nm.graph6_first = graph6_encode(to_graph(forms[x]));
        nm.graph6_second = graph6_encode(to_graph(forms[y]));
        nm.matching_digits = digits;
        nm.entropy_first = (x == classes[a].front() ? fa : fb)->numeric_text();
        nm.entropy_second = (x == classes[a].front() ? fb : fa)->numeric_text();
        report.near_misses.push_back(std::move(nm));
      }
    }
  }

  // Expand matched spectrum classes to graph pairs.
  struct Raw {
    std::uint32_t x, y;
    std::size_t cx, cy;
  };
  std::vector<Raw> raw;
  for (auto [a, b] : matched)
    for (std::uint32_t x : classes[a])
      for (std::uint32_t y : classes[b]) {
        if (x < y) raw.push_back({x, y, a, b});
        else raw.push_back({y, x, b, a});
      }
  std::sort(raw.begin(), raw.end(), [](const Raw& p, const Raw& q) { return std::tie(p.x, p.y) < std::tie(q.x, q.y); });

  std::map<std::size_t, std::pair<std::string, std::string>> text_cache;
  auto texts = [&](std::size_t k) -> const std::pair<std::string, std::string>& {
    auto it = text_cache.find(k);
    if (it != text_cache.end()) return it->second;
    CharPoly p = charpoly(laplacian(to_graph(forms[classes[k].front()])));
    return text_cache.emplace(k, std::make_pair(p.to_string(), to_string(spectrum(p)))).first->second;
  };
  for (const Raw& r : raw) {
    CoentropicPair p;
    p.first = to_graph(forms[r.x]);
    p.second = to_graph(forms[r.y]);
    p.graph6_first = graph6_encode(p.first);
    p.graph6_second = graph6_encode(p.second);
    p.fingerprint_first = fingerprint(r.cx);
    p.fingerprint_second = fingerprint(r.cy);
    p.match = match_of.at(std::minmax(r.cx, r.cy));
    p.cospectral = false;
    std::tie(p.charpoly_first, p.spectrum_first) = texts(r.cx);
    std::tie(p.charpoly_second, p.spectrum_second) = texts(r.cy);
    (p.equal_edges() ? report.pairs_with_equal_edges : report.pairs_with_unequal_edges)++;
    report.coentropic_pairs.push_back(std::move(p));
  }
  std::sort(report.near_misses.begin(), report.near_misses.end(), [](const NearMiss& p, const NearMiss& q) {
    return std::tie(p.graph6_first, p.graph6_second) < std::tie(q.graph6_first, q.graph6_second);
  });
  report.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

inline nlohmann::json to_json(const CoentropicPair& p) {
  nlohmann::json j;
  j["graph6"] = {p.graph6_first, p.graph6_second};
  j["m"] = p.equal_edges() ? nlohmann::json(p.first.size()) : nlohmann::json(nullptr);
  j["edges"] = {p.first.size(), p.second.size()};
  j["entropy"] = {p.fingerprint_first->to_string(), p.fingerprint_second->to_string()};
  j["match"] = p.match.to_string();
  j["cospectral"] = p.cospectral;
  j["charpoly"] = {p.charpoly_first, p.charpoly_second};
  j["spectrum"] = {p.spectrum_first, p.spectrum_second};
  return j;
}

inline nlohmann::json to_json(const NearMiss& m) {
  return {{"graph6", {m.graph6_first, m.graph6_second}},
          {"matching_digits", m.matching_digits},
          {"entropy", {m.entropy_first, m.entropy_second}}};
}

inline void write_pairs_jsonl(std::ostream& out, const SearchReport& r) {
  for (const auto& p : r.coentropic_pairs) out << to_json(p).dump() << '\n';
}

inline void write_near_misses_jsonl(std::ostream& out, const SearchReport& r) {
  for (const auto& m : r.near_misses) out << to_json(m).dump() << '\n';
}

inline void write_summary_csv(std::ostream& out, const SearchReport& r) {
  out << "n,graph_class,group_by_edges,graphs_scanned,cospectral_classes_found,coentropic_pairs,"
         "pairs_with_equal_edges,pairs_with_unequal_edges,near_misses,wall_time_s\n";
  out << r.n << ',' << to_string(r.graph_class) << ',' << (r.group_by_edges ? "true" : "false") << ','
      << r.graphs_scanned << ',' << r.cospectral_classes_found << ',' << r.coentropic_pairs.size() << ','
      << r.pairs_with_equal_edges << ',' << r.pairs_with_unequal_edges << ',' << r.near_misses.size() << ','
      << r.wall_time << '\n';
}

/// S = ln(2m) + S^/(2m), checked exactly for integral spectra and to
/// `digits` places otherwise.
inline bool unnormalized_shortcut_holds(const Graph& g, unsigned digits = kDefaultDigits) {
  const long two_m = 2L * g.size();
  EntropyFingerprint s = von_neumann_entropy(g, digits);
  EntropyFingerprint hat = unnormalized_entropy(g, digits);
  if (s.is_exact() && hat.is_exact()) {
    std::map<long, BigRational> rhs;
    for (const auto& [p, c] : hat.exact) rhs[p] += c / two_m;
    for (auto [p, k] : detail::factorize(two_m)) rhs[p] += k;
    std::erase_if(rhs, [](const auto& kv) { return kv.second == 0; });
    return rhs == s.exact;
  }
  BigFloat rhs = log(BigFloat(two_m)) + hat.numeric / BigFloat(two_m);
  return abs(rhs - s.numeric) < pow(BigFloat(10), -static_cast<int>(digits) + 5);
}

struct TableRowReport {
  int row = 0;
  Graph first, second;
  EntropyFingerprint entropy_first, entropy_second;
  EntropyMatch match;
  bool cospectral = true;
  bool isomorphic = true;
  bool value_matches = false;
  std::string expected;
  bool passed() const { return match.equal() && !cospectral && !isomorphic && value_matches; }
};

namespace detail {

inline std::map<long, BigRational> expected_map(
    std::span<const std::pair<long, std::string_view>> terms) {
  std::map<long, BigRational> m;
  for (auto [p, c] : terms)
    if (p != 0) m[p] = BigRational(std::string(c));
  return m;
}

}  // namespace detail

inline std::vector<TableRowReport> verify_table(unsigned digits = kDefaultDigits) {
  std::vector<TableRowReport> out;
  int row = 0;
  for (const auto& r : known::kNineVertexPairs) {
    TableRowReport rep;
    rep.row = ++row;
    rep.first = parse_edge_list(r.first, 9);
    rep.second = parse_edge_list(r.second, 9);
    rep.entropy_first = von_neumann_entropy(rep.first, digits);
    rep.entropy_second = von_neumann_entropy(rep.second, digits);
    rep.match = compare_entropy(rep.entropy_first, rep.entropy_second, digits - 10);
    rep.cospectral = charpoly(laplacian(rep.first)) == charpoly(laplacian(rep.second));
    rep.isomorphic = is_isomorphic(rep.first, rep.second);
    if (r.decimal.empty()) {
      auto expected = detail::expected_map(r.closed_form);
      EntropyFingerprint e;
      e.kind = FingerprintKind::exact;
      e.exact = expected;
      rep.expected = e.closed_form();
      rep.value_matches = rep.entropy_first.is_exact() && rep.entropy_first.exact == expected &&
                          rep.entropy_second.is_exact() && rep.entropy_second.exact == expected;
    } else {
      const unsigned places = static_cast<unsigned>(r.decimal.size() - r.decimal.find('.') - 1);
      rep.expected = std::string(r.decimal);
      rep.value_matches = to_fixed(rep.entropy_first.numeric, places) == r.decimal &&
                          to_fixed(rep.entropy_second.numeric, places) == r.decimal;
    }
    out.push_back(std::move(rep));
  }
  return out;
}

/// Finds 8-vertex, 17-edge graphs with the two example Laplacian spectra.
inline std::pair<Graph, Graph> locate_example_pair(unsigned workers = 1) {
  auto target = [](const auto& spectrum) {
    IntPolynomial p({BigInt(1)});
    for (long l : spectrum) p = p * IntPolynomial({BigInt(-l), BigInt(1)});
    std::vector<std::int64_t> c;
    for (const auto& x : p.coefficients()) c.push_back(x.template convert_to<std::int64_t>());
    return c;
  };
  const auto ta = target(known::kExampleSpectrumA), tb = target(known::kExampleSpectrumB);
  std::optional<Graph> ga, gb;
  for (const auto& f : enumerate_forms(known::kExampleOrder, false, workers)) {
    if (f.size() != known::kExampleEdges) continue;
    auto c = detail::laplacian_charpoly_i64(to_adjacency(f));
    if (!ga && c == ta) ga = to_graph(f);
    if (!gb && c == tb) gb = to_graph(f);
    if (ga && gb) return {*ga, *gb};
  }
  throw NotFound("no 8-vertex graph pair with the example spectra");
}

}  // namespace coentropy
