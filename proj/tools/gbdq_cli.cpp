// Command-line front end.  Talks to the engine exclusively through the
// public C API in gbdq.h, the same surface an external embedder would use.
//
// Exit codes: 0 success, 1 verification/expansion failure, 2 usage error,
// 3 I/O error.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gbdq.h"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

// unique_ptr-style guards for the C handles and strings
struct StringOut {
  char* s = nullptr;
  ~StringOut() { gbdq_string_free(s); }
  std::string str() const { return s ? std::string(s) : std::string(); }
};

struct ChainsetOut {
  gbdq_chainset_t* h = nullptr;
  ~ChainsetOut() { gbdq_chainset_free(h); }
};

struct GraphOut {
  gbdq_graph_t* h = nullptr;
  ~GraphOut() { gbdq_graph_free(h); }
};

struct ReportOut {
  gbdq_report_t* h = nullptr;
  ~ReportOut() { gbdq_report_free(h); }
};

struct CensusOut {
  gbdq_census_t* h = nullptr;
  ~CensusOut() { gbdq_census_free(h); }
};

[[noreturn]] void die(gbdq_status st, const std::string& context) {
  std::cerr << "gbdq: " << context << ": " << gbdq_last_error() << "\n";
  std::exit(st == GBDQ_ERR_INVALID ? kExitUsage : kExitFail);
}

void check(gbdq_status st, const std::string& context) {
  if (st != GBDQ_OK) die(st, context);
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::error_code ec;
  if (path.has_parent_path())
    std::filesystem::create_directories(path.parent_path(), ec);
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    std::cerr << "gbdq: cannot open " << path << " for writing\n";
    std::exit(kExitIo);
  }
  f << content;
  f.flush();
  if (!f) {
    std::cerr << "gbdq: write failed for " << path << "\n";
    std::exit(kExitIo);
  }
  std::cerr << "wrote " << path.string() << "\n";
}

void warn_soft_limit(int n) {
  if (n > 6)
    std::cerr << "gbdq: note: n=" << n
              << " is past the tabulated range; expect a long run\n";
}

int run_enumerate(int n, int jobs, const std::string& out_dir) {
  if (n < 1) {
    std::cerr << "gbdq: --n must be at least 1\n";
    return kExitUsage;
  }
  warn_soft_limit(n);
  std::cerr << "counting canonical chains for n=" << n << "\n";
  uint64_t count = 0;
  check(gbdq_count_canonical(n, jobs, &count), "enumerate");
  std::cout << count << "\n";
  if (!out_dir.empty()) {
    ChainsetOut cs;
    check(gbdq_chains_canonical(n, jobs, &cs.h), "enumerate");
    StringOut text;
    check(gbdq_chainset_text(cs.h, &text.s), "enumerate");
    write_file(std::filesystem::path(out_dir) /
                   ("chains_n" + std::to_string(n) + ".txt"),
               text.str());
  }
  return 0;
}

int run_graphs(int n, int jobs, const std::string& out_dir) {
  if (n < 1) {
    std::cerr << "gbdq: --n must be at least 1\n";
    return kExitUsage;
  }
  warn_soft_limit(n);
  std::cerr << "building the graph census for n=" << n << "\n";
  CensusOut census;
  check(gbdq_census_run(n, jobs, &census.h), "graphs");
  StringOut text;
  check(gbdq_census_text(census.h, &text.s), "graphs");
  std::cout << text.str();
  if (!out_dir.empty()) {
    StringOut json;
    check(gbdq_census_json(census.h, &json.s), "graphs");
    write_file(std::filesystem::path(out_dir) /
                   ("census_n" + std::to_string(n) + ".json"),
               json.str());
  }
  return 0;
}

int run_verify(int n, int jobs, const std::string& out_dir, bool corrupt) {
  if (n < 1) {
    std::cerr << "gbdq: --n must be at least 1\n";
    return kExitUsage;
  }
  const int lo = std::min(n, 3);
  for (int len = lo; len <= n; ++len) {
    std::cerr << "verifying axioms over canonical chains of length " << len
              << (corrupt ? " (corrupted involution table)" : "") << "\n";
    ReportOut rep;
    check(gbdq_verify_chains(len, jobs, corrupt ? 1 : 0, &rep.h), "verify");
    int passed = 0;
    check(gbdq_report_passed(rep.h, &passed), "verify");
    StringOut text;
    check(gbdq_report_text(rep.h, &text.s), "verify");
    std::cout << "== n=" << len << " ==\n" << text.str();
    if (!passed) {
      const std::string dir = out_dir.empty() ? "." : out_dir;
      StringOut json;
      check(gbdq_report_json(rep.h, &json.s), "verify");
      write_file(std::filesystem::path(dir) /
                     ("verify_witness_n" + std::to_string(len) + ".json"),
                 json.str());
      std::cout << "FAIL\n";
      return kExitFail;
    }
  }
  std::cout << "PASS\n";
  return 0;
}

// shared by expand/export: build the chain set for the selected target
ChainsetOut make_target_chainset(const std::string& zeta, const std::string& u,
                                 const std::string& w, int k,
                                 const std::string& context) {
  ChainsetOut cs;
  if (!zeta.empty()) {
    check(gbdq_chains_interval(zeta.c_str(), &cs.h), context);
  } else {
    check(gbdq_chains_k_bruhat(u.c_str(), w.c_str(), k, &cs.h), context);
  }
  return cs;
}

int run_expand(const std::string& zeta, const std::string& u,
               const std::string& w, int k, bool oracle) {
  if (!zeta.empty()) {
    std::cerr << "expanding the chain function below " << zeta << "\n";
    ChainsetOut cs;
    check(gbdq_chains_interval(zeta.c_str(), &cs.h), "expand");
    uint64_t count = 0;
    check(gbdq_chainset_count(cs.h, &count), "expand");
    StringOut q, schur;
    int symmetric = 0;
    check(gbdq_chainset_expand(cs.h, &q.s, &schur.s, &symmetric), "expand");
    std::cout << "chains: " << count << "\n";
    std::cout << "Q: " << q.str() << "\n";
    if (symmetric) {
      std::cout << "Schur: " << schur.str() << "\n";
      return 0;
    }
    std::cout << "not symmetric, residual: " << schur.str() << "\n";
    return kExitFail;
  }

  std::cerr << "expanding the interval [" << u << ", " << w << "] at k=" << k
            << (oracle ? " with the polynomial oracle" : "") << "\n";
  StringOut json;
  check(gbdq_interval_expand(u.c_str(), w.c_str(), k, oracle ? 1 : 0, &json.s),
        "expand");
  std::cout << json.str() << "\n";
  auto parsed = nlohmann::json::parse(json.str());
  if (!parsed.value("below", false)) return 0;
  if (!parsed.value("symmetric", false)) return kExitFail;
  if (oracle && !parsed.value("oracle_match", false)) return kExitFail;
  return 0;
}

int run_export(int n, const std::string& zeta, const std::string& u,
               const std::string& w, int k, int jobs,
               const std::string& format, const std::string& out_dir) {
  const std::filesystem::path dir = out_dir.empty() ? "." : out_dir;

  if (n > 0) {
    if (format == "dot") {
      std::cerr << "gbdq: the census export has no dot form; use json or text\n";
      return kExitUsage;
    }
    warn_soft_limit(n);
    std::cerr << "building the graph census for n=" << n << "\n";
    CensusOut census;
    check(gbdq_census_run(n, jobs, &census.h), "export");
    StringOut body;
    if (format == "json")
      check(gbdq_census_json(census.h, &body.s), "export");
    else
      check(gbdq_census_text(census.h, &body.s), "export");
    write_file(dir / ("census_n" + std::to_string(n) +
                      (format == "json" ? ".json" : ".txt")),
               body.str());
    return 0;
  }

  ChainsetOut cs = make_target_chainset(zeta, u, w, k, "export");
  GraphOut g;
  check(gbdq_graph_build(cs.h, &g.h), "export");

  if (format == "dot") {
    StringOut dot;
    check(gbdq_graph_dot(g.h, &dot.s), "export");
    write_file(dir / "graph.dot", dot.str());
    return 0;
  }
  StringOut chain_body, graph_body;
  if (format == "json") {
    check(gbdq_chainset_json(cs.h, &chain_body.s), "export");
    check(gbdq_graph_json(g.h, &graph_body.s), "export");
    write_file(dir / "chains.json", chain_body.str());
    write_file(dir / "graph.json", graph_body.str());
  } else {
    check(gbdq_chainset_text(cs.h, &chain_body.s), "export");
    check(gbdq_graph_text(g.h, &graph_body.s), "export");
    write_file(dir / "chains.txt", chain_body.str());
    write_file(dir / "graph.txt", graph_body.str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"labeled chain enumeration, dual equivalence verification, and "
               "Schur expansion toolkit"};
  app.require_subcommand(1);

  int jobs = 0;
  app.add_option("--jobs", jobs, "worker threads (0 = auto)")
      ->envname("GBDQ_JOBS");

  int n = 0;
  std::string zeta, u, w, out_dir, format = "json";
  int k = 0;
  bool oracle = false, corrupt = false;

  auto* cmd_enumerate =
      app.add_subcommand("enumerate", "count the canonical chains of length n");
  cmd_enumerate->add_option("--n", n, "chain length")->required();
  cmd_enumerate->add_option("--out", out_dir, "also write the chain listing here");

  auto* cmd_graphs =
      app.add_subcommand("graphs", "census of the dual equivalence graphs");
  cmd_graphs->add_option("--n", n, "chain length")->required();
  cmd_graphs->add_option("--out", out_dir, "also write the census record here");

  auto* cmd_verify =
      app.add_subcommand("verify", "run the dual equivalence axiom battery");
  cmd_verify->add_option("--n", n, "check all lengths up to n")->required();
  cmd_verify->add_option("--out", out_dir, "directory for failure witnesses");
  cmd_verify->add_flag("--corrupt", corrupt,
                       "negative control: break the involution table on purpose");

  auto* cmd_expand = app.add_subcommand(
      "expand", "Schur expansion of a chain generating function");
  cmd_expand->add_option("--zeta", zeta, "target permutation, cycle notation");
  cmd_expand->add_option("--u", u, "interval bottom, one-line notation");
  cmd_expand->add_option("--w", w, "interval top, one-line notation");
  cmd_expand->add_option("--k", k, "Bruhat order cutoff");
  cmd_expand->add_flag("--oracle", oracle,
                       "cross-check against the polynomial oracle");

  auto* cmd_export = app.add_subcommand("export", "write chains/graphs/census");
  cmd_export->add_option("--n", n, "census target");
  cmd_export->add_option("--zeta", zeta, "interval target, cycle notation");
  cmd_export->add_option("--u", u, "interval bottom, one-line notation");
  cmd_export->add_option("--w", w, "interval top, one-line notation");
  cmd_export->add_option("--k", k, "Bruhat order cutoff");
  cmd_export->add_option("--format", format, "dot, json, or text")
      ->check(CLI::IsMember({"dot", "json", "text"}));
  cmd_export->add_option("--out", out_dir, "output directory (default .)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  auto uwk_state = [&](const CLI::App* sub) {
    const int given = static_cast<int>(sub->count("--u")) +
                      static_cast<int>(sub->count("--w")) +
                      static_cast<int>(sub->count("--k"));
    if (given != 0 && given != 3) {
      std::cerr << "gbdq: --u, --w, --k must be given together\n";
      std::exit(kExitUsage);
    }
    return given == 3;
  };

  if (cmd_enumerate->parsed()) return run_enumerate(n, jobs, out_dir);
  if (cmd_graphs->parsed()) return run_graphs(n, jobs, out_dir);
  if (cmd_verify->parsed()) return run_verify(n, jobs, out_dir, corrupt);

  if (cmd_expand->parsed()) {
    const bool has_uwk = uwk_state(cmd_expand);
    if (zeta.empty() == !has_uwk) {
      std::cerr << "gbdq: expand needs exactly one target: --zeta or --u/--w/--k\n";
      return kExitUsage;
    }
    return run_expand(zeta, u, w, k, oracle);
  }

  if (cmd_export->parsed()) {
    const bool has_uwk = uwk_state(cmd_export);
    const int targets = (cmd_export->count("--n") > 0 ? 1 : 0) +
                        (zeta.empty() ? 0 : 1) + (has_uwk ? 1 : 0);
    if (targets != 1) {
      std::cerr << "gbdq: export needs exactly one target: --n, --zeta, or "
                   "--u/--w/--k\n";
      return kExitUsage;
    }
    return run_export(cmd_export->count("--n") > 0 ? n : 0, zeta, u, w, k,
                      jobs, format, out_dir);
  }

  return kExitUsage;
}
