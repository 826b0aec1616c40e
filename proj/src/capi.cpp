#include "gbdq.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <map>
#include <new>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "chain.hpp"
#include "dual_equiv.hpp"
#include "export.hpp"
#include "graph.hpp"
#include "perm.hpp"
#include "qsym.hpp"
#include "schubert.hpp"
#include "tableaux.hpp"

extern "C" {
struct gbdq_chainset_t {
  std::vector<gbdq::Chain> chains;
};
struct gbdq_graph_t {
  gbdq::ColoredGraph graph;
};
struct gbdq_report_t {
  gbdq::AxiomReport report;
};
struct gbdq_census_t {
  gbdq::Census census;
};
}

namespace {

thread_local std::string g_last_error;

gbdq_status fail(gbdq_status code, const char* what) {
  try {
    g_last_error = what ? what : "";
  } catch (...) {
    g_last_error.clear();
  }
  return code;
}

// Exceptions never cross the C boundary: invalid input maps to INVALID,
// internal consistency trips to VERIFY, the rest to NOMEM/INTERNAL.
template <typename Fn>
gbdq_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return GBDQ_OK;
  } catch (const std::invalid_argument& e) {
    return fail(GBDQ_ERR_INVALID, e.what());
  } catch (const std::bad_alloc&) {
    return fail(GBDQ_ERR_NOMEM, "out of memory");
  } catch (const std::runtime_error& e) {
    return fail(GBDQ_ERR_VERIFY, e.what());
  } catch (const std::exception& e) {
    return fail(GBDQ_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(GBDQ_ERR_INTERNAL, "unknown error");
  }
}

char* dup_string(const std::string& s) {
  char* buf = static_cast<char*>(std::malloc(s.size() + 1));
  if (!buf) throw std::bad_alloc();
  std::memcpy(buf, s.c_str(), s.size() + 1);
  return buf;
}

int resolve_jobs(int jobs) {
  if (jobs > 0) return jobs;
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

int uniform_length(const std::vector<gbdq::Chain>& chains) {
  if (chains.empty())
    throw gbdq::InvalidArgument("chain set is empty");
  const size_t len = chains.front().length();
  for (const auto& c : chains)
    if (c.length() != len)
      throw gbdq::InvalidArgument("chains have mixed lengths");
  return static_cast<int>(len);
}

std::pair<gbdq::QSymFunction, gbdq::SchurResult> expand_chains(
    const std::vector<gbdq::Chain>& chains) {
  const int degree = uniform_length(chains);
  std::vector<gbdq::DescentSet> des;
  des.reserve(chains.size());
  for (const auto& c : chains) des.push_back(c.descents());
  gbdq::QSymFunction q = gbdq::k_of(des, degree);
  return {q, gbdq::expand_in_schur(q)};
}

}  // namespace

extern "C" {

const char* gbdq_version(void) { return "0.1.0"; }

const char* gbdq_last_error(void) { return g_last_error.c_str(); }

void gbdq_string_free(char* s) { std::free(s); }

/* ---- chain sets ------------------------------------------------------- */

gbdq_status gbdq_count_canonical(int n, int jobs, uint64_t* out) {
  if (!out) return fail(GBDQ_ERR_INVALID, "null argument");
  return guarded([&] { *out = gbdq::count_canonical_chains(n, resolve_jobs(jobs)); });
}

gbdq_status gbdq_chains_canonical(int n, int jobs, gbdq_chainset_t** out) {
  if (!out) return fail(GBDQ_ERR_INVALID, "null argument");
  return guarded([&] {
    auto chains = gbdq::enumerate_canonical_chains(n, resolve_jobs(jobs));
    *out = new gbdq_chainset_t{std::move(chains)};
  });
}

gbdq_status gbdq_chains_interval(const char* zeta_cycles, gbdq_chainset_t** out) {
  if (!zeta_cycles || !out) return fail(GBDQ_ERR_INVALID, "null argument");
  return guarded([&] {
    gbdq::Permutation zeta = gbdq::parse_permutation(zeta_cycles);
    *out = new gbdq_chainset_t{gbdq::enumerate_interval_chains(zeta)};
  });
}

gbdq_status gbdq_chains_k_bruhat(const char* u_one_line, const char* w_one_line,
                                 int k, gbdq_chainset_t** out) {
  if (!u_one_line || !w_one_line || !out)
    return fail(GBDQ_ERR_INVALID, "null argument");
  return guarded([&] {
    gbdq::Permutation u = gbdq::parse_permutation(u_one_line);
    gbdq::Permutation w = gbdq::parse_permutation(w_one_line);
    auto lifted = gbdq::enumerate_k_bruhat_interval(u, w, k);
    std::vector<gbdq::Chain> chains;
    if (!lifted.empty()) {
      gbdq::Permutation zeta = gbdq::compose(w, u.inverse());
      chains = gbdq::enumerate_interval_chains(zeta);
    }
    *out = new gbdq_chainset_t{std::move(chains)};
  });
}

void gbdq_chainset_free(gbdq_chainset_t* cs) { delete cs; }

gbdq_status gbdq_chainset_count(const gbdq_chainset_t* cs, uint64_t* out) {
  if (!cs || !out) return fail(GBDQ_ERR_INVALID, "null argument");
  *out = cs->chains.size();
  return GBDQ_OK;
}

gbdq_status gbdq_chainset_text(const gbdq_chainset_t* cs, char** out) {
  if (!cs || !out) return fail(GBDQ_ERR_INVALID, "null argument");
  return guarded([&] { *out = dup_string(gbdq::chains_to_text(cs->chains)); });
}

gbdq_status gbdq_chainset_json(const gbdq_chainset_t* cs, char** out) {
  if (!cs || !out) return fail(GBDQ_ERR_INVALID, "null argument");
  return guarded([&] { *out = dup_string(gbdq::chains_to_json(cs->chains)); });
}

gbdq_status gbdq_chainset_expand(const gbdq_chainset_t* cs, char** q_text,
                                 char** schur_text, int* symmetric) {
  if (!cs || !q_text || !schur_text || !symmetric)
    return fail(GBDQ_ERR_INVALID, "null argument");
  return guarded([&] {
    auto [q, result] = expand_chains(cs->chains);
    std::string qs = q.text();
    std::string ss;
    int sym = 0;
    if (const auto* exp = std::get_if<gbdq::SchurExpansion>(&result)) {
      ss = exp->text();
      sym = 1;
    } else {
      ss = std::get<gbdq::NotSymmetric>(result).residual.text();
    }
    *q_text = dup_string(qs);
    *schur_text = dup_string(ss);
    *symmetric = sym;
  });
}

gbdq_status gbdq_chainset_expand_json(const gbdq_chainset_t* cs, char** out) {
  if (!cs || !out) return fail(GBDQ_ERR_INVALID, "null argument");
  return guarded([&] {
    auto [q, result] = expand_chains(cs->chains);
    *out = dup_string(gbdq::expansion_to_json(q, result));
  });
}

/* ---- graphs ----------------------------------------------------------- */

gbdq_status gbdq_graph_build(const gbdq_chainset_t* cs, gbdq_graph_t** out) {
  if (!cs || !out) return fail(GBDQ_ERR_INVALID, "null argument");
  return guarded([&] {
    *out = new gbdq_graph_t{gbdq::ColoredGraph::build(cs->chains)};
  });
}

void gbdq_graph_free(gbdq_graph_t* g) { delete g; }

gbdq_status gbdq_graph_vertex_count(const gbdq_graph_t* g, uint64_t* out) {
  if (!g || !out) return fail(GBDQ_ERR_INVALID, "null argument");
  *out = g->graph.vertex_count();
  return GBDQ_OK;
}

gbdq_status gbdq_graph_edge_count(const gbdq_graph_t* g, uint64_t* out) {
  if (!g || !out) return fail(GBDQ_ERR_INVALID, "null argument");
  *out = g->graph.edges().size();
  return GBDQ_OK;
}

gbdq_status gbdq_graph_component_count(const gbdq_graph_t* g, uint64_t* out) {
  if (!g || !out) return fail(GBDQ_ERR_INVALID, "null argument");
  return guarded([&] { *out = gbdq::connected_components(g->graph).size(); });
}

gbdq_status gbdq_graph_text(const gbdq_graph_t* g, char** out) {
  if (!g || !out) return fail(GBDQ_ERR_INVALID, "null argument");
  return guarded([&] { *out = dup_string(gbdq::graph_to_text(g->graph)); });
}

gbdq_status gbdq_graph_json(const gbdq_graph_t* g, char** out) {
  if (!g || !out) return fail(GBDQ_ERR_INVALID, "null argument");
  return guarded([&] { *out = dup_string(gbdq::graph_to_json(g->graph)); });
}

gbdq_status gbdq_graph_dot(const gbdq_graph_t* g, char** out) {
  if (!g || !out) return fail(GBDQ_ERR_INVALID, "null argument");
  return guarded([&] { *out = dup_string(gbdq::graph_to_dot(g->graph)); });
}

gbdq_status gbdq_graph_certificate(const gbdq_graph_t* g, char** out) {
  if (!g || !out) return fail(GBDQ_ERR_INVALID, "null argument");
  return guarded([&] {
    *out = dup_string(gbdq::certificate_hex(gbdq::certificate(g->graph)));
  });
}

/* ---- verification ----------------------------------------------------- */

gbdq_status gbdq_verify_chains(int n, int jobs, int corrupt,
                               gbdq_report_t** out) {
  if (!out) return fail(GBDQ_ERR_INVALID, "null argument");
  return guarded([&] {
    auto chains = gbdq::enumerate_canonical_chains(n, resolve_jobs(jobs));
    gbdq::PhiProvider provider =
        corrupt ? gbdq::corrupted_phi() : gbdq::default_phi();
    gbdq::DualFamily fam = gbdq::chain_family(std::move(chains), provider);
    *out = new gbdq_report_t{gbdq::check_all_axioms(fam)};
  });
}

gbdq_status gbdq_verify_tableaux(const int* shape, size_t parts,
                                 gbdq_report_t** out) {
  if (!out || (parts > 0 && !shape))
    return fail(GBDQ_ERR_INVALID, "null argument");
  return guarded([&] {
    gbdq::Partition lam(shape, shape + parts);
    gbdq::DualFamily fam = gbdq::syt_family(lam);
    *out = new gbdq_report_t{gbdq::check_all_axioms(fam)};
  });
}

void gbdq_report_free(gbdq_report_t* r) { delete r; }

gbdq_status gbdq_report_passed(const gbdq_report_t* r, int* out) {
  if (!r || !out) return fail(GBDQ_ERR_INVALID, "null argument");
  *out = r->report.all_passed() ? 1 : 0;
  return GBDQ_OK;
}

gbdq_status gbdq_report_text(const gbdq_report_t* r, char** out) {
  if (!r || !out) return fail(GBDQ_ERR_INVALID, "null argument");
  return guarded([&] { *out = dup_string(r->report.text()); });
}

gbdq_status gbdq_report_json(const gbdq_report_t* r, char** out) {
  if (!r || !out) return fail(GBDQ_ERR_INVALID, "null argument");
  return guarded([&] { *out = dup_string(gbdq::report_to_json(r->report)); });
}

/* ---- census ----------------------------------------------------------- */

gbdq_status gbdq_census_run(int n, int jobs, gbdq_census_t** out) {
  if (!out) return fail(GBDQ_ERR_INVALID, "null argument");
  return guarded([&] {
    *out = new gbdq_census_t{gbdq::run_census(n, resolve_jobs(jobs))};
  });
}

void gbdq_census_free(gbdq_census_t* c) { delete c; }

gbdq_status gbdq_census_chains(const gbdq_census_t* c, uint64_t* out) {
  if (!c || !out) return fail(GBDQ_ERR_INVALID, "null argument");
  *out = c->census.chains;
  return GBDQ_OK;
}

gbdq_status gbdq_census_graphs(const gbdq_census_t* c, uint64_t* out) {
  if (!c || !out) return fail(GBDQ_ERR_INVALID, "null argument");
  *out = c->census.graphs;
  return GBDQ_OK;
}

gbdq_status gbdq_census_iso_classes(const gbdq_census_t* c, uint64_t* out) {
  if (!c || !out) return fail(GBDQ_ERR_INVALID, "null argument");
  *out = c->census.iso_classes;
  return GBDQ_OK;
}

gbdq_status gbdq_census_orbits(const gbdq_census_t* c, uint64_t* out) {
  if (!c || !out) return fail(GBDQ_ERR_INVALID, "null argument");
  *out = c->census.orbits;
  return GBDQ_OK;
}

gbdq_status gbdq_census_text(const gbdq_census_t* c, char** out) {
  if (!c || !out) return fail(GBDQ_ERR_INVALID, "null argument");
  return guarded([&] { *out = dup_string(gbdq::census_to_text(c->census)); });
}

gbdq_status gbdq_census_json(const gbdq_census_t* c, char** out) {
  if (!c || !out) return fail(GBDQ_ERR_INVALID, "null argument");
  return guarded([&] { *out = dup_string(gbdq::census_to_json(c->census)); });
}

/* ---- Schubert oracle -------------------------------------------------- */

gbdq_status gbdq_oracle_coeffs(const char* u_one_line, const int* lambda,
                               size_t parts, int k, char** out_json) {
  if (!u_one_line || !out_json || (parts > 0 && !lambda))
    return fail(GBDQ_ERR_INVALID, "null argument");
  return guarded([&] {
    gbdq::Permutation u = gbdq::parse_permutation(u_one_line);
    gbdq::Partition lam(lambda, lambda + parts);
    auto coeffs = gbdq::coeff_oracle(u, lam, k);
    *out_json = dup_string(gbdq::oracle_to_json(coeffs));
  });
}

gbdq_status gbdq_interval_expand(const char* u_one_line, const char* w_one_line,
                                 int k, int with_oracle, char** out_json) {
  if (!u_one_line || !w_one_line || !out_json)
    return fail(GBDQ_ERR_INVALID, "null argument");
  return guarded([&] {
    gbdq::Permutation u = gbdq::parse_permutation(u_one_line);
    gbdq::Permutation w = gbdq::parse_permutation(w_one_line);
    auto lifted = gbdq::enumerate_k_bruhat_interval(u, w, k);

    nlohmann::json j;
    j["u"] = u.one_line_string();
    j["w"] = w.one_line_string();
    j["k"] = k;
    j["chains"] = lifted.size();
    j["below"] = !lifted.empty();
    if (lifted.empty()) {
      *out_json = dup_string(j.dump(2));
      return;
    }

    const int degree = static_cast<int>(lifted.front().labels.size());
    std::vector<gbdq::DescentSet> des;
    des.reserve(lifted.size());
    for (const auto& c : lifted) des.push_back(c.descents());
    gbdq::QSymFunction q = gbdq::k_of(des, degree);
    gbdq::SchurResult result = gbdq::expand_in_schur(q);

    j["degree"] = degree;
    j["q_text"] = q.text();
    const auto* exp = std::get_if<gbdq::SchurExpansion>(&result);
    j["symmetric"] = exp != nullptr;
    if (exp) j["schur_text"] = exp->text();
    else
      j["residual"] = std::get<gbdq::NotSymmetric>(result).residual.text();

    if (with_oracle) {
      bool match = exp != nullptr;
      nlohmann::json comparison = nlohmann::json::object();
      if (exp) {
        std::set<gbdq::Partition> lams;
        for (const auto& [lam, c] : exp->coefficients()) lams.insert(lam);
        for (const auto& lam : gbdq::partitions_of(degree))
          if (static_cast<int>(lam.size()) <= k) lams.insert(lam);
        for (const auto& lam : lams) {
          int64_t from_chains = exp->coefficient(lam);
          int64_t from_polys = 0;
          if (static_cast<int>(lam.size()) <= k) {
            auto coeffs = gbdq::coeff_oracle(u, lam, k);
            auto it = coeffs.find(w);
            if (it != coeffs.end()) from_polys = it->second;
          }
          comparison[gbdq::partition_text(lam)] = {
              {"expansion", from_chains}, {"oracle", from_polys}};
          if (from_chains != from_polys) match = false;
        }
      }
      j["oracle"] = comparison;
      j["oracle_match"] = match;
    }
    *out_json = dup_string(j.dump(2));
  });
}

}  // extern "C"
