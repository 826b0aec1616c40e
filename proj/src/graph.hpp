#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "chain.hpp"
#include "dual_equiv.hpp"
#include "qsym.hpp"

namespace gbdq {

struct MixedLengths : InvalidArgument {
  using InvalidArgument::InvalidArgument;
};

struct InconsistentPropagation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A descent-equipped set with involutions, indexed 0..size-1.  The axiom
// engine runs on this so chains and standard tableaux share one code path.
struct DualFamily {
  int n = 0;       // descents lie in [n-1], involutions are phi_2..phi_{n-1}
  size_t size = 0;
  std::function<DescentSet(size_t)> des;
  std::function<size_t(size_t, int)> phi;
  std::function<std::string(size_t)> name;
};

// chains must be closed under phi; the family memoizes phi images
DualFamily chain_family(std::vector<Chain> chains,
                        PhiProvider provider = default_phi());
DualFamily syt_family(const Partition& shape);

// the reversed dual equivalence: des -> rho(des), phi_i -> phi_{n+1-i}
DualFamily reversed_family(const DualFamily& fam);

struct ColoredEdge {
  uint32_t u, v;  // u < v
  uint8_t color;
  PhiRule rule;
  friend auto operator<=>(const ColoredEdge&, const ColoredEdge&) = default;
};

class ColoredGraph {
 public:
  // edges from phi over the given closed chain set; vertex order preserved
  static ColoredGraph build(std::vector<Chain> chains,
                            const PhiProvider& provider = default_phi());
  static ColoredGraph from_family(const DualFamily& fam);

  int degree() const { return n_; }
  size_t vertex_count() const { return des_.size(); }
  const std::vector<DescentSet>& descent_sets() const { return des_; }
  const std::vector<ColoredEdge>& edges() const { return edges_; }
  // empty when built from a non-chain family
  const std::vector<Chain>& chains() const { return chains_; }
  const std::vector<std::string>& names() const { return names_; }

  QSymFunction k_function() const;

  static ColoredGraph assemble(int n, std::vector<DescentSet> des,
                               std::vector<ColoredEdge> edges,
                               std::vector<Chain> chains = {},
                               std::vector<std::string> names = {});

 private:
  int n_ = 0;
  std::vector<DescentSet> des_;
  std::vector<ColoredEdge> edges_;
  std::vector<Chain> chains_;
  std::vector<std::string> names_;
};

// deterministic order: by smallest vertex index of the component
std::vector<ColoredGraph> connected_components(const ColoredGraph& g);

// canonical byte encoding; equal certificates iff isomorphic respecting
// edge colors and vertex descent sets
using GraphCertificate = std::string;
GraphCertificate certificate(const ColoredGraph& g);
std::string certificate_hex(const GraphCertificate& c);

ColoredGraph omega_graph(const ColoredGraph& g);  // complement all descents
ColoredGraph rho_graph(const ColoredGraph& g);    // reverse descents, color i -> n+1-i

// certificates of {g, wg, rg, rwg}; orbit identity is the set (or its min)
std::set<GraphCertificate> omega_rho_orbit(const ColoredGraph& g);

struct AxiomWitness {
  std::string axiom;
  std::string detail;
};

struct AxiomReport {
  struct Line {
    std::string axiom;
    uint64_t checked = 0;
    uint64_t violations = 0;
  };
  std::vector<Line> lines;
  std::vector<AxiomWitness> witnesses;

  Line& line(const std::string& axiom);
  void count(const std::string& axiom, bool ok);
  void witness(const std::string& axiom, std::string detail);
  void merge(const AxiomReport& other);
  bool all_passed() const;
  std::string text() const;

  static constexpr size_t kMaxWitnessesPerAxiom = 5;
};

// (i) fixed points exactly at both-or-neither descents, and involutivity;
// (ii.a)-(ii.d); (iii) commutation at distance >= 3
AxiomReport check_axioms_i_iii(const DualFamily& fam);

// restricted classes over every window i < j <= min(i+2, n-1): the
// restricted generating function is symmetric and Schur-positive
AxiomReport check_iv_a(const DualFamily& fam);

// equal restricted functions around doubly-unfixed i-edges, 3 <= i <= n-2
AxiomReport check_iv_b(const DualFamily& fam);

struct FlatChain {
  int i;
  std::vector<size_t> vertices;  // c_1, ..., c_{2r}
};

// all maximal flat i-chains (suffix lists of longer ones are dropped)
std::vector<FlatChain> enumerate_flat_chains(const DualFamily& fam, int i);
std::vector<std::vector<Chain>> enumerate_flat_chains(
    const std::vector<Chain>& chains, int i,
    const PhiProvider& provider = default_phi(), bool via_prefix_lift = false);

// flat-chain condition for 3 < i < n-1, plus the reversal statement
AxiomReport check_iv_c(const DualFamily& fam);

AxiomReport check_all_axioms(const DualFamily& fam);

// The edge structure alone pins descents down to a complementation choice:
// returns the assignment with 1 in the seed's descent set, then its omega.
std::pair<std::vector<DescentSet>, std::vector<DescentSet>>
reconstruct_descents(const ColoredGraph& g, size_t seed);

struct CensusRow {
  int vertices = 0;
  uint64_t graphs = 0;
  uint64_t iso_classes = 0;
  uint64_t orbits = 0;
  uint64_t functions = 0;
};

struct CensusClass {
  int vertices = 0;
  uint64_t graphs = 0;      // components in this isomorphism class
  std::string certificate;  // hex
  std::string orbit_key;    // hex certificate of the orbit representative
  std::string function;     // Schur expansion of the class K-function
};

struct Census {
  int n = 0;
  uint64_t chains = 0;
  uint64_t graphs = 0;
  uint64_t iso_classes = 0;
  uint64_t orbits = 0;
  std::vector<CensusRow> by_size;                    // ascending vertex count
  std::vector<CensusClass> classes;                  // by (vertices, certificate)
  std::map<int, std::set<std::string>> functions;    // size -> Schur texts
};

Census run_census(int n, int jobs = 1);

}  // namespace gbdq
