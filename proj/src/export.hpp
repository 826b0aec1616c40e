#pragma once

#include <map>
#include <string>
#include <vector>

#include "graph.hpp"
#include "qsym.hpp"
#include "schubert.hpp"

namespace gbdq {

// one chain per line in "(a1,b1)(a2,b2)..." form
std::string chains_to_text(const std::vector<Chain>& chains);

// records with transpositions, labels, descents, endpoint cycles
std::string chains_to_json(const std::vector<Chain>& chains);

// undirected DOT; edge attributes color_i and rule, label "i (A)"
std::string graph_to_dot(const ColoredGraph& g, const std::string& name = "G");

std::string graph_to_json(const ColoredGraph& g);
std::string graph_to_text(const ColoredGraph& g);

std::string report_to_json(const AxiomReport& rep);

std::string census_to_json(const Census& c);
std::string census_to_text(const Census& c);

std::string expansion_to_json(const QSymFunction& q, const SchurResult& s);

// oracle results keyed by one-line permutations
std::string oracle_to_json(const std::map<Permutation, int64_t>& coeffs);

}  // namespace gbdq
