#pragma once

#include <iosfwd>
#include <string>

#include "tdcol/brute.hpp"
#include "tdcol/digraph.hpp"
#include "tdcol/matrix.hpp"
#include "tdcol/obstructions.hpp"
#include "tdcol/reductions.hpp"

namespace tdcol {

// Text formats.  All parsers skip blank lines and lines starting with '#',
// and report failures as ParseError carrying the 1-based line number.
//
//   digraph <n>      matrix <m>        bipartite <p> <q>
//   u v              m rows of m       w<i> b<j>           (one edge per line)
//   ...              {0,1,*} tokens    embed w<i> w<k>     (instance vertex, target vertex)
//                                      list b<j> b<k> ...  (allowed target vertices)

Digraph parse_digraph(std::istream& in);
Digraph parse_digraph(const std::string& text);
std::string serialize(const Digraph& d);

PartitionMatrix parse_matrix(std::istream& in);
PartitionMatrix parse_matrix(const std::string& text);
std::string serialize(const PartitionMatrix& m);

BipartiteInstance parse_bipartite(std::istream& in);
BipartiteInstance parse_bipartite(const std::string& text);
std::string serialize(const BipartiteInstance& b);

Digraph load_digraph(const std::string& path);
PartitionMatrix load_matrix(const std::string& path);
BipartiteInstance load_bipartite(const std::string& path);

// JSON renderings (certificates, obstruction catalogues, bound probes).
std::string certificate_json(const Certificate& c);
std::string catalogue_json(const ObstructionCatalogue& c);
std::string kl_report_json(const KlBoundReport& r);

// Inverse of certificate_json; the assignment keys must cover 0..n-1.
Certificate parse_certificate_json(const std::string& text);

}  // namespace tdcol
