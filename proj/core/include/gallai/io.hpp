#pragma once

#include <iosfwd>
#include <string>

#include "gallai/colouring.hpp"
#include "gallai/constructions.hpp"
#include "gallai/hypercube_like.hpp"
#include "gallai/tripartite.hpp"

namespace gallai {

// Text formats (ASCII decimal, LF line endings, ascending lexicographic
// edge order):
//   complete colouring:  "n k" then one line "u v c" per unordered pair u<v
//   host colouring:      "host", "n k", then one line per present edge
//   labelled graph:      "y V E", V lines "vertex label", E lines "u v"
//   clique host:         "t", "cliques C", then C lines of t sorted ids
//   3-AP-free set:       one integer per line
//   tripartite:          "tripartite n1 n2 n3" then "u v c" per cross edge
// Writers are byte-deterministic; readers are strict and reject out-of-order
// or incomplete input, so write-read round trips are exact.

std::string to_text(const CompleteColouring& c);
std::string to_text(const HostColouring& c);
std::string to_text(const HypercubeLikeGraph& g);
std::string to_text(const CliqueDecomposedHost& host);
std::string to_text(const ApFreeSet& s);
std::string to_text(const TripartiteColouring& c);

CompleteColouring complete_colouring_from_text(std::istream& in);
HostColouring host_colouring_from_text(std::istream& in);
HypercubeLikeGraph labelled_graph_from_text(std::istream& in);
CliqueDecomposedHost clique_host_from_text(std::istream& in);
ApFreeSet ap_free_set_from_text(std::istream& in);
TripartiteColouring tripartite_from_text(std::istream& in);

// Reads "host"-prefixed files as hosts and everything else as complete
// colourings; the bool is true when the file held a complete colouring.
std::pair<bool, std::string> sniff_colouring_kind(std::istream& in);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& bytes);

} // namespace gallai
