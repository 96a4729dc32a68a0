#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "poly.hpp"
#include "roots.hpp"
#include "util.hpp"

namespace gkm {

struct GraphVertex {
  Coset coset;
  std::string word;  // canonical text of coset.min_rep
  std::string bits;  // bit-string tag when built from one; empty otherwise
};

struct GraphEdge {
  int src = 0;  // longer end
  int dst = 0;  // shorter end
  Root label;   // positive root
};

// Moment graph of a partial flag variety: vertices are the minimal coset
// representatives W^J ordered by (length, canonical word); each edge joins
// [w] and [s_a w] for a positive root a outside the Levi span and points
// from the longer coset to the shorter one.
class MomentGraph {
 public:
  RootSystem rs;
  ParabolicJ J;
  std::vector<GraphVertex> vertices;
  std::vector<GraphEdge> edges;

  int vertex_count() const { return static_cast<int>(vertices.size()); }
  // Id of the vertex with this exact minimal representative; -1 when absent.
  int vertex_of(const WeylElement& min_rep) const;
  // Id of the vertex holding the coset of an arbitrary element.
  int coset_vertex(const WeylElement& w) const;
  int top_vertex() const;  // unique maximal-length vertex

  // left_action(i)[v] = vertex of [s_i w_v].
  const std::vector<int>& left_action(int i) const;
  // right_action(i)[v] = vertex of w_v s_i; full flag graphs only.
  const std::vector<int>& right_action(int i) const;

  // Sorts vertices/edges canonically and builds the lookup tables.
  void finalize();

 private:
  std::unordered_map<WeylElement, int, WeylHash> index_;
  std::vector<std::vector<int>> left_action_;
  std::vector<std::vector<int>> right_action_;
};

MomentGraph build_generic(const RootSystem& R, const ParabolicJ& J, const Limits& limits = {});

// Collapse a full flag graph by the parabolic W_J.
MomentGraph build_quotient(const MomentGraph& full, const ParabolicJ& J);

// Bit-string model: family A takes (k, n) for k-planes in C^n; families
// B/C/D take (k, rank).
MomentGraph build_bitstring(Family family, int k, int n_or_rank, const Limits& limits = {});

// Complete a graph containing only the simple-reflection edges by closing
// the generator matchings under conjugation.  Edges already present are
// checked for consistency and kept.
MomentGraph reconstruct_edges(const MomentGraph& g);

bool graphs_equal(const MomentGraph& a, const MomentGraph& b);

nlohmann::json graph_to_json(const MomentGraph& g);
MomentGraph graph_from_json(const nlohmann::json& j);
std::string graph_to_dot(const MomentGraph& g);
// Stable content hash used to pin class files to their graph.
std::string graph_ref(const MomentGraph& g);

}  // namespace gkm
