#include "graph.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

namespace gkm {

int MomentGraph::vertex_of(const WeylElement& min_rep) const {
  auto it = index_.find(min_rep);
  return it == index_.end() ? -1 : it->second;
}

int MomentGraph::coset_vertex(const WeylElement& w) const {
  int v = vertex_of(rs.minimal_rep(w, J));
  if (v < 0) throw std::logic_error("coset not present in moment graph");
  return v;
}

int MomentGraph::top_vertex() const {
  return vertex_count() - 1;  // canonical order puts the longest coset last
}

const std::vector<int>& MomentGraph::left_action(int i) const {
  if (i < 1 || i > rs.rank) throw UsageError("simple reflection index out of range");
  return left_action_.at(i - 1);
}

const std::vector<int>& MomentGraph::right_action(int i) const {
  if (!J.empty())
    throw UsageError("right multiplication acts on cosets only for the full flag graph");
  if (i < 1 || i > rs.rank) throw UsageError("simple reflection index out of range");
  return right_action_.at(i - 1);
}

void MomentGraph::finalize() {
  // Canonical vertex order is (length, word).  Vertices may only be sorted
  // while no edges reference their ids; afterwards the order is fixed.
  auto vertex_before = [](const GraphVertex& a, const GraphVertex& b) {
    if (a.coset.length != b.coset.length) return a.coset.length < b.coset.length;
    return a.word < b.word;
  };
  if (edges.empty()) {
    std::stable_sort(vertices.begin(), vertices.end(), vertex_before);
  } else {
    for (int v = 0; v + 1 < vertex_count(); ++v)
      if (vertex_before(vertices[v + 1], vertices[v]))
        throw std::logic_error("vertices out of canonical order with edges present");
  }
  index_.clear();
  for (int v = 0; v < vertex_count(); ++v) index_[vertices[v].coset.min_rep] = v;

  std::sort(edges.begin(), edges.end(), [](const GraphEdge& a, const GraphEdge& b) {
    if (a.src != b.src) return a.src < b.src;
    return a.dst < b.dst;
  });

  left_action_.assign(rs.rank, {});
  for (int i = 1; i <= rs.rank; ++i) {
    left_action_[i - 1].resize(vertex_count());
    for (int v = 0; v < vertex_count(); ++v) {
      WeylElement m = rs.minimal_rep(compose(rs.simple(i), vertices[v].coset.min_rep), J);
      int u = vertex_of(m);
      if (u < 0) throw std::logic_error("left action left the vertex set");
      left_action_[i - 1][v] = u;
    }
  }
  right_action_.clear();
  if (J.empty()) {
    right_action_.assign(rs.rank, {});
    for (int i = 1; i <= rs.rank; ++i) {
      right_action_[i - 1].resize(vertex_count());
      for (int v = 0; v < vertex_count(); ++v) {
        int u = vertex_of(compose(vertices[v].coset.min_rep, rs.simple(i)));
        if (u < 0) throw std::logic_error("right action left the group");
        right_action_[i - 1][v] = u;
      }
    }
  }
}

namespace {

GraphVertex make_vertex(const RootSystem& R, const ParabolicJ& J, const WeylElement& w) {
  GraphVertex v;
  v.coset.min_rep = w;
  v.coset.length = R.length(w);
  v.word = R.element_text(w);
  (void)J;
  return v;
}

struct EdgeAccumulator {
  std::map<std::pair<int, int>, GraphEdge> by_pair;

  void add(int src, int dst, const Root& label) {
    if (src == dst) throw std::logic_error("self edge in moment graph");
    std::pair<int, int> key = std::minmax(src, dst);
    auto it = by_pair.find(key);
    if (it == by_pair.end()) {
      by_pair.emplace(key, GraphEdge{src, dst, label});
      return;
    }
    const GraphEdge& have = it->second;
    if (have.src != src || have.dst != dst || !(have.label == label))
      throw std::logic_error("inconsistent duplicate edge between one vertex pair");
  }

  std::vector<GraphEdge> take() {
    std::vector<GraphEdge> out;
    out.reserve(by_pair.size());
    for (auto& [k, e] : by_pair) out.push_back(std::move(e));
    return out;
  }
};

}  // namespace

MomentGraph build_generic(const RootSystem& R, const ParabolicJ& J, const Limits& limits) {
  MomentGraph g;
  g.rs = R;
  g.J = J;
  std::vector<WeylElement> reps = enumerate_min_reps(R, J, limits);
  for (const WeylElement& w : reps) g.vertices.push_back(make_vertex(R, J, w));
  g.edges.clear();
  g.finalize();  // establishes canonical ids before edges are created

  std::vector<WeylElement> reflections;
  for (const Root& b : R.positive_roots) reflections.push_back(R.reflection(b));

  EdgeAccumulator acc;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const WeylElement& w = g.vertices[v].coset.min_rep;
    WeylElement winv = inverse(w);
    for (std::size_t k = 0; k < R.positive_roots.size(); ++k) {
      const Root& beta = R.positive_roots[k];
      Root x = apply(winv, beta);
      if (g.rs.in_levi_span(x, J)) continue;
      int u = g.vertex_of(R.minimal_rep(compose(reflections[k], w), J));
      if (u < 0) throw std::logic_error("reflection left the coset space");
      if (u == v) throw std::logic_error("reflection outside the Levi fixed a coset");
      bool v_is_longer = x.leading_sign() < 0;
      acc.add(v_is_longer ? v : u, v_is_longer ? u : v, beta);
    }
  }
  g.edges = acc.take();
  g.finalize();
  return g;
}

MomentGraph build_quotient(const MomentGraph& full, const ParabolicJ& J) {
  if (!full.J.empty())
    throw UsageError("quotient construction starts from the full flag graph");
  MomentGraph g;
  g.rs = full.rs;
  g.J = J;
  std::set<std::vector<int>> seen;
  std::vector<int> old_to_new(full.vertex_count(), -1);
  std::vector<WeylElement> reps(full.vertex_count());
  for (int v = 0; v < full.vertex_count(); ++v)
    reps[v] = g.rs.minimal_rep(full.vertices[v].coset.min_rep, J);
  for (int v = 0; v < full.vertex_count(); ++v) {
    if (seen.insert(reps[v].images).second) g.vertices.push_back(make_vertex(g.rs, J, reps[v]));
  }
  g.edges.clear();
  g.finalize();
  for (int v = 0; v < full.vertex_count(); ++v) old_to_new[v] = g.vertex_of(reps[v]);

  EdgeAccumulator acc;
  for (const GraphEdge& e : full.edges) {
    int s = old_to_new[e.src], d = old_to_new[e.dst];
    if (s == d) continue;  // collapsed inside one coset
    acc.add(s, d, e.label);
  }
  g.edges = acc.take();
  g.finalize();
  for (const GraphEdge& e : g.edges)
    if (g.vertices[e.src].coset.length <= g.vertices[e.dst].coset.length)
      throw std::logic_error("quotient edge direction disagrees with coset length");
  return g;
}

namespace {

Root normalize_positive(const RootSystem& R, Root r) {
  if (r.leading_sign() < 0) r = r.negated();
  if (!R.is_positive_root(r)) throw std::logic_error("edge label is not a root");
  return r;
}

}  // namespace

MomentGraph reconstruct_edges(const MomentGraph& g) {
  const RootSystem& R = g.rs;
  int V = g.vertex_count();

  // Matching of each simple reflection read off the alpha_i-labelled edges.
  std::vector<std::vector<int>> simple_perm(R.rank);
  for (int i = 0; i < R.rank; ++i) {
    simple_perm[i].resize(V);
    for (int v = 0; v < V; ++v) simple_perm[i][v] = v;
  }
  for (const GraphEdge& e : g.edges) {
    for (int i = 1; i <= R.rank; ++i) {
      if (!(e.label == R.alpha(i))) continue;
      std::vector<int>& p = simple_perm[i - 1];
      if ((p[e.src] != e.src && p[e.src] != e.dst) || (p[e.dst] != e.dst && p[e.dst] != e.src))
        throw std::logic_error("vertex carried by two edges of one simple reflection");
      p[e.src] = e.dst;
      p[e.dst] = e.src;
    }
  }

  // Close the set of (root, vertex permutation) pairs under conjugation by
  // the generators; transitivity of the edge relation does the rest.
  std::map<Root, std::vector<int>> refl;
  std::vector<Root> queue;
  for (int i = 1; i <= R.rank; ++i) {
    refl[R.alpha(i)] = simple_perm[i - 1];
    queue.push_back(R.alpha(i));
  }
  while (!queue.empty()) {
    Root a = queue.back();
    queue.pop_back();
    std::vector<int> perm = refl[a];
    for (int i = 1; i <= R.rank; ++i) {
      Root b = normalize_positive(R, apply(R.simple(i), a));
      const std::vector<int>& si = simple_perm[i - 1];
      std::vector<int> conj(V);
      for (int v = 0; v < V; ++v) conj[v] = si[perm[si[v]]];
      auto it = refl.find(b);
      if (it == refl.end()) {
        refl[b] = std::move(conj);
        queue.push_back(b);
      } else if (it->second != conj) {
        throw std::logic_error("conjugation produced inconsistent reflection actions");
      }
    }
  }
  if (refl.size() > R.positive_roots.size())
    throw std::logic_error("more reflection actions than positive roots");

  MomentGraph out = g;
  EdgeAccumulator acc;
  for (const GraphEdge& e : g.edges) acc.add(e.src, e.dst, e.label);
  for (const auto& [a, perm] : refl) {
    for (int v = 0; v < V; ++v) {
      int u = perm[v];
      if (u <= v) continue;
      int lv = g.vertices[v].coset.length, lu = g.vertices[u].coset.length;
      if (lv == lu) throw std::logic_error("reflection edge between equal lengths");
      acc.add(lv > lu ? v : u, lv > lu ? u : v, a);
    }
  }
  out.edges = acc.take();
  out.finalize();
  return out;
}

namespace {

struct BitGenerator {
  std::vector<std::pair<int, int>> swaps;  // 0-based position pairs, p < q
  Root label;
};

std::string apply_gen(const BitGenerator& gen, const std::string& b) {
  std::string r = b;
  for (auto [p, q] : gen.swaps) std::swap(r[p], r[q]);
  return r;
}

}  // namespace

MomentGraph build_bitstring(Family family, int k, int n_or_rank, const Limits& limits) {
  int rank = 0, N = 0;
  switch (family) {
    case Family::A:
      if (n_or_rank < 2 || k < 1 || k >= n_or_rank)
        throw UsageError("family A bit-string model needs 1 <= k < n");
      rank = n_or_rank - 1;
      N = n_or_rank;
      break;
    case Family::B:
      if (n_or_rank < 1 || k < 1 || k > n_or_rank)
        throw UsageError("family B bit-string model needs 1 <= k <= rank");
      rank = n_or_rank;
      N = 2 * rank + 1;
      break;
    case Family::C:
      if (n_or_rank < 1 || k < 1 || k > n_or_rank)
        throw UsageError("family C bit-string model needs 1 <= k <= rank");
      rank = n_or_rank;
      N = 2 * rank;
      break;
    case Family::D:
      if (n_or_rank < 2 || k < 1 || k > n_or_rank || k == n_or_rank - 1)
        throw UsageError("family D bit-string model needs k in 1..rank-2 or k = rank");
      rank = n_or_rank;
      N = 2 * rank;
      break;
  }
  RootSystem R = build_root_system(family, rank);

  std::vector<BitGenerator> gens;
  auto tswap = [](int p, int q) { return std::make_pair(p - 1, q - 1); };
  for (int i = 1; i <= rank; ++i) {
    BitGenerator gen;
    gen.label = R.alpha(i);
    if (family == Family::A) {
      gen.swaps = {tswap(i, i + 1)};
    } else if (i < rank) {
      int n2 = family == Family::B ? 2 * rank + 1 : 2 * rank;
      gen.swaps = {tswap(i, i + 1), tswap(n2 - i, n2 + 1 - i)};
      if (gen.swaps[0] > gen.swaps[1]) std::swap(gen.swaps[0], gen.swaps[1]);
    } else if (family == Family::B) {
      gen.swaps = {tswap(rank, rank + 2)};
    } else if (family == Family::C) {
      gen.swaps = {tswap(rank, rank + 1)};
    } else {
      gen.swaps = {tswap(rank - 1, rank + 1), tswap(rank, rank + 2)};
      std::sort(gen.swaps.begin(), gen.swaps.end());
    }
    gens.push_back(std::move(gen));
  }

  auto check_string = [&](const std::string& b) {
    int ones = static_cast<int>(std::count(b.begin(), b.end(), '1'));
    if (ones != k) throw std::logic_error("bit string with wrong weight");
    if (family == Family::B || family == Family::C || family == Family::D) {
      for (int p = 0; p < N / 2; ++p)
        if (b[p] == '1' && b[N - 1 - p] == '1')
          throw std::logic_error("isotropic bit string uses a mirror pair");
    }
    if (family == Family::B && b[rank] == '1')
      throw std::logic_error("family B bit string uses the middle position");
  };

  std::string base(N, '0');
  for (int i = 0; i < k; ++i) base[i] = '1';
  check_string(base);

  std::map<std::string, int> level;
  std::map<std::string, std::vector<std::string>> nbr;  // per generator, index by letter
  std::vector<std::string> frontier{base};
  level[base] = 0;
  std::vector<std::string> order{base};
  while (!frontier.empty()) {
    std::vector<std::string> next;
    for (const std::string& b : frontier) {
      auto& row = nbr[b];
      row.resize(rank);
      for (int i = 0; i < rank; ++i) {
        std::string c = apply_gen(gens[i], b);
        row[i] = c;
        if (!level.count(c)) {
          check_string(c);
          if (order.size() + 1 > limits.max_group_order)
            throw ResourceError("bit-string orbit exceeds cap");
          level[c] = level[b] + 1;
          order.push_back(c);
          next.push_back(c);
        }
      }
    }
    frontier = std::move(next);
  }
  // BFS levels are only a lower bound on word length a priori; the descent
  // walk below recomputes and cross-checks them.

  ParabolicJ J = [&] {
    std::vector<int> idx;
    int top = family == Family::A ? rank : rank;
    for (int i = 1; i <= top; ++i)
      if (i != k) idx.push_back(i);
    return ParabolicJ(idx, rank);
  }();

  // Greedy minimal word: always step along the smallest letter going down.
  std::map<std::string, WeylElement> elem;
  MomentGraph g;
  g.rs = R;
  g.J = J;
  for (const auto& [b, lev] : level) {
    std::vector<int> word;
    std::string cur = b;
    while (level[cur] > 0) {
      int pick = 0;
      for (int i = 1; i <= rank; ++i) {
        const std::string& c = nbr[cur][i - 1];
        if (level[c] == level[cur] - 1) {
          pick = i;
          break;
        }
      }
      if (pick == 0) throw std::logic_error("no descent from a positive-level bit string");
      word.push_back(pick);
      cur = nbr[cur][pick - 1];
    }
    WeylElement w = R.from_word(word);
    if (R.canonical_word(w) != word)
      throw std::logic_error("bit-string descent word is not the canonical word");
    if (!R.is_minimal_rep(w, J))
      throw std::logic_error("bit-string element is not a minimal representative");
    if (R.length(w) != lev) throw std::logic_error("bit-string level disagrees with length");
    elem[b] = w;
    GraphVertex v = make_vertex(R, J, w);
    v.bits = b;
    g.vertices.push_back(v);
  }
  g.edges.clear();
  g.finalize();

  // Simple edges, directed by the moved-pair rule: for every transposition
  // (p,q), p<q, that actually moves a bit, the longer end is the string whose
  // moved one sits at the later position q.
  EdgeAccumulator acc;
  for (const auto& [b, lev] : level) {
    for (int i = 1; i <= rank; ++i) {
      const std::string& c = nbr[b][i - 1];
      if (c == b) continue;
      int src_is_b = -1;
      for (auto [p, q] : gens[i - 1].swaps) {
        if (b[p] == b[q]) continue;
        int this_vote = b[q] == '1' ? 1 : 0;
        if (src_is_b >= 0 && src_is_b != this_vote)
          throw std::logic_error("generator moved two pairs in conflicting directions");
        src_is_b = this_vote;
      }
      if (src_is_b < 0) throw std::logic_error("generator changed nothing yet strings differ");
      const std::string& s = src_is_b ? b : c;
      const std::string& d = src_is_b ? c : b;
      if (level[s] != level[d] + 1)
        throw std::logic_error("edge direction disagrees with bit-string levels");
      acc.add(g.vertex_of(elem[s]), g.vertex_of(elem[d]), gens[i - 1].label);
    }
  }
  g.edges = acc.take();
  g.finalize();
  return reconstruct_edges(g);
}

bool graphs_equal(const MomentGraph& a, const MomentGraph& b) {
  if (a.rs.family != b.rs.family || a.rs.rank != b.rs.rank || !(a.J == b.J)) return false;
  if (a.vertex_count() != b.vertex_count() || a.edges.size() != b.edges.size()) return false;
  for (int v = 0; v < a.vertex_count(); ++v) {
    if (a.vertices[v].word != b.vertices[v].word) return false;
    if (a.vertices[v].coset.length != b.vertices[v].coset.length) return false;
    if (!(a.vertices[v].coset.min_rep == b.vertices[v].coset.min_rep)) return false;
  }
  for (std::size_t e = 0; e < a.edges.size(); ++e) {
    if (a.edges[e].src != b.edges[e].src || a.edges[e].dst != b.edges[e].dst) return false;
    if (!(a.edges[e].label == b.edges[e].label)) return false;
  }
  return true;
}

nlohmann::json graph_to_json(const MomentGraph& g) {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["family"] = family_name(g.rs.family);
  j["rank"] = g.rs.rank;
  j["parabolic"] = g.J.indices;
  nlohmann::json verts = nlohmann::json::array();
  for (int v = 0; v < g.vertex_count(); ++v) {
    nlohmann::json jv;
    jv["id"] = v;
    jv["word"] = g.vertices[v].word;
    jv["length"] = g.vertices[v].coset.length;
    if (!g.vertices[v].bits.empty()) jv["bits"] = g.vertices[v].bits;
    verts.push_back(std::move(jv));
  }
  j["vertices"] = std::move(verts);
  nlohmann::json edges = nlohmann::json::array();
  for (const GraphEdge& e : g.edges) {
    nlohmann::json je;
    je["src"] = e.src;
    je["dst"] = e.dst;
    je["label"] = root_text(e.label);
    edges.push_back(std::move(je));
  }
  j["edges"] = std::move(edges);
  return j;
}

namespace {

Root parse_root(const std::string& text, int dim) {
  Polynomial p = parse_polynomial(text, dim);
  Root r;
  r.coords.assign(dim, 0);
  for (const auto& [e, c] : p.terms()) {
    int var = -1;
    for (int i = 0; i < dim; ++i) {
      if (e[i] == 1 && var < 0)
        var = i;
      else if (e[i] != 0)
        throw UsageError("edge label is not a linear form: " + text);
    }
    if (var < 0 || !c.is_integer()) throw UsageError("edge label is not a root: " + text);
    r.coords[var] = static_cast<int>(c.num());
  }
  return r;
}

}  // namespace

MomentGraph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || j.value("schema_version", 0) != 1)
    throw UsageError("unsupported graph schema");
  Family fam = family_from_string(j.at("family").get<std::string>());
  int rank = j.at("rank").get<int>();
  MomentGraph g;
  g.rs = build_root_system(fam, rank);
  g.J = ParabolicJ(j.at("parabolic").get<std::vector<int>>(), rank);
  for (const auto& jv : j.at("vertices")) {
    GraphVertex v;
    v.word = jv.at("word").get<std::string>();
    v.coset.min_rep = g.rs.parse_element(v.word);
    v.coset.length = g.rs.length(v.coset.min_rep);
    if (v.coset.length != jv.at("length").get<int>())
      throw UsageError("vertex length disagrees with its word");
    if (jv.contains("bits")) v.bits = jv.at("bits").get<std::string>();
    g.vertices.push_back(std::move(v));
  }
  std::vector<GraphEdge> edges;
  for (const auto& je : j.at("edges")) {
    GraphEdge e;
    e.src = je.at("src").get<int>();
    e.dst = je.at("dst").get<int>();
    if (e.src < 0 || e.src >= g.vertex_count() || e.dst < 0 || e.dst >= g.vertex_count())
      throw UsageError("edge endpoint out of range");
    e.label = parse_root(je.at("label").get<std::string>(), g.rs.ambient_dim);
    edges.push_back(std::move(e));
  }
  g.edges = std::move(edges);
  for (int v = 0; v + 1 < g.vertex_count(); ++v) {
    const GraphVertex& a = g.vertices[v];
    const GraphVertex& b = g.vertices[v + 1];
    if (b.coset.length < a.coset.length ||
        (b.coset.length == a.coset.length && b.word < a.word))
      throw UsageError("vertices are not in canonical order");
  }
  g.finalize();
  return g;
}

std::string graph_to_dot(const MomentGraph& g) {
  std::string s = "digraph moment_graph {\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    const GraphVertex& gv = g.vertices[v];
    s += "  \"" + gv.word + "\"";
    if (!gv.bits.empty()) s += " [label=\"" + gv.word + "\\n" + gv.bits + "\"]";
    s += ";\n";
  }
  for (const GraphEdge& e : g.edges) {
    s += "  \"" + g.vertices[e.src].word + "\" -> \"" + g.vertices[e.dst].word +
         "\" [label=\"" + root_text(e.label) + "\"];\n";
  }
  s += "}\n";
  return s;
}

std::string graph_ref(const MomentGraph& g) {
  std::string dump = graph_to_json(g).dump();
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : dump) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace gkm
