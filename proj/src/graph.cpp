#include "adhesivekit/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace adk {

Graph::Graph()
    : src(FinSet(), FinSet(), {}), tgt(FinSet(), FinSet(), {}) {}

Graph::Graph(FinSet edges_, FinSet nodes_, FinFunction src_, FinFunction tgt_)
    : edges(std::move(edges_)), nodes(std::move(nodes_)), src(std::move(src_)), tgt(std::move(tgt_)) {
  require(src.dom() == edges && tgt.dom() == edges, Err::InvalidValue,
          "source/target maps must be defined on the edge set");
  require(src.cod() == nodes && tgt.cod() == nodes, Err::InvalidValue,
          "source/target maps must land in the node set");
}

Graph make_graph(std::vector<std::string> nodes,
                 const std::vector<std::pair<std::string, std::pair<std::string, std::string>>>& edges) {
  FinSet vs(std::move(nodes));
  std::vector<std::string> es;
  std::map<std::string, std::string> sm, tm;
  for (const auto& [e, st] : edges) {
    es.push_back(e);
    sm.emplace(e, st.first);
    tm.emplace(e, st.second);
  }
  FinSet eset(std::move(es));
  return Graph(eset, vs, FinFunction(eset, vs, std::move(sm)), FinFunction(eset, vs, std::move(tm)));
}

GraphMorphism::GraphMorphism()
    : edge_map(FinSet(), FinSet(), {}), node_map(FinSet(), FinSet(), {}) {}

GraphMorphism::GraphMorphism(Graph dom_, Graph cod_, FinFunction edge_map_, FinFunction node_map_)
    : dom(std::move(dom_)), cod(std::move(cod_)),
      edge_map(std::move(edge_map_)), node_map(std::move(node_map_)) {
  require(edge_map.dom() == dom.edges && edge_map.cod() == cod.edges &&
              node_map.dom() == dom.nodes && node_map.cod() == cod.nodes,
          Err::DomainMismatch, "graph morphism components do not match the graphs");
  for (const auto& e : dom.edges.elements()) {
    bool ok = node_map.at(dom.src.at(e)) == cod.src.at(edge_map.at(e)) &&
              node_map.at(dom.tgt.at(e)) == cod.tgt.at(edge_map.at(e));
    require(ok, Err::NonCommuting, "edge '" + e + "' does not commute with src/tgt");
  }
}

GraphMorphism GraphMorphism::identity(const Graph& g) {
  return GraphMorphism(g, g, FinFunction::identity(g.edges), FinFunction::identity(g.nodes));
}

GraphMorphism compose(const GraphMorphism& g, const GraphMorphism& f) {
  require(f.cod == g.dom, Err::DomainMismatch, "graph morphisms do not compose");
  return GraphMorphism(f.dom, g.cod, compose(g.edge_map, f.edge_map),
                       compose(g.node_map, f.node_map));
}

bool is_simple(const Graph& g) {
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& e : g.edges.elements())
    if (!seen.insert({g.src.at(e), g.tgt.at(e)}).second) return false;
  return true;
}

std::optional<std::vector<std::string>> find_cycle(const Graph& g) {
  // DFS with tricolour marking; returns the edges of the first cycle found.
  std::map<std::string, int> state;  // 0 unseen, 1 on stack, 2 done
  std::map<std::string, std::vector<std::string>> out;
  for (const auto& e : g.edges.elements()) out[g.src.at(e)].push_back(e);
  std::vector<std::string> edge_stack, node_stack;
  std::optional<std::vector<std::string>> found;

  auto dfs = [&](auto&& self, const std::string& v) -> bool {
    state[v] = 1;
    node_stack.push_back(v);
    for (const auto& e : out[v]) {
      const std::string& w = g.tgt.at(e);
      if (state[w] == 1) {
        std::vector<std::string> cyc;
        auto it = std::find(node_stack.begin(), node_stack.end(), w);
        std::size_t start = std::size_t(it - node_stack.begin());
        for (std::size_t i = start; i < edge_stack.size(); ++i) cyc.push_back(edge_stack[i]);
        cyc.push_back(e);
        found = cyc;
        return true;
      }
      if (state[w] == 0) {
        edge_stack.push_back(e);
        if (self(self, w)) return true;
        edge_stack.pop_back();
      }
    }
    node_stack.pop_back();
    state[v] = 2;
    return false;
  };

  for (const auto& v : g.nodes.elements())
    if (state[v] == 0 && dfs(dfs, v)) return found;
  return std::nullopt;
}

bool is_acyclic(const Graph& g) { return !find_cycle(g).has_value(); }

std::vector<std::string> edges_between(const Graph& g, const std::string& v, const std::string& w) {
  std::vector<std::string> out;
  for (const auto& e : g.edges.elements())
    if (g.src.at(e) == v && g.tgt.at(e) == w) out.push_back(e);
  return out;
}

bool is_mono_graph(const GraphMorphism& f) {
  return is_injective(f.edge_map) && is_injective(f.node_map);
}

bool is_iso_graph(const GraphMorphism& f) {
  return is_bijective(f.edge_map) && is_bijective(f.node_map);
}

GraphMorphism invert_graph_iso(const GraphMorphism& f) {
  require(is_iso_graph(f), Err::InvalidValue, "not a graph isomorphism");
  return GraphMorphism(f.cod, f.dom, inverse(f.edge_map), inverse(f.node_map));
}

bool is_mono_sgraph(const GraphMorphism& f) {
  require(is_simple(f.dom) && is_simple(f.cod), Err::NotSimple,
          "mono test for simple graphs applied to a non-simple graph");
  return is_injective(f.node_map);
}

bool is_edge_reflecting(const GraphMorphism& f) {
  for (const auto& v : f.dom.nodes.elements())
    for (const auto& w : f.dom.nodes.elements()) {
      if (edges_between(f.dom, v, w).empty() &&
          !edges_between(f.cod, f.node_map.at(v), f.node_map.at(w)).empty())
        return false;
    }
  return true;
}

bool is_regular_mono_sgraph(const GraphMorphism& f) {
  require(is_simple(f.dom) && is_simple(f.cod), Err::NotSimple,
          "regularity test applied to a non-simple graph");
  return is_injective(f.node_map) && is_injective(f.edge_map) && is_edge_reflecting(f);
}

bool is_downward_closed(const GraphMorphism& f) {
  if (!is_mono_graph(f)) return false;
  FinSet img_nodes = image(f.node_map);
  FinSet img_edges = image(f.edge_map);
  for (const auto& e : f.cod.edges.elements())
    if (img_nodes.contains(f.cod.tgt.at(e)) && !img_edges.contains(e)) return false;
  return true;
}

Simplified simplify(const Graph& g) {
  if (is_simple(g)) return Simplified{g, GraphMorphism::identity(g)};
  std::map<std::pair<std::string, std::string>, std::vector<std::string>> by_ends;
  for (const auto& e : g.edges.elements()) by_ends[{g.src.at(e), g.tgt.at(e)}].push_back(e);
  std::vector<std::pair<std::string, std::string>> rel;
  for (const auto& [ends, es] : by_ends)
    for (std::size_t i = 1; i < es.size(); ++i) rel.emplace_back(es[0], es[i]);
  SetQuotient q = quotient_set(g.edges, rel);
  std::map<std::string, std::string> sm, tm;
  for (const auto& e : g.edges.elements()) {
    sm[q.project.at(e)] = g.src.at(e);
    tm[q.project.at(e)] = g.tgt.at(e);
  }
  Graph quo(q.classes, g.nodes, FinFunction(q.classes, g.nodes, std::move(sm)),
            FinFunction(q.classes, g.nodes, std::move(tm)));
  GraphMorphism unit(g, quo, q.project, FinFunction::identity(g.nodes));
  return Simplified{quo, unit};
}

GraphMorphism simplify_morphism(const GraphMorphism& f) {
  Simplified sd = simplify(f.dom), sc = simplify(f.cod);
  std::map<std::string, std::string> em;
  for (const auto& e : f.dom.edges.elements()) {
    std::string from = sd.unit.edge_map.at(e);
    std::string to = sc.unit.edge_map.at(f.edge_map.at(e));
    auto it = em.find(from);
    require(it == em.end() || it->second == to, Err::Internal,
            "simplification action not well defined");
    em.emplace(from, to);
  }
  return GraphMorphism(sd.graph, sc.graph,
                       FinFunction(sd.graph.edges, sc.graph.edges, std::move(em)),
                       f.node_map);
}

namespace {

// Install source/target maps on componentwise pushout/pullback data: every
// element of the new edge set receives the structure induced by any preimage;
// disagreement between preimages would mean the componentwise recipe is not
// natural and is reported as Internal.
Graph induced_graph(const FinSet& new_edges, const FinSet& new_nodes,
                    const std::vector<std::pair<const Graph*, std::pair<const FinFunction*, const FinFunction*>>>& parts) {
  std::map<std::string, std::string> sm, tm;
  for (const auto& [gp, maps] : parts) {
    const auto& [emap, nmap] = maps;
    for (const auto& e : gp->edges.elements()) {
      std::string ne = emap->at(e);
      std::string ns = nmap->at(gp->src.at(e));
      std::string nt = nmap->at(gp->tgt.at(e));
      auto its = sm.find(ne);
      require(its == sm.end() || its->second == ns, Err::Internal, "induced src disagrees");
      auto itt = tm.find(ne);
      require(itt == tm.end() || itt->second == nt, Err::Internal, "induced tgt disagrees");
      sm[ne] = ns;
      tm[ne] = nt;
    }
  }
  require(sm.size() == new_edges.size(), Err::Internal, "induced structure not total");
  return Graph(new_edges, new_nodes, FinFunction(new_edges, new_nodes, std::move(sm)),
               FinFunction(new_edges, new_nodes, std::move(tm)));
}

}  // namespace

GraphPushout pushout_graph(const GraphMorphism& m, const GraphMorphism& f) {
  require(m.dom == f.dom, Err::DomainMismatch, "pushout legs must share their domain");
  SetPushout pe = pushout_set(m.edge_map, f.edge_map);
  SetPushout pn = pushout_set(m.node_map, f.node_map);
  Graph apex = induced_graph(pe.apex, pn.apex,
                             {{&m.cod, {&pe.from_c, &pn.from_c}}, {&f.cod, {&pe.from_b, &pn.from_b}}});
  return GraphPushout{apex, GraphMorphism(m.cod, apex, pe.from_c, pn.from_c),
                      GraphMorphism(f.cod, apex, pe.from_b, pn.from_b)};
}

GraphPushout pushout_sgraph(const GraphMorphism& m, const GraphMorphism& f) {
  require(is_simple(m.dom) && is_simple(m.cod) && is_simple(f.cod), Err::NotSimple,
          "simple-graph pushout applied to a non-simple graph");
  GraphPushout po = pushout_graph(m, f);
  Simplified s = simplify(po.apex);
  return GraphPushout{s.graph, compose(s.unit, po.from_c), compose(s.unit, po.from_b)};
}

GraphPushout pushout_dag(const GraphMorphism& m, const GraphMorphism& f) {
  require(is_acyclic(m.dom) && is_acyclic(m.cod) && is_acyclic(f.cod), Err::InvalidValue,
          "dag pushout applied to a cyclic graph");
  GraphPushout po = pushout_sgraph(m, f);
  if (auto cyc = find_cycle(po.apex)) {
    std::string msg = "quotient contains the cycle";
    for (const auto& e : *cyc) msg += " " + e;
    msg += "; a cycle maps to a closed walk under any cocone, so no dag cocone exists";
    fail(Err::NoPushout, msg);
  }
  return po;
}

GraphPullback pullback_graph(const GraphMorphism& g, const GraphMorphism& n) {
  require(g.cod == n.cod, Err::DomainMismatch, "pullback legs must share their codomain");
  SetPullback pe = pullback_set(g.edge_map, n.edge_map);
  SetPullback pn = pullback_set(g.node_map, n.node_map);
  std::map<std::string, std::string> sm, tm;
  for (const auto& p : pe.apex.elements()) {
    const std::string& e1 = pe.to_c.at(p);
    const std::string& e2 = pe.to_b.at(p);
    sm.emplace(p, pair_token(g.dom.src.at(e1), n.dom.src.at(e2)));
    tm.emplace(p, pair_token(g.dom.tgt.at(e1), n.dom.tgt.at(e2)));
  }
  Graph apex(pe.apex, pn.apex, FinFunction(pe.apex, pn.apex, std::move(sm)),
             FinFunction(pe.apex, pn.apex, std::move(tm)));
  return GraphPullback{apex, GraphMorphism(apex, g.dom, pe.to_c, pn.to_c),
                       GraphMorphism(apex, n.dom, pe.to_b, pn.to_b)};
}

GraphPullback pullback_sgraph(const GraphMorphism& g, const GraphMorphism& n) {
  GraphPullback pb = pullback_graph(g, n);
  require(is_simple(pb.apex), Err::Internal, "pullback of simple graphs must be simple");
  return pb;
}

GraphPullback pullback_dag(const GraphMorphism& g, const GraphMorphism& n) {
  GraphPullback pb = pullback_graph(g, n);
  require(is_acyclic(pb.apex), Err::Internal, "pullback of dags must be acyclic");
  return pb;
}

GraphEqualizer equalizer_graph(const GraphMorphism& f, const GraphMorphism& g) {
  require(f.dom == g.dom && f.cod == g.cod, Err::DomainMismatch,
          "equalizer needs a parallel pair");
  SetEqualizer ee = equalizer_set(f.edge_map, g.edge_map);
  SetEqualizer en = equalizer_set(f.node_map, g.node_map);
  std::map<std::string, std::string> sm, tm;
  for (const auto& e : ee.apex.elements()) {
    sm.emplace(e, f.dom.src.at(e));
    tm.emplace(e, f.dom.tgt.at(e));
  }
  Graph apex(ee.apex, en.apex, FinFunction(ee.apex, en.apex, std::move(sm)),
             FinFunction(ee.apex, en.apex, std::move(tm)));
  return GraphEqualizer{apex, GraphMorphism(apex, f.dom, ee.include, en.include)};
}

GraphProduct product_graph(const Graph& a, const Graph& b) {
  SetProduct pe = product_set({a.edges, b.edges});
  SetProduct pn = product_set({a.nodes, b.nodes});
  std::map<std::string, std::string> sm, tm;
  for (const auto& p : pe.apex.elements()) {
    const std::string& e1 = pe.project[0].at(p);
    const std::string& e2 = pe.project[1].at(p);
    sm.emplace(p, tuple_token({a.src.at(e1), b.src.at(e2)}));
    tm.emplace(p, tuple_token({a.tgt.at(e1), b.tgt.at(e2)}));
  }
  Graph apex(pe.apex, pn.apex, FinFunction(pe.apex, pn.apex, std::move(sm)),
             FinFunction(pe.apex, pn.apex, std::move(tm)));
  return GraphProduct{apex, GraphMorphism(apex, a, pe.project[0], pn.project[0]),
                      GraphMorphism(apex, b, pe.project[1], pn.project[1])};
}

GraphCoproduct coproduct_graph(const Graph& a, const Graph& b) {
  SetCoproduct ce = coproduct_set({a.edges, b.edges});
  SetCoproduct cn = coproduct_set({a.nodes, b.nodes});
  Graph apex = induced_graph(ce.apex, cn.apex,
                             {{&a, {&ce.inject[0], &cn.inject[0]}}, {&b, {&ce.inject[1], &cn.inject[1]}}});
  return GraphCoproduct{apex, GraphMorphism(a, apex, ce.inject[0], cn.inject[0]),
                        GraphMorphism(b, apex, ce.inject[1], cn.inject[1])};
}

GraphParallelPair sgraph_regularity_witness(const GraphMorphism& phi) {
  require(is_regular_mono_sgraph(phi), Err::NotRegularMono,
          "witness construction needs an injective edge-reflecting morphism of simple graphs");
  const Graph& H = phi.cod;
  FinSet img_nodes = image(phi.node_map);
  FinSet img_edges = image(phi.edge_map);
  std::vector<std::string> extra_nodes, extra_edges;
  for (const auto& v : H.nodes.elements())
    if (!img_nodes.contains(v)) extra_nodes.push_back(v);
  for (const auto& e : H.edges.elements())
    if (!img_edges.contains(e)) extra_edges.push_back(e);
  SetCoproduct cn = coproduct_set({H.nodes, FinSet(extra_nodes)});
  SetCoproduct ce = coproduct_set({H.edges, FinSet(extra_edges)});

  // r folds H into the second copy wherever it misses the image
  std::map<std::string, std::string> rmap;
  for (const auto& v : H.nodes.elements())
    rmap.emplace(v, img_nodes.contains(v) ? cn.inject[0].at(v) : cn.inject[1].at(v));
  FinFunction r(H.nodes, cn.apex, std::move(rmap));

  std::map<std::string, std::string> sm, tm;
  for (const auto& e : H.edges.elements()) {
    sm.emplace(ce.inject[0].at(e), cn.inject[0].at(H.src.at(e)));
    tm.emplace(ce.inject[0].at(e), cn.inject[0].at(H.tgt.at(e)));
  }
  for (const auto& e : extra_edges) {
    sm.emplace(ce.inject[1].at(e), r.at(H.src.at(e)));
    tm.emplace(ce.inject[1].at(e), r.at(H.tgt.at(e)));
  }
  Graph K(ce.apex, cn.apex, FinFunction(ce.apex, cn.apex, std::move(sm)),
          FinFunction(ce.apex, cn.apex, std::move(tm)));
  require(is_simple(K), Err::Internal, "regularity witness must be simple");

  std::map<std::string, std::string> fe;
  for (const auto& e : H.edges.elements())
    fe.emplace(e, img_edges.contains(e) ? ce.inject[0].at(e) : ce.inject[1].at(e));
  GraphMorphism first(H, K, ce.inject[0], cn.inject[0]);
  GraphMorphism second(H, K, FinFunction(H.edges, ce.apex, std::move(fe)), r);
  return GraphParallelPair{first, second};
}

std::vector<GraphMorphism> graph_homs(const Graph& a, const Graph& b) {
  std::vector<GraphMorphism> out;
  if (!a.nodes.empty() && b.nodes.empty()) return out;
  const auto& av = a.nodes.elements();
  const auto& bv = b.nodes.elements();
  std::vector<std::size_t> pick(av.size(), 0);
  while (true) {
    std::map<std::string, std::string> nmap;
    for (std::size_t i = 0; i < av.size(); ++i) nmap.emplace(av[i], bv[pick[i]]);
    FinFunction nm(a.nodes, b.nodes, std::move(nmap));
    // candidate codomain edges for every domain edge under this node map
    std::vector<std::vector<std::string>> cands;
    bool feasible = true;
    for (const auto& e : a.edges.elements()) {
      cands.push_back(edges_between(b, nm.at(a.src.at(e)), nm.at(a.tgt.at(e))));
      if (cands.back().empty()) {
        feasible = false;
        break;
      }
    }
    if (feasible) {
      std::vector<std::size_t> epick(a.edges.size(), 0);
      while (true) {
        std::map<std::string, std::string> emap;
        for (std::size_t i = 0; i < a.edges.size(); ++i)
          emap.emplace(a.edges.elements()[i], cands[i][epick[i]]);
        out.emplace_back(a, b, FinFunction(a.edges, b.edges, std::move(emap)), nm);
        std::size_t k = a.edges.size();
        while (k > 0) {
          if (++epick[k - 1] < cands[k - 1].size()) break;
          epick[k - 1] = 0;
          --k;
        }
        if (k == 0) break;
      }
    }
    if (av.empty()) break;
    std::size_t k = av.size();
    while (k > 0) {
      if (++pick[k - 1] < bv.size()) break;
      pick[k - 1] = 0;
      --k;
    }
    if (k == 0) break;
  }
  return out;
}

std::string graph_canonical_key(const Graph& g) {
  const auto& vs = g.nodes.elements();
  std::vector<int> perm(vs.size());
  std::iota(perm.begin(), perm.end(), 0);
  auto node_index = [&](const std::string& v) {
    return int(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
  };
  std::string best;
  do {
    std::vector<std::pair<int, int>> enc;
    for (const auto& e : g.edges.elements())
      enc.emplace_back(perm[node_index(g.src.at(e))], perm[node_index(g.tgt.at(e))]);
    std::sort(enc.begin(), enc.end());
    std::string key = "n" + std::to_string(vs.size()) + ";";
    for (const auto& [s, t] : enc) key += std::to_string(s) + ">" + std::to_string(t) + ";";
    if (best.empty() || key < best) best = key;
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (best.empty()) best = "n0;";
  return best;
}

}  // namespace adk
