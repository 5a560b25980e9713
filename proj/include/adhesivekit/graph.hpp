#pragma once

#include <optional>
#include <string>
#include <vector>

#include "adhesivekit/finset.hpp"

namespace adk {

// A directed multigraph: abstract edge and node sets with source/target maps.
struct Graph {
  FinSet edges, nodes;
  FinFunction src, tgt;  // edges -> nodes

  Graph();
  Graph(FinSet edges, FinSet nodes, FinFunction src, FinFunction tgt);

  friend bool operator==(const Graph&, const Graph&) = default;
};

// Convenience builder: edge name -> (source, target).
Graph make_graph(std::vector<std::string> nodes,
                 const std::vector<std::pair<std::string, std::pair<std::string, std::string>>>& edges);

struct GraphMorphism {
  Graph dom, cod;
  FinFunction edge_map, node_map;

  GraphMorphism();
  GraphMorphism(Graph dom, Graph cod, FinFunction edge_map, FinFunction node_map);
  static GraphMorphism identity(const Graph& g);

  friend bool operator==(const GraphMorphism&, const GraphMorphism&) = default;
};

GraphMorphism compose(const GraphMorphism& g, const GraphMorphism& f);

// At most one edge for each ordered pair of nodes.
bool is_simple(const Graph& g);
bool is_acyclic(const Graph& g);
// A cycle as a list of edges (e1 ... ek) with tgt(ei) = src(ei+1), closing up.
std::optional<std::vector<std::string>> find_cycle(const Graph& g);

// Edges of g from v to w, in order.
std::vector<std::string> edges_between(const Graph& g, const std::string& v, const std::string& w);

// --- morphism predicates ----------------------------------------------------

bool is_mono_graph(const GraphMorphism& f);    // both components injective
bool is_iso_graph(const GraphMorphism& f);     // both components bijective
GraphMorphism invert_graph_iso(const GraphMorphism& f);
// For morphisms of simple graphs: injective on nodes (which forces edge
// injectivity).
bool is_mono_sgraph(const GraphMorphism& f);
// Whenever the codomain has an edge between images of two domain nodes, the
// domain already has an edge between them.
bool is_edge_reflecting(const GraphMorphism& f);
// Regular monos between simple graphs: injective and edge reflecting.
bool is_regular_mono_sgraph(const GraphMorphism& f);
// Mono such that every codomain edge pointing into the image is itself in the
// image.
bool is_downward_closed(const GraphMorphism& f);

// --- simplification (quotient by parallel edges) ----------------------------

struct Simplified {
  Graph graph;          // the simple quotient
  GraphMorphism unit;   // G -> quotient: class projection on edges, identity on nodes
};
Simplified simplify(const Graph& g);
// Action of simplification on morphisms.
GraphMorphism simplify_morphism(const GraphMorphism& f);

// --- (co)limits --------------------------------------------------------------

struct GraphPushout {
  Graph apex;
  GraphMorphism from_c;  // image of the m-side codomain
  GraphMorphism from_b;  // image of the f-side codomain
};
// Span C <-m- A -f-> B, computed componentwise in Set.
GraphPushout pushout_graph(const GraphMorphism& m, const GraphMorphism& f);
// Pushout of simple graphs: componentwise pushout followed by simplification.
GraphPushout pushout_sgraph(const GraphMorphism& m, const GraphMorphism& f);
// Pushout of dags: the simple pushout when it is acyclic; otherwise no
// pushout exists in the dag category and NoPushout is raised.
GraphPushout pushout_dag(const GraphMorphism& m, const GraphMorphism& f);

struct GraphPullback {
  Graph apex;
  GraphMorphism to_c;
  GraphMorphism to_b;
};
// Cospan C -g-> D <-n- B, computed componentwise (pairs that agree in D).
GraphPullback pullback_graph(const GraphMorphism& g, const GraphMorphism& n);
// Simple graphs and dags are closed under componentwise pullbacks; these
// wrappers assert the closure.
GraphPullback pullback_sgraph(const GraphMorphism& g, const GraphMorphism& n);
GraphPullback pullback_dag(const GraphMorphism& g, const GraphMorphism& n);

struct GraphEqualizer {
  Graph apex;
  GraphMorphism include;
};
GraphEqualizer equalizer_graph(const GraphMorphism& f, const GraphMorphism& g);

struct GraphProduct {
  Graph apex;
  GraphMorphism to_left, to_right;
};
GraphProduct product_graph(const Graph& a, const Graph& b);

struct GraphCoproduct {
  Graph apex;
  GraphMorphism from_left, from_right;
};
GraphCoproduct coproduct_graph(const Graph& a, const Graph& b);

// Witness that a regular mono of simple graphs is an equalizer: a parallel
// pair out of its codomain whose equalizer is exactly the image. The same
// construction stays inside dags when the codomain is acyclic.
struct GraphParallelPair {
  GraphMorphism first, second;  // H => K
};
GraphParallelPair sgraph_regularity_witness(const GraphMorphism& phi);

// --- enumeration helpers -----------------------------------------------------

std::vector<GraphMorphism> graph_homs(const Graph& a, const Graph& b);

// Equal keys iff isomorphic; minimises an edge-multiset encoding over all
// node permutations, so intended for small graphs only.
std::string graph_canonical_key(const Graph& g);

}  // namespace adk
