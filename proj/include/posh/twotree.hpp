#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "posh/book.hpp"
#include "posh/graph.hpp"

namespace posh {

// A 2-tree given by its stacking sequence. Vertices 0 and 1 span the base
// edge (edge 0); every vertex k >= 2 is stacked over parent(k) and creates
// edges 2k-3 (to the parent's first endpoint) and 2k-2 (to its second), so
// vertex 2 closes the initial triangle.
class TwoTree {
  public:
    TwoTree();  // the triangle
    // Throws DomainError unless parents[k] names an edge that exists before k.
    explicit TwoTree(std::vector<EdgeId> parents);

    VertexId stack(EdgeId parent);  // new vertex over an existing edge

    int num_vertices() const { return graph_.num_vertices(); }
    int num_edges() const { return graph_.num_edges(); }
    const MultiGraph& graph() const { return graph_; }
    // parent edge of each vertex, -1 for 0 and 1
    const std::vector<EdgeId>& parents() const { return parents_; }

    // vertices stacked over e
    std::vector<VertexId> stacked_on(EdgeId e) const;
    // edges created by stacking over e
    std::vector<EdgeId> created_over(EdgeId e) const;

  private:
    std::vector<EdgeId> parents_;
    MultiGraph graph_;
    std::vector<std::vector<VertexId>> stacked_;
};

// The 499-vertex 2-tree: 7 vertices over the base edge, 5 over each edge
// created by those, 3 over each edge created by the second level.
TwoTree build_counterexample();

struct CounterexampleAudit {
    int vertices = 0;
    int edges = 0;
    int base_stack = 0;             // |stacked_on(base)|
    std::vector<int> level_edges;   // edges created per stacking level (14, 140, 840)
    std::vector<int> level_stacks;  // stack size found on every edge of each level
    bool uniform = false;           // every edge of a level carries the same stack
    // the middle-part premise holds at the base edge and at all its children
    bool middle_premise_base = false;
    bool middle_premise_children = false;
    // lower bound on the left part that the right (<= 2) and middle (<= 3)
    // bounds leave: at the base edge and at a child with empty right part
    int forced_left_base = 0;
    int forced_left_child = 0;
};

// Recounts the stacking structure by walking stacked_on / created_over.
CounterexampleAudit audit_counterexample(const TwoTree& tt);

// Parts of the stack over e = (a, b), pos[a] < pos[b], by spine position.
struct StackPartition {
    std::vector<VertexId> left;    // before a
    std::vector<VertexId> middle;  // between a and b
    std::vector<VertexId> right;   // after b
};
StackPartition partition_stack(const TwoTree& tt, EdgeId e, const std::vector<int>& pos);

enum class SearchStatus { Found, NoneProven, Inconclusive };
std::string to_string(SearchStatus s);

struct SearchResult {
    SearchStatus status = SearchStatus::Inconclusive;
    std::optional<BookEmbedding> layout;
    std::int64_t nodes = 0;
};

// Crossing-free 2-page layout with all back arcs of each vertex on one page;
// edges between spine neighbours lie on the spine. Together with the spine
// and the closing edge v_n v_1 this is a one-sided Hamiltonian cycle.
// Throws DomainError on non-simple input.
SearchResult brute_force_posh(const MultiGraph& g, std::int64_t node_budget);

// Visits every such layout (both page choices for every vertex with back
// arcs); the visitor returns false to stop. Returns the status of the sweep:
// Found if anything was visited and the sweep completed, NoneProven if it
// completed empty, Inconclusive if stopped by the budget or the visitor.
SearchStatus for_each_posh_layout(const MultiGraph& g, std::int64_t node_budget,
                                  const std::function<bool(const BookEmbedding&)>& visit,
                                  std::int64_t* nodes = nullptr);

// Throws PreconditionError naming the problem if b is not such a layout.
void require_posh_layout(const BookEmbedding& b);

enum class Claim { RightAtMostTwo, MiddleAtMostThree, LeftEscape };
std::string to_string(Claim c);

struct ClaimViolation {
    Claim claim;
    EdgeId edge;
    std::vector<VertexId> witness;
};

struct ClaimReport {
    int edges_checked = 0;
    int middle_premise_edges = 0;  // edges whose children all carry >= 3
    int left_premise_edges = 0;    // edges with >= 2 vertices on the left
    std::vector<ClaimViolation> violations;
    bool ok() const { return violations.empty(); }
};

// The three stack claims on a valid layout of tt (tt's vertex ids):
//   right part of every stack has at most 2 vertices;
//   if every edge created over e carries >= 3, e's middle part has at most 3;
//   if e's left part has >= 2 vertices and x is the rightmost, the two edges
//   from x to e's ends have empty right parts and one has a left part <= 1.
// Throws PreconditionError if the layout is not valid.
ClaimReport check_claims(const TwoTree& tt, const BookEmbedding& layout);

// Canonical adjacency string: lexicographically smallest upper-triangle
// matrix over vertex orders sorted by decreasing degree.
std::string canonical_form(const MultiGraph& g);

// All 2-trees on n vertices up to isomorphism, one stacking sequence each.
std::vector<TwoTree> enumerate_two_trees(int n);

}  // namespace posh
