#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mbd/position.hpp"
#include "mbd/solver.hpp"

namespace mbd {

/// One rewrite application: which rule fired, the vertices it keyed on, what
/// was deleted/added, and the dense old->new index map (-1 = deleted).
struct TraceStep {
    std::string rule;
    std::vector<int> matched;
    std::vector<int> removed;     // pre-rewrite ids
    std::vector<int> added;       // post-rewrite ids
    std::vector<int> old_to_new;  // size = pre-rewrite vertex count
};

/// Audit log of a reduction run. Composing the step maps yields the
/// correspondence from surviving original vertices to final vertices.
struct ReductionTrace {
    std::vector<TraceStep> steps;

    /// original id -> final id, -1 once deleted. original_n is the vertex
    /// count the first step was applied to.
    std::vector<int> composed_map(int original_n) const;
};

struct RewriteResult {
    Position position;
    TraceStep step;
};

struct GraphRewrite {
    Graph graph;
    TraceStep step;
};

/// Removes one Staller vertex that already has a neighbor in D (its threat
/// and its claim are both spent). nullopt when no such vertex exists.
std::optional<RewriteResult> remove_dominated_staller_vertex(const Position& p);

/// Splits v in D: v disappears and every former neighbor gains a fresh
/// private leaf claimed by Dominator. Degrees of all other vertices are
/// unchanged. Throws InputError when v is not in D.
RewriteResult split_dominator_vertex(const Position& p, int v);

/// With Staller to move, an unclaimed leaf with an unclaimed support resolves
/// to a forced exchange; both vertices are removed. Winner with Staller to
/// move is preserved. nullopt when not Staller's turn or no such pair.
std::optional<RewriteResult> force_leaf_support(const Position& p);

/// Moves twin u into D and twin v into S (the checkable instance of the twin
/// exchange: N[u] = N[v] or N(u) = N(v) in the full graph, both unclaimed).
/// Throws InputError when the twin condition fails.
RewriteResult assign_twins(const Position& p, int u, int v);

/// Replaces module m (all unclaimed, 3 <= |m|) by P2 / two isolated
/// vertices / P3 according to o(G[m]) = D / S / N, rewired to the former
/// neighbors of m. nullopt when |m| < 3 or |m| > 14 (solver refusal).
/// Throws InputError when m is not a module.
std::optional<GraphRewrite> replace_module(const Graph& g, const std::vector<int>& m,
                                           const SearchConfig& cfg = {});

/// Same, with the module outcome already known (skips the solver call).
GraphRewrite replace_module(const Graph& g, const std::vector<int>& m, Outcome module_outcome);

/// Internal path shortening: `path` lists k >= 9 consecutive unclaimed
/// degree-2 vertices whose extremities attach to anchors outside the path;
/// two vertices are removed (k -> k-2). Claims in d_claimed must avoid the
/// path; Staller claims are not allowed anywhere.
std::optional<GraphRewrite> shorten_internal_path(const Graph& g, const std::vector<int>& path,
                                                  const std::vector<int>& d_claimed);

/// Pending path v1..vk hanging from an anchor, with only vk claimed and
/// vk in D: contracts k >= 4 to k = 3 (winner-preserving in both
/// directions for lengths >= 3). nullopt at the k = 3 boundary or when the
/// claim pattern does not match.
std::optional<RewriteResult> shorten_pending_path(const Position& p,
                                                  const std::vector<int>& path);

/// Outcome tables for graph composition.
Outcome compose_outcome_union(Outcome a, Outcome b);
Outcome compose_outcome_join(Outcome a, bool a_is_k1, Outcome b, bool b_is_k1);
Outcome compose_outcome_cluster(const ClusterProfile& profile); // InputError on non-cluster

/// A named rule for the fixpoint engine; apply returns nullopt when the rule
/// does not match the position.
struct RewriteRule {
    std::string name;
    std::function<std::optional<RewriteResult>(const Position&)> apply;
};

/// The catalog in default priority order: cheap local rules first, the
/// solver-invoking module replacement later.
/// remove_dominated_staller_vertex > force_leaf_support >
/// split_dominator_vertex (degree != 1) > replace_module (proper modules) >
/// shorten_internal_path.
std::vector<RewriteRule> default_rules(const SearchConfig& solver_cfg = {});

/// Twin assignment as an engine rule (first unclaimed twin pair in
/// lexicographic order); not part of the default priority list.
RewriteRule assign_twins_rule();

/// Applies rules in priority order until none matches. Every applied step is
/// recorded. Throws InconsistencyError if the run exceeds a generous step
/// cap (the catalog terminates; the cap guards against rule bugs).
std::pair<Position, ReductionTrace> reduce_fixpoint(Position p,
                                                    const std::vector<RewriteRule>& rules);

} // namespace mbd
