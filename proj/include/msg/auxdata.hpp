#pragma once

#include <cstdint>
#include <map>
#include <span>

#include "msg/types.hpp"

namespace msg {

class MSGraph;

/// Per-vertex bookkeeping that lets the scheduler and the identity-deduction
/// logic answer global questions (how many candidate identities flow into a
/// vertex, who the unique unresolved predecessor is, how much trajectory a
/// labeling would resolve) from the vertex and its parents alone, with no
/// graph traversal.
///
/// Every count is over *paths*, not distinct vertices: a diamond between a
/// source and a vertex contributes two origin paths. The recursions only ever
/// read parent values, so inserting a vertex or replaying a local change is
/// O(parents).
///
/// The two trajectory-gain fields depend on the vertex's own tracklet length,
/// which grows while the tracklet is open. Only the parent-side partial sums
/// are stored; direct_gain()/indirect_gain() plug the current length in, so
/// open vertices never need re-propagation as they grow.
struct AuxData {
    /// Number of paths from unlabeled source solo vertices that reach this
    /// vertex without passing through any labeled vertex. 0 for labeled
    /// vertices: a label resolves every identity question about its vertex.
    std::uint64_t n_unlabeled = 0;

    /// Number of paths from origins (labeled vertices or unlabeled sources)
    /// that reach this vertex without an interior labeled vertex. Labeled
    /// vertices and sources count themselves: n_origins = 1.
    std::uint64_t n_origins = 1;

    /// The unique parent with n_unlabeled > 0, or kNoVertex when the vertex
    /// has zero or several such parents. Unresolved identity, if any, flows
    /// in through this parent alone.
    VertexId sole_parent = kNoVertex;

    /// Deduction candidate: the unlabeled solo vertex that every unresolved
    /// identity path into this vertex passes through (kNoVertex if none).
    /// When a fresh label fails to match any labeled origin, the candidate is
    /// the tracklet the new identity can be attributed to by elimination.
    VertexId candidate = kNoVertex;

    /// Number of labeling chains covering this vertex: labeled ancestors
    /// whose continuation is forced (every hop is a single child), so their
    /// identity already extends to this tracklet without a new capture.
    /// Labeled vertices start their own chain: n_chains = 1.
    std::uint64_t n_chains = 0;

    /// Parent-side partial sums of the direct-match gain (trajectory length a
    /// direct match of this vertex would newly resolve). The plain variant
    /// skips the chain refinement and over-counts already-covered tracklets.
    std::uint64_t gain_direct_parents = 0;
    std::uint64_t gain_direct_parents_plain = 0;

    /// Indirect-gain carry: the unlabeled-trajectory total of sole_parent
    /// (0 when sole_parent is kNoVertex).
    std::uint64_t gain_indirect_parent = 0;

    std::uint64_t n_labeled() const { return n_origins - n_unlabeled; }
};

/// What the recursions need to know about one parent. `single_child` is
/// evaluated against the parent's current child set (a parent with no or
/// several children does not force its continuation).
struct ParentState {
    VertexId id = kNoVertex;
    bool labeled = false;
    std::int64_t tracklet_len = 0;
    bool single_child = false;
    const AuxData* aux = nullptr;
};

/// Recomputes a vertex's AuxData from its parents alone. Used for insertion,
/// labeling (self_labeled flips to true, parents unchanged) and local repair
/// after structural edits; callers propagate to descendants in topological
/// order. `self_solo` decides whether the vertex can be its own deduction
/// candidate.
AuxData compute_aux(VertexId self, bool self_labeled, bool self_solo,
                    std::span<const ParentState> parents);

/// Direct-match gain with the vertex's current tracklet length plugged in.
/// `refined` subtracts tracklets already covered by labeling chains and is
/// what the scheduler uses; the plain variant keeps the uncorrected sum.
std::uint64_t direct_gain(const AuxData& aux, bool labeled, std::int64_t len, bool refined);

/// Unlabeled-trajectory total along the sole_parent spine, with the vertex's
/// current tracklet length plugged in.
std::uint64_t indirect_gain(const AuxData& aux, bool labeled, std::int64_t len);

/// Fully evaluated view of one vertex's auxiliary state, for exact
/// comparisons between the incrementally maintained data and an
/// independently recomputed copy.
struct AuxSnapshot {
    std::uint64_t n_unlabeled = 0;
    std::uint64_t n_origins = 0;
    std::uint64_t n_labeled = 0;
    VertexId sole_parent = kNoVertex;
    VertexId candidate = kNoVertex;
    std::uint64_t n_chains = 0;
    std::uint64_t gain_direct = 0;
    std::uint64_t gain_direct_plain = 0;
    std::uint64_t gain_indirect = 0;

    friend bool operator==(const AuxSnapshot& a, const AuxSnapshot& b) = default;
};

AuxSnapshot evaluate(const AuxData& aux, bool labeled, std::int64_t len);

/// Testing oracle: recomputes every vertex's AuxData by a full topological
/// pass over the graph, ignoring all incrementally maintained values.
/// Throws std::logic_error if the graph contains a cycle.
std::map<VertexId, AuxData> recompute_from_scratch(const MSGraph& graph);

}  // namespace msg
