#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "msg/auxdata.hpp"
#include "msg/types.hpp"

namespace msg {

enum class VertexKind { Solo, Compound };

/// Why an edge exists. Join/Split edges come from directly observed group
/// events and force identity flow; Gap edges are matching candidates after a
/// blind gap, of which exactly one per child carries the true continuation.
enum class EdgeKind { Join, Split, Gap };

struct EdgeRef {
    VertexId id = kNoVertex;
    EdgeKind kind = EdgeKind::Gap;
};

struct Vertex {
    VertexId id = kNoVertex;
    VertexKind kind = VertexKind::Solo;
    int members = 1;  // targets walking together; always 1 for solo
    Tracklet tracklet;
    std::optional<TargetLabel> label;
    std::vector<EdgeRef> parents;   // insertion order
    std::vector<EdgeRef> children;  // insertion order
    AuxData aux;

    bool solo() const { return kind == VertexKind::Solo; }
    bool labeled() const { return label.has_value(); }
    bool open() const { return tracklet.is_open(); }
    /// Still the current representative of its blob: nothing continues it.
    bool active() const { return children.empty(); }

    std::int64_t tracklet_len() const { return tracklet.length(); }
    bool has_parent(VertexId p) const;
    bool has_child(VertexId c) const;
};

/// Result of applying a fresh label to a vertex.
struct MatchOutcome {
    enum class Kind { None, Direct, Indirect };
    Kind kind = Kind::None;
    /// The earlier vertex this label was matched to (direct: equal label;
    /// indirect: deduced by elimination).
    VertexId matched = kNoVertex;
    bool untangled = false;
    /// Match recorded but untangling postponed (non-DAG component or the
    /// connecting unlabeled path is not unique); retried automatically after
    /// later structural changes.
    bool deferred = false;
    /// Live id of the labeled vertex after any chain merges.
    VertexId vertex = kNoVertex;
};

struct GraphStats {
    std::uint64_t vertices_created = 0;
    /// Number of per-vertex aux recomputations (each writes the full record).
    std::uint64_t aux_writes = 0;
    /// Reads through the public aux() accessor (how schedulers consume it).
    std::uint64_t aux_reads = 0;
    std::uint64_t untangles = 0;
    std::uint64_t untangles_deferred = 0;
    std::uint64_t chain_merges = 0;
};

/// Association graph over tracklets. Solo vertices hold a single walking
/// target, compound vertices a group; edges connect a tracklet to its
/// possible continuations. The graph is built strictly forward in time by
/// the four event operations, labels trigger identity deduction and
/// untangling, and every vertex carries incrementally maintained AuxData.
class MSGraph {
public:
    struct Config {
        /// Largest admissible observation hole between a candidate's last
        /// sample and its continuation's first sample.
        TimeStep max_gap_window = 7;
        /// Debug switch: when false, matches are recorded but the structure
        /// is never rewritten.
        bool untangling = true;
    };

    MSGraph() = default;
    explicit MSGraph(Config cfg) : cfg_(cfg) {}

    // --- event operations -------------------------------------------------

    /// New target entering the scene: an open, parentless solo vertex.
    /// Feed its samples with observe().
    VertexId add_solo_vertex();

    /// Observed group formation. All parents must be active; open parents
    /// are closed. Returns the new open compound vertex.
    /// Throws std::invalid_argument if a parent is not active or fewer than
    /// two parents are given.
    VertexId record_join(std::span<const VertexId> parents);

    /// Observed group break-up into way_count blobs of the given member
    /// shares. The compound must be active; shares must be positive and sum
    /// to its member count (throws std::invalid_argument otherwise).
    /// Returns the new open children (solo when share == 1).
    std::vector<VertexId> record_split(VertexId compound, std::span<const int> shares);

    /// Wires a reappeared blob to its matching candidates after a blind gap.
    /// `fresh` must have no parents yet and at least one observation;
    /// every candidate must be closed, precede fresh, and lie within
    /// max_gap_window (throws std::invalid_argument otherwise). A single
    /// candidate of matching kind is a univocal continuation and the chain
    /// merges; several candidates form an X-type ambiguity.
    /// Returns the live id of fresh (changed if merged).
    VertexId add_ambiguity_edges(VertexId fresh, std::span<const VertexId> candidates);

    /// Applies a fresh identity to a solo vertex, then runs deduction:
    /// direct match against labeled origins, elimination via the stored
    /// candidate otherwise, untangling on success.
    /// Throws std::logic_error if v is compound or already labeled.
    MatchOutcome label_vertex(VertexId v, TargetLabel label);

    /// Appends a sample to an open vertex.
    void observe(VertexId v, const Observation& obs);

    /// Closes an open vertex's tracklet (target exited or hidden by a gap).
    void close_vertex(VertexId v);

    // --- deduction & restructuring ----------------------------------------

    /// Elimination candidate for labeling v: the stored candidate when it is
    /// a live, unlabeled vertex other than v; kNoVertex otherwise.
    VertexId indirect_match(VertexId v) const;

    /// Rewrites the graph so the matched pair (u earlier, v later, same
    /// target) becomes part of one labeled solo chain: prunes refuted
    /// ambiguity edges of path solos, splits path compounds into the
    /// matched member and a remainder, repairs aux data and merges chains.
    /// Returns false when postponed (non-DAG component or non-unique path);
    /// the pair is then queued for retry.
    bool untangle(VertexId u, VertexId v);

    /// Collapses the maximal univocal chain (single child / single parent,
    /// same kind, equal members) containing v into one vertex with a fresh
    /// id. Returns the live id (v itself when there is nothing to merge).
    VertexId merge_chain_at(VertexId v);

    /// True if the weakly connected component containing v has no directed
    /// cycle. Always true for event-built graphs; fixtures can violate it.
    bool is_dag(VertexId v) const;
    bool is_dag() const;

    // --- access ------------------------------------------------------------

    bool has_vertex(VertexId v) const { return live_.count(v) != 0; }
    const Vertex& vertex(VertexId v) const;
    /// AuxData accessor for consumers (schedulers); reads are counted so
    /// tests can prove a code path never touches aux state.
    const AuxData& aux(VertexId v) const;

    /// Follows merge/split retirements to the current live id.
    VertexId resolve(VertexId v) const;

    const std::map<VertexId, Vertex>& vertices() const { return live_; }
    std::vector<VertexId> open_vertices() const;
    const std::vector<std::pair<VertexId, VertexId>>& pending_matches() const {
        return pending_;
    }

    const GraphStats& stats() const { return stats_; }
    const Config& config() const { return cfg_; }
    void set_untangling(bool enabled) { cfg_.untangling = enabled; }

    /// Weakly connected component containing v (live ids, sorted).
    std::vector<VertexId> component(VertexId v) const;

    /// Checks structural invariants (edge symmetry, member counts, label
    /// placement, temporal order); throws std::logic_error on violation.
    void check_consistency() const;

    // --- fixture support ---------------------------------------------------

    /// Direct vertex insertion for tests and builders. Parents must already
    /// exist; aux data of the new vertex and of any sibling whose chain
    /// status changed is recomputed. The tracklet may be empty.
    VertexId insert_vertex_raw(VertexKind kind, int members, Tracklet tracklet,
                               std::span<const EdgeRef> parents,
                               std::optional<TargetLabel> label = std::nullopt);

    /// Adds an edge with no checks and no aux repair (cycle fixtures).
    void add_edge_unchecked(VertexId parent, VertexId child, EdgeKind kind);

private:
    friend std::map<VertexId, AuxData> recompute_from_scratch(const MSGraph&);

    Vertex& mut_(VertexId v);
    VertexId fresh_id_() { return next_id_++; }
    VertexId create_(VertexKind kind, int members);

    std::vector<ParentState> parent_states_(const Vertex& v) const;
    void set_aux_(Vertex& v, const AuxData& a);
    void recompute_one_(VertexId v);
    /// Recomputes seeds and all their descendants in topological order.
    void recompute_affected_(const std::vector<VertexId>& seeds);

    void link_(VertexId parent, VertexId child, EdgeKind kind);
    void unlink_(VertexId parent, VertexId child);

    /// Nearest labeled origin of v carrying `label`, reachable backward
    /// through unlabeled vertices; kNoVertex if none.
    VertexId find_direct_match_(VertexId v, TargetLabel label) const;

    /// Number of u->v paths whose interior is unlabeled (capped at 2, only
    /// zero/one/many matters); path written out when unique.
    std::uint64_t count_unlabeled_paths_(VertexId u, VertexId v,
                                         std::vector<VertexId>* path) const;

    bool try_untangle_(VertexId u, VertexId v);
    void retry_pending_();
    void queue_match_(VertexId u, VertexId v);

    VertexId merge_run_(const std::vector<VertexId>& run);
    bool chain_linked_(const Vertex& a, const Vertex& b) const;
    void merge_sweep_(std::vector<VertexId> seeds);

    Config cfg_;
    std::map<VertexId, Vertex> live_;
    std::map<VertexId, VertexId> retired_;
    std::vector<std::pair<VertexId, VertexId>> pending_;
    VertexId next_id_ = 1;
    GraphStats stats_;
    bool in_retry_ = false;
};

}  // namespace msg
