#include "msg/auxdata.hpp"

#include <cassert>
#include <stdexcept>

#include "msg/graph.hpp"

namespace msg {

std::uint64_t direct_gain(const AuxData& aux, bool labeled, std::int64_t len, bool refined) {
    if (labeled) return 0;
    const std::uint64_t own = static_cast<std::uint64_t>(len);
    if (refined) {
        assert(aux.n_chains <= aux.n_labeled());
        return own * (aux.n_labeled() - aux.n_chains) + aux.gain_direct_parents;
    }
    return own * aux.n_labeled() + aux.gain_direct_parents_plain;
}

std::uint64_t indirect_gain(const AuxData& aux, bool labeled, std::int64_t len) {
    if (labeled) return 0;
    return static_cast<std::uint64_t>(len) * aux.n_unlabeled + aux.gain_indirect_parent;
}

AuxSnapshot evaluate(const AuxData& aux, bool labeled, std::int64_t len) {
    AuxSnapshot s;
    s.n_unlabeled = aux.n_unlabeled;
    s.n_origins = aux.n_origins;
    s.n_labeled = aux.n_labeled();
    s.sole_parent = aux.sole_parent;
    s.candidate = aux.candidate;
    s.n_chains = aux.n_chains;
    s.gain_direct = direct_gain(aux, labeled, len, /*refined=*/true);
    s.gain_direct_plain = direct_gain(aux, labeled, len, /*refined=*/false);
    s.gain_indirect = indirect_gain(aux, labeled, len);
    return s;
}

AuxData compute_aux(VertexId self, bool self_labeled, bool self_solo,
                    std::span<const ParentState> parents) {
    AuxData a;

    // sole_parent depends on parents only, never on the vertex's own label.
    int unresolved_parents = 0;
    for (const ParentState& p : parents) {
        if (p.aux->n_unlabeled > 0) {
            ++unresolved_parents;
            a.sole_parent = p.id;
        }
    }
    if (unresolved_parents != 1) a.sole_parent = kNoVertex;

    if (self_labeled) {
        // A label answers every identity question about this vertex; it
        // becomes an origin and the root of its own labeling chain.
        a.n_unlabeled = 0;
        a.n_origins = 1;
        a.n_chains = 1;
        a.candidate = kNoVertex;
        return a;
    }

    if (parents.empty()) {
        // Unlabeled source: one unresolved identity, itself the candidate.
        a.n_unlabeled = 1;
        a.n_origins = 1;
        a.n_chains = 0;
        a.candidate = self_solo ? self : kNoVertex;
        return a;
    }

    a.n_unlabeled = 0;
    a.n_origins = 0;
    a.n_chains = 0;
    a.gain_direct_parents = 0;
    a.gain_direct_parents_plain = 0;
    for (const ParentState& p : parents) {
        a.n_unlabeled += p.aux->n_unlabeled;
        a.n_origins += p.aux->n_origins;
        if (p.single_child) a.n_chains += p.aux->n_chains;
        a.gain_direct_parents += direct_gain(*p.aux, p.labeled, p.tracklet_len, true);
        a.gain_direct_parents_plain += direct_gain(*p.aux, p.labeled, p.tracklet_len, false);
    }
    assert(a.n_chains <= a.n_labeled());

    if (a.n_unlabeled == 0) {
        a.candidate = kNoVertex;
    } else if (a.sole_parent != kNoVertex) {
        const ParentState* sp = nullptr;
        for (const ParentState& p : parents)
            if (p.id == a.sole_parent) sp = &p;
        assert(sp != nullptr);
        a.gain_indirect_parent = indirect_gain(*sp->aux, sp->labeled, sp->tracklet_len);
        // Inherit the spine's candidate; if the spine bottomed out in a
        // compound merge point, this vertex restarts the candidacy.
        a.candidate = sp->aux->candidate != kNoVertex
                          ? sp->aux->candidate
                          : (self_solo ? self : kNoVertex);
    } else {
        // Several unresolved strands merge here: only this vertex itself can
        // stand for all of them, and only if it is solo.
        a.candidate = self_solo ? self : kNoVertex;
    }
    return a;
}

std::map<VertexId, AuxData> recompute_from_scratch(const MSGraph& graph) {
    std::map<VertexId, AuxData> fresh;
    std::map<VertexId, std::size_t> pending_parents;
    std::vector<VertexId> ready;

    for (const auto& [id, v] : graph.vertices()) {
        pending_parents[id] = v.parents.size();
        if (v.parents.empty()) ready.push_back(id);
    }

    std::size_t done = 0;
    while (!ready.empty()) {
        VertexId id = ready.back();
        ready.pop_back();
        const Vertex& v = graph.vertex(id);

        std::vector<ParentState> ps;
        ps.reserve(v.parents.size());
        for (const EdgeRef& e : v.parents) {
            const Vertex& p = graph.vertex(e.id);
            ps.push_back(ParentState{p.id, p.labeled(), p.tracklet_len(),
                                     p.children.size() == 1, &fresh.at(p.id)});
        }
        fresh[id] = compute_aux(id, v.labeled(), v.solo(), ps);
        ++done;

        for (const EdgeRef& c : v.children) {
            auto it = pending_parents.find(c.id);
            if (it != pending_parents.end() && --it->second == 0) ready.push_back(c.id);
        }
    }

    if (done != graph.vertices().size())
        throw std::logic_error("recompute_from_scratch: graph contains a cycle");
    return fresh;
}

}  // namespace msg
