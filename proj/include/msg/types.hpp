#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

namespace msg {

using TimeStep = std::int64_t;

/// Vertex handle. Ids are assigned monotonically by the graph and never
/// reused; 0 is reserved as "no vertex".
using VertexId = std::uint32_t;
inline constexpr VertexId kNoVertex = 0;

/// Opaque identity token produced by a face capture. Two tracklets belong to
/// the same person iff their labels compare equal.
struct TargetLabel {
    std::uint64_t token = 0;

    friend bool operator==(TargetLabel a, TargetLabel b) { return a.token == b.token; }
    friend bool operator!=(TargetLabel a, TargetLabel b) { return a.token != b.token; }
    friend bool operator<(TargetLabel a, TargetLabel b) { return a.token < b.token; }
};

/// One detector sample: where the tracked blob was at a given step.
struct Observation {
    TimeStep t = 0;
    double x = 0.0;
    double y = 0.0;
};

/// A maximal fragment of consecutive observations of one blob (a single
/// target or a group walking together). Within one tracker fragment the
/// samples are gap-free; tracklets merged across a blind gap keep a hole
/// where nothing was observed, and length() counts observed steps only.
class Tracklet {
public:
    Tracklet() = default;

    void append(const Observation& obs) {
        assert(open_);
        assert(obs_.empty() || obs.t > obs_.back().t);
        obs_.push_back(obs);
    }

    void close() { open_ = false; }
    bool is_open() const { return open_; }

    bool empty() const { return obs_.empty(); }
    std::int64_t length() const { return static_cast<std::int64_t>(obs_.size()); }

    TimeStep start() const { assert(!obs_.empty()); return obs_.front().t; }
    TimeStep end() const { assert(!obs_.empty()); return obs_.back().t; }

    const std::vector<Observation>& observations() const { return obs_; }

    /// Joins two fragments of the same underlying trajectory; b must start
    /// after a ends. The result is open iff b was open.
    static Tracklet concat(const Tracklet& a, const Tracklet& b) {
        assert(!a.obs_.empty() && !b.obs_.empty());
        assert(b.obs_.front().t > a.obs_.back().t);
        Tracklet out;
        out.obs_ = a.obs_;
        out.obs_.insert(out.obs_.end(), b.obs_.begin(), b.obs_.end());
        out.open_ = b.open_;
        return out;
    }

private:
    std::vector<Observation> obs_;
    bool open_ = true;
};

}  // namespace msg
