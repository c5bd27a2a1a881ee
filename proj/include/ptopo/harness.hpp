#ifndef PTOPO_HARNESS_HPP
#define PTOPO_HARNESS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ptopo/certificate.hpp"
#include "ptopo/frame.hpp"
#include "ptopo/labeling.hpp"

namespace ptopo {

struct GenParams {
    std::uint64_t seed = 1;
    int min_blobs = 1;
    int max_blobs = 6;
    double min_radius = 0.5;
    double max_radius = 1.2;
    Frame frame;

    void validate() const;
};

// Grows a connected union of overlapping disks (each new center inside the
// current union). Candidates whose sphere complement cannot be certified
// connected at h = min_radius/4 are regenerated, bounded retries.
// Deterministic per seed.
Scene random_compact(const GenParams& p);

// Scanline flood fill with an explicit stack; same partition semantics as
// label_components but structurally independent of union-find.
ComponentLabeling oracle_label(const RasterGrid& g, Side side);

struct ResolutionEntry {
    double h = 0.0;
    Certificate k_cert;
    Certificate l_cert;
    Certificate union_cert;
};

struct NeighborhoodSideCheck {
    bool built = false;
    double eps = 0.0;
    double h = 0.0;
    bool k_in_v = false;
    bool v_in_a = false;
    Verdict simply_connected = Verdict::undecided;
};

struct NeighborhoodCheck {
    NeighborhoodSideCheck k;
    NeighborhoodSideCheck l;
};

// "pass": both complements and the union complement certified connected at
// one resolution. "defect" would be a certified-disconnected union with
// certified preconditions; that configuration is mathematically impossible,
// so a defect always means an implementation bug and the instance is dumped.
struct Report {
    std::string verdict; // pass | precondition-violation | undecided | defect
    std::vector<ResolutionEntry> entries;
    std::optional<NeighborhoodCheck> neighborhoods;
    double elapsed_seconds = 0.0; // excluded from determinism comparisons
};

Report verify_union(const Scene& k, const Scene& l, const Frame& frame, double h0,
                    double floor_h, bool with_neighborhoods = false);

struct CampaignSummary {
    int instances = 0;
    int passed = 0;
    int undecided = 0;
    int precondition_violations = 0;
    int defects = 0;
    std::vector<std::string> defect_files;
};

// Runs verify_union on n generated disjoint pairs in a worker pool; the
// merge is by instance index, so parallel and serial runs summarize
// identically. Defect instances are serialized as re-runnable scene
// documents under defect_dir.
CampaignSummary fuzz_campaign(int n, const GenParams& p, const std::string& defect_dir,
                              int threads = 0);

} // namespace ptopo

#endif
