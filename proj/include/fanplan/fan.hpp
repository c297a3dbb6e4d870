#pragma once

#include <optional>
#include <vector>

#include "fanplan/drawing.hpp"

namespace fanplan {

// Assignment of a special vertex to every edge, witnessing fan-planarity:
// for every edge a, every edge crossing a is incident to special(a), and
// orienting the crossing edges toward special(a) gives one common sign for
// all crossings on a.
struct FanCertificate {
    IdMap<Id> special;

    bool operator==(const FanCertificate&) const = default;
};

enum class FanReason { no_common_endpoint, inconsistent_sides };

struct FanViolation {
    Id edge;
    FanReason reason;
    std::vector<Id> witness_edges;
    std::vector<Id> witness_crossings;
};

struct FanOutcome {
    std::optional<FanCertificate> cert;
    std::optional<FanViolation> violation;

    bool ok() const { return cert.has_value(); }
};

// Decides fan-planarity. Free special-vertex choices are resolved
// deterministically: prefer a vertex not incident to the edge, lowest
// identifier first. On failure reports the first offending edge in
// identifier order.
FanOutcome check_fan_planar(const Drawing& d);

// Re-chooses the special vertex of every edge whose constraint is vacuous or
// admits a non-incident choice; forced assignments are untouched. Also
// reports the edges left incident to their special vertex (the form the
// incident-special step consumes).
struct NormalizedCertificate {
    FanCertificate cert;
    std::vector<Id> incident_special_edges;
};
NormalizedCertificate normalize_special_vertices(const Drawing& d, const FanCertificate& cert);

// Keeps every still-valid special of `cert` and recomputes the rest. Used by
// the rewrite engine between steps, where stale but valid choices must
// survive (they schedule further incident-special steps). Throws
// internal_contradiction if some edge admits no special at all.
FanCertificate repair_certificate(const Drawing& d, const FanCertificate& cert);

// True iff `special` is a valid special vertex for edge e in d.
bool special_valid(const Drawing& d, const Id& e, const Id& special);

// The i-th crossing between f and e along f starting from the special vertex
// of e (which must be an endpoint of f).
Id ith_crossing(const Drawing& d, const FanCertificate& cert, const Id& f, const Id& e, int i);

// False with a witness triple of pairwise-crossing edges if one exists.
struct QuasiplanarityReport {
    bool quasiplanar = true;
    std::vector<Id> witness; // three pairwise crossing edges when not
};
QuasiplanarityReport is_3quasiplanar(const Drawing& d);

struct DensityReport {
    int n = 0;
    int m = 0;
    double bound = 0.0; // 6.5 n - 20
    bool satisfied = false;
};
DensityReport density_report(const Drawing& d);

} // namespace fanplan
