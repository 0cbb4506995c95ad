#pragma once

// Planar domains described slice by slice: for each radius r in (0, R) the set of
// polar angles theta with r (cos theta, sin theta) inside the domain.

#include <memory>
#include <string>
#include <vector>

namespace hardy {

/// Half-open angular interval [lo, hi) with 0 <= lo < hi <= 2 pi.
struct Arc {
    double lo;
    double hi;
};

/// Finite union of arcs, stored sorted and pairwise disjoint. Touching or
/// overlapping inputs are merged; intervals crossing 2 pi are split.
class ArcSet {
public:
    ArcSet() = default;
    explicit ArcSet(std::vector<Arc> arcs);

    static ArcSet full_circle();
    /// Arc of the given width centred at `center` (wrapped into [0, 2 pi)).
    static ArcSet centered(double center, double width);

    const std::vector<Arc>& arcs() const { return arcs_; }
    double measure() const;
    bool contains(double theta) const;
    bool empty() const { return arcs_.empty(); }
    bool is_full_circle() const;

private:
    std::vector<Arc> arcs_;
};

enum class DomainKind { Ball, BallWithCoreCutoff, AngularProfile, CuspDomain };

/// Radial band [r_lo, r_hi) on which the slice is a fixed arc set.
struct AngularBand {
    double r_lo;
    double r_hi;
    std::vector<Arc> arcs;
};

enum class CuspLaw { Constant, Quadratic, Calibrated };

/// Cusp-type profiles.
///
/// Constant and Quadratic are written in the origin frame: the slice at |x| = r is the
/// arc (a(r), pi - a(r)), with a(r) = a or a(r) = (pi - (1 - r)^2) / 2.
///
/// Calibrated is written in the tip frame y = (x1, 1 - x2), polar (rho, theta): the
/// domain is {rho < r0, a(rho) < theta < pi - a(rho)} with E(a(rho)) = E(a) / g(rho).
/// a(rho) is tabulated on log-spaced nodes and interpolated in log rho.
struct CuspProfile {
    CuspLaw law = CuspLaw::Constant;
    double a = 0.0;
    double r0 = 0.0;               // Calibrated only
    double E_a = 0.0;              // Calibrated only
    std::vector<double> rho;       // table nodes, increasing
    std::vector<double> angle;     // a(rho) at the nodes

    static CuspProfile constant(double a);
    static CuspProfile quadratic();
    static CuspProfile calibrated(double a, int nodes = 64);

    /// a(r) in the profile's own frame.
    double angle_at(double r) const;
    bool tip_frame() const { return law == CuspLaw::Calibrated; }
};

struct DomainSpec {
    DomainKind kind = DomainKind::Ball;
    double R = 1.0;
    bool contains_origin = true;
    double core_fraction = 0.0;             // BallWithCoreCutoff: removed ball has radius c R
    std::vector<AngularBand> bands;         // AngularProfile
    std::shared_ptr<const CuspProfile> cusp;

    static DomainSpec ball(double R = 1.0);
    static DomainSpec core_cutoff(double c, double R = 1.0);
    static DomainSpec angular(std::vector<AngularBand> bands, double R = 1.0);
    static DomainSpec half_disk(double R = 1.0);
    static DomainSpec cusp_domain(CuspProfile profile);

    /// Throws ConstructionError when an invariant fails.
    void validate() const;

    /// Angular slice at radius r in (0, R).
    ArcSet slice(double r) const;

    /// True when the tip-frame cusp description applies.
    bool tip_frame() const { return kind == DomainKind::CuspDomain && cusp && cusp->tip_frame(); }
};

std::string to_string(DomainKind kind);

/// m(r): one-dimensional measure of the slice at radius r (r times the total angular width).
double profile_measure(const DomainSpec& dom, double r);

struct LimsupOptions {
    int k_min = 5;
    int k_max = 20;
    double cap = 1e6;
};

struct LimsupEstimate {
    double value = 0.0;         // +infinity when the sequence exceeds the cap
    bool monotone_tail = false; // last five ratios non-increasing or non-decreasing
    std::vector<double> radii;
    std::vector<double> ratios;
};

/// limsup of m(r)/r on r_k = R 2^{-k}.
LimsupEstimate limsup_m0(const DomainSpec& dom, const LimsupOptions& opt = {});
/// limsup of m(r)/(R - r) on r_k = R (1 - 2^{-k}).
LimsupEstimate limsup_mR(const DomainSpec& dom, const LimsupOptions& opt = {});

enum class Regime { OriginInterior, InteriorSphere, StrictInequality, Attained, CuspNonattained, Unknown };

std::string to_string(Regime regime);

struct GeometryClassification {
    double m0 = 0.0;
    double mR = 0.0;
    Regime regime = Regime::Unknown;
};

/// Tolerance below which a numerical m_R counts as zero.
inline constexpr double kMRZeroTolerance = 1e-3;

GeometryClassification classify(const DomainSpec& dom, const LimsupOptions& opt = {});

}  // namespace hardy
