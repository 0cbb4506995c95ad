#include "hardy/domain.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hardy/error.hpp"
#include "hardy/oned.hpp"
#include "hardy/weight.hpp"

namespace hardy {

namespace {
constexpr double pi = std::numbers::pi;
constexpr double two_pi = 2.0 * std::numbers::pi;
}  // namespace

// ---- ArcSet -------------------------------------------------------------------

ArcSet::ArcSet(std::vector<Arc> arcs) {
    std::vector<Arc> pieces;
    for (const Arc& a : arcs) {
        if (!(a.hi > a.lo)) continue;
        if (a.hi - a.lo >= two_pi) {
            arcs_ = {{0.0, two_pi}};
            return;
        }
        double lo = std::fmod(a.lo, two_pi);
        if (lo < 0) lo += two_pi;
        const double hi = lo + (a.hi - a.lo);
        if (hi <= two_pi) {
            pieces.push_back({lo, hi});
        } else {
            pieces.push_back({lo, two_pi});
            pieces.push_back({0.0, hi - two_pi});
        }
    }
    std::sort(pieces.begin(), pieces.end(), [](const Arc& x, const Arc& y) { return x.lo < y.lo; });
    for (const Arc& p : pieces) {
        if (!arcs_.empty() && p.lo <= arcs_.back().hi)
            arcs_.back().hi = std::max(arcs_.back().hi, p.hi);
        else
            arcs_.push_back(p);
    }
}

ArcSet ArcSet::full_circle() { return ArcSet({{0.0, two_pi}}); }

ArcSet ArcSet::centered(double center, double width) {
    if (!(width > 0.0)) return ArcSet();
    return ArcSet({{center - 0.5 * width, center + 0.5 * width}});
}

double ArcSet::measure() const {
    double m = 0.0;
    for (const Arc& a : arcs_) m += a.hi - a.lo;
    return m;
}

bool ArcSet::contains(double theta) const {
    theta = std::fmod(theta, two_pi);
    if (theta < 0) theta += two_pi;
    for (const Arc& a : arcs_)
        if (theta >= a.lo && theta < a.hi) return true;
    return false;
}

bool ArcSet::is_full_circle() const {
    return arcs_.size() == 1 && arcs_[0].lo == 0.0 && arcs_[0].hi >= two_pi;
}

// ---- CuspProfile ----------------------------------------------------------------

CuspProfile CuspProfile::constant(double a) {
    if (!(a >= 0.0 && a < pi / 2)) throw ConstructionError("CuspProfile: a outside [0, pi/2)");
    CuspProfile p;
    p.law = CuspLaw::Constant;
    p.a = a;
    return p;
}

CuspProfile CuspProfile::quadratic() {
    CuspProfile p;
    p.law = CuspLaw::Quadratic;
    p.a = (pi - 1.0) / 2.0;
    return p;
}

CuspProfile CuspProfile::calibrated(double a, int nodes) {
    if (!(a > pi / 4 && a < pi / 2)) throw ConstructionError("CuspProfile: calibrated law needs a in (pi/4, pi/2)");
    if (nodes < 4) throw ConstructionError("CuspProfile: need at least 4 table nodes");
    CuspProfile p;
    p.law = CuspLaw::Calibrated;
    p.a = a;
    p.r0 = cusp_r0(a);
    p.E_a = Ea_value(a);
    const double lo = std::log(1e-4 * p.r0), hi = std::log(p.r0);
    for (int i = 0; i < nodes; ++i) {
        const double rho = std::exp(lo + (hi - lo) * i / (nodes - 1.0));
        const double g = cusp_g(rho, a).value;
        p.rho.push_back(rho);
        p.angle.push_back(invert_Ea(p.E_a / g, a));
    }
    p.rho.back() = p.r0;
    return p;
}

double CuspProfile::angle_at(double r) const {
    switch (law) {
        case CuspLaw::Constant:
            return a;
        case CuspLaw::Quadratic:
            return 0.5 * (pi - (1.0 - r) * (1.0 - r));
        case CuspLaw::Calibrated: {
            if (rho.empty()) throw ConstructionError("CuspProfile: calibrated table missing");
            if (r <= rho.front()) return a + (angle.front() - a) * std::max(r, 0.0) / rho.front();
            if (r >= rho.back()) return angle.back();
            const auto it = std::upper_bound(rho.begin(), rho.end(), r);
            const std::size_t j = static_cast<std::size_t>(it - rho.begin());
            const double w = std::log(r / rho[j - 1]) / std::log(rho[j] / rho[j - 1]);
            return angle[j - 1] + w * (angle[j] - angle[j - 1]);
        }
    }
    return a;
}

// ---- DomainSpec -----------------------------------------------------------------

DomainSpec DomainSpec::ball(double R) {
    DomainSpec d;
    d.kind = DomainKind::Ball;
    d.R = R;
    d.contains_origin = true;
    d.validate();
    return d;
}

DomainSpec DomainSpec::core_cutoff(double c, double R) {
    DomainSpec d;
    d.kind = DomainKind::BallWithCoreCutoff;
    d.R = R;
    d.core_fraction = c;
    d.contains_origin = false;
    d.validate();
    return d;
}

DomainSpec DomainSpec::angular(std::vector<AngularBand> bands, double R) {
    DomainSpec d;
    d.kind = DomainKind::AngularProfile;
    d.R = R;
    d.bands = std::move(bands);
    std::sort(d.bands.begin(), d.bands.end(), [](const auto& x, const auto& y) { return x.r_lo < y.r_lo; });
    d.contains_origin = !d.bands.empty() && d.bands.front().r_lo <= 0.0 && ArcSet(d.bands.front().arcs).is_full_circle();
    d.validate();
    return d;
}

DomainSpec DomainSpec::half_disk(double R) { return angular({{0.0, R, {{0.0, pi}}}}, R); }

DomainSpec DomainSpec::cusp_domain(CuspProfile profile) {
    DomainSpec d;
    d.kind = DomainKind::CuspDomain;
    d.R = 1.0;
    d.contains_origin = false;
    d.cusp = std::make_shared<const CuspProfile>(std::move(profile));
    d.validate();
    return d;
}

void DomainSpec::validate() const {
    if (!(R > 0.0) || !std::isfinite(R)) throw ConstructionError("DomainSpec: R must be positive");
    switch (kind) {
        case DomainKind::Ball:
            break;
        case DomainKind::BallWithCoreCutoff:
            if (!(core_fraction > 0.0 && core_fraction < 1.0))
                throw ConstructionError("DomainSpec: core fraction outside (0, 1)");
            break;
        case DomainKind::AngularProfile:
            if (bands.empty()) throw ConstructionError("DomainSpec: angular profile without bands");
            for (const auto& b : bands)
                if (!(b.r_lo >= 0.0 && b.r_hi > b.r_lo && b.r_hi <= R))
                    throw ConstructionError("DomainSpec: band radii must satisfy 0 <= r_lo < r_hi <= R");
            break;
        case DomainKind::CuspDomain:
            if (!cusp) throw ConstructionError("DomainSpec: cusp profile missing");
            if (R != 1.0) throw ConstructionError("DomainSpec: cusp domains are normalised to R = 1");
            break;
    }
}

namespace {

// Half-width (about theta = pi/2) of the tip-frame cusp slice at origin radius r.
double tip_slice_half_width(const CuspProfile& p, double r) {
    auto inside = [&](double psi) {
        const double y1 = -r * std::sin(psi);
        const double y2 = 1.0 - r * std::cos(psi);
        if (!(y2 > 0.0)) return false;
        const double rho = std::hypot(y1, y2);
        if (!(rho < p.r0)) return false;
        const double theta = std::atan2(y2, y1);
        const double ar = p.angle_at(rho);
        return theta > ar && theta < pi - ar;
    };
    if (!inside(0.0)) return 0.0;
    double lo = 0.0, hi = pi / 2;
    for (int it = 0; it < 80; ++it) {
        const double mid = 0.5 * (lo + hi);
        (inside(mid) ? lo : hi) = mid;
    }
    return lo;
}

}  // namespace

ArcSet DomainSpec::slice(double r) const {
    if (!(r > 0.0 && r < R)) throw DomainRangeError("slice: r outside (0, R)");
    switch (kind) {
        case DomainKind::Ball:
            return ArcSet::full_circle();
        case DomainKind::BallWithCoreCutoff:
            return r > core_fraction * R ? ArcSet::full_circle() : ArcSet();
        case DomainKind::AngularProfile:
            for (const auto& b : bands)
                if (r >= b.r_lo && r < b.r_hi) return ArcSet(b.arcs);
            return ArcSet();
        case DomainKind::CuspDomain:
            if (cusp->tip_frame()) return ArcSet::centered(pi / 2, 2.0 * tip_slice_half_width(*cusp, r));
            return ArcSet::centered(pi / 2, pi - 2.0 * cusp->angle_at(r));
    }
    return ArcSet();
}

std::string to_string(DomainKind kind) {
    switch (kind) {
        case DomainKind::Ball: return "Ball";
        case DomainKind::BallWithCoreCutoff: return "BallWithCoreCutoff";
        case DomainKind::AngularProfile: return "AngularProfile";
        case DomainKind::CuspDomain: return "CuspDomain";
    }
    return "Unknown";
}

std::string to_string(Regime regime) {
    switch (regime) {
        case Regime::OriginInterior: return "OriginInterior";
        case Regime::InteriorSphere: return "InteriorSphere";
        case Regime::StrictInequality: return "StrictInequality";
        case Regime::Attained: return "Attained";
        case Regime::CuspNonattained: return "CuspNonattained";
        case Regime::Unknown: return "Unknown";
    }
    return "Unknown";
}

double profile_measure(const DomainSpec& dom, double r) { return r * dom.slice(r).measure(); }

// ---- limsup estimates -------------------------------------------------------------

namespace {

LimsupEstimate summarise(std::vector<double> radii, std::vector<double> ratios, double cap) {
    LimsupEstimate est;
    est.radii = std::move(radii);
    est.ratios = std::move(ratios);
    const auto& q = est.ratios;
    for (double v : q)
        if (!std::isfinite(v)) throw NumericalError("limsup: profile not evaluable on the schedule");
    const std::size_t n = q.size();
    const std::size_t tail = std::min<std::size_t>(5, n);
    bool dec = true, inc = true;
    for (std::size_t i = n - tail + 1; i < n; ++i) {
        dec = dec && q[i] <= q[i - 1];
        inc = inc && q[i] >= q[i - 1];
    }
    est.monotone_tail = dec || inc;
    const double mx = *std::max_element(q.begin(), q.end());
    if (mx > cap)
        est.value = INFINITY;
    else if (dec && q.back() < q[n - tail])
        est.value = q.back();  // decreasing tail: the limit lies at or below the last sample
    else
        est.value = mx;
    return est;
}

void check_schedule(const LimsupOptions& opt) {
    if (opt.k_min < 1 || opt.k_max < opt.k_min + 2 || opt.k_max > 50 || !(opt.cap > 0))
        throw DomainRangeError("limsup: invalid grid schedule");
}

}  // namespace

LimsupEstimate limsup_m0(const DomainSpec& dom, const LimsupOptions& opt) {
    check_schedule(opt);
    std::vector<double> radii, ratios;
    for (int k = opt.k_min; k <= opt.k_max; ++k) {
        const double r = std::ldexp(dom.R, -k);
        radii.push_back(r);
        ratios.push_back(dom.slice(r).measure());  // m(r)/r for N = 2
    }
    return summarise(std::move(radii), std::move(ratios), opt.cap);
}

LimsupEstimate limsup_mR(const DomainSpec& dom, const LimsupOptions& opt) {
    check_schedule(opt);
    std::vector<double> radii, ratios;
    for (int k = opt.k_min; k <= opt.k_max; ++k) {
        const double gap = std::ldexp(dom.R, -k);
        const double r = dom.R - gap;
        radii.push_back(r);
        ratios.push_back(profile_measure(dom, r) / gap);
    }
    return summarise(std::move(radii), std::move(ratios), opt.cap);
}

GeometryClassification classify(const DomainSpec& dom, const LimsupOptions& opt) {
    GeometryClassification out;
    out.m0 = limsup_m0(dom, opt).value;
    out.mR = limsup_mR(dom, opt).value;
    if (dom.contains_origin) {
        out.regime = Regime::OriginInterior;
        return out;
    }
    // An arc of |x| = R of positive length bounds the domain: an interior tangent disk exists there.
    double min_width = INFINITY;
    for (int k = 10; k <= opt.k_max; ++k) min_width = std::min(min_width, dom.slice(dom.R * (1.0 - std::ldexp(1.0, -k))).measure());
    if (min_width > 1e-3) {
        out.regime = Regime::InteriorSphere;
        return out;
    }
    if (dom.tip_frame()) {
        out.regime = Regime::CuspNonattained;
        return out;
    }
    const double omega = 2.0 * pi;
    if (out.m0 < omega && out.mR < kMRZeroTolerance)
        out.regime = Regime::Attained;
    else if (out.m0 < omega && std::isfinite(out.mR))
        out.regime = Regime::StrictInequality;
    else
        out.regime = Regime::Unknown;
    return out;
}

}  // namespace hardy
