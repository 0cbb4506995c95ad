#pragma once

// JSON documents exchanged by the command-line tool.

#include <cstdint>
#include <string>

#include "json.hpp"

#include "hardy/domain.hpp"
#include "hardy/fem2d.hpp"
#include "hardy/quotient.hpp"
#include "hardy/rearrange.hpp"

namespace hardy::io {

using json = nlohmann::ordered_json;

/// {"kind": ..., "R": ..., "params": {...}}. Kinds: Ball, BallWithCoreCutoff (params.c),
/// AngularProfile (params.bands = [{r_lo, r_hi, arcs: [[lo, hi], ...]}]), HalfDisk, and
/// CuspDomain (params.law = constant | quadratic | calibrated, params.a, params.nodes).
/// Throws ConstructionError on malformed input.
DomainSpec domain_from_json(const json& j);
json domain_to_json(const DomainSpec& dom);

/// {"type": "radial", "grid", "values", "N", "boundary_zero"} or
/// {"type": "polar", "r", "theta", "values", "periodic"}.
RadialFunction radial_from_json(const json& j);
PolarGridFunction polar_from_json(const json& j);
json polar_to_json(const PolarGridFunction& u);

json to_json(const GeometryClassification& g);
json to_json(const QuotientReport& q);
json to_json(const PolyaSzegoReport& r);
json to_json(const HardyLittlewoodReport& r);
json to_json(const RearrangedDomain& r);
json to_json(const ConstantEstimate& e);

std::uint64_t fnv1a64(const std::string& bytes);

/// {"tool", "version", "config_hash", "seed"}; the hash covers the compact dump of `config`.
json meta_block(const json& config, std::uint64_t seed = 0);

json read_file(const std::string& path);

}  // namespace hardy::io
