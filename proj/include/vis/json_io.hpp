#pragma once

#include <json.hpp>

#include "vis/container.hpp"
#include "vis/orchard.hpp"

namespace vis {

// Key order is fixed so reports are byte-identical across runs.
using Json = nlohmann::ordered_json;

struct InputParseError : std::runtime_error {
    explicit InputParseError(const std::string& w) : std::runtime_error(w) {}
};

Json point_set_to_json(const PointSet& A);
PointSet point_set_from_json(const Json& j);

Json cubic_to_json(const HomogeneousCubic& F);
HomogeneousCubic cubic_from_json(const Json& j);

Json alg_real_to_json(const AlgReal& a);
Json cover_to_json(const CliqueCover& c);
Json patch_report_to_json(const PatchDecomposition& D);
Json container_report_to_json(const ContainerReport& r);
Json turan_report_to_json(const TuranReport& r);
Json orchard_core_to_json(const OrchardCore& c);
Json orchard_verification_to_json(const OrchardVerification& v);
Json ambient_report_to_json(const AmbientReport& r);
Json cubic_fit_to_json(const CubicFit& f);

Json load_json_file(const std::string& path);

}  // namespace vis
