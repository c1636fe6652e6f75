#pragma once

#include "rainbow/expander.hpp"
#include "rainbow/report.hpp"
#include "rainbow/search.hpp"

namespace rainbow {

ordered_json path_to_json(const RainbowPath& p);
RainbowPath path_from_json(const ordered_json& j);

ordered_json certificate_to_json(const SubdivisionCertificate& cert);
SubdivisionCertificate certificate_from_json(const ordered_json& j);

ordered_json cycle_to_json(const RainbowPath& cycle);

ordered_json violation_to_json(const ExpanderViolation& v, const EdgeColoredGraph& g);
ExpanderViolation violation_from_json(const ordered_json& j, const EdgeColoredGraph& g);

/// Revalidates any emitted certificate JSON (subdivision, cycle, violation)
/// against the graph; accepts a bare certificate or a full artifact
/// envelope. Returns ok plus a human-readable reason.
ValidationResult validate_certificate_json(const ordered_json& j, const EdgeColoredGraph& g);

} // namespace rainbow
