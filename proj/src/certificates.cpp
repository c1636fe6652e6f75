#include "rainbow/certificates.hpp"

namespace rainbow {

ordered_json path_to_json(const RainbowPath& p) {
    ordered_json j;
    j["vertices"] = p.vertices;
    j["colors"] = p.colors;
    j["is_cycle"] = p.is_cycle;
    return j;
}

RainbowPath path_from_json(const ordered_json& j) {
    RainbowPath p;
    p.vertices = j.at("vertices").get<std::vector<int>>();
    p.colors = j.at("colors").get<std::vector<int>>();
    p.is_cycle = j.value("is_cycle", false);
    return p;
}

ordered_json certificate_to_json(const SubdivisionCertificate& cert) {
    ordered_json j;
    j["type"] = "subdivision-certificate";
    j["t"] = cert.t;
    j["length_bound"] = cert.length_bound;
    j["hubs"] = cert.hubs;
    auto paths = ordered_json::array();
    auto pair_list = cert.pairs();
    for (size_t k = 0; k < cert.paths.size(); ++k) {
        ordered_json pj = path_to_json(cert.paths[k]);
        pj["pair"] = {pair_list[k].first, pair_list[k].second};
        paths.push_back(std::move(pj));
    }
    j["paths"] = std::move(paths);
    return j;
}

SubdivisionCertificate certificate_from_json(const ordered_json& j) {
    SubdivisionCertificate cert;
    cert.t = j.at("t").get<int>();
    cert.length_bound = j.at("length_bound").get<int>();
    cert.hubs = j.at("hubs").get<std::vector<int>>();
    for (const auto& pj : j.at("paths")) cert.paths.push_back(path_from_json(pj));
    return cert;
}

ordered_json cycle_to_json(const RainbowPath& cycle) {
    ordered_json j;
    j["type"] = "rainbow-cycle";
    j["length"] = cycle.length();
    j["cycle"] = path_to_json(cycle);
    return j;
}

ordered_json violation_to_json(const ExpanderViolation& v, const EdgeColoredGraph& g) {
    ordered_json j;
    j["type"] = "expander-violation";
    j["epsilon"] = v.epsilon.str();
    j["epsilon_value"] = round_sig12(v.epsilon.value());
    j["U"] = v.witness_set.to_vector();
    auto edges = ordered_json::array();
    v.removed_edges.for_each([&](int ei) {
        const Edge& e = g.edges()[ei];
        edges.push_back({e.u, e.v, e.color});
    });
    j["F"] = std::move(edges);
    j["achieved_neighborhood"] = v.achieved_neighborhood;
    return j;
}

ExpanderViolation violation_from_json(const ordered_json& j, const EdgeColoredGraph& g) {
    ExpanderViolation v;
    std::string eps = j.at("epsilon").get<std::string>();
    auto slash = eps.find('/');
    if (slash == std::string::npos) {
        v.epsilon = Rational(std::stoll(eps), 1);
    } else {
        v.epsilon = Rational(std::stoll(eps.substr(0, slash)), std::stoll(eps.substr(slash + 1)));
    }
    v.witness_set = VertexSet::from(g.n(), j.at("U").get<std::vector<int>>());
    v.removed_edges = EdgeSet(g.m());
    for (const auto& row : j.at("F")) {
        auto idx = g.edge_index(row[0].get<int>(), row[1].get<int>());
        if (!idx) throw Error(ErrorCode::FormatError, "violation references a missing edge");
        v.removed_edges.set(*idx);
    }
    v.achieved_neighborhood = j.at("achieved_neighborhood").get<int>();
    return v;
}

ValidationResult validate_certificate_json(const ordered_json& j, const EdgeColoredGraph& g) {
    const ordered_json* body = &j;
    if (j.contains("result")) {
        const auto& r = j.at("result");
        if (r.contains("certificate")) body = &r.at("certificate");
        else body = &r;
    }
    if (!body->contains("type")) return {false, "FormatError", "certificate has no 'type' field"};
    std::string type = body->at("type").get<std::string>();
    if (type == "subdivision-certificate") {
        return validate_certificate(certificate_from_json(*body), g);
    }
    if (type == "rainbow-cycle") {
        RainbowPath cycle = path_from_json(body->at("cycle"));
        if (!cycle.is_cycle) return {false, "NotAPath", "certificate cycle must set is_cycle"};
        return validate_path(g, cycle);
    }
    if (type == "expander-violation") {
        ExpanderViolation v = violation_from_json(*body, g);
        auto check = verify_violation(g, v);
        if (!check.ok) return {false, "ViolationInvalid", check.detail};
        return {true, "", ""};
    }
    return {false, "FormatError", "unknown certificate type '" + type + "'"};
}

} // namespace rainbow
