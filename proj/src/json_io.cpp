#include "xxchain/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace xxchain {

namespace {

std::vector<double> real_array(const nlohmann::json& j, const char* field) {
    if (!j.is_array()) throw std::invalid_argument(std::string(field) + " must be an array");
    std::vector<double> out;
    out.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_number()) throw std::invalid_argument(std::string(field) + " must hold numbers");
        out.push_back(v.get<double>());
    }
    return out;
}

nlohmann::json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    nlohmann::json j;
    in >> j;
    return j;
}

} // namespace

ChainSpec chain_spec_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw std::invalid_argument("chain document needs a string field \"kind\"");
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "krawtchouk") {
        if (!j.contains("N") || !j.contains("p"))
            throw std::invalid_argument("krawtchouk chain needs fields N and p");
        return KrawtchoukSpec{j["N"].get<int>(), j["p"].get<double>()};
    }
    if (kind == "homogeneous") {
        if (!j.contains("N"))
            throw std::invalid_argument("homogeneous chain needs field N");
        HomogeneousSpec spec;
        spec.N = j["N"].get<int>();
        if (j.contains("J")) spec.J = j["J"].get<double>();
        if (j.contains("B")) spec.B = j["B"].get<double>();
        return spec;
    }
    if (kind == "custom") {
        if (!j.contains("J") || !j.contains("B"))
            throw std::invalid_argument("custom chain needs arrays J and B");
        CustomSpec spec;
        spec.J = real_array(j["J"], "J");
        spec.B = real_array(j["B"], "B");
        if (j.contains("dual")) spec.dual = real_array(j["dual"], "dual");
        return spec;
    }
    throw std::invalid_argument("unknown chain kind \"" + kind + "\"");
}

ChainSpec load_chain_spec(const std::string& path) {
    return chain_spec_from_json(parse_file(path));
}

nlohmann::ordered_json chain_to_json(const Chain& chain) {
    nlohmann::ordered_json j;
    j["kind"] = "custom";
    j["J"] = chain.J;
    j["B"] = chain.B;
    if (chain.dual) j["dual"] = *chain.dual;
    return j;
}

std::vector<double> spectrum_from_json(const nlohmann::json& j) {
    auto out = real_array(j, "spectrum");
    if (out.size() < 2) throw std::invalid_argument("spectrum needs at least 2 entries");
    return out;
}

std::vector<double> load_spectrum(const std::string& path) {
    return spectrum_from_json(parse_file(path));
}

} // namespace xxchain
