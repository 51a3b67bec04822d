#include "agqss/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "agqss/errors.hpp"
#include "agqss/gf.hpp"
#include "json.hpp"

namespace agqss::config {

namespace {

using nlohmann::json;

void require_object(const json& value, const std::string& where) {
    if (!value.is_object()) {
        throw ConfigError("config: " + where + " must be an object");
    }
}

void reject_unknown_keys(const json& obj, const std::string& where,
                         const std::set<std::string>& allowed) {
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        if (allowed.find(key) == allowed.end()) {
            throw ConfigError("config: unknown key \"" + key + "\" in " + where);
        }
    }
}

const json& require_key(const json& obj, const std::string& where, const std::string& key) {
    const auto it = obj.find(key);
    if (it == obj.end()) {
        throw ConfigError("config: missing key \"" + key + "\" in " + where);
    }
    return *it;
}

int get_int(const json& value, const std::string& where) {
    if (!value.is_number_integer()) {
        throw ConfigError("config: " + where + " must be an integer");
    }
    return value.get<int>();
}

std::uint64_t get_uint64(const json& value, const std::string& where) {
    if (value.is_number_unsigned()) {
        return value.get<std::uint64_t>();
    }
    if (value.is_number_integer() && value.get<long long>() >= 0) {
        return value.get<std::uint64_t>();
    }
    throw ConfigError("config: " + where + " must be a nonnegative integer");
}

std::vector<int> get_int_array(const json& value, const std::string& where) {
    if (!value.is_array()) {
        throw ConfigError("config: " + where + " must be an array of integers");
    }
    std::vector<int> out;
    out.reserve(value.size());
    for (const auto& item : value) {
        out.push_back(get_int(item, where + " entry"));
    }
    return out;
}

std::vector<funcfield::Place> get_places(const json& value, const std::string& where) {
    if (!value.is_array()) {
        throw ConfigError("config: " + where + " must be an array of places");
    }
    std::vector<funcfield::Place> out;
    out.reserve(value.size());
    for (const auto& entry : value) {
        const std::vector<int> coords = get_int_array(entry, where + " place");
        if (coords.size() != 1 && coords.size() != 2) {
            throw ConfigError("config: each " + where +
                              " place needs one coordinate [x] or two [x, y]");
        }
        out.push_back(funcfield::Place::affine(coords[0], coords.size() == 2 ? coords[1] : 0));
    }
    return out;
}

}  // namespace

InstanceConfig parse_instance_config(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& err) {
        throw ConfigError(std::string("config parse: ") + err.what());
    }
    require_object(doc, "document root");
    reject_unknown_keys(doc, "document root",
                        {"field", "curve", "u", "n", "L", "share_places", "secret_places", "seed",
                         "caps", "mode"});

    InstanceConfig cfg;

    const json& field = require_key(doc, "document root", "field");
    require_object(field, "field");
    reject_unknown_keys(field, "field", {"p", "m", "modulus"});
    cfg.p = get_int(require_key(field, "field", "p"), "field.p");
    cfg.m = get_int(require_key(field, "field", "m"), "field.m");
    if (field.contains("modulus")) {
        cfg.modulus = get_int_array(field.at("modulus"), "field.modulus");
    }

    const json& curve = require_key(doc, "document root", "curve");
    require_object(curve, "curve");
    reject_unknown_keys(curve, "curve", {"model", "q0"});
    const json& model = require_key(curve, "curve", "model");
    if (!model.is_string()) {
        throw ConfigError("config: curve.model must be a string");
    }
    const std::string model_name = model.get<std::string>();
    if (model_name == "rational") {
        cfg.kind = funcfield::CurveKind::Rational;
        if (curve.contains("q0")) {
            throw ConfigError("config: curve.q0 applies to the hermitian model only");
        }
    } else if (model_name == "hermitian") {
        cfg.kind = funcfield::CurveKind::Hermitian;
        cfg.q0 = get_int(require_key(curve, "curve", "q0"), "curve.q0");
    } else {
        throw ConfigError("config: curve.model must be \"rational\" or \"hermitian\", got \"" +
                          model_name + "\"");
    }

    cfg.u = get_int(require_key(doc, "document root", "u"), "u");
    cfg.n = get_int(require_key(doc, "document root", "n"), "n");
    cfg.secret_len = get_int(require_key(doc, "document root", "L"), "L");

    const bool has_shares = doc.contains("share_places");
    const bool has_secrets = doc.contains("secret_places");
    if (has_shares != has_secrets) {
        throw ConfigError(
            "config: share_places and secret_places must be given together or not at all");
    }
    if (has_shares) {
        cfg.share_places = get_places(doc.at("share_places"), "share_places");
        cfg.secret_places = get_places(doc.at("secret_places"), "secret_places");
        if (static_cast<int>(cfg.share_places->size()) != cfg.n) {
            throw ConfigError("config: share_places holds " +
                              std::to_string(cfg.share_places->size()) + " places but n is " +
                              std::to_string(cfg.n));
        }
        if (static_cast<int>(cfg.secret_places->size()) != cfg.secret_len) {
            throw ConfigError("config: secret_places holds " +
                              std::to_string(cfg.secret_places->size()) + " places but L is " +
                              std::to_string(cfg.secret_len));
        }
    }

    if (doc.contains("seed")) {
        cfg.seed = get_uint64(doc.at("seed"), "seed");
    }

    if (doc.contains("caps")) {
        const json& caps = doc.at("caps");
        require_object(caps, "caps");
        reject_unknown_keys(caps, "caps", {"coset", "operator_dim"});
        if (caps.contains("coset")) {
            cfg.caps.coset = get_uint64(caps.at("coset"), "caps.coset");
        }
        if (caps.contains("operator_dim")) {
            cfg.caps.operator_dim = get_uint64(caps.at("operator_dim"), "caps.operator_dim");
        }
        if (cfg.caps.coset == 0 || cfg.caps.operator_dim == 0) {
            throw ConfigError("config: caps must be positive");
        }
    }

    if (doc.contains("mode")) {
        const json& mode = doc.at("mode");
        if (!mode.is_string()) {
            throw ConfigError("config: mode must be a string");
        }
        cfg.mode = parse_mode(mode.get<std::string>());
    }

    return cfg;
}

InstanceConfig load_instance_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("config: cannot read \"" + path + "\"");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_instance_config(buffer.str());
}

scheme::CodePair build_pair(const InstanceConfig& cfg) {
    const std::shared_ptr<const gf::FieldSpec> field =
        cfg.modulus.has_value() ? gf::FieldSpec::make(cfg.p, cfg.m, *cfg.modulus)
                                : gf::FieldSpec::make(cfg.p, cfg.m);
    const funcfield::CurveModel curve = cfg.kind == funcfield::CurveKind::Rational
                                            ? funcfield::CurveModel::rational(field)
                                            : funcfield::CurveModel::hermitian(field, cfg.q0);
    if (cfg.share_places.has_value()) {
        return scheme::CodePair::build(curve, cfg.u, *cfg.share_places, *cfg.secret_places);
    }
    return scheme::CodePair::build_default(curve, cfg.u, cfg.n, cfg.secret_len);
}

qsim::Mode parse_mode(const std::string& name) {
    if (name == "fast") {
        return qsim::Mode::Fast;
    }
    if (name == "oracle") {
        return qsim::Mode::Oracle;
    }
    if (name == "both") {
        return qsim::Mode::Both;
    }
    throw ConfigError("config: mode must be \"fast\", \"oracle\", or \"both\", got \"" + name +
                      "\"");
}

std::string mode_name(qsim::Mode mode) {
    switch (mode) {
        case qsim::Mode::Fast:
            return "fast";
        case qsim::Mode::Oracle:
            return "oracle";
        case qsim::Mode::Both:
            return "both";
    }
    throw DomainError("unknown mode value");
}

}  // namespace agqss::config
