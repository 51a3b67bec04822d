#include "agqss/report.hpp"

#include <iomanip>
#include <map>
#include <set>
#include <sstream>

#include "agqss/config.hpp"
#include "agqss/errors.hpp"

namespace agqss::report {

namespace {

using nlohmann::json;

json one_based(const std::vector<int>& indices) {
    json out = json::array();
    for (const int index : indices) {
        out.push_back(index + 1);
    }
    return out;
}

json places_array(const funcfield::CurveModel& curve,
                  const std::vector<funcfield::Place>& places) {
    json out = json::array();
    for (const funcfield::Place& place : places) {
        if (curve.kind == funcfield::CurveKind::Rational) {
            out.push_back(json::array({place.x}));
        } else {
            out.push_back(json::array({place.x, place.y}));
        }
    }
    return out;
}

/// The hashed identity: everything that pins the scheme down, nothing that
/// only steers a particular run.
json identity_block(const scheme::CodePair& pair) {
    const auto field = pair.field_ptr();
    json identity;
    identity["field"] = {{"p", field->p()}, {"m", field->m()}, {"modulus", field->modulus()}};
    if (pair.curve().kind == funcfield::CurveKind::Rational) {
        identity["curve"] = {{"model", "rational"}};
    } else {
        identity["curve"] = {{"model", "hermitian"}, {"q0", pair.curve().q0}};
    }
    identity["u"] = pair.u();
    identity["share_places"] = places_array(pair.curve(), pair.share_places());
    identity["secret_places"] = places_array(pair.curve(), pair.secret_places());
    return identity;
}

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t hash = 14695981039346656037ull;
    for (const unsigned char byte : bytes) {
        hash ^= byte;
        hash *= 1099511628211ull;
    }
    std::ostringstream out;
    out << std::hex << std::setw(16) << std::setfill('0') << hash;
    return out.str();
}

json tool_block() { return json{{"name", kToolName}, {"version", kToolVersion}}; }

json subset_row(const analyzer::SubsetRecord& record) {
    json row;
    row["J"] = one_based(record.j_set);
    row["size"] = record.j_set.size();
    row["class"] = class_name(record.cls);
    if (record.fast.has_value()) {
        row["fast"] = class_name(*record.fast);
    }
    if (record.oracle.has_value()) {
        row["oracle"] = class_name(*record.oracle);
    }
    return row;
}

/// Default reports keep the undecided middle band: sizes strictly between
/// the guaranteed thresholds, with vacuous thresholds opening their side.
bool in_boundary_band(int size, const scheme::Thresholds& th, int n) {
    const int lower = th.forbidden_vacuous ? -1 : th.forbidden;
    const int upper = th.qualified_vacuous ? n + 1 : th.qualified;
    return size > lower && size < upper;
}

struct StrongAggregate {
    bool seen = false;
    bool secure_all = true;
    bool uniform = true;
    bool first_secure = false;
    bool within_bound = false;
};

/// Rows keyed (revealed count, J) with security ANDed over the masked sets
/// of that size. The bound depends on sizes only, so within_bound is shared.
std::map<std::pair<int, std::vector<int>>, StrongAggregate> aggregate_strong(
    const analyzer::StrongReport& strong, int secret_len) {
    std::map<std::pair<int, std::vector<int>>, StrongAggregate> by_key;
    for (const analyzer::StrongRecord& record : strong.pairs) {
        const int revealed = secret_len - static_cast<int>(record.i_set.size());
        StrongAggregate& agg = by_key[{revealed, record.j_set}];
        if (!agg.seen) {
            agg.seen = true;
            agg.first_secure = record.secure;
            agg.within_bound = record.within_bound;
        } else if (agg.first_secure != record.secure) {
            agg.uniform = false;
        }
        agg.secure_all = agg.secure_all && record.secure;
    }
    return by_key;
}

std::string join_one_based(const std::vector<int>& indices) {
    std::ostringstream out;
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (i > 0) {
            out << ' ';
        }
        out << indices[i] + 1;
    }
    return out.str();
}

const char* bool_name(bool value) { return value ? "true" : "false"; }

}  // namespace

std::string instance_hash(const scheme::CodePair& pair) {
    return fnv1a_hex(identity_block(pair).dump());
}

json instance_block(const scheme::CodePair& pair) {
    json block = identity_block(pair);
    block["hash"] = instance_hash(pair);
    block["field"]["order"] = pair.field_ptr()->order();
    block["curve"]["genus"] = pair.curve().genus();
    block["n"] = pair.n();
    block["L"] = pair.secret_len();
    block["message_dim"] = pair.message_dim();
    return block;
}

json thresholds_block(const scheme::Thresholds& th) {
    return json{{"forbidden", th.forbidden},
                {"forbidden_vacuous", th.forbidden_vacuous},
                {"qualified", th.qualified},
                {"qualified_vacuous", th.qualified_vacuous}};
}

json analysis_report(const scheme::CodePair& pair, const analyzer::AccessReport& access,
                     const analyzer::StrongReport& strong, bool full) {
    if (access.mode != strong.mode) {
        throw DomainError("analysis_report: classification and strong-security sweeps ran in "
                          "different modes");
    }
    json doc;
    doc["tool"] = tool_block();
    doc["instance"] = instance_block(pair);
    doc["mode"] = config::mode_name(access.mode);
    doc["full"] = full;
    doc["thresholds"] = thresholds_block(access.thresholds);

    json by_size = json::array();
    for (const analyzer::SizeTally& tally : access.by_size) {
        by_size.push_back(json{{"size", tally.size},
                               {"forbidden", tally.forbidden},
                               {"intermediate", tally.intermediate},
                               {"qualified", tally.qualified}});
    }
    std::set<std::vector<int>> exceptional(access.forbidden_counterexamples.begin(),
                                           access.forbidden_counterexamples.end());
    exceptional.insert(access.qualified_counterexamples.begin(),
                       access.qualified_counterexamples.end());
    json subsets = json::array();
    for (const analyzer::SubsetRecord& record : access.subsets) {
        const int size = static_cast<int>(record.j_set.size());
        if (full || in_boundary_band(size, access.thresholds, pair.n()) ||
            exceptional.count(record.j_set) > 0) {
            subsets.push_back(subset_row(record));
        }
    }
    doc["classification"] = json{{"by_size", by_size}, {"subsets", subsets}};

    json strong_block;
    if (full) {
        json rows = json::array();
        for (const analyzer::StrongRecord& record : strong.pairs) {
            json row;
            row["I"] = one_based(record.i_set);
            row["J"] = one_based(record.j_set);
            row["revealed"] = pair.secret_len() - static_cast<int>(record.i_set.size());
            row["secure"] = record.secure;
            row["within_bound"] = record.within_bound;
            if (record.fast.has_value()) {
                row["fast"] = *record.fast;
            }
            if (record.oracle.has_value()) {
                row["oracle"] = *record.oracle;
            }
            rows.push_back(row);
        }
        strong_block["pairs"] = rows;
    } else {
        json rows = json::array();
        for (const auto& [key, agg] : aggregate_strong(strong, pair.secret_len())) {
            rows.push_back(json{{"revealed", key.first},
                                {"J", one_based(key.second)},
                                {"size", key.second.size()},
                                {"secure", agg.secure_all},
                                {"uniform", agg.uniform},
                                {"within_bound", agg.within_bound}});
        }
        strong_block["by_revealed"] = rows;
    }
    doc["strong_security"] = strong_block;

    json strong_counterexamples = json::array();
    for (const auto& [i_set, j_set] : strong.counterexamples) {
        strong_counterexamples.push_back(json{{"I", one_based(i_set)}, {"J", one_based(j_set)}});
    }
    json forbidden_counterexamples = json::array();
    for (const auto& j_set : access.forbidden_counterexamples) {
        forbidden_counterexamples.push_back(one_based(j_set));
    }
    json qualified_counterexamples = json::array();
    for (const auto& j_set : access.qualified_counterexamples) {
        qualified_counterexamples.push_back(one_based(j_set));
    }
    doc["soundness"] = json{
        {"forbidden_threshold_sound", access.forbidden_threshold_sound},
        {"qualified_threshold_sound", access.qualified_threshold_sound},
        {"strong_security_bound_sound", strong.bound_sound},
        {"counterexamples", json{{"forbidden", forbidden_counterexamples},
                                 {"qualified", qualified_counterexamples},
                                 {"strong_security", strong_counterexamples}}},
    };
    return doc;
}

std::string analysis_csv(const scheme::CodePair& pair, const analyzer::AccessReport& access,
                         const analyzer::StrongReport& strong, bool full) {
    if (access.mode != strong.mode) {
        throw DomainError("analysis_csv: classification and strong-security sweeps ran in "
                          "different modes");
    }
    std::ostringstream out;
    out << "# " << kToolName << ' ' << kToolVersion << '\n';
    out << "# instance " << instance_hash(pair) << '\n';
    out << "# mode " << config::mode_name(access.mode) << '\n';
    out << "section,i_set,revealed,j_set,size,class,secure,uniform,within_bound,fast,oracle\n";

    std::set<std::vector<int>> exceptional(access.forbidden_counterexamples.begin(),
                                           access.forbidden_counterexamples.end());
    exceptional.insert(access.qualified_counterexamples.begin(),
                       access.qualified_counterexamples.end());
    for (const analyzer::SubsetRecord& record : access.subsets) {
        const int size = static_cast<int>(record.j_set.size());
        if (!full && !in_boundary_band(size, access.thresholds, pair.n()) &&
            exceptional.count(record.j_set) == 0) {
            continue;
        }
        out << "classification,,," << join_one_based(record.j_set) << ',' << size << ','
            << class_name(record.cls) << ",,,,";
        out << (record.fast.has_value() ? class_name(*record.fast) : "") << ',';
        out << (record.oracle.has_value() ? class_name(*record.oracle) : "") << '\n';
    }

    if (full) {
        for (const analyzer::StrongRecord& record : strong.pairs) {
            const int revealed = pair.secret_len() - static_cast<int>(record.i_set.size());
            out << "strong," << join_one_based(record.i_set) << ',' << revealed << ','
                << join_one_based(record.j_set) << ',' << record.j_set.size() << ",,"
                << bool_name(record.secure) << ",," << bool_name(record.within_bound) << ',';
            out << (record.fast.has_value() ? bool_name(*record.fast) : "") << ',';
            out << (record.oracle.has_value() ? bool_name(*record.oracle) : "") << '\n';
        }
    } else {
        for (const auto& [key, agg] : aggregate_strong(strong, pair.secret_len())) {
            out << "strong,," << key.first << ',' << join_one_based(key.second) << ','
                << key.second.size() << ",," << bool_name(agg.secure_all) << ','
                << bool_name(agg.uniform) << ',' << bool_name(agg.within_bound) << ",,\n";
        }
    }
    return out.str();
}

json thresholds_report(const scheme::CodePair& pair, const scheme::Thresholds& th) {
    json doc;
    doc["tool"] = tool_block();
    doc["instance"] = instance_block(pair);
    doc["thresholds"] = thresholds_block(th);
    return doc;
}

std::string thresholds_text(const scheme::CodePair& pair, const scheme::Thresholds& th) {
    std::ostringstream out;
    out << "instance " << instance_hash(pair) << '\n';
    out << "forbidden <= " << th.forbidden;
    if (th.forbidden_vacuous) {
        out << " (vacuous)";
    }
    out << '\n';
    out << "qualified >= " << th.qualified;
    if (th.qualified_vacuous) {
        out << " (vacuous)";
    }
    out << '\n';
    out << "strong(revealed=k): |J| <= k ";
    if (th.forbidden >= 0) {
        out << "+ " << th.forbidden;
    } else {
        out << "- " << -th.forbidden;
    }
    out << '\n';
    return out.str();
}

json share_file(const scheme::CodePair& pair, std::uint64_t seed, const std::vector<int>& j_set,
                const std::vector<int>& values) {
    if (j_set.size() != values.size()) {
        throw DomainError("share_file: index and value counts differ");
    }
    const auto field = pair.field_ptr();
    json doc;
    doc["format"] = "agqss-shares";
    doc["tool"] = tool_block();
    doc["instance_hash"] = instance_hash(pair);
    doc["field"] = {{"p", field->p()},
                    {"m", field->m()},
                    {"modulus", field->modulus()},
                    {"order", field->order()}};
    doc["rng"] = "mt19937_64";
    doc["seed"] = seed;
    doc["j_set"] = one_based(j_set);
    doc["values"] = values;
    return doc;
}

ParsedShares parse_share_file(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& err) {
        throw ConfigError(std::string("share file parse: ") + err.what());
    }
    if (!doc.is_object() || !doc.contains("format") || !doc.at("format").is_string() ||
        doc.at("format").get<std::string>() != "agqss-shares") {
        throw ConfigError("share file: missing or wrong \"format\" tag");
    }
    ParsedShares parsed;
    if (!doc.contains("instance_hash") || !doc.at("instance_hash").is_string()) {
        throw ConfigError("share file: missing \"instance_hash\"");
    }
    parsed.instance_hash = doc.at("instance_hash").get<std::string>();
    if (doc.contains("seed")) {
        if (!doc.at("seed").is_number_integer() && !doc.at("seed").is_number_unsigned()) {
            throw ConfigError("share file: \"seed\" must be an integer");
        }
        parsed.seed = doc.at("seed").get<std::uint64_t>();
    }
    if (!doc.contains("j_set") || !doc.at("j_set").is_array() || !doc.contains("values") ||
        !doc.at("values").is_array()) {
        throw ConfigError("share file: \"j_set\" and \"values\" arrays are required");
    }
    for (const auto& entry : doc.at("j_set")) {
        if (!entry.is_number_integer()) {
            throw ConfigError("share file: j_set entries must be integers");
        }
        const int index = entry.get<int>();
        if (index < 1) {
            throw ConfigError("share file: j_set entries are 1-based share numbers");
        }
        parsed.j_set.push_back(index - 1);
    }
    for (const auto& entry : doc.at("values")) {
        if (!entry.is_number_integer()) {
            throw ConfigError("share file: values entries must be integers");
        }
        parsed.values.push_back(entry.get<int>());
    }
    if (parsed.j_set.size() != parsed.values.size()) {
        throw ConfigError("share file: j_set and values lengths differ");
    }
    return parsed;
}

json reconstruction_report(const scheme::CodePair& pair,
                           const classical_ss::Reconstruction& result,
                           const std::vector<int>& j_set) {
    json doc;
    doc["tool"] = tool_block();
    doc["instance_hash"] = instance_hash(pair);
    doc["j_set"] = one_based(j_set);
    doc["candidate_count"] = result.candidate_count;
    doc["unique"] = result.secret.has_value();
    if (result.secret.has_value()) {
        doc["secret"] = *result.secret;
    } else {
        doc["secret"] = nullptr;
    }
    return doc;
}

std::string class_name(qsim::AccessClass cls) {
    switch (cls) {
        case qsim::AccessClass::Forbidden:
            return "forbidden";
        case qsim::AccessClass::Intermediate:
            return "intermediate";
        case qsim::AccessClass::Qualified:
            return "qualified";
    }
    throw DomainError("unknown access class value");
}

}  // namespace agqss::report
