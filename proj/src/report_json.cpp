#include "cvlab/report_json.hpp"

namespace cvlab {

using nlohmann::json;

std::string dump_json(const json& doc) { return doc.dump(2) + "\n"; }

json to_json(const MultisetSpec& spec) {
    json values = json::array();
    for (const auto& z : spec.values) values.push_back(to_string(z));
    json mults = json::array();
    for (const auto n : spec.mults.parts()) mults.push_back(n);
    return json{{"values", values}, {"mults", mults}};
}

MultisetSpec multiset_spec_from_json(const json& j) {
    std::vector<GaussianRational> values;
    for (const auto& v : j.at("values"))
        values.push_back(parse_gaussian(v.get<std::string>()));
    std::vector<std::int64_t> mults;
    for (const auto& n : j.at("mults")) mults.push_back(n.get<std::int64_t>());
    return {std::move(values), Caps(std::move(mults))};
}

json to_json(const Pmf& pmf, std::int64_t m) {
    json entries = json::array();
    for (const auto& [value, entry] : pmf.entries)
        entries.push_back(json{{"value", to_string(value)},
                               {"q", to_string(entry.q)},
                               {"prob", to_string(entry.prob)}});
    return json{{"m", m},
                {"subsets", to_string(pmf.subsets)},
                {"entries", entries}};
}

namespace {

const char* method_name(MomentMethod method) {
    switch (method) {
        case MomentMethod::oracle: return "oracle";
        case MomentMethod::closed_form: return "closed_form";
        case MomentMethod::monte_carlo: return "monte_carlo";
    }
    return "unknown";
}

}  // namespace

json to_json(const MomentReport& report) {
    json j{{"order", report.order},
           {"absolute", report.absolute},
           {"value", to_string(report.value)},
           {"method", method_name(report.method)}};
    if (report.method == MomentMethod::monte_carlo) {
        j["trials"] = report.trials;
        j["seed"] = report.seed;
        j["prng"] = report.prng;
        if (report.se_sq) j["se_sq"] = to_string(*report.se_sq);
    }
    return j;
}

namespace {

json params_to_json(const std::vector<std::pair<std::string, std::string>>& params) {
    json j = json::object();
    for (const auto& [key, value] : params) j[key] = value;
    return j;
}

json pair_to_json(const GaussianRational& first,
                  const std::optional<GaussianRational>& second) {
    if (!second) return to_string(first);
    return json::array({to_string(first), to_string(*second)});
}

}  // namespace

json to_json(const IdentityReport& report) {
    json j{{"identity_id", report.identity_id},
           {"params", params_to_json(report.params)},
           {"lhs", pair_to_json(report.lhs, report.lhs2)},
           {"rhs", pair_to_json(report.rhs, report.rhs2)},
           {"verdict", report.holds ? "holds" : "fails"}};
    if (!report.note.empty()) j["note"] = report.note;
    if (report.printed_rhs)
        j["printed_rhs"] = pair_to_json(*report.printed_rhs, report.printed_rhs2);
    return j;
}

json to_json(const ExactMatrix& matrix) {
    json entries = json::array();
    for (const auto& e : matrix.entries()) entries.push_back(to_string(e));
    return json{{"rows", matrix.rows()}, {"cols", matrix.cols()},
                {"entries", entries}};
}

ExactMatrix matrix_from_json(const json& j) {
    const auto rows = j.at("rows").get<std::size_t>();
    const auto cols = j.at("cols").get<std::size_t>();
    std::vector<GaussianRational> entries;
    for (const auto& e : j.at("entries"))
        entries.push_back(parse_gaussian(e.get<std::string>()));
    return {rows, cols, std::move(entries)};
}

json to_json(const MatrixIdentityReport& report) {
    json j{{"identity_id", report.identity_id},
           {"params", params_to_json(report.params)},
           {"lhs", to_json(report.lhs)},
           {"rhs", to_json(report.rhs)},
           {"verdict", report.holds ? "holds" : "fails"}};
    if (!report.note.empty()) j["note"] = report.note;
    return j;
}

json to_json(const ResidueClass& residue) {
    return json{{"value", to_string(residue.value)},
                {"modulus", to_string(residue.modulus)},
                {"p", residue.p},
                {"k", residue.k}};
}

json to_json(const GlaisherReport& report) {
    return json{{"congruence_id", "glaisher"},
                {"p", report.p},
                {"s", report.s},
                {"residue", to_json(report.residue)},
                {"expected", to_string(report.expected)},
                {"verdict", report.holds ? "holds" : "fails"}};
}

json to_json(const Congruence18Report& report) {
    json j{{"congruence_id", "eq18"},
           {"p", report.p},
           {"s", report.s},
           {"lhs", to_json(report.lhs)},
           {"rhs", to_json(report.rhs)},
           {"paths_agree", report.paths_agree},
           {"mod_p_holds", report.mod_p_holds},
           {"verdict", report.holds ? "holds" : "fails"}};
    if (report.direct_lhs) j["direct_lhs"] = to_json(*report.direct_lhs);
    return j;
}

json to_json(const Congruence20Report& report) {
    return json{{"congruence_id", "eq20"},
                {"p", report.p},
                {"s", report.s},
                {"glaisher_mod_p4", to_json(report.glaisher_mod_p4)},
                {"glaisher_mod_p4_holds", report.glaisher_mod_p4_holds},
                {"lhs", to_json(report.lhs)},
                {"rhs", to_json(report.rhs)},
                {"verdict", report.holds ? "holds" : "fails"}};
}

json to_json(const ScanRecord& record) {
    return json{{"p", record.p},
                {"residue", to_string(record.residue.value)},
                {"modulus", "p^4"},
                {"wolstenholme", record.is_wolstenholme}};
}

ScanRecord scan_record_from_json(const json& j) {
    ScanRecord rec;
    rec.p = j.at("p").get<std::uint64_t>();
    rec.residue.p = rec.p;
    rec.residue.k = 4;
    rec.residue.value = parse_bigint(j.at("residue").get<std::string>());
    BigInt modulus(1);
    for (int i = 0; i < 4; ++i) modulus *= static_cast<unsigned long>(rec.p);
    rec.residue.modulus = modulus;
    rec.is_wolstenholme = j.at("wolstenholme").get<bool>();
    return rec;
}

}  // namespace cvlab
