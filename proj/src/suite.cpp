#include "cvlab/suite.hpp"

namespace cvlab {

using nlohmann::json;

namespace {

std::int64_t get_int(const json& item, const char* key) {
    if (!item.contains(key))
        throw std::invalid_argument(std::string("missing parameter '") + key + "'");
    const auto& v = item.at(key);
    if (!v.is_number_integer())
        throw std::invalid_argument(std::string("parameter '") + key +
                                    "' must be an integer");
    return v.get<std::int64_t>();
}

Caps get_caps(const json& item) {
    if (!item.contains("caps") || !item.at("caps").is_array())
        throw std::invalid_argument("missing array parameter 'caps'");
    std::vector<std::int64_t> parts;
    for (const auto& v : item.at("caps")) parts.push_back(v.get<std::int64_t>());
    return Caps(std::move(parts));
}

std::vector<GaussianRational> get_z_list(const json& item, const char* key = "z") {
    if (!item.contains(key) || !item.at(key).is_array())
        throw std::invalid_argument(std::string("missing array parameter '") + key +
                                    "'");
    std::vector<GaussianRational> z;
    for (const auto& v : item.at(key))
        z.push_back(parse_gaussian(v.get<std::string>()));
    return z;
}

GaussianRational get_gaussian(const json& item, const char* key) {
    if (!item.contains(key))
        throw std::invalid_argument(std::string("missing parameter '") + key + "'");
    return parse_gaussian(item.at(key).get<std::string>());
}

std::vector<ExactMatrix> get_matrices(const json& item) {
    if (!item.contains("matrices") || !item.at("matrices").is_array())
        throw std::invalid_argument("missing array parameter 'matrices'");
    std::vector<ExactMatrix> out;
    for (const auto& v : item.at("matrices")) out.push_back(matrix_from_json(v));
    return out;
}

std::uint64_t get_prime(const json& item) {
    const std::int64_t p = get_int(item, "p");
    if (p < 2) throw std::invalid_argument("parameter 'p' must be >= 2");
    return static_cast<std::uint64_t>(p);
}

}  // namespace

json run_suite_item(const json& item, std::uint64_t budget) {
    if (!item.is_object() || !item.contains("id"))
        throw std::invalid_argument("suite item must be an object with an 'id'");
    const std::string id = item.at("id").get<std::string>();

    if (id == "eq8")
        return to_json(check_eq8(get_caps(item), get_z_list(item),
                                 get_int(item, "m"), budget));
    if (id == "eq12")
        return to_json(check_eq12(get_caps(item), get_int(item, "m"), budget));
    if (id == "eq13")
        return to_json(
            check_eq13(get_int(item, "a"), get_int(item, "b"), get_int(item, "m")));
    if (id == "eq14")
        return to_json(check_eq14_corrected(get_int(item, "n1"), get_int(item, "n2"),
                                            get_gaussian(item, "z"),
                                            get_int(item, "m")));
    if (id == "eq15_16")
        return to_json(check_eq15_16_corrected(
            get_int(item, "n1"), get_int(item, "n2"), get_int(item, "n3"),
            get_gaussian(item, "z"), get_gaussian(item, "w"), get_int(item, "m"),
            budget));
    if (id == "eq17")
        return to_json(check_eq17(get_int(item, "s"), get_int(item, "l"),
                                  get_int(item, "m"), budget));
    if (id == "eq21")
        return to_json(check_eq21(get_int(item, "n"), get_int(item, "s"),
                                  get_int(item, "m"), budget));
    if (id == "eq22")
        return to_json(check_eq22(get_caps(item), get_z_list(item),
                                  get_int(item, "m"), budget));
    if (id == "eq26")
        return to_json(check_eq26(get_int(item, "s"), get_int(item, "l"),
                                  get_int(item, "m"), budget));
    if (id == "eq27")
        return to_json(check_eq27_corrected(get_caps(item), get_z_list(item),
                                            get_int(item, "m"), budget));
    if (id == "remark22")
        return to_json(check_remark22(get_int(item, "k1"), get_int(item, "k2"),
                                      get_int(item, "n")));
    if (id == "eq28")
        return to_json(check_eq28(get_caps(item), get_matrices(item),
                                  get_int(item, "m"), budget));
    if (id == "eq29")
        return to_json(check_eq29(get_caps(item), get_matrices(item),
                                  get_int(item, "m"), budget));
    if (id == "eq30")
        return to_json(check_eq30(get_caps(item), get_matrices(item),
                                  get_int(item, "m"), budget));
    if (id == "glaisher") {
        const int k = item.contains("k") ? static_cast<int>(get_int(item, "k")) : 3;
        return to_json(check_glaisher(get_prime(item), get_int(item, "s"), k));
    }
    if (id == "eq18") {
        const bool direct =
            item.contains("direct") && item.at("direct").get<bool>();
        return to_json(
            check_congruence18(get_prime(item), get_int(item, "s"), direct, budget));
    }
    if (id == "eq20")
        return to_json(check_congruence20(get_prime(item), get_int(item, "s")));

    throw std::invalid_argument("unknown checker id '" + id + "'");
}

const std::vector<std::string>& known_suite_ids() {
    static const std::vector<std::string> ids = {
        "eq8",  "eq12", "eq13", "eq14", "eq15_16", "eq17",     "eq21",
        "eq22", "eq26", "eq27", "remark22", "eq28", "eq29",    "eq30",
        "glaisher", "eq18", "eq20"};
    return ids;
}

}  // namespace cvlab
