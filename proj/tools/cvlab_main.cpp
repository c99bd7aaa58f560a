#include "cvlab/distribution.hpp"
#include "cvlab/report_json.hpp"
#include "cvlab/suite.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;

// Exit-code contract: 0 all checks hold, 1 a mathematical check failed,
// 2 usage/parse/precondition/resource errors.
constexpr int kExitPass = 0;
constexpr int kExitMathFailure = 1;
constexpr int kExitUsage = 2;

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) out.push_back(item);
    if (out.empty()) throw std::invalid_argument("empty list argument");
    return out;
}

json int_list_json(const std::string& text) {
    json arr = json::array();
    for (const auto& piece : split_csv(text)) {
        std::size_t used = 0;
        const long long v = std::stoll(piece, &used);
        if (used != piece.size())
            throw std::invalid_argument("bad integer in list: '" + piece + "'");
        arr.push_back(v);
    }
    return arr;
}

json string_list_json(const std::string& text) {
    json arr = json::array();
    for (const auto& piece : split_csv(text)) arr.push_back(piece);
    return arr;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string value_to_text(const json& v) {
    return v.is_string() ? v.get<std::string>() : v.dump();
}

// One line per report item, whatever checker produced it.
void print_item(std::ostream& os, const json& item) {
    if (item.contains("error")) {
        os << item.value("id", std::string("item")) << ": error - "
           << item.at("error").get<std::string>() << "\n";
        return;
    }
    if (!item.contains("verdict")) {
        // Informational items (moment estimates, pmf blocks) carry no verdict.
        if (item.contains("order") && item.contains("value")) {
            os << "order " << item.at("order").get<int>()
               << (item.value("absolute", false) ? " (absolute)" : "") << ": "
               << value_to_text(item.at("value"));
            if (item.contains("se_sq"))
                os << "  se_sq=" << value_to_text(item.at("se_sq"));
            os << "\n";
        } else {
            os << item.value("id", std::string("item")) << ": " << item.dump()
               << "\n";
        }
        return;
    }
    const std::string id = item.contains("identity_id")
                               ? item.at("identity_id").get<std::string>()
                               : item.value("congruence_id", std::string("item"));
    os << id << ": " << item.at("verdict").get<std::string>();
    if (item.contains("lhs"))
        os << "  lhs=" << value_to_text(item.at("lhs"))
           << "  rhs=" << value_to_text(item.at("rhs"));
    if (item.contains("params")) os << "  params=" << item.at("params").dump();
    os << "\n";
    if (item.contains("note"))
        os << "  note: " << item.at("note").get<std::string>() << "\n";
}

struct RunOutcome {
    json report;
    int exit_code = kExitPass;
};

// Wraps item reports into the versioned run document and derives the exit
// code from the pass/fail/error counts.
RunOutcome make_run_report(const std::string& command, json items,
                           std::int64_t wall_ms,
                           std::optional<std::int64_t> seed = std::nullopt) {
    int pass = 0, fail = 0, error = 0;
    json notes = json::array();
    for (const auto& item : items) {
        if (item.contains("error")) {
            ++error;
        } else if (item.value("verdict", std::string()) == "holds") {
            ++pass;
        } else if (item.contains("verdict")) {
            ++fail;
        } else {
            ++pass;  // informational items (pmf, estimates) count as pass
        }
        if (item.contains("note")) {
            const auto& note = item.at("note");
            bool seen = false;
            for (const auto& existing : notes) seen = seen || existing == note;
            if (!seen) notes.push_back(note);
        }
    }
    json report{{"schema", cvlab::kSchema}, {"command", command},
                {"items", std::move(items)}, {"pass", pass},
                {"fail", fail},             {"error", error},
                {"errata_notes", notes},    {"wall_ms", wall_ms}};
    if (seed) report["seed"] = *seed;

    RunOutcome out;
    out.report = std::move(report);
    out.exit_code = fail > 0 ? kExitMathFailure : (error > 0 ? kExitUsage : kExitPass);
    return out;
}

int emit(const RunOutcome& outcome, bool json_out) {
    if (json_out) {
        std::cout << cvlab::dump_json(outcome.report);
    } else {
        for (const auto& item : outcome.report.at("items"))
            print_item(std::cout, item);
        std::cout << outcome.report.at("pass").get<int>() << " pass, "
                  << outcome.report.at("fail").get<int>() << " fail, "
                  << outcome.report.at("error").get<int>() << " error ("
                  << outcome.report.at("wall_ms").get<std::int64_t>() << " ms)\n";
    }
    return outcome.exit_code;
}

class Stopwatch {
public:
    std::int64_t ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_ =
        std::chrono::steady_clock::now();
};

cvlab::MultisetSpec spec_from_flags(const std::string& values,
                                    const std::string& mults) {
    std::vector<cvlab::GaussianRational> z;
    for (const auto& piece : split_csv(values))
        z.push_back(cvlab::parse_gaussian(piece));
    std::vector<std::int64_t> n;
    for (const auto& piece : int_list_json(mults)) n.push_back(piece.get<std::int64_t>());
    return {std::move(z), cvlab::Caps(std::move(n))};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact subset-sum moment, identity, and congruence verification"};
    app.require_subcommand(1);

    bool json_out = false;
    std::uint64_t budget = cvlab::kDefaultBudget;
    const auto add_common = [&](CLI::App* sub) {
        sub->add_flag("--json", json_out, "emit the run report as JSON");
        sub->add_option("--budget", budget, "composition enumeration budget")
            ->envname("CVLAB_BUDGET");
    };

    // ---- verify ----------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "check one identity by id");
    std::string v_id, v_caps, v_z, v_w, v_matrices, v_matrices_file;
    std::int64_t v_m = 0, v_a = 0, v_b = 0, v_n1 = 0, v_n2 = 0, v_n3 = 0;
    std::int64_t v_s = 0, v_l = 0, v_n = 0, v_k1 = 0, v_k2 = 0, v_p = 0, v_k = 0;
    bool v_direct = false;
    verify->add_option("id", v_id, "checker id (eq8, eq12, ..., remark22, eq28..eq30, glaisher, eq18, eq20)")
        ->required();
    verify->add_option("--caps", v_caps, "comma-separated multiplicities, e.g. 2,1");
    verify->add_option("--z", v_z, "value or comma-separated values, e.g. 1,0+1i");
    verify->add_option("--w", v_w, "second value (eq15_16)");
    verify->add_option("--matrices", v_matrices, "JSON array of matrices");
    verify->add_option("--matrices-file", v_matrices_file, "file with a JSON array of matrices");
    verify->add_option("--m", v_m);
    verify->add_option("--a", v_a);
    verify->add_option("--b", v_b);
    verify->add_option("--n1", v_n1);
    verify->add_option("--n2", v_n2);
    verify->add_option("--n3", v_n3);
    verify->add_option("--s", v_s);
    verify->add_option("--l", v_l);
    verify->add_option("--n", v_n);
    verify->add_option("--k1", v_k1);
    verify->add_option("--k2", v_k2);
    verify->add_option("--p", v_p);
    verify->add_option("--k", v_k, "modulus exponent (glaisher)");
    verify->add_flag("--direct", v_direct, "also run the direct enumeration path (eq18)");
    add_common(verify);

    const auto build_verify_item = [&]() {
        json item{{"id", v_id}};
        const auto set_int = [&](const char* flag, const char* key, std::int64_t v) {
            if (verify->count(flag)) item[key] = v;
        };
        set_int("--m", "m", v_m);
        set_int("--a", "a", v_a);
        set_int("--b", "b", v_b);
        set_int("--n1", "n1", v_n1);
        set_int("--n2", "n2", v_n2);
        set_int("--n3", "n3", v_n3);
        set_int("--s", "s", v_s);
        set_int("--l", "l", v_l);
        set_int("--n", "n", v_n);
        set_int("--k1", "k1", v_k1);
        set_int("--k2", "k2", v_k2);
        set_int("--p", "p", v_p);
        set_int("--k", "k", v_k);
        if (verify->count("--caps")) item["caps"] = int_list_json(v_caps);
        if (verify->count("--z")) {
            if (v_id == "eq14" || v_id == "eq15_16")
                item["z"] = v_z;
            else
                item["z"] = string_list_json(v_z);
        }
        if (verify->count("--w")) item["w"] = v_w;
        if (verify->count("--matrices"))
            item["matrices"] = json::parse(v_matrices);
        else if (verify->count("--matrices-file"))
            item["matrices"] = json::parse(read_file(v_matrices_file));
        if (v_direct) item["direct"] = true;
        return item;
    };

    // ---- congruence ------------------------------------------------------
    auto* congruence = app.add_subcommand("congruence", "check glaisher/eq18/eq20");
    std::string c_id;
    std::int64_t c_p = 0, c_s = 0, c_k = 0;
    bool c_direct = false;
    congruence->add_option("--id", c_id, "glaisher, eq18, or eq20")->required();
    congruence->add_option("--p", c_p, "prime")->required();
    congruence->add_option("--s", c_s, "multiplier s >= 1")->required();
    congruence->add_option("--k", c_k, "modulus exponent (glaisher only)");
    congruence->add_flag("--direct", c_direct, "also run the direct path (eq18)");
    add_common(congruence);

    // ---- moments ---------------------------------------------------------
    auto* moments = app.add_subcommand("moments", "exact moments of X(m, spec)");
    std::string mo_values, mo_mults, mo_order = "all", mo_method = "both";
    std::int64_t mo_m = 0;
    bool mo_pmf = false;
    moments->add_option("--values", mo_values, "distinct values, e.g. 1,2+1i")->required();
    moments->add_option("--mults", mo_mults, "multiplicities, e.g. 2,1")->required();
    moments->add_option("--m", mo_m, "subset size")->required();
    moments->add_option("--order", mo_order, "1, 2, 3, or all (default all)");
    moments->add_option("--method", mo_method, "closed, oracle, or both (default both)");
    moments->add_flag("--pmf", mo_pmf, "include the exact pmf");
    add_common(moments);

    // ---- sample ----------------------------------------------------------
    auto* sample = app.add_subcommand("sample", "Monte-Carlo moment estimates");
    std::string sa_values, sa_mults;
    std::int64_t sa_m = 0;
    std::uint64_t sa_trials = 0, sa_seed = 0;
    sample->add_option("--values", sa_values)->required();
    sample->add_option("--mults", sa_mults)->required();
    sample->add_option("--m", sa_m)->required();
    sample->add_option("--trials", sa_trials)->required();
    sample->add_option("--seed", sa_seed)->required();
    add_common(sample);

    // ---- suite -----------------------------------------------------------
    auto* suite = app.add_subcommand("suite", "run a JSON batch of checkers");
    std::string su_file;
    suite->add_option("--file", su_file, "suite file (JSON array or object)")->required();
    add_common(suite);

    // ---- scan-wolstenholme -------------------------------------------------
    auto* scan = app.add_subcommand("scan-wolstenholme",
                                    "scan primes for C(2p-1,p-1) == 1 mod p^4");
    std::uint64_t sc_max = 0;
    std::string sc_checkpoint;
    scan->add_option("--max", sc_max, "scan primes up to this bound")->required();
    scan->add_option("--checkpoint", sc_checkpoint,
                     "JSON-lines file appended every 1000 primes; enables resume");
    add_common(scan);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        Stopwatch watch;

        if (verify->parsed()) {
            json item = build_verify_item();
            json report = cvlab::run_suite_item(item, budget);
            return emit(make_run_report("verify", json::array({report}), watch.ms()),
                        json_out);
        }

        if (congruence->parsed()) {
            json item{{"id", c_id}, {"p", c_p}, {"s", c_s}};
            if (congruence->count("--k")) item["k"] = c_k;
            if (c_direct) item["direct"] = true;
            json report = cvlab::run_suite_item(item, budget);
            return emit(
                make_run_report("congruence", json::array({report}), watch.ms()),
                json_out);
        }

        if (moments->parsed()) {
            const cvlab::MultisetSpec spec = spec_from_flags(mo_values, mo_mults);
            const bool want_closed = mo_method == "closed" || mo_method == "both";
            const bool want_oracle = mo_method == "oracle" || mo_method == "both";
            if (!want_closed && !want_oracle)
                throw std::invalid_argument("--method must be closed, oracle, or both");

            std::vector<int> orders;
            if (mo_order == "all") {
                orders = {1};
                if (spec.total() >= 2 || !want_closed) orders = {1, 2, 3};
            } else {
                orders = {std::stoi(mo_order)};
            }

            bool mismatch = false;
            json items = json::array();
            for (const int order : orders) {
                const bool absolute = order == 2;
                json item{{"order", order}, {"absolute", absolute}};
                std::optional<cvlab::GaussianRational> closed_value, oracle_value;
                if (want_closed) {
                    cvlab::MomentReport rep =
                        order == 1   ? cvlab::mean_closed(spec, mo_m)
                        : order == 2 ? cvlab::second_abs_moment_closed(spec, mo_m)
                                     : cvlab::third_moment_closed(spec, mo_m);
                    closed_value = rep.value;
                    item["closed_form"] = cvlab::to_json(rep);
                }
                if (want_oracle) {
                    cvlab::MomentReport rep =
                        cvlab::moment_oracle(spec, mo_m, order, absolute, budget);
                    oracle_value = rep.value;
                    item["oracle"] = cvlab::to_json(rep);
                }
                if (closed_value && oracle_value) {
                    const bool agree = *closed_value == *oracle_value;
                    item["verdict"] = agree ? "holds" : "fails";
                    mismatch = mismatch || !agree;
                }
                items.push_back(std::move(item));
            }
            if (mo_pmf) items.push_back(cvlab::to_json(cvlab::pmf(spec, mo_m, budget), mo_m));

            RunOutcome outcome = make_run_report("moments", std::move(items), watch.ms());
            if (mismatch) outcome.exit_code = kExitMathFailure;
            if (json_out) return emit(outcome, true);
            for (const auto& item : outcome.report.at("items")) {
                if (item.contains("order")) {
                    std::cout << "order " << item.at("order").get<int>()
                              << (item.at("absolute").get<bool>() ? " (absolute)" : "")
                              << ":";
                    if (item.contains("closed_form"))
                        std::cout << "  closed="
                                  << item.at("closed_form").at("value").get<std::string>();
                    if (item.contains("oracle"))
                        std::cout << "  oracle="
                                  << item.at("oracle").at("value").get<std::string>();
                    if (item.contains("verdict"))
                        std::cout << "  [" << item.at("verdict").get<std::string>() << "]";
                    std::cout << "\n";
                } else {
                    std::cout << "pmf: " << item.dump() << "\n";
                }
            }
            return outcome.exit_code;
        }

        if (sample->parsed()) {
            const cvlab::MultisetSpec spec = spec_from_flags(sa_values, sa_mults);
            json items = json::array();
            for (const auto& rep : cvlab::sample_moments(spec, sa_m, sa_trials, sa_seed))
                items.push_back(cvlab::to_json(rep));
            return emit(make_run_report("sample", std::move(items), watch.ms(),
                                        static_cast<std::int64_t>(sa_seed)),
                        json_out);
        }

        if (suite->parsed()) {
            json doc = json::parse(read_file(su_file));
            json config_items;
            std::optional<std::int64_t> seed;
            if (doc.is_array()) {
                config_items = doc;
            } else {
                config_items = doc.at("items");
                if (doc.contains("budget") && !suite->count("--budget"))
                    budget = doc.at("budget").get<std::uint64_t>();
                if (doc.contains("seed")) seed = doc.at("seed").get<std::int64_t>();
            }

            json items = json::array();
            for (const auto& item : config_items) {
                try {
                    items.push_back(cvlab::run_suite_item(item, budget));
                } catch (const std::exception& e) {
                    json err{{"error", e.what()}};
                    if (item.is_object() && item.contains("id")) err["id"] = item.at("id");
                    items.push_back(std::move(err));
                }
            }
            return emit(make_run_report("suite", std::move(items), watch.ms(), seed),
                        json_out);
        }

        if (scan->parsed()) {
            std::uint64_t start_p = 5;
            json hits = json::array();
            std::uint64_t scanned = 0;

            if (!sc_checkpoint.empty()) {
                std::ifstream in(sc_checkpoint);
                std::string line;
                while (in && std::getline(in, line)) {
                    if (line.empty()) continue;
                    const json rec = json::parse(line);
                    ++scanned;
                    start_p = rec.at("p").get<std::uint64_t>() + 1;
                    if (rec.at("wolstenholme").get<bool>()) hits.push_back(rec);
                }
            }

            std::vector<json> buffer;
            std::ofstream out;
            if (!sc_checkpoint.empty())
                out.open(sc_checkpoint, std::ios::app);
            const auto flush_buffer = [&]() {
                if (!out.is_open()) {
                    buffer.clear();
                    return;
                }
                for (const auto& rec : buffer) out << rec.dump() << "\n";
                out.flush();
                buffer.clear();
            };

            cvlab::wolstenholme_scan(
                sc_max,
                [&](const cvlab::ScanRecord& rec) {
                    ++scanned;
                    const json j = cvlab::to_json(rec);
                    if (rec.is_wolstenholme) {
                        hits.push_back(j);
                        if (!json_out)
                            std::cout << "wolstenholme prime: " << rec.p << "\n";
                    }
                    buffer.push_back(j);
                    if (buffer.size() >= 1000) flush_buffer();
                },
                start_p);
            flush_buffer();

            json report{{"schema", cvlab::kSchema},
                        {"command", "scan-wolstenholme"},
                        {"max", sc_max},
                        {"scanned", scanned},
                        {"hits", hits},
                        {"wall_ms", watch.ms()}};
            if (json_out) {
                std::cout << cvlab::dump_json(report);
            } else {
                std::cout << "scanned " << scanned << " primes up to " << sc_max
                          << "; " << hits.size() << " wolstenholme prime(s) ("
                          << watch.ms() << " ms)\n";
            }
            return kExitPass;
        }
    } catch (const cvlab::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    return kExitUsage;
}
