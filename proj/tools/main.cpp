#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "casimir/cache.hpp"
#include "casimir/capelli.hpp"
#include "casimir/central_polys.hpp"
#include "casimir/config.hpp"
#include "casimir/json_io.hpp"
#include "casimir/verify.hpp"

using namespace casimir;

namespace {

// Everything a run depends on. Only the semantic fields (command, n, lambda,
// mu_samples, flags) enter the output and the cache key; format, cache path,
// parallelism and term bound never change a result, only how it is produced.
struct RunConfig {
    std::string command;
    int n = 2;
    std::optional<DominantWeight> lambda;
    std::string mu_samples = "auto";
    bool hc = false;
    std::string suite = "all";
    bool exhaustive = false;
    std::string format = "text";
    std::string cache_path;
    int parallelism = 1;
    std::size_t term_bound = 0;  // 0 keeps the default
};

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

DominantWeight parse_weight(const std::string& text, int n) {
    std::vector<long> comps;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string part = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                       : comma - pos);
        try {
            std::size_t used = 0;
            comps.push_back(std::stol(part, &used));
            if (used != part.size()) throw std::invalid_argument(part);
        } catch (const std::exception&) {
            throw UsageError("weight component is not an integer: '" + part + "'");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (static_cast<int>(comps.size()) != n)
        throw UsageError("weight has " + std::to_string(comps.size()) +
                         " components, expected " + std::to_string(n));
    try {
        return DominantWeight(comps);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string(e.what()) + ": " + text);
    }
}

std::vector<DominantWeight> parse_mu_samples(const std::string& text, int n) {
    std::vector<DominantWeight> out;
    if (text == "auto" || text.empty()) return out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t semi = text.find(';', pos);
        out.push_back(parse_weight(
            text.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos),
            n));
        if (semi == std::string::npos) break;
        pos = semi + 1;
    }
    return out;
}

std::string weight_key(const DominantWeight& w) {
    std::string out;
    for (long c : w.comps()) {
        if (!out.empty()) out += ",";
        out += std::to_string(c);
    }
    return out;
}

// Partition shape used by the trace commands: the weight with trailing zeros
// dropped; must have no negative part and at least one box.
std::vector<long> partition_shape(const DominantWeight& w) {
    if (!w.is_partition())
        throw UsageError("weight must be a partition (no negative components): " +
                         w.to_string());
    std::vector<long> shape = w.comps();
    while (!shape.empty() && shape.back() == 0) shape.pop_back();
    if (shape.empty()) throw UsageError("weight must have at least one box");
    return shape;
}

std::string cache_key(const RunConfig& cfg) {
    std::string key = cfg.command + "/n=" + std::to_string(cfg.n);
    if (cfg.lambda) key += "/lambda=" + weight_key(*cfg.lambda);
    if (cfg.command == "sdet") key += cfg.hc ? "/hc" : "";
    if (cfg.command == "charpoly") key += "/mu=" + cfg.mu_samples;
    if (cfg.command == "verify") key += "/suite=" + cfg.suite;
    if (cfg.command == "conjecture-scan" && cfg.exhaustive) key += "/exhaustive";
    return key;
}

OrderedJson run_omega(const RunConfig& cfg) {
    Representation rep = build_rep(*cfg.lambda, cfg.n);
    return {{"command", "omega"},
            {"engine", kEngineVersion},
            {"n", cfg.n},
            {"lambda", cfg.lambda->comps()},
            {"dim", rep.dim},
            {"matrix", uea_matrix_json(braided_casimir(rep))}};
}

OrderedJson run_sdet(const RunConfig& cfg) {
    CentralPolynomial cp = shifted_determinant(build_rep(*cfg.lambda, cfg.n));
    OrderedJson out = {{"command", "sdet"},
                       {"engine", kEngineVersion},
                       {"n", cfg.n},
                       {"lambda", cfg.lambda->comps()},
                       {"result", central_poly_json(cp)}};
    if (cfg.hc) out["hc"] = hc_poly_json(hc_image_poly(cp.poly));
    return out;
}

OrderedJson run_hc(const RunConfig& cfg) {
    CentralPolynomial cp = shifted_determinant(build_rep(*cfg.lambda, cfg.n));
    return {{"command", "hc"},
            {"engine", kEngineVersion},
            {"n", cfg.n},
            {"lambda", cfg.lambda->comps()},
            {"hc", hc_poly_json(hc_image_poly(cp.poly))}};
}

OrderedJson run_charpoly(const RunConfig& cfg) {
    std::vector<DominantWeight> mus = parse_mu_samples(cfg.mu_samples, cfg.n);
    InterpolationResult ir = charpoly_interpolate(*cfg.lambda, cfg.n, mus);
    OrderedJson used = OrderedJson::array();
    for (const DominantWeight& m : ir.samples_used) used.push_back(m.comps());
    OrderedJson discarded = OrderedJson::array();
    for (const DominantWeight& m : ir.samples_discarded) discarded.push_back(m.comps());
    return {{"command", "charpoly"},
            {"engine", kEngineVersion},
            {"n", cfg.n},
            {"lambda", cfg.lambda->comps()},
            {"hc", hc_poly_json(ir.hc)},
            {"samples_used", used},
            {"samples_discarded", discarded},
            {"holdouts_checked", ir.holdouts_checked}};
}

OrderedJson run_capelli(const RunConfig& cfg) {
    std::vector<long> shape = partition_shape(*cfg.lambda);
    UPoly c = capelli_poly(shape, cfg.n);  // NonCentralError on failure
    return {{"command", "capelli"},
            {"engine", kEngineVersion},
            {"n", cfg.n},
            {"lambda", cfg.lambda->comps()},
            {"shape", shape},
            {"polynomial", upoly_json(c)},
            {"hc", hc_poly_json(hc_image_poly(c))},
            {"central", true}};
}

OrderedJson run_verify(const RunConfig& cfg) {
    std::vector<CheckResult> results = run_verify_suite(cfg.suite, cfg.n);
    OrderedJson checks = OrderedJson::array();
    int failed = 0;
    for (const CheckResult& r : results) {
        if (!r.pass) ++failed;
        OrderedJson params = OrderedJson::object();
        for (const auto& [k, v] : r.params) params[k] = v;
        OrderedJson witness = OrderedJson::object();
        for (const auto& [k, v] : r.witness) witness[k] = v;
        checks.push_back(
            {{"check", r.check}, {"params", params}, {"pass", r.pass}, {"witness", witness}});
    }
    return {{"command", "verify"}, {"engine", kEngineVersion},
            {"suite", cfg.suite},  {"n", cfg.n},
            {"checks", checks},    {"failed", failed}};
}

OrderedJson run_scan(const RunConfig& cfg) {
    ScanReport rep = conjecture_scan(*cfg.lambda, cfg.exhaustive);
    auto scan_json = [](const BasisScan& b) {
        OrderedJson centrality = OrderedJson::object();
        for (const auto& [deg, ok] : b.centrality) centrality[std::to_string(deg)] = ok;
        return OrderedJson{
            {"order", b.order}, {"centrality", centrality}, {"all_central", b.all_central}};
    };
    OrderedJson weights = OrderedJson::array();
    for (const auto& w : rep.basis_weights) weights.push_back(w);
    OrderedJson out = {{"command", "conjecture-scan"},
                       {"engine", kEngineVersion},
                       {"experimental", true},
                       {"n", cfg.n},
                       {"lambda", cfg.lambda->comps()},
                       {"basis_weights", weights},
                       {"default_basis", scan_json(rep.default_basis)}};
    if (rep.exhaustive) {
        out["permutations_tried"] = rep.permutations_tried;
        out["permutations_all_central"] = rep.permutations_all_central;
        OrderedJson orders = OrderedJson::array();
        for (const BasisScan& b : rep.all_central_orders) orders.push_back(scan_json(b));
        out["all_central_orders"] = orders;
    }
    return out;
}

void print_check_line(std::ostream& os, const OrderedJson& c) {
    os << (c["pass"].get<bool>() ? "[PASS] " : "[FAIL] ") << c["check"].get<std::string>();
    std::string detail;
    for (const auto& [k, v] : c["params"].items())
        detail += (detail.empty() ? "" : ", ") + k + "=" + v.get<std::string>();
    if (!detail.empty()) os << " (" << detail << ")";
    for (const auto& [k, v] : c["witness"].items())
        os << "  " << k << "=" << v.get<std::string>();
    os << "\n";
}

void print_text(const OrderedJson& out) {
    const std::string cmd = out["command"].get<std::string>();
    if (cmd == "omega") {
        for (const auto& row : out["matrix"]) {
            std::string line = "[";
            for (const auto& e : row) {
                if (line.size() > 1) line += ",  ";
                line += e.get<std::string>();
            }
            std::cout << line << "]\n";
        }
    } else if (cmd == "sdet") {
        const OrderedJson& r = out["result"];
        std::cout << "D(u) = " << r["polynomial"]["display"].get<std::string>() << "\n";
        std::cout << "all coefficients central: "
                  << (r["all_central"].get<bool>() ? "yes" : "NO") << "\n";
        if (out.contains("hc"))
            std::cout << "hc image = " << out["hc"]["display"].get<std::string>() << "\n";
    } else if (cmd == "hc") {
        std::cout << "hc image = " << out["hc"]["display"].get<std::string>() << "\n";
    } else if (cmd == "charpoly") {
        std::cout << "charpoly hc = " << out["hc"]["display"].get<std::string>() << "\n";
        std::cout << "samples used: " << out["samples_used"].size()
                  << ", discarded: " << out["samples_discarded"].size()
                  << ", holdouts checked: " << out["holdouts_checked"].get<int>() << "\n";
    } else if (cmd == "capelli") {
        std::cout << "trace polynomial = " << out["polynomial"]["display"].get<std::string>()
                  << "\n";
        std::cout << "hc image = " << out["hc"]["display"].get<std::string>() << "\n";
    } else if (cmd == "verify") {
        for (const auto& c : out["checks"]) print_check_line(std::cout, c);
        int failed = out["failed"].get<int>();
        std::cout << out["checks"].size() << " checks, " << failed << " failed\n";
    } else if (cmd == "conjecture-scan") {
        std::cout << "experimental scan, nothing asserted\n";
        const OrderedJson& d = out["default_basis"];
        std::cout << "default order all central: "
                  << (d["all_central"].get<bool>() ? "yes" : "no") << "\n";
        for (const auto& [deg, ok] : d["centrality"].items())
            std::cout << "  u^" << deg << ": " << (ok.get<bool>() ? "central" : "not central")
                      << "\n";
        if (out.contains("permutations_tried"))
            std::cout << "orders tried: " << out["permutations_tried"].get<long>()
                      << ", all central: " << out["permutations_all_central"].get<long>()
                      << "\n";
    }
}

int emit(const RunConfig& cfg, const OrderedJson& out) {
    if (cfg.format == "json")
        std::cout << out.dump(2) << "\n";
    else
        print_text(out);
    if (cfg.command == "verify" && out["failed"].get<int>() > 0) return 1;
    return 0;
}

int run(const RunConfig& cfg) {
    if (cfg.n < 2) throw UsageError("rank must be at least 2");
    if (cfg.parallelism < 1) throw UsageError("parallelism must be at least 1");
    limits().parallelism = cfg.parallelism;
    if (cfg.term_bound > 0) limits().term_bound = cfg.term_bound;

    std::optional<CacheStore> store;
    if (!cfg.cache_path.empty()) store.emplace(cfg.cache_path);

    if (store) {
        if (auto hit = store->get(cache_key(cfg))) return emit(cfg, *hit);
    }

    OrderedJson out;
    if (cfg.command == "omega")
        out = run_omega(cfg);
    else if (cfg.command == "sdet")
        out = run_sdet(cfg);
    else if (cfg.command == "hc")
        out = run_hc(cfg);
    else if (cfg.command == "charpoly")
        out = run_charpoly(cfg);
    else if (cfg.command == "capelli")
        out = run_capelli(cfg);
    else if (cfg.command == "verify")
        out = run_verify(cfg);
    else
        out = run_scan(cfg);

    if (store) store->put(cache_key(cfg), out);
    return emit(cfg, out);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact symbolic engine for central polynomials of gl_n"};
    app.require_subcommand(1);

    RunConfig cfg;
    const char* env_cache = std::getenv("CASIMIR_CACHE");
    if (env_cache != nullptr) cfg.cache_path = env_cache;

    std::string lambda_text;
    auto add_common = [&](CLI::App* sub, bool with_lambda) {
        sub->add_option("--format", cfg.format, "output format, text or json")
            ->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--cache", cfg.cache_path,
                        "cache file path (default from CASIMIR_CACHE; empty disables)");
        sub->add_option("--parallelism", cfg.parallelism,
                        "worker threads; never changes any result");
        sub->add_option("--term-bound", cfg.term_bound,
                        "abort once any element exceeds this many terms");
        sub->add_option("--n", cfg.n, "rank of gl_n")->required();
        if (with_lambda)
            sub->add_option("--lambda", lambda_text,
                            "dominant weight, comma-separated integers of length n")
                ->required();
    };

    add_common(app.add_subcommand("omega", "braided Casimir matrix of the weight"), true);
    CLI::App* sdet = app.add_subcommand(
        "sdet", "shifted determinant with per-coefficient centrality report");
    add_common(sdet, true);
    sdet->add_flag("--hc", cfg.hc, "include the Harish-Chandra image");
    add_common(app.add_subcommand("hc", "Harish-Chandra image of the shifted determinant"),
               true);
    CLI::App* charpoly = app.add_subcommand(
        "charpoly", "characteristic polynomial recovered by exact interpolation");
    add_common(charpoly, true);
    charpoly->add_option("--mu-samples", cfg.mu_samples,
                         "semicolon-separated sample weights, or 'auto'");
    add_common(app.add_subcommand("capelli", "trace of the shifted product on the "
                                             "symmetrizer image, with centrality"),
               true);
    CLI::App* verify =
        app.add_subcommand("verify", "run a verification suite; fails on any mismatch");
    add_common(verify, false);
    verify->add_option("--suite", cfg.suite, "gl2|vector|fusion|omega-star|plethysm|qdet|rtt|all")
        ->check(CLI::IsMember(
            {"gl2", "vector", "fusion", "omega-star", "plethysm", "qdet", "rtt", "all"}));
    CLI::App* scan = app.add_subcommand(
        "conjecture-scan", "experimental basis-order centrality scan; records, never asserts");
    add_common(scan, true);
    scan->add_flag("--exhaustive", cfg.exhaustive,
                   "permute the diagonal basis order (small dimensions only)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    cfg.command = app.get_subcommands().front()->get_name();
    try {
        if (!lambda_text.empty()) cfg.lambda = parse_weight(lambda_text, cfg.n);
        return run(cfg);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const TermBoundExceeded& e) {
        std::cerr << "resource bound: " << e.what() << "\n";
        return 3;
    } catch (const TensorBoundExceeded& e) {
        std::cerr << "resource bound: " << e.what() << "\n";
        return 3;
    } catch (const std::bad_alloc&) {
        std::cerr << "resource bound: out of memory\n";
        return 3;
    } catch (const NonCentralError& e) {
        std::cerr << "identity failure: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
