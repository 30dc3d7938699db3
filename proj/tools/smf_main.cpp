#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "smf/congruence.hpp"

namespace fs = std::filesystem;
using namespace smf;

namespace {

constexpr int kExitCongruenceFailed = 1;
constexpr int kExitBadArguments = 2;
constexpr int kExitConstructorError = 3;
constexpr int kExitTableMismatch = 4;

struct RunConfig {
    fs::path cache_dir;
    bool use_cache = true;
    std::string format = "table";
    int box = 2;
    int prec = 12;
    std::optional<int> root16;
};

std::string fnv1a_hex(const std::string& data) {
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : data) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::optional<std::string> cache_read(const RunConfig& cfg, const std::string& key) {
    if (!cfg.use_cache) return std::nullopt;
    const fs::path file = cfg.cache_dir / (key + ".txt");
    const fs::path sum = cfg.cache_dir / (key + ".sum");
    std::ifstream in(file, std::ios::binary);
    std::ifstream in_sum(sum);
    if (!in || !in_sum) return std::nullopt;
    std::string payload((std::istreambuf_iterator<char>(in)),
                        std::istreambuf_iterator<char>());
    std::string expect;
    in_sum >> expect;
    if (fnv1a_hex(payload) != expect) return std::nullopt; // stale or corrupt
    return payload;
}

void cache_write(const RunConfig& cfg, const std::string& key, const std::string& payload) {
    if (!cfg.use_cache) return;
    std::error_code ec;
    fs::create_directories(cfg.cache_dir, ec);
    if (ec) return; // caching is best-effort
    const fs::path file = cfg.cache_dir / (key + ".txt");
    const fs::path sum = cfg.cache_dir / (key + ".sum");
    const fs::path tmp = cfg.cache_dir / (key + ".tmp");
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << payload;
    }
    fs::rename(tmp, file, ec);
    if (ec) return;
    {
        std::ofstream out(tmp, std::ios::trunc);
        out << fnv1a_hex(payload) << "\n";
    }
    fs::rename(tmp, sum, ec);
}

QSeries driver_scaled_form(int weight, int prec) {
    switch (weight) {
        case 12: return scaled_cusp_form(12, FieldElem(7), prec);
        case 16: return scaled_cusp_form(16, FieldElem(Rat(49 * 11)), prec);
        case 20: return scaled_cusp_form(20, FieldElem(Rat(11 * 71 * 71)), prec);
        case 22: return scaled_cusp_form(22, FieldElem(Rat(Int(7) * 13 * 17 * 61 * 103)), prec);
        default: throw WeightOutOfRange("no driver scaling for weight " + std::to_string(weight));
    }
}

// builds the named expansion (true constructor work, no cache)
std::string build_expansion(const std::string& name, int genus, const RunConfig& cfg,
                            bool json) {
    auto fexp_out = [&](const FExp2& F) { return json ? F.to_json() : F.to_text(); };
    auto qs_out = [&](const QSeries& f) { return json ? f.to_json() : f.to_text(); };

    if (name == "Delta") return qs_out(delta(cfg.prec));
    if (name == "X10") return fexp_out(igusa_x10(cfg.box));
    if (name == "X12") return fexp_out(igusa_x12(cfg.box));
    if (name == "F20") return fexp_out(example_driver(20, cfg.box).cusp);
    if (name == "F22") return fexp_out(example_driver(22, cfg.box).cusp);
    if (name.rfind("Klingen", 0) == 0) {
        const int k = std::stoi(name.substr(7));
        const QSeries f = driver_scaled_form(k, 2 * std::max(cfg.box, 6) + 2);
        return fexp_out(klingen2(f, k, cfg.box));
    }
    // E<k>
    const int k = std::stoi(name.substr(1));
    if (genus == 1) return qs_out(eisenstein1(k, cfg.prec));
    return fexp_out(siegel_eisenstein2(k, cfg.box));
}

int cmd_expansion(const std::string& name, int genus, const RunConfig& cfg) {
    const bool known =
        name == "Delta" || name == "X10" || name == "X12" || name == "F20" ||
        name == "F22" ||
        (name.rfind("Klingen", 0) == 0 && name.size() > 7 &&
         name.find_first_not_of("0123456789", 7) == std::string::npos) ||
        (name.size() > 1 && name[0] == 'E' &&
         name.find_first_not_of("0123456789", 1) == std::string::npos);
    if (!known) {
        std::cerr << "unknown expansion name: " << name << "\n";
        return kExitBadArguments;
    }
    const bool json = cfg.format == "json";
    const std::string key = name + "_g" + std::to_string(genus) + "_box" +
                            std::to_string(cfg.box) + "_prec" + std::to_string(cfg.prec) +
                            "_" + (json ? "json" : "text");
    if (auto hit = cache_read(cfg, key)) {
        std::cout << *hit;
        return 0;
    }
    std::string payload;
    try {
        payload = build_expansion(name, genus, cfg, json);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConstructorError;
    }
    cache_write(cfg, key, payload);
    std::cout << payload;
    return 0;
}

int cmd_verify(int weight, const RunConfig& cfg) {
    if (weight != 12 && weight != 16 && weight != 20 && weight != 22) {
        std::cerr << "verify: unsupported weight " << weight << "\n";
        return kExitBadArguments;
    }
    try {
        const DriverResult result = example_driver(weight, cfg.box, cfg.root16);
        std::cout << (cfg.format == "json" ? result.report.to_json() + "\n"
                                           : result.report.to_table());
        return result.report.verdict ? 0 : kExitCongruenceFailed;
    } catch (const TableMismatch& e) {
        std::cerr << "table mismatch: " << e.what() << "\n";
        return kExitTableMismatch;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConstructorError;
    }
}

int cmd_ramanujan(int N) {
    try {
        const bool ok = ramanujan_check(N);
        std::cout << (ok ? "OK" : "FAIL") << "\n";
        return ok ? 0 : kExitCongruenceFailed;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadArguments;
    }
}

int cmd_s3_bound() {
    std::string sep = "{";
    for (const Int& p : s3_bound()) {
        std::cout << sep << p.get_str();
        sep = ",";
    }
    std::cout << "}\n";
    return 0;
}

int cmd_generators(unsigned M, const std::string& weight_list) {
    std::vector<unsigned> weights;
    std::string tok;
    std::istringstream is(weight_list);
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) continue;
        const int w = std::stoi(tok);
        if (w <= 0) {
            std::cerr << "generators: weights must be positive\n";
            return kExitBadArguments;
        }
        weights.push_back(static_cast<unsigned>(w));
    }
    if (weights.empty()) {
        std::cerr << "generators: empty weight list\n";
        return kExitBadArguments;
    }
    const GeneratorSet gen = monomial_generators(M, weights);
    for (const auto& [idx, alpha] : gen.pure_powers)
        std::cout << "f" << idx + 1 << "^" << alpha << "\n";
    for (const auto& tuple : gen.mixed) {
        std::string line;
        for (size_t i = 0; i < tuple.size(); ++i) {
            if (tuple[i] == 0) continue;
            if (!line.empty()) line += "*";
            line += "f" + std::to_string(i + 1);
            if (tuple[i] > 1) line += "^" + std::to_string(tuple[i]);
        }
        std::cout << (line.empty() ? "1" : line) << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Siegel modular form expansions and congruence checks"};
    app.require_subcommand(1);

    RunConfig cfg;
    if (const char* env = std::getenv("SMF_CACHE_DIR")) cfg.cache_dir = env;
    if (cfg.cache_dir.empty()) cfg.cache_dir = ".smf-cache";

    std::string name;
    int genus = 2;
    auto* exp_cmd = app.add_subcommand("expansion", "print a Fourier expansion");
    exp_cmd->add_option("name", name, "E<k>, Delta, X10, X12, Klingen<k>, F20, F22")
        ->required();
    exp_cmd->add_option("--genus", genus, "1 or 2 for E<k>")->check(CLI::Range(1, 2));
    exp_cmd->add_option("--box", cfg.box, "diagonal bound for genus-2 output");
    exp_cmd->add_option("--prec", cfg.prec, "q-precision for genus-1 output");
    exp_cmd->add_option("--format", cfg.format)->check(CLI::IsMember({"table", "json"}));
    exp_cmd->add_option("--cache-dir", cfg.cache_dir, "expansion cache directory");
    exp_cmd->add_flag("--no-cache", [&cfg](size_t) { cfg.use_cache = false; },
                      "disable the expansion cache");

    int weight = 0;
    int root16 = -1;
    auto* verify_cmd = app.add_subcommand("verify", "reproduce a worked congruence table");
    verify_cmd->add_option("weight", weight, "12, 16, 20 or 22")->required();
    verify_cmd->add_option("--box", cfg.box, "table box");
    verify_cmd->add_option("--format", cfg.format)->check(CLI::IsMember({"table", "json"}));
    verify_cmd->add_option("--root", root16,
                           "residue of a mod 7 selecting the weight-16 prime ideal");

    int ramanujan_n = 100;
    auto* ram_cmd = app.add_subcommand("ramanujan", "check sigma_11(n) = tau(n) mod 691");
    ram_cmd->add_option("N", ramanujan_n, "upper bound")->required();

    auto* s3_cmd = app.add_subcommand("s3-bound", "primes bounding the degree-3 exceptional set");

    unsigned gen_m = 0;
    std::string gen_weights;
    auto* gen_cmd = app.add_subcommand("generators", "monomial generators above weight M");
    gen_cmd->add_option("M", gen_m, "weight bound")->required();
    gen_cmd->add_option("weights", gen_weights, "comma-separated generator weights")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitBadArguments;
    }

    try {
        if (exp_cmd->parsed()) return cmd_expansion(name, genus, cfg);
        if (verify_cmd->parsed()) {
            if (root16 >= 0) cfg.root16 = root16;
            return cmd_verify(weight, cfg);
        }
        if (ram_cmd->parsed()) return cmd_ramanujan(ramanujan_n);
        if (s3_cmd->parsed()) return cmd_s3_bound();
        if (gen_cmd->parsed()) return cmd_generators(gen_m, gen_weights);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConstructorError;
    }
    return kExitBadArguments;
}
