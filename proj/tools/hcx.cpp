#include "hc/report.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <map>

namespace {

using namespace hc;

std::map<std::string, Rational> parse_weights(const std::string& table) {
    std::map<std::string, Rational> out;
    std::size_t start = 0;
    while (start <= table.size()) {
        const std::size_t end = std::min(table.find(',', start), table.size());
        const std::string item = table.substr(start, end - start);
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw ValidationError("weight entry '" + item + "' is not label=p/q");
        try {
            out[item.substr(0, eq)] = parse_rational(item.substr(eq + 1));
        } catch (const std::invalid_argument&) {
            throw ValidationError("weight entry '" + item + "' has a malformed rational");
        }
        start = end + 1;
    }
    return out;
}

Perversity choose_perversity(const StratifiedComplex& x, const std::string& spec, const std::string& weights) {
    if (!weights.empty()) return from_weights(x, parse_weights(weights));
    if (!spec.empty()) return perversity_by_name(x, spec);
    if (!x.input.weights.empty()) return from_weights(x, x.input.weights);
    return perversity_by_name(x, "lower-middle");
}

StratifiedComplex load_strat(const std::string& path) {
    return load_validate(parse_strat(read_file(path), path));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact finite Hilbert complexes, image cohomology and intersection homology"};
    app.fallthrough();
    app.require_subcommand(1);
    std::string format = "human";
    app.add_option("--format", format, "human or structured")->check(CLI::IsMember({"human", "structured"}));

    std::string path, perversity, second, weights;
    bool reverse = false;
    CheckConfig cfg;

    auto* complex_cmd = app.add_subcommand("analyze-complex", "cohomology, harmonic spaces and Kodaira decomposition");
    complex_cmd->add_option("file", path, ".cplx file")->required();
    auto* pair_cmd = app.add_subcommand("analyze-pair", "image cohomology, five-way conditions, Friedrichs identities");
    pair_cmd->add_option("file", path, ".pair file")->required();
    auto* inter_cmd = app.add_subcommand("build-intermediate", "construct the intermediate complex and verify it");
    inter_cmd->add_option("file", path, ".pair file")->required();
    auto* ih_cmd = app.add_subcommand("ih", "intersection homology, images and duality report");
    ih_cmd->add_option("file", path, ".strat file")->required();
    ih_cmd->add_option("--perversity", perversity, "zero, top, lower-middle, upper-middle or label=value,...");
    ih_cmd->add_option("--second", second, "second perversity (default: the dual)");
    ih_cmd->add_option("--weights", weights, "label=p/q,... ; uses the weighted perversity");
    auto* sig_cmd = app.add_subcommand("signature", "middle-degree pairing and signature");
    sig_cmd->add_option("file", path, ".strat file")->required();
    sig_cmd->add_option("--perversity", perversity, "as for ih");
    sig_cmd->add_option("--weights", weights, "as for ih");
    sig_cmd->add_flag("--reverse", reverse, "use the opposite orientation");
    auto* check_cmd = app.add_subcommand("check", "seeded property suite with reference computations");
    check_cmd->add_option("--seed", cfg.seed, "random seed");
    check_cmd->add_option("--instances", cfg.instances, "random instances")->check(CLI::NonNegativeNumber);
    check_cmd->add_option("--max-dim", cfg.max_dim, "largest space dimension")->check(CLI::Range(0, 12));
    check_cmd->add_option("--max-length", cfg.max_length, "largest complex length")->check(CLI::Range(0, 8));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }
    const OutputFormat out = format == "structured" ? OutputFormat::structured : OutputFormat::human;

    try {
        if (*complex_cmd) {
            auto c = parse_complex(read_file(path), path);
            std::cout << complex_report(c).render(out);
        } else if (*pair_cmd) {
            std::cout << pair_report(parse_pair(read_file(path), path)).render(out);
        } else if (*inter_cmd) {
            std::cout << intermediate_report(parse_pair(read_file(path), path).pair).render(out);
        } else if (*ih_cmd) {
            const auto x = load_strat(path);
            const Perversity p = choose_perversity(x, perversity, weights);
            std::optional<Perversity> q;
            if (!second.empty()) q = perversity_by_name(x, second);
            std::cout << ih_report(x, p, q).render(out);
        } else if (*sig_cmd) {
            const auto x = load_strat(path);
            std::cout << signature_report(x, choose_perversity(x, perversity, weights), reverse ? -1 : 1).render(out);
        } else if (*check_cmd) {
            const auto suite = run_checks(cfg);
            std::cout << check_report(suite).render(out);
            return suite.ok() ? 0 : 2;
        }
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const InvariantError& e) {
        std::cerr << "invariant failure: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
