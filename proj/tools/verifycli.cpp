#include "artifact/verify.hpp"
#include "CLI11.hpp"

#include <fstream>
#include <iostream>

using namespace artifact;

namespace {

void parse_weights(const std::string& s, SuiteConfig& cfg) {
    auto dots = s.find("..");
    if (dots == std::string::npos) throw ConfigError("--weights expects LO..HI, got " + s);
    try {
        cfg.lo = std::stoi(s.substr(0, dots));
        cfg.hi = std::stoi(s.substr(dots + 2));
    } catch (const std::exception&) {
        throw ConfigError("--weights expects integers, got " + s);
    }
}

void parse_field(const std::string& s, SuiteConfig& cfg) {
    cfg.field_given = true;
    if (s == "Q" || s == "rationals") {
        cfg.prime = 0;
        return;
    }
    try {
        long p = std::stol(s);
        if (p < 2) throw ConfigError("");
        for (long d = 2; d * d <= p; ++d)
            if (p % d == 0) throw ConfigError("");
        cfg.prime = (unsigned long)p;
    } catch (const std::exception&) {
        throw ConfigError("--field expects Q or a prime, got " + s);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Checks a 2-representation and the tensor product construction built from it"};
    app.require_subcommand(1);

    SuiteConfig cfg;
    std::string weights, field, out;
    std::vector<std::string> suites;

    auto common = [&](CLI::App* s, bool product) {
        s->add_option("--rep", cfg.rep, "L1 or a path to a rep JSON file")->capture_default_str();
        s->add_option("--field", field, "Q or a prime p");
        s->add_option("--weights", weights, "weight window LO..HI (default -4..4)");
        s->add_option("--seed", cfg.seed, "seed for randomized checks")->capture_default_str();
        s->add_option("--report", cfg.format, "json or text")->capture_default_str();
        s->add_option("--out", out, "write the report here instead of stdout");
        s->add_flag("--timing", cfg.timing, "record per-check milliseconds");
        s->add_option("--threads", cfg.threads, "worker threads, 1 for the serial path")->capture_default_str();
        if (product) s->add_option("--i-max", cfg.i_max, "largest power of x~ in pairing checks")->capture_default_str();
    };

    auto* ids = app.add_subcommand("identities", "polynomial and nil Hecke identities");
    auto* chk = app.add_subcommand("check-rep", "Hecke relations and hypotheses of the input rep");
    auto* bld = app.add_subcommand("build-product", "C, E~, F~, the unit and middle-linearity");
    auto* rho = app.add_subcommand("check-rho", "product Hecke relations, closed forms, rho~ and certificates");
    auto* all = app.add_subcommand("verify-all", "every suite");
    for (auto* s : {ids, chk, bld, rho, all}) common(s, s == rho || s == all);
    all->add_option("--suite", suites, "restrict to these suites (repeatable)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (!weights.empty()) parse_weights(weights, cfg);
        if (!field.empty()) parse_field(field, cfg);
        if (ids->parsed()) cfg.suites = {"identities"};
        if (chk->parsed()) cfg.suites = {"hecke", "rho-input"};
        if (bld->parsed()) cfg.suites = {"build-product"};
        if (rho->parsed()) cfg.suites = {"product-hecke", "sigma-oracle", "pairing-oracle", "rho-product", "certificates"};
        if (all->parsed()) cfg.suites = suites;

        Report r = run(cfg);
        std::string text = cfg.format == "json" ? to_json(r) : to_text(r);
        if (out.empty()) {
            std::cout << text;
        } else {
            std::ofstream f(out, std::ios::binary);
            if (!f) throw ConfigError("cannot write " + out);
            f << text;
        }
        return r.ok() ? 0 : 1;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const RepLoadError& e) {
        std::cerr << "rep load error: " << e.what() << "\n";
        return 2;
    }
}
