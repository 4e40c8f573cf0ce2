#pragma once

#include "artifact/product.hpp"

#include <optional>
#include <string>
#include <vector>

namespace artifact {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SuiteConfig {
    unsigned long prime = 0;           // 0: rationals
    bool field_given = false;          // override the field of a JSON rep
    std::string rep = "L1";            // builtin name or JSON path
    int lo = -4, hi = 4;
    int i_max = 4;
    unsigned long seed = 1;
    int triples = 200;                 // middle-linearity samples
    std::string format = "json";       // json | text
    std::vector<std::string> suites;   // empty: all
    bool timing = false;               // record millis (breaks byte identity)
    int threads = 0;                   // 0: OpenMP default, 1: serial
    void validate() const;
};

struct CheckRecord {
    std::string id, anchor;
    bool pass = true;
    std::string witness;
    std::optional<double> millis;
};

struct Report {
    std::string version;
    SuiteConfig config;
    std::vector<CheckRecord> checks;
    bool ok() const;
};

const std::vector<std::string>& all_suites();
TwoRep load_rep(const SuiteConfig& cfg);
Report run(const SuiteConfig& cfg);
std::string to_json(const Report& r);
std::string to_text(const Report& r);

// product-level checks shared by the harness and the tests
struct CheckResult {
    bool pass = true;
    std::string witness;
};
CheckResult check_c_associative(const ProductRep& P, int lambda);
CheckResult check_actions(const ProductRep& P, Bim b, int lambda);
// tau~^2, tau~ Ex~ = x~E tau~ + 1, Ex~ tau~ = tau~ x~E + 1 on one corner of [E~^2]
std::vector<std::pair<std::string, CheckResult>> check_product_hecke(const ProductRep& P, Corner c, int lambda);
CheckResult check_x_powers(const ProductRep& P, Corner c, int lambda, int i_max);
CheckResult check_sigma_oracle(const ProductRep& P, Corner c, int lambda);
CheckResult check_eps_x_F(const ProductRep& P, Corner c, int lambda, int i);
CheckResult check_F_x_eta(const ProductRep& P, Corner c, int lambda, int i);
CheckResult check_unit(const ProductRep& P, int lambda);
CheckResult check_middle_linear(const ProductRep& P, unsigned long seed, int triples, int lo, int hi);
CheckResult check_rho_iso(const ProductRep& P, Corner c, int lambda);
CheckResult check_rho_zero(const ProductRep& P, Corner c);
CheckResult check_certificate(const ProductRep& P, Corner c, int lambda);

}  // namespace artifact
