// Acceptance suite: runs every verification claim at its full desk-scale
// bounds and prints one line per criterion. Exits non-zero if any criterion
// fails its exactness check or overruns its runtime target.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "colpart/bijection.hpp"
#include "colpart/claims.hpp"

using namespace colpart;

namespace {

struct Criterion {
    std::string name;
    double target_seconds;
    std::vector<std::pair<std::string, ClaimParams>> claims;
    bool (*extra)() = nullptr;  // additional golden checks
};

ClaimParams bounds(int n, int order, const char* table = "mp") {
    ClaimParams p;
    p.n = n;
    p.order = order;
    p.table = table;
    return p;
}

// The 16-part worked example must map to the printed pair, verbatim.
bool golden_pair() {
    auto table = builtin_delta_gamma(TableVariant::MeurmanPrimc, 3);
    auto lambda = parse_partition(
        "8[a1b1]+6[a0b2]+6[a2b2]+5[a0b1]+5[a1b0]+4[a0b0]+4[a0b0]+3[a0b2]+3[a1b1]+3[a1b1]+"
        "3[a1b0]+2[a2b2]+2[a2b2]+2[a2b2]+2[a2b0]+1[a0b0]");
    auto pair = phi(lambda, table);
    bool ok = pair.mu == parse_partition("8[a1b1]+6[a0b2]+5[a0b1]+5[a1b0]+3[a0b2]+3[a1b0]+2[a2b0]");
    ok = ok && pair.nu == parse_partition(
                              "6[a0b0]+4[a0b0]+4[a0b0]+3[a0b0]+3[a0b0]+2[a0b0]+2[a0b0]+"
                              "2[a0b0]+1[a0b0]");
    ok = ok && phi_inverse(pair, table) == lambda;
    return ok;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {"kernel-level identity, brute force vs closed forms (n=3, minimal+8)",
         60.0,
         {{"primc-kernel", bounds(3, 8)}}},
        {"coloured generating function: enumerations vs constant-term product",
         120.0,
         {{"primc", bounds(2, 14)}, {"primc", bounds(3, 10)}}},
        {"pattern-avoiding families vs (q;q)inf times the product",
         120.0,
         {{"capparelli", bounds(2, 12, "mp")},
          {"capparelli", bounds(2, 12, "alt")},
          {"capparelli", bounds(3, 9, "mp")},
          {"capparelli", bounds(3, 9, "alt")}}},
        {"principal specialisations vs classical partition recurrences",
         10.0,
         {{"primc-spec", bounds(0, 20)}, {"cap-spec", bounds(0, 20)}}},
        {"triple agreement of constant-term, theta-sum, product-sum forms",
         60.0,
         {{"main2", bounds(1, 15)},
          {"main2", bounds(2, 15)},
          {"main2", bounds(3, 15)},
          {"main2", bounds(4, 15)}}},
        {"classical anchors: dilations and the three-variable products",
         60.0,
         {{"capparelli-classical", bounds(0, 40)},
          {"primc-nondilated", bounds(0, 12)},
          {"capparelli-aag", bounds(0, 12)},
          {"primc-dilated", bounds(2, 15)},
          {"primc-dilated", bounds(3, 12)}}},
        {"partition-pair map: round trips, conservation, worked example",
         120.0,
         {{"bijection", bounds(2, 14)},
          {"bijection", bounds(3, 10, "mp")},
          {"bijection", bounds(3, 10, "alt")}},
         golden_pair},
        {"exact q-binomial and insertion-weight identity grids",
         60.0,
         {{"qbinom-lemmas", bounds(0, 0)}}},
        {"structural property suites over the full 16-colour alphabet",
         30.0,
         {{"structure", bounds(4, 10)}}},
    };

    int failures = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        const auto& criterion = criteria[i];
        auto start = std::chrono::steady_clock::now();
        bool pass = true;
        std::string why;
        long long terms = 0;
        for (const auto& [id, params] : criterion.claims) {
            auto report = run_claim(id, params);
            terms += report.checked_terms;
            if (!report.pass) {
                pass = false;
                why = report.to_text();
                break;
            }
        }
        if (pass && criterion.extra && !criterion.extra()) {
            pass = false;
            why = "golden example mismatch";
        }
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (pass && elapsed > criterion.target_seconds) {
            pass = false;
            why = "runtime target exceeded";
        }
        std::printf("[%zu/9] %s  %s (%.1f s / target %.0f s, %lld terms)\n", i + 1,
                    pass ? "PASS" : "FAIL", criterion.name.c_str(), elapsed,
                    criterion.target_seconds, terms);
        if (!pass) {
            std::printf("       %s\n", why.c_str());
            ++failures;
        }
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
