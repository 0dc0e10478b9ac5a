// Command-line surface: enumeration, identity verification, and the
// partition-pair transform, with text or JSON output.

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "colpart/bijection.hpp"
#include "colpart/claims.hpp"
#include "colpart/frobenius.hpp"
#include "colpart/partition.hpp"
#include "json.hpp"

using namespace colpart;

namespace {

constexpr unsigned long long kDefaultNodeBudget = 100'000'000ull;

int env_default_order() {
    if (const char* s = std::getenv("COLPART_ORDER")) {
        int v = std::atoi(s);
        if (v > 0) return v;
    }
    return 0;
}

int cmd_enumerate(const std::string& family, int n, int max_weight, const std::string& table,
                  const std::string& format, bool force) {
    const unsigned long long budget = force ? kNoNodeBudget : kDefaultNodeBudget;
    auto json_out = nlohmann::json::array();
    long long count = 0;
    auto emit_partition = [&](const ColouredPartition& p) {
        ++count;
        if (format == "json")
            json_out.push_back(nlohmann::json::parse(partition_to_json(p)));
        else
            std::cout << weight(p) << "\t"
                      << (p.empty() ? std::string("(empty)") : format_partition(p)) << "\n";
    };
    if (family == "pn") {
        enumerate_members(MembershipSpec::pn(n), max_weight, emit_partition, budget);
    } else if (family == "p0") {
        enumerate_members(MembershipSpec::p0(), max_weight, emit_partition, budget);
    } else if (family == "cn") {
        enumerate_members(MembershipSpec::cn(n, load_table(table, n)), max_weight,
                          emit_partition, budget);
    } else if (family == "fn") {
        std::vector<FrobeniusPartition> all;
        enumerate_frobenius(
            n, max_weight, [&](const FrobeniusPartition& f) { all.push_back(f); }, budget);
        std::stable_sort(all.begin(), all.end(),
                         [](const FrobeniusPartition& a, const FrobeniusPartition& b) {
                             return std::tuple(frob_weight(a), a.top.size(), a) <
                                    std::tuple(frob_weight(b), b.top.size(), b);
                         });
        for (const auto& f : all) {
            ++count;
            if (format == "json") {
                nlohmann::json j;
                j["top"] = f.top;
                j["bottom"] = f.bottom;
                json_out.push_back(j);
            } else {
                std::cout << frob_weight(f) << "\t" << format_frobenius(f) << "\n";
            }
        }
    } else {
        std::cerr << "enumerate: unknown family '" << family << "'\n";
        return 2;
    }
    if (format == "json") std::cout << json_out.dump(2) << "\n";
    std::cerr << count << " member(s) up to weight " << max_weight << "\n";
    return 0;
}

nlohmann::json conservation_summary(const ColouredPartition& lambda, const PartitionPair& pair) {
    nlohmann::json j;
    j["weight"] = weight(lambda);
    j["parts"] = lambda.size();
    j["mu_weight"] = weight(pair.mu);
    j["nu_weight"] = weight(pair.nu);
    auto counts = nlohmann::json::object();
    for (const auto& part : lambda)
        if (part.colour.is_bound()) {
            auto key = part.colour.str();
            counts[key] = counts.value(key, 0) + 1;
        }
    j["bound_colour_counts"] = counts;
    return j;
}

int cmd_biject(const std::string& lambda_text, const std::string& mu_text,
               const std::string& nu_text, int n, const std::string& table_name,
               const std::string& format, bool inverse) {
    DeltaGammaTable table = load_table(table_name, n);
    if (!inverse) {
        ColouredPartition lambda = parse_partition(lambda_text);
        auto pair = phi(lambda, table);
        if (format == "json") {
            nlohmann::json j;
            j["mu"] = nlohmann::json::parse(partition_to_json(pair.mu));
            j["nu"] = nlohmann::json::parse(partition_to_json(pair.nu));
            j["conserved"] = conservation_summary(lambda, pair);
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "mu = " << (pair.mu.empty() ? "(empty)" : format_partition(pair.mu))
                      << "\n";
            std::cout << "nu = " << (pair.nu.empty() ? "(empty)" : format_partition(pair.nu))
                      << "\n";
            std::cout << "conserved: weight " << weight(lambda) << " = " << weight(pair.mu)
                      << " + " << weight(pair.nu) << ", parts " << lambda.size() << " = "
                      << pair.mu.size() << " + " << pair.nu.size() << "\n";
        }
        return 0;
    }
    PartitionPair pair{parse_partition(mu_text), parse_partition(nu_text)};
    ColouredPartition lambda = phi_inverse(pair, table);
    if (format == "json") {
        nlohmann::json j;
        j["lambda"] = nlohmann::json::parse(partition_to_json(lambda));
        j["conserved"] = conservation_summary(lambda, pair);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "lambda = " << (lambda.empty() ? "(empty)" : format_partition(lambda))
                  << "\n";
        std::cout << "conserved: weight " << weight(lambda) << " = " << weight(pair.mu) << " + "
                  << weight(pair.nu) << ", parts " << lambda.size() << " = " << pair.mu.size()
                  << " + " << pair.nu.size() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verifier for coloured partition identities"};
    app.require_subcommand(1);

    // enumerate
    std::string family = "pn", table = "mp", format = "text";
    int n = 2, max_weight = 10;
    bool force = false;
    auto* enumerate = app.add_subcommand("enumerate", "list family members by weight");
    enumerate->add_option("--family", family, "pn | cn | p0 | fn")->required();
    enumerate->add_option("--n", n, "number of primary indices");
    enumerate->add_option("--max-weight", max_weight, "largest weight to list")->required();
    enumerate->add_option("--table", table, "mp, alt, or a JSON table file (cn only)");
    enumerate->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    enumerate->add_flag("--force", force, "ignore the enumeration node budget");

    // verify
    std::string claim, vtable = "mp", vformat = "text";
    int vn = 0, vorder = 0;
    bool vforce = false, vcorrupt = false;
    auto* verify = app.add_subcommand("verify", "check one identity claim term by term");
    verify->add_option("claim", claim, "claim id")->required()->check(CLI::IsMember(claim_ids()));
    verify->add_option("--n", vn, "number of primary indices (claim default if omitted)");
    verify->add_option("--order", vorder, "truncation order / weight bound");
    verify->add_option("--table", vtable, "mp, alt, or a JSON table file");
    verify->add_option("--format", vformat)->check(CLI::IsMember({"text", "json"}));
    verify->add_flag("--force", vforce, "ignore the enumeration node budget");
    verify->add_flag("--corrupt", vcorrupt)->group("");  // test mode: perturb one coefficient

    // biject
    std::string lambda_text, mu_text, nu_text, btable = "mp", bformat = "text",
                direction = "forward";
    int bn = 2;
    auto* biject = app.add_subcommand("biject", "apply the partition-pair transform");
    biject->add_option("--lambda", lambda_text, "partition, e.g. 9[a1b0]+8[a0b0]");
    biject->add_option("--mu", mu_text, "pattern-avoiding partition (inverse direction)");
    biject->add_option("--nu", nu_text, "a0b0-coloured partition (inverse direction)");
    biject->add_option("--n", bn, "number of primary indices");
    biject->add_option("--table", btable, "mp, alt, or a JSON table file");
    biject->add_option("--direction", direction)->check(CLI::IsMember({"forward", "inverse"}));
    biject->add_option("--format", bformat)->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (enumerate->parsed()) return cmd_enumerate(family, n, max_weight, table, format, force);
        if (verify->parsed()) {
            ClaimParams params;
            params.n = vn;
            params.order = vorder > 0 ? vorder : env_default_order();
            params.table = vtable;
            params.force = vforce;
            params.corrupt = vcorrupt;
            auto report = run_claim(claim, params);
            std::cout << (vformat == "json" ? report.to_json() : report.to_text()) << "\n";
            return report.pass ? 0 : 1;
        }
        if (biject->parsed()) {
            const bool has_pair = !mu_text.empty() || !nu_text.empty();
            if (direction == "forward" && has_pair) {
                std::cerr << "biject: forward direction takes --lambda\n";
                return 2;
            }
            if (direction == "inverse" && !lambda_text.empty()) {
                std::cerr << "biject: inverse direction takes --mu/--nu\n";
                return 2;
            }
            if (direction == "inverse")
                return cmd_biject("", mu_text, nu_text, bn, btable, bformat, true);
            return cmd_biject(lambda_text, "", "", bn, btable, bformat, false);
        }
    } catch (const InfeasibleBounds& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 2;
    } catch (const BudgetExceeded& e) {
        std::cerr << "refused: " << e.what() << " (use --force to override)\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
