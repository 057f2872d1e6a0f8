#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "cli_app.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Exact annihilator and centralizer computations for plane rational functions"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    w2cli::CommandResult result;

    std::string num, den = "1", cnum, cden = "1";
    std::string P, Q, P2, Q2, f, p, q;
    unsigned degree = 0;
    bool verify = false;
    std::uint64_t seed = 1729;
    unsigned trials = 200;

    auto* annihilator = app.add_subcommand("annihilator", "Free generator of the annihilator of u");
    annihilator->add_option("--num", num)->required();
    annihilator->add_option("--den", den)->capture_default_str();
    annihilator->callback([&] { result = w2cli::cmd_annihilator(num, den); });

    auto* apply_cmd = app.add_subcommand("apply", "Apply the derivation P dx + Q dy to u");
    apply_cmd->add_option("--P", P)->required();
    apply_cmd->add_option("--Q", Q)->required();
    apply_cmd->add_option("--num", num)->required();
    apply_cmd->add_option("--den", den)->capture_default_str();
    apply_cmd->callback([&] { result = w2cli::cmd_apply(P, Q, num, den); });

    auto* bracket = app.add_subcommand("bracket", "Lie bracket of two derivations");
    bracket->add_option("--P1", P)->required();
    bracket->add_option("--Q1", Q)->required();
    bracket->add_option("--P2", P2)->required();
    bracket->add_option("--Q2", Q2)->required();
    bracket->callback([&] { result = w2cli::cmd_bracket(P, Q, P2, Q2); });

    auto* membership = app.add_subcommand("membership", "Test a derivation for membership in the annihilator of u");
    membership->add_option("--P", P)->required();
    membership->add_option("--Q", Q)->required();
    membership->add_option("--num", num)->required();
    membership->add_option("--den", den)->capture_default_str();
    membership->callback([&] { result = w2cli::cmd_membership(P, Q, num, den); });

    auto* pfree = app.add_subcommand("decompose-pfree", "Split f into a polynomial in p times a p-free part");
    pfree->add_option("--f", f)->required();
    pfree->add_option("--p", p)->required();
    pfree->callback([&] { result = w2cli::cmd_decompose_pfree(f, p); });

    auto* pqfree = app.add_subcommand("decompose-pqfree", "Split f into a binary form in (p, q) times a free part");
    pqfree->add_option("--f", f)->required();
    pqfree->add_option("--p", p)->required();
    pqfree->add_option("--q", q)->required();
    pqfree->callback([&] { result = w2cli::cmd_decompose_pqfree(f, p, q); });

    auto* centralizer = app.add_subcommand("centralizer", "Centralizer of f times the generator of u");
    centralizer->add_option("--f", f)->required();
    centralizer->add_option("--num", num)->required();
    centralizer->add_option("--den", den)->capture_default_str();
    centralizer->add_option("--p", p)->required();
    auto* qopt = centralizer->add_option("--q", q);
    centralizer->add_option("--degree", degree)->required();
    centralizer->add_flag("--verify", verify, "Cross-check against the nullspace oracle");
    centralizer->callback([&] {
        std::optional<std::string> qarg;
        if (qopt->count() > 0) qarg = q;
        result = w2cli::cmd_centralizer(f, num, den, p, qarg, degree, verify);
    });

    auto* generative = app.add_subcommand("verify-generative", "Certify that a candidate generates the field of u");
    generative->add_option("--num", num)->required();
    generative->add_option("--den", den)->capture_default_str();
    generative->add_option("--cnum", cnum)->required();
    generative->add_option("--cden", cden)->capture_default_str();
    generative->callback([&] { result = w2cli::cmd_verify_generative(num, den, cnum, cden); });

    auto* oracle = app.add_subcommand("oracle", "Blind nullspace computations for cross-checking");
    oracle->require_subcommand(1);
    oracle->fallthrough();

    auto* nullsp = oracle->add_subcommand("nullspace", "Degree-capped annihilator basis");
    nullsp->add_option("--num", num)->required();
    nullsp->add_option("--den", den)->capture_default_str();
    nullsp->add_option("--degree", degree)->required();
    nullsp->callback([&] { result = w2cli::cmd_oracle_nullspace(num, den, degree); });

    auto* rank1 = oracle->add_subcommand("rank1", "Compare the capped annihilator with the rank one picture");
    rank1->add_option("--num", num)->required();
    rank1->add_option("--den", den)->capture_default_str();
    rank1->add_option("--degree", degree)->required();
    rank1->callback([&] { result = w2cli::cmd_oracle_rank1(num, den, degree); });

    auto* ocent = oracle->add_subcommand("centralizer", "Degree-capped centralizer basis");
    ocent->add_option("--f", f)->required();
    ocent->add_option("--num", num)->required();
    ocent->add_option("--den", den)->capture_default_str();
    ocent->add_option("--degree", degree)->required();
    ocent->callback([&] { result = w2cli::cmd_oracle_centralizer(f, num, den, degree); });

    auto* lemma4 = oracle->add_subcommand("lemma4", "Joint annihilator of an independent pair is trivial");
    lemma4->add_option("--p", p)->required();
    lemma4->add_option("--q", q)->required();
    lemma4->add_option("--degree", degree)->required();
    lemma4->callback([&] { result = w2cli::cmd_oracle_lemma4(p, q, degree); });

    auto* selftest = app.add_subcommand("selftest", "Randomized identity suites");
    selftest->add_option("--seed", seed, "64-bit seed, fixed default for reproducibility")
        ->capture_default_str();
    selftest->add_option("--trials", trials)->capture_default_str();
    selftest->callback([&] { result = w2cli::cmd_selftest(seed, trials); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    std::cout << w2cli::render(result, format);
    return result.exit_code;
}
