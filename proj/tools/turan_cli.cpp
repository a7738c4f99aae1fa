#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "turan/report.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Construct Furedi graphs G(q,t), certify K_{a,b}-freeness and check the counting lemmas"};
    app.require_subcommand(1);

    unsigned workers = 1;
    std::uint64_t budget = 0;
    std::uint64_t seed = 0;

    turan::BuildArgs build;
    std::string build_out;
    auto* build_cmd = app.add_subcommand("build", "build G(p^k, t) and optionally write it to a file");
    build_cmd->add_option("--p", build.p, "characteristic")->required();
    build_cmd->add_option("--k", build.k, "extension degree")->default_val(1);
    build_cmd->add_option("--t", build.t, "subgroup order, must divide q-1")->required();
    build_cmd->add_option("--out", build_out, "graph file to write");
    build_cmd->add_flag("--dimacs", build.dimacs, "write DIMACS edge format instead");

    turan::VerifyArgs verify;
    std::string verify_path;
    auto* verify_cmd = app.add_subcommand("verify", "certify that a graph file is K_{a,b}-free");
    verify_cmd->add_option("graph", verify_path, "graph file")->required();
    verify_cmd->add_option("--a", verify.a)->required();
    verify_cmd->add_option("--b", verify.b)->required();
    verify_cmd->add_option("--workers", workers, "worker threads")->envname("TURAN_WORKERS");
    verify_cmd->add_option("--budget", budget, "maximum number of a-subsets");

    turan::LemmaArgs lemma;
    std::string mode = "exhaustive";
    auto* lemma_cmd = app.add_subcommand("lemma", "run a lemma oracle (l or ag)");
    lemma_cmd->add_option("which", lemma.which, "l or ag")->required()->check(CLI::IsMember({"l", "ag"}));
    lemma_cmd->add_option("--q", lemma.q, "base prime power")->required();
    lemma_cmd->add_option("--r", lemma.r, "number of norm equations (ag)")->default_val(3);
    lemma_cmd->add_option("--mode", mode)->check(CLI::IsMember({"exhaustive", "sampled"}));
    lemma_cmd->add_option("--samples", lemma.ag.samples, "d-tuples drawn in sampled mode")->default_val(2000);
    lemma_cmd->add_option("--seed", seed);
    lemma_cmd->add_option("--budget", budget, "maximum number of systems");

    turan::TableArgs table;
    auto* table_cmd = app.add_subcommand("table", "tabulate m / n^(2-1/r) for a family");
    table_cmd->add_option("family", table.family, "k33, k2t or general")->required();
    table_cmd->add_option("--q", table.qs, "base prime powers")->delimiter(',');
    table_cmd->add_option("--t", table.t)->default_val(1);
    table_cmd->add_option("--r", table.r)->default_val(3);
    table_cmd->add_flag("--csv", table.csv, "emit CSV");

    turan::SuiteArgs suite;
    std::uint32_t suite_t = 0;
    auto* suite_cmd = app.add_subcommand("suite", "certify every construction instance at base q");
    suite_cmd->add_option("--q", suite.q, "base prime power")->required();
    suite_cmd->add_option("--t", suite_t, "divisor of q-1 for the t-families");
    suite_cmd->add_option("--r", suite.r)->default_val(3);
    suite_cmd->add_option("--workers", workers, "worker threads")->envname("TURAN_WORKERS");
    suite_cmd->add_option("--budget", budget, "maximum number of a-subsets per certificate");
    suite_cmd->add_option("--seed", seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (*build_cmd) {
        if (!build_out.empty()) build.out = build_out;
        return turan::cmd_build(build, std::cout, std::cerr);
    }
    if (*verify_cmd) {
        verify.graph = verify_path;
        verify.search.workers = workers;
        if (budget) verify.search.budget = budget;
        return turan::cmd_verify(verify, std::cout, std::cerr);
    }
    if (*lemma_cmd) {
        lemma.ag.mode = mode == "sampled" ? turan::LemmaMode::Sampled : turan::LemmaMode::Exhaustive;
        lemma.ag.seed = seed;
        if (budget) lemma.ag.budget = budget;
        return turan::cmd_lemma(lemma, std::cout, std::cerr);
    }
    if (*table_cmd) return turan::cmd_table(table, std::cout, std::cerr);

    if (suite_t) suite.t = suite_t;
    suite.options.search.workers = workers;
    if (budget) suite.options.search.budget = budget;
    suite.options.lemma_ag.seed = seed;
    return turan::cmd_suite(suite, std::cout, std::cerr);
}
