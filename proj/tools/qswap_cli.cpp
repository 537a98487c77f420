// Command-line front end: run a protocol, sweep particle numbers, dump
// localized state expansions, or verify the exact kernels against naive
// oracles. Exit codes: 0 success, 1 verification failure, 2 usage error.

#include "qswap/json_io.hpp"
#include "qswap/protocol.hpp"
#include "qswap/reference.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <random>

namespace {

using namespace qswap;

std::size_t permanent_bound_from_env() {
    if (const char* raw = std::getenv("QSWAP_PERMANENT_BOUND")) {
        long v = std::strtol(raw, nullptr, 10);
        if (v > 0) return static_cast<std::size_t>(v);
    }
    return kDefaultPermanentBound;
}

std::string probability_string(const Scalar& p) {
    // Protocol probabilities are rational; the sqrt(2) parts square away.
    if (p.sqrt2_part() != 0) return p.to_string();
    return rational_to_string(p.rat_part());
}

std::string float_12sig(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

ProtocolRun dispatch(ProtocolKind kind, int pairs, Statistics eta) {
    switch (kind) {
        case ProtocolKind::FermionicShared: return run_fermionic_transfer(pairs);
        case ProtocolKind::BosonicShared: return run_bosonic_cascade(pairs);
        case ProtocolKind::Separated: return run_separated_swap(pairs, eta);
    }
    throw std::invalid_argument("bad kind");
}

Json branch_to_json(const BranchOutcome& b) {
    Json outcomes = Json::array();
    for (const auto& [where, label] : b.outcome_sequence) {
        outcomes.push_back(Json::array({where, to_string(label)}));
    }
    return Json{{"outcomes", outcomes},
                {"probability", probability_string(b.branch_probability)},
                {"final_ab", to_string(b.final_ab_label)}};
}

int cmd_run(ProtocolKind kind, int pairs, Statistics eta, const std::string& mode,
            std::uint64_t seed) {
    auto t0 = std::chrono::steady_clock::now();
    ProtocolRun run = dispatch(kind, pairs, eta);
    Json report{{"protocol", to_string(kind)},
                {"pairs", pairs},
                {"n", 2 * pairs},
                {"probability", probability_string(run.success_probability)},
                {"probability_float", run.success_probability.to_double()},
                {"mode", mode}};
    if (mode == "sample") {
        report["seed"] = seed;
        report["branches"] = Json::array({branch_to_json(sample_branch(run, seed))});
    } else {
        Json branches = Json::array();
        for (const auto& b : run.branches) branches.push_back(branch_to_json(b));
        report["branches"] = branches;
    }
    auto dt = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0);
    std::cout << report.dump(2) << "\n";
    std::cerr << "elapsed_ms " << dt.count() << "\n";
    return 0;
}

int cmd_sweep(const std::vector<std::string>& kind_names, int n_max,
              const std::string& format) {
    std::size_t bound = permanent_bound_from_env();
    std::vector<ProtocolKind> kinds;
    for (const auto& name : kind_names) {
        auto kind = protocol_kind_from_string(name);
        if (!kind) {
            std::cerr << "unknown kind: " << name << "\n";
            return 2;
        }
        kinds.push_back(*kind);
    }
    Json rows = Json::array();
    if (format == "csv") std::cout << "kind,n,probability_exact,probability_float\n";
    for (ProtocolKind kind : kinds) {
        for (int n = 4; n <= n_max; n += 2) {
            Scalar p = closed_form_probability(kind, n, bound);
            if (format == "csv") {
                std::cout << to_string(kind) << ',' << n << ','
                          << probability_string(p) << ','
                          << float_12sig(p.to_double()) << "\n";
            } else {
                rows.push_back(Json{{"kind", to_string(kind)},
                                    {"n", n},
                                    {"probability", probability_string(p)},
                                    {"probability_float", p.to_double()}});
            }
        }
    }
    if (format == "json") std::cout << rows.dump(2) << "\n";
    return 0;
}

int cmd_expand(ProtocolKind kind, int pairs, Statistics eta) {
    Statistics statistics = kind == ProtocolKind::FermionicShared ? Statistics::Fermion
                            : kind == ProtocolKind::BosonicShared ? Statistics::Boson
                                                                  : eta;
    Topology topology = kind == ProtocolKind::Separated ? Topology::Separated
                                                        : Topology::SharedChain;
    NetworkSpec spec{pairs, topology, statistics};
    Network net = make_network(spec);
    WeightedState prepared = prepare_state(spec);
    Json out = state_to_json(expand_localized(prepared.state), net);
    out["norm_squared"] = scalar_to_json(prepared.norm_squared);
    std::cout << out.dump(2) << "\n";
    return 0;
}

struct Check {
    bool ok;
    std::string what;
};

int cmd_verify(int n_max, bool tamper) {
    std::size_t bound = permanent_bound_from_env();
    std::vector<Check> checks;
    auto record = [&checks](bool ok, const std::string& what) {
        checks.push_back({ok, what});
        std::cout << (ok ? "[ok]   " : "[FAIL] ") << what << "\n";
    };

    // Permutation-sum oracle vs determinant/permanent on random matrices.
    std::mt19937_64 rng(20200623);
    const Scalar entries[] = {Scalar(0), Scalar::rational(1, 2), Scalar(1),
                              Scalar::sqrt2(1, 2)};
    bool oracle_ok = true;
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t k = 2 + rng() % 5;
        ScalarMatrix m(k);
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j) m.at(i, j) = entries[rng() % 4];
        }
        oracle_ok = oracle_ok &&
                    determinant(m) == naive_permutation_sum(m, Statistics::Fermion) &&
                    permanent(m, bound) == naive_permutation_sum(m, Statistics::Boson);
    }
    record(oracle_ok, "determinant/permanent match naive permutation sums (60 random matrices)");

    // Protocol Gram matrices, oracle-checked where n! stays tractable.
    for (int n = 4; n <= std::min(n_max, 8); n += 2) {
        NetworkSpec spec{n / 2, Topology::SharedChain, Statistics::Fermion};
        ScalarMatrix gram = gram_matrix(spec);
        bool ok = determinant(gram) == naive_permutation_sum(gram, Statistics::Fermion) &&
                  permanent(gram, bound) == naive_permutation_sum(gram, Statistics::Boson);
        record(ok, "chain Gram kernels vs oracle, n=" + std::to_string(n));
    }

    // Closed form vs direct preparation + projection.
    for (int n = 4; n <= n_max; n += 2) {
        for (ProtocolKind kind : {ProtocolKind::Separated, ProtocolKind::FermionicShared,
                                  ProtocolKind::BosonicShared}) {
            Statistics eta = kind == ProtocolKind::BosonicShared ? Statistics::Boson
                                                                 : Statistics::Fermion;
            ProtocolRun run = dispatch(kind, n / 2, eta);
            Scalar closed = closed_form_probability(kind, n, bound);
            if (tamper && kind == ProtocolKind::FermionicShared) {
                closed = closed + Scalar::rational(1, 1000);
            }
            bool ok = closed == run.success_probability;
            // Measurement tree normalization.
            Scalar total(0);
            for (const auto& b : run.branches) total += b.branch_probability;
            ok = ok && total == Scalar(1);
            record(ok, "closed form + branch normalization, " + to_string(kind) +
                           " n=" + std::to_string(n));
        }
    }

    for (const auto& c : checks) {
        if (!c.ok) return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact simulator of remote-entanglement activation protocols for "
                 "indistinguishable particles"};
    app.require_subcommand(1);

    std::string kind_name;
    int pairs = 2;
    std::string eta_name = "fermion";
    std::string mode = "enumerate";
    std::uint64_t seed = 0;
    auto add_kind = [&kind_name](CLI::App* cmd) {
        cmd->add_option("kind", kind_name, "fermionic_shared | bosonic_shared | separated")
            ->required();
    };

    auto* run_cmd = app.add_subcommand("run", "Run one protocol and report branches");
    add_kind(run_cmd);
    run_cmd->add_option("-N,--pairs", pairs, "number of particle pairs")->check(CLI::Range(2, 32));
    run_cmd->add_option("--eta", eta_name, "separated topology statistics: fermion | boson")
        ->check(CLI::IsMember({"fermion", "boson"}));
    run_cmd->add_option("--mode", mode)->check(CLI::IsMember({"enumerate", "sample"}));
    run_cmd->add_option("--seed", seed, "sampling seed");

    std::vector<std::string> kinds{"separated", "fermionic_shared", "bosonic_shared"};
    int n_max = 12;
    std::string format = "csv";
    auto* sweep_cmd = app.add_subcommand("sweep", "Success probability vs particle number");
    sweep_cmd->add_option("--kinds", kinds, "protocol kinds");
    sweep_cmd->add_option("--n-max", n_max, "largest (even) particle number");
    sweep_cmd->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

    auto* expand_cmd = app.add_subcommand("expand", "Canonical localized expansion");
    add_kind(expand_cmd);
    expand_cmd->add_option("-N,--pairs", pairs)->check(CLI::Range(2, 32));
    expand_cmd->add_option("--eta", eta_name)->check(CLI::IsMember({"fermion", "boson"}));

    int verify_n_max = 6;
    bool tamper = false;
    auto* verify_cmd = app.add_subcommand("verify", "Oracle and consistency checks");
    verify_cmd->add_option("--n-max", verify_n_max)->check(CLI::Range(4, 16));
    verify_cmd->add_flag("--tamper", tamper,
                         "negative control: perturb a closed-form input");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        Statistics eta = eta_name == "boson" ? Statistics::Boson : Statistics::Fermion;
        if (run_cmd->parsed()) {
            auto kind = protocol_kind_from_string(kind_name);
            if (!kind) {
                std::cerr << "unknown kind: " << kind_name << "\n";
                return 2;
            }
            return cmd_run(*kind, pairs, eta, mode, seed);
        }
        if (sweep_cmd->parsed()) {
            if (n_max % 2 != 0 || n_max < 4) {
                std::cerr << "--n-max must be even and >= 4\n";
                return 2;
            }
            return cmd_sweep(kinds, n_max, format);
        }
        if (expand_cmd->parsed()) {
            auto kind = protocol_kind_from_string(kind_name);
            if (!kind) {
                std::cerr << "unknown kind: " << kind_name << "\n";
                return 2;
            }
            return cmd_expand(*kind, pairs, eta);
        }
        if (verify_cmd->parsed()) return cmd_verify(verify_n_max, tamper);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
