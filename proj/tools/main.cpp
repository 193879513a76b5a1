#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bcast/constructions.hpp"
#include "bcast/formulas.hpp"
#include "bcast/solver.hpp"

using json = nlohmann::json;
using namespace bcast;

namespace {

constexpr int exit_clean = 0;
constexpr int exit_usage = 1;
constexpr int exit_size = 2;
constexpr int exit_mismatch = 3;

std::vector<int> parse_generators(const std::string& text) {
    std::vector<int> gens;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) gens.push_back(std::stoi(item));
    return gens;
}

json witness_json(const Broadcast& b) {
    return json{{"n", b.graph.n()},
                {"generators", b.graph.generators()},
                {"values", b.values},
                {"cost", cost(b)}};
}

Broadcast witness_from_json(const json& j) {
    CirculantGraph g = build_circulant(j.at("n").get<int>(),
                                      j.at("generators").get<std::vector<int>>());
    Broadcast b(g, j.at("values").get<std::vector<int>>());
    if (j.contains("cost") && j["cost"].get<int>() != cost(b))
        throw std::invalid_argument("witness cost field does not match the values");
    return b;
}

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(out_path);
    if (!file) throw std::runtime_error("cannot open output path: " + out_path);
    file << text;
}

struct SweepRow {
    int n, a;
    std::optional<int> alpha, beta, beta2, witness_cost;
    Prediction prediction;
    std::string status;
};

std::string opt_str(const std::optional<int>& v) {
    return v ? std::to_string(*v) : std::string();
}

SweepRow sweep_row(int n, int a) {
    SweepRow row;
    row.n = n;
    row.a = a;
    row.prediction = predict_beta(n, a);
    CirculantGraph g = build_circulant(n, {1, a});
    bool size_limited = false;
    try {
        row.alpha = max_independent_set(g).value;
    } catch (const size_limit_error&) {
        size_limited = true;
    }
    try {
        row.beta = broadcast_independence(g).value;
    } catch (const size_limit_error&) {
        size_limited = true;
    }
    try {
        row.beta2 = broadcast_independence(g, 2).value;
    } catch (const size_limit_error&) {
        size_limited = true;
    }
    try {
        row.witness_cost = cost(construct_witness(n, a));
    } catch (const no_construction_error&) {
    }
    if (row.prediction.kind == PredictionKind::unknown) {
        row.status = "open_case";
    } else if (!row.beta) {
        row.status = size_limited ? "skipped_size" : "open_case";
    } else if (row.prediction.kind == PredictionKind::exact &&
               *row.prediction.value == *row.beta && row.witness_cost == row.beta) {
        row.status = "confirmed";
    } else {
        row.status = "mismatch";
    }
    return row;
}

int run_verify(int n_max, const std::string& out_path, const std::string& format) {
    std::ostringstream body;
    json rows = json::array();
    body << "n,a,alpha,beta,beta_2bounded,predicted,kind,theorem,witness_cost,status\n";
    int confirmed = 0, mismatch = 0, open_case = 0, skipped = 0;
    for (int n = 4; n <= n_max; ++n)
        for (int a = 2; a <= n / 2; ++a) {
            SweepRow row = sweep_row(n, a);
            if (row.status == "confirmed") ++confirmed;
            else if (row.status == "mismatch") ++mismatch;
            else if (row.status == "open_case") ++open_case;
            else ++skipped;
            if (format == "json") {
                rows.push_back(json{{"n", row.n},
                                    {"a", row.a},
                                    {"alpha", row.alpha ? json(*row.alpha) : json()},
                                    {"beta", row.beta ? json(*row.beta) : json()},
                                    {"beta_2bounded", row.beta2 ? json(*row.beta2) : json()},
                                    {"predicted", row.prediction.value ? json(*row.prediction.value) : json()},
                                    {"kind", kind_name(row.prediction.kind)},
                                    {"theorem", row.prediction.rule},
                                    {"witness_cost", row.witness_cost ? json(*row.witness_cost) : json()},
                                    {"status", row.status}});
            } else {
                body << row.n << ',' << row.a << ',' << opt_str(row.alpha) << ','
                     << opt_str(row.beta) << ',' << opt_str(row.beta2) << ','
                     << (row.prediction.value ? std::to_string(*row.prediction.value) : "")
                     << ',' << kind_name(row.prediction.kind) << ',' << row.prediction.rule
                     << ',' << opt_str(row.witness_cost) << ',' << row.status << '\n';
            }
        }
    write_output(out_path, format == "json" ? rows.dump(2) + "\n" : body.str());
    std::cerr << "confirmed=" << confirmed << " mismatch=" << mismatch
              << " open_case=" << open_case << " skipped_size=" << skipped << "\n";
    return mismatch > 0 ? exit_mismatch : exit_clean;
}

int run_check_2bounded(int n_max) {
    int violations = 0;
    for (int n = 6; n <= n_max; ++n)
        for (int a = 2; a <= n / 2; ++a) {
            CirculantGraph g = build_circulant(n, {1, a});
            int beta, beta2;
            try {
                beta = broadcast_independence(g).value;
                beta2 = broadcast_independence(g, 2).value;
            } catch (const size_limit_error&) {
                std::cout << n << ',' << a << ",skipped_size\n";
                continue;
            }
            bool excluded = a == 2 || n == 2 * a + 1 || (n == 2 * a && a % 2 == 0);
            if (beta == beta2) {
                std::cout << n << ',' << a << ",no_gap\n";
            } else if (excluded) {
                std::cout << n << ',' << a << ",gap," << beta - beta2 << "\n";
            } else {
                std::cout << n << ',' << a << ",unexpected_gap," << beta - beta2 << "\n";
                ++violations;
            }
        }
    return violations > 0 ? exit_mismatch : exit_clean;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"broadcast independence toolkit for circulant graphs C(n;1,a)"};
    app.require_subcommand(1);

    int n = 0, a = 0, n_max = 20, bound = 0;
    unsigned seed = 0;
    std::string gens_text, out_path, format = "csv";

    CLI::App* cmd_exact = app.add_subcommand("exact", "exact alpha/beta by search");
    cmd_exact->add_option("--n", n)->required();
    cmd_exact->add_option("--gens", gens_text, "comma separated steps, e.g. 1,3")->required();
    cmd_exact->add_option("--bound", bound, "restrict broadcast values to <= bound");
    cmd_exact->add_option("--out", out_path);

    CLI::App* cmd_predict = app.add_subcommand("predict", "closed-form prediction");
    cmd_predict->add_option("--n", n)->required();
    cmd_predict->add_option("--a", a)->required();

    CLI::App* cmd_construct = app.add_subcommand("construct", "emit an optimal witness");
    cmd_construct->add_option("--n", n)->required();
    cmd_construct->add_option("--a", a)->required();
    cmd_construct->add_option("--out", out_path);

    CLI::App* cmd_verify = app.add_subcommand("verify", "sweep and cross-check");
    cmd_verify->add_option("--n-max", n_max);
    cmd_verify->add_option("--out", out_path);
    cmd_verify->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

    CLI::App* cmd_check = app.add_subcommand("check-2bounded",
                                             "compare beta with its 2-bounded variant");
    cmd_check->add_option("--n-max", n_max);

    CLI::App* cmd_reduce = app.add_subcommand(
        "reduce", "transform witness JSON (stdin) into a 2-bounded witness");
    cmd_reduce->add_option("--seed", seed,
                           "instead of stdin, reduce a random broadcast on C(n;1,a)");
    cmd_reduce->add_option("--n", n);
    cmd_reduce->add_option("--a", a);
    cmd_reduce->add_option("--out", out_path);

    CLI::App* cmd_coverage = app.add_subcommand("coverage", "theorem coverage matrix");
    cmd_coverage->add_option("--n-max", n_max);
    cmd_coverage->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_clean : exit_usage;
    }

    try {
        if (cmd_exact->parsed()) {
            CirculantGraph g = build_circulant(n, parse_generators(gens_text));
            std::optional<int> b = bound > 0 ? std::optional<int>(bound) : std::nullopt;
            SolveResult r = bound == 1 ? max_independent_set(g)
                                       : broadcast_independence(g, b);
            std::cout << "value " << r.value << " nodes " << r.nodes_explored << "\n";
            write_output(out_path, witness_json(r.witness).dump() + "\n");
        } else if (cmd_predict->parsed()) {
            Prediction pa = predict_alpha(n, a);
            Prediction pb = predict_beta(n, a);
            std::cout << "alpha "
                      << (pa.value ? std::to_string(*pa.value) : "unknown") << " ("
                      << pa.rule << ")\n";
            std::cout << "beta "
                      << (pb.value ? std::to_string(*pb.value) : "unknown") << " ("
                      << pb.rule << (pb.note.empty() ? "" : ", " + pb.note) << ")\n";
        } else if (cmd_construct->parsed()) {
            Broadcast w = construct_witness(n, a);
            std::cout << "cost " << cost(w) << " rule " << predict_beta(n, a).rule
                      << "\n";
            write_output(out_path, witness_json(w).dump() + "\n");
        } else if (cmd_verify->parsed()) {
            return run_verify(n_max, out_path, format);
        } else if (cmd_check->parsed()) {
            return run_check_2bounded(n_max);
        } else if (cmd_reduce->parsed()) {
            Broadcast input = [&]() {
                if (cmd_reduce->count("--seed") > 0) {
                    if (n == 0 || a == 0)
                        throw std::invalid_argument("--seed mode needs --n and --a");
                    CirculantGraph g = build_circulant(n, {1, a});
                    DistanceOracle oracle(g);
                    std::mt19937 rng(seed);
                    std::vector<int> values(n, 0), placed;
                    for (int i = 0; i < n; ++i) {
                        int v = 1 + (int)(rng() % oracle.diameter());
                        bool ok = true;
                        for (int p : placed)
                            if (oracle.distance(p, i) <= std::max(values[p], v)) ok = false;
                        if (!ok) continue;
                        values[i] = v;
                        placed.push_back(i);
                    }
                    return Broadcast(g, values);
                }
                json j;
                std::cin >> j;
                return witness_from_json(j);
            }();
            Broadcast reduced = reduce_to_2bounded(input);
            write_output(out_path, witness_json(reduced).dump() + "\n");
        } else if (cmd_coverage->parsed()) {
            std::ostringstream body;
            body << "n,a,theorem,kind\n";
            for (const CoverageRow& row : coverage_matrix(n_max))
                body << row.n << ',' << row.a << ',' << row.rule << ','
                     << kind_name(row.kind) << '\n';
            write_output(out_path, body.str());
        }
    } catch (const size_limit_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_size;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_clean;
}
