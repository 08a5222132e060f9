// Command-line front end: construction, structure maps, identity
// verification, pairing certificates, enumeration, and homology tables.
// Exit codes: 0 pass, 1 identity violated, 2 input error, 3 internal error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "graphcx/corpus.hpp"
#include "graphcx/errors.hpp"
#include "graphcx/flowcharts.hpp"
#include "graphcx/involution.hpp"
#include "graphcx/io.hpp"

namespace {

using namespace graphcx;

struct CorpusOptions {
    int max_v = 4;
    int max_e = 6;
};

std::vector<OrientedGraph> corpus_graphs(const CorpusOptions& opt) {
    std::vector<OrientedGraph> out;
    for (int v = 1; v <= opt.max_v; ++v)
        for (int e = 1; e <= opt.max_e; ++e)
            for (const auto& key : enumerate_graphs(v, e).keys)
                out.push_back(decode_key(key));
    return out;
}

std::vector<std::vector<OrientedGraph>> corpus_tuples(const CorpusOptions& opt, int n) {
    const auto singles = corpus_graphs(opt);
    std::vector<std::vector<OrientedGraph>> tuples;
    std::vector<size_t> pick(static_cast<size_t>(n), 0);
    if (singles.empty()) return tuples;
    for (;;) {
        std::vector<OrientedGraph> tuple;
        for (size_t i : pick) tuple.push_back(singles[i]);
        tuples.push_back(std::move(tuple));
        size_t i = 0;
        while (i < pick.size() && ++pick[i] == singles.size()) pick[i++] = 0;
        if (i == pick.size()) break;
    }
    return tuples;
}

// Deterministic parallel map: results land by index, reduction is ordered.
template <class Fn>
std::vector<bool> parallel_check(size_t count, int jobs, Fn&& check) {
    std::vector<bool> ok(count, true);
    if (jobs < 2 || count < 2) {
        for (size_t i = 0; i < count; ++i) ok[i] = check(i);
        return ok;
    }
    std::vector<std::thread> workers;
    std::atomic<size_t> next{0};
    for (int w = 0; w < jobs; ++w)
        workers.emplace_back([&] {
            for (size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1))
                ok[i] = check(i);
        });
    for (auto& t : workers) t.join();
    return ok;
}

std::string tuple_name(const std::vector<OrientedGraph>& tuple) {
    std::string out;
    for (size_t i = 0; i < tuple.size(); ++i) {
        if (i) out += " (x) ";
        Canonical c = canonicalize(tuple[i]);
        out += c.is_zero() ? encode_graph(tuple[i]).text : c.key.text;
    }
    return out;
}

int run_canon(const std::string& arg) {
    Canonical c = canonicalize(load_graph_argument(arg));
    if (c.is_zero())
        std::cout << "0\n";
    else
        std::cout << c.sign << " * " << c.key.text << "\n";
    return 0;
}

void print_signed(const OpResult& r) {
    if (r.value.is_zero()) {
        std::cout << "0\n";
        return;
    }
    std::cout << r.value.sign << " *\n" << write_graph_text(r.value.graph);
}

int run_alpha(int m, int n, const std::vector<std::string>& args, bool json) {
    if (static_cast<int>(args.size()) != n)
        throw input_error("expected " + std::to_string(n) + " input graph(s)");
    std::vector<OrientedGraph> graphs;
    for (const auto& a : args) graphs.push_back(load_graph_argument(a));
    TensorVector result = alpha(m, AlphaInput(std::move(graphs)));
    std::cout << (json ? render_tensor_json(result) + "\n" : render_tensor_text(result));
    return 0;
}

int run_verify_shlb(int m, int n, const std::vector<std::string>& inputs, bool use_corpus,
                    const CorpusOptions& opt, int jobs, bool json) {
    std::vector<std::vector<OrientedGraph>> tuples;
    if (use_corpus) {
        tuples = corpus_tuples(opt, n);
    } else {
        if (static_cast<int>(inputs.size()) != n)
            throw input_error("expected " + std::to_string(n) + " input graph(s)");
        std::vector<OrientedGraph> tuple;
        for (const auto& a : inputs) tuple.push_back(load_graph_argument(a));
        tuples.push_back(std::move(tuple));
    }
    std::vector<TensorVector> residuals(tuples.size(), TensorVector::zero(m));
    auto ok = parallel_check(tuples.size(), jobs, [&](size_t i) {
        residuals[i] = shlb_residual(m, n, AlphaInput(tuples[i]));
        return residuals[i].is_zero();
    });
    size_t failures = 0;
    for (size_t i = 0; i < tuples.size(); ++i) {
        if (ok[i]) continue;
        ++failures;
        std::cout << "FAIL (" << m << "," << n << ") on " << tuple_name(tuples[i]) << "\n"
                  << render_tensor_text(residuals[i]);
    }
    if (json) {
        nlohmann::json doc = {{"m", m},
                              {"n", n},
                              {"tuples", tuples.size()},
                              {"failures", failures}};
        std::cout << doc.dump() << "\n";
    } else {
        std::cout << "shlb (" << m << "," << n << "): " << tuples.size() << " tuple(s), "
                  << failures << " failure(s)\n";
    }
    return failures == 0 ? 0 : 1;
}

int run_verify_classical(const CorpusOptions& opt, int jobs, bool json) {
    size_t total_failures = 0;
    nlohmann::json report = nlohmann::json::array();
    for (const auto& id : named_identities()) {
        static const std::set<std::string_view> classical = {
            "d_squared", "leibniz", "jacobi", "coderivation", "cojacobi"};
        if (!classical.count(id.name)) continue;
        auto tuples = corpus_tuples(opt, id.n);
        auto ok = parallel_check(tuples.size(), jobs, [&](size_t i) {
            return named_identity(id.name, AlphaInput(tuples[i])).is_zero();
        });
        size_t failures = 0;
        for (size_t i = 0; i < tuples.size(); ++i) {
            if (ok[i]) continue;
            ++failures;
            std::cout << "FAIL " << id.name << " on " << tuple_name(tuples[i]) << "\n";
        }
        total_failures += failures;
        if (json)
            report.push_back({{"identity", std::string(id.name)},
                              {"tuples", tuples.size()},
                              {"failures", failures}});
        else
            std::cout << id.name << ": " << tuples.size() << " tuple(s), " << failures
                      << " failure(s)\n";
    }
    if (json) std::cout << report.dump() << "\n";
    return total_failures == 0 ? 0 : 1;
}

int run_verify_onepi(const CorpusOptions& opt, int jobs, bool json) {
    auto singles = corpus_graphs(opt);
    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t i = 0; i < singles.size(); ++i)
        for (size_t j = 0; j < singles.size(); ++j)
            if (is_one_pi(singles[i]) || is_one_pi(singles[j])) pairs.emplace_back(i, j);
    auto ok = parallel_check(pairs.size(), jobs, [&](size_t k) {
        return alpha22(singles[pairs[k].first], singles[pairs[k].second]).is_zero();
    });
    size_t failures = 0;
    for (size_t k = 0; k < pairs.size(); ++k) {
        if (ok[k]) continue;
        ++failures;
        std::cout << "FAIL alpha22 on "
                  << tuple_name({singles[pairs[k].first], singles[pairs[k].second]}) << "\n";
    }
    if (json) {
        nlohmann::json doc = {{"pairs", pairs.size()}, {"failures", failures}};
        std::cout << doc.dump() << "\n";
    } else {
        std::cout << "onepi: " << pairs.size() << " pair(s), " << failures
                  << " failure(s)\n";
    }
    return failures == 0 ? 0 : 1;
}

int run_verify_involution(int m, int n, const std::vector<std::string>& inputs, bool json) {
    if (static_cast<int>(inputs.size()) != n)
        throw input_error("expected " + std::to_string(n) + " input graph(s)");
    std::vector<OrientedGraph> tuple;
    for (const auto& a : inputs) tuple.push_back(load_graph_argument(a));
    PairingCertificate cert = verify_pairing(m, n, AlphaInput(std::move(tuple)));
    std::cout << (json ? render_certificate_json(cert) + "\n"
                       : render_certificate_text(cert));
    return 0;
}

int run_enumerate(int v, int e, bool connected, bool one_pi) {
    Basis basis = enumerate_graphs(v, e, {connected, one_pi});
    for (const auto& key : basis.keys) std::cout << key.text << "\n";
    return 0;
}

int run_homology(const CorpusOptions& opt, const std::string& out_dir, bool json) {
    namespace fs = std::filesystem;
    std::map<Bidegree, Basis> bases;
    auto basis_at = [&](int v, int e) -> const Basis& {
        Bidegree d{v, e};
        auto it = bases.find(d);
        if (it == bases.end()) it = bases.emplace(d, enumerate_graphs(v, e)).first;
        return it->second;
    };
    if (!out_dir.empty()) fs::create_directories(out_dir);

    nlohmann::json rows = nlohmann::json::array();
    bool d2_ok = true;
    if (!json)
        std::cout << "V\tE\tdim\trank_out\trank_in\tbetti\n";
    for (int v = 2; v <= opt.max_v; ++v) {
        for (int e = 3; e <= opt.max_e; ++e) {
            if (2 * e < 3 * v) continue;
            const Basis& here = basis_at(v, e);
            const Basis& below = basis_at(std::max(v - 1, 1), std::max(e - 1, 1));
            const Basis& above = basis_at(v + 1, e + 1);
            SparseIntMatrix out_matrix = differential_matrix(here, below);
            SparseIntMatrix in_matrix = differential_matrix(above, here);
            long long rank_out = exact_rank(out_matrix);
            long long rank_in = exact_rank(in_matrix);
            long long b = static_cast<long long>(here.size()) - rank_out - rank_in;

            // d.d = 0 at this bidegree
            std::vector<std::vector<long long>> din(here.size(),
                                                    std::vector<long long>(above.size(), 0));
            for (const auto& [r, c, val] : in_matrix.entries)
                din[static_cast<size_t>(r)][static_cast<size_t>(c)] += val;
            std::vector<std::vector<long long>> dout(
                below.size(), std::vector<long long>(here.size(), 0));
            for (const auto& [r, c, val] : out_matrix.entries)
                dout[static_cast<size_t>(r)][static_cast<size_t>(c)] += val;
            for (size_t i = 0; i < below.size() && d2_ok; ++i)
                for (size_t j = 0; j < above.size() && d2_ok; ++j) {
                    long long sum = 0;
                    for (size_t k = 0; k < here.size(); ++k) sum += dout[i][k] * din[k][j];
                    if (sum != 0) d2_ok = false;
                }

            if (json)
                rows.push_back({{"v", v},
                                {"e", e},
                                {"dim", here.size()},
                                {"rank_out", rank_out},
                                {"rank_in", rank_in},
                                {"betti", b}});
            else
                std::cout << v << '\t' << e << '\t' << here.size() << '\t' << rank_out
                          << '\t' << rank_in << '\t' << b << "\n";

            if (!out_dir.empty()) {
                std::string stem = out_dir + "/basis_" + std::to_string(v) + "_" +
                                   std::to_string(e);
                std::ofstream bf(stem + ".txt");
                for (const auto& key : here.keys) bf << key.text << "\n";
                std::ofstream mf(out_dir + "/matrix_" + std::to_string(v) + "_" +
                                 std::to_string(e) + ".txt");
                mf << out_matrix.rows << ' ' << out_matrix.cols << "\n";
                for (const auto& [r, c, val] : out_matrix.entries)
                    mf << r << ' ' << c << ' ' << val << "\n";
            }
        }
    }
    if (json) {
        nlohmann::json doc = {{"rows", rows}, {"d_squared_zero", d2_ok}};
        std::cout << doc.dump() << "\n";
    } else {
        std::cout << "d.d = 0 across the grid: " << (d2_ok ? "yes" : "NO") << "\n";
    }
    if (!d2_ok) throw internal_error("consecutive differential matrices do not compose to zero");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"oriented graph complex toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json = false;
    int jobs = 1;
    app.add_flag("--json", json, "emit machine-readable reports");
    app.add_option("--jobs", jobs, "worker threads (results merge deterministically)");

    std::string canon_arg;
    auto* canon = app.add_subcommand("canon", "signed canonical form of a graph");
    canon->add_option("graph", canon_arg, "literal `V;s>t,...` or file")->required();

    auto* op = app.add_subcommand("op", "elementary operations");
    op->require_subcommand(1);
    std::string op_g1, op_g2, op_h1, op_h2;
    int op_edge = 0;
    auto* op_product = op->add_subcommand("product", "disjoint union with label shift");
    op_product->add_option("g1", op_g1)->required();
    op_product->add_option("g2", op_g2)->required();
    auto* op_contract = op->add_subcommand("contract", "contract an edge");
    op_contract->add_option("graph", op_g1)->required();
    op_contract->add_option("edge", op_edge)->required();
    auto* op_splice = op->add_subcommand("splice", "cross two edges");
    op_splice->add_option("graph", op_g1)->required();
    op_splice->add_option("h1", op_h1)->required();
    op_splice->add_option("h2", op_h2)->required();
    auto* op_surgery = op->add_subcommand("surgery", "splice then contract");
    op_surgery->add_option("graph", op_g1)->required();
    op_surgery->add_option("h1", op_h1)->required();
    op_surgery->add_option("h2", op_h2)->required();

    int alpha_m = 1, alpha_n = 1;
    std::vector<std::string> alpha_graphs;
    auto* alpha_cmd = app.add_subcommand("alpha", "evaluate a structure map");
    alpha_cmd->add_option("--m", alpha_m)->required();
    alpha_cmd->add_option("--n", alpha_n)->required();
    alpha_cmd->add_option("graphs", alpha_graphs, "n graphs");

    auto* verify = app.add_subcommand("verify", "identity verification");
    verify->require_subcommand(1);
    int vm = 1, vn = 1;
    bool use_corpus = false;
    CorpusOptions copt;
    std::vector<std::string> vinputs;
    auto* vshlb = verify->add_subcommand("shlb", "composition identity residual");
    vshlb->add_option("--m", vm)->required();
    vshlb->add_option("--n", vn)->required();
    vshlb->add_flag("--corpus", use_corpus);
    vshlb->add_option("--max-v", copt.max_v);
    vshlb->add_option("--max-e", copt.max_e);
    vshlb->add_option("--inputs", vinputs, "explicit input graphs");
    auto* vclassical = verify->add_subcommand("classical", "the five classical identities");
    vclassical->add_flag("--corpus", use_corpus);
    vclassical->add_option("--max-v", copt.max_v);
    vclassical->add_option("--max-e", copt.max_e);
    auto* vonepi = verify->add_subcommand("onepi", "two-slot map on bridgeless factors");
    vonepi->add_flag("--corpus", use_corpus);
    vonepi->add_option("--max-v", copt.max_v);
    vonepi->add_option("--max-e", copt.max_e);
    auto* vinv = verify->add_subcommand("involution", "pairing certificate");
    vinv->add_option("--m", vm)->required();
    vinv->add_option("--n", vn)->required();
    vinv->add_option("--inputs", vinputs, "explicit input graphs")->required();

    int en_v = 2, en_e = 3;
    bool en_connected = false, en_onepi = false;
    auto* enumerate = app.add_subcommand("enumerate", "basis at a bidegree");
    enumerate->add_option("--v", en_v)->required();
    enumerate->add_option("--e", en_e)->required();
    enumerate->add_flag("--connected", en_connected);
    enumerate->add_flag("--one-pi", en_onepi);

    CorpusOptions hopt;
    std::string hout;
    auto* homology = app.add_subcommand("homology", "exact homology table");
    homology->add_option("--max-v", hopt.max_v)->required();
    homology->add_option("--max-e", hopt.max_e)->required();
    homology->add_option("--out", hout, "write basis and matrix files here");

    try {
        app.parse(argc, argv);
        if (*canon) return run_canon(canon_arg);
        if (*op_product) {
            std::cout << write_graph_text(
                product(load_graph_argument(op_g1), load_graph_argument(op_g2)));
            return 0;
        }
        if (*op_contract) {
            print_signed(contract(load_graph_argument(op_g1), op_edge));
            return 0;
        }
        if (*op_splice) {
            OrientedGraph g = load_graph_argument(op_g1);
            print_signed(splice(g, parse_half_edge(op_h1, g), parse_half_edge(op_h2, g)));
            return 0;
        }
        if (*op_surgery) {
            OrientedGraph g = load_graph_argument(op_g1);
            print_signed(surgery(g, parse_half_edge(op_h1, g), parse_half_edge(op_h2, g)));
            return 0;
        }
        if (*alpha_cmd) return run_alpha(alpha_m, alpha_n, alpha_graphs, json);
        if (*vshlb) return run_verify_shlb(vm, vn, vinputs, use_corpus, copt, jobs, json);
        if (*vclassical) return run_verify_classical(copt, jobs, json);
        if (*vonepi) return run_verify_onepi(copt, jobs, json);
        if (*vinv) return run_verify_involution(vm, vn, vinputs, json);
        if (*enumerate) return run_enumerate(en_v, en_e, en_connected, en_onepi);
        if (*homology) return run_homology(hopt, hout, json);
        return 2;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const check_failure& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return 1;
    } catch (const internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
