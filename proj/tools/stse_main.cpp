#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "stse/completion.hpp"
#include "stse/design.hpp"
#include "stse/embedder.hpp"
#include "stse/errors.hpp"
#include "stse/io.hpp"
#include "stse/witness.hpp"

namespace {

using namespace stse;

void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-")
        std::cout << text;
    else
        write_text_file(path, text);
}

std::string load(const std::string& path) {
    return path == "-" ? std::string(std::istreambuf_iterator<char>(std::cin), {}) : read_text_file(path);
}

void print_report(const EmbedReport& r) {
    std::cerr << "split: u'=" << r.split.u << " w'=" << r.split.w << "\n"
              << "sparsify: dropped=" << r.sparsify.dropped << " deleted=" << r.sparsify.deleted
              << " case1=" << r.sparsify.case1 << " case2=" << r.sparsify.case2 << "\n"
              << "L*: edges=" << r.lstar_edges << " max_degree=" << r.lstar_max_degree
              << " covering=" << r.helper_covering << " |D|=" << r.d_size << "\n"
              << "extraction: direct=" << r.extraction.direct << " via_nose=" << r.extraction.via_nose
              << " via_relocated_edge=" << r.extraction.via_relocated_edge << "\n"
              << r.finish.describe();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Embeddings of partial Steiner triple systems"};
    app.require_subcommand(1);

    std::string input, output, design, host, graph;
    int order = 0, max_order = 0, u = 0, w = 0;
    long long triples = 0;
    std::uint64_t seed = 0, budget = 0;
    bool exhaustive = false, report = false;

    auto* embed = app.add_subcommand("embed", "Embed a PSTS into an STS of the given order");
    embed->add_option("--input", input, "PSTS file")->required();
    embed->add_option("--order", order, "Target order v")->required();
    embed->add_option("--seed", seed, "Random seed");
    embed->add_option("--budget", budget, "Hill-climb proposals per restart (0 = automatic)");
    embed->add_option("--output,-o", output, "Output file (default stdout)");
    embed->add_flag("--report", report, "Print construction statistics to stderr");

    auto* verify = app.add_subcommand("verify", "Verify a design or a decomposition");
    verify->add_option("--design", design, "Triple file")->required();
    verify->add_option("--host", host, "Host graph the triples must decompose");
    verify->add_option("--input", input, "PSTS the design must contain");

    auto* witness = app.add_subcommand("witness", "Build a PSTS with no small embedding");
    witness->add_option("--u", u, "Order")->required();
    auto* wopt = witness->add_option("--w", w, "Number of points any embedding must add");
    auto* topt = witness->add_option("--triples", triples, "Upper bound on the number of triples");
    wopt->excludes(topt);
    witness->add_option("--seed", seed, "Random seed");
    witness->add_option("--output,-o", output, "Output file (default stdout)");

    auto* spectrum = app.add_subcommand("spectrum", "Orders into which a small PSTS embeds");
    spectrum->add_option("--input", input, "PSTS file")->required();
    spectrum->add_option("--max-order", max_order, "Largest order to try")->required();
    spectrum->add_flag("--exhaustive", exhaustive, "Decide each order exactly");
    spectrum->add_option("--seed", seed, "Random seed");

    auto* nw = app.add_subcommand("nw-decompose", "Triangle decomposition of a dense graph");
    nw->add_option("--graph", graph, "Graph file")->required();
    nw->add_option("--seed", seed, "Random seed");
    nw->add_option("--budget", budget, "Hill-climb proposals per restart (0 = automatic)");
    nw->add_option("--output,-o", output, "Output file (default stdout)");
    nw->add_flag("--report", report, "Print construction statistics to stderr");

    auto* check = app.add_subcommand("check", "Admissibility and necessary conditions for L v K_w");
    check->add_option("--input", input, "PSTS file")->required();
    check->add_option("--w", w, "Number of added points")->required();

    CLI11_PARSE(app, argc, argv);

    CompletionConfig cfg;
    cfg.seed = seed;
    cfg.budget = budget;

    try {
        if (*embed) {
            const Psts p = parse_psts(load(input));
            EmbedReport rep;
            const Psts s = embed_psts(p, order, cfg, &rep);
            if (report) print_report(rep);
            emit(output, render_triples("sts", s.order(), s.triples()));
        } else if (*verify) {
            const TripleFile f = parse_triples(load(design));
            if (!host.empty()) {
                const Graph g = parse_graph(load(host));
                const auto r = verify_triangle_decomposition(g, f.triples);
                if (!r.ok) {
                    std::cout << "FAIL " << r.first_violation << "\n";
                    return 1;
                }
            } else {
                const Psts s(f.order, f.triples);
                if (f.kind == "sts" && !s.is_complete()) {
                    std::cout << "FAIL not every pair is covered\n";
                    return 1;
                }
                if (!input.empty() && !s.contains_all(parse_psts(load(input)))) {
                    std::cout << "FAIL design does not contain the input\n";
                    return 1;
                }
            }
            std::cout << "ok " << f.kind << ' ' << f.order << ' ' << f.triples.size() << "\n";
        } else if (*witness) {
            auto [p, rep] = *wopt ? no_embed_witness(u, w, seed) : lb_witness(u, triples, seed);
            std::cerr << "a=" << rep.a << " w=" << rep.w << " triples=" << rep.triples
                      << " min_order=" << rep.min_embedding_order << "\n";
            emit(output, render_psts(p));
        } else if (*spectrum) {
            const Psts p = parse_psts(load(input));
            const auto r = embedding_spectrum(p, max_order, exhaustive ? SpectrumMode::Exhaustive : SpectrumMode::Heuristic,
                                              seed);
            std::cout << (r.exact ? "exact" : "found");
            for (int v : r.orders) std::cout << ' ' << v;
            std::cout << "\n";
        } else if (*nw) {
            const Graph g = parse_graph(load(graph));
            EmbedReport rep;
            const auto t = decompose_nw(g, cfg, &rep);
            if (report) print_report(rep);
            emit(output, render_triples("decomposition", g.order(), t));
        } else if (*check) {
            const Psts p = parse_psts(load(input));
            const auto r = necessary_conditions(leave_of(p), w);
            std::cout << (r.verdict == Necessity::PassNecessary ? "pass" : "fail") << ": " << r.reason << "\n";
            return r.verdict == Necessity::PassNecessary ? 0 : 2;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 4;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition: " << e.what() << "\n";
        return 2;
    } catch (const BudgetExhausted& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return 3;
    } catch (const DefectError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
