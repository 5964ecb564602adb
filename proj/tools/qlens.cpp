// qlens: command-line front end for lens/weighted-projective graph
// construction and K-theory. Subcommands mirror the pipeline stages; all
// output is deterministic (identical invocations give identical bytes).

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qlens/graph.hpp"
#include "qlens/intlinalg.hpp"
#include "qlens/ktheory.hpp"
#include "qlens/lens.hpp"
#include "qlens/wproj.hpp"

namespace {

using namespace qlens;

struct Options {
    int n = -1;
    long N = -1;
    std::string weights;
    std::string format = "text";
    std::string input;
    std::string output;
};

WeightVector parse_weights(const std::string& s) {
    WeightVector m;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(item, &used);
        } catch (const std::exception&) {
            throw CLI::ValidationError("--weights", "not an integer: \"" + item + "\"");
        }
        if (used != item.size() || v < 1)
            throw CLI::ValidationError("--weights", "weights must be positive integers");
        m.push_back(v);
    }
    if (m.empty()) throw CLI::ValidationError("--weights", "empty weight list");
    return m;
}

// Resolve n from --n/--weights; both given must agree.
int resolve_n(const Options& opt, const WeightVector& m) {
    if (opt.n >= 0 && static_cast<std::size_t>(opt.n) + 1 != m.size())
        throw CLI::ValidationError("--weights",
                                   "length must be n+1 = " + std::to_string(opt.n + 1));
    return static_cast<int>(m.size()) - 1;
}

void emit(const Options& opt, const std::string& text) {
    if (opt.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opt.output, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file " + opt.output);
    out << text;
}

std::string read_input(const Options& opt) {
    if (opt.input.empty() || opt.input == "-") {
        std::stringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(opt.input, std::ios::binary);
    if (!in) throw ParseError("cannot open input file " + opt.input);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string graph_text(const DirectedMultigraph& g) {
    std::ostringstream out;
    out << g.vertex_count() << " vertices, " << g.edges().size() << " edge records\n";
    for (const auto& e : g.edges())
        out << "  " << g.vertices()[e.source].tag << " -> " << g.vertices()[e.range].tag << " ("
            << e.multiplicity.str() << ")\n";
    return out.str();
}

std::string render_graph(const Options& opt, const DirectedMultigraph& g) {
    if (opt.format == "dot") return to_dot(g);
    if (opt.format == "json") return to_json(g) + "\n";
    return graph_text(g);
}

std::string render_ktheory(const Options& opt, const KTheory& kt) {
    if (opt.format == "json") return kt.to_json() + "\n";
    return kt.str() + "\n";
}

int dispatch(const std::string& cmd, const Options& opt) {
    if (cmd == "sphere") {
        if (opt.n < 0) throw CLI::ValidationError("--n", "sphere requires --n");
        emit(opt, render_graph(opt, sphere_graph(opt.n)));
    } else if (cmd == "skew") {
        auto m = parse_weights(opt.weights);
        int n = resolve_n(opt, m);
        if (opt.N < 1) throw CLI::ValidationError("--N", "skew requires --N >= 1");
        auto g = sphere_graph(n);
        emit(opt, render_graph(opt, skew_product(g, weight_labelling(g, opt.N, m), opt.N)));
    } else if (cmd == "lens-graph") {
        auto m = parse_weights(opt.weights);
        int n = resolve_n(opt, m);
        if (opt.N < 1) throw CLI::ValidationError("--N", "lens-graph requires --N >= 1");
        emit(opt, render_graph(opt, lens_graph(n, opt.N, m)));
    } else if (cmd == "lens-k") {
        auto m = parse_weights(opt.weights);
        int n = resolve_n(opt, m);
        if (opt.N < 1) throw CLI::ValidationError("--N", "lens-k requires --N >= 1");
        emit(opt, render_ktheory(opt, lens_k_theory(n, opt.N, m)));
    } else if (cmd == "wp1-graph") {
        auto m = parse_weights(opt.weights);
        if (m.size() != 2) throw CLI::ValidationError("--weights", "wp1-graph needs two weights");
        auto canon = wp1_canonical(m[0], m[1]);
        auto g = wp1_graph(m[0], m[1]);
        if (opt.format == "json") {
            nlohmann::ordered_json j;
            j["graph"] = nlohmann::ordered_json::parse(to_json(g));
            j["canonical"] = {{"gcd", canon.g},
                              {"reduced", {canon.reduced.first, canon.reduced.second}}};
            emit(opt, j.dump() + "\n");
        } else if (opt.format == "dot") {
            emit(opt, to_dot(g));
        } else {
            emit(opt, graph_text(g) + "canonical: WP^1(1," +
                          std::to_string(canon.reduced.second) + ")\n");
        }
    } else if (cmd == "wp-k") {
        auto m = parse_weights(opt.weights);
        auto kt = wp_k_theory(m);
        if (opt.format == "json") {
            emit(opt, kt.to_json() + "\n");
        } else {
            std::string text = kt.groups.str() + "\n";
            for (const auto& s : kt.extension_trace)
                text += "step n=" + std::to_string(s.n) +
                        ": ideal K^" + std::to_string(s.ideal_copies) + "\n";
            emit(opt, text);
        }
    } else if (cmd == "snf") {
        auto A = IntegerMatrix::from_json(read_input(opt));
        auto snf = smith_normal_form(A);
        if (opt.format == "json") {
            nlohmann::ordered_json j;
            j["D"] = nlohmann::ordered_json::parse(snf.D.to_json());
            j["U"] = nlohmann::ordered_json::parse(snf.U.to_json());
            j["V"] = nlohmann::ordered_json::parse(snf.V.to_json());
            emit(opt, j.dump() + "\n");
        } else {
            std::string text = "invariant factors:";
            for (const auto& f : snf.invariant_factors()) text += " " + f.get_str();
            emit(opt, text + "\n");
        }
    } else if (cmd == "graph-k") {
        emit(opt, render_ktheory(opt, graph_k_theory(from_json(read_input(opt)))));
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph constructions and K-theory for quantum lens and weighted "
                 "projective spaces"};
    app.require_subcommand(1);

    Options opt;
    std::string cmd;
    for (const char* name :
         {"sphere", "skew", "lens-graph", "lens-k", "wp1-graph", "wp-k", "snf", "graph-k"}) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("--n", opt.n, "level count minus one");
        sub->add_option("--N", opt.N, "order of the cyclic group");
        sub->add_option("--weights", opt.weights, "comma-separated positive weights");
        sub->add_option("--format", opt.format, "dot, json or text")
            ->check(CLI::IsMember({"dot", "json", "text"}));
        sub->add_option("--input", opt.input, "input file (default stdin)");
        sub->add_option("--output", opt.output, "output file (default stdout)");
        sub->callback([&cmd, name] { cmd = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        return dispatch(cmd, opt);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const qlens::HypothesisNotSatisfied& e) {
        std::cerr << "hypothesis not satisfied at j=" << e.failing_index << ": " << e.what()
                  << "\n";
        return 3;
    } catch (const qlens::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 4;
    } catch (const qlens::DimensionMismatch& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
}
