#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tdcol/condensation.hpp"
#include "tdcol/digraph.hpp"
#include "tdcol/errors.hpp"
#include "tdcol/io.hpp"
#include "tdcol/obstructions.hpp"
#include "tdcol/poly.hpp"
#include "tdcol/reductions.hpp"

using namespace tdcol;

namespace {

// exit codes: 0 = yes/success, 1 = no, 2 = error
int verdict(bool yes, const std::string& algorithm,
            const std::optional<Certificate>& cert = std::nullopt, bool json = false) {
    std::cout << (yes ? "yes" : "no") << "\n";
    if (!algorithm.empty()) std::cout << "algorithm: " << algorithm << "\n";
    if (json && cert) std::cout << certificate_json(*cert) << "\n";
    return yes ? 0 : 1;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

ProblemHandle parse_problem(const std::string& spec) {
    auto tail = [&](const std::string& prefix) -> std::optional<std::string> {
        if (spec.rfind(prefix, 0) == 0) return spec.substr(prefix.size());
        return std::nullopt;
    };
    auto count = [&](const std::string& text) {
        try {
            size_t used = 0;
            const int k = std::stoi(text, &used);
            if (used == text.size() && k >= 1) return k;
        } catch (const std::exception&) {
        }
        throw Error("bad number in problem spec '" + spec + "'");
    };
    if (auto t = tail("hom:")) {
        if (*t == "digon") return ProblemHandle::hom(strong_clique(2), spec);
        if (*t == "fig2") return ProblemHandle::hom(fig2_target(), spec);
        if (auto f = tail("hom:file:")) return ProblemHandle::hom(load_digraph(*f), spec);
        if (auto k = tail("hom:tt")) return ProblemHandle::hom(transitive_tournament(count(*k)), spec);
        if (auto k = tail("hom:clique"))
            return ProblemHandle::hom(strong_clique(count(*k)), spec);
        throw Error("unknown homomorphism target '" + *t + "'");
    }
    if (auto f = tail("mpartition:file:")) return ProblemHandle::mpartition(load_matrix(*f), spec);
    if (auto t = tail("kl:")) {
        const auto comma = t->find(',');
        if (comma == std::string::npos) throw Error("kl problems look like kl:<k>,<l>");
        size_t used1 = 0, used2 = 0;
        int k = 0, l = 0;
        try {
            k = std::stoi(t->substr(0, comma), &used1);
            l = std::stoi(t->substr(comma + 1), &used2);
        } catch (const std::exception&) {
            throw Error("kl problems look like kl:<k>,<l>");
        }
        if (used1 != comma || used2 != t->size() - comma - 1)
            throw Error("kl problems look like kl:<k>,<l>");
        return ProblemHandle::kl(k, l);
    }
    if (auto t = tail("dichromatic:")) return ProblemHandle::dichromatic(count(*t));
    throw Error("unknown problem spec '" + spec + "'");
}

void print_levelled(const LevelledDigraph& ld) {
    std::cout << serialize(ld.digraph);
    std::cout << "# levels";
    for (int lv : ld.level) std::cout << " " << lv;
    std::cout << "\n";
}

void print_labelled(const LabelledMatrix& lm) {
    std::cout << serialize(lm.matrix);
    std::cout << "# parts";
    for (const std::string& lab : lm.labels) std::cout << " " << lab;
    std::cout << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"colourings, homomorphisms and matrix partitions of transitive digraphs"};
    app.require_subcommand(1);
    std::function<int()> run;

    std::string g_file, h_file, m_file, cert_file, problem, mode;
    std::string algorithm = "auto";
    std::vector<std::string> files;
    int k = 0, l = 0, nmax = 0;
    bool json = false, build_target = false, transform = false;

    auto* ct = app.add_subcommand("check-transitive", "test a digraph file for transitivity");
    ct->add_option("graph", g_file, "digraph file")->required();
    ct->callback([&] {
        run = [&] {
            const bool ok = is_transitive(load_digraph(g_file));
            std::cout << (ok ? "transitive" : "not transitive") << "\n";
            return ok ? 0 : 1;
        };
    });

    auto* cl = app.add_subcommand("closure", "print the transitive closure of a digraph");
    cl->add_option("graph", g_file, "digraph file")->required();
    cl->callback([&] {
        run = [&] {
            std::cout << serialize(transitive_closure(load_digraph(g_file)));
            return 0;
        };
    });

    auto* cd = app.add_subcommand("condense", "print skeleton and multiplicities");
    cd->add_option("graph", g_file, "digraph file")->required();
    cd->add_flag("--json", json, "emit JSON");
    cd->callback([&] {
        run = [&] {
            const Condensation c = condense(load_digraph(g_file));
            if (json) {
                std::ostringstream arcs;
                std::cout << "{\"n\": " << c.skeleton.n() << ", \"arcs\": [";
                bool first = true;
                for (auto [u, v] : c.skeleton.arcs()) {
                    std::cout << (first ? "" : ", ") << "[" << u << ", " << v << "]";
                    first = false;
                }
                std::cout << "], \"multiplicities\": [";
                for (int i = 0; i < c.skeleton.n(); ++i)
                    std::cout << (i ? ", " : "") << c.multiplicity[i];
                std::cout << "]}\n";
            } else {
                std::cout << serialize(c.skeleton);
                std::cout << "# multiplicities";
                for (int m : c.multiplicity) std::cout << " " << m;
                std::cout << "\n";
            }
            return 0;
        };
    });

    auto* hm = app.add_subcommand("hom", "decide homomorphism to a target digraph");
    hm->add_option("graph", g_file, "input digraph file")->required();
    hm->add_option("target", h_file, "target digraph file (defaults to the rigid 4-vertex target)");
    hm->add_option("--algorithm", algorithm, "auto|brute|symmetric|asymmetric|semicomplete|fig2")
        ->check(CLI::IsMember({"auto", "brute", "symmetric", "asymmetric", "semicomplete", "fig2"}));
    hm->add_flag("--json", json, "emit the certificate as JSON");
    hm->callback([&] {
        run = [&] {
            const Digraph g = load_digraph(g_file);
            std::optional<Digraph> h;
            if (!h_file.empty()) h = load_digraph(h_file);
            std::string alg = algorithm;
            if (alg == "auto") {
                if (!h || *h == fig2_target())
                    alg = is_transitive(g) ? "fig2" : "brute";
                else if (!is_transitive(g))
                    alg = "brute";
                else {
                    const TargetFlags f = classify_target(*h);
                    if (f.symmetric)
                        alg = "symmetric";
                    else if (f.asymmetric)
                        alg = "asymmetric";
                    else if (f.semicomplete && f.transitive)
                        alg = "semicomplete";
                    else
                        alg = "brute";
                }
            }
            const Digraph target = h ? *h : fig2_target();
            bool yes = false;
            std::optional<Certificate> cert;
            if (alg == "brute") {
                cert = find_hom(g, target);
                yes = cert.has_value();
            } else if (alg == "fig2") {
                if (h && !(*h == fig2_target()))
                    throw Error("the fig2 algorithm only solves the built-in 4-vertex target");
                cert = hom_fig2(g);
                yes = cert.has_value();
            } else if (alg == "symmetric") {
                yes = hom_symmetric_target(g, target);
            } else if (alg == "asymmetric") {
                yes = hom_asymmetric_target(g, target);
            } else {
                yes = hom_semicomplete_transitive(g, target);
            }
            if (json && yes && !cert) cert = find_hom(g, target);
            return verdict(yes, alg, cert, json);
        };
    });

    auto* mp = app.add_subcommand("mpartition", "decide a matrix partition");
    mp->add_option("graph", g_file, "input digraph file")->required();
    mp->add_option("matrix", m_file, "partition matrix file")->required();
    mp->add_option("--algorithm", algorithm, "auto|brute|ones-diag")
        ->check(CLI::IsMember({"auto", "brute", "ones-diag"}));
    mp->add_flag("--json", json, "emit the certificate as JSON");
    mp->callback([&] {
        run = [&] {
            const Digraph g = load_digraph(g_file);
            const PartitionMatrix m = load_matrix(m_file);
            std::string alg = algorithm;
            if (alg == "auto") {
                bool ones = is_transitive(g);
                for (int i = 0; i < m.size() && ones; ++i) ones = m.at(i, i) == Entry::One;
                alg = ones ? "ones-diag" : "brute";
            }
            bool yes = false;
            std::optional<Certificate> cert;
            if (alg == "brute") {
                cert = find_mpartition(g, m);
                yes = cert.has_value();
            } else {
                yes = mpartition_ones_diag(g, m);
            }
            if (json && yes && !cert) cert = find_mpartition(g, m);
            return verdict(yes, alg, cert, json);
        };
    });

    auto* kc = app.add_subcommand("klcolour", "partition into independent sets and strong cliques");
    kc->add_option("graph", g_file, "transitive digraph file")->required();
    kc->add_option("--k", k, "independent parts")->required();
    kc->add_option("--l", l, "strong clique parts")->required();
    kc->add_flag("--json", json, "emit the certificate as JSON");
    kc->callback([&] {
        run = [&] {
            const auto cert = kl_colour(load_digraph(g_file), k, l);
            return verdict(cert.has_value(), "", cert, json);
        };
    });

    auto* dc = app.add_subcommand("dichromatic", "dichromatic number of a transitive digraph");
    dc->add_option("graph", g_file, "transitive digraph file")->required();
    dc->add_flag("--json", json, "emit the witness partition as JSON");
    dc->callback([&] {
        run = [&] {
            const DichromaticResult r = dichromatic(load_digraph(g_file));
            std::cout << "dichromatic number " << r.k << "\n";
            if (json) std::cout << certificate_json(r.partition) << "\n";
            return 0;
        };
    });

    auto* ob = app.add_subcommand("obstructions", "catalogue minimal obstructions");
    ob->add_option("--problem", problem,
                   "hom:tt<k> | hom:digon | hom:clique<k> | hom:fig2 | hom:file:<path> | "
                   "mpartition:file:<path> | kl:<k>,<l> | dichromatic:<k>")
        ->required();
    ob->add_option("--nmax", nmax, "largest vertex count to scan")->required();
    ob->callback([&] {
        run = [&] {
            std::cout << catalogue_json(find_obstructions(parse_problem(problem), nmax)) << "\n";
            return 0;
        };
    });

    auto* cj = app.add_subcommand("conjecture",
                                  "probe the (k+1)(l+1) bound on minimal colouring obstructions");
    cj->add_option("--k", k, "independent parts")->required();
    cj->add_option("--l", l, "strong clique parts")->required();
    cj->add_option("--nmax", nmax, "largest vertex count to scan")->required();
    cj->add_flag("--json", json, "emit the report as JSON");
    cj->callback([&] {
        run = [&] {
            const KlBoundReport r = check_kl_bound(k, l, nmax);
            if (json) {
                std::cout << kl_report_json(r) << "\n";
            } else {
                std::cout << "bound " << r.bound << "\n";
                if (r.max_size == 0)
                    std::cout << "no obstructions up to " << r.n_max << " vertices\n";
                else
                    std::cout << "largest obstruction " << r.max_size << "\n";
                std::cout << "verdict: " << r.verdict() << "\n";
            }
            return r.counterexample ? 1 : 0;
        };
    });

    auto* rd = app.add_subcommand("reduce", "gadget constructions over bipartite targets");
    rd->add_option("construction", mode, "here|csp|loops")
        ->required()
        ->check(CLI::IsMember({"here", "csp", "loops"}));
    rd->add_flag("--build-target", build_target, "build the hardness target from a bipartite file");
    rd->add_flag("--transform", transform, "transform an instance (instance file, then target file)");
    rd->add_option("files", files, "bipartite files")->expected(1, 2)->required();
    rd->callback([&] {
        run = [&] {
            if (build_target == transform)
                throw Error("pick exactly one of --build-target / --transform");
            if (build_target) {
                if (files.size() != 1) throw Error("--build-target takes one bipartite file");
                const BipartiteInstance h = load_bipartite(files[0]);
                if (mode == "here")
                    print_levelled(build_here_target(h));
                else if (mode == "csp")
                    print_labelled(build_csp_matrix(h));
                else
                    print_labelled(build_loops_matrix(h));
            } else {
                if (files.size() != 2)
                    throw Error("--transform takes an instance file then a target file");
                const BipartiteInstance g = load_bipartite(files[0]);
                const BipartiteInstance h = load_bipartite(files[1]);
                if (mode == "here")
                    print_levelled(transform_here_instance(g, h));
                else
                    std::cout << serialize(transform_csp_instance(g, h));
            }
            return 0;
        };
    });

    auto* vf = app.add_subcommand("verify", "check a certificate against an instance");
    vf->add_option("kind", mode, "hom|mpartition")
        ->required()
        ->check(CLI::IsMember({"hom", "mpartition"}));
    vf->add_option("graph", g_file, "input digraph file")->required();
    vf->add_option("against", h_file, "target digraph or matrix file")->required();
    vf->add_option("certificate", cert_file, "certificate JSON file")->required();
    vf->callback([&] {
        run = [&] {
            const Digraph g = load_digraph(g_file);
            const Certificate cert = parse_certificate_json(read_file(cert_file));
            const bool ok = mode == "hom" ? verify(g, load_digraph(h_file), cert)
                                          : verify(g, load_matrix(h_file), cert);
            std::cout << (ok ? "valid" : "invalid") << "\n";
            return ok ? 0 : 1;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    try {
        return run();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
