#include "tdcol/io.hpp"

#include <fstream>
#include <numeric>
#include <sstream>
#include <vector>

#include "json.hpp"
#include "tdcol/errors.hpp"

namespace tdcol {

namespace {

// Content lines with their 1-based positions; blanks and '#' lines dropped.
struct Line {
    int number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::istream& in) {
    std::vector<Line> out;
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        std::istringstream ls(raw);
        std::vector<std::string> tokens;
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
        if (tokens.empty() || tokens[0][0] == '#') continue;
        out.push_back({number, std::move(tokens)});
    }
    return out;
}

int parse_int(const std::string& tok, int line) {
    size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(tok, &used);
    } catch (const std::exception&) {
        throw ParseError(line, "expected an integer, got '" + tok + "'");
    }
    if (used != tok.size()) throw ParseError(line, "expected an integer, got '" + tok + "'");
    return value;
}

// "w3" -> (false, 3); "b0" -> (true, 0)
std::pair<bool, int> parse_side_vertex(const std::string& tok, int line) {
    if (tok.size() < 2 || (tok[0] != 'w' && tok[0] != 'b'))
        throw ParseError(line, "expected w<i> or b<i>, got '" + tok + "'");
    return {tok[0] == 'b', parse_int(tok.substr(1), line)};
}

void expect_header(const std::vector<Line>& lines, const char* word) {
    if (lines.empty()) throw ParseError(1, std::string("missing '") + word + "' header");
    if (lines[0].tokens[0] != word)
        throw ParseError(lines[0].number, std::string("expected '") + word + "' header");
}

}  // namespace

Digraph parse_digraph(std::istream& in) {
    const auto lines = tokenize(in);
    expect_header(lines, "digraph");
    if (lines[0].tokens.size() != 2)
        throw ParseError(lines[0].number, "header must be 'digraph <n>'");
    Digraph d(parse_int(lines[0].tokens[1], lines[0].number));
    for (size_t i = 1; i < lines.size(); ++i) {
        const auto& ln = lines[i];
        if (ln.tokens.size() != 2) throw ParseError(ln.number, "arc lines are 'u v'");
        const int u = parse_int(ln.tokens[0], ln.number);
        const int v = parse_int(ln.tokens[1], ln.number);
        if (u >= 0 && u < d.n() && d.has_arc(u, v))
            throw ParseError(ln.number, "duplicate arc");
        d.add_arc(u, v);
    }
    return d;
}

std::string serialize(const Digraph& d) {
    std::ostringstream os;
    os << "digraph " << d.n() << "\n";
    for (auto [u, v] : d.arcs()) os << u << " " << v << "\n";
    return os.str();
}

PartitionMatrix parse_matrix(std::istream& in) {
    const auto lines = tokenize(in);
    expect_header(lines, "matrix");
    if (lines[0].tokens.size() != 2)
        throw ParseError(lines[0].number, "header must be 'matrix <m>'");
    const int m = parse_int(lines[0].tokens[1], lines[0].number);
    if (m < 1) throw ParseError(lines[0].number, "matrix needs at least one part");
    if (static_cast<int>(lines.size()) != m + 1)
        throw ParseError(lines.empty() ? 1 : lines.back().number,
                         "expected exactly " + std::to_string(m) + " rows");
    PartitionMatrix out(m);
    for (int i = 0; i < m; ++i) {
        const auto& ln = lines[i + 1];
        if (static_cast<int>(ln.tokens.size()) != m)
            throw ParseError(ln.number, "expected " + std::to_string(m) + " entries");
        for (int j = 0; j < m; ++j) {
            const std::string& tok = ln.tokens[j];
            if (tok == "0")
                out.set(i, j, Entry::Zero);
            else if (tok == "1")
                out.set(i, j, Entry::One);
            else if (tok == "*")
                out.set(i, j, Entry::Star);
            else
                throw ParseError(ln.number, "entries are 0, 1 or *, got '" + tok + "'");
        }
    }
    return out;
}

std::string serialize(const PartitionMatrix& m) {
    std::ostringstream os;
    os << "matrix " << m.size() << "\n";
    for (int i = 0; i < m.size(); ++i) {
        for (int j = 0; j < m.size(); ++j) {
            if (j) os << " ";
            switch (m.at(i, j)) {
                case Entry::Zero: os << "0"; break;
                case Entry::One: os << "1"; break;
                case Entry::Star: os << "*"; break;
            }
        }
        os << "\n";
    }
    return os.str();
}

BipartiteInstance parse_bipartite(std::istream& in) {
    const auto lines = tokenize(in);
    expect_header(lines, "bipartite");
    if (lines[0].tokens.size() != 3)
        throw ParseError(lines[0].number, "header must be 'bipartite <whites> <blacks>'");
    BipartiteInstance b;
    b.whites = parse_int(lines[0].tokens[1], lines[0].number);
    b.blacks = parse_int(lines[0].tokens[2], lines[0].number);
    if (b.whites < 0 || b.blacks < 0) throw ParseError(lines[0].number, "negative side size");

    auto check = [&](bool black, int v, int line) {
        const int limit = black ? b.blacks : b.whites;
        if (v < 0 || v >= limit)
            throw ParseError(line, std::string(black ? "black" : "white") + " vertex " +
                                       std::to_string(v) + " out of range");
    };
    auto ensure_embeds = [&] {
        if (b.embed_white.empty()) b.embed_white.assign(b.whites, -1);
        if (b.embed_black.empty()) b.embed_black.assign(b.blacks, -1);
    };
    auto ensure_lists = [&](bool black) {
        auto& lists = black ? b.black_lists : b.white_lists;
        if (!lists.empty()) return;
        const int count = black ? b.blacks : b.whites;
        const int range = black ? b.blacks : b.whites;
        std::vector<int> full(range);
        std::iota(full.begin(), full.end(), 0);
        lists.assign(count, full);
    };

    for (size_t i = 1; i < lines.size(); ++i) {
        const auto& ln = lines[i];
        const auto& t = ln.tokens;
        if (t[0] == "embed") {
            if (t.size() != 3) throw ParseError(ln.number, "embed lines are 'embed <g> <h>'");
            auto [gb, gv] = parse_side_vertex(t[1], ln.number);
            auto [hb, hv] = parse_side_vertex(t[2], ln.number);
            if (gb != hb) throw ParseError(ln.number, "embed must stay on one side");
            check(gb, gv, ln.number);
            if (hv < 0) throw ParseError(ln.number, "embed target out of range");
            ensure_embeds();
            (gb ? b.embed_black : b.embed_white)[gv] = hv;
        } else if (t[0] == "list") {
            if (t.size() < 2) throw ParseError(ln.number, "list lines are 'list <g> <h>...'");
            auto [gb, gv] = parse_side_vertex(t[1], ln.number);
            check(gb, gv, ln.number);
            std::vector<int> allowed;
            for (size_t j = 2; j < t.size(); ++j) {
                auto [hb, hv] = parse_side_vertex(t[j], ln.number);
                if (hb != gb) throw ParseError(ln.number, "lists must stay on one side");
                if (hv < 0) throw ParseError(ln.number, "list entry out of range");
                allowed.push_back(hv);
            }
            ensure_lists(gb);
            (gb ? b.black_lists : b.white_lists)[gv] = std::move(allowed);
        } else {
            if (t.size() != 2) throw ParseError(ln.number, "edge lines are 'w<i> b<j>'");
            auto [fb, fv] = parse_side_vertex(t[0], ln.number);
            auto [sb, sv] = parse_side_vertex(t[1], ln.number);
            if (fb || !sb) throw ParseError(ln.number, "edges run white to black");
            check(false, fv, ln.number);
            check(true, sv, ln.number);
            if (b.has_edge(fv, sv)) throw ParseError(ln.number, "duplicate edge");
            b.edges.emplace_back(fv, sv);
        }
    }
    return b;
}

std::string serialize(const BipartiteInstance& b) {
    std::ostringstream os;
    os << "bipartite " << b.whites << " " << b.blacks << "\n";
    for (auto [w, bk] : b.edges) os << "w" << w << " b" << bk << "\n";
    for (int w = 0; w < static_cast<int>(b.embed_white.size()); ++w)
        if (b.embed_white[w] != -1) os << "embed w" << w << " w" << b.embed_white[w] << "\n";
    for (int bk = 0; bk < static_cast<int>(b.embed_black.size()); ++bk)
        if (b.embed_black[bk] != -1) os << "embed b" << bk << " b" << b.embed_black[bk] << "\n";
    for (int w = 0; w < static_cast<int>(b.white_lists.size()); ++w) {
        os << "list w" << w;
        for (int i : b.white_lists[w]) os << " w" << i;
        os << "\n";
    }
    for (int bk = 0; bk < static_cast<int>(b.black_lists.size()); ++bk) {
        os << "list b" << bk;
        for (int j : b.black_lists[bk]) os << " b" << j;
        os << "\n";
    }
    return os.str();
}

Digraph parse_digraph(const std::string& text) {
    std::istringstream in(text);
    return parse_digraph(in);
}

PartitionMatrix parse_matrix(const std::string& text) {
    std::istringstream in(text);
    return parse_matrix(in);
}

BipartiteInstance parse_bipartite(const std::string& text) {
    std::istringstream in(text);
    return parse_bipartite(in);
}

namespace {

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    return in;
}

}  // namespace

Digraph load_digraph(const std::string& path) {
    auto in = open_or_throw(path);
    return parse_digraph(in);
}

PartitionMatrix load_matrix(const std::string& path) {
    auto in = open_or_throw(path);
    return parse_matrix(in);
}

BipartiteInstance load_bipartite(const std::string& path) {
    auto in = open_or_throw(path);
    return parse_bipartite(in);
}

namespace {

nlohmann::json certificate_node(const Certificate& c) {
    nlohmann::json assignment = nlohmann::json::object();
    for (size_t v = 0; v < c.assignment.size(); ++v)
        assignment[std::to_string(v)] = c.assignment[v];
    return {{"kind", c.kind == CertKind::Homomorphism ? "homomorphism" : "partition"},
            {"assignment", assignment}};
}

}  // namespace

std::string certificate_json(const Certificate& c) { return certificate_node(c).dump(2); }

std::string catalogue_json(const ObstructionCatalogue& c) {
    nlohmann::json items = nlohmann::json::array();
    for (const ObstructionItem& item : c.items) {
        nlohmann::json arcs = nlohmann::json::array();
        for (auto [u, v] : item.graph.arcs()) arcs.push_back({u, v});
        nlohmann::json witnesses = nlohmann::json::array();
        for (const Certificate& w : item.witnesses) witnesses.push_back(certificate_node(w));
        items.push_back({{"n", item.graph.n()}, {"arcs", arcs}, {"witnesses", witnesses}});
    }
    return nlohmann::json{{"problem", c.problem}, {"n_max", c.n_max}, {"items", items}}.dump(2);
}

Certificate parse_certificate_json(const std::string& text) {
    try {
        const nlohmann::json j = nlohmann::json::parse(text);
        Certificate c;
        const std::string kind = j.at("kind").get<std::string>();
        if (kind == "homomorphism")
            c.kind = CertKind::Homomorphism;
        else if (kind == "partition")
            c.kind = CertKind::Partition;
        else
            throw Error("unknown certificate kind '" + kind + "'");
        const auto& assignment = j.at("assignment");
        c.assignment.assign(assignment.size(), -1);
        for (const auto& [key, value] : assignment.items()) {
            const int v = std::stoi(key);
            if (v < 0 || v >= static_cast<int>(c.assignment.size()))
                throw Error("certificate assignment keys must cover 0..n-1");
            c.assignment[v] = value.get<int>();
        }
        return c;
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        throw Error(std::string("bad certificate JSON: ") + e.what());
    }
}

std::string kl_report_json(const KlBoundReport& r) {
    return nlohmann::json{{"k", r.k},
                          {"l", r.l},
                          {"n_max", r.n_max},
                          {"bound", r.bound},
                          {"max_size", r.max_size},
                          {"sizes", r.sizes},
                          {"verdict", r.verdict()}}
        .dump(2);
}

}  // namespace tdcol
