#include "tdcol/obstructions.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "tdcol/canonical.hpp"
#include "tdcol/enumerate.hpp"
#include "tdcol/errors.hpp"

namespace tdcol {

namespace {

std::string default_hom_name(const Digraph& h) {
    std::ostringstream os;
    os << "hom(n=" << h.n() << ";";
    bool first = true;
    for (auto [u, v] : h.arcs()) {
        if (!first) os << ",";
        os << u << ">" << v;
        first = false;
    }
    os << ")";
    return os.str();
}

std::string default_mpartition_name(const PartitionMatrix& m) {
    std::ostringstream os;
    os << "mpartition(";
    for (int i = 0; i < m.size(); ++i) {
        if (i > 0) os << "/";
        for (int j = 0; j < m.size(); ++j) {
            switch (m.at(i, j)) {
                case Entry::Zero: os << '0'; break;
                case Entry::One: os << '1'; break;
                case Entry::Star: os << '*'; break;
            }
        }
    }
    os << ")";
    return os.str();
}

}  // namespace

ProblemHandle ProblemHandle::hom(Digraph target, std::string name) {
    ProblemHandle p;
    p.kind_ = ProblemKind::Hom;
    p.name_ = name.empty() ? default_hom_name(target) : std::move(name);
    p.target_ = std::move(target);
    return p;
}

ProblemHandle ProblemHandle::mpartition(PartitionMatrix m, std::string name) {
    ProblemHandle p;
    p.kind_ = ProblemKind::MPartition;
    p.name_ = name.empty() ? default_mpartition_name(m) : std::move(name);
    p.matrix_ = std::move(m);
    return p;
}

ProblemHandle ProblemHandle::kl(int k, int l) {
    if (k < 0 || l < 0) throw RangeError("kl colouring needs k, l >= 0");
    ProblemHandle p;
    p.kind_ = ProblemKind::KlColour;
    p.name_ = "kl(" + std::to_string(k) + "," + std::to_string(l) + ")";
    p.k_ = k;
    p.l_ = l;
    return p;
}

ProblemHandle ProblemHandle::dichromatic(int k) {
    if (k < 0) throw RangeError("dichromatic threshold needs k >= 0");
    ProblemHandle p;
    p.kind_ = ProblemKind::Dichromatic;
    p.name_ = "dichromatic(" + std::to_string(k) + ")";
    p.k_ = k;
    return p;
}

const Digraph& ProblemHandle::target() const {
    if (kind_ != ProblemKind::Hom)
        throw PreconditionViolatedError("problem has no homomorphism target");
    return target_;
}

const PartitionMatrix& ProblemHandle::matrix() const {
    if (kind_ != ProblemKind::MPartition)
        throw PreconditionViolatedError("problem has no partition matrix");
    return matrix_;
}

int ProblemHandle::k() const {
    if (kind_ != ProblemKind::KlColour && kind_ != ProblemKind::Dichromatic)
        throw PreconditionViolatedError("problem has no parameter k");
    return k_;
}

int ProblemHandle::l() const {
    if (kind_ != ProblemKind::KlColour)
        throw PreconditionViolatedError("problem has no parameter l");
    return l_;
}

std::optional<Certificate> ProblemHandle::solve(const Digraph& g) const {
    switch (kind_) {
        case ProblemKind::Hom:
            return find_hom(g, target_);
        case ProblemKind::MPartition:
            return find_mpartition(g, matrix_);
        case ProblemKind::KlColour:
            return find_mpartition(g, kl_matrix(k_, l_));
        case ProblemKind::Dichromatic:
            return find_acyclic_partition(g, k_);
    }
    return std::nullopt;  // unreachable
}

bool is_minimal_obstruction(const Digraph& g, const ProblemHandle& p) {
    if (!is_transitive(g))
        throw PreconditionViolatedError("obstruction test expects a transitive digraph");
    if (p.holds(g)) return false;
    for (int v = 0; v < g.n(); ++v)
        if (!p.holds(delete_vertex(g, v))) return false;
    return true;
}

ObstructionCatalogue find_obstructions(const ProblemHandle& p, int n_max) {
    if (n_max < 1) throw RangeError("obstruction scan needs n_max >= 1");
    if (n_max > kMaxEnumerationVertices)
        throw TooLargeError("obstruction scan capped at " +
                            std::to_string(kMaxEnumerationVertices) + " vertices");
    ObstructionCatalogue cat;
    cat.problem = p.name();
    cat.n_max = n_max;
    for (int n = 1; n <= n_max; ++n) {
        std::vector<std::pair<std::uint64_t, ObstructionItem>> found;
        for (const Digraph& g : enumerate_transitive(n)) {
            if (p.holds(g)) continue;
            ObstructionItem item{g, {}};
            item.witnesses.reserve(n);
            bool minimal = true;
            for (int v = 0; v < n && minimal; ++v) {
                auto cert = p.solve(delete_vertex(g, v));
                if (cert)
                    item.witnesses.push_back(std::move(*cert));
                else
                    minimal = false;
            }
            if (minimal)
                found.emplace_back(canonical_form(g).bits, std::move(item));
        }
        std::sort(found.begin(), found.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (auto& [key, item] : found) cat.items.push_back(std::move(item));
    }
    return cat;
}

KlBoundReport check_kl_bound(int k, int l, int n_max) {
    KlBoundReport report;
    report.k = k;
    report.l = l;
    report.n_max = n_max;
    report.bound = (k + 1) * (l + 1);
    const ObstructionCatalogue cat = find_obstructions(ProblemHandle::kl(k, l), n_max);
    for (const ObstructionItem& item : cat.items) {
        report.sizes.push_back(item.graph.n());
        report.max_size = std::max(report.max_size, item.graph.n());
    }
    report.counterexample = report.max_size > report.bound;
    return report;
}

}  // namespace tdcol
