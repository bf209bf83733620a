#include "ecc/cover.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ecc {

bool Clique::contains(VertexId v) const {
    return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

CliqueCover::CliqueCover(const Graph& g)
    : graph_(&g), covered_(g.edge_count(), 0) {}

bool CliqueCover::mark_covered(EdgeId e) {
    if (covered_[e]) return false;
    covered_[e] = 1;
    ++covered_count_;
    return true;
}

void CliqueCover::unmark_covered(EdgeId e) {
    covered_[e] = 0;
    --covered_count_;
}

std::size_t CliqueCover::start_clique(VertexId x, VertexId y) {
    cliques_.push_back(Clique{{x, y}});
    mark_covered(graph_->edge_index(x, y));
    return cliques_.size() - 1;
}

void CliqueCover::absorb(std::size_t l, VertexId x, VertexId y) {
    Clique& c = cliques_[l];
    for (VertexId z : c.vertices) {
        if (z == x || z == y) continue;
        mark_covered(graph_->edge_index(x, z));
        mark_covered(graph_->edge_index(y, z));
    }
    mark_covered(graph_->edge_index(x, y));
    if (!c.contains(x)) c.vertices.push_back(x);
    if (!c.contains(y)) c.vertices.push_back(y);
}

std::size_t CliqueCover::add_clique(std::vector<VertexId> vertices) {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            mark_covered(graph_->edge_index(vertices[i], vertices[j]));
    cliques_.push_back(Clique{std::move(vertices)});
    return cliques_.size() - 1;
}

CliqueCover::AbsorbLog CliqueCover::absorb_logged(std::size_t l, VertexId x, VertexId y) {
    AbsorbLog log;
    Clique& c = cliques_[l];
    auto mark = [&](EdgeId e) {
        if (mark_covered(e)) log.newly_covered.push_back(e);
    };
    for (VertexId z : c.vertices) {
        if (z == x || z == y) continue;
        mark(graph_->edge_index(x, z));
        mark(graph_->edge_index(y, z));
    }
    mark(graph_->edge_index(x, y));
    if (!c.contains(x)) {
        c.vertices.push_back(x);
        log.added_x = true;
    }
    if (!c.contains(y)) {
        c.vertices.push_back(y);
        log.added_y = true;
    }
    return log;
}

void CliqueCover::undo_absorb(std::size_t l, VertexId x, VertexId y, const AbsorbLog& log) {
    (void)x;
    (void)y;
    Clique& c = cliques_[l];
    if (log.added_y) c.vertices.pop_back();
    if (log.added_x) c.vertices.pop_back();
    for (EdgeId e : log.newly_covered) unmark_covered(e);
}

CliqueCover::CliqueLog CliqueCover::add_clique_logged(std::vector<VertexId> vertices) {
    CliqueLog log;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j) {
            EdgeId e = graph_->edge_index(vertices[i], vertices[j]);
            if (mark_covered(e)) log.newly_covered.push_back(e);
        }
    cliques_.push_back(Clique{std::move(vertices)});
    return log;
}

void CliqueCover::pop_clique(const CliqueLog& log) {
    cliques_.pop_back();
    for (EdgeId e : log.newly_covered) unmark_covered(e);
}

std::size_t CliqueCover::add_clique_unchecked(std::vector<VertexId> vertices) {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (auto e = graph_->try_edge_index(vertices[i], vertices[j])) mark_covered(*e);
    cliques_.push_back(Clique{std::move(vertices)});
    return cliques_.size() - 1;
}

CliqueCover cover_from_cliques(const Graph& g, const std::vector<std::vector<VertexId>>& cliques) {
    CliqueCover c(g);
    for (const auto& vs : cliques) {
        for (VertexId v : vs)
            if (v >= g.vertex_count())
                throw std::invalid_argument("clique names unknown vertex id " + std::to_string(v));
        c.add_clique_unchecked(vs);
    }
    return c;
}

bool is_cover(const Graph& g, const CliqueCover& c) {
    std::vector<char> hit(g.edge_count(), 0);
    for (const Clique& cl : c.cliques()) {
        const auto& vs = cl.vertices;
        for (std::size_t i = 0; i < vs.size(); ++i) {
            for (std::size_t j = i + 1; j < vs.size(); ++j) {
                auto e = g.try_edge_index(vs[i], vs[j]);
                if (!e)
                    throw std::invalid_argument(
                        "clique contains non-edge pair (" + std::to_string(g.label(vs[i])) + "," +
                        std::to_string(g.label(vs[j])) + ")");
                hit[*e] = 1;
            }
        }
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (!hit[e]) return false;
    return true;
}

std::size_t cover_weight(const CliqueCover& c) {
    std::size_t w = 0;
    for (const Clique& cl : c.cliques()) w += cl.size();
    return w;
}

std::size_t trivial_clique_count(const Graph& g, const CliqueCover& c) {
    std::size_t count = 0;
    for (const Clique& cl : c.cliques()) {
        if (cl.size() != 2) continue;
        if (common_neighbors(g, cl.vertices[0], cl.vertices[1]).empty()) ++count;
    }
    return count;
}

CandidateCliqueSets::CandidateCliqueSets(std::size_t n_vertices)
    : sets_(n_vertices), set_pos_(n_vertices) {}

void CandidateCliqueSets::push_clique() {
    holders_.emplace_back();
    holder_pos_.emplace_back();
}

void CandidateCliqueSets::pop_clique() {
    if (!holders_.back().empty())
        throw std::logic_error("pop_clique with a non-empty reverse index");
    holders_.pop_back();
    holder_pos_.pop_back();
}

bool CandidateCliqueSets::contains(VertexId z, std::size_t l) const {
    return set_pos_[z].count(l) > 0;
}

void CandidateCliqueSets::add(VertexId z, std::size_t l) {
    auto [it, fresh] = set_pos_[z].emplace(l, static_cast<std::uint32_t>(sets_[z].size()));
    if (!fresh) return;
    sets_[z].push_back(l);
    holder_pos_[l].emplace(z, static_cast<std::uint32_t>(holders_[l].size()));
    holders_[l].push_back(z);
    ++mass_;
    peak_mass_ = std::max(peak_mass_, mass_);
}

void CandidateCliqueSets::remove(VertexId z, std::size_t l) {
    if (!remove_if_present(z, l))
        throw std::logic_error("removing absent candidate clique index");
}

bool CandidateCliqueSets::remove_if_present(VertexId z, std::size_t l) {
    auto it = set_pos_[z].find(l);
    if (it == set_pos_[z].end()) return false;
    // Swap-remove from S_z.
    std::uint32_t pos = it->second;
    std::size_t moved = sets_[z].back();
    sets_[z][pos] = moved;
    sets_[z].pop_back();
    set_pos_[z][moved] = pos;
    set_pos_[z].erase(l);
    // Mirror in R_l.
    auto hit = holder_pos_[l].find(z);
    std::uint32_t hpos = hit->second;
    VertexId hmoved = holders_[l].back();
    holders_[l][hpos] = hmoved;
    holders_[l].pop_back();
    holder_pos_[l][hmoved] = hpos;
    holder_pos_[l].erase(z);
    --mass_;
    return true;
}

std::vector<std::size_t> CandidateCliqueSets::intersect(VertexId x, VertexId y) const {
    const auto& smaller = sets_[x].size() <= sets_[y].size() ? sets_[x] : sets_[y];
    VertexId probe = sets_[x].size() <= sets_[y].size() ? y : x;
    std::vector<std::size_t> result;
    for (std::size_t l : smaller)
        if (contains(probe, l)) result.push_back(l);
    std::sort(result.begin(), result.end());
    return result;
}

bool CandidateCliqueSets::consistent() const {
    std::size_t total = 0;
    for (VertexId x = 0; x < sets_.size(); ++x) {
        if (sets_[x].size() != set_pos_[x].size()) return false;
        total += sets_[x].size();
        for (std::size_t l : sets_[x]) {
            if (l >= holders_.size()) return false;
            if (!holder_pos_[l].count(x)) return false;
        }
    }
    std::size_t holder_total = 0;
    for (std::size_t l = 0; l < holders_.size(); ++l) {
        if (holders_[l].size() != holder_pos_[l].size()) return false;
        holder_total += holders_[l].size();
        for (VertexId z : holders_[l])
            if (!set_pos_[z].count(l)) return false;
    }
    return total == mass_ && holder_total == mass_;
}

CandidateCliqueSets candidate_sets_from_scratch(const Graph& g, const CliqueCover& c) {
    CandidateCliqueSets ccs(g.vertex_count());
    for (std::size_t l = 0; l < c.size(); ++l) {
        ccs.push_clique();
        const Clique& cl = c.clique(l);
        for (VertexId v : cl.vertices) ccs.add(v, l);
        for (VertexId x = 0; x < g.vertex_count(); ++x) {
            if (cl.contains(x)) continue;
            if (cl.size() > g.degree(x)) continue;
            bool contained = true;
            for (VertexId v : cl.vertices) {
                if (!g.has_edge(x, v)) {
                    contained = false;
                    break;
                }
            }
            if (contained) ccs.add(x, l);
        }
    }
    return ccs;
}

MinimalityReport validate_locally_minimal_characterizations(const Graph& g, const CliqueCover& c) {
    MinimalityReport report;

    // (a) vertex appearance budget.
    std::vector<std::size_t> appearances(g.vertex_count(), 0);
    for (const Clique& cl : c.cliques())
        for (VertexId v : cl.vertices) ++appearances[v];
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (appearances[v] > g.degree(v)) report.vertex_budget_violations.push_back(v);

    // (b) containment and (c) fully adjacent pairs, by pair scan.
    for (std::size_t i = 0; i < c.size(); ++i) {
        for (std::size_t j = 0; j < c.size(); ++j) {
            if (i == j) continue;
            const auto& ci = c.clique(i);
            const auto& cj = c.clique(j);
            if (ci.size() <= cj.size()) {
                bool contained = true;
                for (VertexId v : ci.vertices)
                    if (!cj.contains(v)) {
                        contained = false;
                        break;
                    }
                if (contained) report.containments.emplace_back(i, j);
            }
            if (i < j) {
                bool found_gap = false;
                for (VertexId x : ci.vertices) {
                    for (VertexId y : cj.vertices) {
                        if (x != y && !g.has_edge(x, y)) {
                            found_gap = true;
                            break;
                        }
                    }
                    if (found_gap) break;
                }
                if (!found_gap) report.fully_adjacent.emplace_back(i, j);
            }
        }
    }
    return report;
}

std::string MinimalityReport::to_string() const {
    std::ostringstream os;
    if (ok()) return "all characterizations hold";
    for (VertexId v : vertex_budget_violations)
        os << "vertex " << v << " appears more than deg(v) times\n";
    for (auto [i, j] : containments) os << "clique " << i << " contained in clique " << j << "\n";
    for (auto [i, j] : fully_adjacent)
        os << "cliques " << i << " and " << j << " have no non-adjacent cross pair\n";
    return os.str();
}

void write_cover(std::ostream& out, const Graph& g, const CliqueCover& c) {
    out << "# cliques=" << c.size() << " weight=" << cover_weight(c) << '\n';
    for (const Clique& cl : c.cliques()) {
        for (std::size_t i = 0; i < cl.vertices.size(); ++i)
            out << (i ? " " : "") << g.label(cl.vertices[i]);
        out << '\n';
    }
}

CliqueCover read_cover(std::istream& in, const Graph& g) {
    std::vector<std::vector<VertexId>> cliques;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        std::vector<VertexId> clique;
        Label label;
        while (ls >> label) {
            auto v = g.vertex_by_label(label);
            if (!v)
                throw std::runtime_error("cover line " + std::to_string(lineno) +
                                         ": unknown vertex label " + std::to_string(label));
            clique.push_back(*v);
        }
        if (!clique.empty()) cliques.push_back(std::move(clique));
    }
    return cover_from_cliques(g, cliques);
}

CliqueCover read_cover_file(const std::string& path, const Graph& g) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open cover file: " + path);
    return read_cover(in, g);
}

} // namespace ecc
