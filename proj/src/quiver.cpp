#include "quiveralg/quiver.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace quiveralg {

namespace {

void check_label(const std::string& label) {
    if (label.empty()) throw InputError("empty label");
    for (char c : label) {
        if (c == '.' || c == '[' || c == ']' || c == ',' || c == ':' || c == '*' || c == '#' ||
            std::isspace(static_cast<unsigned char>(c))) {
            throw InputError("label '" + label + "' contains a reserved character");
        }
    }
}

std::string signed_label(const char* prefix, int i) {
    return i < 0 ? std::string(prefix) + "m" + std::to_string(-i)
                 : std::string(prefix) + std::to_string(i);
}

}  // namespace

int Quiver::add_vertex(const std::string& label) {
    check_label(label);
    if (vertex_index_.count(label)) throw InputError("duplicate vertex '" + label + "'");
    int id = vertex_count();
    vertices_.push_back(label);
    vertex_index_.emplace(label, id);
    out_.emplace_back();
    in_.emplace_back();
    return id;
}

int Quiver::add_arrow(const std::string& label, int source, int target) {
    check_label(label);
    if (source < 0 || source >= vertex_count() || target < 0 || target >= vertex_count()) {
        throw InputError("arrow '" + label + "' has an undeclared endpoint");
    }
    if (arrow_index_.count(label)) throw InputError("duplicate arrow '" + label + "'");
    int id = arrow_count();
    arrows_.push_back(Arrow{label, source, target});
    arrow_index_.emplace(label, id);
    out_[source].push_back(id);
    in_[target].push_back(id);
    return id;
}

int Quiver::add_arrow(const std::string& label, const std::string& source,
                      const std::string& target) {
    return add_arrow(label, vertex(source), vertex(target));
}

std::optional<int> Quiver::find_vertex(const std::string& label) const {
    auto it = vertex_index_.find(label);
    if (it == vertex_index_.end()) return std::nullopt;
    return it->second;
}

std::optional<int> Quiver::find_arrow(const std::string& label) const {
    auto it = arrow_index_.find(label);
    if (it == arrow_index_.end()) return std::nullopt;
    return it->second;
}

int Quiver::vertex(const std::string& label) const {
    auto v = find_vertex(label);
    if (!v) throw InputError("unknown vertex '" + label + "'");
    return *v;
}

int Quiver::arrow_index(const std::string& label) const {
    auto a = find_arrow(label);
    if (!a) throw InputError("unknown arrow '" + label + "'");
    return *a;
}

void validate_path(const Quiver& q, const Path& p) {
    auto bad = [] { throw InputError("path does not belong to this quiver"); };
    if (p.source < 0 || p.source >= q.vertex_count() || p.target < 0 ||
        p.target >= q.vertex_count()) {
        bad();
    }
    if (p.arrows.empty()) {
        if (p.source != p.target) bad();
        return;
    }
    int at = p.source;
    for (int a : p.arrows) {
        if (a < 0 || a >= q.arrow_count() || q.arrow(a).source != at) bad();
        at = q.arrow(a).target;
    }
    if (at != p.target) bad();
}

std::optional<Path> compose_paths(const Quiver& q, const Path& p, const Path& r) {
    validate_path(q, p);
    validate_path(q, r);
    if (p.target != r.source) return std::nullopt;
    return concat(p, r);
}

Path concat(const Path& p, const Path& r) {
    Path out{p.source, r.target, p.arrows};
    out.arrows.insert(out.arrows.end(), r.arrows.begin(), r.arrows.end());
    return out;
}

Path subpath(const Quiver& q, const Path& p, std::size_t from, std::size_t to) {
    if (from == to) {
        int v = from == 0 ? p.source : q.arrow(p.arrows[from - 1]).target;
        return Path::vertex(v);
    }
    Path out;
    out.arrows.assign(p.arrows.begin() + static_cast<long>(from),
                      p.arrows.begin() + static_cast<long>(to));
    out.source = q.arrow(out.arrows.front()).source;
    out.target = q.arrow(out.arrows.back()).target;
    return out;
}

std::set<Path> subpaths(const Quiver& q, const Path& p) {
    std::set<Path> out;
    for (std::size_t i = 0; i <= p.length(); ++i) {
        for (std::size_t j = i; j <= p.length(); ++j) out.insert(subpath(q, p, i, j));
    }
    return out;
}

std::vector<int> path_vertices(const Quiver& q, const Path& p) {
    std::vector<int> out{p.source};
    for (int a : p.arrows) out.push_back(q.arrow(a).target);
    return out;
}

std::string path_to_string(const Quiver& q, const Path& p) {
    if (p.is_vertex()) return "[" + q.vertex_label(p.source) + "]";
    std::string s = "[";
    for (std::size_t i = 0; i < p.arrows.size(); ++i) {
        if (i) s += '.';
        s += q.arrow(p.arrows[i]).label;
    }
    return s + "]";
}

Path parse_path(const Quiver& q, const std::string& text) {
    if (text.find('.') == std::string::npos) {
        if (auto v = q.find_vertex(text)) return Path::vertex(*v);
    }
    Path p;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, '.')) {
        auto a = q.find_arrow(part);
        if (!a) throw InputError("unknown vertex or arrow '" + part + "' in path '" + text + "'");
        p.arrows.push_back(*a);
    }
    if (p.arrows.empty()) throw InputError("empty path");
    p.source = q.arrow(p.arrows.front()).source;
    p.target = q.arrow(p.arrows.back()).target;
    for (std::size_t i = 1; i < p.arrows.size(); ++i) {
        if (q.arrow(p.arrows[i - 1]).target != q.arrow(p.arrows[i]).source) {
            throw InputError("arrows in '" + text + "' are not composable");
        }
    }
    return p;
}

bool is_acyclic(const Quiver& q) {
    // Kahn: repeatedly strip sources.
    std::vector<int> indeg(q.vertex_count(), 0);
    for (const auto& a : q.arrows()) ++indeg[a.target];
    std::vector<int> stack;
    for (int v = 0; v < q.vertex_count(); ++v) {
        if (indeg[v] == 0) stack.push_back(v);
    }
    int seen = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++seen;
        for (int a : q.out_arrows(v)) {
            if (--indeg[q.arrow(a).target] == 0) stack.push_back(q.arrow(a).target);
        }
    }
    return seen == q.vertex_count();
}

std::size_t longest_path_length(const Quiver& q) {
    if (!is_acyclic(q)) throw InputError("longest path requested on a cyclic quiver");
    std::vector<int> memo(q.vertex_count(), -1);
    std::function<int(int)> longest_from = [&](int v) {
        if (memo[v] >= 0) return memo[v];
        int best = 0;
        for (int a : q.out_arrows(v)) best = std::max(best, 1 + longest_from(q.arrow(a).target));
        return memo[v] = best;
    };
    int best = 0;
    for (int v = 0; v < q.vertex_count(); ++v) best = std::max(best, longest_from(v));
    return static_cast<std::size_t>(best);
}

PathList enumerate_paths(const Quiver& q, std::size_t max_len) {
    PathList out;
    std::vector<Path> frontier;
    for (int v = 0; v < q.vertex_count(); ++v) frontier.push_back(Path::vertex(v));
    out.paths = frontier;
    for (std::size_t len = 1; len <= max_len && !frontier.empty(); ++len) {
        std::vector<Path> next;
        for (const auto& p : frontier) {
            for (int a : q.out_arrows(p.target)) {
                Path e{p.source, q.arrow(a).target, p.arrows};
                e.arrows.push_back(a);
                next.push_back(std::move(e));
            }
        }
        out.paths.insert(out.paths.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    std::sort(out.paths.begin(), out.paths.end());
    out.exhaustive = is_acyclic(q) && max_len >= longest_path_length(q);
    return out;
}

std::vector<Path> all_paths(const Quiver& q) {
    if (!is_acyclic(q)) throw InputError("a cyclic quiver has infinitely many paths");
    return enumerate_paths(q, longest_path_length(q)).paths;
}

std::vector<Path> paths_between(const Quiver& q, int from, int to, std::size_t max_len) {
    std::vector<Path> out;
    for (auto& p : enumerate_paths(q, max_len).paths) {
        if (p.source == from && p.target == to) out.push_back(std::move(p));
    }
    return out;
}

std::vector<Path> paths_starting_at(const Quiver& q, int v, std::size_t max_len) {
    std::vector<Path> out;
    for (auto& p : enumerate_paths(q, max_len).paths) {
        if (p.source == v) out.push_back(std::move(p));
    }
    return out;
}

std::vector<Path> paths_ending_at(const Quiver& q, int v, std::size_t max_len) {
    std::vector<Path> out;
    for (auto& p : enumerate_paths(q, max_len).paths) {
        if (p.target == v) out.push_back(std::move(p));
    }
    return out;
}

std::optional<std::vector<int>> find_simple_cycle(const Quiver& q) {
    // DFS with an explicit arrow stack; a back edge closes a simple cycle.
    std::vector<int> color(q.vertex_count(), 0);
    std::vector<int> arrow_stack;
    std::vector<int> vertex_stack;
    std::optional<std::vector<int>> found;
    std::function<bool(int)> dfs = [&](int v) {
        color[v] = 1;
        vertex_stack.push_back(v);
        for (int a : q.out_arrows(v)) {
            int w = q.arrow(a).target;
            if (color[w] == 1) {
                auto pos = std::find(vertex_stack.begin(), vertex_stack.end(), w) -
                           vertex_stack.begin();
                std::vector<int> cycle(arrow_stack.begin() + pos, arrow_stack.end());
                cycle.push_back(a);
                found = cycle;
                return true;
            }
            if (color[w] == 0) {
                arrow_stack.push_back(a);
                if (dfs(w)) return true;
                arrow_stack.pop_back();
            }
        }
        color[v] = 2;
        vertex_stack.pop_back();
        return false;
    };
    for (int v = 0; v < q.vertex_count() && !found; ++v) {
        if (color[v] == 0) dfs(v);
    }
    return found;
}

// ---------------------------------------------------------------------------
// Families

QuiverFamily::QuiverFamily(FamilyKind kind, int parameter) : kind_(kind), parameter_(parameter) {
    if (kind == FamilyKind::Cycle && parameter < 1) throw InputError("cycle length must be >= 1");
}

QuiverFamily QuiverFamily::parse(const std::string& spec) {
    if (spec == "loop") return QuiverFamily(FamilyKind::Loop);
    if (spec == "line2") return QuiverFamily(FamilyKind::InfiniteLineTwoSided);
    if (spec == "line1") return QuiverFamily(FamilyKind::InfiniteLineLeftBounded);
    if (spec == "multiarrow") return QuiverFamily(FamilyKind::MultiArrowPair);
    if (spec == "star51") return QuiverFamily(FamilyKind::StarExample51);
    if (spec == "star56") return QuiverFamily(FamilyKind::StarExample56);
    if (spec.rfind("cycle:", 0) == 0) {
        const std::string n = spec.substr(6);
        if (n.empty() || !std::all_of(n.begin(), n.end(), ::isdigit) || n.size() > 6) {
            throw InputError("bad cycle length in '" + spec + "'");
        }
        return QuiverFamily(FamilyKind::Cycle, std::stoi(n));
    }
    throw InputError("unknown quiver family '" + spec + "'");
}

std::string QuiverFamily::name() const {
    switch (kind_) {
        case FamilyKind::InfiniteLineTwoSided: return "line2";
        case FamilyKind::InfiniteLineLeftBounded: return "line1";
        case FamilyKind::Loop: return "loop";
        case FamilyKind::Cycle: return "cycle:" + std::to_string(parameter_);
        case FamilyKind::MultiArrowPair: return "multiarrow";
        case FamilyKind::StarExample51: return "star51";
        case FamilyKind::StarExample56: return "star56";
    }
    return {};
}

FamilyFacts QuiverFamily::facts() const {
    FamilyFacts f;
    switch (kind_) {
        case FamilyKind::InfiniteLineTwoSided:
            // Every vertex starts and ends infinitely many paths.
            f.acyclic = true;
            f.finitely_many_paths_start = false;
            f.finitely_many_paths_end = false;
            break;
        case FamilyKind::InfiniteLineLeftBounded:
            f.acyclic = true;
            f.finitely_many_paths_start = false;
            break;
        case FamilyKind::Loop:
        case FamilyKind::Cycle:
            f.finite = true;
            f.finitely_many_paths_between = false;
            f.finitely_many_paths_start = false;
            f.finitely_many_paths_end = false;
            break;
        case FamilyKind::MultiArrowPair:
            f.acyclic = true;
            f.finitely_many_arrows_between = false;
            f.finitely_many_paths_between = false;
            f.finitely_many_paths_start = false;
            f.finitely_many_paths_end = false;
            break;
        case FamilyKind::StarExample51:
            // n arrows a -> b_n and n arrows b_n -> c for every n.
            f.acyclic = true;
            f.finitely_many_paths_between = false;
            f.finitely_many_paths_start = false;
            f.finitely_many_paths_end = false;
            break;
        case FamilyKind::StarExample56:
            f.acyclic = true;
            f.finitely_many_paths_between = false;
            f.finitely_many_paths_start = false;
            f.finitely_many_paths_end = false;
            break;
    }
    return f;
}

Quiver QuiverFamily::truncate(int level) const {
    if (level < 0) throw InputError("negative truncation level");
    Quiver q;
    switch (kind_) {
        case FamilyKind::InfiniteLineTwoSided:
            for (int i = -level; i <= level; ++i) q.add_vertex(signed_label("v", i));
            for (int i = -level; i < level; ++i) {
                q.add_arrow(signed_label("a", i), i + level, i + level + 1);
            }
            break;
        case FamilyKind::InfiniteLineLeftBounded:
            for (int i = 0; i <= level; ++i) q.add_vertex("v" + std::to_string(i));
            for (int i = 0; i < level; ++i) q.add_arrow("a" + std::to_string(i), i, i + 1);
            break;
        case FamilyKind::Loop:
            q.add_vertex("v");
            q.add_arrow("x", 0, 0);
            break;
        case FamilyKind::Cycle:
            for (int i = 0; i < parameter_; ++i) q.add_vertex("v" + std::to_string(i));
            for (int i = 0; i < parameter_; ++i) {
                q.add_arrow("x" + std::to_string(i), i, (i + 1) % parameter_);
            }
            break;
        case FamilyKind::MultiArrowPair:
            q.add_vertex("a");
            q.add_vertex("b");
            for (int n = 0; n <= level; ++n) q.add_arrow("x" + std::to_string(n), 0, 1);
            break;
        case FamilyKind::StarExample51: {
            int a = q.add_vertex("a");
            int c = q.add_vertex("c");
            for (int n = 1; n <= level; ++n) {
                int b = q.add_vertex("b" + std::to_string(n));
                for (int k = 1; k <= n; ++k) {
                    q.add_arrow("x" + std::to_string(n) + "_" + std::to_string(k), a, b);
                }
                for (int k = 1; k <= n; ++k) {
                    q.add_arrow("y" + std::to_string(n) + "_" + std::to_string(k), b, c);
                }
            }
            break;
        }
        case FamilyKind::StarExample56: {
            int a = q.add_vertex("a");
            int c = q.add_vertex("c");
            for (int n = 1; n <= level; ++n) {
                int b = q.add_vertex("b" + std::to_string(n));
                q.add_arrow("x" + std::to_string(n), a, b);
                q.add_arrow("y" + std::to_string(n), b, c);
            }
            break;
        }
    }
    return q;
}

// ---------------------------------------------------------------------------
// Structural predicates

Verdict check_recovery_condition(const Quiver& q) {
    if (is_acyclic(q)) return {true, "no oriented cycles; finitely many arrows (finite quiver)"};
    return {false, "violates: has an oriented cycle"};
}

Verdict check_recovery_condition(const QuiverFamily& f) {
    auto facts = f.facts();
    if (!facts.acyclic) return {false, "violates: " + f.name() + " has an oriented cycle"};
    if (!facts.finitely_many_arrows_between) {
        return {false, "violates: " + f.name() + " has infinitely many arrows between two vertices"};
    }
    return {true, f.name() + ": no oriented cycles and finitely many arrows between vertices"};
}

Verdict check_semiperfect_condition(const Quiver& q) {
    if (is_acyclic(q)) return {true, "finite acyclic: finitely many paths start and end at each vertex"};
    return {false, "violates: a cycle gives infinitely many paths starting at one of its vertices"};
}

Verdict check_semiperfect_condition(const QuiverFamily& f) {
    auto facts = f.facts();
    if (!facts.finitely_many_paths_start) {
        return {false, "violates: in " + f.name() + " infinitely many paths start at some vertex"};
    }
    if (!facts.finitely_many_paths_end) {
        return {false, "violates: in " + f.name() + " infinitely many paths end at some vertex"};
    }
    return {true, f.name() + ": finitely many paths start and end at each vertex"};
}

bool check_unique_path_condition(const Quiver& q) {
    if (!is_acyclic(q)) {
        throw InputError("unique-path condition is only decided for acyclic quivers");
    }
    std::map<std::pair<int, int>, int> count;
    for (const auto& p : all_paths(q)) {
        if (++count[{p.source, p.target}] > 1) return false;
    }
    return true;
}

FinitenessClauses check_prop32_equivalence(const Quiver& q) {
    FinitenessClauses r;
    r.clause_acyclic_finite_arrows = is_acyclic(q);

    // A path with |E| arrows inside E repeats a vertex, so it sits on a cycle
    // and paths through E are unbounded; otherwise all of them are shorter.
    auto finite_on = [&](const std::vector<bool>& in_e, int size) {
        std::vector<Path> frontier;
        for (int v = 0; v < q.vertex_count(); ++v) {
            if (in_e[v]) frontier.push_back(Path::vertex(v));
        }
        if (frontier.empty()) return true;
        for (int len = 1; len <= size; ++len) {
            std::vector<Path> next;
            for (const auto& p : frontier) {
                for (int a : q.out_arrows(p.target)) {
                    if (!in_e[q.arrow(a).target]) continue;
                    Path e = p;
                    e.arrows.push_back(a);
                    e.target = q.arrow(a).target;
                    next.push_back(std::move(e));
                }
            }
            if (next.empty()) return true;
            frontier = std::move(next);
        }
        return false;
    };

    const int n = q.vertex_count();
    bool all_finite = true;
    if (n <= 12) {
        for (unsigned mask = 0; mask < (1u << n) && all_finite; ++mask) {
            std::vector<bool> in_e(n);
            int size = 0;
            for (int v = 0; v < n; ++v) {
                in_e[v] = (mask >> v) & 1u;
                size += in_e[v];
            }
            all_finite = finite_on(in_e, size);
        }
    } else {
        all_finite = finite_on(std::vector<bool>(n, true), n);
    }
    r.clause_finite_paths_on_finite_sets = all_finite;
    r.agree = r.clause_acyclic_finite_arrows == r.clause_finite_paths_on_finite_sets;
    return r;
}

Quiver random_acyclic_quiver(std::mt19937_64& rng, int vertices, int arrows) {
    Quiver q;
    for (int v = 0; v < vertices; ++v) q.add_vertex("v" + std::to_string(v));
    if (vertices < 2) return q;
    std::uniform_int_distribution<int> pick(0, vertices - 1);
    for (int k = 0; k < arrows; ++k) {
        int s = pick(rng), t = pick(rng);
        while (s == t) t = pick(rng);
        if (s > t) std::swap(s, t);
        q.add_arrow("a" + std::to_string(k), s, t);
    }
    return q;
}

Quiver random_quiver(std::mt19937_64& rng, int vertices, int arrows) {
    Quiver q;
    for (int v = 0; v < vertices; ++v) q.add_vertex("v" + std::to_string(v));
    if (vertices < 1) return q;
    std::uniform_int_distribution<int> pick(0, vertices - 1);
    for (int k = 0; k < arrows; ++k) {
        int s = pick(rng);
        q.add_arrow("a" + std::to_string(k), s, pick(rng));
    }
    return q;
}

Quiver disjoint_union(const Quiver& a, const Quiver& b) {
    Quiver u;
    for (int v = 0; v < a.vertex_count(); ++v) u.add_vertex("L_" + a.vertex_label(v));
    for (int v = 0; v < b.vertex_count(); ++v) u.add_vertex("R_" + b.vertex_label(v));
    for (const auto& x : a.arrows()) u.add_arrow("L_" + x.label, x.source, x.target);
    const int off = a.vertex_count();
    for (const auto& x : b.arrows()) u.add_arrow("R_" + x.label, x.source + off, x.target + off);
    return u;
}

// ---------------------------------------------------------------------------
// Text format

QuiverInput parse_quiver_text(const std::string& text, int default_truncation) {
    QuiverInput in;
    in.truncation = default_truncation;
    std::istringstream lines(text);
    std::string line;
    int lineno = 0;
    bool header = false;
    bool explicit_part = false;
    auto fail = [&](const std::string& msg, std::size_t col) {
        throw InputError("line " + std::to_string(lineno) + ", column " + std::to_string(col + 1) +
                         ": " + msg);
    };
    while (std::getline(lines, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream words(line);
        std::vector<std::string> w;
        for (std::string s; words >> s;) w.push_back(s);
        if (w.empty()) continue;
        const std::size_t col = line.find(w[0]);
        try {
            if (!header) {
                if (w[0] != "quiver" || w.size() != 1) fail("expected 'quiver' header", col);
                header = true;
            } else if (w[0] == "vertex" && w.size() == 2) {
                in.quiver.add_vertex(w[1]);
                explicit_part = true;
            } else if (w[0] == "arrow" && w.size() == 4) {
                in.quiver.add_arrow(w[1], w[2], w[3]);
                explicit_part = true;
            } else if (w[0] == "family" && w.size() == 2) {
                in.family = QuiverFamily::parse(w[1]);
            } else if (w[0] == "truncate" && w.size() == 2) {
                if (!std::all_of(w[1].begin(), w[1].end(), ::isdigit) || w[1].size() > 6) {
                    fail("truncation must be a nonnegative integer", line.find(w[1]));
                }
                in.truncation = std::stoi(w[1]);
            } else {
                fail("unrecognised declaration '" + w[0] + "'", col);
            }
        } catch (const InputError& e) {
            std::string msg = e.what();
            if (msg.rfind("line ", 0) == 0) throw;
            fail(msg, col);
        }
    }
    if (!header) throw InputError("line 1, column 1: missing 'quiver' header");
    if (in.family) {
        if (explicit_part) throw InputError("a family file cannot also declare vertices or arrows");
        in.quiver = in.family->truncate(in.truncation);
    }
    return in;
}

std::string format_quiver_text(const Quiver& q) {
    std::ostringstream os;
    os << "quiver\n";
    for (int v = 0; v < q.vertex_count(); ++v) os << "vertex " << q.vertex_label(v) << "\n";
    for (const auto& a : q.arrows()) {
        os << "arrow " << a.label << " " << q.vertex_label(a.source) << " "
           << q.vertex_label(a.target) << "\n";
    }
    return os.str();
}

}  // namespace quiveralg
