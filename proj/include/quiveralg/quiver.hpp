#pragma once

#include "quiveralg/scalar.hpp"

#include <optional>
#include <random>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

namespace quiveralg {

struct Arrow {
    std::string label;
    int source = 0;
    int target = 0;
};

/// Finite directed multigraph. Vertices and arrows are addressed by their
/// declaration index; labels are unique within their kind.
class Quiver {
public:
    int add_vertex(const std::string& label);
    int add_arrow(const std::string& label, int source, int target);
    int add_arrow(const std::string& label, const std::string& source, const std::string& target);

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int arrow_count() const { return static_cast<int>(arrows_.size()); }
    const std::string& vertex_label(int v) const { return vertices_.at(v); }
    const Arrow& arrow(int a) const { return arrows_.at(a); }
    const std::vector<Arrow>& arrows() const { return arrows_; }

    std::optional<int> find_vertex(const std::string& label) const;
    std::optional<int> find_arrow(const std::string& label) const;
    int vertex(const std::string& label) const;  // throws InputError if absent
    int arrow_index(const std::string& label) const;

    const std::vector<int>& out_arrows(int v) const { return out_.at(v); }
    const std::vector<int>& in_arrows(int v) const { return in_.at(v); }

    friend bool operator==(const Quiver& a, const Quiver& b) {
        return a.vertices_ == b.vertices_ && a.arrows_ == b.arrows_;
    }

private:
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
    std::vector<std::vector<int>> out_;
    std::vector<std::vector<int>> in_;
    std::unordered_map<std::string, int> vertex_index_;
    std::unordered_map<std::string, int> arrow_index_;
};

inline bool operator==(const Arrow& a, const Arrow& b) {
    return a.label == b.label && a.source == b.source && a.target == b.target;
}

/// A path: a vertex (length 0) or a composable arrow sequence. Identity is by
/// arrow index, so parallel arrows give distinct paths. Ordered by length,
/// then by vertex index (length 0) or arrow index sequence.
struct Path {
    int source = 0;
    int target = 0;
    std::vector<int> arrows;

    static Path vertex(int v) { return Path{v, v, {}}; }
    static Path arrow(const Quiver& q, int a) {
        return Path{q.arrow(a).source, q.arrow(a).target, {a}};
    }

    std::size_t length() const { return arrows.size(); }
    bool is_vertex() const { return arrows.empty(); }

    friend bool operator==(const Path& a, const Path& b) {
        return a.source == b.source && a.target == b.target && a.arrows == b.arrows;
    }
    friend bool operator!=(const Path& a, const Path& b) { return !(a == b); }
    friend bool operator<(const Path& a, const Path& b) {
        if (a.arrows.size() != b.arrows.size()) return a.arrows.size() < b.arrows.size();
        if (a.arrows.empty()) return a.source < b.source;
        return a.arrows < b.arrows;
    }
};

/// Throws InputError unless `p` is a well-formed path of `q`.
void validate_path(const Quiver& q, const Path& p);

/// pq when t(p) = s(q), nullopt otherwise.
std::optional<Path> compose_paths(const Quiver& q, const Path& p, const Path& r);
/// Unchecked concatenation of composable paths.
Path concat(const Path& p, const Path& r);

/// Subpath of `p` made of arrows [from, to); from == to gives the vertex there.
Path subpath(const Quiver& q, const Path& p, std::size_t from, std::size_t to);
/// All subpaths of p (the set S(p)), vertices included.
std::set<Path> subpaths(const Quiver& q, const Path& p);
/// Vertices a path passes through, in order.
std::vector<int> path_vertices(const Quiver& q, const Path& p);

std::string path_to_string(const Quiver& q, const Path& p);
/// Parses "a" (vertex) or "x.y.z" (arrows) without brackets.
Path parse_path(const Quiver& q, const std::string& text);

struct PathList {
    std::vector<Path> paths;
    /// True when the list provably contains every path of the quiver.
    bool exhaustive = false;
};

/// All paths of length <= max_len, sorted. Exhaustive when the quiver is
/// acyclic and max_len reaches its longest path.
PathList enumerate_paths(const Quiver& q, std::size_t max_len);
/// Every path of a finite acyclic quiver; throws for cyclic quivers.
std::vector<Path> all_paths(const Quiver& q);
std::vector<Path> paths_between(const Quiver& q, int from, int to, std::size_t max_len);
std::vector<Path> paths_starting_at(const Quiver& q, int v, std::size_t max_len);
std::vector<Path> paths_ending_at(const Quiver& q, int v, std::size_t max_len);

bool is_acyclic(const Quiver& q);
std::size_t longest_path_length(const Quiver& q);  // acyclic only
/// A cycle that does not self-intersect, as an arrow sequence, if any.
std::optional<std::vector<int>> find_simple_cycle(const Quiver& q);

struct Verdict {
    bool value = false;
    std::string explanation;
};

enum class FamilyKind {
    InfiniteLineTwoSided,
    InfiniteLineLeftBounded,
    Loop,
    Cycle,
    MultiArrowPair,
    StarExample51,
    StarExample56
};

/// Closed-form facts about an infinite (or parametrised) quiver family.
struct FamilyFacts {
    bool finite = false;            // finitely many vertices and arrows
    bool acyclic = false;
    bool finitely_many_arrows_between = true;
    bool finitely_many_paths_between = true;
    bool finitely_many_paths_start = true;  // at every vertex
    bool finitely_many_paths_end = true;
    bool finitely_many_paths = false;
};

/// One of the built-in infinite quiver families. Verdicts come from FamilyFacts;
/// truncate(L) materialises a finite piece for witness generation.
class QuiverFamily {
public:
    QuiverFamily(FamilyKind kind, int parameter = 0);

    /// "loop", "line2", "line1", "cycle:<n>", "multiarrow", "star51", "star56".
    static QuiverFamily parse(const std::string& spec);

    FamilyKind kind() const { return kind_; }
    int parameter() const { return parameter_; }
    std::string name() const;
    FamilyFacts facts() const;
    Quiver truncate(int level) const;

private:
    FamilyKind kind_;
    int parameter_;
};

Verdict check_recovery_condition(const Quiver& q);
Verdict check_recovery_condition(const QuiverFamily& f);
Verdict check_semiperfect_condition(const Quiver& q);
Verdict check_semiperfect_condition(const QuiverFamily& f);
/// At most one path between any two vertices. Throws InputError on cyclic input.
bool check_unique_path_condition(const Quiver& q);

struct FinitenessClauses {
    bool clause_acyclic_finite_arrows = false;
    bool clause_finite_paths_on_finite_sets = false;
    bool agree = false;
};
/// Evaluates both clauses independently: the first by DFS cycle detection, the
/// second by bounded path enumeration on every vertex subset.
FinitenessClauses check_prop32_equivalence(const Quiver& q);

Quiver disjoint_union(const Quiver& a, const Quiver& b);

/// Random acyclic quiver: arrows only go from lower to higher vertex index.
Quiver random_acyclic_quiver(std::mt19937_64& rng, int vertices, int arrows);
/// Random quiver; loops and multiple arrows allowed.
Quiver random_quiver(std::mt19937_64& rng, int vertices, int arrows);

/// Parsed quiver input: either an explicit quiver or a family with a truncation.
struct QuiverInput {
    Quiver quiver;
    std::optional<QuiverFamily> family;
    int truncation = 0;
};

/// Line format: `quiver`, `vertex <label>`, `arrow <label> <src> <tgt>`,
/// `family <spec>`, `truncate <L>`, comments with `#`.
QuiverInput parse_quiver_text(const std::string& text, int default_truncation = 6);
std::string format_quiver_text(const Quiver& q);

}  // namespace quiveralg
