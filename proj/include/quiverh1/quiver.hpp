#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quiverh1/errors.hpp"

namespace qh1 {

struct Arrow {
    std::string name;
    int src;
    int dst;
};

/// Finite quiver. Vertex and arrow order is declaration order and fixed for
/// the lifetime of the object; every downstream basis inherits it.
class Quiver {
  public:
    void add_vertex(const std::string& name);
    void add_arrow(const std::string& name, const std::string& src, const std::string& dst);

    int num_vertices() const { return static_cast<int>(vertices_.size()); }
    int num_arrows() const { return static_cast<int>(arrows_.size()); }
    const std::string& vertex_name(int v) const { return vertices_[v]; }
    const Arrow& arrow(int a) const { return arrows_[a]; }
    std::optional<int> vertex_index(const std::string& name) const;
    std::optional<int> arrow_index(const std::string& name) const;

    std::vector<int> arrows_from(int v) const; // source v, declaration order
    std::vector<int> arrows_into(int v) const; // target v, declaration order

    bool has_oriented_cycle() const;
    /// Underlying undirected multigraph is connected and acyclic.
    bool is_tree() const;
    /// Vertex partition into connected components of the underlying graph,
    /// ordered by smallest vertex index.
    std::vector<std::vector<int>> components() const;

  private:
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
    std::map<std::string, int> vertex_idx_;
    std::map<std::string, int> arrow_idx_;
};

/// Oriented path in traversal order: arrows[0] is traversed first.
/// A length-0 path carries exactly its base vertex.
struct Path {
    int base_vertex = -1;    // used iff arrows is empty
    std::vector<int> arrows; // arrow indices, consecutive arrows compose

    static Path trivial(int v) { return Path{v, {}}; }
    static Path of_arrows(const Quiver& q, std::vector<int> arrows);

    int length() const { return static_cast<int>(arrows.size()); }
    int source(const Quiver& q) const { return arrows.empty() ? base_vertex : q.arrow(arrows.front()).src; }
    int target(const Quiver& q) const { return arrows.empty() ? base_vertex : q.arrow(arrows.back()).dst; }
    bool parallel_to(const Quiver& q, const Path& o) const {
        return source(q) == o.source(q) && target(q) == o.target(q);
    }

    /// Concatenation: this path followed by o; nullopt when not composable.
    std::optional<Path> then(const Quiver& q, const Path& o) const;

    std::string to_string(const Quiver& q) const;

    bool operator==(const Path& o) const { return base_vertex == o.base_vertex && arrows == o.arrows; }
    /// Canonical order: (length, lexicographic on arrow indices); vertices by index.
    bool operator<(const Path& o) const {
        if (arrows.size() != o.arrows.size()) return arrows.size() < o.arrows.size();
        if (arrows.empty()) return base_vertex < o.base_vertex;
        return arrows < o.arrows;
    }
};

class RelationSet {
  public:
    RelationSet() = default;
    explicit RelationSet(std::vector<Path> relations) : rel_(std::move(relations)) {}

    int size() const { return static_cast<int>(rel_.size()); }
    const Path& operator[](int i) const { return rel_[i]; }
    const std::vector<Path>& relations() const { return rel_; }
    int max_length() const;

  private:
    std::vector<Path> rel_;
};

/// Throws unless every relation has length >= 2 and no proper contiguous
/// factor of a relation is itself a relation. Non-minimal sets are rejected,
/// never repaired.
void validate_relations(const Quiver& q, const RelationSet& z);

/// The finite basis B of the monomial algebra: all paths avoiding every
/// relation as a contiguous factor, graded by length in canonical order.
class PathBasis {
  public:
    const Quiver& quiver() const { return *q_; }
    const RelationSet& relations() const { return *z_; }

    int size() const { return static_cast<int>(paths_.size()); }
    const Path& path(int i) const { return paths_[i]; }
    std::optional<int> index(const Path& p) const;
    bool contains(const Path& p) const { return index(p).has_value(); }

    int max_length() const { return max_length_; }
    std::vector<int> sizes_by_length() const;
    /// Indices of basis paths of the given length, in canonical order.
    std::vector<int> indices_of_length(int len) const;

    /// Index of path(i) followed by path(j) when composable and relation-free.
    std::optional<int> mul(int i, int j) const;

    friend PathBasis enumerate_basis(const Quiver& q, const RelationSet& z, long long cap);

  private:
    const Quiver* q_ = nullptr;
    const RelationSet* z_ = nullptr;
    std::vector<Path> paths_;
    std::map<std::vector<int>, int> word_idx_; // arrow word -> index
    std::vector<int> vertex_idx_;              // vertex -> index of trivial path
    int max_length_ = 0;
};

/// Detects infinite dimensionality structurally (cycle in the factor-avoidance
/// automaton on suffixes of length < max relation length); the cap is only a
/// memory guard once the structural check passes.
PathBasis enumerate_basis(const Quiver& q, const RelationSet& z, long long cap = 100000);

/// eps with one occurrence of the arrow `a` replaced by `gamma`, filtered to
/// the basis. Occurrences producing equal paths accumulate multiplicity.
/// Returns (basis index, multiplicity) pairs in canonical index order.
std::vector<std::pair<int, long long>> substitute(const Path& eps, int a, const Path& gamma,
                                                  const PathBasis& basis);

/// True iff every single-occurrence replacement of `a` by `gamma` in eps
/// leaves the relation ideal (no summand survives the basis filter).
bool substitution_vanishes(const Path& eps, int a, const Path& gamma, const PathBasis& basis);

enum class PathSet { Q0, Q1, Z, B };

struct PairIx {
    int x; // index into the x-side set (vertex, arrow, relation, or basis index)
    int y; // index into the y-side set
};

/// Ordered set X//Y of parallel couples, with degree bookkeeping
/// (degree of (x, y) is length(y) - length(x)).
struct ParallelPairs {
    PathSet xs, ys;
    std::vector<PairIx> pairs;
    std::vector<int> degree;

    int size() const { return static_cast<int>(pairs.size()); }
    std::optional<int> find(int x, int y) const;
};

/// `y_length` restricts the y side to paths of that length (the graded slice
/// B_n when ys is the basis).
ParallelPairs parallel_pairs(PathSet xs, PathSet ys, const Quiver& q, const RelationSet& z,
                             const PathBasis& basis, std::optional<int> y_length = std::nullopt);

Path set_path(PathSet s, int i, const Quiver& q, const RelationSet& z, const PathBasis& basis);

/// Partition of the arrows by parallelism, classes ordered by first arrow.
std::vector<std::vector<int>> parallel_classes(const Quiver& q);

/// Subquiver keeping the first arrow of every parallel class.
Quiver qbar(const Quiver& q);

/// A connected-component slice of a quiver together with its relations,
/// with index maps back into the original.
struct ComponentSlice {
    Quiver quiver;
    RelationSet relations;
    std::vector<int> vertex_map; // component vertex -> original vertex
    std::vector<int> arrow_map;  // component arrow -> original arrow
};

std::vector<ComponentSlice> split_components(const Quiver& q, const RelationSet& z);

} // namespace qh1
