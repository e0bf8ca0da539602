#include "quiverh1/quiver.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace qh1 {

void Quiver::add_vertex(const std::string& name) {
    if (vertex_idx_.count(name) || arrow_idx_.count(name))
        throw Error(ErrorKind::DuplicateName, "duplicate name '" + name + "'");
    vertex_idx_[name] = num_vertices();
    vertices_.push_back(name);
}

void Quiver::add_arrow(const std::string& name, const std::string& src, const std::string& dst) {
    if (vertex_idx_.count(name) || arrow_idx_.count(name))
        throw Error(ErrorKind::DuplicateName, "duplicate name '" + name + "'");
    auto s = vertex_index(src);
    auto d = vertex_index(dst);
    if (!s) throw Error(ErrorKind::UnknownVertex, "arrow '" + name + "': unknown vertex '" + src + "'");
    if (!d) throw Error(ErrorKind::UnknownVertex, "arrow '" + name + "': unknown vertex '" + dst + "'");
    arrow_idx_[name] = num_arrows();
    arrows_.push_back(Arrow{name, *s, *d});
}

std::optional<int> Quiver::vertex_index(const std::string& name) const {
    auto it = vertex_idx_.find(name);
    if (it == vertex_idx_.end()) return std::nullopt;
    return it->second;
}

std::optional<int> Quiver::arrow_index(const std::string& name) const {
    auto it = arrow_idx_.find(name);
    if (it == arrow_idx_.end()) return std::nullopt;
    return it->second;
}

std::vector<int> Quiver::arrows_from(int v) const {
    std::vector<int> out;
    for (int a = 0; a < num_arrows(); ++a)
        if (arrows_[a].src == v) out.push_back(a);
    return out;
}

std::vector<int> Quiver::arrows_into(int v) const {
    std::vector<int> out;
    for (int a = 0; a < num_arrows(); ++a)
        if (arrows_[a].dst == v) out.push_back(a);
    return out;
}

bool Quiver::has_oriented_cycle() const {
    std::vector<int> color(num_vertices(), 0); // 0 unseen, 1 active, 2 done
    std::vector<std::vector<int>> next(num_vertices());
    for (const auto& a : arrows_) next[a.src].push_back(a.dst);
    // iterative DFS
    for (int start = 0; start < num_vertices(); ++start) {
        if (color[start] != 0) continue;
        std::vector<std::pair<int, size_t>> stack{{start, 0}};
        color[start] = 1;
        while (!stack.empty()) {
            auto& [v, i] = stack.back();
            if (i < next[v].size()) {
                int w = next[v][i++];
                if (color[w] == 1) return true;
                if (color[w] == 0) {
                    color[w] = 1;
                    stack.emplace_back(w, 0);
                }
            } else {
                color[v] = 2;
                stack.pop_back();
            }
        }
    }
    return false;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

bool Quiver::is_tree() const {
    if (num_vertices() == 0) return false;
    UnionFind uf(num_vertices());
    for (const auto& a : arrows_) uf.unite(a.src, a.dst);
    int roots = 0;
    for (int v = 0; v < num_vertices(); ++v)
        if (uf.find(v) == v) ++roots;
    return roots == 1 && num_arrows() == num_vertices() - 1;
}

std::vector<std::vector<int>> Quiver::components() const {
    UnionFind uf(num_vertices());
    for (const auto& a : arrows_) uf.unite(a.src, a.dst);
    std::map<int, std::vector<int>> groups;
    for (int v = 0; v < num_vertices(); ++v) groups[uf.find(v)].push_back(v);
    std::vector<std::vector<int>> out;
    std::vector<std::pair<int, std::vector<int>>> sorted(groups.begin(), groups.end());
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return a.second.front() < b.second.front(); });
    for (auto& [root, vs] : sorted) out.push_back(std::move(vs));
    return out;
}

Path Path::of_arrows(const Quiver& q, std::vector<int> arrows) {
    if (arrows.empty()) throw Error(ErrorKind::Internal, "Path::of_arrows: empty word");
    for (size_t i = 0; i + 1 < arrows.size(); ++i)
        if (q.arrow(arrows[i]).dst != q.arrow(arrows[i + 1]).src)
            throw Error(ErrorKind::NonComposable,
                        "arrows '" + q.arrow(arrows[i]).name + "' and '" + q.arrow(arrows[i + 1]).name +
                            "' do not compose");
    return Path{-1, std::move(arrows)};
}

std::optional<Path> Path::then(const Quiver& q, const Path& o) const {
    if (target(q) != o.source(q)) return std::nullopt;
    if (arrows.empty()) return o;
    if (o.arrows.empty()) return *this;
    Path r = *this;
    r.arrows.insert(r.arrows.end(), o.arrows.begin(), o.arrows.end());
    return r;
}

std::string Path::to_string(const Quiver& q) const {
    if (arrows.empty()) return "e(" + q.vertex_name(base_vertex) + ")";
    std::string s;
    for (size_t i = 0; i < arrows.size(); ++i) {
        if (i) s += "*";
        s += q.arrow(arrows[i]).name;
    }
    return s;
}

int RelationSet::max_length() const {
    int m = 0;
    for (const auto& p : rel_) m = std::max(m, p.length());
    return m;
}

namespace {

bool is_factor(const std::vector<int>& needle, const std::vector<int>& hay) {
    if (needle.size() > hay.size()) return false;
    for (size_t i = 0; i + needle.size() <= hay.size(); ++i)
        if (std::equal(needle.begin(), needle.end(), hay.begin() + i)) return true;
    return false;
}

} // namespace

void validate_relations(const Quiver& q, const RelationSet& z) {
    for (const auto& p : z.relations()) {
        if (p.length() < 2)
            throw Error(ErrorKind::RelationTooShort,
                        "relation '" + p.to_string(q) + "' has length " + std::to_string(p.length()) +
                            " (need >= 2)");
        for (int a : p.arrows)
            if (a < 0 || a >= q.num_arrows())
                throw Error(ErrorKind::UnknownArrow, "relation references an arrow outside the quiver");
    }
    for (int i = 0; i < z.size(); ++i)
        for (int j = 0; j < z.size(); ++j) {
            if (i == j) continue;
            if (j > i && z[i].arrows == z[j].arrows)
                throw Error(ErrorKind::NonMinimal, "duplicate relation '" + z[i].to_string(q) + "'");
            if (z[i].length() < z[j].length() && is_factor(z[i].arrows, z[j].arrows))
                throw Error(ErrorKind::NonMinimal, "relation set is not minimal: '" + z[i].to_string(q) +
                                                       "' is a factor of '" + z[j].to_string(q) + "'");
        }
}

namespace {

struct FactorMatcher {
    std::set<std::vector<int>> words;
    int max_len = 0;

    explicit FactorMatcher(const RelationSet& z) {
        for (const auto& p : z.relations()) {
            words.insert(p.arrows);
            max_len = std::max(max_len, p.length());
        }
    }

    /// Word obtained from a relation-free word by appending one arrow stays
    /// relation-free iff no suffix through the new letter is a relation.
    bool extension_ok(const std::vector<int>& extended) const {
        int n = static_cast<int>(extended.size());
        for (int len = 2; len <= std::min(max_len, n); ++len) {
            std::vector<int> suffix(extended.end() - len, extended.end());
            if (words.count(suffix)) return false;
        }
        return true;
    }
};

} // namespace

PathBasis enumerate_basis(const Quiver& q, const RelationSet& z, long long cap) {
    validate_relations(q, z);
    FactorMatcher matcher(z);
    int m = std::max(1, z.max_length());
    // The finiteness decision must not depend on the user cap: the automaton
    // is finite even when B is not, so it gets its own generous memory guard.
    const long long automaton_guard = std::max(cap, 1000000LL);

    // Factor-avoidance automaton: states are the basis words of length <= m-1;
    // B is infinite iff the transition graph has a cycle.
    std::map<std::vector<int>, int> state_id;
    std::vector<std::vector<int>> state_word;
    std::vector<int> state_target; // target vertex of the state word
    auto intern = [&](const std::vector<int>& w, int tgt) {
        auto it = state_id.find(w);
        if (it != state_id.end()) return it->second;
        int id = static_cast<int>(state_word.size());
        state_id.emplace(w, id);
        state_word.push_back(w);
        state_target.push_back(tgt);
        return id;
    };
    std::deque<int> work;
    for (int v = 0; v < q.num_vertices(); ++v) {
        // encode the trivial path at v as the word {-1 - v}
        intern({-1 - v}, v);
        work.push_back(v);
    }
    std::vector<std::vector<int>> trans; // state -> list of successor states
    trans.resize(state_word.size());
    while (!work.empty()) {
        int s = work.front();
        work.pop_front();
        if (static_cast<size_t>(s) >= trans.size()) trans.resize(state_word.size());
        std::vector<int> word = state_word[s];
        if (!word.empty() && word[0] < 0) word.clear(); // trivial-path encoding
        for (int a : q.arrows_from(state_target[s])) {
            std::vector<int> w = word;
            w.push_back(a);
            if (!matcher.extension_ok(w)) continue;
            if (static_cast<int>(w.size()) > m - 1) w.erase(w.begin());
            int tgt = q.arrow(a).dst;
            std::vector<int> key = w.empty() ? std::vector<int>{-1 - tgt} : w;
            bool fresh = !state_id.count(key);
            int t = intern(key, tgt);
            if (fresh) {
                trans.resize(state_word.size());
                work.push_back(t);
            }
            trans[s].push_back(t);
            if (static_cast<long long>(state_word.size()) > automaton_guard)
                throw Error(ErrorKind::CapExceeded, "factor-avoidance automaton exceeds the memory guard");
        }
    }
    // cycle detection (all states are reachable by construction)
    {
        int n = static_cast<int>(state_word.size());
        std::vector<int> indeg(n, 0);
        for (int s = 0; s < n; ++s)
            for (int t : trans[s]) ++indeg[t];
        std::deque<int> ready;
        for (int s = 0; s < n; ++s)
            if (indeg[s] == 0) ready.push_back(s);
        int seen = 0;
        while (!ready.empty()) {
            int s = ready.front();
            ready.pop_front();
            ++seen;
            for (int t : trans[s])
                if (--indeg[t] == 0) ready.push_back(t);
        }
        if (seen != n)
            throw Error(ErrorKind::InfiniteDimensional,
                        "the algebra is infinite dimensional (factor-avoidance automaton has a cycle)");
    }

    PathBasis b;
    b.q_ = &q;
    b.z_ = &z;
    b.vertex_idx_.assign(q.num_vertices(), -1);
    std::vector<Path> frontier;
    for (int v = 0; v < q.num_vertices(); ++v) {
        b.vertex_idx_[v] = b.size();
        b.paths_.push_back(Path::trivial(v));
        frontier.push_back(Path::trivial(v));
    }
    while (!frontier.empty()) {
        std::vector<Path> next;
        for (const auto& p : frontier) {
            for (int a : q.arrows_from(p.target(q))) {
                std::vector<int> w = p.arrows;
                w.push_back(a);
                if (!matcher.extension_ok(w)) continue;
                next.push_back(Path{-1, w});
            }
        }
        for (const auto& p : next) {
            b.word_idx_.emplace(p.arrows, b.size());
            b.paths_.push_back(p);
            b.max_length_ = p.length();
            if (static_cast<long long>(b.paths_.size()) > cap)
                throw Error(ErrorKind::CapExceeded,
                            "basis size exceeds cap (" + std::to_string(cap) + ")");
        }
        frontier = std::move(next);
    }
    return b;
}

std::optional<int> PathBasis::index(const Path& p) const {
    if (p.arrows.empty()) {
        if (p.base_vertex < 0 || p.base_vertex >= static_cast<int>(vertex_idx_.size())) return std::nullopt;
        return vertex_idx_[p.base_vertex];
    }
    auto it = word_idx_.find(p.arrows);
    if (it == word_idx_.end()) return std::nullopt;
    return it->second;
}

std::vector<int> PathBasis::sizes_by_length() const {
    std::vector<int> out(max_length_ + 1, 0);
    for (const auto& p : paths_) ++out[p.length()];
    return out;
}

std::vector<int> PathBasis::indices_of_length(int len) const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (paths_[i].length() == len) out.push_back(i);
    return out;
}

std::optional<int> PathBasis::mul(int i, int j) const {
    auto prod = paths_[i].then(*q_, paths_[j]);
    if (!prod) return std::nullopt;
    return index(*prod);
}

std::vector<std::pair<int, long long>> substitute(const Path& eps, int a, const Path& gamma,
                                                  const PathBasis& basis) {
    const Quiver& q = basis.quiver();
    const Arrow& arr = q.arrow(a);
    if (gamma.source(q) != arr.src || gamma.target(q) != arr.dst)
        throw Error(ErrorKind::NotParallel, "substitute: '" + gamma.to_string(q) +
                                                "' is not parallel to arrow '" + arr.name + "'");
    std::map<int, long long> acc;
    for (size_t i = 0; i < eps.arrows.size(); ++i) {
        if (eps.arrows[i] != a) continue;
        std::vector<int> w;
        w.reserve(eps.arrows.size() - 1 + gamma.arrows.size());
        w.insert(w.end(), eps.arrows.begin(), eps.arrows.begin() + i);
        w.insert(w.end(), gamma.arrows.begin(), gamma.arrows.end());
        w.insert(w.end(), eps.arrows.begin() + i + 1, eps.arrows.end());
        Path candidate = w.empty() ? Path::trivial(arr.src) : Path{-1, std::move(w)};
        if (auto idx = basis.index(candidate)) acc[*idx] += 1;
    }
    return {acc.begin(), acc.end()};
}

bool substitution_vanishes(const Path& eps, int a, const Path& gamma, const PathBasis& basis) {
    return substitute(eps, a, gamma, basis).empty();
}

Path set_path(PathSet s, int i, const Quiver& q, const RelationSet& z, const PathBasis& basis) {
    switch (s) {
        case PathSet::Q0: return Path::trivial(i);
        case PathSet::Q1: return Path{-1, {i}};
        case PathSet::Z: return z[i];
        case PathSet::B: return basis.path(i);
    }
    throw Error(ErrorKind::Internal, "set_path: bad tag");
}

namespace {

int set_size(PathSet s, const Quiver& q, const RelationSet& z, const PathBasis& basis) {
    switch (s) {
        case PathSet::Q0: return q.num_vertices();
        case PathSet::Q1: return q.num_arrows();
        case PathSet::Z: return z.size();
        case PathSet::B: return basis.size();
    }
    return 0;
}

} // namespace

ParallelPairs parallel_pairs(PathSet xs, PathSet ys, const Quiver& q, const RelationSet& z,
                             const PathBasis& basis, std::optional<int> y_length) {
    ParallelPairs pp{xs, ys, {}, {}};
    int nx = set_size(xs, q, z, basis), ny = set_size(ys, q, z, basis);
    for (int x = 0; x < nx; ++x) {
        Path px = set_path(xs, x, q, z, basis);
        for (int y = 0; y < ny; ++y) {
            Path py = set_path(ys, y, q, z, basis);
            if (y_length && py.length() != *y_length) continue;
            if (!px.parallel_to(q, py)) continue;
            pp.pairs.push_back(PairIx{x, y});
            pp.degree.push_back(py.length() - px.length());
        }
    }
    return pp;
}

std::optional<int> ParallelPairs::find(int x, int y) const {
    for (size_t i = 0; i < pairs.size(); ++i)
        if (pairs[i].x == x && pairs[i].y == y) return static_cast<int>(i);
    return std::nullopt;
}

std::vector<std::vector<int>> parallel_classes(const Quiver& q) {
    std::vector<std::vector<int>> classes;
    std::map<std::pair<int, int>, int> key_to_class;
    for (int a = 0; a < q.num_arrows(); ++a) {
        std::pair<int, int> key{q.arrow(a).src, q.arrow(a).dst};
        auto it = key_to_class.find(key);
        if (it == key_to_class.end()) {
            key_to_class.emplace(key, static_cast<int>(classes.size()));
            classes.push_back({a});
        } else {
            classes[it->second].push_back(a);
        }
    }
    return classes;
}

Quiver qbar(const Quiver& q) {
    Quiver out;
    for (int v = 0; v < q.num_vertices(); ++v) out.add_vertex(q.vertex_name(v));
    for (const auto& cls : parallel_classes(q)) {
        const Arrow& a = q.arrow(cls.front());
        out.add_arrow(a.name, q.vertex_name(a.src), q.vertex_name(a.dst));
    }
    return out;
}

std::vector<ComponentSlice> split_components(const Quiver& q, const RelationSet& z) {
    std::vector<ComponentSlice> out;
    for (const auto& verts : q.components()) {
        ComponentSlice slice;
        std::vector<int> vmap(q.num_vertices(), -1);
        for (int v : verts) {
            vmap[v] = slice.quiver.num_vertices();
            slice.quiver.add_vertex(q.vertex_name(v));
            slice.vertex_map.push_back(v);
        }
        std::vector<int> amap(q.num_arrows(), -1);
        for (int a = 0; a < q.num_arrows(); ++a) {
            const Arrow& arr = q.arrow(a);
            if (vmap[arr.src] < 0) continue;
            amap[a] = slice.quiver.num_arrows();
            slice.quiver.add_arrow(arr.name, q.vertex_name(arr.src), q.vertex_name(arr.dst));
            slice.arrow_map.push_back(a);
        }
        std::vector<Path> rels;
        for (const auto& p : z.relations()) {
            if (vmap[p.source(q)] < 0) continue;
            std::vector<int> w;
            for (int a : p.arrows) w.push_back(amap[a]);
            rels.push_back(Path{-1, std::move(w)});
        }
        slice.relations = RelationSet(std::move(rels));
        out.push_back(std::move(slice));
    }
    return out;
}

} // namespace qh1
