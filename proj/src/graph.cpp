#include "quadgraph/graph.hpp"

#include <atomic>
#include <cmath>
#include <ostream>

#include "quadgraph/parallel.hpp"

namespace quadgraph {

namespace {

// Raw helpers shared by the builders and the streaming counter. All of them
// operate on row-major uint16 element buffers to keep the hot loops free of
// Matrix overhead. Prime fields get an integer-accumulator fast path.

struct RawField {
    const FieldSpec* f;
    bool prime;
    int p;

    explicit RawField(const FieldSpec& spec)
        : f(&spec), prime(spec.degree() == 1), p(spec.characteristic()) {}

    // dot product of two n-vectors
    std::uint16_t dot(const std::uint16_t* a, const std::uint16_t* b, int n) const {
        if (prime) {
            long long acc = 0;
            for (int i = 0; i < n; ++i) acc += long(a[i]) * b[i];
            return std::uint16_t(acc % p);
        }
        std::uint16_t acc = 0;
        for (int i = 0; i < n; ++i) acc = f->add(acc, f->mul(a[i], b[i]));
        return acc;
    }
};

// rows (k x n) times the symmetric Gram (n x n) -> out (k x n)
void rows_times_gram(const RawField& rf, const std::uint16_t* rows, int k, int n,
                     const Matrix& gram, std::uint16_t* out) {
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < n; ++j)
            out[size_t(i) * n + j] = rf.dot(rows + size_t(i) * n, gram.row_data(j), n);
}

// determinant of a small d x d matrix, in place
std::uint16_t det_in_place(const RawField& rf, std::uint16_t* m, int d) {
    const FieldSpec& f = *rf.f;
    std::uint16_t det = 1;
    for (int c = 0; c < d; ++c) {
        int piv = -1;
        for (int i = c; i < d; ++i)
            if (m[size_t(i) * d + c]) {
                piv = i;
                break;
            }
        if (piv < 0) return 0;
        if (piv != c) {
            for (int j = 0; j < d; ++j) std::swap(m[size_t(piv) * d + j], m[size_t(c) * d + j]);
            det = f.neg(det);
        }
        std::uint16_t pv = m[size_t(c) * d + c];
        det = f.mul(det, pv);
        std::uint16_t inv = f.inv(pv);
        for (int i = c + 1; i < d; ++i) {
            std::uint16_t mult = f.mul(m[size_t(i) * d + c], inv);
            if (!mult) continue;
            for (int j = c; j < d; ++j)
                m[size_t(i) * d + j] = f.sub(m[size_t(i) * d + j], f.mul(mult, m[size_t(c) * d + j]));
        }
    }
    return det;
}

// restriction Gram det test: W is dot_k iff det(M G M^T) is a nonzero square
// (dimension + discriminant square class classify nondegenerate forms, and
// dot_k has square discriminant). The classify()-based route is the public
// contract; equality of the two routes is covered by tests.
bool is_dotk_raw(const RawField& rf, const std::uint16_t* rows, int k, int n, const Matrix& gram,
                 std::uint16_t* fgbuf, std::uint16_t* rbuf) {
    rows_times_gram(rf, rows, k, n, gram, fgbuf);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            rbuf[size_t(i) * k + j] = rf.dot(fgbuf + size_t(i) * n, rows + size_t(j) * n, n);
    std::uint16_t det = det_in_place(rf, rbuf, k);
    if (det == 0) return false;
    return rf.f->is_square(FieldElement(rf.f, det));
}

std::vector<std::vector<int>> pivot_patterns(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> piv(k);
    for (int i = 0; i < k; ++i) piv[i] = i;
    for (;;) {
        out.push_back(piv);
        int i = k - 1;
        while (i >= 0 && piv[i] == n - k + i) --i;
        if (i < 0) break;
        ++piv[i];
        for (int j = i + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
    }
    return out;
}

// Odometer over the free cells of one pivot pattern.
template <typename Fn>
void visit_pattern_rows(int n, int k, int q, const std::vector<int>& piv, Fn&& fn) {
    std::vector<std::pair<int, int>> cells;
    std::vector<bool> is_piv(n, false);
    for (int p : piv) is_piv[p] = true;
    for (int i = 0; i < k; ++i)
        for (int c = piv[i] + 1; c < n; ++c)
            if (!is_piv[c]) cells.emplace_back(i, c);

    std::vector<std::uint16_t> buf(size_t(k) * n, 0);
    for (int i = 0; i < k; ++i) buf[size_t(i) * n + piv[i]] = 1;
    std::vector<int> odo(cells.size(), 0);
    for (;;) {
        fn(buf.data());
        size_t pos = cells.size();
        bool carry = true;
        while (pos > 0 && carry) {
            --pos;
            auto [r, c] = cells[pos];
            if (++odo[pos] < q) {
                buf[size_t(r) * n + c] = std::uint16_t(odo[pos]);
                carry = false;
            } else {
                odo[pos] = 0;
                buf[size_t(r) * n + c] = 0;
            }
        }
        if (carry) return;
    }
}

void check_graph_params(int n, int k) {
    if (k < 1 || k >= n)
        throw Error("graph parameters require 1 <= k < n (the graph is empty for k >= n); got k=" +
                    std::to_string(k) + ", n=" + std::to_string(n));
}

struct VertexData {
    int k, n;
    std::vector<std::uint16_t> bases;  // V * k * n
    std::vector<std::uint16_t> fg;     // V * k * n, basis * Gram
    const std::uint16_t* basis(size_t v) const { return bases.data() + v * size_t(k) * n; }
    const std::uint16_t* form(size_t v) const { return fg.data() + v * size_t(k) * n; }
};

bool pair_orthogonal(const RawField& rf, const VertexData& vd, size_t u, size_t v) {
    const int k = vd.k, n = vd.n;
    const std::uint16_t* fu = vd.form(u);
    const std::uint16_t* bv = vd.basis(v);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (rf.dot(fu + size_t(i) * n, bv + size_t(j) * n, n) != 0) return false;
    return true;
}

OrthGraph build_graph(GraphKind kind, int n, int k, const FieldRef& spec,
                      const BuildOptions& opt) {
    check_graph_params(n, k);
    OrthGraph g;
    g.kind = kind;
    g.n = n;
    g.k = k;
    g.loop_policy = kind == GraphKind::GammaBar ? opt.loop_policy : LoopPolicy::Exclude;
    g.ambient = standard_space(StandardForm::LambdaDot, n, spec);

    SubspaceSet all = enumerate_subspaces(n, k, spec, opt.cache_dir);
    if (kind == GraphKind::GammaBar) {
        g.vertices = std::move(all);
    } else {
        RawField rf(*spec);
        std::vector<std::uint16_t> fgbuf(size_t(k) * n), rbuf(size_t(k) * k);
        for (const auto& s : all) {
            if (is_dotk_raw(rf, s.raw_basis().data(), k, n, g.ambient.gram(), fgbuf.data(),
                            rbuf.data()))
                g.vertices.push_back(s);
        }
    }

    const size_t V = g.vertices.size();
    VertexData vd;
    vd.k = k;
    vd.n = n;
    vd.bases.resize(V * size_t(k) * n);
    vd.fg.resize(V * size_t(k) * n);
    RawField rf(*spec);
    for (size_t v = 0; v < V; ++v) {
        const auto& rows = g.vertices[v].raw_basis();
        std::copy(rows.begin(), rows.end(), vd.bases.begin() + v * size_t(k) * n);
        rows_times_gram(rf, rows.data(), k, n, g.ambient.gram(),
                        vd.fg.data() + v * size_t(k) * n);
    }

    g.adj.assign(V, Bitset(V));
    // Each row is computed independently in both directions; the symmetry
    // assertion below is therefore a genuine dual-route check of the
    // bilinear-form computation, not a tautology.
    parallel_for_chunks(
        0, V,
        [&](size_t lo, size_t hi) {
            for (size_t u = lo; u < hi; ++u) {
                Bitset& row = g.adj[u];
                for (size_t v = 0; v < V; ++v) {
                    if (u == v) continue;
                    if (pair_orthogonal(rf, vd, u, v)) row.set(v);
                }
            }
        },
        opt.threads);

    std::atomic<bool> symmetric{true};
    parallel_for_chunks(
        0, V,
        [&](size_t lo, size_t hi) {
            for (size_t u = lo; u < hi; ++u)
                for (size_t v = u + 1; v < V; ++v)
                    if (g.adj[u].test(v) != g.adj[v].test(u)) symmetric = false;
        },
        opt.threads);
    if (!symmetric) throw Error("internal: adjacency relation is not symmetric");

    // diagonal: loops sit exactly at totally isotropic vertices
    for (size_t v = 0; v < V; ++v) {
        bool self = pair_orthogonal(rf, vd, v, v);
        if (kind == GraphKind::GammaSquare) {
            if (self) throw Error("internal: dot_k vertex cannot be self-orthogonal");
        } else if (self && g.loop_policy == LoopPolicy::Include) {
            g.adj[v].set(v);
        }
    }
    return g;
}

}  // namespace

size_t OrthGraph::loop_count() const {
    size_t c = 0;
    for (size_t v = 0; v < adj.size(); ++v) c += adj[v].test(v);
    return c;
}

size_t OrthGraph::edge_count() const {
    size_t total = 0;
    for (const auto& row : adj) total += row.count();
    return (total - loop_count()) / 2;
}

OrthGraph OrthGraph::with_loop_policy(LoopPolicy p) const {
    OrthGraph g = *this;
    if (p == g.loop_policy || kind == GraphKind::GammaSquare) {
        g.loop_policy = p;
        return g;
    }
    g.loop_policy = p;
    if (p == LoopPolicy::Exclude) {
        for (size_t v = 0; v < g.adj.size(); ++v) g.adj[v].reset(v);
    } else {
        RawField rf(*field());
        const int kk = k, nn = n;
        std::vector<std::uint16_t> fg(size_t(kk) * nn);
        for (size_t v = 0; v < g.adj.size(); ++v) {
            const auto& rows = g.vertices[v].raw_basis();
            rows_times_gram(rf, rows.data(), kk, nn, ambient.gram(), fg.data());
            bool iso = true;
            for (int i = 0; i < kk && iso; ++i)
                for (int j = 0; j < kk; ++j)
                    if (rf.dot(fg.data() + size_t(i) * nn, rows.data() + size_t(j) * nn, nn)) {
                        iso = false;
                        break;
                    }
            if (iso) g.adj[v].set(v);
        }
    }
    return g;
}

OrthGraph build_gamma_square(int n, int k, const FieldRef& spec, const BuildOptions& opt) {
    return build_graph(GraphKind::GammaSquare, n, k, spec, opt);
}

OrthGraph build_gamma_bar(int n, int k, const FieldRef& spec, const BuildOptions& opt) {
    return build_graph(GraphKind::GammaBar, n, k, spec, opt);
}

std::uint64_t count_dotk_subspaces(int n, int k, const FieldRef& spec, unsigned threads) {
    if (k < 0 || k > n) return 0;
    if (k == 0) return 0;  // the zero subspace is not a dot_k-subspace
    QuadraticSpace amb = standard_space(StandardForm::LambdaDot, n, spec);
    auto patterns = pivot_patterns(n, k);
    std::atomic<std::uint64_t> total{0};
    parallel_for_chunks(
        0, patterns.size(),
        [&](size_t lo, size_t hi) {
            RawField rf(*spec);
            std::vector<std::uint16_t> fgbuf(size_t(k) * n), rbuf(size_t(k) * k);
            std::uint64_t local = 0;
            for (size_t pi = lo; pi < hi; ++pi) {
                visit_pattern_rows(n, k, spec->order(), patterns[pi],
                                   [&](const std::uint16_t* rows) {
                                       if (is_dotk_raw(rf, rows, k, n, amb.gram(), fgbuf.data(),
                                                       rbuf.data()))
                                           ++local;
                                   });
            }
            total += local;
        },
        threads);
    return total.load();
}

namespace {

struct CliqueSearch {
    const std::vector<Bitset>& adj;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    size_t best = 0;
    std::vector<int> best_clique{};
    std::vector<int> current{};

    void bump() {
        if (++nodes > budget)
            throw BudgetError("clique search exceeded the node budget of " +
                              std::to_string(budget));
    }

    // Greedy coloring; emits P reordered by ascending color together with the
    // color values (the usual branch-and-bound bound).
    void color_sort(const std::vector<int>& p, std::vector<int>& order,
                    std::vector<size_t>& color) const {
        std::vector<std::vector<int>> classes;
        for (int v : p) {
            size_t c = 0;
            for (; c < classes.size(); ++c) {
                bool conflict = false;
                for (int w : classes[c])
                    if (adj[v].test(size_t(w))) {
                        conflict = true;
                        break;
                    }
                if (!conflict) break;
            }
            if (c == classes.size()) classes.emplace_back();
            classes[c].push_back(v);
        }
        order.clear();
        color.clear();
        for (size_t c = 0; c < classes.size(); ++c)
            for (int v : classes[c]) {
                order.push_back(v);
                color.push_back(c + 1);
            }
    }

    void expand(std::vector<int>& p) {
        bump();
        if (p.empty()) {
            if (current.size() > best) {
                best = current.size();
                best_clique = current;
            }
            return;
        }
        std::vector<int> order;
        std::vector<size_t> color;
        color_sort(p, order, color);
        for (int i = int(order.size()) - 1; i >= 0; --i) {
            if (current.size() + color[i] <= best) return;
            int v = order[i];
            std::vector<int> next;
            for (int j = 0; j < i; ++j)
                if (adj[size_t(v)].test(size_t(order[j]))) next.push_back(order[j]);
            current.push_back(v);
            expand(next);
            current.pop_back();
        }
    }
};

}  // namespace

int max_clique(const OrthGraph& g, std::uint64_t node_budget, std::vector<int>* witness) {
    const size_t V = g.vertex_count();
    if (V == 0) return 0;
    // loops never join a clique; mask the diagonal
    std::vector<Bitset> simple = g.adj;
    for (size_t v = 0; v < V; ++v) simple[v].reset(v);

    CliqueSearch cs{simple, node_budget};
    std::vector<int> p(V);
    for (size_t v = 0; v < V; ++v) p[v] = int(v);
    cs.expand(p);
    if (witness) *witness = cs.best_clique;
    return int(cs.best);
}

namespace {

void clique_dfs(const std::vector<Bitset>& adj, int size,
                const std::function<void(const std::vector<int>&)>& fn, std::vector<int>& r,
                std::vector<int>& p, std::uint64_t budget, std::uint64_t& nodes) {
    if (++nodes > budget) throw BudgetError("clique enumeration exceeded the node budget");
    if (int(r.size()) == size) {
        fn(r);
        return;
    }
    if (int(r.size()) + int(p.size()) < size) return;
    for (size_t i = 0; i < p.size(); ++i) {
        int v = p[i];
        std::vector<int> next;
        for (size_t j = i + 1; j < p.size(); ++j)
            if (adj[size_t(v)].test(size_t(p[j]))) next.push_back(p[j]);
        r.push_back(v);
        clique_dfs(adj, size, fn, r, next, budget, nodes);
        r.pop_back();
    }
}

}  // namespace

void for_each_clique_of_size(const OrthGraph& g, int size,
                             const std::function<void(const std::vector<int>&)>& fn,
                             std::uint64_t node_budget, size_t first_lo, size_t first_hi) {
    const size_t V = g.vertex_count();
    if (size <= 0 || V == 0) return;
    // loops never join a clique; copy-and-clear the diagonal only when loops exist
    const bool has_loops = g.loop_count() > 0;
    std::vector<Bitset> masked;
    if (has_loops) {
        masked = g.adj;
        for (size_t v = 0; v < V; ++v) masked[v].reset(v);
    }
    const std::vector<Bitset>& simple = has_loops ? masked : g.adj;

    std::uint64_t nodes = 0;
    std::vector<int> r, p;
    first_hi = std::min(first_hi, V);
    for (size_t u = first_lo; u < first_hi; ++u) {
        r.assign(1, int(u));
        p.clear();
        for (size_t w = simple[u].next_set(u + 1); w < V; w = simple[u].next_set(w + 1))
            p.push_back(int(w));
        if (size == 1) {
            fn(r);
            continue;
        }
        clique_dfs(simple, size, fn, r, p, node_budget, nodes);
    }
}

InducedSubgraph neighborhood_subgraph(const OrthGraph& g, int x) {
    if (x < 0 || size_t(x) >= g.vertex_count()) throw Error("vertex index out of range");
    InducedSubgraph out;
    g.adj[size_t(x)].for_each_set([&](size_t v) {
        if (v != size_t(x)) out.vertices.push_back(int(v));
    });
    const size_t m = out.vertices.size();
    out.adj.assign(m, Bitset(m));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            if (i != j && g.adjacent(size_t(out.vertices[i]), size_t(out.vertices[j])))
                out.adj[i].set(j);
    return out;
}

NeighborhoodIsomorphism neighborhood_isomorphism(const OrthGraph& g, int x,
                                                 const OrthGraph& target) {
    if (g.kind != GraphKind::GammaSquare) throw Error("neighborhood map needs a GammaSquare graph");
    if (2 * g.k >= g.n) throw Error("neighborhood map needs k < n/2 (empty neighborhood otherwise)");
    if (target.n != g.n - g.k || target.k != g.k ||
        !target.field()->same_field(*g.field()))
        throw Error("target graph must be the (n-k, k, q) GammaSquare graph");

    NeighborhoodIsomorphism out;
    out.x = x;
    g.adj[size_t(x)].for_each_set([&](size_t v) { out.neighbors.push_back(int(v)); });

    const FieldRef& spec = g.field();
    const Subspace& xs = g.vertices[size_t(x)];
    Subspace perp = orthogonal_complement(g.ambient, xs);
    QuadraticSpace qc = restriction(g.ambient, perp);
    auto iso = construct_isometry(qc, target.ambient);  // M^T G_std M = G_c
    if (!iso) return out;  // not equivalent: flags stay false
    Matrix mt = iso->transpose();

    const Matrix cbasis = perp.basis_matrix();
    const auto& cpivots = perp.pivot_columns();
    const int m = perp.dim();

    bool all_found = true;
    std::vector<bool> hit(target.vertex_count(), false);
    for (int yi : out.neighbors) {
        const Subspace& y = g.vertices[size_t(yi)];
        // coordinates of y's basis rows in the RREF basis of x⊥
        Matrix coords(spec, y.dim(), m);
        for (int i = 0; i < y.dim(); ++i)
            for (int j = 0; j < m; ++j) coords.raw(i, j) = y.raw(i, cpivots[j]);
        if (Subspace::from_matrix(coords * cbasis) != y)
            throw Error("internal: neighbor does not lie in x-perp");
        Subspace image = Subspace::from_matrix(coords * mt);
        auto idx = target.vertices.index_of(image);
        if (!idx) {
            all_found = false;
            break;
        }
        if (hit[*idx]) {
            all_found = false;  // not injective
            break;
        }
        hit[*idx] = true;
        out.image.push_back(int(*idx));
    }

    out.bijective = all_found && out.image.size() == out.neighbors.size() &&
                    out.neighbors.size() == target.vertex_count();
    if (out.bijective) {
        bool ok = true;
        for (size_t i = 0; i < out.neighbors.size() && ok; ++i)
            for (size_t j = 0; j < out.neighbors.size(); ++j) {
                if (i == j) continue;
                bool a = g.adjacent(size_t(out.neighbors[i]), size_t(out.neighbors[j]));
                bool b = target.adjacent(size_t(out.image[i]), size_t(out.image[j]));
                if (a != b) {
                    ok = false;
                    break;
                }
            }
        out.adjacency_preserved = ok;
    }
    return out;
}

std::vector<Matrix> reflection_generators(const QuadraticSpace& q) {
    const FieldRef& spec = q.field();
    const int n = q.dim();
    const int qq = spec->order();
    std::vector<Matrix> gens;
    FVec v(n, spec->zero());
    // projective points: leading coordinate 1
    for (int lead = 0; lead < n; ++lead) {
        for (auto& e : v) e = spec->zero();
        v[lead] = spec->one();
        const int nfree = n - 1 - lead;
        long long total = 1;
        for (int i = 0; i < nfree; ++i) total *= qq;
        for (long long idx = 0; idx < total; ++idx) {
            long long t = idx;
            for (int i = 0; i < nfree; ++i) {
                v[lead + 1 + i] = spec->from_index(int(t % qq));
                t /= qq;
            }
            if (!q.evaluate(v).is_zero()) gens.push_back(reflection(q, v));
        }
    }
    return gens;
}

OrbitCheckResult orbit_check(const OrthGraph& g, const std::vector<Matrix>& generators,
                             size_t arc_cap) {
    OrbitCheckResult out;
    const size_t V = g.vertex_count();
    for (const auto& m : generators) {
        if (m.transpose() * g.ambient.gram() * m != g.ambient.gram())
            throw Error("non-isometry generator: it does not preserve the Gram matrix");
    }
    if (V == 0) return out;

    // action table: image vertex index under each generator
    const size_t G = generators.size();
    std::vector<std::vector<std::uint32_t>> act(G, std::vector<std::uint32_t>(V));
    std::vector<Matrix> gt;
    gt.reserve(G);
    for (const auto& m : generators) gt.push_back(m.transpose());
    parallel_for_chunks(0, G, [&](size_t lo, size_t hi) {
        for (size_t gi = lo; gi < hi; ++gi) {
            for (size_t v = 0; v < V; ++v) {
                Subspace image = Subspace::from_matrix(g.vertices[v].basis_matrix() * gt[gi]);
                auto idx = g.vertices.index_of(image);
                if (!idx) throw Error("isometry maps a vertex outside the vertex set");
                act[gi][v] = std::uint32_t(*idx);
            }
        }
    });

    // vertex orbit BFS (deterministic frontier order)
    {
        std::vector<bool> seen(V, false);
        std::vector<std::uint32_t> frontier{0};
        seen[0] = true;
        size_t orbit = 1;
        while (!frontier.empty()) {
            std::vector<std::uint32_t> next;
            for (auto v : frontier)
                for (size_t gi = 0; gi < G; ++gi) {
                    std::uint32_t w = act[gi][v];
                    if (!seen[w]) {
                        seen[w] = true;
                        ++orbit;
                        next.push_back(w);
                    }
                }
            frontier = std::move(next);
        }
        out.vertex_orbit = orbit;
        out.vertex_transitive = orbit == V;
    }

    // arc orbit BFS over ordered adjacent pairs (loops excluded)
    size_t arcs = 0;
    for (size_t v = 0; v < V; ++v) arcs += g.adj[v].count() - (g.adj[v].test(v) ? 1 : 0);
    out.arc_count = arcs;
    if (arcs == 0) {
        out.arc_checked = true;
        out.arc_transitive = true;  // vacuous
        return out;
    }
    if (arcs > arc_cap) {
        out.arc_checked = false;
        return out;
    }
    size_t first_u = 0, first_v = SIZE_MAX;
    for (size_t u = 0; u < V && first_v == SIZE_MAX; ++u) {
        size_t w = g.adj[u].next_set(0);
        while (w < V && w == u) w = g.adj[u].next_set(w + 1);
        if (w < V) {
            first_u = u;
            first_v = w;
        }
    }
    std::vector<bool> seen(V * V, false);
    std::vector<std::uint64_t> frontier{first_u * V + first_v};
    seen[frontier[0]] = true;
    size_t orbit = 1;
    while (!frontier.empty()) {
        std::vector<std::uint64_t> next;
        for (auto s : frontier) {
            size_t u = size_t(s / V), v = size_t(s % V);
            for (size_t gi = 0; gi < G; ++gi) {
                std::uint64_t t = std::uint64_t(act[gi][u]) * V + act[gi][v];
                if (!seen[t]) {
                    seen[t] = true;
                    ++orbit;
                    next.push_back(t);
                }
            }
        }
        frontier = std::move(next);
    }
    out.arc_checked = true;
    out.arc_orbit = orbit;
    out.arc_transitive = orbit == arcs;
    return out;
}

GraphStats stats(const OrthGraph& g, std::uint64_t clique_budget) {
    GraphStats s;
    s.vertex_count = g.vertex_count();
    s.loop_count = g.loop_count();
    size_t total = 0;
    for (const auto& row : g.adj) {
        size_t d = row.count();
        total += d;
        ++s.degree_histogram[d];
    }
    s.edge_count = (total - s.loop_count) / 2;
    s.regular = s.degree_histogram.size() == 1;
    if (s.regular && s.vertex_count) s.degree = s.degree_histogram.begin()->first;
    if (clique_budget > 0) s.clique_number = max_clique(g, clique_budget);

    const double q = double(g.field()->order());
    const double scale = g.kind == GraphKind::GammaSquare ? 2.0 : 1.0;
    s.vertex_ratio = double(s.vertex_count) / (std::pow(q, double(g.k) * (g.n - g.k)) / scale);
    if (s.regular)
        s.degree_ratio =
            double(s.degree) / (std::pow(q, double(g.k) * (g.n - 2 * g.k)) / scale);
    return s;
}

void write_edge_list(const OrthGraph& g, std::ostream& edges, std::ostream* vertex_table) {
    if (vertex_table) {
        for (size_t v = 0; v < g.vertex_count(); ++v) {
            *vertex_table << v;
            for (auto e : g.vertices[v].raw_basis()) *vertex_table << ' ' << e;
            *vertex_table << '\n';
        }
    }
    for (size_t u = 0; u < g.vertex_count(); ++u)
        for (size_t v = g.adj[u].next_set(u); v < g.vertex_count();
             v = g.adj[u].next_set(v + 1)) {
            edges << u << ' ' << v << '\n';  // loops appear as "u u"
        }
}

void write_dot(const OrthGraph& g, std::ostream& out) {
    out << "graph quadgraph {\n";
    for (size_t v = 0; v < g.vertex_count(); ++v) {
        out << "  " << v << " [label=\"";
        const auto& s = g.vertices[v];
        for (int i = 0; i < s.dim(); ++i) {
            if (i) out << '|';
            for (int j = 0; j < s.ambient(); ++j) out << (j ? " " : "") << s.raw(i, j);
        }
        out << "\"];\n";
    }
    for (size_t u = 0; u < g.vertex_count(); ++u)
        for (size_t v = g.adj[u].next_set(u); v < g.vertex_count();
             v = g.adj[u].next_set(v + 1)) {
            if (u == v)
                out << "  " << u << " -- " << u << ";\n";
            else
                out << "  " << u << " -- " << v << ";\n";
        }
    out << "}\n";
}

}  // namespace quadgraph
