#include "tropcount/path_count.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <thread>

namespace tropcount {

namespace {

constexpr unsigned long long kCountLimit = 1ull << 62;

std::string pack_key(const LatticePath& points) {
    std::string key;
    key.reserve(points.size() * 2);
    for (const LatticePoint& p : points) {
        key.push_back(static_cast<char>(p.i));
        key.push_back(static_cast<char>(p.j));
    }
    return key;
}

// Twice the Euclidean area enclosed between the path and the boundary path
// of the given side: the shoelace sum of the loop running along the path and
// back along the boundary. Zero exactly on the boundary path itself.
long long enclosed_measure(const LatticePath& path, const LatticePath& delta, Side side) {
    long long twice_area = 0;
    LatticePoint prev = path.front();
    auto walk = [&](LatticePoint next) {
        twice_area += cross(prev, next);
        prev = next;
    };
    for (std::size_t k = 1; k < path.size(); ++k) walk(path[k]);
    for (std::size_t k = delta.size() - 1; k-- > 0;) walk(delta[k]);
    twice_area += cross(prev, path.front());
    return side == Side::Plus ? twice_area : -twice_area;
}

struct MuContext {
    int degree;
    Side side;
    DegreeTriangle triangle;
    LatticePath delta;

    MuContext(int d, Side s) : degree(d), side(s), triangle(d) {
        auto [plus, minus] = boundary_paths(d);
        delta = s == Side::Plus ? plus : minus;
    }

    // Smallest interior index where the path turns toward this side.
    std::size_t first_turn(const LatticePath& points) const {
        bool left = side == Side::Plus;
        for (std::size_t k = 1; k + 1 < points.size(); ++k) {
            long long det = cross(points[k] - points[k - 1], points[k + 1] - points[k]);
            if (left ? det > 0 : det < 0) return k;
        }
        return 0;  // none
    }
};

template <class Value>
struct Semiring;

template <>
struct Semiring<GwElement> {
    static GwElement zero() { return GwElement::zero(); }
    static GwElement one() { return GwElement::one(); }
};

template <>
struct Semiring<long long> {
    static long long zero() { return 0; }
    static long long one() { return 1; }
};

GwElement gw_vertex_mult(const LatticeTriangle& cell) {
    return vertex_mult_gw(VertexData::from_triangle(cell));
}

long long complex_vertex_mult(const LatticeTriangle& cell) {
    return vertex_mult_complex(VertexData::from_triangle(cell));
}

long long real_vertex_mult(const LatticeTriangle& cell) {
    return static_cast<long long>(vertex_mult_real_modfour(VertexData::from_triangle(cell)));
}

// ------------------------------------------------- recursive multiplicities

template <class Value, class VertexFn>
Value mu_rec(const LatticePath& points, long long measure, const MuContext& ctx,
             const VertexFn& vertex_mult, MuCache<Value>& cache) {
    if (points == ctx.delta) return Semiring<Value>::one();
    std::string key = pack_key(points);
    if (const Value* hit = cache.find(key, ctx.side)) return *hit;

    std::size_t k = ctx.first_turn(points);
    if (k == 0) {
        // No turn toward this side and not the boundary path; this covers
        // "faster" paths running along the boundary in larger strides.
        Value zero = Semiring<Value>::zero();
        cache.store(key, ctx.side, zero);
        return zero;
    }

    auto descend = [&](const LatticePath& child) {
        long long child_measure = enclosed_measure(child, ctx.delta, ctx.side);
        if (child_measure < 0 || child_measure >= measure)
            throw InternalError("path recursion failed to shrink the enclosed area");
        return mu_rec(child, child_measure, ctx, vertex_mult, cache);
    };

    LatticeTriangle cell{points[k - 1], points[k], points[k + 1]};
    LatticePath shorter;
    shorter.reserve(points.size() - 1);
    for (std::size_t m = 0; m < points.size(); ++m)
        if (m != k) shorter.push_back(points[m]);
    Value result = vertex_mult(cell) * descend(shorter);

    LatticePoint reflected = points[k - 1] + points[k + 1] - points[k];
    if (ctx.triangle.contains(reflected)) {
        if (!lambda_less(points[k - 1], reflected) || !lambda_less(reflected, points[k + 1]))
            throw InternalError("parallelogram completion broke the path order");
        LatticePath completed = points;
        completed[k] = reflected;
        result = result + descend(completed);
    }

    cache.store(key, ctx.side, result);
    return result;
}

template <class Value, class VertexFn>
Value mu_checked(const LatticePath& path, Side side, const VertexFn& vertex_mult,
                 MuCache<Value>& cache) {
    int degree = path_degree(path);
    MuContext ctx(degree, side);
    long long measure = enclosed_measure(path, ctx.delta, side);
    if (measure < 0) throw InternalError("path encloses negative area with the boundary");
    return mu_rec(path, measure, ctx, vertex_mult, cache);
}

// ----------------------------------------------------- branch enumeration

// One terminating branch of the one-sided recursion: the cells it placed
// between the path and the boundary, with their multiplicity product.
template <class Value>
struct HalfBranch {
    std::vector<LatticeTriangle> triangles;
    std::vector<LatticeParallelogram> parallelograms;
    Value multiplicity;
};

template <class Value, class VertexFn>
void collect_branches(const LatticePath& points, const MuContext& ctx, long long measure,
                      const VertexFn& vertex_mult, std::vector<HalfBranch<Value>>& out,
                      HalfBranch<Value>& current) {
    if (points == ctx.delta) {
        out.push_back(current);
        return;
    }
    std::size_t k = ctx.first_turn(points);
    if (k == 0) return;  // dead branch, multiplicity zero

    auto child_measure = [&](const LatticePath& child) {
        long long m = enclosed_measure(child, ctx.delta, ctx.side);
        if (m < 0 || m >= measure)
            throw InternalError("path recursion failed to shrink the enclosed area");
        return m;
    };

    LatticeTriangle cell = LatticeTriangle{points[k - 1], points[k], points[k + 1]}.canonical();
    LatticePath shorter;
    shorter.reserve(points.size() - 1);
    for (std::size_t m = 0; m < points.size(); ++m)
        if (m != k) shorter.push_back(points[m]);
    {
        Value saved = current.multiplicity;
        current.triangles.push_back(cell);
        current.multiplicity = vertex_mult(cell) * current.multiplicity;
        collect_branches(shorter, ctx, child_measure(shorter), vertex_mult, out, current);
        current.triangles.pop_back();
        current.multiplicity = std::move(saved);
    }

    LatticePoint reflected = points[k - 1] + points[k + 1] - points[k];
    if (ctx.triangle.contains(reflected)) {
        LatticePath completed = points;
        completed[k] = reflected;
        LatticeParallelogram cellp =
            LatticeParallelogram{points[k - 1], points[k], points[k + 1], reflected}.canonical();
        current.parallelograms.push_back(cellp);
        collect_branches(completed, ctx, child_measure(completed), vertex_mult, out, current);
        current.parallelograms.pop_back();
    }
}

template <class Value, class VertexFn>
std::vector<HalfBranch<Value>> half_branches(const LatticePath& path, int degree, Side side,
                                             const VertexFn& vertex_mult) {
    MuContext ctx(degree, side);
    long long measure = enclosed_measure(path, ctx.delta, side);
    if (measure < 0) throw InternalError("path encloses negative area with the boundary");
    std::vector<HalfBranch<Value>> out;
    HalfBranch<Value> current;
    current.multiplicity = Semiring<Value>::one();
    collect_branches(path, ctx, measure, vertex_mult, out, current);
    return out;
}

// ------------------------------------------------------------ connectivity

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

// Ports are cell sides. A triangle joins its three sides in one vertex; a
// parallelogram wires each pair of opposite sides straight through. Interior
// subdivision edges glue the two coinciding ports.
bool cells_connected(const std::vector<LatticeTriangle>& triangles,
                     const std::vector<LatticeParallelogram>& parallelograms) {
    int ports = static_cast<int>(3 * triangles.size() + 4 * parallelograms.size());
    if (ports == 0) return true;
    UnionFind uf(ports);
    std::map<std::pair<LatticePoint, LatticePoint>, int> open_segment;
    int next = 0;
    auto add_side = [&](LatticePoint a, LatticePoint b) {
        int port = next++;
        if (b < a) std::swap(a, b);
        auto [it, inserted] = open_segment.try_emplace({a, b}, port);
        if (!inserted) {
            uf.unite(port, it->second);
            open_segment.erase(it);
        }
        return port;
    };
    for (const LatticeTriangle& t : triangles) {
        int s0 = add_side(t.a, t.b);
        int s1 = add_side(t.b, t.c);
        int s2 = add_side(t.c, t.a);
        uf.unite(s0, s1);
        uf.unite(s1, s2);
    }
    for (const LatticeParallelogram& p : parallelograms) {
        int s0 = add_side(p.a, p.b);
        int s1 = add_side(p.b, p.c);
        int s2 = add_side(p.c, p.d);
        int s3 = add_side(p.d, p.a);
        uf.unite(s0, s2);
        uf.unite(s1, s3);
    }
    int root = uf.find(0);
    for (int port = 1; port < ports; ++port)
        if (uf.find(port) != root) return false;
    return true;
}

// ------------------------------------------------------------- enumeration

unsigned long long binom_clamped(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    __int128 result = 1;
    for (int i = 1; i <= k; ++i) {
        result = result * (n - k + i) / i;
        if (result >= static_cast<__int128>(kCountLimit)) return kCountLimit;
    }
    return static_cast<unsigned long long>(result);
}

// Lexicographic r-combinations of {0,...,M-1}, with unranking so that
// workers can start mid-sequence.
struct CombinationCursor {
    int M = 0;
    int r = 0;
    std::vector<int> idx;

    static CombinationCursor at(int M, int r, unsigned long long rank) {
        CombinationCursor cur;
        cur.M = M;
        cur.r = r;
        cur.idx.resize(static_cast<std::size_t>(r));
        int x = 0;
        for (int p = 0; p < r; ++p) {
            while (true) {
                unsigned long long below = binom_clamped(M - 1 - x, r - 1 - p);
                if (rank < below) {
                    cur.idx[static_cast<std::size_t>(p)] = x;
                    ++x;
                    break;
                }
                rank -= below;
                ++x;
            }
        }
        return cur;
    }

    bool advance() {
        int p = r - 1;
        while (p >= 0 && idx[static_cast<std::size_t>(p)] == M - r + p) --p;
        if (p < 0) return false;
        ++idx[static_cast<std::size_t>(p)];
        for (int q = p + 1; q < r; ++q)
            idx[static_cast<std::size_t>(q)] = idx[static_cast<std::size_t>(q - 1)] + 1;
        return true;
    }
};

struct PathSpace {
    DegreeTriangle triangle;
    std::vector<LatticePoint> middles;  // interior of the path order
    int steps;                          // 3d - 1

    explicit PathSpace(int degree) : triangle(degree), steps(3 * degree - 1) {
        std::vector<LatticePoint> all = triangle.lattice_points();
        middles.assign(all.begin() + 1, all.end() - 1);
    }

    int choose() const { return steps - 1; }  // interior points per path

    LatticePath build(const CombinationCursor& cur) const {
        LatticePath path;
        path.reserve(static_cast<std::size_t>(steps) + 1);
        path.push_back({0, triangle.d});
        for (int x : cur.idx) path.push_back(middles[static_cast<std::size_t>(x)]);
        path.push_back({triangle.d, 0});
        return path;
    }
};

// Per-path fold shared by count, count_complex and count_real: cross the
// upper and lower branches, keep the connected combinations.
template <class Value, class VertexFn>
struct PathFold {
    int degree;
    VertexFn vertex_mult;

    struct Outcome {
        Value connected_sum;
        Value mu_plus;
        Value mu_minus;
    };

    Outcome run(const LatticePath& path) const {
        std::vector<HalfBranch<Value>> upper =
            half_branches<Value>(path, degree, Side::Plus, vertex_mult);
        std::vector<HalfBranch<Value>> lower =
            half_branches<Value>(path, degree, Side::Minus, vertex_mult);
        Outcome out{Semiring<Value>::zero(), Semiring<Value>::zero(), Semiring<Value>::zero()};
        for (const HalfBranch<Value>& up : upper) out.mu_plus = out.mu_plus + up.multiplicity;
        for (const HalfBranch<Value>& down : lower)
            out.mu_minus = out.mu_minus + down.multiplicity;
        std::vector<LatticeTriangle> triangles;
        std::vector<LatticeParallelogram> parallelograms;
        for (const HalfBranch<Value>& up : upper) {
            for (const HalfBranch<Value>& down : lower) {
                triangles.assign(up.triangles.begin(), up.triangles.end());
                triangles.insert(triangles.end(), down.triangles.begin(), down.triangles.end());
                parallelograms.assign(up.parallelograms.begin(), up.parallelograms.end());
                parallelograms.insert(parallelograms.end(), down.parallelograms.begin(),
                                      down.parallelograms.end());
                if (cells_connected(triangles, parallelograms))
                    out.connected_sum =
                        out.connected_sum + up.multiplicity * down.multiplicity;
            }
        }
        return out;
    }
};

}  // namespace

long long path_count_total(int degree) {
    PathSpace space(degree);
    unsigned long long total =
        binom_clamped(static_cast<int>(space.middles.size()), space.choose());
    if (total >= kCountLimit)
        throw ValidationError("path space of degree " + std::to_string(degree) +
                              " is too large to enumerate");
    return static_cast<long long>(total);
}

void for_each_path(int degree, const std::function<void(const LatticePath&)>& fn) {
    PathSpace space(degree);
    long long total = path_count_total(degree);
    if (total == 0) return;
    CombinationCursor cur =
        CombinationCursor::at(static_cast<int>(space.middles.size()), space.choose(), 0);
    do {
        fn(space.build(cur));
    } while (cur.advance());
}

std::vector<LatticePath> enumerate_paths(int degree) {
    std::vector<LatticePath> paths;
    paths.reserve(static_cast<std::size_t>(path_count_total(degree)));
    for_each_path(degree, [&](const LatticePath& path) { paths.push_back(path); });
    return paths;
}

// ------------------------------------------------------------ multiplicities

GwElement mu(const LatticePath& path, Side side, GwMuCache& cache) {
    return mu_checked<GwElement>(path, side, gw_vertex_mult, cache);
}

GwElement mu(const LatticePath& path, Side side) {
    GwMuCache cache;
    return mu(path, side, cache);
}

PathMultiplicity path_multiplicity(const LatticePath& path, GwMuCache& cache) {
    PathMultiplicity pm;
    pm.mu_plus = mu(path, Side::Plus, cache);
    pm.mu_minus = mu(path, Side::Minus, cache);
    pm.mu = pm.mu_plus * pm.mu_minus;
    return pm;
}

long long mu_complex(const LatticePath& path, Side side, IntMuCache& cache) {
    return mu_checked<long long>(path, side, complex_vertex_mult, cache);
}

long long mu_real(const LatticePath& path, Side side, IntMuCache& cache) {
    return mu_checked<long long>(path, side, real_vertex_mult, cache);
}

long long count_complex(int degree) {
    PathFold<long long, long long (*)(const LatticeTriangle&)> fold{degree,
                                                                    complex_vertex_mult};
    long long total = 0;
    for_each_path(degree, [&](const LatticePath& path) { total += fold.run(path).connected_sum; });
    return total;
}

long long count_real(int degree) {
    PathFold<long long, long long (*)(const LatticeTriangle&)> fold{degree, real_vertex_mult};
    long long total = 0;
    for_each_path(degree, [&](const LatticePath& path) { total += fold.run(path).connected_sum; });
    return total;
}

bool subdivision_connected(const DualSubdivision& cells) {
    return cells_connected(cells.triangles, cells.parallelograms);
}

CountResult count(int degree, const CountOptions& options) {
    PathSpace space(degree);
    long long total = path_count_total(degree);
    int workers = std::max(1, options.workers);
    if (static_cast<long long>(workers) > total)
        workers = std::max<int>(1, static_cast<int>(total));

    struct WorkerResult {
        GwElement quadratic;
        std::vector<std::pair<LatticePath, PathMultiplicity>> per_path;
    };
    std::vector<WorkerResult> results(static_cast<std::size_t>(workers));

    auto run_range = [&](long long lo, long long hi, WorkerResult& out) {
        if (lo >= hi) return;
        PathFold<GwElement, GwElement (*)(const LatticeTriangle&)> fold{degree, gw_vertex_mult};
        CombinationCursor cur = CombinationCursor::at(
            static_cast<int>(space.middles.size()), space.choose(),
            static_cast<unsigned long long>(lo));
        for (long long t = lo; t < hi; ++t) {
            LatticePath path = space.build(cur);
            auto outcome = fold.run(path);
            out.quadratic += outcome.connected_sum;
            if (options.keep_per_path) {
                PathMultiplicity pm;
                pm.mu_plus = std::move(outcome.mu_plus);
                pm.mu_minus = std::move(outcome.mu_minus);
                pm.mu = pm.mu_plus * pm.mu_minus;
                out.per_path.emplace_back(std::move(path), std::move(pm));
            }
            if (t + 1 < hi && !cur.advance())
                throw InternalError("path enumeration ended before its range");
        }
    };

    if (workers == 1) {
        run_range(0, total, results[0]);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            long long lo = static_cast<long long>(static_cast<__int128>(total) * w / workers);
            long long hi =
                static_cast<long long>(static_cast<__int128>(total) * (w + 1) / workers);
            threads.emplace_back(run_range, lo, hi, std::ref(results[static_cast<std::size_t>(w)]));
        }
        for (std::thread& th : threads) th.join();
    }

    CountResult result;
    result.degree = degree;
    for (WorkerResult& wr : results) {
        result.quadratic += wr.quadratic;
        result.per_path.insert(result.per_path.end(),
                               std::make_move_iterator(wr.per_path.begin()),
                               std::make_move_iterator(wr.per_path.end()));
    }
    result.complex_count = result.quadratic.rank();
    result.real_count = result.quadratic.signature();
    return result;
}

// --------------------------------------------------------- subdivisions

std::vector<PathSubdivision> possible_subdivisions(const LatticePath& path) {
    int degree = path_degree(path);
    std::vector<HalfBranch<GwElement>> upper =
        half_branches<GwElement>(path, degree, Side::Plus, gw_vertex_mult);
    std::vector<HalfBranch<GwElement>> lower =
        half_branches<GwElement>(path, degree, Side::Minus, gw_vertex_mult);
    std::vector<PathSubdivision> out;
    out.reserve(upper.size() * lower.size());
    for (const HalfBranch<GwElement>& up : upper) {
        for (const HalfBranch<GwElement>& down : lower) {
            PathSubdivision sub;
            sub.cells.triangles = up.triangles;
            sub.cells.triangles.insert(sub.cells.triangles.end(), down.triangles.begin(),
                                       down.triangles.end());
            sub.cells.parallelograms = up.parallelograms;
            sub.cells.parallelograms.insert(sub.cells.parallelograms.end(),
                                            down.parallelograms.begin(),
                                            down.parallelograms.end());
            sub.cells.canonicalize();
            sub.multiplicity = up.multiplicity * down.multiplicity;
            sub.connected = subdivision_connected(sub.cells);
            try {
                sub.cells.validate(degree);
            } catch (const ValidationError& err) {
                throw InternalError(std::string("subdivision from path recursion is invalid: ") +
                                    err.what());
            }
            out.push_back(std::move(sub));
        }
    }
    return out;
}

}  // namespace tropcount
