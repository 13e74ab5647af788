#pragma once

#include <functional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tropcount/geometry.hpp"
#include "tropcount/gw.hpp"
#include "tropcount/multiplicity.hpp"

namespace tropcount {

// Enumeration of the increasing lattice paths of 3d-1 steps through the
// degree triangle, the recursive positive/negative multiplicities, the
// resulting counts, and the Newton subdivisions each path can carry.

enum class Side { Plus, Minus };

struct PathMultiplicity {
    GwElement mu_plus;
    GwElement mu_minus;
    GwElement mu;  // mu_plus * mu_minus

    bool operator==(const PathMultiplicity&) const = default;
};

struct CountResult {
    int degree = 0;
    GwElement quadratic;
    long long complex_count = 0;  // rank(quadratic)
    long long real_count = 0;     // signature(quadratic)
    std::vector<std::pair<LatticePath, PathMultiplicity>> per_path;

    bool operator==(const CountResult&) const = default;
};

// Memo for the recursive multiplicities, keyed by (point sequence, side).
// Bounded: the side map is dropped when it outgrows max_entries.
template <class Value>
class MuCache {
public:
    explicit MuCache(std::size_t max_entries = std::size_t{1} << 20)
        : max_entries_(max_entries) {}

    const Value* find(const std::string& key, Side side) const {
        const auto& map = side == Side::Plus ? plus_ : minus_;
        auto it = map.find(key);
        return it == map.end() ? nullptr : &it->second;
    }

    void store(const std::string& key, Side side, const Value& value) {
        auto& map = side == Side::Plus ? plus_ : minus_;
        if (map.size() >= max_entries_) map.clear();
        map.emplace(key, value);
    }

private:
    std::size_t max_entries_;
    std::unordered_map<std::string, Value> plus_;
    std::unordered_map<std::string, Value> minus_;
};

using GwMuCache = MuCache<GwElement>;
using IntMuCache = MuCache<long long>;

// All increasing paths of exactly 3d-1 steps from (0,d) to (d,0), in
// lexicographic order of their point sequences.
std::vector<LatticePath> enumerate_paths(int degree);
void for_each_path(int degree, const std::function<void(const LatticePath&)>& fn);
long long path_count_total(int degree);

// Recursive quadratically enriched multiplicity of one side.
GwElement mu(const LatticePath& path, Side side);
GwElement mu(const LatticePath& path, Side side, GwMuCache& cache);

PathMultiplicity path_multiplicity(const LatticePath& path, GwMuCache& cache);

// Integer recursions with complex (area) and real (mod-4) vertex
// multiplicities; an independent route to rank and signature.
long long mu_complex(const LatticePath& path, Side side, IntMuCache& cache);
long long mu_real(const LatticePath& path, Side side, IntMuCache& cache);
long long count_complex(int degree);
long long count_real(int degree);

struct CountOptions {
    int workers = 1;
    bool keep_per_path = false;
};

// Whether the tropical curve dual to the subdivision is connected.
// Parallelogram cells are crossings of two independent strands, so the two
// pairs of opposite sides are wired separately.
bool subdivision_connected(const DualSubdivision& cells);

// Sum over all paths of the multiplicities of their connected Newton
// subdivisions, with rank and signature specializations. Disconnected
// subdivisions are dual to reducible curves (they first occur at d = 4,
// e.g. cubic + line) and do not count toward the rational invariants.
CountResult count(int degree, const CountOptions& options = {});

// One Newton subdivision a path can carry, with its GW multiplicity.
struct PathSubdivision {
    DualSubdivision cells;
    GwElement multiplicity;
    bool connected = true;
};

// Every terminating branch of the two recursions, upper cells crossed with
// lower cells. The multiplicities sum to mu_plus * mu_minus.
std::vector<PathSubdivision> possible_subdivisions(const LatticePath& path);

}  // namespace tropcount
