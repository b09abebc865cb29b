#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ipmod/chain_complex.hpp"

namespace ipmod {

using chain::GradedComplex;
using chain::GradedMap;

/// Three complexes C_i (indices mod 3) with maps f_i: C_i -> C_{i-1}, g_i: C_i -> C_{i-2},
/// h_i, q_i: C_i -> C_{i-3} = C_i. Accessors take any integer index.
struct TriangleData {
    std::array<GradedComplex, 3> complexes;
    std::array<GradedMap, 3> f_maps;
    std::array<GradedMap, 3> g_maps;
    std::array<GradedMap, 3> h_maps;
    /// Identity when absent.
    std::optional<std::array<GradedMap, 3>> q_maps;
    /// K_i with dK + Kd = q_i + id.
    std::optional<std::array<GradedMap, 3>> homotopies;

    static int slot(int i) { return ((i % 3) + 3) % 3; }
    [[nodiscard]] const GradedComplex& C(int i) const { return complexes[slot(i)]; }
    [[nodiscard]] const GradedMap& f(int i) const { return f_maps[slot(i)]; }
    [[nodiscard]] const GradedMap& g(int i) const { return g_maps[slot(i)]; }
    [[nodiscard]] const GradedMap& h(int i) const { return h_maps[slot(i)]; }
    [[nodiscard]] GradedMap q(int i) const;
    [[nodiscard]] int period() const { return complexes[0].period(); }
};

/// Shapes, periods and degree bookkeeping. Throws validation_error before any identity is checked.
void check_structure(const TriangleData& t);

struct IdentityReport {
    bool ok = true;
    /// "d^2 = 0", "df + fd = 0", "dg + ff + gd = 0", "dh + fg + gf + hd = q", "q ~ id".
    std::string failed_identity;
    int index = 0;
    int degree = 0;
    /// How q ~ id was established: "q is the identity", "supplied homotopy", "solved homotopy".
    std::string homotopy_route;
    std::optional<std::array<GradedMap, 3>> homotopies;
};

IdentityReport verify_identities(const TriangleData& t);

struct VertexReport {
    int index = 0;
    std::map<int, std::size_t> homology;       // H(C_i) by degree
    std::map<int, std::size_t> cone_homology;  // H(Cone(f_{i-1})) by degree
    bool quasi_isomorphism = true;
    int failing_degree = 0;
};

struct TriangleVerdict {
    bool refused = false;
    std::string reason;
    IdentityReport identities;
    /// Comparison (f_i, g_i): C_i -> Cone(f_{i-1}) for i = -1, 0, 1.
    std::vector<VertexReport> vertices;
    bool detected = false;
    /// Rank of (f_i)_* per source degree, i = -1, 0, 1.
    std::array<std::map<int, std::size_t>, 3> f_ranks;
    bool exact = false;
    std::vector<std::string> notes;
};

/// Builds each cone, checks the comparison maps are homology isomorphisms, and reports the
/// ranks of the induced exact triangle. Refuses unless verify_identities succeeds.
TriangleVerdict detect_triangle(const TriangleData& t);

/// Dimensions indexed by Z/period.
struct GradedDimVector {
    int period = 8;
    std::vector<std::size_t> dims = std::vector<std::size_t>(8, 0);

    GradedDimVector() = default;
    GradedDimVector(int p, std::vector<std::size_t> d);
    [[nodiscard]] std::size_t operator()(int d) const;
    [[nodiscard]] std::size_t total() const;
    /// Alternating sum over one period (period must be even).
    [[nodiscard]] long long euler_characteristic() const;
    friend bool operator==(const GradedDimVector&, const GradedDimVector&) = default;
};

struct ExactnessReport {
    bool exact = true;
    std::vector<std::string> failures;
    std::vector<bool> injective;
    std::vector<bool> surjective;
};

/// Maps on homology V_j -> V_{j+1} (j = 0, 1 and optionally 2 back to V_0), each a GradedMap whose
/// degree is the grading shift. Checks image = kernel wherever a map enters and leaves a vertex.
ExactnessReport exactness_check(const std::array<GradedDimVector, 3>& vertices, const std::vector<GradedMap>& maps);

/// dims(d) = sum_{i < |n|} base(d + 2i sign(n)). Throws std::invalid_argument for n = 0.
GradedDimVector surgery_ranks(int n, const GradedDimVector& base);

/// Folds a Z/8 vector onto Z/4.
GradedDimVector collapse_to_4(const GradedDimVector& v);

/// out(m) = collapse_to_4(v)(m + 3).
GradedDimVector degree_shift_bridge(const GradedDimVector& v);

struct TriangleGeneratorOptions {
    std::size_t max_total_dim = 24;
    std::vector<int> periods{1, 4, 8, 0};
};

/// A random TriangleData satisfying all four identities with q homotopic to the identity, built
/// from a cone triangle by adding contractible summands, changing bases, perturbing maps by
/// null-homotopic terms and re-solving g and h. Unsolvable instances are discarded and regenerated.
TriangleData generate_triangle(std::mt19937_64& rng, const TriangleGeneratorOptions& options = {});

/// Random complex with at most `max_dim` generators; d^2 = 0 by construction.
GradedComplex random_complex(std::mt19937_64& rng, int period, std::size_t max_dim);

/// Manifest-style JSON: dimension tables plus nonzero entries as [row, col] pairs.
TriangleData parse_triangle(const std::string& text);
std::string dump_triangle(const TriangleData& t);

}  // namespace ipmod
