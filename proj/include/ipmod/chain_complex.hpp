#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ipmod/gf2.hpp"

namespace ipmod::chain {

using gf2::BitMatrix;
using gf2::BitVector;

/// Raised for malformed complexes and maps; carries the offending degree.
class chain_error : public std::invalid_argument {
public:
    chain_error(const std::string& what, int degree)
        : std::invalid_argument(what + " (degree " + std::to_string(degree) + ")"), degree_(degree) {}

    [[nodiscard]] int degree() const { return degree_; }

private:
    int degree_;
};

/// Finite chain complex over F2 graded by Z (period 0) or by Z/period.
///
/// The differential d_n maps C_n to C_{n-1}; it is stored as a dim(n-1) x dim(n) matrix.
/// Degrees are reduced modulo the period on every access, so a period-8 complex
/// answers dim(9) with dim(1).
class GradedComplex {
public:
    explicit GradedComplex(int period = 0);

    [[nodiscard]] int period() const { return period_; }
    [[nodiscard]] int normalize(int degree) const;

    [[nodiscard]] std::size_t dim(int degree) const;
    void set_dim(int degree, std::size_t n);

    /// d_n : C_n -> C_{n-1}; a zero matrix of the right shape when unset.
    [[nodiscard]] BitMatrix differential(int degree) const;
    void set_differential(int degree, BitMatrix m);

    /// Normalized degrees with nonzero dimension, ascending.
    [[nodiscard]] std::vector<int> support() const;
    [[nodiscard]] std::size_t total_dim() const;

    /// Throws chain_error naming the first degree where d o d != 0 or a shape is wrong.
    void validate() const;

private:
    int period_;
    std::map<int, std::size_t> dims_;
    std::map<int, BitMatrix> diffs_;
};

/// Degree-`degree` linear map between graded spaces: block(n) sends C_n to C'_{n+degree}.
struct GradedMap {
    int degree = 0;
    std::map<int, BitMatrix> blocks;
};

/// Block for source degree n, zero-filled to the shapes dictated by the two complexes.
BitMatrix block(const GradedMap& f, const GradedComplex& source, const GradedComplex& target, int n);

/// Shape check: every stored block must match dim(target, n+degree) x dim(source, n).
void check_shapes(const GradedMap& f, const GradedComplex& source, const GradedComplex& target);

GradedMap zero_map(int degree);
GradedMap identity_map(const GradedComplex& c);

/// g o f where f: A -> B and g: B -> C.
GradedMap compose(const GradedMap& g, const GradedMap& f, const GradedComplex& a, const GradedComplex& b,
                  const GradedComplex& c);

/// f + g for two maps A -> B of the same degree (mod the period).
GradedMap add(const GradedMap& f, const GradedMap& g, const GradedComplex& a, const GradedComplex& b);

bool is_zero(const GradedMap& f, const GradedComplex& a, const GradedComplex& b);
bool equal(const GradedMap& f, const GradedMap& g, const GradedComplex& a, const GradedComplex& b);

/// d' f + f d, a map of degree f.degree - 1.
GradedMap boundary_of(const GradedMap& f, const GradedComplex& source, const GradedComplex& target);

struct ChainMap {
    GradedComplex source;
    GradedComplex target;
    GradedMap map;
};

/// First source degree where d'f + fd != 0, or nullopt for a chain map.
std::optional<int> chain_map_violation(const ChainMap& f);

/// Homology in one degree with a canonical basis.
///
/// The columns of `cycles` span ker(d_n): the first `boundary_rank` columns are the reduced
/// basis of im(d_{n+1}); the remaining `dimension` columns represent homology classes.
struct Homology {
    int degree = 0;
    std::size_t dimension = 0;
    std::size_t boundary_rank = 0;
    BitMatrix cycles;

    [[nodiscard]] BitVector representative(std::size_t k) const { return cycles.column(boundary_rank + k); }
    /// Class coordinates of a cycle. Throws std::invalid_argument when z is not a cycle.
    [[nodiscard]] BitVector coordinates(const BitVector& z) const;
};

Homology homology(const GradedComplex& c, int degree);

/// Homology dimensions over the support (or over one period for periodic complexes).
std::map<int, std::size_t> homology_dims(const GradedComplex& c);

/// Mapping cone of f: A -> B of degree a, with Cone_n = A_n (+) B_{n+a+1} and
/// differential [[d_A, 0], [f, d_B]]. Throws chain_error if f is not a chain map.
GradedComplex cone(const ChainMap& f);

/// B -> Cone(f), y |-> (0, y); degree -a-1.
GradedMap cone_inclusion(const ChainMap& f);
/// Cone(f) -> A, (x, y) |-> x; degree 0.
GradedMap cone_projection(const ChainMap& f);

/// Matrix of f_* : H_n(A) -> H_{n+a}(B) in the canonical homology bases.
BitMatrix induced_map(const ChainMap& f, int degree);

/// Solves d' K + K d = r for K of degree r.degree + 1, or nullopt when r is not null-homotopic.
std::optional<GradedMap> find_nullhomotopy(const GradedComplex& source, const GradedComplex& target,
                                           const GradedMap& r);

/// Basis of the space of chain maps source -> target of the given degree.
std::vector<GradedMap> chain_map_basis(const GradedComplex& source, const GradedComplex& target, int degree);

GradedComplex direct_sum(const GradedComplex& a, const GradedComplex& b);

/// Folds a Z/period grading onto Z/new_period (new_period must divide period).
GradedComplex collapse(const GradedComplex& c, int new_period);

}  // namespace ipmod::chain
