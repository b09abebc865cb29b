#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ipmod/ip_module.hpp"
#include "ipmod/rational.hpp"

namespace ipmod {

enum class MiddleEnd { s3, rp3 };

/// Homological data of a cobordism W with bundle class c, possibly with a family of metrics.
struct CobordismTopology {
    int b1 = 0;
    int bplus = 0;
    Rational c_squared{0};
    bool simply_connected = false;
    int family_dim = 0;
    std::vector<MiddleEnd> middle_ends;
    std::string slack_name = "eta";
};

/// D = family_dim - 2c^2, level = -c^2/4 - eta with eta > 0 iff simply connected.
/// Throws hypothesis_error unless b1 = b+ = 0, std::invalid_argument when D is not an integer.
IPMorphismMeta degree_level(const CobordismTopology& t);

/// Topological energy -c^2/4 + cs(from) - cs(to).
Rational energy_relation(const Rational& c_squared, const Rational& cs_from, const Rational& cs_to);

/// Total index i(a) + 3 + (-2c^2 - 3) - i(a') = i(a) - 2c^2 - i(a'). Throws when -2c^2 is not an integer.
int index_additivity(int i_alpha, const Rational& c_squared, int i_alpha_prime);

enum class FlatLimit { central, abelian, irreducible };

/// Stabilizer dimension h0: 3, 1, 0.
int stabilizer_dim(FlatLimit kind);

/// e8 - 3(1 + b+) + (1/2) sum (3 - h0) over the middle-end limits.
/// Only central and abelian limits are accepted (the rho correction is known to vanish only there).
Rational asd_index(const Rational& e8, int bplus, const std::vector<FlatLimit>& ends);

struct NReducible {
    int n = 0;
    Rational e8{0};
    Rational index{0};
};

struct NReducibleTable {
    std::vector<NReducible> rows;
    /// Position of the least index in `rows`; rows.size() when empty.
    std::size_t minimum = 0;
    bool unique_minimum = false;
};

/// Reducibles {n c, (1-n) c} on N for n in [n_from, n_to]: e8 = (2n-1)^2 (-2 c_self), ends central, central, abelian.
NReducibleTable reducibles_on_N(const Rational& c_self, int n_from, int n_to);

enum class Scenario {
    irreducible_pieces_reducible_limit,
    reducible_unbroken_bplus0,
    reducible_unbroken_bplus1_rp3,
    reducible_unbroken,
    reducible_glued_to_cylinders,
    intermediate_reducible_limit,
    intermediate_one_reducible,
    intermediate_both_reducible,
    intermediate_split,
    middle_end_s3,
    middle_end_rp3,
    middle_end_reducible_piece,
    pentagon_interior,
    pentagon_s3_face,
    pentagon_intermediate_face,
    pentagon_rp3_face,
    pentagon_s2xs1_face,
};

Scenario parse_scenario(std::string_view name);
std::string to_string(Scenario s);
std::vector<Scenario> all_scenarios();

struct IndexTerm {
    std::string reason;
    int value = 0;
};

/// Lower bound i(A) >= bound assembled from component bounds.
/// When `strict_sum` is set the terms bound i(A) strictly from below, so bound = sum + 1.
struct IndexBound {
    Scenario scenario{};
    std::vector<IndexTerm> terms;
    bool strict_sum = false;
    int bound = 0;
};

/// `family_dim` is used by irreducible_pieces_reducible_limit only (dim G = i - j - 1).
IndexBound broken_index_bound(Scenario s, int family_dim = 1);

}  // namespace ipmod
