#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ipmod/rational.hpp"

namespace ipmod {

/// One generator representative; its translates t^k sit at grading + 8k and cs + k.
struct FlatGenerator {
    std::string label;
    int grading = 0;
    Rational cs{0};
};

/// Strictly filtered complex over F2 with the (grading + 8, cs + 1) periodicity.
///
/// Only representatives are stored. Boundary pairs connect representatives and the
/// differential commutes with t, so d(t^k x) = t^k d(x).
class FilteredComplex {
public:
    FilteredComplex() = default;

    /// Throws validation_error on duplicate labels, unknown labels, duplicate pairs,
    /// grading rule violations, non-strict filtration, or d o d != 0.
    FilteredComplex(std::vector<FlatGenerator> generators, std::vector<std::pair<std::string, std::string>> boundary);

    [[nodiscard]] const std::vector<FlatGenerator>& generators() const { return generators_; }
    [[nodiscard]] const std::vector<std::pair<std::string, std::string>>& boundary() const { return boundary_; }
    [[nodiscard]] std::size_t size() const { return generators_.size(); }
    [[nodiscard]] bool empty() const { return generators_.empty(); }

    /// Indices of the generators appearing in d(generator i).
    [[nodiscard]] const std::vector<std::size_t>& targets(std::size_t i) const { return targets_[i]; }
    [[nodiscard]] std::size_t index_of(const std::string& label) const;

private:
    std::vector<FlatGenerator> generators_;
    std::vector<std::pair<std::string, std::string>> boundary_;
    std::vector<std::vector<std::size_t>> targets_;
};

/// Half-open interval [birth, death) in one degree.
struct Bar {
    int degree = 0;
    Rational birth{0};
    ExtendedRational death = ExtendedRational::infinity();

    [[nodiscard]] bool infinite() const { return death.is_positive_infinity(); }
    [[nodiscard]] bool contains(const Rational& r) const { return birth <= r && ExtendedRational(r) < death; }
    friend bool operator==(const Bar& a, const Bar& b) = default;
};

/// Barcode stored on the window of degrees 0..7; other degrees follow by the shift rule.
class Barcode {
public:
    Barcode() = default;
    /// Bars in any degree are folded into the window. Throws std::invalid_argument unless birth < death.
    explicit Barcode(std::vector<Bar> bars);

    [[nodiscard]] const std::vector<Bar>& window() const { return bars_; }
    /// Bars in degree d = w + 8k: the window bars of degree w moved up by k.
    [[nodiscard]] std::vector<Bar> bars(int d) const;
    [[nodiscard]] bool empty() const { return bars_.empty(); }

    /// dim F_r A_d.
    [[nodiscard]] std::size_t rank(const Rational& r, int d) const;
    /// dim A_d, the number of infinite bars in degree d.
    [[nodiscard]] std::size_t rank_at_infinity(int d) const;

    friend bool operator==(const Barcode& a, const Barcode& b) = default;

private:
    std::vector<Bar> bars_;
};

/// Splits d = w + 8k with w in 0..7.
std::pair<int, int> window_split(int d);

/// Standard column reduction over all generators ordered by (cs, label).
Barcode barcode(const FilteredComplex& c);

/// dim of the degree-d homology of the subcomplex spanned by translates with cs <= r.
std::size_t sublevel_homology(const FilteredComplex& c, const Rational& r, int d);

/// Rank of H_d(F_r) -> H_d(F_r2) computed directly from cycles and boundaries.
std::size_t direct_induced_rank(const FilteredComplex& c, const Rational& r, const Rational& r2, int d);

/// Number of bars in degree d containing both r and r2, i.e. the rank of i_r^{r2}.
/// Throws std::invalid_argument when r > r2.
std::size_t connecting_rank(const Barcode& b, const Rational& r, const Rational& r2, int d);

/// Sorted cs values of the translates in gradings d-1, d, d+1, preceded by a level below all of them.
std::vector<Rational> critical_values(const FilteredComplex& c, int d);

}  // namespace ipmod
