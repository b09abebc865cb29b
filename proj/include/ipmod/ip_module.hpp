#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ipmod/persistence.hpp"
#include "ipmod/rational.hpp"

namespace ipmod {

/// 8-periodic persistence module presented by its barcode.
class IPModule {
public:
    IPModule() = default;
    explicit IPModule(Barcode barcode) : barcode_(std::move(barcode)) {}

    [[nodiscard]] const Barcode& barcode() const { return barcode_; }
    /// dim F_r A_d.
    [[nodiscard]] std::size_t rank(const Rational& r, int d) const { return barcode_.rank(r, d); }
    /// Rank of i_r^{r2} : F_r A_d -> F_{r2} A_d.
    [[nodiscard]] std::size_t rank(const Rational& r, const Rational& r2, int d) const;
    /// dim A_d.
    [[nodiscard]] std::size_t rank_at_infinity(int d) const { return barcode_.rank_at_infinity(d); }
    /// True when A_d = 0 in every degree.
    [[nodiscard]] bool is_zero() const;

private:
    Barcode barcode_;
};

/// Least birth of an infinite bar in degree d, or +inf when A_d = 0.
ExtendedRational kappa(const IPModule& a, int d);

/// min over d of kappa(d) - d/8, taken over one period; +inf for the zero module.
ExtendedRational ell(const IPModule& a);

/// Symbolic nonnegative slack term; `strict` records that it is known to be positive.
struct Slack {
    std::string name;
    bool strict = false;
    friend bool operator==(const Slack&, const Slack&) = default;
};

/// Degree D and level L = level_base - (sum of slack) of a morphism of IP-modules.
struct IPMorphismMeta {
    int degree = 0;
    Rational level_base{0};
    std::vector<Slack> slack;
    bool injective_all_degrees = false;
    std::optional<std::set<int>> injective_degrees;

    /// L - D/8 without the slack.
    [[nodiscard]] Rational offset() const { return level_base - Rational(degree, 8); }
    [[nodiscard]] bool has_strict_slack() const;
    /// "1/4 - eta(K)", "0/1", ...
    [[nodiscard]] std::string level_text() const;

    friend bool operator==(const IPMorphismMeta&, const IPMorphismMeta&) = default;
};

/// Degrees and levels add, slack terms accumulate, injectivity is the conjunction.
IPMorphismMeta compose(const IPMorphismMeta& f, const IPMorphismMeta& g);

enum class Relation { le, lt, eq };

std::string to_string(Relation r);

/// The statement ell(target) REL ell(source) + offset, with the slack already discarded
/// (slack only ever tightens the bound and is reflected by `relation` being strict).
struct EllBound {
    Relation relation = Relation::le;
    Rational offset{0};
    std::vector<Slack> slack;

    /// Upper bound on ell(target) implied by a known ell(source).
    [[nodiscard]] ExtendedRational evaluate(const ExtendedRational& source_ell) const {
        return source_ell.plus(offset);
    }
    /// Checks a pair of actual values against the statement.
    [[nodiscard]] bool holds(const ExtendedRational& target_ell, const ExtendedRational& source_ell) const;
};

/// Single-morphism bound ell(B) <= ell(A) + (L - D/8). Strict when some slack term is strict
/// and ell(A) is finite. Throws hypothesis_error unless injective in all degrees.
EllBound ell_bound_single(const IPMorphismMeta& f, bool source_finite);

/// Two-morphism bound ell(B) <= ell(A) + max(L1 - D1/8, L2 - D2/8) for jointly injective maps.
/// Strict when every morphism attaining the maximum carries strict slack and ell(A) is finite.
EllBound ell_bound_pair(const IPMorphismMeta& f1, const IPMorphismMeta& f2, bool jointly_injective,
                        bool source_finite);

}  // namespace ipmod
