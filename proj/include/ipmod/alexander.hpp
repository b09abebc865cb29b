#pragma once

#include <array>
#include <map>
#include <string>
#include <type_traits>
#include <vector>

namespace ipmod {

/// Integer polynomial in the three unknowns a, b, c of the genus-two template.
class SymPoly {
public:
    using Monomial = std::array<int, 3>;

    SymPoly() = default;
    SymPoly(long long constant);  // NOLINT(google-explicit-constructor)
    static SymPoly var(int which);

    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] const std::map<Monomial, long long>& terms() const { return terms_; }
    [[nodiscard]] long long coefficient(const Monomial& m) const;
    [[nodiscard]] int degree_in(int which) const;
    [[nodiscard]] long long evaluate(long long a, long long b, long long c) const;
    /// Replaces variable `which` by `value`.
    [[nodiscard]] SymPoly substitute(int which, const SymPoly& value) const;
    [[nodiscard]] std::string to_string() const;

    SymPoly& operator+=(const SymPoly& o);
    SymPoly& operator-=(const SymPoly& o);
    friend SymPoly operator+(SymPoly x, const SymPoly& y) { return x += y; }
    friend SymPoly operator-(SymPoly x, const SymPoly& y) { return x -= y; }
    friend SymPoly operator-(const SymPoly& x) { return SymPoly() - x; }
    friend SymPoly operator*(const SymPoly& x, const SymPoly& y);
    friend bool operator==(const SymPoly&, const SymPoly&) = default;

private:
    void add_term(const Monomial& m, long long c);
    std::map<Monomial, long long> terms_;
};

inline constexpr int var_a = 0;
inline constexpr int var_b = 1;
inline constexpr int var_c = 2;

/// Laurent polynomial in t with coefficients in R (long long or SymPoly). Zero coefficients are
/// never stored.
template <class R>
class BasicLaurent {
public:
    BasicLaurent() = default;
    explicit BasicLaurent(std::map<int, R> coeffs) {
        for (auto& [k, v] : coeffs) {
            add(k, v);
        }
    }
    static BasicLaurent constant(const R& c) { return BasicLaurent({{0, c}}); }

    [[nodiscard]] const std::map<int, R>& coefficients() const { return coeffs_; }
    [[nodiscard]] R coefficient(int k) const {
        const auto it = coeffs_.find(k);
        return it == coeffs_.end() ? R(0) : it->second;
    }
    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    [[nodiscard]] bool is_symmetric() const {
        for (const auto& [k, v] : coeffs_) {
            if (!(coefficient(-k) == v)) {
                return false;
            }
        }
        return true;
    }
    [[nodiscard]] R at_one() const { return weighted([](int) { return 1LL; }); }
    [[nodiscard]] R at_minus_one() const { return weighted([](int k) { return k % 2 == 0 ? 1LL : -1LL; }); }
    [[nodiscard]] R first_derivative_at_one() const { return weighted([](int k) { return static_cast<long long>(k); }); }
    [[nodiscard]] R second_derivative_at_one() const {
        return weighted([](int k) { return static_cast<long long>(k) * (k - 1); });
    }

    void add(int k, const R& v) {
        R sum = coefficient(k) + v;
        if (is_zero_coeff(sum)) {
            coeffs_.erase(k);
        } else {
            coeffs_[k] = sum;
        }
    }

    friend BasicLaurent operator+(BasicLaurent x, const BasicLaurent& y) {
        for (const auto& [k, v] : y.coeffs_) {
            x.add(k, v);
        }
        return x;
    }
    friend BasicLaurent operator-(BasicLaurent x, const BasicLaurent& y) {
        for (const auto& [k, v] : y.coeffs_) {
            x.add(k, R(0) - v);
        }
        return x;
    }
    friend BasicLaurent operator*(const BasicLaurent& x, const BasicLaurent& y) {
        BasicLaurent out;
        for (const auto& [i, u] : x.coeffs_) {
            for (const auto& [j, v] : y.coeffs_) {
                out.add(i + j, u * v);
            }
        }
        return out;
    }
    friend bool operator==(const BasicLaurent&, const BasicLaurent&) = default;

private:
    static bool is_zero_coeff(const R& r) {
        if constexpr (std::is_same_v<R, SymPoly>) {
            return r.is_zero();
        } else {
            return r == 0;
        }
    }
    template <class W>
    R weighted(W w) const {
        R total(0);
        for (const auto& [k, v] : coeffs_) {
            total = total + v * R(w(k));
        }
        return total;
    }

    std::map<int, R> coeffs_;
};

using LaurentPoly = BasicLaurent<long long>;
using SymLaurent = BasicLaurent<SymPoly>;

std::string to_string(const LaurentPoly& p);
std::string to_string(const SymLaurent& p);

struct GenusTwoSymmetric {
    long long a = 0;
    long long b = 0;
    long long c = 0;

    [[nodiscard]] LaurentPoly poly() const;
    friend auto operator<=>(const GenusTwoSymmetric&, const GenusTwoSymmetric&) = default;
};

/// a t^2 + b t + c + b t^-1 + a t^-2 with symbolic a, b, c.
SymLaurent genus_two_template();

inline long long second_derivative_at_one(const LaurentPoly& p) { return p.second_derivative_at_one(); }

/// P(t^{1/2}) P(-t^{1/2}) rewritten in integer powers of t. Throws std::invalid_argument unless
/// the input is symmetric.
template <class R>
BasicLaurent<R> branched_cover_poly(const BasicLaurent<R>& p);

extern template LaurentPoly branched_cover_poly(const LaurentPoly&);
extern template SymLaurent branched_cover_poly(const SymLaurent&);

struct CosmeticBranch {
    int sign = 1;                   // Delta(1) = sign
    SymPoly c_in_a;                 // c = 6a + sign
    SymPoly cover_second_derivative;  // after substituting b and c
    GenusTwoSymmetric solution;
};

struct CosmeticSolution {
    SymPoly second_derivative;  // 8a + 2b
    SymPoly b_in_a;             // -4a
    SymPoly value_at_one;       // after substituting b
    std::vector<CosmeticBranch> branches;
    /// Both signs of Delta(1).
    std::vector<GenusTwoSymmetric> raw;
    /// The Delta(1) = 1 representative.
    GenusTwoSymmetric normalized;
};

/// Imposes Delta''(1) = 0, |Delta(1)| = 1 and vanishing second derivative of the cover polynomial
/// on the genus-two template, solving each constraint symbolically.
CosmeticSolution cosmetic_solve();

/// Every (a, b, c) with |a|, |b|, |c| <= bound meeting the three constraints, by direct evaluation.
std::vector<GenusTwoSymmetric> cosmetic_search(long long bound);

/// Lift of the surgery slope +-2 to the branched double cover. Throws std::invalid_argument otherwise.
int double_cover_slope(int slope);

}  // namespace ipmod
