#include "ipmod/alexander.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ipmod {

SymPoly::SymPoly(long long constant) {
    if (constant != 0) {
        terms_[{0, 0, 0}] = constant;
    }
}

SymPoly SymPoly::var(int which) {
    if (which < 0 || which > 2) {
        throw std::invalid_argument("SymPoly has variables 0, 1, 2 only");
    }
    SymPoly p;
    Monomial m{0, 0, 0};
    m[static_cast<std::size_t>(which)] = 1;
    p.terms_[m] = 1;
    return p;
}

void SymPoly::add_term(const Monomial& m, long long c) {
    const auto v = (terms_.count(m) ? terms_[m] : 0) + c;
    if (v == 0) {
        terms_.erase(m);
    } else {
        terms_[m] = v;
    }
}

long long SymPoly::coefficient(const Monomial& m) const {
    const auto it = terms_.find(m);
    return it == terms_.end() ? 0 : it->second;
}

int SymPoly::degree_in(int which) const {
    int d = 0;
    for (const auto& [m, c] : terms_) {
        d = std::max(d, m[static_cast<std::size_t>(which)]);
    }
    return d;
}

long long SymPoly::evaluate(long long a, long long b, long long c) const {
    const std::array<long long, 3> x{a, b, c};
    long long total = 0;
    for (const auto& [m, coeff] : terms_) {
        long long term = coeff;
        for (std::size_t v = 0; v < 3; ++v) {
            for (int e = 0; e < m[v]; ++e) {
                term *= x[v];
            }
        }
        total += term;
    }
    return total;
}

SymPoly SymPoly::substitute(int which, const SymPoly& value) const {
    const auto w = static_cast<std::size_t>(which);
    SymPoly out;
    for (const auto& [m, coeff] : terms_) {
        Monomial rest = m;
        rest[w] = 0;
        SymPoly term;
        term.terms_[rest] = coeff;
        for (int e = 0; e < m[w]; ++e) {
            term = term * value;
        }
        out += term;
    }
    return out;
}

std::string SymPoly::to_string() const {
    if (terms_.empty()) {
        return "0";
    }
    static constexpr std::array<char, 3> names{'a', 'b', 'c'};
    std::ostringstream os;
    bool first = true;
    // Highest total degree first, then a before b before c.
    std::vector<std::pair<Monomial, long long>> ordered(terms_.begin(), terms_.end());
    std::stable_sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) {
        const int dx = x.first[0] + x.first[1] + x.first[2];
        const int dy = y.first[0] + y.first[1] + y.first[2];
        if (dx != dy) {
            return dx > dy;
        }
        return x.first > y.first;
    });
    for (const auto& [m, coeff] : ordered) {
        const bool constant = m[0] + m[1] + m[2] == 0;
        const long long mag = coeff < 0 ? -coeff : coeff;
        if (first) {
            os << (coeff < 0 ? "-" : "");
        } else {
            os << (coeff < 0 ? " - " : " + ");
        }
        first = false;
        if (mag != 1 || constant) {
            os << mag;
        }
        for (std::size_t v = 0; v < 3; ++v) {
            if (m[v] > 0) {
                os << names[v];
                if (m[v] > 1) {
                    os << '^' << m[v];
                }
            }
        }
    }
    return os.str();
}

SymPoly& SymPoly::operator+=(const SymPoly& o) {
    for (const auto& [m, c] : o.terms_) {
        add_term(m, c);
    }
    return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& o) {
    for (const auto& [m, c] : o.terms_) {
        add_term(m, -c);
    }
    return *this;
}

SymPoly operator*(const SymPoly& x, const SymPoly& y) {
    SymPoly out;
    for (const auto& [m, c] : x.terms_) {
        for (const auto& [n, d] : y.terms_) {
            out.add_term({m[0] + n[0], m[1] + n[1], m[2] + n[2]}, c * d);
        }
    }
    return out;
}

namespace {

template <class R>
std::string render(const BasicLaurent<R>& p, std::string (*coeff)(const R&)) {
    if (p.is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (auto it = p.coefficients().rbegin(); it != p.coefficients().rend(); ++it) {
        if (!first) {
            os << " + ";
        }
        first = false;
        os << coeff(it->second);
        if (it->first != 0) {
            os << " t^" << it->first;
        }
    }
    return os.str();
}

std::string int_coeff(const long long& c) { return std::to_string(c); }
std::string sym_coeff(const SymPoly& c) { return "(" + c.to_string() + ")"; }

// Solves the linear equation e = 0 for variable `which`, requiring an integer expression.
SymPoly solve_linear(const SymPoly& e, int which) {
    if (e.degree_in(which) != 1) {
        throw std::logic_error("constraint is not linear in the solved variable");
    }
    SymPoly::Monomial unit{0, 0, 0};
    unit[static_cast<std::size_t>(which)] = 1;
    const auto k = e.coefficient(unit);
    const auto rest = e - SymPoly(k) * SymPoly::var(which);
    if (rest.degree_in(which) != 0) {
        throw std::logic_error("solved variable appears in a mixed term");
    }
    SymPoly out;
    for (const auto& [m, c] : rest.terms()) {
        if (c % k != 0) {
            throw std::logic_error("constraint has no integer solution form");
        }
        SymPoly term(-c / k);
        for (std::size_t v = 0; v < 3; ++v) {
            for (int p = 0; p < m[v]; ++p) {
                term = term * SymPoly::var(static_cast<int>(v));
            }
        }
        out += term;
    }
    return out;
}

}  // namespace

std::string to_string(const LaurentPoly& p) { return render<long long>(p, &int_coeff); }
std::string to_string(const SymLaurent& p) { return render<SymPoly>(p, &sym_coeff); }

LaurentPoly GenusTwoSymmetric::poly() const { return LaurentPoly({{2, a}, {1, b}, {0, c}, {-1, b}, {-2, a}}); }

SymLaurent genus_two_template() {
    const auto a = SymPoly::var(var_a);
    const auto b = SymPoly::var(var_b);
    const auto c = SymPoly::var(var_c);
    return SymLaurent({{2, a}, {1, b}, {0, c}, {-1, b}, {-2, a}});
}

template <class R>
BasicLaurent<R> branched_cover_poly(const BasicLaurent<R>& p) {
    if (!p.is_symmetric()) {
        throw std::invalid_argument("branched_cover_poly needs a symmetric polynomial");
    }
    // Coefficient of s^k in P(s) P(-s) is sum_{i+j=k} p_i p_j (-1)^j; only even k survive.
    BasicLaurent<R> out;
    for (const auto& [i, u] : p.coefficients()) {
        for (const auto& [j, v] : p.coefficients()) {
            if ((i + j) % 2 != 0) {
                continue;
            }
            const R term = u * v;
            out.add((i + j) / 2, j % 2 == 0 ? term : R(0) - term);
        }
    }
    return out;
}

template LaurentPoly branched_cover_poly(const LaurentPoly&);
template SymLaurent branched_cover_poly(const SymLaurent&);

CosmeticSolution cosmetic_solve() {
    const auto delta = genus_two_template();
    CosmeticSolution s;
    s.second_derivative = delta.second_derivative_at_one();
    s.b_in_a = solve_linear(s.second_derivative, var_b);
    s.value_at_one = delta.at_one().substitute(var_b, s.b_in_a);
    const auto cover_d2 = branched_cover_poly(delta).second_derivative_at_one();
    for (int sign : {1, -1}) {
        CosmeticBranch br;
        br.sign = sign;
        br.c_in_a = solve_linear(s.value_at_one - SymPoly(sign), var_c);
        br.cover_second_derivative = cover_d2.substitute(var_b, s.b_in_a).substitute(var_c, br.c_in_a);
        if (br.cover_second_derivative.degree_in(var_b) + br.cover_second_derivative.degree_in(var_c) != 0) {
            throw std::logic_error("cover constraint still involves b or c");
        }
        if (br.cover_second_derivative.is_zero()) {
            throw std::logic_error("cover constraint is vacuous");
        }
        const auto a = solve_linear(br.cover_second_derivative, var_a);
        if (a.degree_in(var_a) + a.degree_in(var_b) + a.degree_in(var_c) != 0) {
            throw std::logic_error("cover constraint does not pin a");
        }
        const auto av = a.evaluate(0, 0, 0);
        br.solution = {av, s.b_in_a.evaluate(av, 0, 0), br.c_in_a.evaluate(av, 0, 0)};
        s.raw.push_back(br.solution);
        if (sign == 1) {
            s.normalized = br.solution;
        }
        s.branches.push_back(std::move(br));
    }
    std::sort(s.raw.begin(), s.raw.end());
    return s;
}

std::vector<GenusTwoSymmetric> cosmetic_search(long long bound) {
    std::vector<GenusTwoSymmetric> out;
    for (long long a = -bound; a <= bound; ++a) {
        for (long long b = -bound; b <= bound; ++b) {
            for (long long c = -bound; c <= bound; ++c) {
                const GenusTwoSymmetric g{a, b, c};
                const auto p = g.poly();
                if (p.second_derivative_at_one() != 0) {
                    continue;
                }
                const auto v = p.at_one();
                if (v != 1 && v != -1) {
                    continue;
                }
                if (branched_cover_poly(p).second_derivative_at_one() == 0) {
                    out.push_back(g);
                }
            }
        }
    }
    return out;
}

int double_cover_slope(int slope) {
    if (slope == 2) {
        return 1;
    }
    if (slope == -2) {
        return -1;
    }
    throw std::invalid_argument("double_cover_slope handles slopes +2 and -2 only, got " + std::to_string(slope));
}

}  // namespace ipmod
