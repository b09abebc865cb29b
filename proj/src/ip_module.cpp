#include "ipmod/ip_module.hpp"

#include <algorithm>

#include "ipmod/errors.hpp"

namespace ipmod {

std::size_t IPModule::rank(const Rational& r, const Rational& r2, int d) const {
    return connecting_rank(barcode_, r, r2, d);
}

bool IPModule::is_zero() const {
    return std::none_of(barcode_.window().begin(), barcode_.window().end(), [](const Bar& b) { return b.infinite(); });
}

ExtendedRational kappa(const IPModule& a, int d) {
    auto best = ExtendedRational::infinity();
    for (const auto& bar : a.barcode().bars(d)) {
        if (bar.infinite() && ExtendedRational(bar.birth) < best) {
            best = bar.birth;
        }
    }
    return best;
}

ExtendedRational ell(const IPModule& a) {
    auto best = ExtendedRational::infinity();
    for (int d = 0; d < 8; ++d) {
        const auto k = kappa(a, d).plus(Rational(-d, 8));
        if (k < best) {
            best = k;
        }
    }
    return best;
}

bool IPMorphismMeta::has_strict_slack() const {
    return std::any_of(slack.begin(), slack.end(), [](const Slack& s) { return s.strict; });
}

std::string IPMorphismMeta::level_text() const {
    std::string out;
    if (level_base != 0 || slack.empty()) {
        out = to_string(level_base);
    }
    for (const auto& s : slack) {
        out += out.empty() ? "-" + s.name : " - " + s.name;
    }
    return out;
}

IPMorphismMeta compose(const IPMorphismMeta& f, const IPMorphismMeta& g) {
    IPMorphismMeta out;
    out.degree = f.degree + g.degree;
    out.level_base = f.level_base + g.level_base;
    out.slack = f.slack;
    out.slack.insert(out.slack.end(), g.slack.begin(), g.slack.end());
    out.injective_all_degrees = f.injective_all_degrees && g.injective_all_degrees;
    return out;
}

std::string to_string(Relation r) {
    switch (r) {
        case Relation::le:
            return "<=";
        case Relation::lt:
            return "<";
        case Relation::eq:
            return "=";
    }
    return "?";
}

bool EllBound::holds(const ExtendedRational& target_ell, const ExtendedRational& source_ell) const {
    const auto rhs = evaluate(source_ell);
    switch (relation) {
        case Relation::le:
            return target_ell <= rhs;
        case Relation::lt:
            return target_ell < rhs;
        case Relation::eq:
            return target_ell == rhs;
    }
    return false;
}

EllBound ell_bound_single(const IPMorphismMeta& f, bool source_finite) {
    if (!f.injective_all_degrees) {
        throw hypothesis_error("ell bound needs a morphism injective in all degrees");
    }
    EllBound b;
    b.offset = f.offset();
    b.slack = f.slack;
    b.relation = (source_finite && f.has_strict_slack()) ? Relation::lt : Relation::le;
    return b;
}

EllBound ell_bound_pair(const IPMorphismMeta& f1, const IPMorphismMeta& f2, bool jointly_injective,
                        bool source_finite) {
    if (!jointly_injective) {
        throw hypothesis_error("pair ell bound needs the two morphisms to be jointly injective");
    }
    EllBound b;
    b.offset = std::max(f1.offset(), f2.offset());
    bool strict = source_finite;
    for (const auto* f : {&f1, &f2}) {
        if (f->offset() == b.offset) {
            strict = strict && f->has_strict_slack();
            b.slack.insert(b.slack.end(), f->slack.begin(), f->slack.end());
        }
    }
    b.relation = strict ? Relation::lt : Relation::le;
    return b;
}

}  // namespace ipmod
