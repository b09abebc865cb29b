#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ipmod/ip_module.hpp"
#include "ipmod/rational.hpp"

namespace ipmod {

/// One input step of an ell-inequality chain.
///
/// A morphism step records that ell(target) is bounded by ell(source) through one morphism
/// (or a jointly injective pair of morphisms) out of I(source). An identify step records
/// that two names denote the same manifold, so their ell values agree.
struct CertificateStep {
    enum class Kind { morphism, identify };

    Kind kind = Kind::morphism;
    std::string source;
    std::string target;
    std::vector<IPMorphismMeta> maps;
    std::string injectivity;   // evidence that the map(s) inject on I; empty when missing
    std::string nonvanishing;  // evidence that I(source) != 0, so ell(source) is finite
    std::string cite;
};

/// ell(lhs) REL ell(rhs) + offset.
struct Inequality {
    std::string lhs;
    std::string rhs;
    Relation relation = Relation::le;
    Rational offset{0};
    std::vector<Slack> slack;
    std::string cite;
    bool conditional = false;
    std::vector<std::string> missing;

    [[nodiscard]] std::string text() const;
};

struct Certificate {
    std::string name;
    std::vector<Inequality> steps;
    bool conditional = false;
    /// Present when consecutive steps chain (each lhs is the next rhs).
    std::optional<Inequality> cumulative;
    bool contradiction = false;
    bool contradiction_conditional = false;
    /// Step indices forming the contradictory cycle.
    std::vector<std::size_t> cycle;
    Rational cycle_offset{0};
};

Certificate certify_chain(const std::string& name, const std::vector<CertificateStep>& steps);

/// "S^3_{1}(K)", "S^3_{-1/2}(K)", ...
std::string surgery_name(const std::string& knot, int m);

/// ell(S^3_{-1}(K)) < ell(S^3_{1}(K)) - 1/8 through the degree-3 map with level 1/4 - eta(K).
std::vector<CertificateStep> pm_one_steps(const std::string& knot);

/// Steps for consecutive nonzero m in [m_from, m_to]: ell(S^3_{1/m}) < ell(S^3_{1/m'}) + offset.
std::vector<CertificateStep> ladder_steps(const std::string& knot, int m_from, int m_to);

/// ell(S_{n+1}(L)) < ell(S_n(L)) for n = first, ..., first + count - 1.
std::vector<CertificateStep> s2xs1_ladder_steps(const std::string& link, int first, int count);

struct CyclicKnot {
    std::string name;
    int a = 0;
    int b = 0;
};

/// Ladders on each K_i from 1/b_i up to 1/a_i, closed by S^3_{1/a_i}(K_i) = S^3_{1/b_{i+1}}(K_{i+1}).
std::vector<CertificateStep> cyclic_steps(const std::vector<CyclicKnot>& knots);

/// Parses a certificate spec; steps may be explicit or builder macros. Throws validation_error.
std::pair<std::string, std::vector<CertificateStep>> parse_certificate_spec(const std::string& text);

}  // namespace ipmod
