// Rational model of the Lazard ring: Q[m1, m2, ...] with deg m_k = -k, the
// logarithm l(u) = u + sum m_k u^{k+1}, and the universal formal group law
// F = l^{-1}(l(u) + l(v)). Integer identities among the law's coefficients
// are decided faithfully here because the underlying ring is torsion-free.
#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>

#include "cobord/fgl.hpp"

namespace cobord {

/// Q[m1..mK], deg m_k = -k (cohomological convention).
inline RingPtr lazard_ring(int generators) {
    if (generators < 0)
        throw std::invalid_argument("lazard_ring: generator count must be >= 0");
    std::vector<GradedVariable> vars;
    vars.reserve(static_cast<size_t>(generators));
    for (int k = 1; k <= generators; ++k)
        vars.push_back({"m" + std::to_string(k), -k});
    return Ring::make("Lazard", std::move(vars));
}

/// l(u) = u + m1 u^2 + ... + m_{N-1} u^N over lazard_ring(N-1).
inline TruncatedSeries universal_log(int order) {
    if (order < 1)
        throw std::invalid_argument("universal_log: order must be >= 1");
    auto ring = lazard_ring(order - 1);
    TruncatedSeries l(ring, {"u"}, order);
    l.add_term({1}, GradedPolynomial::one(ring));
    for (int k = 1; k < order; ++k)
        l.add_term({k + 1}, GradedPolynomial::variable(ring, "m" + std::to_string(k)));
    return l;
}

/// Compositional inverse of the logarithm.
inline TruncatedSeries universal_exp(int order) {
    return universal_log(order).reverse();
}

/// The universal group law to total order N over Q[m1..m_{N-1}]; memoized.
inline const FormalGroupLaw& universal_fgl(int order) {
    if (order < 2)
        throw std::invalid_argument("universal_fgl: order must be >= 2");
    static std::mutex guard;
    static std::map<int, FormalGroupLaw> memo;
    std::lock_guard<std::mutex> lock(guard);
    auto it = memo.find(order);
    if (it != memo.end())
        return it->second;

    auto log = universal_log(order);
    auto ring = log.ring();
    TruncatedSeries log_sum(ring, {"u", "v"}, order);
    for (const auto& [e, c] : log.terms()) {
        log_sum.add_term({e[0], 0}, c);
        log_sum.add_term({0, e[0]}, c);
    }
    auto f = log.reverse().substitute({{"u", log_sum}});
    return memo.emplace(order, FormalGroupLaw::from_series(std::move(f))).first->second;
}

/// m_k -> 0: collapses the universal law onto the additive one.
inline RingMap additive_specialization(int generators) {
    auto src = lazard_ring(generators);
    auto z = Ring::make("Z", {});
    std::vector<GradedPolynomial> images(static_cast<size_t>(generators),
                                         GradedPolynomial::zero(z));
    return RingMap(src, z, std::move(images));
}

/// m_k -> beta^k/(k+1): the logarithm becomes -log(1 - beta*u)/beta and the
/// universal law collapses onto u + v - beta*u*v.
inline RingMap multiplicative_specialization(int generators) {
    auto src = lazard_ring(generators);
    auto k0 = FormalGroupLaw::beta_ring();
    std::vector<GradedPolynomial> images;
    images.reserve(static_cast<size_t>(generators));
    for (int k = 1; k <= generators; ++k)
        images.push_back(GradedPolynomial::monomial(k0, {k}, make_rational(1, k + 1)));
    return RingMap(src, k0, std::move(images));
}

/// An element of the rationalized Lazard ring in m-normal form.
class LazardElement {
  public:
    LazardElement() = default;  // zero in the empty Lazard ring

    explicit LazardElement(GradedPolynomial value) : value_(std::move(value)) {
        for (const auto& v : value_.ring()->vars())
            if (v.name.empty() || v.name[0] != 'm' || v.laurent || v.power_zero != 0)
                throw std::invalid_argument("LazardElement: ring is not a Lazard ring");
    }

    const GradedPolynomial& poly() const { return value_; }

    /// Cohomological degree (negative for positive-dimensional classes).
    std::optional<int> cohomological_degree() const { return value_.homogeneous_degree(); }

    /// Homological regrading: degree d means "dimension d".
    std::optional<int> homological_degree() const {
        auto d = cohomological_degree();
        return d ? std::optional<int>(-*d) : std::nullopt;
    }

    std::string str() const { return value_.str(); }

  private:
    GradedPolynomial value_;
};

/// Equality in the m-normal form; elements over Lazard rings of different
/// generator counts are compared in the larger ring.
inline bool lazard_eq(const LazardElement& a, const LazardElement& b) {
    const auto& ra = a.poly().ring();
    const auto& rb = b.poly().ring();
    const auto& big = ra->arity() >= rb->arity() ? ra : rb;
    return embed(a.poly(), big) == embed(b.poly(), big);
}

}  // namespace cobord
