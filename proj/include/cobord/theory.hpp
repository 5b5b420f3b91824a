// Oriented-cohomology theories on products of projective spaces: a
// coefficient ring plus a formal group law instantiate a presentation
// coeff[x1..xk]/(x_i^{n_i+1}); first Chern classes come from iterated formal
// sums, and the two concrete theories (Chow, K-theory) carry pushforwards to
// the point.
#pragma once

#include <string>
#include <vector>

#include "cobord/chow.hpp"
#include "cobord/genera.hpp"
#include "cobord/lazard.hpp"

namespace cobord {

enum class TheoryKind { chow, k_theory, universal };

struct TheorySpec {
    TheoryKind kind;
    FormalGroupLaw fgl;

    static TheorySpec chow(int order) { return {TheoryKind::chow, FormalGroupLaw::additive(order)}; }

    static TheorySpec k_theory(int order) {
        return {TheoryKind::k_theory, FormalGroupLaw::multiplicative(order)};
    }

    static TheorySpec universal(int order) { return {TheoryKind::universal, universal_fgl(order)}; }

    const RingPtr& ring() const { return fgl.ring(); }

    std::string name() const {
        switch (kind) {
            case TheoryKind::chow: return "CH";
            case TheoryKind::k_theory: return "K0";
            case TheoryKind::universal: return "Omega";
        }
        return "?";
    }
};

/// The theory evaluated on a product of projective spaces: a free module on
/// the monomials prod x_i^{e_i}, e_i <= n_i, by the projective bundle
/// formula, with x_i the first Chern class of O(0,..,1,..,0).
class TheoryRing {
  public:
    TheoryRing(TheorySpec spec, Ambient ambient)
        : spec_(std::move(spec)), ambient_(std::move(ambient)) {
        std::vector<GradedVariable> vars = spec_.ring()->vars();
        coeff_arity_ = vars.size();
        for (size_t i = 0; i < ambient_.factors(); ++i)
            vars.push_back({"x" + std::to_string(i + 1), 1, false, ambient_.dims[i] + 1});
        ring_ = Ring::make(spec_.name() + "(" + ambient_.str() + ")", std::move(vars));
    }

    const TheorySpec& spec() const { return spec_; }
    const Ambient& ambient() const { return ambient_; }
    const RingPtr& ring() const { return ring_; }
    size_t coeff_arity() const { return coeff_arity_; }

    /// x_i = c1 of the i-th hyperplane bundle (0-based factor index).
    GradedPolynomial x(size_t i) const {
        if (i >= ambient_.factors())
            throw std::invalid_argument("no factor " + std::to_string(i) + " in " + ring_->str());
        return GradedPolynomial::variable(ring_, "x" + std::to_string(i + 1));
    }

    /// Coefficient scalars live in the subring spanned by the theory's
    /// coefficient variables.
    GradedPolynomial from_coeff(const GradedPolynomial& c) const { return embed(c, ring_); }

    /// Reads an element of the coefficient subring back into the coefficient
    /// ring; rejects elements with x-content.
    GradedPolynomial to_coeff(const GradedPolynomial& e) const {
        GradedPolynomial out(spec_.ring());
        for (const auto& [exps, c] : e.terms()) {
            Exponents ce(coeff_arity_);
            for (size_t i = 0; i < coeff_arity_; ++i)
                ce[i] = exps[i];
            for (size_t i = coeff_arity_; i < exps.size(); ++i)
                if (exps[i] != 0)
                    throw std::invalid_argument("element is not a coefficient scalar");
            out.add_term(std::move(ce), c);
        }
        return out;
    }

    /// c1(O(a1,..,ak)) as the iterated formal sum F([a1](x1), F([a2](x2),..)).
    /// Exact on the nose: the truncation order must dominate the ambient
    /// dimension so that dropped series terms are zero in the presentation.
    GradedPolynomial c1(const std::vector<int>& twist) const {
        if (spec_.fgl.order() < ambient_.dimension())
            throw std::invalid_argument("truncation order " + std::to_string(spec_.fgl.order()) +
                                        " is too small for " + ambient_.str());
        return c1_truncated(twist);
    }

    /// Same computation without the exactness guard: coefficients of total
    /// x-degree <= order are exact, higher ones may be missing. Used to read
    /// the group law back off P^N x P^N.
    GradedPolynomial c1_truncated(const std::vector<int>& twist) const {
        if (twist.size() != ambient_.factors())
            throw std::invalid_argument("twist arity does not match " + ambient_.str());
        GradedPolynomial acc = GradedPolynomial::zero(ring_);
        bool first = true;
        for (size_t i = 0; i < twist.size(); ++i) {
            auto summand = spec_.fgl.n_series(twist[i]).eval({x(i)}, ring_);
            if (first) {
                acc = std::move(summand);
                first = false;
            } else {
                acc = spec_.fgl.series().eval({acc, summand}, ring_);
            }
        }
        return acc;
    }

    /// Pushforward to the point for the two concrete theories. Chow theory is
    /// the degree map; K-theory rewrites monomials x^t as line-bundle twists
    /// via x_i = (1 - L_i^v) beta^{-1} and takes sheaf Euler characteristics,
    /// with the convention push(1 on P^n) = beta^n for the degree shift.
    GradedPolynomial pushforward_point(const GradedPolynomial& e) const {
        require_same_ring(e.ring(), ring_, "pushforward_point");
        const int dim = ambient_.dimension();
        if (spec_.kind == TheoryKind::chow) {
            Exponents top(ring_->arity(), 0);
            for (size_t i = 0; i < ambient_.factors(); ++i)
                top[coeff_arity_ + i] = ambient_.dims[i];
            return GradedPolynomial::constant(spec_.ring(), e.coefficient(top));
        }
        if (spec_.kind != TheoryKind::k_theory)
            throw std::invalid_argument("pushforward is only defined for CH and K0");

        auto out = GradedPolynomial::zero(spec_.ring());
        for (const auto& [exps, c] : e.terms()) {
            // beta^b * x^t |-> c * beta^{b + dim - |t|} * chi_t where chi_t
            // expands (1 - L^v)^{t_i} factorwise into twists O(-s) and sums
            // chi(P^{n_i}, O(-s)) = C(n_i - s, n_i) against the binomials.
            int b = exps[0];
            int t_total = 0;
            Rational chi_t(1);
            for (size_t i = 0; i < ambient_.factors(); ++i) {
                int t = exps[coeff_arity_ + i];
                t_total += t;
                Rational factor(0);
                for (int s = 0; s <= t; ++s)
                    factor += Rational((s % 2) ? -1 : 1) * Rational(binomial(t, static_cast<unsigned>(s))) *
                              Rational(binomial(ambient_.dims[i] - s,
                                                static_cast<unsigned>(ambient_.dims[i])));
                chi_t *= factor;
            }
            out.add_term({b + dim - t_total}, c * chi_t);
        }
        return out;
    }

    /// Pullback along the projection onto a block of factors: coefficient
    /// variables stay put, x-variables shift into the block at x_offset.
    GradedPolynomial pullback_from_factor(const TheoryRing& factor, const GradedPolynomial& e,
                                          size_t x_offset) const {
        require_same_ring(e.ring(), factor.ring_, "pullback_from_factor");
        if (!same_ring(factor.spec_.ring(), spec_.ring()))
            throw std::invalid_argument("pullback_from_factor: different theories");
        GradedPolynomial out(ring_);
        for (const auto& [exps, c] : e.terms()) {
            Exponents f(ring_->arity(), 0);
            for (size_t i = 0; i < coeff_arity_; ++i)
                f[i] = exps[i];
            for (size_t i = coeff_arity_; i < exps.size(); ++i)
                f[i + x_offset] = exps[i];
            out.add_term(std::move(f), c);
        }
        return out;
    }

    /// Structural check of the projective bundle presentation: the monomial
    /// basis has the predicted size, is closed under multiplication, and a
    /// combination with distinct scalar coefficients recovers them all.
    CheckReport pb_basis_check() const {
        CheckReport rep;
        std::vector<Exponents> basis;
        Exponents e(ambient_.factors(), 0);
        auto rec = [&](auto&& self, size_t i) -> void {
            if (i == ambient_.factors()) {
                basis.push_back(e);
                return;
            }
            for (e[i] = 0; e[i] <= ambient_.dims[i]; ++e[i])
                self(self, i + 1);
            e[i] = 0;
        };
        rec(rec, 0);

        size_t expected = 1;
        for (int n : ambient_.dims)
            expected *= static_cast<size_t>(n + 1);
        if (basis.size() != expected) {
            rep.pass = false;
            rep.witness = "basis size " + std::to_string(basis.size()) + " != " +
                          std::to_string(expected);
            return rep;
        }

        auto lift = [&](const Exponents& xe) {
            Exponents full(ring_->arity(), 0);
            for (size_t i = 0; i < xe.size(); ++i)
                full[coeff_arity_ + i] = xe[i];
            return full;
        };

        // Independence: read distinct coefficients back off a combination.
        GradedPolynomial comb(ring_);
        for (size_t i = 0; i < basis.size(); ++i)
            comb.add_term(lift(basis[i]), Rational(static_cast<long>(i) + 1));
        for (size_t i = 0; i < basis.size(); ++i)
            if (comb.coefficient(lift(basis[i])) != Rational(static_cast<long>(i) + 1)) {
                rep.pass = false;
                rep.witness = "coefficient lost on a basis monomial";
                return rep;
            }

        // Spanning: products of basis monomials stay inside the basis span.
        for (const auto& a : basis)
            for (const auto& b : basis) {
                auto prod = GradedPolynomial::monomial(ring_, lift(a), 1) *
                            GradedPolynomial::monomial(ring_, lift(b), 1);
                for (const auto& [exps, c] : prod.terms())
                    for (size_t i = 0; i < ambient_.factors(); ++i)
                        if (exps[coeff_arity_ + i] > ambient_.dims[i]) {
                            rep.pass = false;
                            rep.witness = "product escaped the presentation";
                            return rep;
                        }
            }
        return rep;
    }

  private:
    TheorySpec spec_;
    Ambient ambient_;
    size_t coeff_arity_;
    RingPtr ring_;
};

/// Reads the group law back from c1(O(1,1)) on P^N x P^N; by naturality this
/// must reproduce the defining law to order N.
inline FormalGroupLaw extract_fgl(const TheorySpec& spec, int order) {
    if (order < 2)
        throw std::invalid_argument("extract_fgl: order must be >= 2");
    TheoryRing t(spec, Ambient({order, order}));
    auto e = t.c1_truncated({1, 1});
    FormalGroupLaw::Table table;
    const size_t ca = t.coeff_arity();
    int linear_seen = 0;
    for (const auto& [exps, c] : e.terms()) {
        int i = exps[ca], j = exps[ca + 1];
        if (i + j > order)
            continue;
        if (i < 1 || j < 1) {
            // A group law has unit linear part and no other pure powers.
            bool linear_unit = ((i == 1 && j == 0) || (i == 0 && j == 1)) && c == Rational(1);
            bool coeff_free = true;
            for (size_t k = 0; k < ca; ++k)
                coeff_free = coeff_free && exps[k] == 0;
            if (!(linear_unit && coeff_free))
                throw std::logic_error("extract_fgl: c1(O(1,1)) is not a group law series");
            ++linear_seen;
            continue;
        }
        Exponents ce(ca);
        for (size_t k = 0; k < ca; ++k)
            ce[k] = exps[k];
        auto& slot = table.try_emplace({i, j}, GradedPolynomial::zero(spec.ring())).first->second;
        slot += GradedPolynomial::monomial(spec.ring(), std::move(ce), c);
    }
    if (linear_seen != 2)
        throw std::logic_error("extract_fgl: c1(O(1,1)) lost its linear part");
    return FormalGroupLaw::from_table(spec.ring(), order, table);
}

/// chi(P^{n_1} x ... , O(b_1,..,b_k)) = prod C(n_i + b_i, n_i).
inline Integer euler_char_twist(const Ambient& a, const std::vector<int>& b) {
    if (b.size() != a.factors())
        throw std::invalid_argument("twist arity does not match the ambient");
    Integer chi = 1;
    for (size_t i = 0; i < a.factors(); ++i)
        chi *= binomial(a.dims[i] + b[i], static_cast<unsigned>(a.dims[i]));
    return chi;
}

/// chi(V, O_V) through the Koszul resolution of a complete intersection:
/// sum over subsets S of the cuts of (-1)^|S| chi(ambient, O(-sum_S a_j)).
inline Integer structure_sheaf_euler_char(const Variety& v) {
    Integer total = 0;
    for (const auto& leaf : v.components()) {
        if (leaf.cuts.size() > 30)
            throw std::invalid_argument("too many cuts for the Koszul expansion");
        for (unsigned long mask = 0; mask < (1ul << leaf.cuts.size()); ++mask) {
            std::vector<int> b(leaf.ambient.factors(), 0);
            int sign = 1;
            for (size_t j = 0; j < leaf.cuts.size(); ++j)
                if (mask >> j & 1) {
                    sign = -sign;
                    for (size_t i = 0; i < b.size(); ++i)
                        b[i] -= leaf.cuts[j][i];
                }
            total += sign * euler_char_twist(leaf.ambient, b);
        }
    }
    return total;
}

/// The multiplicative specialization of a variety's Lazard class must land
/// on beta^dim times the independently computed chi(V, O_V) — the K-theory
/// face of the comparison theorems.
inline CheckReport cross_theory_check(const Variety& v) {
    CheckReport rep;
    auto lc = class_in_lazard(v);
    auto phi = multiplicative_specialization(lc.dimension);
    auto image = lc.dimension == 0
                     ? embed(lc.element.poly(), FormalGroupLaw::beta_ring())
                     : phi(lc.element.poly());
    Integer chi = structure_sheaf_euler_char(v);
    auto expect = GradedPolynomial::monomial(FormalGroupLaw::beta_ring(), {lc.dimension},
                                             Rational(chi));
    if (image != expect) {
        rep.pass = false;
        rep.witness = v.label() + ": specialized class " + image.str() + " vs beta^" +
                      std::to_string(lc.dimension) + " * chi = " + expect.str();
    }
    return rep;
}

/// Inside K-theory of P^n, the sheaf-side first Chern class
/// c1(O(a)) = (1 - [O(-a)]) beta^{-1} with [O(-1)] = 1 - beta*x must obey
/// the group law: F(c1(O(a)), c1(O(b))) = c1(O(a+b)) for |a|, |b| <= 3.
inline CheckReport k0_c1_check(int n, int order = 8) {
    if (n < 1)
        throw std::invalid_argument("k0_c1_check: n must be >= 1");
    TheoryRing t(TheorySpec::k_theory(order), Ambient({n}));
    auto r = t.ring();
    auto beta = GradedPolynomial::variable(r, "beta");
    auto beta_inv = GradedPolynomial::variable(r, "beta", -1);
    auto dual = GradedPolynomial::one(r) - beta * t.x(0);  // [O(-1)]

    auto sheaf_c1 = [&](int a) {
        auto twist = a >= 0 ? dual.pow(static_cast<unsigned>(a))
                            : inverse_of_unit(dual).pow(static_cast<unsigned>(-a));
        return (GradedPolynomial::one(r) - twist) * beta_inv;  // (1 - [O(-a)]) beta^{-1}
    };

    CheckReport rep;
    for (int a = -3; a <= 3; ++a) {
        if (sheaf_c1(a) != t.c1({a})) {
            rep.pass = false;
            rep.witness = "sheaf c1(O(" + std::to_string(a) + ")) disagrees with the formal sum";
            return rep;
        }
        for (int b = -3; b <= 3; ++b) {
            auto lhs = t.spec().fgl.series().eval({sheaf_c1(a), sheaf_c1(b)}, r);
            if (lhs != sheaf_c1(a + b)) {
                rep.pass = false;
                rep.witness = "F(c1(O(" + std::to_string(a) + ")), c1(O(" + std::to_string(b) +
                              "))) != c1(O(" + std::to_string(a + b) + "))";
                return rep;
            }
        }
    }
    return rep;
}

}  // namespace cobord
