// Chow rings of products of projective spaces: Z[h1..hk]/(h_i^{n_i+1}) with
// eager reduction, the degree map, and pullbacks along product projections.
#pragma once

#include <string>
#include <vector>

#include "cobord/polynomial.hpp"

namespace cobord {

/// A product of projective spaces P^{n_1} x ... x P^{n_k}; k = 0 is a point.
struct Ambient {
    std::vector<int> dims;

    Ambient() = default;
    Ambient(std::initializer_list<int> d) : dims(d) { validate(); }
    explicit Ambient(std::vector<int> d) : dims(std::move(d)) { validate(); }

    size_t factors() const { return dims.size(); }
    int dimension() const {
        int s = 0;
        for (int n : dims)
            s += n;
        return s;
    }

    Ambient operator*(const Ambient& rhs) const {
        std::vector<int> d = dims;
        d.insert(d.end(), rhs.dims.begin(), rhs.dims.end());
        return Ambient(std::move(d));
    }

    bool operator==(const Ambient&) const = default;

    std::string str() const {
        if (dims.empty())
            return "pt";
        std::string s;
        for (size_t i = 0; i < dims.size(); ++i) {
            if (i)
                s += "x";
            s += "P" + std::to_string(dims[i]);
        }
        return s;
    }

  private:
    void validate() const {
        for (int n : dims)
            if (n < 0)
                throw std::invalid_argument("projective-space dimension must be >= 0");
    }
};

/// Z[h1..hk]/(h_i^{n_i+1} = 0), each h_i of degree 1.
inline RingPtr chow_ring(const Ambient& a) {
    std::vector<GradedVariable> vars;
    vars.reserve(a.factors());
    for (size_t i = 0; i < a.factors(); ++i)
        vars.push_back({"h" + std::to_string(i + 1), 1, false, a.dims[i] + 1});
    return Ring::make("CH(" + a.str() + ")", std::move(vars));
}

/// The hyperplane class of the i-th factor (0-based).
inline GradedPolynomial hyperplane(const RingPtr& ring, size_t i) {
    Exponents e(ring->arity(), 0);
    e.at(i) = 1;
    return GradedPolynomial::monomial(ring, std::move(e), 1);
}

/// A cycle class on a product of projective spaces.
struct ChowClass {
    Ambient ambient;
    GradedPolynomial poly;  // over chow_ring(ambient)

    ChowClass(Ambient a, GradedPolynomial p) : ambient(std::move(a)), poly(std::move(p)) {
        require_same_ring(poly.ring(), chow_ring(ambient), "ChowClass");
    }
};

/// Coefficient of the top monomial h1^{n_1}...hk^{n_k} (the degree map).
inline Rational chow_degree(const Ambient& a, const GradedPolynomial& p) {
    Exponents top(a.factors());
    for (size_t i = 0; i < a.factors(); ++i)
        top[i] = a.dims[i];
    return p.coefficient(top);
}

inline Rational chow_degree(const ChowClass& c) { return chow_degree(c.ambient, c.poly); }

/// Pullback along the projection of a product onto a block of factors:
/// re-indexes h_i to h_{i+offset} in the target ring. Variable declarations
/// (the nilpotency caps) must agree block-wise.
inline GradedPolynomial pullback_to_product(const GradedPolynomial& p, const RingPtr& target,
                                            size_t offset) {
    const auto& src = *p.ring();
    for (size_t i = 0; i < src.arity(); ++i) {
        if (offset + i >= target->arity())
            throw std::invalid_argument("pullback_to_product: factor block out of range");
        if (target->var(offset + i).power_zero != src.var(i).power_zero)
            throw std::invalid_argument("pullback_to_product: factor dimensions disagree");
    }
    GradedPolynomial out(target);
    for (const auto& [e, c] : p.terms()) {
        Exponents f(target->arity(), 0);
        for (size_t i = 0; i < e.size(); ++i)
            f[offset + i] = e[i];
        out.add_term(std::move(f), c);
    }
    return out;
}

}  // namespace cobord
