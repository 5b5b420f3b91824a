// GradedPolynomial: exact multivariate polynomials with weighted variables.
// All arithmetic is exact rational arithmetic; nilpotent quotients declared on
// the ring are reduced eagerly, so values are always in normal form.
#pragma once

#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cobord/rational.hpp"
#include "cobord/ring.hpp"

namespace cobord {

/// Graded reverse lexicographic order on exponent vectors, ascending.
/// Fixes canonical printing and iteration; correctness never depends on it.
struct MonomialLess {
    bool operator()(const Exponents& a, const Exponents& b) const {
        int da = std::accumulate(a.begin(), a.end(), 0);
        int db = std::accumulate(b.begin(), b.end(), 0);
        if (da != db)
            return da < db;
        if (a.size() != b.size())
            return a.size() < b.size();
        for (size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i])
                return a[i] > b[i];
        return false;
    }
};

class GradedPolynomial {
  public:
    using TermMap = std::map<Exponents, Rational, MonomialLess>;

    GradedPolynomial() : ring_(Ring::trivial()) {}
    explicit GradedPolynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static GradedPolynomial zero(RingPtr ring) { return GradedPolynomial(std::move(ring)); }

    static GradedPolynomial constant(RingPtr ring, const Rational& c) {
        GradedPolynomial p(std::move(ring));
        if (c != 0)
            p.terms_.emplace(Exponents(p.ring_->arity(), 0), c);
        return p;
    }

    static GradedPolynomial one(RingPtr ring) { return constant(std::move(ring), Rational(1)); }

    static GradedPolynomial monomial(RingPtr ring, Exponents exps, const Rational& c) {
        GradedPolynomial p(std::move(ring));
        exps.resize(p.ring_->arity(), 0);
        p.add_term(std::move(exps), c);
        return p;
    }

    static GradedPolynomial variable(RingPtr ring, std::string_view name, int exponent = 1) {
        size_t i = ring->index_of(name);
        Exponents e(ring->arity(), 0);
        e[i] = exponent;
        return monomial(std::move(ring), std::move(e), Rational(1));
    }

    const RingPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        if (terms_.empty())
            return true;
        if (terms_.size() > 1)
            return false;
        const auto& e = terms_.begin()->first;
        for (int x : e)
            if (x)
                return false;
        return true;
    }

    Rational constant_term() const {
        Exponents z(ring_->arity(), 0);
        return coefficient(z);
    }

    Rational coefficient(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Weighted degree of the polynomial if homogeneous; nullopt otherwise
    /// (and for the zero polynomial, which is homogeneous of every degree).
    std::optional<int> homogeneous_degree() const {
        std::optional<int> d;
        for (const auto& [e, c] : terms_) {
            int de = ring_->monomial_degree(e);
            if (!d)
                d = de;
            else if (*d != de)
                return std::nullopt;
        }
        return d;
    }

    bool is_homogeneous(int degree) const {
        for (const auto& [e, c] : terms_)
            if (ring_->monomial_degree(e) != degree)
                return false;
        return true;
    }

    /// Sum of the terms of the given weighted degree.
    GradedPolynomial homogeneous_component(int degree) const {
        GradedPolynomial out(ring_);
        for (const auto& [e, c] : terms_)
            if (ring_->monomial_degree(e) == degree)
                out.terms_.emplace(e, c);
        return out;
    }

    GradedPolynomial operator-() const {
        GradedPolynomial out(ring_);
        for (const auto& [e, c] : terms_)
            out.terms_.emplace(e, -c);
        return out;
    }

    GradedPolynomial& operator+=(const GradedPolynomial& rhs) {
        require_same_ring(ring_, rhs.ring_, "poly add");
        for (const auto& [e, c] : rhs.terms_)
            add_term(e, c);
        return *this;
    }

    GradedPolynomial& operator-=(const GradedPolynomial& rhs) {
        require_same_ring(ring_, rhs.ring_, "poly sub");
        for (const auto& [e, c] : rhs.terms_)
            add_term(e, -c);
        return *this;
    }

    GradedPolynomial& operator*=(const GradedPolynomial& rhs) {
        *this = *this * rhs;
        return *this;
    }

    GradedPolynomial& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
        } else {
            for (auto& [e, c] : terms_)
                c *= s;
        }
        return *this;
    }

    GradedPolynomial& operator/=(const Rational& s) {
        if (s == 0)
            throw std::domain_error("poly division by zero scalar");
        for (auto& [e, c] : terms_)
            c /= s;
        return *this;
    }

    friend GradedPolynomial operator+(GradedPolynomial a, const GradedPolynomial& b) {
        a += b;
        return a;
    }
    friend GradedPolynomial operator-(GradedPolynomial a, const GradedPolynomial& b) {
        a -= b;
        return a;
    }

    friend GradedPolynomial operator*(const GradedPolynomial& a, const GradedPolynomial& b) {
        require_same_ring(a.ring_, b.ring_, "poly mul");
        GradedPolynomial out(a.ring_);
        const size_t n = a.ring_->arity();
        Exponents e(n, 0);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                bool dead = false;
                for (size_t i = 0; i < n; ++i) {
                    e[i] = ea[i] + eb[i];
                    int pz = a.ring_->var(i).power_zero;
                    if (pz > 0 && e[i] >= pz) {
                        dead = true;
                        break;
                    }
                }
                if (!dead)
                    out.add_term(e, ca * cb);
            }
        }
        return out;
    }

    friend GradedPolynomial operator*(GradedPolynomial a, const Rational& s) {
        a *= s;
        return a;
    }
    friend GradedPolynomial operator*(const Rational& s, GradedPolynomial a) {
        a *= s;
        return a;
    }

    GradedPolynomial pow(unsigned n) const {
        GradedPolynomial acc = one(ring_);
        GradedPolynomial base = *this;
        while (n) {
            if (n & 1)
                acc = acc * base;
            if (n >>= 1)
                base = base * base;
        }
        return acc;
    }

    bool operator==(const GradedPolynomial& rhs) const {
        return same_ring(ring_, rhs.ring_) && terms_ == rhs.terms_;
    }
    bool operator!=(const GradedPolynomial& rhs) const { return !(*this == rhs); }

    bool operator==(const Rational& c) const { return is_constant() && constant_term() == c; }
    bool operator==(int c) const { return *this == Rational(c); }

    /// Inserts c * x^e, merging and dropping zeros; enforces Laurent and
    /// nilpotency declarations.
    void add_term(Exponents e, const Rational& c) {
        if (e.size() != ring_->arity())
            throw std::invalid_argument("exponent vector arity mismatch in ring " + ring_->str());
        for (size_t i = 0; i < e.size(); ++i) {
            const auto& v = ring_->var(i);
            if (e[i] < 0 && !v.laurent)
                throw std::invalid_argument("negative exponent on non-Laurent variable '" +
                                            v.name + "'");
            if (v.power_zero > 0 && e[i] >= v.power_zero)
                return;  // killed by the nilpotent quotient
        }
        if (c == 0)
            return;
        auto [it, inserted] = terms_.emplace(std::move(e), c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    /// Canonical rendering, leading (grevlex-largest) term first.
    std::string str() const {
        if (terms_.empty())
            return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const Rational& c = it->second;
            bool neg = c < 0;
            Rational a = neg ? Rational(-c) : c;
            if (first)
                os << (neg ? "-" : "");
            else
                os << (neg ? " - " : " + ");
            first = false;
            os << term_str(a, it->first);
        }
        return os.str();
    }

  private:
    std::string term_str(const Rational& abs_coeff, const Exponents& e) const {
        std::string mono = monomial_str(e);
        if (mono.empty())
            return abs_coeff.get_str();
        if (abs_coeff == 1)
            return mono;
        return abs_coeff.get_str() + "*" + mono;
    }

    std::string monomial_str(const Exponents& e) const {
        std::ostringstream os;
        bool any = false;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (any)
                os << "*";
            any = true;
            os << ring_->var(i).name;
            if (e[i] != 1)
                os << "^" << e[i];
        }
        return os.str();
    }

    RingPtr ring_;
    TermMap terms_;
};

/// Re-expresses p over `target`, matching variables by name (degrees and
/// flags must agree). Every variable occurring in p must exist in target.
inline GradedPolynomial embed(const GradedPolynomial& p, const RingPtr& target) {
    if (same_ring(p.ring(), target))
        return p;
    const auto& src = *p.ring();
    std::vector<std::optional<size_t>> where(src.arity());
    for (size_t i = 0; i < src.arity(); ++i) {
        auto j = target->find(src.var(i).name);
        if (j && !(target->var(*j) == src.var(i)))
            throw std::invalid_argument("embed: variable '" + src.var(i).name +
                                        "' declared differently in " + target->str());
        where[i] = j;
    }
    GradedPolynomial out(target);
    for (const auto& [e, c] : p.terms()) {
        Exponents f(target->arity(), 0);
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (!where[i])
                throw std::invalid_argument("embed: variable '" + src.var(i).name +
                                            "' missing from target ring " + target->str());
            f[*where[i]] = e[i];
        }
        out.add_term(std::move(f), c);
    }
    return out;
}

/// Inverse of c + n with c a nonzero rational and n nilpotent, via the
/// geometric series (1/c) * sum (-n/c)^t. The iteration bound comes from the
/// ring's nilpotency caps; a non-nilpotent n is rejected.
inline GradedPolynomial inverse_of_unit(const GradedPolynomial& p) {
    Rational c = p.constant_term();
    if (c == 0)
        throw std::domain_error("inverse_of_unit: constant term is zero in " + p.str());
    GradedPolynomial n = p - GradedPolynomial::constant(p.ring(), c);
    int bound = 1;
    for (const auto& v : p.ring()->vars())
        if (v.power_zero > 0)
            bound += v.power_zero - 1;
    GradedPolynomial acc = GradedPolynomial::constant(p.ring(), 1 / c);
    GradedPolynomial term = acc;
    for (int t = 0; t < bound && !n.is_zero(); ++t) {
        term = term * n * (Rational(-1) / c);
        if (term.is_zero())
            return acc;
        acc += term;
    }
    if (!term.is_zero() && !n.is_zero())
        throw std::domain_error("inverse_of_unit: non-nilpotent part in " + p.str());
    return acc;
}

/// p^e for signed e. Negative powers require p to be a unit monomial
/// (a single term whose variables are all Laurent).
inline GradedPolynomial pow_signed(const GradedPolynomial& p, int e) {
    if (e >= 0)
        return p.pow(static_cast<unsigned>(e));
    if (p.terms().size() != 1)
        throw std::domain_error("cannot invert non-monomial polynomial " + p.str());
    const auto& [exps, coeff] = *p.terms().begin();
    Exponents inv(exps.size());
    for (size_t i = 0; i < exps.size(); ++i)
        inv[i] = exps[i] * e;
    return GradedPolynomial::monomial(p.ring(), std::move(inv), pow_rational(coeff, e));
}

/// A variable assignment source -> target, applied coefficientwise.
class RingMap {
  public:
    RingMap(RingPtr source, RingPtr target, std::vector<GradedPolynomial> images)
        : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
        if (images_.size() != source_->arity())
            throw std::invalid_argument("RingMap: need one image per source variable");
        for (const auto& im : images_)
            require_same_ring(im.ring(), target_, "RingMap image");
    }

    static RingMap make(RingPtr source, RingPtr target,
                        const std::map<std::string, GradedPolynomial>& images) {
        std::vector<GradedPolynomial> v;
        v.reserve(source->arity());
        for (size_t i = 0; i < source->arity(); ++i) {
            auto it = images.find(source->var(i).name);
            if (it == images.end())
                throw std::invalid_argument("RingMap: variable '" + source->var(i).name +
                                            "' has no assigned image");
            v.push_back(it->second);
        }
        return RingMap(std::move(source), std::move(target), std::move(v));
    }

    const RingPtr& source() const { return source_; }
    const RingPtr& target() const { return target_; }
    const GradedPolynomial& image(size_t i) const { return images_.at(i); }

    bool degree_preserving() const {
        for (size_t i = 0; i < images_.size(); ++i)
            if (!images_[i].is_homogeneous(source_->var(i).degree))
                return false;
        return true;
    }

    GradedPolynomial operator()(const GradedPolynomial& p) const {
        require_same_ring(p.ring(), source_, "RingMap apply");
        GradedPolynomial out = GradedPolynomial::zero(target_);
        for (const auto& [e, c] : p.terms()) {
            GradedPolynomial term = GradedPolynomial::constant(target_, c);
            for (size_t i = 0; i < e.size(); ++i)
                if (e[i] != 0)
                    term = term * pow_signed(images_[i], e[i]);
            out += term;
        }
        return out;
    }

    /// outer ∘ inner: apply inner first.
    static RingMap compose(const RingMap& outer, const RingMap& inner) {
        require_same_ring(inner.target(), outer.source(), "RingMap compose");
        std::vector<GradedPolynomial> images;
        images.reserve(inner.source_->arity());
        for (const auto& im : inner.images_)
            images.push_back(outer(im));
        return RingMap(inner.source_, outer.target_, std::move(images));
    }

  private:
    RingPtr source_;
    RingPtr target_;
    std::vector<GradedPolynomial> images_;
};

}  // namespace cobord
