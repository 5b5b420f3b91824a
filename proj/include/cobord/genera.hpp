// The genera layer: s_d and t_{d,1} homomorphisms on formal classes of
// varieties, Adams divisibility, coordinates of variety classes in the
// rationalized Lazard ring, and the two degree-formula checkers.
#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <utility>
#include <vector>

#include "cobord/lazard.hpp"
#include "cobord/linalg.hpp"
#include "cobord/variety.hpp"

namespace cobord {

/// A formal sum of varieties of one dimension with exact multiplicities.
class FormalClass {
  public:
    FormalClass() = default;
    explicit FormalClass(const Variety& v) { add(Rational(1), v); }

    FormalClass& add(const Rational& mult, const Variety& v) {
        if (mult != 0)
            terms_.emplace_back(mult, v);
        return *this;
    }

    const std::vector<std::pair<Rational, Variety>>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    int dimension() const {
        if (terms_.empty())
            throw std::invalid_argument("empty formal class has no dimension");
        int d = terms_.front().second.dimension();
        for (const auto& [mult, v] : terms_)
            if (v.dimension() != d)
                throw std::invalid_argument("formal class mixes dimensions");
        return d;
    }

  private:
    std::vector<std::pair<Rational, Variety>> terms_;
};

/// s_d extended linearly; exact rational when multiplicities are rational.
inline Rational s_d_hom(const FormalClass& c) {
    c.dimension();  // validates purity
    Rational acc(0);
    for (const auto& [mult, v] : c.terms())
        acc += mult * Rational(s_number(v));
    return acc;
}

inline bool is_prime(long p) {
    if (p < 2)
        return false;
    for (long q = 2; q * q <= p; ++q)
        if (p % q == 0)
            return false;
    return true;
}

/// dim V = p^n - 1 for some n >= 1?
inline bool adams_dimension(int d, long p) {
    for (Integer q = p; q - 1 <= d; q *= p)
        if (q - 1 == d)
            return true;
    return false;
}

struct AdamsResult {
    bool applicable = false;
    bool passes = false;
    Integer s_value = 0;
    Integer quotient = 0;  // s_value / p when applicable and passing
};

/// Divisibility p | s_d(V) in dimensions d = p^n - 1.
inline AdamsResult adams_check(const Variety& v, long p) {
    if (!is_prime(p))
        throw std::invalid_argument("adams_check: " + std::to_string(p) + " is not prime");
    AdamsResult r;
    r.s_value = s_number(v);
    r.applicable = adams_dimension(v.dimension(), p);
    if (!r.applicable)
        return r;
    r.passes = r.s_value % p == 0;
    if (r.passes)
        r.quotient = r.s_value / p;
    return r;
}

/// t_{d,1} = s_d/p mod p on classes of dimension d = p^n - 1.
inline Integer t_d1(const FormalClass& c, long p) {
    if (!is_prime(p))
        throw std::invalid_argument("t_d1: " + std::to_string(p) + " is not prime");
    int d = c.dimension();
    if (!adams_dimension(d, p))
        throw std::invalid_argument("t_d1: dimension " + std::to_string(d) +
                                    " is not of the form p^n-1 for p = " + std::to_string(p));
    Rational s = s_d_hom(c);
    Rational q = s / p;
    if (!is_integer(q))
        throw std::domain_error("t_d1: s_d value " + rational_str(s) + " is not divisible by " +
                                std::to_string(p));
    return mod_nonneg(to_integer(q), p);
}

/// The basis of dimension d: one product of projective spaces per partition,
/// in the canonical partition order.
inline std::vector<std::pair<Partition, Variety>> lazard_basis(int d) {
    std::vector<std::pair<Partition, Variety>> basis;
    for (const auto& part : partitions_of(d)) {
        Variety v = Variety::point();
        for (size_t i = 0; i < part.size(); ++i)
            v = i == 0 ? Variety::projective_space(part[0])
                       : Variety::product(v, Variety::projective_space(part[i]));
        basis.emplace_back(part, std::move(v));
    }
    return basis;
}

/// Chern numbers of the basis: rows and columns indexed by partitions of d.
/// Invertibility of this matrix is what makes Chern numbers coordinates.
inline const std::pair<std::vector<Partition>, Matrix>& chern_number_matrix(int d) {
    static std::mutex guard;
    static std::map<int, std::pair<std::vector<Partition>, Matrix>> memo;
    std::lock_guard<std::mutex> lock(guard);
    auto it = memo.find(d);
    if (it != memo.end())
        return it->second;

    auto basis = lazard_basis(d);
    auto parts = partitions_of(d);
    Matrix m(parts.size(), std::vector<Rational>(parts.size()));
    for (size_t row = 0; row < parts.size(); ++row)
        for (size_t col = 0; col < parts.size(); ++col)
            m[row][col] = Rational(chern_number(basis[col].second, parts[row]));
    return memo.emplace(d, std::make_pair(std::move(parts), std::move(m))).first->second;
}

struct LazardCoordinates {
    int dimension = 0;
    LazardElement element;  // in Q[m1..md]
    std::vector<std::pair<Partition, Rational>> coordinates;  // on the basis of products of P^n
};

/// Coordinates of [V] on the partition basis, solved from its Chern numbers;
/// the element uses [P^n] = (n+1) m_n to land in the m-normal form.
inline LazardCoordinates class_in_lazard(const Variety& v) {
    int d = v.dimension();
    const auto& [parts, m] = chern_number_matrix(d);
    std::vector<Rational> b;
    b.reserve(parts.size());
    for (const auto& mu : parts)
        b.push_back(Rational(chern_number(v, mu)));
    std::vector<Rational> x;
    try {
        x = solve_linear(m, b);
    } catch (const std::domain_error&) {
        throw std::logic_error("Chern-number basis matrix is singular in dimension " +
                               std::to_string(d));
    }

    auto ring = lazard_ring(d);
    auto value = GradedPolynomial::zero(ring);
    LazardCoordinates out;
    out.dimension = d;
    for (size_t i = 0; i < parts.size(); ++i) {
        out.coordinates.emplace_back(parts[i], x[i]);
        Exponents e(ring->arity(), 0);
        Rational scale = x[i];
        for (int part : parts[i]) {
            e[static_cast<size_t>(part) - 1] += 1;
            scale *= part + 1;
        }
        value += GradedPolynomial::monomial(ring, std::move(e), scale);
    }
    out.element = LazardElement(std::move(value));
    return out;
}

/// An asserted morphism with its degree (the artifact cannot certify that a
/// map of the stated degree exists; it checks the numerical consequences).
struct MorphismDatum {
    Variety source;
    Variety target;
    Integer degree = 1;
};

struct CheckReport {
    bool pass = true;
    std::string witness;
};

/// Generalized degree formula, pushed to the point: the class of the source
/// minus degree times the class of the target must equal the supplied
/// decomposition; checked on every Chern number of the dimension.
inline CheckReport gdf_verify(const MorphismDatum& f, const FormalClass& decomposition) {
    int d = f.source.dimension();
    if (f.degree != 0 && f.target.dimension() != d)
        throw std::invalid_argument("gdf_verify: source and target dimensions differ");
    if (!decomposition.empty() && decomposition.dimension() != d)
        throw std::invalid_argument("gdf_verify: decomposition dimension differs from source");

    CheckReport rep;
    for (const auto& mu : partitions_of(d)) {
        Rational lhs = Rational(chern_number(f.source, mu)) -
                       Rational(f.degree) * Rational(chern_number(f.target, mu));
        Rational rhs(0);
        for (const auto& [mult, b] : decomposition.terms())
            rhs += mult * Rational(chern_number(b, mu));
        if (lhs != rhs) {
            rep.pass = false;
            std::ostringstream os;
            os << partition_chern_label(mu) << ": " << rational_str(lhs) << " vs "
               << rational_str(rhs);
            rep.witness = os.str();
            return rep;
        }
    }
    return rep;
}

struct RostReport {
    bool pass = false;
    Integer delta = 0;        // s_d(source) - degree * s_d(target)
    Integer implied_eta = 0;  // delta / p when divisible
    std::string witness;
};

/// Degree-formula arithmetic: s_d(Y) - (deg f) s_d(X) = p * deg(eta) in
/// dimensions d = p^n - 1. With an asserted eta-degree, equality is checked;
/// without one, divisibility by p is checked and eta's degree is implied.
inline RostReport rost_check(const MorphismDatum& f, long p,
                             std::optional<Integer> eta_degree = std::nullopt) {
    if (!is_prime(p))
        throw std::invalid_argument("rost_check: " + std::to_string(p) + " is not prime");
    int d = f.source.dimension();
    if (f.target.dimension() != d)
        throw std::invalid_argument("rost_check: source and target dimensions differ");
    if (!adams_dimension(d, p))
        throw std::invalid_argument("rost_check: dimension " + std::to_string(d) +
                                    " is not of the form p^n-1 for p = " + std::to_string(p));

    RostReport rep;
    rep.delta = s_number(f.source) - f.degree * s_number(f.target);
    if (rep.delta % p != 0) {
        rep.witness = "delta = " + rep.delta.get_str() + " is not divisible by " +
                      std::to_string(p);
        return rep;
    }
    rep.implied_eta = rep.delta / p;
    if (eta_degree && *eta_degree != rep.implied_eta) {
        rep.witness = "asserted eta-degree " + eta_degree->get_str() + " but delta/p = " +
                      rep.implied_eta.get_str();
        return rep;
    }
    rep.pass = true;
    return rep;
}

}  // namespace cobord
