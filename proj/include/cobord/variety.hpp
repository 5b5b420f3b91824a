// Varieties: generic complete intersections in products of projective
// spaces, closed under product and disjoint union. Tangent Chern data comes
// from the Euler sequence and adjunction; Chern numbers and the s_d genus
// are evaluated exactly in the ambient Chow ring.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cobord/chow.hpp"
#include "cobord/partitions.hpp"

namespace cobord {

/// One complete-intersection component: hypersurface cuts of the given
/// multidegrees (one entry per ambient factor) inside the ambient.
struct Leaf {
    Ambient ambient;
    std::vector<std::vector<int>> cuts;

    Leaf(Ambient a, std::vector<std::vector<int>> c)
        : ambient(std::move(a)), cuts(std::move(c)) {
        for (const auto& cut : cuts) {
            if (cut.size() != ambient.factors())
                throw std::invalid_argument("cut multidegree arity does not match the ambient");
            bool positive = false;
            for (int x : cut) {
                if (x < 0)
                    throw std::invalid_argument("multidegree entries must be >= 0");
                positive |= x > 0;
            }
            if (!positive)
                throw std::invalid_argument("each cut needs at least one positive degree");
        }
        if (dimension() < 0)
            throw std::invalid_argument("more cuts than ambient dimensions");
    }

    int dimension() const { return ambient.dimension() - static_cast<int>(cuts.size()); }

    bool operator==(const Leaf& rhs) const = default;

    Leaf operator*(const Leaf& rhs) const {
        std::vector<std::vector<int>> c;
        c.reserve(cuts.size() + rhs.cuts.size());
        for (const auto& cut : cuts) {
            auto padded = cut;
            padded.resize(cut.size() + rhs.ambient.factors(), 0);
            c.push_back(std::move(padded));
        }
        for (const auto& cut : rhs.cuts) {
            std::vector<int> padded(ambient.factors(), 0);
            padded.insert(padded.end(), cut.begin(), cut.end());
            c.push_back(std::move(padded));
        }
        return Leaf(ambient * rhs.ambient, std::move(c));
    }
};

/// Total tangent Chern class (restricted to the leaf, read in the ambient
/// ring) together with the leaf's fundamental class.
struct ChernData {
    Ambient ambient;
    GradedPolynomial total;
    GradedPolynomial fundamental;
};

/// Euler sequence and adjunction:
///   total = prod_i (1+h_i)^{n_i+1} / prod_j (1 + sum_i a_ji h_i),
///   fundamental = prod_j (sum_i a_ji h_i).
inline ChernData tangent_chern(const Leaf& leaf) {
    auto r = chow_ring(leaf.ambient);
    auto total = GradedPolynomial::one(r);
    auto fundamental = GradedPolynomial::one(r);
    for (size_t i = 0; i < leaf.ambient.factors(); ++i)
        total *= (GradedPolynomial::one(r) + hyperplane(r, i))
                     .pow(static_cast<unsigned>(leaf.ambient.dims[i] + 1));
    for (const auto& cut : leaf.cuts) {
        auto divisor = GradedPolynomial::zero(r);
        for (size_t i = 0; i < cut.size(); ++i)
            divisor += hyperplane(r, i) * Rational(cut[i]);
        total *= inverse_of_unit(GradedPolynomial::one(r) + divisor);
        fundamental *= divisor;
    }
    return {leaf.ambient, std::move(total), std::move(fundamental)};
}

/// A disjoint union of complete-intersection leaves.
class Variety {
  public:
    static Variety make(std::string label, Ambient ambient, std::vector<std::vector<int>> cuts) {
        return Variety(std::move(label), {Leaf(std::move(ambient), std::move(cuts))});
    }

    static Variety projective_space(int n) {
        return make("P" + std::to_string(n), Ambient({n}), {});
    }

    static Variety point() { return make("pt", Ambient{}, {}); }

    static Variety product(const Variety& a, const Variety& b) {
        std::vector<Leaf> comps;
        comps.reserve(a.components_.size() * b.components_.size());
        for (const auto& la : a.components_)
            for (const auto& lb : b.components_)
                comps.push_back(la * lb);
        return Variety(a.label_ + "x" + b.label_, std::move(comps));
    }

    static Variety disjoint_union(const Variety& a, const Variety& b) {
        std::vector<Leaf> comps = a.components_;
        comps.insert(comps.end(), b.components_.begin(), b.components_.end());
        return Variety(a.label_ + "+" + b.label_, std::move(comps));
    }

    const std::string& label() const { return label_; }
    Variety relabeled(std::string label) const { return Variety(std::move(label), components_); }
    const std::vector<Leaf>& components() const { return components_; }

    bool operator==(const Variety& rhs) const {
        return label_ == rhs.label_ && components_ == rhs.components_;
    }

    bool pure_dimension() const {
        for (const auto& c : components_)
            if (c.dimension() != components_.front().dimension())
                return false;
        return true;
    }

    int dimension() const {
        if (!pure_dimension())
            throw std::invalid_argument("variety '" + label_ + "' has mixed dimension");
        return components_.front().dimension();
    }

  private:
    Variety(std::string label, std::vector<Leaf> comps)
        : label_(std::move(label)), components_(std::move(comps)) {
        if (components_.empty())
            throw std::invalid_argument("variety needs at least one component");
    }

    std::string label_;
    std::vector<Leaf> components_;
};

/// Q[c1..cd] with deg c_k = k, the home of universal Chern polynomials.
inline RingPtr chern_class_ring(int d) {
    std::vector<GradedVariable> vars;
    for (int k = 1; k <= d; ++k)
        vars.push_back({"c" + std::to_string(k), k});
    return Ring::make("Chern", std::move(vars));
}

/// The Newton power-sum polynomial s_d(c1..cd):
/// s_d = c1 s_{d-1} - c2 s_{d-2} + ... + (-1)^{d-1} d c_d.
inline GradedPolynomial newton_sd(int d) {
    if (d < 1)
        throw std::invalid_argument("newton_sd: d must be >= 1");
    auto r = chern_class_ring(d);
    std::vector<GradedPolynomial> s;  // s[k] = s_{k+1}
    for (int k = 1; k <= d; ++k) {
        auto ck = GradedPolynomial::variable(r, "c" + std::to_string(k));
        auto sk = ck * Rational(k) * Rational((k % 2) ? 1 : -1);
        for (int t = 1; t < k; ++t) {
            auto ct = GradedPolynomial::variable(r, "c" + std::to_string(t));
            sk += ct * s[static_cast<size_t>(k - t - 1)] * Rational((t % 2) ? 1 : -1);
        }
        s.push_back(std::move(sk));
    }
    return s.back();
}

/// deg( prod_t c_{lambda_t}(tangent) . [V] ), summed over components.
inline Integer chern_number(const Variety& v, const Partition& partition) {
    int d = v.dimension();
    int sum = 0;
    for (int p : partition) {
        if (p < 1)
            throw std::invalid_argument("partition entries must be >= 1");
        sum += p;
    }
    if (sum != d)
        throw std::invalid_argument("partition sums to " + std::to_string(sum) +
                                    " but dim " + v.label() + " = " + std::to_string(d));
    Integer acc = 0;
    for (const auto& leaf : v.components()) {
        auto cd = tangent_chern(leaf);
        auto cls = cd.fundamental;
        for (int p : partition)
            cls *= cd.total.homogeneous_component(p);
        acc += to_integer(chow_degree(leaf.ambient, cls));
    }
    return acc;
}

/// s_d(V) computed twice: through the Newton identity on the Chern classes,
/// and through the virtual Chern roots
///   s_d = sum_i (n_i+1) h_i^d - sum_j (sum_i a_ji h_i)^d.
inline std::pair<Integer, Integer> s_number_routes(const Variety& v) {
    int d = v.dimension();
    Integer newton = 0, roots = 0;
    for (const auto& leaf : v.components()) {
        auto cd = tangent_chern(leaf);
        if (d == 0) {
            auto pts = to_integer(chow_degree(leaf.ambient, cd.fundamental));
            newton += pts;
            roots += pts;
            continue;
        }

        auto cr = chern_class_ring(d);
        std::vector<GradedPolynomial> images;
        for (int k = 1; k <= d; ++k)
            images.push_back(cd.total.homogeneous_component(k));
        RingMap eval(cr, cd.total.ring(), std::move(images));
        newton += to_integer(chow_degree(leaf.ambient, eval(newton_sd(d)) * cd.fundamental));

        auto r = cd.total.ring();
        auto vr = GradedPolynomial::zero(r);
        for (size_t i = 0; i < leaf.ambient.factors(); ++i)
            vr += GradedPolynomial::variable(r, "h" + std::to_string(i + 1), d) *
                  Rational(leaf.ambient.dims[i] + 1);
        for (const auto& cut : leaf.cuts) {
            auto divisor = GradedPolynomial::zero(r);
            for (size_t i = 0; i < cut.size(); ++i)
                divisor += hyperplane(r, i) * Rational(cut[i]);
            vr -= divisor.pow(static_cast<unsigned>(d));
        }
        roots += to_integer(chow_degree(leaf.ambient, vr * cd.fundamental));
    }
    return {newton, roots};
}

inline Integer s_number(const Variety& v) {
    auto [newton, roots] = s_number_routes(v);
    if (newton != roots)
        throw std::logic_error("s_number routes disagree on " + v.label() + ": " +
                               newton.get_str() + " vs " + roots.get_str());
    return newton;
}

}  // namespace cobord
