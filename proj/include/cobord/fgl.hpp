// Formal group laws F(u,v) = u + v + sum a_ij u^i v^j over a graded
// coefficient ring, truncated at a total order: axiom checking,
// specialization of coefficients, formal inverse and n-series.
#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "cobord/series.hpp"

namespace cobord {

struct AxiomResult {
    bool pass = true;
    std::string witness;  // first offending monomial and its coefficient
};

struct AxiomReport {
    AxiomResult unitality;
    AxiomResult commutativity;
    AxiomResult associativity;

    bool all_pass() const {
        return unitality.pass && commutativity.pass && associativity.pass;
    }

    std::string str() const {
        auto line = [](const char* name, const AxiomResult& r) {
            std::string s = std::string(name) + ": " + (r.pass ? "pass" : "FAIL");
            if (!r.pass)
                s += " at " + r.witness;
            return s;
        };
        return line("unitality", unitality) + "\n" + line("commutativity", commutativity) + "\n" +
               line("associativity", associativity);
    }
};

class FormalGroupLaw {
  public:
    using Table = std::map<std::pair<int, int>, GradedPolynomial>;

    /// Wraps a two-variable series. Axioms are NOT validated here (the
    /// checker below must be able to report failures); only shape is.
    static FormalGroupLaw from_series(TruncatedSeries f) {
        if (f.vars().size() != 2)
            throw std::invalid_argument("formal group law needs exactly two formal variables");
        return FormalGroupLaw(std::move(f));
    }

    static FormalGroupLaw from_table(RingPtr ring, int order, const Table& table) {
        TruncatedSeries f(ring, {"u", "v"}, order);
        auto one = GradedPolynomial::one(ring);
        f.add_term({1, 0}, one);
        f.add_term({0, 1}, one);
        for (const auto& [ij, a] : table) {
            if (ij.first < 1 || ij.second < 1)
                throw std::invalid_argument("table indices must satisfy i, j >= 1");
            f.add_term({ij.first, ij.second}, a);
        }
        return FormalGroupLaw(std::move(f));
    }

    /// F = u + v over the empty coefficient ring.
    static FormalGroupLaw additive(int order) {
        return from_table(Ring::make("Z", {}), order, {});
    }

    /// The ring Z[beta, beta^-1] of the multiplicative periodic theory.
    static RingPtr beta_ring() {
        return Ring::make("Z[beta,beta^-1]", {GradedVariable{"beta", -1, true, 0}});
    }

    /// F = u + v - beta*u*v.
    static FormalGroupLaw multiplicative(int order) {
        auto k = beta_ring();
        return from_table(k, order, {{{1, 1}, -GradedPolynomial::variable(k, "beta")}});
    }

    const TruncatedSeries& series() const { return f_; }
    const RingPtr& ring() const { return f_.ring(); }
    int order() const { return f_.order(); }

    /// The coefficient a_ij of u^i v^j (any i, j, including the linear part).
    GradedPolynomial coefficient(int i, int j) const { return f_.coefficient({i, j}); }

    /// All nonzero a_ij with i, j >= 1.
    Table table() const {
        Table t;
        for (const auto& [e, c] : f_.terms())
            if (e[0] >= 1 && e[1] >= 1)
                t.emplace(std::make_pair(e[0], e[1]), c);
        return t;
    }

    bool operator==(const FormalGroupLaw& rhs) const { return f_ == rhs.f_; }
    bool operator!=(const FormalGroupLaw& rhs) const { return !(*this == rhs); }

    /// Checks F = u+v mod uv, F(u,v) = F(v,u), F(F(u,v),w) = F(u,F(v,w))
    /// identically to the truncation order. A failure is reported with the
    /// monomial-order-least offending monomial, never thrown.
    AxiomReport check_axioms() const {
        AxiomReport rep;

        TruncatedSeries unital_defect(f_.ring(), f_.vars(), f_.order());
        for (const auto& [e, c] : f_.terms()) {
            if (e[0] != 0 && e[1] != 0)
                continue;
            bool is_linear = (e == Exponents{1, 0}) || (e == Exponents{0, 1});
            if (is_linear)
                unital_defect.add_term(e, c - GradedPolynomial::one(f_.ring()));
            else
                unital_defect.add_term(e, c);
        }
        rep.unitality = from_defect(unital_defect, f_.vars());

        TruncatedSeries swapped(ring(), f_.vars(), order());  // F(v, u)
        for (const auto& [e, c] : f_.terms())
            swapped.add_term({e[1], e[0]}, c);
        rep.commutativity = from_defect(f_ - swapped, f_.vars());

        const std::string u = f_.vars()[0], v = f_.vars()[1];
        const std::string w = (u != "w" && v != "w") ? "w" : "w_";
        std::vector<std::string> uvw = {u, v, w};
        auto gen_u = TruncatedSeries::generator(ring(), uvw, order(), 0);
        auto gen_v = TruncatedSeries::generator(ring(), uvw, order(), 1);
        auto gen_w = TruncatedSeries::generator(ring(), uvw, order(), 2);
        auto f_uv = f_.on_vars(uvw);
        auto f_vw = f_.substitute({{u, gen_v}, {v, gen_w}});
        auto lhs = f_.substitute({{u, f_uv}, {v, gen_w}});
        auto rhs = f_.substitute({{u, gen_u}, {v, f_vw}});
        rep.associativity = from_defect(lhs - rhs, uvw);

        return rep;
    }

    /// Applies phi to every coefficient. The result is re-checked: a
    /// coefficient map must send a group law to a group law.
    FormalGroupLaw specialize(const RingMap& phi) const {
        TruncatedSeries g(phi.target(), f_.vars(), f_.order());
        for (const auto& [e, c] : f_.terms())
            g.add_term(e, phi(c));
        FormalGroupLaw out(std::move(g));
        auto rep = out.check_axioms();
        if (!rep.all_pass())
            throw std::domain_error("specialization broke the group-law axioms:\n" + rep.str());
        return out;
    }

    /// iota(u) with F(u, iota(u)) = 0 to the truncation order.
    TruncatedSeries formal_inverse() const {
        const std::string u = f_.vars()[0], v = f_.vars()[1];
        std::vector<std::string> t = {u};
        auto gen = TruncatedSeries::generator(ring(), t, order(), 0);
        auto iota = -gen;
        for (int k = 2; k <= order(); ++k) {
            // F(u, iota) = e_k u^k + O(u^{k+1}); dF/dv = 1 + higher kills
            // nothing below order k, so subtracting e_k u^k is exact.
            auto err = f_.substitute({{u, gen}, {v, iota}}).coefficient({k});
            if (!err.is_zero())
                iota.add_term({k}, -err);
        }
        return iota;
    }

    /// [n](u): [0] = 0, [n+1] = F([n](u), u), [-n] = iota([n](u)).
    TruncatedSeries n_series(long n) const {
        const std::string u = f_.vars()[0], v = f_.vars()[1];
        std::vector<std::string> t = {u};
        auto gen = TruncatedSeries::generator(ring(), t, order(), 0);
        auto acc = TruncatedSeries::zero(ring(), t, order());
        for (long k = 0; k < (n < 0 ? -n : n); ++k)
            acc = f_.substitute({{u, acc}, {v, gen}});
        if (n < 0)
            acc = formal_inverse().substitute({{u, acc}});
        return acc;
    }

  private:
    explicit FormalGroupLaw(TruncatedSeries f) : f_(std::move(f)) {}

    static AxiomResult from_defect(const TruncatedSeries& defect,
                                   const std::vector<std::string>& vars) {
        AxiomResult r;
        if (defect.is_zero())
            return r;
        const auto& [e, c] = *defect.terms().begin();
        std::ostringstream os;
        for (size_t i = 0; i < e.size(); ++i) {
            if (!e[i])
                continue;
            if (os.tellp() > 0)
                os << "*";
            os << vars[i];
            if (e[i] != 1)
                os << "^" << e[i];
        }
        r.pass = false;
        r.witness = os.str() + ": " + c.str();
        return r;
    }

    TruncatedSeries f_;
};

}  // namespace cobord
