// Truncated multivariate power series: formal variables of weight one over a
// GradedPolynomial coefficient ring, cut at a total-degree bound.
#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cobord/polynomial.hpp"

namespace cobord {

class TruncatedSeries {
  public:
    using CoeffMap = std::map<Exponents, GradedPolynomial, MonomialLess>;

    TruncatedSeries(RingPtr coeff_ring, std::vector<std::string> formal_vars, int order)
        : ring_(std::move(coeff_ring)), vars_(std::move(formal_vars)), order_(order) {
        if (order_ < 0)
            throw std::invalid_argument("series order must be >= 0");
        for (size_t i = 0; i < vars_.size(); ++i)
            for (size_t j = i + 1; j < vars_.size(); ++j)
                if (vars_[i] == vars_[j])
                    throw std::invalid_argument("duplicate formal variable '" + vars_[i] + "'");
    }

    static TruncatedSeries zero(RingPtr ring, std::vector<std::string> vars, int order) {
        return TruncatedSeries(std::move(ring), std::move(vars), order);
    }

    /// The series consisting of the single formal variable vars[which].
    static TruncatedSeries generator(RingPtr ring, std::vector<std::string> vars, int order,
                                     size_t which) {
        TruncatedSeries s(std::move(ring), std::move(vars), order);
        if (which >= s.vars_.size())
            throw std::invalid_argument("generator index out of range");
        if (order >= 1) {
            Exponents e(s.vars_.size(), 0);
            e[which] = 1;
            s.coeffs_.emplace(std::move(e), GradedPolynomial::one(s.ring_));
        }
        return s;
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<std::string>& vars() const { return vars_; }
    int order() const { return order_; }
    const CoeffMap& terms() const { return coeffs_; }

    GradedPolynomial coefficient(const Exponents& e) const {
        auto it = coeffs_.find(e);
        return it == coeffs_.end() ? GradedPolynomial::zero(ring_) : it->second;
    }

    GradedPolynomial constant_term() const { return coefficient(Exponents(vars_.size(), 0)); }

    bool is_zero() const { return coeffs_.empty(); }

    void add_term(Exponents e, const GradedPolynomial& c) {
        if (e.size() != vars_.size())
            throw std::invalid_argument("series exponent arity mismatch");
        for (int x : e)
            if (x < 0)
                throw std::invalid_argument("negative exponent on a formal variable");
        require_same_ring(c.ring(), ring_, "series coefficient");
        if (total(e) > order_ || c.is_zero())
            return;
        auto [it, inserted] = coeffs_.emplace(std::move(e), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                coeffs_.erase(it);
        }
    }

    /// Copy truncated at a (not larger) order.
    TruncatedSeries truncated(int new_order) const {
        if (new_order > order_)
            throw std::invalid_argument("cannot extend a truncated series");
        TruncatedSeries out(ring_, vars_, new_order);
        for (const auto& [e, c] : coeffs_)
            if (total(e) <= new_order)
                out.coeffs_.emplace(e, c);
        return out;
    }

    /// Same coefficients on a new formal-variable list; each existing
    /// variable must appear in new_vars (fresh variables are fine).
    TruncatedSeries on_vars(std::vector<std::string> new_vars) const {
        std::vector<size_t> where(vars_.size());
        for (size_t i = 0; i < vars_.size(); ++i) {
            auto it = std::find(new_vars.begin(), new_vars.end(), vars_[i]);
            if (it == new_vars.end())
                throw std::invalid_argument("on_vars: variable '" + vars_[i] + "' dropped");
            where[i] = static_cast<size_t>(it - new_vars.begin());
        }
        TruncatedSeries out(ring_, std::move(new_vars), order_);
        for (const auto& [e, c] : coeffs_) {
            Exponents f(out.vars_.size(), 0);
            for (size_t i = 0; i < e.size(); ++i)
                f[where[i]] = e[i];
            out.coeffs_.emplace(std::move(f), c);
        }
        return out;
    }

    TruncatedSeries operator-() const {
        TruncatedSeries out(ring_, vars_, order_);
        for (const auto& [e, c] : coeffs_)
            out.coeffs_.emplace(e, -c);
        return out;
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        auto out = a.compatible_zero(b);
        for (const auto& [e, c] : a.coeffs_)
            out.add_term(e, c);
        for (const auto& [e, c] : b.coeffs_)
            out.add_term(e, c);
        return out;
    }

    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a + (-b);
    }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        auto out = a.compatible_zero(b);
        const size_t n = a.vars_.size();
        Exponents e(n, 0);
        for (const auto& [ea, ca] : a.coeffs_) {
            int da = total(ea);
            for (const auto& [eb, cb] : b.coeffs_) {
                if (da + total(eb) > out.order_)
                    continue;
                for (size_t i = 0; i < n; ++i)
                    e[i] = ea[i] + eb[i];
                out.add_term(e, ca * cb);
            }
        }
        return out;
    }

    friend TruncatedSeries operator*(TruncatedSeries s, const GradedPolynomial& p) {
        require_same_ring(s.ring_, p.ring(), "series scale");
        TruncatedSeries out(s.ring_, s.vars_, s.order_);
        for (const auto& [e, c] : s.coeffs_)
            out.add_term(e, c * p);
        return out;
    }

    friend TruncatedSeries operator*(TruncatedSeries s, const Rational& q) {
        TruncatedSeries out(s.ring_, s.vars_, s.order_);
        if (q != 0)
            for (auto& [e, c] : s.coeffs_)
                out.coeffs_.emplace(e, c * q);
        return out;
    }

    TruncatedSeries pow(unsigned n) const {
        TruncatedSeries acc(ring_, vars_, order_);
        if (order_ >= 0)
            acc.add_term(Exponents(vars_.size(), 0), GradedPolynomial::one(ring_));
        TruncatedSeries base = *this;
        while (n) {
            if (n & 1)
                acc = acc * base;
            if (n >>= 1)
                base = base * base;
        }
        return acc;
    }

    /// Equality of truncation contexts and of every retained coefficient.
    bool operator==(const TruncatedSeries& rhs) const {
        return vars_ == rhs.vars_ && order_ == rhs.order_ && same_ring(ring_, rhs.ring_) &&
               coeffs_ == rhs.coeffs_;
    }
    bool operator!=(const TruncatedSeries& rhs) const { return !(*this == rhs); }

    bool agrees_with(const TruncatedSeries& rhs, int up_to_order) const {
        return truncated(std::min(up_to_order, order_)) ==
               rhs.truncated(std::min(up_to_order, rhs.order_));
    }

    /// Substitutes series for formal variables. Every variable of *this that
    /// is not listed must exist in the (common) variable list of the
    /// substituted series and is mapped to itself. Substituted series must
    /// have zero constant term; the result is truncated at the minimum of all
    /// participating orders.
    TruncatedSeries substitute(
        const std::vector<std::pair<std::string, TruncatedSeries>>& subs) const {
        if (subs.empty())
            return *this;
        const std::vector<std::string>& tvars = subs.front().second.vars_;
        int out_order = order_;
        for (const auto& [name, s] : subs) {
            if (s.vars_ != tvars)
                throw std::invalid_argument(
                    "substitute: substituted series disagree on formal variables");
            require_same_ring(s.ring_, ring_, "substitute");
            if (!s.constant_term().is_zero())
                throw std::invalid_argument("substitute: series for '" + name +
                                            "' has a nonzero constant term");
            out_order = std::min(out_order, s.order_);
        }

        // Image of each of our formal variables in the target context.
        std::vector<const TruncatedSeries*> image(vars_.size(), nullptr);
        std::vector<TruncatedSeries> generators;
        generators.reserve(vars_.size());
        for (size_t i = 0; i < vars_.size(); ++i) {
            for (const auto& [name, s] : subs)
                if (name == vars_[i])
                    image[i] = &s;
            if (!image[i]) {
                auto it = std::find(tvars.begin(), tvars.end(), vars_[i]);
                if (it == tvars.end())
                    throw std::invalid_argument("substitute: no series given for '" + vars_[i] +
                                                "' and it is not a target variable");
                generators.push_back(generator(ring_, tvars, out_order,
                                               static_cast<size_t>(it - tvars.begin())));
                image[i] = &generators.back();
            }
        }

        // Power cache per variable: powers[i][k] = image_i^k.
        std::vector<std::vector<TruncatedSeries>> powers(vars_.size());
        TruncatedSeries result(ring_, tvars, out_order);
        TruncatedSeries unit(ring_, tvars, out_order);
        unit.add_term(Exponents(tvars.size(), 0), GradedPolynomial::one(ring_));

        for (const auto& [e, c] : coeffs_) {
            if (total(e) > out_order)
                continue;  // such a term could only produce dropped orders
            TruncatedSeries term = unit;
            for (size_t i = 0; i < vars_.size(); ++i) {
                if (e[i] == 0)
                    continue;
                auto& pw = powers[i];
                if (pw.empty())
                    pw.push_back(image[i]->truncated(out_order));
                while (static_cast<int>(pw.size()) < e[i])
                    pw.push_back(pw.back() * pw.front());
                term = term * pw[static_cast<size_t>(e[i]) - 1];
            }
            result = result + term * c;
        }
        return result;
    }

    /// Compositional inverse of a one-variable series u + O(u^2) with unit
    /// leading coefficient: returns g with f(g) = g(f) = u to the order.
    TruncatedSeries reverse() const {
        if (vars_.size() != 1)
            throw std::invalid_argument("reverse: series must have exactly one formal variable");
        if (!constant_term().is_zero())
            throw std::invalid_argument("reverse: series has a constant term");
        if (coefficient({1}) != GradedPolynomial::one(ring_))
            throw std::invalid_argument("reverse: leading coefficient is not 1");

        TruncatedSeries g = generator(ring_, vars_, order_, 0);
        for (int k = 2; k <= order_; ++k) {
            // f(g) = u + e_k u^k + O(u^{k+1}); cancel the error term.
            TruncatedSeries fg = substitute({{vars_[0], g}});
            GradedPolynomial err = fg.coefficient({k});
            if (!err.is_zero())
                g.add_term({k}, -err);
        }
        return g;
    }

    /// Evaluates the series at polynomial arguments (one per formal
    /// variable) in `target`, embedding coefficients by variable name. Exact
    /// when the arguments are nilpotent enough that no dropped order
    /// contributes; the caller is responsible for choosing the order.
    GradedPolynomial eval(const std::vector<GradedPolynomial>& args, const RingPtr& target) const {
        if (args.size() != vars_.size())
            throw std::invalid_argument("eval: need one argument per formal variable");
        for (const auto& a : args)
            require_same_ring(a.ring(), target, "eval argument");
        std::vector<std::vector<GradedPolynomial>> powers(args.size());
        GradedPolynomial out = GradedPolynomial::zero(target);
        for (const auto& [e, c] : coeffs_) {
            GradedPolynomial term = embed(c, target);
            for (size_t i = 0; i < args.size(); ++i) {
                if (e[i] == 0)
                    continue;
                auto& pw = powers[i];
                if (pw.empty())
                    pw.push_back(args[i]);
                while (static_cast<int>(pw.size()) < e[i])
                    pw.push_back(pw.back() * pw.front());
                term = term * pw[static_cast<size_t>(e[i]) - 1];
            }
            out += term;
        }
        return out;
    }

    /// Ascending by total degree in the formal variables; earlier variables
    /// first within a degree.
    std::string str() const {
        if (coeffs_.empty())
            return "0";
        std::vector<const CoeffMap::value_type*> order;
        order.reserve(coeffs_.size());
        for (const auto& kv : coeffs_)
            order.push_back(&kv);
        std::stable_sort(order.begin(), order.end(), [](auto* a, auto* b) {
            int da = total(a->first), db = total(b->first);
            if (da != db)
                return da < db;
            return MonomialLess{}(b->first, a->first);
        });
        std::ostringstream os;
        bool first = true;
        for (const auto* kv : order) {
            const auto& [e, c] = *kv;
            std::string mono = formal_monomial_str(e);
            bool neg = false;
            std::string body;
            if (c.terms().size() == 1) {
                const auto& [ce, cc] = *c.terms().begin();
                neg = cc < 0;
                GradedPolynomial absc =
                    GradedPolynomial::monomial(c.ring(), ce, neg ? Rational(-cc) : cc);
                body = absc.str();
                if (body == "1" && !mono.empty())
                    body.clear();
            } else {
                body = "(" + c.str() + ")";
            }
            if (first)
                os << (neg ? "-" : "");
            else
                os << (neg ? " - " : " + ");
            first = false;
            if (body.empty())
                os << mono;
            else if (mono.empty())
                os << body;
            else
                os << body << "*" << mono;
        }
        return os.str();
    }

  private:
    static int total(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

    TruncatedSeries compatible_zero(const TruncatedSeries& b) const {
        if (vars_ != b.vars_)
            throw std::invalid_argument("series defined on different formal variables");
        require_same_ring(ring_, b.ring_, "series op");
        return TruncatedSeries(ring_, vars_, std::min(order_, b.order_));
    }

    std::string formal_monomial_str(const Exponents& e) const {
        std::ostringstream os;
        bool any = false;
        for (size_t i = 0; i < e.size(); ++i) {
            if (!e[i])
                continue;
            if (any)
                os << "*";
            any = true;
            os << vars_[i];
            if (e[i] != 1)
                os << "^" << e[i];
        }
        return os.str();
    }

    RingPtr ring_;
    std::vector<std::string> vars_;
    int order_;
    CoeffMap coeffs_;
};

}  // namespace cobord
