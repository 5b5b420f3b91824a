// Ring declarations: ordered lists of graded variables, optionally Laurent
// (negative exponents) or nilpotent (x^k == 0, reduction applied eagerly).
#pragma once

#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cobord {

using Exponents = std::vector<int>;

struct GradedVariable {
    std::string name;
    int degree = 0;
    // Negative exponents allowed (models the formal inverse, e.g. beta^-1,
    // with beta * beta^-1 -> 1 happening in exponent arithmetic).
    bool laurent = false;
    // If > 0, var^power_zero == 0 and larger exponents are dropped eagerly.
    int power_zero = 0;

    bool operator==(const GradedVariable&) const = default;
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Immutable ring declaration shared by every value built over it. The name
/// is advisory (used in diagnostics); two rings with identical variable
/// declarations are interchangeable.
class Ring {
  public:
    static RingPtr make(std::string name, std::vector<GradedVariable> vars) {
        for (size_t i = 0; i < vars.size(); ++i)
            for (size_t j = i + 1; j < vars.size(); ++j)
                if (vars[i].name == vars[j].name)
                    throw std::invalid_argument("duplicate variable name '" + vars[i].name +
                                                "' in ring declaration");
        return std::shared_ptr<const Ring>(new Ring(std::move(name), std::move(vars)));
    }

    static RingPtr make(std::vector<GradedVariable> vars) { return make("", std::move(vars)); }

    /// The constant ring (no variables).
    static RingPtr trivial() { return make("Q", {}); }

    const std::string& name() const { return name_; }

    size_t arity() const { return vars_.size(); }
    const GradedVariable& var(size_t i) const { return vars_.at(i); }
    const std::vector<GradedVariable>& vars() const { return vars_; }

    std::optional<size_t> find(std::string_view name) const {
        for (size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i].name == name)
                return i;
        return std::nullopt;
    }

    size_t index_of(std::string_view name) const {
        if (auto i = find(name))
            return *i;
        throw std::invalid_argument("no variable '" + std::string(name) + "' in ring " + str());
    }

    bool same(const Ring& other) const { return this == &other || vars_ == other.vars_; }

    int monomial_degree(const Exponents& e) const {
        int d = 0;
        for (size_t i = 0; i < vars_.size() && i < e.size(); ++i)
            d += e[i] * vars_[i].degree;
        return d;
    }

    std::string str() const {
        std::ostringstream os;
        os << name_ << "[";
        for (size_t i = 0; i < vars_.size(); ++i) {
            if (i)
                os << ",";
            os << vars_[i].name;
            if (vars_[i].laurent)
                os << "~";  // marks an invertible variable
        }
        os << "]";
        return os.str();
    }

  private:
    Ring(std::string name, std::vector<GradedVariable> vars)
        : name_(std::move(name)), vars_(std::move(vars)) {}
    std::string name_;
    std::vector<GradedVariable> vars_;
};

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
    return a == b || (a && b && a->same(*b));
}

inline void require_same_ring(const RingPtr& a, const RingPtr& b, const char* where) {
    if (!same_ring(a, b))
        throw std::invalid_argument(std::string(where) + ": ring mismatch between " + a->str() +
                                    " and " + b->str());
}

}  // namespace cobord
