// Canonical JSON forms: polynomials as exponent vectors with exact
// numerator/denominator strings, group laws as (i,j)-indexed coefficient
// tables, theory elements on the monomial basis, and {check, inputs, pass,
// witness} reports. Term order follows the library's monomial order, so
// serialization is byte-deterministic.
#pragma once

#include <string>

#include "json.hpp"

#include "cobord/fgl.hpp"
#include "cobord/lazard.hpp"
#include "cobord/theory.hpp"

namespace cobord {

inline nlohmann::ordered_json rational_json(const Rational& q) {
    nlohmann::ordered_json j;
    j["num"] = q.get_num().get_str();
    j["den"] = q.get_den().get_str();
    return j;
}

inline nlohmann::ordered_json polynomial_json(const GradedPolynomial& p) {
    nlohmann::ordered_json j;
    auto vars = nlohmann::ordered_json::array();
    for (const auto& v : p.ring()->vars())
        vars.push_back(v.name);
    j["vars"] = std::move(vars);
    auto terms = nlohmann::ordered_json::array();
    for (const auto& [exps, c] : p.terms()) {
        nlohmann::ordered_json t;
        t["exponents"] = exps;
        t["num"] = c.get_num().get_str();
        t["den"] = c.get_den().get_str();
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

inline nlohmann::ordered_json fgl_json(const FormalGroupLaw& f) {
    nlohmann::ordered_json j;
    j["order"] = f.order();
    auto vars = nlohmann::ordered_json::array();
    for (const auto& v : f.ring()->vars())
        vars.push_back(v.name);
    j["coefficientVars"] = std::move(vars);
    auto table = nlohmann::ordered_json::array();
    for (int total = 2; total <= f.order(); ++total)
        for (int i = 1; i < total; ++i) {
            auto value = f.coefficient(i, total - i);
            if (value.is_zero())
                continue;
            nlohmann::ordered_json entry;
            entry["i"] = i;
            entry["j"] = total - i;
            entry["value"] = polynomial_json(value);
            entry["text"] = value.str();
            table.push_back(std::move(entry));
        }
    j["coefficients"] = std::move(table);
    return j;
}

inline nlohmann::ordered_json lazard_element_json(const LazardElement& e) {
    nlohmann::ordered_json j = polynomial_json(e.poly());
    j["text"] = e.str();
    return j;
}

/// A theory-ring element expanded over the monomial basis in the x's, with
/// coefficient-ring scalars attached to each basis monomial.
inline nlohmann::ordered_json theory_element_json(const TheoryRing& t,
                                                  const GradedPolynomial& e) {
    require_same_ring(e.ring(), t.ring(), "theory_element_json");
    nlohmann::ordered_json j;
    j["theory"] = t.spec().name();
    j["ambient"] = t.ambient().dims;

    // Group terms by their x-part; map order keeps this deterministic.
    std::map<Exponents, GradedPolynomial, MonomialLess> by_basis;
    for (const auto& [exps, c] : e.terms()) {
        Exponents xe(exps.begin() + static_cast<long>(t.coeff_arity()), exps.end());
        Exponents ce(exps.begin(), exps.begin() + static_cast<long>(t.coeff_arity()));
        auto [it, fresh] = by_basis.try_emplace(std::move(xe), t.spec().ring());
        it->second.add_term(std::move(ce), c);
    }
    auto basis = nlohmann::ordered_json::array();
    for (const auto& [xe, coeff] : by_basis) {
        nlohmann::ordered_json entry;
        entry["exponents"] = xe;
        entry["coefficient"] = polynomial_json(coeff);
        entry["text"] = coeff.str();
        basis.push_back(std::move(entry));
    }
    j["basis"] = std::move(basis);
    return j;
}

inline nlohmann::ordered_json report_json(const std::string& check,
                                          nlohmann::ordered_json inputs, bool pass,
                                          const std::string& witness) {
    nlohmann::ordered_json j;
    j["check"] = check;
    j["inputs"] = std::move(inputs);
    j["pass"] = pass;
    j["witness"] = witness;
    return j;
}

}  // namespace cobord
