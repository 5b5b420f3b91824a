// Acceptance gate: one pass/fail line per criterion, exact arithmetic
// throughout, exit 0 only if every criterion holds. The shipped catalog and
// the command-line binary are located through COBORD_STD_CATALOG and
// COBORD_CLI (set by ctest).
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "cobord/catalog.hpp"
#include "cobord/genera.hpp"
#include "cobord/theory.hpp"
#include "subprocess.hpp"

using namespace cobord;

namespace {

int failures = 0;

void criterion(int n, const std::string& name, const std::function<std::string()>& body) {
    std::string witness;
    try {
        witness = body();
    } catch (const std::exception& e) {
        witness = std::string("exception: ") + e.what();
    }
    if (witness.empty()) {
        std::cout << "criterion " << n << ": PASS  " << name << "\n";
    } else {
        ++failures;
        std::cout << "criterion " << n << ": FAIL  " << name << " — " << witness << "\n";
    }
}

std::string require(bool ok, const std::string& witness) {
    return ok ? "" : witness;
}

Catalog load_shipped_catalog() {
    auto path = testutil::env_or_empty("COBORD_STD_CATALOG");
    if (path.empty())
        throw std::runtime_error("COBORD_STD_CATALOG not set");
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return Catalog::from_json_text(buffer.str());
}

}  // namespace

int main() {
    criterion(1, "universal-law axioms at order 8 (under 60 s)", [] {
        auto start = std::chrono::steady_clock::now();
        auto report = universal_fgl(8).check_axioms();
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        if (!report.all_pass())
            return "axiom failure: " + report.str();
        return require(ms < 60000, "took " + std::to_string(ms) + " ms");
    });

    criterion(2, "specializations: m_k -> 0 gives u+v, m_k -> beta^k/(k+1) gives u+v-beta*uv",
              [] {
                  const auto& univ = universal_fgl(8);
                  auto add = univ.specialize(additive_specialization(7));
                  if (!(add == FormalGroupLaw::additive(8)))
                      return std::string("additive specialization differs from u+v");
                  auto mult = univ.specialize(multiplicative_specialization(7));
                  if (!(mult == FormalGroupLaw::multiplicative(8)))
                      return std::string(
                          "multiplicative specialization differs from u+v-beta*uv");
                  return std::string();
              });

    criterion(3, "Newton vs virtual-root s_d on the full standard catalog", [] {
        auto cat = load_shipped_catalog();
        if (cat.size() < 60)
            return "catalog has only " + std::to_string(cat.size()) + " varieties";
        for (const auto& v : cat.entries()) {
            auto [newton, roots] = s_number_routes(v);
            if (newton != roots)
                return v.label() + ": " + newton.get_str() + " vs " + roots.get_str();
        }
        return std::string();
    });

    criterion(4, "Adams divisibility sweep with spot values", [] {
        auto cat = load_shipped_catalog();
        int checked = 0;
        for (const auto& v : cat.entries())
            for (long p : {2L, 3L, 5L, 7L}) {
                if (!adams_dimension(v.dimension(), p))
                    continue;
                auto r = adams_check(v, p);
                ++checked;
                if (!r.passes)
                    return v.label() + ": s = " + r.s_value.get_str() +
                           " not divisible by " + std::to_string(p);
            }
        if (checked == 0)
            return std::string("sweep was empty");
        if (s_number(cat.at("P1")) != 2)
            return std::string("s_1(P1) != 2");
        if (s_number(cat.at("P2")) != 3)
            return std::string("s_2(P2) != 3");
        if (s_number(cat.at("H2_3")) != -10)
            return std::string("s_4(H2_3) != -10");
        return std::string();
    });

    criterion(5, "s_d vanishes on all catalog products (total dim <= 8)", [] {
        auto cat = load_shipped_catalog();
        const auto& entries = cat.entries();
        int pairs = 0;
        for (size_t i = 0; i < entries.size(); ++i) {
            if (entries[i].dimension() < 1)
                continue;
            for (size_t j = i; j < entries.size(); ++j) {
                if (entries[j].dimension() < 1 ||
                    entries[i].dimension() + entries[j].dimension() > 8)
                    continue;
                auto prod = Variety::product(entries[i], entries[j]);
                ++pairs;
                if (s_number(prod) != 0)
                    return prod.label() + ": s_" + std::to_string(prod.dimension()) + " = " +
                           s_number(prod).get_str();
            }
        }
        if (pairs == 0)
            return std::string("sweep was empty");
        return std::string();
    });

    criterion(6, "Lazard coordinates: invertible bases, [P^n] = (n+1) m_n, quadric, cubic", [] {
        for (int d = 0; d <= 8; ++d)
            if (!invertible(chern_number_matrix(d).second))
                return "Chern matrix singular in dimension " + std::to_string(d);
        for (int n = 0; n <= 8; ++n) {
            auto lc = class_in_lazard(Variety::projective_space(n));
            auto expected = n == 0 ? GradedPolynomial::one(lazard_ring(0))
                                   : Rational(n + 1) * GradedPolynomial::variable(
                                                           lazard_ring(n),
                                                           "m" + std::to_string(n));
            if (!lazard_eq(lc.element, LazardElement(expected)))
                return "class of P" + std::to_string(n) + " is " + lc.element.str();
        }
        auto quadric = class_in_lazard(Variety::make("Q", Ambient({3}), {{2}}));
        auto p1xp1 = class_in_lazard(
            Variety::product(Variety::projective_space(1), Variety::projective_space(1)));
        if (!lazard_eq(quadric.element, p1xp1.element))
            return "quadric " + quadric.element.str() + " vs P1xP1 " + p1xp1.element.str();
        auto cubic = class_in_lazard(Variety::make("X3", Ambient({3}), {{3}}));
        // Partition basis in dimension 2: (2) -> [P2], (1,1) -> [P1xP1].
        if (cubic.coordinates.size() != 2 || cubic.coordinates[0].second != Rational(-5) ||
            cubic.coordinates[1].second != Rational(6))
            return std::string("cubic is not 6 [P1]^2 - 5 [P2]");
        if (s_number(Variety::make("X3", Ambient({3}), {{3}})) != -15)
            return std::string("s_2(cubic) != -15");
        return std::string();
    });

    criterion(7, "cross-theory: multiplicative class equals beta^dim * chi(V, O_V), whole catalog",
              [] {
                  auto cat = load_shipped_catalog();
                  for (const auto& v : cat.entries()) {
                      auto rep = cross_theory_check(v);
                      if (!rep.pass)
                          return rep.witness;
                  }
                  return std::string();
              });

    criterion(8, "Rost degree formula instance and gdf negative control", [] {
        auto cat = load_shipped_catalog();
        MorphismDatum f{cat.at("cubic3"), cat.at("P2"), Integer(1)};
        auto rost = rost_check(f, 3, Integer(-6));
        if (!rost.pass)
            return "rost: " + rost.witness;
        if (rost.delta != -18 || rost.implied_eta != -6)
            return "rost: delta = " + rost.delta.get_str() + ", eta = " +
                   rost.implied_eta.get_str();
        FormalClass off_by_one;
        off_by_one.add(Rational(6), cat.at("P1xP1")).add(Rational(-5), cat.at("P2"));
        auto gdf = gdf_verify(f, off_by_one);
        if (gdf.pass)
            return std::string("deliberately wrong decomposition was accepted");
        if (gdf.witness.find("c2") == std::string::npos)
            return "witness lacks the Chern number: " + gdf.witness;
        return std::string();
    });

    criterion(9, "extract_fgl round trip for CH, K0 and the universal theory at order 8", [] {
        const std::pair<const char*, TheorySpec> specs[] = {
            {"CH", TheorySpec::chow(8)},
            {"K0", TheorySpec::k_theory(8)},
            {"universal", TheorySpec::universal(8)},
        };
        for (const auto& [name, spec] : specs)
            if (!(extract_fgl(spec, 8) == spec.fgl))
                return std::string(name) + ": extracted law differs";
        return std::string();
    });

    criterion(10, "determinism and exactness of tool output", [] {
        auto cli = testutil::env_or_empty("COBORD_CLI");
        auto catalog = testutil::env_or_empty("COBORD_STD_CATALOG");
        if (cli.empty() || catalog.empty())
            return std::string("COBORD_CLI / COBORD_STD_CATALOG not set");
        const std::string commands[] = {
            " lazard --order 8 --show aij",
            " lazard --order 4 --show aij --format json",
            " variety --catalog " + catalog + " --show chern-numbers --format csv",
            " variety --catalog " + catalog + " --show lazard-class --format json",
            " check rost --catalog " + catalog +
                " --source cubic3 --target P2 --deg 1 --p 3 --format json",
            " check gdf --catalog " + catalog,
        };
        // Floating-point droppings: digits around a decimal point, exponent
        // notation, or the rendering of non-finite values.
        const std::regex float_pattern(
            R"([0-9]\.[0-9]|[0-9][eE][-+][0-9]|\bnan\b|\binf\b)");
        for (const auto& args : commands) {
            auto first = testutil::run_command(cli + args);
            auto second = testutil::run_command(cli + args);
            if (first.output != second.output || first.exit_code != second.exit_code)
                return "non-deterministic output for '" + args + "'";
            if (std::regex_search(first.output, float_pattern))
                return "float-like token in output of '" + args + "'";
        }
        return std::string();
    });

    return failures == 0 ? 0 : 1;
}
