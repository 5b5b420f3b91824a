// cobord — batch front-end over the library: prints universal-law
// coefficients and axiom reports, tabulates Chern numbers, s_d genera and
// Lazard classes over a variety catalog, and runs the verification sweeps.
//
// Exit codes: 0 = all requested checks pass, 1 = a mathematical check
// failed, 2 = usage or input error. Output is byte-deterministic for a
// given invocation: rows follow catalog order and the canonical monomial
// and partition orders, and every number is exact (integers or "p/q").
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cobord/catalog.hpp"
#include "cobord/genera.hpp"
#include "cobord/serialize.hpp"
#include "cobord/theory.hpp"

namespace {

using namespace cobord;

constexpr const char* kCatalogEnvVar = "COBORD_CATALOG";

enum class ExitCode : int { pass = 0, check_failed = 1, usage = 2 };

struct RunConfig {
    int order = 8;
    std::string catalog_path;  // empty: $COBORD_CATALOG, else built-in standard
    std::string format = "text";
};

// ---------------------------------------------------------------------------
// Output assembly: small string tables rendered to text, CSV or JSON.

struct Table {
    std::vector<std::string> headers;
    std::vector<std::vector<std::string>> rows;

    void add(std::vector<std::string> row) { rows.push_back(std::move(row)); }

    std::string render(const std::string& format) const {
        if (format == "json")
            return render_json();
        if (format == "csv")
            return render_csv();
        return render_text();
    }

  private:
    std::string render_text() const {
        std::vector<size_t> width(headers.size());
        for (size_t i = 0; i < headers.size(); ++i)
            width[i] = headers[i].size();
        for (const auto& row : rows)
            for (size_t i = 0; i < row.size(); ++i)
                width[i] = std::max(width[i], row[i].size());
        std::ostringstream os;
        auto line = [&](const std::vector<std::string>& cells) {
            for (size_t i = 0; i < cells.size(); ++i) {
                os << cells[i];
                if (i + 1 < cells.size())
                    os << std::string(width[i] - cells[i].size() + 2, ' ');
            }
            os << '\n';
        };
        line(headers);
        for (const auto& row : rows)
            line(row);
        return os.str();
    }

    static std::string csv_cell(const std::string& s) {
        if (s.find_first_of(",\"\n") == std::string::npos)
            return s;
        std::string quoted = "\"";
        for (char c : s) {
            if (c == '"')
                quoted += '"';
            quoted += c;
        }
        return quoted + "\"";
    }

    std::string render_csv() const {
        std::ostringstream os;
        auto line = [&](const std::vector<std::string>& cells) {
            for (size_t i = 0; i < cells.size(); ++i) {
                if (i)
                    os << ',';
                os << csv_cell(cells[i]);
            }
            os << '\n';
        };
        line(headers);
        for (const auto& row : rows)
            line(row);
        return os.str();
    }

    std::string render_json() const {
        auto doc = nlohmann::ordered_json::array();
        for (const auto& row : rows) {
            nlohmann::ordered_json obj;
            for (size_t i = 0; i < headers.size() && i < row.size(); ++i)
                obj[headers[i]] = row[i];
            doc.push_back(std::move(obj));
        }
        return doc.dump(2) + "\n";
    }
};

std::string render_report(const nlohmann::ordered_json& report, const std::string& format) {
    if (format == "json")
        return report.dump(2) + "\n";
    std::ostringstream os;
    if (format == "csv") {
        os << "check,pass,witness\n"
           << report["check"].get<std::string>() << ','
           << (report["pass"].get<bool>() ? "true" : "false") << ','
           << report["witness"].get<std::string>() << '\n';
        return os.str();
    }
    os << report["check"].get<std::string>() << ": "
       << (report["pass"].get<bool>() ? "pass" : "FAIL");
    const auto& witness = report["witness"].get<std::string>();
    if (!witness.empty())
        os << " (" << witness << ")";
    os << '\n';
    return os.str();
}

// ---------------------------------------------------------------------------
// Catalog plumbing.

Catalog load_catalog(const RunConfig& cfg) {
    std::string path = cfg.catalog_path;
    if (path.empty())
        if (const char* env = std::getenv(kCatalogEnvVar))
            path = env;
    if (path.empty())
        return Catalog::standard();
    std::string text;
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        text = buffer.str();
    } else {
        std::ifstream in(path);
        if (!in)
            throw CatalogError("cannot open catalog file '" + path + "'");
        std::ostringstream buffer;
        buffer << in.rdbuf();
        text = buffer.str();
    }
    return Catalog::from_json_text(text);
}

nlohmann::ordered_json catalog_input(const RunConfig& cfg) {
    if (!cfg.catalog_path.empty())
        return cfg.catalog_path;
    if (const char* env = std::getenv(kCatalogEnvVar))
        return env;
    return "builtin standard catalog";
}

// ---------------------------------------------------------------------------
// lazard: universal-law coefficients and the axiom report.

ExitCode cmd_lazard(const RunConfig& cfg, const std::string& show) {
    const auto& law = universal_fgl(cfg.order);
    if (show == "aij") {
        Table t;
        t.headers = {"i", "j", "coefficient"};
        for (int total = 2; total <= cfg.order; ++total)
            for (int i = 1; total - i >= i; ++i)
                t.add({std::to_string(i), std::to_string(total - i),
                       law.coefficient(i, total - i).str()});
        if (cfg.format == "text") {
            std::ostringstream os;
            for (const auto& row : t.rows)
                os << "(" << row[0] << "," << row[1] << "): " << row[2] << '\n';
            os << "symmetric pairs (j,i) are implied\n";
            std::cout << os.str();
        } else {
            std::cout << t.render(cfg.format);
        }
        return ExitCode::pass;
    }

    // show == "axioms"
    auto report = law.check_axioms();
    Table t;
    t.headers = {"axiom", "pass", "witness"};
    t.add({"unitality", report.unitality.pass ? "true" : "false", report.unitality.witness});
    t.add({"commutativity", report.commutativity.pass ? "true" : "false",
           report.commutativity.witness});
    t.add({"associativity", report.associativity.pass ? "true" : "false",
           report.associativity.witness});
    std::cout << t.render(cfg.format);
    return report.all_pass() ? ExitCode::pass : ExitCode::check_failed;
}

// ---------------------------------------------------------------------------
// variety: per-variety tables over a catalog.

std::string partition_key(const Partition& p) {
    return partition_chern_label(p);
}

ExitCode cmd_variety(const RunConfig& cfg, const std::string& show) {
    Catalog cat = load_catalog(cfg);

    if (show == "chern-numbers") {
        if (cfg.format == "json") {
            auto doc = nlohmann::ordered_json::array();
            for (const auto& v : cat.entries()) {
                nlohmann::ordered_json row;
                row["label"] = v.label();
                int d = v.dimension();
                row["dimension"] = d;
                nlohmann::ordered_json values;
                for (const auto& mu : partitions_of(d))
                    values[partition_key(mu)] = chern_number(v, mu).get_str();
                values["s" + std::to_string(d)] = s_number(v).get_str();
                row["values"] = std::move(values);
                doc.push_back(std::move(row));
            }
            std::cout << doc.dump(2) << "\n";
        } else if (cfg.format == "csv") {
            Table t;
            t.headers = {"label", "dimension", "quantity", "value"};
            for (const auto& v : cat.entries()) {
                int d = v.dimension();
                for (const auto& mu : partitions_of(d))
                    t.add({v.label(), std::to_string(d), partition_key(mu),
                           chern_number(v, mu).get_str()});
                t.add({v.label(), std::to_string(d), "s" + std::to_string(d),
                       s_number(v).get_str()});
            }
            std::cout << t.render("csv");
        } else {
            Table t;
            t.headers = {"label", "dim", "values"};
            for (const auto& v : cat.entries()) {
                int d = v.dimension();
                std::string values;
                for (const auto& mu : partitions_of(d))
                    values += partition_key(mu) + "=" + chern_number(v, mu).get_str() + " ";
                values += "s" + std::to_string(d) + "=" + s_number(v).get_str();
                t.add({v.label(), std::to_string(d), values});
            }
            std::cout << t.render("text");
        }
        return ExitCode::pass;
    }

    if (show == "sd") {
        Table t;
        t.headers = {"label", "dimension", "sd"};
        for (const auto& v : cat.entries())
            t.add({v.label(), std::to_string(v.dimension()), s_number(v).get_str()});
        std::cout << t.render(cfg.format);
        return ExitCode::pass;
    }

    // show == "lazard-class"
    if (cfg.format == "json") {
        auto doc = nlohmann::ordered_json::array();
        for (const auto& v : cat.entries()) {
            auto lc = class_in_lazard(v);
            nlohmann::ordered_json row;
            row["label"] = v.label();
            row["dimension"] = lc.dimension;
            row["class"] = lc.element.str();
            nlohmann::ordered_json coords;
            for (const auto& [mu, value] : lc.coordinates)
                coords[partition_str(mu)] = rational_str(value);
            row["coordinates"] = std::move(coords);
            row["element"] = lazard_element_json(lc.element);
            doc.push_back(std::move(row));
        }
        std::cout << doc.dump(2) << "\n";
        return ExitCode::pass;
    }
    Table t;
    t.headers = {"label", "dimension", "class"};
    for (const auto& v : cat.entries()) {
        auto lc = class_in_lazard(v);
        t.add({v.label(), std::to_string(lc.dimension), lc.element.str()});
    }
    std::cout << t.render(cfg.format);
    return ExitCode::pass;
}

// ---------------------------------------------------------------------------
// check: verification sweeps with {check, inputs, pass, witness} reports.

ExitCode finish_check(const nlohmann::ordered_json& report, const RunConfig& cfg) {
    std::cout << render_report(report, cfg.format);
    return report["pass"].get<bool>() ? ExitCode::pass : ExitCode::check_failed;
}

ExitCode cmd_check_adams(const RunConfig& cfg, std::optional<long> prime_filter) {
    Catalog cat = load_catalog(cfg);
    static const long primes[] = {2, 3, 5, 7};
    bool pass = true;
    std::string witness;
    int checked = 0;
    for (const auto& v : cat.entries()) {
        for (long p : primes) {
            if (prime_filter && *prime_filter != p)
                continue;
            if (!adams_dimension(v.dimension(), p))
                continue;
            auto r = adams_check(v, p);
            ++checked;
            if (!r.passes && pass) {
                pass = false;
                witness = v.label() + ": s_" + std::to_string(v.dimension()) + " = " +
                          r.s_value.get_str() + " is not divisible by " + std::to_string(p);
            }
        }
    }
    nlohmann::ordered_json inputs;
    inputs["catalog"] = catalog_input(cfg);
    if (prime_filter)
        inputs["p"] = *prime_filter;
    inputs["divisibilities"] = checked;
    return finish_check(report_json("adams", std::move(inputs), pass, witness), cfg);
}

ExitCode cmd_check_products(const RunConfig& cfg) {
    Catalog cat = load_catalog(cfg);
    bool pass = true;
    std::string witness;
    int checked = 0;
    const auto& entries = cat.entries();
    for (size_t i = 0; i < entries.size(); ++i) {
        if (entries[i].dimension() < 1)
            continue;
        for (size_t j = i; j < entries.size(); ++j) {
            if (entries[j].dimension() < 1 ||
                entries[i].dimension() + entries[j].dimension() > 8)
                continue;
            auto prod = Variety::product(entries[i], entries[j]);
            auto sd = s_number(prod);
            ++checked;
            if (sd != 0 && pass) {
                pass = false;
                witness = prod.label() + ": s_" + std::to_string(prod.dimension()) + " = " +
                          sd.get_str() + " != 0";
            }
        }
    }
    nlohmann::ordered_json inputs;
    inputs["catalog"] = catalog_input(cfg);
    inputs["pairs"] = checked;
    return finish_check(report_json("products", std::move(inputs), pass, witness), cfg);
}

ExitCode cmd_check_rost(const RunConfig& cfg, const std::string& source,
                        const std::string& target, long degree, long p) {
    Catalog cat = load_catalog(cfg);
    MorphismDatum f{cat.at(source), cat.at(target), Integer(degree)};
    auto rep = rost_check(f, p);
    nlohmann::ordered_json inputs;
    inputs["catalog"] = catalog_input(cfg);
    inputs["source"] = source;
    inputs["target"] = target;
    inputs["deg"] = degree;
    inputs["p"] = p;
    std::string witness = rep.pass ? "delta = " + rep.delta.get_str() +
                                         ", implied eta-degree = " + rep.implied_eta.get_str()
                                   : rep.witness;
    return finish_check(report_json("rost", std::move(inputs), rep.pass, witness), cfg);
}

// The gdf subcommand is the library's negative control: it feeds the
// deliberately off-by-one decomposition of the cubic-surface comparison into
// the checker, which must reject it and name the offending Chern number.
ExitCode cmd_check_gdf(const RunConfig& cfg) {
    Catalog cat = load_catalog(cfg);
    MorphismDatum f{cat.at("cubic3"), cat.at("P2"), Integer(1)};
    FormalClass off_by_one;
    off_by_one.add(Rational(6), cat.at("P1xP1")).add(Rational(-5), cat.at("P2"));
    auto rep = gdf_verify(f, off_by_one);
    nlohmann::ordered_json inputs;
    inputs["catalog"] = catalog_input(cfg);
    inputs["source"] = "cubic3";
    inputs["target"] = "P2";
    inputs["deg"] = 1;
    inputs["decomposition"] = "6 [P1xP1] - 5 [P2]";
    return finish_check(report_json("gdf", std::move(inputs), rep.pass, rep.witness), cfg);
}

ExitCode cmd_check_fgl_roundtrip(const RunConfig& cfg) {
    bool pass = true;
    std::string witness;
    const std::pair<const char*, TheorySpec> specs[] = {
        {"CH", TheorySpec::chow(cfg.order)},
        {"K0", TheorySpec::k_theory(cfg.order)},
        {"universal", TheorySpec::universal(cfg.order)},
    };
    for (const auto& [name, spec] : specs)
        if (!(extract_fgl(spec, cfg.order) == spec.fgl) && pass) {
            pass = false;
            witness = std::string(name) + ": extracted law differs from the defining law";
        }
    nlohmann::ordered_json inputs;
    inputs["order"] = cfg.order;
    return finish_check(report_json("fgl-roundtrip", std::move(inputs), pass, witness), cfg);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact formal-group-law and Chern-number workbench"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string show;
    std::string source, target;
    long degree = 1;
    long p = 0;
    bool p_given = false;

    auto add_common = [&](CLI::App* sub, bool with_catalog) {
        sub->add_option("--order", cfg.order, "series truncation order (>= 2)");
        sub->add_option("--format", cfg.format, "output format")
            ->check(CLI::IsMember({"json", "csv", "text"}));
        if (with_catalog)
            sub->add_option("--catalog", cfg.catalog_path,
                            "catalog file, '-' for stdin (default: $COBORD_CATALOG or the "
                            "built-in standard catalog)");
    };

    auto* lazard = app.add_subcommand("lazard", "universal formal group law");
    add_common(lazard, false);
    lazard->add_option("--show", show, "aij | axioms")
        ->check(CLI::IsMember({"aij", "axioms"}));

    auto* variety = app.add_subcommand("variety", "per-variety tables over a catalog");
    add_common(variety, true);
    variety->add_option("--show", show, "chern-numbers | sd | lazard-class")
        ->check(CLI::IsMember({"chern-numbers", "sd", "lazard-class"}));

    auto* check = app.add_subcommand("check", "verification sweeps (exit 0 iff pass)");
    add_common(check, true);
    check->add_option("kind", show, "adams | products | rost | gdf | fgl-roundtrip")
        ->required()
        ->check(CLI::IsMember({"adams", "products", "rost", "gdf", "fgl-roundtrip"}));
    check->add_option("--source", source, "source variety label (rost)");
    check->add_option("--target", target, "target variety label (rost)");
    check->add_option("--deg", degree, "morphism degree (rost)");
    auto* p_opt = check->add_option("--p", p, "prime for divisibility checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : static_cast<int>(ExitCode::usage);
    }
    p_given = p_opt->count() > 0;

    try {
        if (cfg.order < 2) {
            std::cerr << "error: truncation order must be >= 2\n";
            return static_cast<int>(ExitCode::usage);
        }
        if (lazard->parsed())
            return static_cast<int>(cmd_lazard(cfg, show.empty() ? "aij" : show));
        if (variety->parsed())
            return static_cast<int>(cmd_variety(cfg, show.empty() ? "chern-numbers" : show));

        // check
        if (show == "adams")
            return static_cast<int>(cmd_check_adams(
                cfg, p_given ? std::optional<long>(p) : std::nullopt));
        if (show == "products")
            return static_cast<int>(cmd_check_products(cfg));
        if (show == "rost") {
            if (source.empty() || target.empty() || !p_given) {
                std::cerr << "error: check rost needs --source, --target and --p\n";
                return static_cast<int>(ExitCode::usage);
            }
            return static_cast<int>(cmd_check_rost(cfg, source, target, degree, p));
        }
        if (show == "gdf")
            return static_cast<int>(cmd_check_gdf(cfg));
        return static_cast<int>(cmd_check_fgl_roundtrip(cfg));
    } catch (const CatalogError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return static_cast<int>(ExitCode::usage);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return static_cast<int>(ExitCode::usage);
    } catch (const std::logic_error& e) {
        // A violated internal invariant is a failed mathematical check.
        std::cerr << "check failed: " << e.what() << '\n';
        return static_cast<int>(ExitCode::check_failed);
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return static_cast<int>(ExitCode::usage);
    }
}
