#include "tqft/cli.hpp"

#include <cmath>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tqft/census.hpp"
#include "tqft/fusion.hpp"
#include "tqft/polylab.hpp"
#include "tqft/recursion.hpp"
#include "tqft/verify.hpp"

namespace tqft {

namespace {

using json = nlohmann::ordered_json;

enum class Format { text, csv, json };

Format parse_format(const std::string& name) {
    if (name == "text") return Format::text;
    if (name == "csv") return Format::csv;
    if (name == "json") return Format::json;
    throw std::invalid_argument("unknown format '" + name + "' (expected json, csv or text)");
}

json integer_cell(const Integer& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

std::string cell_text(const json& cell) {
    if (cell.is_string()) return cell.get<std::string>();
    if (cell.is_number_float()) {
        std::ostringstream os;
        os << std::fixed << std::setprecision(6) << cell.get<double>();
        return os.str();
    }
    return cell.dump();
}

void emit_table(std::ostream& out, Format format, const std::vector<std::string>& columns,
                const std::vector<std::vector<json>>& rows) {
    if (format == Format::json) {
        json array = json::array();
        for (const auto& row : rows) {
            json object = json::object();
            for (std::size_t i = 0; i < columns.size(); ++i) object[columns[i]] = row[i];
            array.push_back(std::move(object));
        }
        out << array.dump() << '\n';
        return;
    }
    if (format == Format::csv) {
        for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
        out << '\n';
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << cell_text(row[i]);
            out << '\n';
        }
        return;
    }
    std::vector<std::size_t> width(columns.size());
    for (std::size_t i = 0; i < columns.size(); ++i) width[i] = columns[i].size();
    for (const auto& row : rows)
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], cell_text(row[i]).size());
    auto line = [&](auto cell_at) {
        for (std::size_t i = 0; i < columns.size(); ++i) {
            if (i) out << "  ";
            out << std::setw(static_cast<int>(width[i])) << cell_at(i);
        }
        out << '\n';
    };
    line([&](std::size_t i) { return columns[i]; });
    for (const auto& row : rows) line([&](std::size_t i) { return cell_text(row[i]); });
}

// Sine formulas, for human inspection only.
double verlinde_float(int p, int g, int c) {
    const double pi = std::numbers::pi;
    double sum = 0;
    for (int j = 1; j <= (p - 1) / 2; ++j)
        sum += std::sin(pi * j * (2 * c + 1) / p) * std::pow(std::sin(pi * j / p), 1 - 2 * g);
    return std::pow(p / 4.0, g - 1) * sum;
}

double delta_float(int p, int g, int c) {
    const double pi = std::numbers::pi;
    auto ceil_quarter = [](int n) { return (n + 3) / 4; };  // ceil(n/4), n >= 0
    double sum = 0;
    for (int j = 1; j <= (p - 1) / 2; ++j) {
        double lambda = ceil_quarter(p - 1);
        for (int k = 1; k <= (p - 3) / 2; ++k)
            lambda += 2.0 * (k % 2 == 0 ? 1 : -1) * ceil_quarter(p - 2 * k - 1) * std::cos(2.0 * k * j * pi / p);
        sum += std::sin(pi * j * (2 * c + 1) / p) * std::sin(pi * j / p) * std::pow(lambda, g);
    }
    const double signed_delta = 4.0 / p * sum;
    return c % 2 == 0 ? signed_delta : -signed_delta;
}

struct DimsArgs {
    int p = 0;
    int gmax = 1;
    int c = -1;
    std::string format = "text";
    bool float_display = false;
};

int cmd_dims(const DimsArgs& args, std::ostream& out) {
    const Format format = parse_format(args.format);
    const DimTable table = build_table(args.p, args.gmax);
    if (args.c >= table.d()) throw std::invalid_argument("c filter out of range");
    std::vector<std::string> columns{"p", "g", "c", "fe", "fo", "D", "delta"};
    if (args.float_display) {
        columns.push_back("D_float");
        columns.push_back("delta_float");
    }
    std::vector<std::vector<json>> rows;
    for (int g = 1; g <= args.gmax; ++g)
        for (int c = 0; c < table.d(); ++c) {
            if (args.c >= 0 && c != args.c) continue;
            std::vector<json> row{args.p,
                                  g,
                                  c,
                                  integer_cell(table.fe(g, c)),
                                  integer_cell(table.fo(g, c)),
                                  integer_cell(table.D(g, c)),
                                  integer_cell(table.delta(g, c))};
            if (args.float_display) {
                row.emplace_back(verlinde_float(args.p, g, c));
                row.emplace_back(delta_float(args.p, g, c));
            }
            rows.push_back(std::move(row));
        }
    emit_table(out, format, columns, rows);
    return kExitOk;
}

struct CensusArgs {
    int p = 0, g = 1, c = 0;
    bool list = false;
    bool force = false;
    std::string format = "text";
};

constexpr double kCensusBudget = 1e9;

int cmd_census(const CensusArgs& args, std::ostream& out, std::ostream& err) {
    const Format format = parse_format(args.format);
    const LollipopTree tree(args.p, args.g, args.c);
    const double estimate = search_space_estimate(tree);
    if (estimate > kCensusBudget && !args.force) {
        err << "census: estimated search space " << estimate << " exceeds " << kCensusBudget
            << " states; rerun with --force\n";
        return kExitSizeGuard;
    }
    if (args.list) {
        out << "g;c;a_b;e;parity\n";
        for_each_coloring(tree, [&](const Coloring& col) { out << to_csv_record(tree, col) << '\n'; });
        return kExitOk;
    }
    const ParityCounts counts = count_parities(tree);
    if (format == Format::text) {
        out << "p=" << tree.p << " g=" << tree.g << " c=" << tree.c << " fe=" << counts.even << " fo=" << counts.odd
            << '\n';
        return kExitOk;
    }
    emit_table(out, format, {"p", "g", "c", "fe", "fo"},
               {{tree.p, tree.g, tree.c, counts.even, counts.odd}});
    return kExitOk;
}

struct PolyArgs {
    int g = 1;
    std::string emit = "delta";
    std::string method = "interpolate";
    std::string format = "text";
};

int cmd_poly(const PolyArgs& args, std::ostream& out) {
    if (args.format != "text" && args.format != "json")
        throw std::invalid_argument("poly supports --format text or json");
    if (args.g < 1) throw std::invalid_argument("genus must be >= 1");
    DimTableCache cache;
    BiPoly poly;
    if (args.method == "interpolate") {
        if (args.emit == "delta") {
            poly = interpolate_delta(args.g, {}, cache);
        } else if (args.emit == "D") {
            poly = interpolate_D(args.g, {}, cache);
        } else if (args.emit == "fe" || args.emit == "fo") {
            const BiPoly delta = interpolate_delta(args.g, {}, cache), D = interpolate_D(args.g, {}, cache);
            poly = (args.emit == "fe" ? D + delta : D - delta) * Rational(1, 2);
        } else {
            throw std::invalid_argument("unknown --emit '" + args.emit + "'");
        }
    } else if (args.method == "residue") {
        if (args.emit != "D") throw std::invalid_argument("the residue method emits D only");
        poly = residue_D_poly(args.g);
    } else if (args.method == "symbolic") {
        if (args.emit != "delta") throw std::invalid_argument("the symbolic method emits delta only");
        poly = symbolic_delta(args.g);
    } else {
        throw std::invalid_argument("unknown --method '" + args.method + "'");
    }
    out << (args.format == "json" ? poly.to_json() : poly.to_text()) << '\n';
    return kExitOk;
}

struct VerifyArgs {
    std::string suite = "all";
    std::vector<int> primes{5, 7, 11, 13};
    int gmax = 4;
    int scan_gmax = 8;
};

int cmd_verify(const VerifyArgs& args, std::ostream& out) {
    VerifyOptions options;
    options.primes = args.primes;
    options.gmax = args.gmax;
    const Suite suite = parse_suite(args.suite);
    DimTableCache cache;
    const auto checks = run_suite(suite, options, cache);
    std::size_t failed = 0;
    for (const auto& check : checks) {
        out << (check.passed ? "PASS " : "FAIL ") << check.claim;
        if (!check.passed && !check.detail.empty()) out << " [" << check.detail << "]";
        out << '\n';
        if (!check.passed) ++failed;
    }
    if (suite == Suite::all || suite == Suite::poly)
        for (const auto& line : conjecture_report(args.scan_gmax, cache)) out << "INFO scan " << line << '\n';
    out << (checks.size() - failed) << "/" << checks.size() << " checks passed\n";
    return failed == 0 ? kExitOk : kExitVerificationFailed;
}

int cmd_hopf(int p, const std::string& format_name, std::ostream& out) {
    const Format format = parse_format(format_name);
    const HopfReport r = hopf_det_valuation(p);
    const bool ok = r.valuation == r.expected_valuation && r.unit_certified;
    if (format == Format::text) {
        out << "p=" << p << " valuation=" << r.valuation << " expected=" << r.expected_valuation
            << " unit_norm=" << r.unit_norm << " unit=" << (r.unit_certified ? "certified" : "NOT certified") << '\n';
    } else {
        emit_table(out, format, {"p", "valuation", "expected", "unit_norm", "unit_certified"},
                   {{p, r.valuation, r.expected_valuation, r.unit_norm.get_str(), r.unit_certified}});
    }
    return ok ? kExitOk : kExitVerificationFailed;
}

int cmd_quadruple(int p, int gmin, int gmax, const std::string& format_name, std::ostream& out) {
    const Format format = parse_format(format_name);
    if (gmin < 1 || gmax < gmin) throw std::invalid_argument("need 1 <= gmin <= gmax");
    const DimTable table = build_table(p, gmax);
    if (table.d() < 2) throw std::invalid_argument("prime too small");
    std::vector<std::vector<json>> rows;
    for (int g = gmin; g <= gmax; ++g)
        rows.push_back({p, g, integer_cell(table.fe(g, 0)), integer_cell(table.fe(g, 1)),
                        integer_cell(table.fo(g, 1)), integer_cell(table.fo(g, 0))});
    emit_table(out, format, {"p", "g", "fe0", "fe2", "fo2", "fo0"}, rows);
    return kExitOk;
}

int cmd_scan(int gmax, std::ostream& out) {
    if (gmax < 2) throw std::invalid_argument("scan needs gmax >= 2");
    DimTableCache cache;
    for (const auto& line : conjecture_report(gmax, cache)) out << line << '\n';
    return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Even/odd dimension counts for integral SO(3) TQFT lattices", "tqftdims"};
    app.require_subcommand(1);

    DimsArgs dims;
    auto* dims_cmd = app.add_subcommand("dims", "Dimension table from the recursion");
    dims_cmd->add_option("--p", dims.p, "odd prime >= 5")->required();
    dims_cmd->add_option("--gmax", dims.gmax, "largest genus")->required();
    dims_cmd->add_option("--c", dims.c, "only this trunk half color");
    dims_cmd->add_option("--format", dims.format, "json|csv|text");
    dims_cmd->add_flag("--float-display", dims.float_display, "append sine-formula values");

    CensusArgs census;
    auto* census_cmd = app.add_subcommand("census", "Brute-force coloring census");
    census_cmd->add_option("--p", census.p)->required();
    census_cmd->add_option("--g", census.g)->required();
    census_cmd->add_option("--c", census.c)->required();
    census_cmd->add_flag("--list", census.list, "stream every coloring");
    census_cmd->add_flag("--force", census.force, "bypass the size guard");
    census_cmd->add_option("--format", census.format, "json|csv|text");

    PolyArgs poly;
    auto* poly_cmd = app.add_subcommand("poly", "Dimension polynomial in P and C");
    poly_cmd->add_option("--g", poly.g)->required();
    poly_cmd->add_option("--emit", poly.emit, "delta|D|fe|fo");
    poly_cmd->add_option("--method", poly.method, "interpolate|residue|symbolic");
    poly_cmd->add_option("--format", poly.format, "text|json");

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "Run cross-method verification suites");
    verify_cmd->add_option("--suite", verify.suite, "all|census|fusion|poly|hopf");
    verify_cmd->add_option("--p-list", verify.primes, "comma-separated primes")->delimiter(',');
    verify_cmd->add_option("--gmax", verify.gmax);
    verify_cmd->add_option("--scan-gmax", verify.scan_gmax, "genus range of the informational pattern scan");

    int hopf_p = 0;
    std::string hopf_format = "text";
    auto* hopf_cmd = app.add_subcommand("hopf", "Valuation of the Hopf Vandermonde determinant");
    hopf_cmd->add_option("--p", hopf_p)->required();
    hopf_cmd->add_option("--format", hopf_format, "json|csv|text");

    int quad_p = 5, quad_gmin = 4, quad_gmax = 8;
    std::string quad_format = "csv";
    auto* quad_cmd = app.add_subcommand("quadruple", "(fe^(0), fe^(2), fo^(2), fo^(0)) per genus");
    quad_cmd->add_option("--p", quad_p);
    quad_cmd->add_option("--gmin", quad_gmin);
    quad_cmd->add_option("--gmax", quad_gmax);
    quad_cmd->add_option("--format", quad_format, "json|csv|text");

    int scan_gmax = 8;
    auto* scan_cmd = app.add_subcommand("scan", "Pattern scan of the delta polynomials");
    scan_cmd->add_option("--gmax", scan_gmax);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInvalidInput;
    }

    try {
        if (*dims_cmd) return cmd_dims(dims, out);
        if (*census_cmd) return cmd_census(census, out, err);
        if (*poly_cmd) return cmd_poly(poly, out);
        if (*verify_cmd) return cmd_verify(verify, out);
        if (*hopf_cmd) return cmd_hopf(hopf_p, hopf_format, out);
        if (*quad_cmd) return cmd_quadruple(quad_p, quad_gmin, quad_gmax, quad_format, out);
        if (*scan_cmd) return cmd_scan(scan_gmax, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitVerificationFailed;
    }
    return kExitInvalidInput;
}

}  // namespace tqft
