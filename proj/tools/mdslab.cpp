// mdslab: MDS matrix toolkit over GF(2^m).
//
// Subcommands check structural properties of matrix files, factor through
// the representative form, count matrix classes (exhaustively or by
// formula), search for the lightest orthogonal MDS matrices under the
// d-XOR metric, and lift representatives to involutory/orthogonal
// matrices.
//
// Exit codes: 0 success / property holds, 1 property fails or counts
// mismatch, 2 usage or parse error, 3 math-domain error, 4 search-budget
// refusal.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mdslab/mdslab.hpp"

namespace {

using nlohmann::ordered_json;
using namespace mdslab;

constexpr int kExitOk = 0;
constexpr int kExitPropertyFails = 1;
constexpr int kExitUsage = 2;
constexpr int kExitMathDomain = 3;
constexpr int kExitBudget = 4;

unsigned default_threads() {
    if (const char* env = std::getenv("MDSLAB_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return 0;  // library default: hardware concurrency
}

ParsedMatrix load_matrix(const std::string& path, const std::optional<std::string>& poly_flag) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    ParsedMatrix parsed = read_matrix_file(in);
    if (poly_flag) {
        const unsigned poly = std::stoul(*poly_flag, nullptr, 16);
        if (poly != parsed.ctx->poly()) {
            throw std::invalid_argument("--poly " + *poly_flag + " does not match file header " +
                                        FieldContext::poly_string(parsed.ctx->poly()));
        }
    }
    return parsed;
}

std::vector<std::string> hex_vector(std::span<const FieldElement> v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (FieldElement e : v) out.push_back(element_to_hex(e));
    return out;
}

ordered_json matrix_json(const SquareMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < m.order(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < m.order(); ++j) row.push_back(element_to_hex(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

ordered_json witness_json(const DiagonalPair& w) {
    return ordered_json{{"d", hex_vector(w.d.diagonal())},
                        {"d_prime", hex_vector(w.d_prime.diagonal())}};
}

std::string diagonal_text(const DiagonalMatrix& d) {
    std::string out = "(";
    for (std::size_t i = 0; i < d.order(); ++i) {
        if (i) out += ",";
        out += element_to_hex(d[i]);
    }
    return out + ")";
}

ordered_json field_params_json(const FieldContext& f) {
    return ordered_json{{"m", f.degree()}, {"poly", FieldContext::poly_string(f.poly())}};
}

void print_json(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

const char* property_name(Property p) {
    switch (p) {
        case Property::mds: return "mds";
        case Property::involutory: return "involutory";
        case Property::orthogonal: return "orthogonal";
        case Property::semi_involutory: return "semi-involutory";
        case Property::semi_orthogonal: return "semi-orthogonal";
        case Property::symmetric: return "symmetric";
    }
    return "?";
}

// ---------------------------------------------------------------------- check

struct CheckArgs {
    std::string file;
    std::string property = "all";
    std::optional<std::string> poly;
    bool json = false;
};

int run_check(const CheckArgs& args) {
    const ParsedMatrix parsed = load_matrix(args.file, args.poly);
    std::vector<Property> props;
    if (args.property == "all") {
        props = {Property::mds, Property::involutory, Property::orthogonal,
                 Property::semi_involutory, Property::semi_orthogonal};
    } else if (args.property == "mds") {
        props = {Property::mds};
    } else if (args.property == "involutory") {
        props = {Property::involutory};
    } else if (args.property == "orthogonal") {
        props = {Property::orthogonal};
    } else if (args.property == "semi-involutory") {
        props = {Property::semi_involutory};
    } else if (args.property == "semi-orthogonal") {
        props = {Property::semi_orthogonal};
    } else {
        throw std::invalid_argument("unknown property: " + args.property);
    }

    bool all_hold = true;
    std::vector<PropertyReport> reports;
    reports.reserve(props.size());
    for (Property p : props) {
        reports.push_back(check_property(parsed.matrix, p));
        all_hold = all_hold && reports.back().holds;
    }

    if (args.json) {
        ordered_json params = field_params_json(*parsed.ctx);
        params["n"] = parsed.matrix.order();
        params["file"] = args.file;
        params["property"] = args.property;
        ordered_json results = ordered_json::array();
        for (const auto& r : reports) {
            ordered_json item{{"property", property_name(r.property)}, {"holds", r.holds}};
            if (r.witness) item["witness"] = witness_json(*r.witness);
            results.push_back(std::move(item));
        }
        print_json(ordered_json{{"command", "check"},
                                {"params", std::move(params)},
                                {"results", std::move(results)},
                                {"all_hold", all_hold}});
    } else {
        for (const auto& r : reports) {
            std::cout << property_name(r.property) << ": " << (r.holds ? "yes" : "no");
            if (r.witness) {
                std::cout << "  D=" << diagonal_text(r.witness->d)
                          << " D'=" << diagonal_text(r.witness->d_prime);
            }
            std::cout << "\n";
        }
    }
    return all_hold ? kExitOk : kExitPropertyFails;
}

// ------------------------------------------------------------------ decompose

struct DecomposeArgs {
    std::string file;
    std::optional<std::string> poly;
    std::string output;
    bool json = false;
};

int run_decompose(const DecomposeArgs& args) {
    const ParsedMatrix parsed = load_matrix(args.file, args.poly);
    const PhiDecomposition dec = decompose_phi(parsed.matrix);
    std::ostringstream out;
    if (args.json) {
        ordered_json params = field_params_json(*parsed.ctx);
        params["n"] = parsed.matrix.order();
        params["file"] = args.file;
        out << ordered_json{{"command", "decompose"},
                            {"params", std::move(params)},
                            {"results",
                             ordered_json{{"d1", hex_vector(dec.d1.diagonal())},
                                          {"m1", matrix_json(dec.m1)},
                                          {"d2", hex_vector(dec.d2.diagonal())}}}}
                   .dump(2)
            << "\n";
    } else {
        out << "# d1\n";
        write_matrix_file(out, dec.d1.to_matrix());
        out << "# m1\n";
        write_matrix_file(out, dec.m1);
        out << "# d2\n";
        write_matrix_file(out, dec.d2.to_matrix());
    }
    if (args.output.empty()) {
        std::cout << out.str();
    } else {
        std::ofstream file(args.output);
        if (!file) throw std::invalid_argument("cannot open output file: " + args.output);
        file << out.str();
    }
    return kExitOk;
}

// -------------------------------------------------------------------- compose

struct ComposeArgs {
    std::string file;
    std::optional<std::string> poly;
    bool json = false;
};

DiagonalMatrix diagonal_from_matrix(const SquareMatrix& m, const std::string& which) {
    std::vector<FieldElement> diag(m.order());
    for (std::size_t i = 0; i < m.order(); ++i) {
        for (std::size_t j = 0; j < m.order(); ++j) {
            if (i != j && m(i, j) != 0) {
                throw std::invalid_argument(which + " block is not a diagonal matrix");
            }
        }
        diag[i] = m(i, i);
    }
    return DiagonalMatrix(m.field(), std::move(diag));
}

int run_compose(const ComposeArgs& args) {
    std::ifstream in(args.file);
    if (!in) throw std::invalid_argument("cannot open file: " + args.file);
    const auto blocks = read_all_matrix_blocks(in);
    if (blocks.size() != 3) {
        throw std::invalid_argument("compose expects exactly 3 matrix blocks (d1, m1, d2), got " +
                                    std::to_string(blocks.size()));
    }
    const FieldContext& f = *blocks[0].ctx;
    for (const auto& b : blocks) {
        if (*b.ctx != f || b.matrix.order() != blocks[0].matrix.order()) {
            throw std::invalid_argument("matrix blocks disagree on field or order");
        }
    }
    if (args.poly) {
        const unsigned poly = std::stoul(*args.poly, nullptr, 16);
        if (poly != f.poly()) {
            throw std::invalid_argument("--poly does not match file header");
        }
    }
    // Rebuild against the first block's context so all values share it.
    const std::size_t n = blocks[0].matrix.order();
    const SquareMatrix m1(
        f, n, std::vector<FieldElement>(blocks[1].matrix.entries().begin(),
                                        blocks[1].matrix.entries().end()));
    const auto rebuild = [&f](const DiagonalMatrix& d) {
        return DiagonalMatrix(f, std::vector<FieldElement>(d.diagonal().begin(),
                                                           d.diagonal().end()));
    };
    const DiagonalMatrix d1 = rebuild(diagonal_from_matrix(blocks[0].matrix, "first (d1)"));
    const DiagonalMatrix d2 = rebuild(diagonal_from_matrix(blocks[2].matrix, "third (d2)"));
    const SquareMatrix composed = sandwich(d1, m1, d2);
    if (args.json) {
        ordered_json params = field_params_json(f);
        params["n"] = n;
        params["file"] = args.file;
        print_json(ordered_json{{"command", "compose"},
                                {"params", std::move(params)},
                                {"results", ordered_json{{"matrix", matrix_json(composed)}}}});
    } else {
        write_matrix_file(std::cout, composed);
    }
    return kExitOk;
}

// ---------------------------------------------------------------------- count

struct CountArgs {
    std::size_t n = 3;
    unsigned m = 3;
    std::string cls;
    std::optional<std::string> poly;
    bool enumerate = false;
    bool closed_form = false;
    bool both = false;
    bool override_budget = false;
    unsigned threads = 0;
    bool json = false;
};

const char* method_name(CountMethod m) {
    switch (m) {
        case CountMethod::exhaustive: return "exhaustive";
        case CountMethod::parametrized: return "parametrized";
        case CountMethod::derived_by_theorem: return "derived-by-theorem";
    }
    return "?";
}

// Exhaustive/parametrized count for the supported (class, n, m) combos.
std::pair<BigInt, CountMethod> enumerate_count(const FieldContext& f, MatrixClass cls,
                                               std::size_t n, const EnumerateOptions& opts) {
    if (cls == MatrixClass::orthogonal_mds) {
        if (n == 3) return {BigInt(enumerate_orthogonal_mds_3(f)), CountMethod::parametrized};
        if (n == 4) return {BigInt(enumerate_orthogonal_mds_4(f, opts)), CountMethod::parametrized};
        throw std::invalid_argument("orthogonal enumeration supports n = 3 and n = 4");
    }
    if (cls == MatrixClass::representative_semi_involutory_mds ||
        cls == MatrixClass::representative_semi_orthogonal_mds) {
        return {BigInt(enumerate_representative_class(f, n, cls, opts)),
                CountMethod::exhaustive};
    }
    if (n == 3) {
        // Full-space classification; only tractable for m = 3.
        for (const auto& report : brute_force_counts_3x3(f, opts)) {
            if (report.matrix_class == cls) return {*report.enumerated, CountMethod::exhaustive};
        }
    }
    throw std::invalid_argument(std::string("no enumerator for class ") + matrix_class_name(cls) +
                                " at n = " + std::to_string(n));
}

// Closed-form count; n = 4 classes lean on the representative scaling laws,
// enumerating the pivot count when needed.
std::pair<BigInt, CountMethod> closed_form_count(const FieldContext& f, MatrixClass cls,
                                                 std::size_t n, const EnumerateOptions& opts) {
    if (n == 3) return {count_closed_form(cls, 3, f.degree()), CountMethod::derived_by_theorem};
    if (n == 4) {
        switch (cls) {
            case MatrixClass::involutory_mds:
            case MatrixClass::semi_involutory_mds: {
                const BigInt reps = enumerate_representative_class(
                    f, 4, MatrixClass::representative_semi_involutory_mds, opts);
                return {count_closed_form(cls, 4, f.degree(), reps),
                        CountMethod::derived_by_theorem};
            }
            case MatrixClass::si_and_so_mds: {
                const SymmetricSplit split = count_symmetric_representatives(f, 4, opts);
                return {count_closed_form(cls, 4, f.degree(), BigInt(split.symmetric)),
                        CountMethod::derived_by_theorem};
            }
            case MatrixClass::semi_orthogonal_mds: {
                const BigInt reps = enumerate_orthogonal_mds_4(f, opts);
                return {count_closed_form(cls, 4, f.degree(), reps),
                        CountMethod::derived_by_theorem};
            }
            default:
                break;
        }
    }
    throw std::invalid_argument(std::string("no closed-form count for class ") +
                                matrix_class_name(cls) + " at n = " + std::to_string(n));
}

int run_count(const CountArgs& args) {
    const auto cls = parse_matrix_class(args.cls);
    if (!cls) throw std::invalid_argument("unknown class: " + args.cls);
    const unsigned poly =
        args.poly ? static_cast<unsigned>(std::stoul(*args.poly, nullptr, 16))
                  : FieldContext::default_poly(args.m);
    const FieldContext f(args.m, poly);
    EnumerateOptions opts;
    opts.threads = args.threads ? args.threads : default_threads();
    opts.override_budget = args.override_budget;

    const bool want_enumerate = args.enumerate || args.both || (!args.closed_form && !args.both);
    const bool want_closed = args.closed_form || args.both;

    std::optional<BigInt> enumerated;
    std::optional<BigInt> closed;
    CountMethod method = CountMethod::derived_by_theorem;
    if (want_enumerate) {
        auto [value, how] = enumerate_count(f, *cls, args.n, opts);
        enumerated = value;
        method = how;
    }
    if (want_closed) {
        auto [value, how] = closed_form_count(f, *cls, args.n, opts);
        closed = value;
        if (!want_enumerate) method = how;
    }
    const CountReport report =
        make_count_report(*cls, args.n, args.m, enumerated, closed, method);

    if (args.json) {
        ordered_json params{{"class", matrix_class_name(*cls)},
                            {"n", args.n},
                            {"m", args.m},
                            {"poly", FieldContext::poly_string(poly)}};
        ordered_json results;
        results["enumerated"] =
            report.enumerated ? ordered_json(report.enumerated->str()) : ordered_json(nullptr);
        results["closed_form"] =
            report.closed_form ? ordered_json(report.closed_form->str()) : ordered_json(nullptr);
        results["match"] = report.match;
        results["method"] = method_name(report.method);
        print_json(ordered_json{{"command", "count"},
                                {"params", std::move(params)},
                                {"results", std::move(results)}});
    } else {
        std::cout << "class: " << matrix_class_name(*cls) << "  n=" << args.n << "  m=" << args.m
                  << "  poly=" << FieldContext::poly_string(poly) << "\n";
        if (report.enumerated) std::cout << "enumerated:  " << report.enumerated->str() << "\n";
        if (report.closed_form) std::cout << "closed form: " << report.closed_form->str() << "\n";
        if (args.both) std::cout << "match: " << (report.match ? "yes" : "no") << "\n";
        std::cout << "method: " << method_name(report.method) << "\n";
    }
    return (args.both && !report.match) ? kExitPropertyFails : kExitOk;
}

// --------------------------------------------------------------- search-light

struct SearchLightArgs {
    std::size_t n = 4;
    unsigned m = 3;
    std::optional<std::string> poly;
    std::string emit;
    unsigned threads = 0;
    bool json = false;
};

int run_search_light(const SearchLightArgs& args) {
    const unsigned poly =
        args.poly ? static_cast<unsigned>(std::stoul(*args.poly, nullptr, 16))
                  : FieldContext::default_poly(args.m);
    const FieldContext f(args.m, poly);
    EnumerateOptions opts;
    opts.threads = args.threads ? args.threads : default_threads();
    const LightestSearchResult result =
        search_lightest(f, args.n, MatrixClass::orthogonal_mds, opts);

    if (!args.emit.empty()) {
        std::ofstream out(args.emit);
        if (!out) throw std::invalid_argument("cannot open output file: " + args.emit);
        for (const auto& mat : result.matrices) {
            for (std::size_t i = 0; i < 3; ++i) {
                for (std::size_t j = 0; j < 3; ++j) {
                    if (i || j) out << ' ';
                    out << element_to_hex(mat(i, j));
                }
            }
            out << "\n";
        }
    }

    if (args.json) {
        ordered_json params{{"n", args.n},
                            {"m", args.m},
                            {"poly", FieldContext::poly_string(poly)},
                            {"class", matrix_class_name(MatrixClass::orthogonal_mds)}};
        ordered_json results{{"min_cost", result.min_cost},
                             {"matches", result.matrices.size()}};
        results["emitted"] = args.emit.empty() ? ordered_json(nullptr) : ordered_json(args.emit);
        print_json(ordered_json{{"command", "search-light"},
                                {"params", std::move(params)},
                                {"results", std::move(results)}});
    } else {
        std::cout << "minimum d-XOR cost: " << result.min_cost << "\n"
                  << "matrices attaining it: " << result.matrices.size() << "\n";
        if (!args.emit.empty()) std::cout << "tuple list written to: " << args.emit << "\n";
    }
    return kExitOk;
}

// ----------------------------------------------------------------------- lift

struct LiftArgs {
    std::string file;
    std::string kind;
    std::vector<std::string> lambdas;
    bool all = false;
    std::optional<std::string> poly;
    bool json = false;
};

int run_lift(const LiftArgs& args) {
    const ParsedMatrix parsed = load_matrix(args.file, args.poly);
    const auto& f = *parsed.ctx;
    const std::size_t n = parsed.matrix.order();

    if (args.kind == "orthogonal") {
        if (args.all || !args.lambdas.empty()) {
            throw std::invalid_argument("orthogonal lift is unique: no --lambdas/--all");
        }
        const SquareMatrix lifted = lift_orthogonal(parsed.matrix);
        if (args.json) {
            ordered_json params = field_params_json(f);
            params["n"] = n;
            params["file"] = args.file;
            params["kind"] = "orthogonal";
            print_json(ordered_json{{"command", "lift"},
                                    {"params", std::move(params)},
                                    {"results", ordered_json{{"matrix", matrix_json(lifted)}}}});
        } else {
            write_matrix_file(std::cout, lifted);
        }
        return kExitOk;
    }
    if (args.kind != "involutory") {
        throw std::invalid_argument("lift kind must be 'involutory' or 'orthogonal'");
    }
    const InvolutoryLiftFamily family(parsed.matrix);
    if (args.all) {
        if (args.json) {
            throw std::invalid_argument("--all streams matrix blocks; not available with --json");
        }
        std::uint64_t index = 0;
        family.for_each([&](const SquareMatrix& member) {
            std::cout << "# member " << index++ << "\n";
            write_matrix_file(std::cout, member);
        });
        return kExitOk;
    }
    if (args.lambdas.size() != n - 1) {
        throw std::invalid_argument("expected " + std::to_string(n - 1) +
                                    " --lambdas values (or --all)");
    }
    std::vector<FieldElement> lambdas;
    for (const auto& tok : args.lambdas) {
        const unsigned long v = std::stoul(tok, nullptr, 16);
        if (v == 0 || v >= f.order()) {
            throw std::invalid_argument("lambda value " + tok + " out of range for GF(2^" +
                                        std::to_string(f.degree()) + ")*");
        }
        lambdas.push_back(static_cast<FieldElement>(v));
    }
    const SquareMatrix lifted = family.member(lambdas);
    if (args.json) {
        ordered_json params = field_params_json(f);
        params["n"] = n;
        params["file"] = args.file;
        params["kind"] = "involutory";
        params["lambdas"] = args.lambdas;
        print_json(ordered_json{{"command", "lift"},
                                {"params", std::move(params)},
                                {"results", ordered_json{{"matrix", matrix_json(lifted)}}}});
    } else {
        write_matrix_file(std::cout, lifted);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"MDS matrix toolkit over GF(2^m)"};
    app.require_subcommand(1);

    CheckArgs check_args;
    auto* check = app.add_subcommand("check", "Check structural properties of a matrix file");
    check->add_option("file", check_args.file, "matrix file")->required();
    check->add_option("--property", check_args.property,
                      "mds|involutory|orthogonal|semi-involutory|semi-orthogonal|all");
    check->add_option("--poly", check_args.poly, "expected field polynomial (hex)");
    check->add_flag("--json", check_args.json, "machine-readable report");

    DecomposeArgs dec_args;
    auto* dec = app.add_subcommand("decompose", "Factor a matrix as D1 * M1 * D2");
    dec->add_option("file", dec_args.file, "matrix file")->required();
    dec->add_option("--poly", dec_args.poly, "expected field polynomial (hex)");
    dec->add_option("-o,--output", dec_args.output, "write blocks to a file");
    dec->add_flag("--json", dec_args.json, "machine-readable report");

    ComposeArgs comp_args;
    auto* comp = app.add_subcommand("compose", "Multiply D1 * M1 * D2 blocks back together");
    comp->add_option("file", comp_args.file, "file with 3 matrix blocks")->required();
    comp->add_option("--poly", comp_args.poly, "expected field polynomial (hex)");
    comp->add_flag("--json", comp_args.json, "machine-readable report");

    CountArgs count_args;
    auto* count = app.add_subcommand("count", "Count matrices of a class");
    count->add_option("--n", count_args.n, "matrix order")->required();
    count->add_option("--m", count_args.m, "field degree")->required();
    count->add_option("--class", count_args.cls,
                      "mds|involutory-mds|semi-involutory-mds|orthogonal-mds|semi-orthogonal-mds|"
                      "si-so-mds|representative-semi-involutory|representative-semi-orthogonal")
        ->required();
    count->add_option("--poly", count_args.poly, "field polynomial (hex), default per degree");
    count->add_flag("--enumerate", count_args.enumerate, "exhaustive/parametrized enumeration");
    count->add_flag("--closed-form", count_args.closed_form, "formula or scaling law");
    count->add_flag("--both", count_args.both, "run both and compare");
    count->add_flag("--override-budget", count_args.override_budget,
                    "run searches beyond the 10^10-candidate budget");
    count->add_option("--threads", count_args.threads, "worker threads (default: all cores)");
    count->add_flag("--json", count_args.json, "machine-readable report");

    SearchLightArgs light_args;
    auto* light = app.add_subcommand("search-light",
                                     "Find the lightest orthogonal MDS matrices (d-XOR)");
    light->add_option("--n", light_args.n, "matrix order (4)");
    light->add_option("--m", light_args.m, "field degree (3 or 4)")->required();
    light->add_option("--poly", light_args.poly, "field polynomial (hex)");
    light->add_option("--emit", light_args.emit, "write the minimizing 9-tuples to a file");
    light->add_option("--threads", light_args.threads, "worker threads");
    light->add_flag("--json", light_args.json, "machine-readable report");

    LiftArgs lift_args;
    auto* lift = app.add_subcommand("lift", "Lift a representative-form matrix");
    lift->add_option("file", lift_args.file, "representative matrix file")->required();
    lift->add_option("--kind", lift_args.kind, "involutory|orthogonal")->required();
    lift->add_option("--lambdas", lift_args.lambdas, "n-1 nonzero hex scales (involutory)");
    lift->add_flag("--all", lift_args.all, "stream the whole involutory family");
    lift->add_option("--poly", lift_args.poly, "expected field polynomial (hex)");
    lift->add_flag("--json", lift_args.json, "machine-readable report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (check->parsed()) return run_check(check_args);
        if (dec->parsed()) return run_decompose(dec_args);
        if (comp->parsed()) return run_compose(comp_args);
        if (count->parsed()) return run_count(count_args);
        if (light->parsed()) return run_search_light(light_args);
        if (lift->parsed()) return run_lift(lift_args);
    } catch (const MatrixFileParseError& ex) {
        std::cerr << "parse error: " << ex.what() << "\n";
        return kExitUsage;
    } catch (const BudgetExceededError& ex) {
        std::cerr << "budget refusal: " << ex.what() << "\n";
        return kExitBudget;
    } catch (const MathDomainError& ex) {
        std::cerr << "math error: " << ex.what() << "\n";
        return kExitMathDomain;
    } catch (const std::invalid_argument& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
