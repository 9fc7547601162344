// Command-line front end: lr, poincare, check, verify, classify.
// Exit codes: 0 success, 2 input error, 3 mathematical check failure.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qpoincare/hecke.hpp"
#include "qpoincare/io.hpp"
#include "qpoincare/partition.hpp"
#include "qpoincare/poincare.hpp"
#include "qpoincare/series.hpp"
#include "qpoincare/symfunc.hpp"
#include "qpoincare/symmetry.hpp"
#include "qpoincare/verify.hpp"

namespace {

using namespace qpoincare;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitMath = 3;

struct MathFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Birank parse_birank(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("birank must look like m,n");
    int m = std::stoi(text.substr(0, comma));
    int n = std::stoi(text.substr(comma + 1));
    if (m < 0 || n < 0) throw std::invalid_argument("birank components must be nonnegative");
    return Birank{m, n};
}

// largest order the rank pipeline may run at for this dimension
int effective_order(int d, int requested, const Limits& lim) {
    int n = 0;
    long dim = 1;
    while (n < std::min(requested, lim.strand_cap)) {
        if (dim > lim.dim_budget / d) break;
        dim *= d;
        ++n;
    }
    return n;
}

HeckeSymmetry resolve_fixture(const std::string& spec) {
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (true) {
        std::size_t colon = spec.find(':', pos);
        parts.push_back(spec.substr(pos, colon == std::string::npos ? colon : colon - pos));
        if (colon == std::string::npos) break;
        pos = colon + 1;
    }
    if (parts.size() == 3 && parts[0] == "standard")
        return fixture_standard(std::stoi(parts[1]), parse_rational(parts[2]));
    if (parts.size() == 3 && parts[0] == "super")
        return fixture_super(std::stoi(parts[1]), std::stoi(parts[2]));
    if (parts.size() == 4 && parts[0] == "superq")
        return fixture_super_deformed(std::stoi(parts[1]), std::stoi(parts[2]),
                                      parse_rational(parts[3]));
    throw std::invalid_argument(
        "fixture must look like standard:d:q0, super:m:n or superq:m:n:q0");
}

int run_lr(const std::string& lambdaText, const std::string& muText,
           const std::optional<std::string>& birankText, bool asJson) {
    Partition lambda = Partition::parse(lambdaText);
    Partition mu = Partition::parse(muText);
    std::optional<Birank> b;
    if (birankText) b = parse_birank(*birankText);
    SchurExpansion terms = tensor_decompose(lambda, mu, b);
    if (asJson) {
        json out = json::array();
        for (const auto& [p, mult] : terms)
            out.push_back(json{{"partition", partition_to_json(p)}, {"mult", mult}});
        std::cout << json{{"terms", out}}.dump() << "\n";
    } else {
        std::string line;
        for (const auto& [p, mult] : terms) {
            if (!line.empty()) line += "  ";
            line += p.to_string() + ":" + std::to_string(mult);
        }
        std::cout << line << "\n";
    }
    return kExitOk;
}

int run_poincare(const std::optional<std::string>& fixture, const std::optional<std::string>& rfile,
                 int order, int padeM, int padeN, Limits lim, bool asJson) {
    if (!fixture == !rfile)
        throw std::invalid_argument("need exactly one of --fixture and --rfile");
    std::string label;
    std::optional<HeckeSymmetry> sym;
    if (fixture) {
        label = *fixture;
        sym = resolve_fixture(*fixture);
    } else {
        label = *rfile;
        RMatrixData data = load_rmatrix(*rfile);
        sym = HeckeSymmetry::checked(data.d, data.q, data.r);  // AxiomError -> exit 3
    }
    int n = effective_order(sym->dim(), order, lim);
    std::vector<Int> dims = dims_lambda(*sym, n, lim);
    RationalFunction rf = pade_reconstruct(dims_to_series(dims), padeM, padeN);
    Birank br = birank(rf);
    bool rec = is_reciprocal(rf.num);
    bool skew = is_skew_reciprocal(rf.den);
    bool integral = integer_coefficients(rf.num) && integer_coefficients(rf.den);
    bool neg = roots_all_negative(rf.num);
    bool pos = roots_all_positive(rf.den);
    if (asJson) {
        json jd = json::array();
        for (const Int& v : dims) jd.push_back(v.get_si());
        json out{{"input", label},
                 {"d", sym->dim()},
                 {"q", rat_to_string(sym->q())},
                 {"order", n},
                 {"dims", jd},
                 {"numerator", polynomial_to_json(rf.num)},
                 {"denominator", polynomial_to_json(rf.den)},
                 {"birank", json::array({br.m, br.n})},
                 {"reciprocal", rec},
                 {"skew_reciprocal", skew},
                 {"integer_coefficients", integral},
                 {"numerator_roots_negative", neg},
                 {"denominator_roots_positive", pos}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "input: " << label << " (d=" << sym->dim() << ", q=" << rat_to_string(sym->q())
                  << ")\n";
        std::cout << "order: " << n << "\n";
        std::cout << "dims:";
        for (const Int& v : dims) std::cout << " " << v.get_str();
        std::cout << "\n";
        std::cout << "numerator: " << rf.num.to_string() << "\n";
        std::cout << "denominator: " << rf.den.to_string() << "\n";
        std::cout << "birank: (" << br.m << ", " << br.n << ")\n";
        std::cout << "reciprocal: " << (rec ? "yes" : "no") << "\n";
        std::cout << "skew-reciprocal: " << (skew ? "yes" : "no") << "\n";
        std::cout << "integer coefficients: " << (integral ? "yes" : "no") << "\n";
        std::cout << "numerator roots all negative: " << (neg ? "yes" : "no") << "\n";
        std::cout << "denominator roots all positive: " << (pos ? "yes" : "no") << "\n";
    }
    if (!(rec && skew && integral && neg && pos))
        throw MathFailure("reconstructed series failed a structural check");
    return kExitOk;
}

int run_check(const std::string& rfile, bool asJson) {
    RMatrixData data = load_rmatrix(rfile);
    bool braid = check_braid(data.r, data.d);
    bool hecke = check_hecke(data.r, data.q, data.d);
    bool half = check_half_adjoint(data.r, data.d);
    if (asJson) {
        std::cout << json{{"braid", braid}, {"hecke", hecke}, {"half_adjoint", half}}.dump()
                  << "\n";
    } else {
        std::cout << "braid: " << (braid ? "pass" : "fail") << "\n";
        std::cout << "hecke: " << (hecke ? "pass" : "fail") << "\n";
        std::cout << "half-adjoint: " << (half ? "pass" : "fail") << "\n";
    }
    if (!braid) throw MathFailure("axiom check failed: braid");
    if (!hecke) throw MathFailure("axiom check failed: hecke");
    if (!half) throw MathFailure("axiom check failed: half-adjoint");
    return kExitOk;
}

int run_verify(const std::string& suite, int mMax, int nMax, int kMax, int samples,
               std::uint64_t seed, int order, Limits lim, bool asJson) {
    std::vector<IdentityReport> reports;
    if (suite == "eq4" || suite == "all") {
        auto part = run_eq4_suite(mMax, nMax, kMax, samples, seed);
        reports.insert(reports.end(), part.begin(), part.end());
    }
    if (suite == "eq9" || suite == "all") {
        auto part = run_eq9_suite(std::min(mMax, 3), std::min(nMax, 3), order, samples, seed);
        reports.insert(reports.end(), part.begin(), part.end());
    }
    if (suite == "thm1" || suite == "all") {
        for (const NamedSymmetry& f : builtin_fixtures()) {
            int n = effective_order(f.sym.dim(), order, lim);
            reports.push_back(verify_theorem1(f.sym, n, 4, 4, lim, f.name));
        }
    }
    if (reports.empty()) throw std::invalid_argument("unknown suite: " + suite);
    bool all = true;
    if (asJson) {
        json out = json::array();
        for (const IdentityReport& r : reports) {
            out.push_back(report_to_json(r));
            all = all && r.pass;
        }
        std::cout << json{{"seed", seed}, {"reports", out}}.dump() << "\n";
    } else {
        std::cout << "seed: " << seed << "\n";
        for (const IdentityReport& r : reports) {
            std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.identity << "  " << r.params << "\n";
            if (!r.pass) {
                for (const auto& s : r.lhs) std::cout << "    lhs: " << s << "\n";
                for (const auto& s : r.rhs) std::cout << "    rhs: " << s << "\n";
            }
            all = all && r.pass;
        }
        std::cout << (all ? "all identities hold" : "some identities FAILED") << "\n";
    }
    if (!all) throw MathFailure("verification suite failed");
    return kExitOk;
}

int run_classify(int maxA, int maxB, bool asJson) {
    auto series = classify_low_birank(maxA, maxB);
    bool all = true;
    if (asJson) {
        json out = json::array();
        for (const LowBirankSeries& s : series) {
            out.push_back(json{{"label", s.label()},
                               {"numerator", polynomial_to_json(s.series.num)},
                               {"denominator", polynomial_to_json(s.series.den)},
                               {"reciprocal", s.reciprocal},
                               {"skew_reciprocal", s.skew_reciprocal},
                               {"roots_negative", s.roots_negative},
                               {"roots_positive", s.roots_positive}});
            all = all && s.all_checks();
        }
        std::cout << json{{"count", series.size()}, {"series", out}}.dump() << "\n";
    } else {
        for (const LowBirankSeries& s : series) {
            std::cout << s.label() << "  [reciprocal:" << (s.reciprocal ? "ok" : "FAIL")
                      << " skew:" << (s.skew_reciprocal ? "ok" : "FAIL")
                      << " neg-roots:" << (s.roots_negative ? "ok" : "FAIL")
                      << " pos-roots:" << (s.roots_positive ? "ok" : "FAIL") << "]\n";
            all = all && s.all_checks();
        }
        std::cout << "count: " << series.size() << "\n";
    }
    if (!all) throw MathFailure("a classified series failed a predicate");
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Poincare series of the quadratic algebras attached to a Hecke symmetry"};
    app.require_subcommand(1);
    bool asJson = false;
    app.add_flag("--json", asJson, "machine-readable JSON output");

    auto* lr = app.add_subcommand("lr", "tensor decomposition of two simples");
    std::string lambdaText, muText;
    std::optional<std::string> birankText;
    lr->add_option("lambda", lambdaText, "first partition, e.g. 3,2,2 or -")->required();
    lr->add_option("mu", muText, "second partition")->required();
    lr->add_option("--birank", birankText, "drop terms outside Gamma_{m,n}, e.g. 1,2");

    auto* poincare = app.add_subcommand("poincare", "dimensions and P/Q of the exterior algebra");
    std::optional<std::string> fixture, rfile;
    int order = 12, padeM = 4, padeN = 4;
    Limits lim;
    poincare->add_option("--fixture", fixture, "standard:d:q0 or super:m:n");
    poincare->add_option("--rfile", rfile, "R-matrix JSON file");
    poincare->add_option("--order", order, "truncation order (default 12, clamped by caps)");
    poincare->add_option("--pade-m", padeM, "numerator degree bound (default 4)");
    poincare->add_option("--pade-n", padeN, "denominator degree bound (default 4)");
    poincare->add_option("--strand-cap", lim.strand_cap, "max strand count (default 8)");
    poincare->add_option("--dim-budget", lim.dim_budget, "max d^n (default 20000)");

    auto* check = app.add_subcommand("check", "run the three Hecke symmetry axioms");
    std::string checkFile;
    check->add_option("--rfile", checkFile, "R-matrix JSON file")->required();

    auto* verify = app.add_subcommand("verify", "run the identity suites");
    std::string suite = "all";
    int vM = 3, vN = 3, vK = 4, vSamples = 5, vOrder = 12;
    std::uint64_t seed = 12345;
    verify->add_option("--suite", suite, "eq4 | eq9 | thm1 | all (default all)");
    verify->add_option("--m", vM, "max numerator degree m (default 3)");
    verify->add_option("--n", vN, "max denominator degree n (default 3)");
    verify->add_option("--kmax", vK, "max k in the decomposition grids (default 4)");
    verify->add_option("--samples", vSamples, "random samples per grid point (default 5)");
    verify->add_option("--seed", seed, "seed for the rational samples (default 12345)");
    verify->add_option("--order", vOrder, "series comparison order (default 12)");

    auto* classify = app.add_subcommand("classify", "low-birank series family");
    int maxA = 6, maxB = 6;
    classify->add_option("--max-a", maxA, "largest a (default 6)");
    classify->add_option("--max-b", maxB, "largest b (default 6)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return kExitInput;
    }

    try {
        if (lr->parsed()) return run_lr(lambdaText, muText, birankText, asJson);
        if (poincare->parsed())
            return run_poincare(fixture, rfile, order, padeM, padeN, lim, asJson);
        if (check->parsed()) return run_check(checkFile, asJson);
        if (verify->parsed())
            return run_verify(suite, vM, vN, vK, vSamples, seed, vOrder, lim, asJson);
        if (classify->parsed()) return run_classify(maxA, maxB, asJson);
    } catch (const MathFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMath;
    } catch (const AxiomError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMath;
    } catch (const PadeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMath;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMath;
    }
    return kExitInput;
}
