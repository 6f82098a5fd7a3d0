// lyatool: command-line front end for the lya library.
//
// Exit codes: 0 all checks passed, 1 a check failed, 2 bad input,
// 3 resource cap exceeded.

#include "lya/deformations.hpp"
#include "lya/errors.hpp"
#include "lya/io.hpp"
#include "lya/limits.hpp"
#include "lya/rb_cohomology.hpp"
#include "lya/rota_baxter.hpp"
#include "lya/yamaguti.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

using namespace lya;
using nlohmann::json;

namespace {

enum Exit { kPass = 0, kFail = 1, kInput = 2, kCap = 3 };

struct Options {
    std::string format = "json";
    bool adjoint = false;
    int max_level = 3;
    std::size_t max_entries = 1'000'000;
};

struct InputError : Error {
    using Error::Error;
};

// What a command produces: reports plus free-form extra fields.
struct Output {
    std::string command;
    std::vector<Report> reports;
    json extra = json::object();
    std::string text_extra;
    bool internal_error = false;

    bool passed() const
    {
        if (internal_error) return false;
        for (const auto& r : reports)
            if (!r.passed()) return false;
        return true;
    }
};

int emit(const Output& out, const Options& opt)
{
    if (opt.format == "text") {
        for (const auto& r : out.reports) std::cout << report_text(r);
        std::cout << out.text_extra;
        if (out.internal_error) std::cout << "internal error: the two checkers disagree\n";
        std::cout << out.command << ": " << (out.passed() ? "PASS" : "FAIL") << "\n";
    } else {
        json j;
        j["command"] = out.command;
        j["passed"] = out.passed();
        j["reports"] = json::array();
        for (const auto& r : out.reports) j["reports"].push_back(report_json(r));
        for (const auto& [k, v] : out.extra.items()) j[k] = v;
        if (out.internal_error) j["internal_error"] = true;
        std::cout << j.dump(2) << "\n";
    }
    return out.passed() ? kPass : kFail;
}

int emit_error(const Options& opt, const std::string& kind, const std::string& message, const ParseError* pe = nullptr)
{
    std::cerr << "error: " << message << "\n";
    if (opt.format != "text") {
        json j;
        j["error"] = {{"kind", kind}, {"message", message}};
        if (pe != nullptr && pe->line > 0) {
            j["error"]["line"] = pe->line;
            j["error"]["column"] = pe->column;
        }
        std::cout << j.dump(2) << "\n";
    }
    return kind == "resource_cap" ? kCap : kInput;
}

ProblemFile load(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return parse_problem(os.str());
}

// The file's representation, or the adjoint one with --adjoint.
Representation module_of(const ProblemFile& p, const Options& opt)
{
    if (opt.adjoint) {
        if (p.representation) throw InputError("--adjoint given but the file has a representation section");
        return adjoint_representation(p.algebra);
    }
    if (!p.representation) throw InputError("no representation section (use --adjoint for the adjoint module)");
    return *p.representation;
}

const Matrix& operator_of(const ProblemFile& p, const Representation& rep)
{
    if (!p.op) throw InputError("no operator section");
    if (p.op->cols() != rep.m) throw InputError("operator has " + std::to_string(p.op->cols()) +
                                                " columns, the module has dimension " + std::to_string(rep.m));
    return *p.op;
}

std::string matrix_text(const std::string& label, const Matrix& a)
{
    std::ostringstream os;
    os << label << ":\n";
    for (std::size_t i = 0; i < a.rows(); ++i) {
        os << "  [";
        for (std::size_t j = 0; j < a.cols(); ++j) os << (j ? ", " : "") << to_string(a(i, j));
        os << "]\n";
    }
    return os.str();
}

std::string vector_text(const std::string& label, const Vector& v)
{
    std::ostringstream os;
    os << label << ": [";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << to_string(v[i]);
    os << "]\n";
    return os.str();
}

json dims_json(const CohomologyDims& d)
{
    return {{"level", d.level}, {"dim_C", d.dim_c}, {"dim_Z", d.dim_z}, {"dim_B", d.dim_b}, {"dim_H", d.dim_h}};
}

// ---- verify

Output cmd_verify(const std::string& file, const Options& opt)
{
    ProblemFile p = load(file);
    Output out;
    out.command = "verify";
    out.reports.push_back(verify_lya(p.algebra));
    if (p.representation) {
        out.reports.push_back(verify_representation(p.algebra, *p.representation));
    } else if (opt.adjoint) {
        out.reports.push_back(verify_representation(p.algebra, adjoint_representation(p.algebra)));
    }
    return out;
}

// ---- rb-check

Output cmd_rb_check(const std::string& file, const Options& opt)
{
    ProblemFile p = load(file);
    Representation rep = module_of(p, opt);
    const Matrix& T = operator_of(p, rep);
    Output out;
    out.command = "rb-check";
    Report direct = is_relative_rota_baxter(p.algebra, rep, T);
    BigSpaceContext ctx(p.algebra, rep);
    Report mc = strict_mc_check(ctx, T);
    out.internal_error = direct.passed() != mc.passed();
    out.extra["checkers_agree"] = !out.internal_error;
    out.reports.push_back(std::move(direct));
    out.reports.push_back(std::move(mc));
    return out;
}

// ---- cohomology

Output cmd_cohomology(const std::string& file, const std::vector<int>& levels, const std::string& complex,
                      const Options& opt)
{
    ProblemFile p = load(file);
    Representation rep = module_of(p, opt);
    Output out;
    out.command = "cohomology";
    out.extra["complex"] = complex;
    json table = json::array();
    std::ostringstream text;
    text << "complex " << complex << "\n  level  dim C  dim Z  dim B  dim H\n";
    auto row = [&](const CohomologyDims& d) {
        table.push_back(dims_json(d));
        text << "  " << d.level << "      " << d.dim_c << "      " << d.dim_z << "      " << d.dim_b << "      "
             << d.dim_h << "\n";
    };
    if (complex == "yamaguti") {
        if (!p.representation && !opt.adjoint) throw InputError("no representation section (or --adjoint)");
        for (int l : levels) {
            if (l < 2) throw InputError("Yamaguti cohomology starts at level 2");
            row(cohomology_dims(p.algebra, rep, l));
        }
    } else {
        const Matrix& T = operator_of(p, rep);
        Report rb = is_relative_rota_baxter(p.algebra, rep, T);
        if (!rb.passed()) {
            out.reports.push_back(std::move(rb));
            return out;
        }
        RBComplex cx(p.algebra, rep, T);
        for (int l : levels) {
            if (l < 1) throw InputError("the operator complex has cohomology from level 1");
            row(cx.dims(l));
        }
        out.extra["level0_kernel"] = cx.level0_kernel();
        text << "  kernel of the level-0 map: " << cx.level0_kernel() << "\n";
    }
    out.extra["dims"] = table;
    out.text_extra = text.str();
    return out;
}

// ---- deform

std::vector<Matrix> coefficients(const ProblemFile& p, const Matrix& T)
{
    std::vector<Matrix> c{T};
    c.insert(c.end(), p.deformation.begin(), p.deformation.end());
    return c;
}

Output cmd_deform(const std::string& mode, const std::string& file, const std::vector<std::string>& ts_text,
                  const Options& opt)
{
    ProblemFile p = load(file);
    Representation rep = module_of(p, opt);
    const Matrix& T = operator_of(p, rep);
    Output out;
    out.command = "deform " + mode;
    Report rb = is_relative_rota_baxter(p.algebra, rep, T);
    if (!rb.passed()) {
        rb.notes.push_back("the base operator is not Rota-Baxter");
        out.reports.push_back(std::move(rb));
        return out;
    }
    RBComplex cx(p.algebra, rep, T);

    if (mode == "check-linear") {
        if (p.deformation.size() != 1) throw InputError("check-linear needs exactly one deformation matrix");
        out.reports.push_back(linear_deformation_check(cx, p.deformation[0]));
        BigSpaceContext ctx(p.algebra, rep);
        TwistedLInfinity tw(ctx, T);
        out.reports.push_back(twisted_mc_polynomial_check(tw, p.deformation[0]));
        out.internal_error = out.reports[0].passed() != out.reports[1].passed();
    } else if (mode == "nijenhuis") {
        if (!p.wedge_element) throw InputError("nijenhuis needs a wedge_element section");
        Report nij = nijenhuis_element_check(cx, *p.wedge_element);
        bool ok = nij.passed();
        out.reports.push_back(std::move(nij));
        if (ok) {
            std::vector<Scalar> ts;
            for (const auto& s : ts_text) ts.push_back(parse_scalar(s));
            TrivialDeformation d = trivial_deformation_from_nijenhuis(cx, *p.wedge_element, ts);
            out.extra["deformation"] = matrix_json(d.Tp);
            out.text_extra = matrix_text("deformation T' = delta(X)", d.Tp);
            out.reports.push_back(d.linear);
            for (auto& [t, r] : d.witnesses) {
                r.subject += " at t = " + to_string(t);
                out.reports.push_back(r);
            }
        }
    } else if (mode == "order-n") {
        if (p.deformation.empty()) throw InputError("order-n needs a deformation section");
        std::vector<Matrix> c = coefficients(p, T);
        Report ord = order_n_check(p.algebra, rep, c);
        bool ok = ord.passed();
        out.reports.push_back(std::move(ord));
        if (ok) {
            Obstruction ob = obstruction_class(cx, c);
            out.extra["extendable"] = ob.extension.has_value();
            out.text_extra = ob.extension ? "extends to the next order\n" : "does not extend to the next order\n";
        }
    } else if (mode == "obstruction") {
        if (p.deformation.empty()) throw InputError("obstruction needs a deformation section");
        Obstruction ob = obstruction_class(cx, coefficients(p, T));
        out.extra["obstruction"] = vector_json(ob.ob.coords());
        std::string text = vector_text("obstruction cochain", ob.ob.coords());
        if (ob.extension) {
            out.extra["extension"] = matrix_json(*ob.extension);
            text += matrix_text("extension coefficient", *ob.extension);
        } else {
            out.extra["extension"] = nullptr;
            out.extra["certificate"] = vector_json(ob.certificate);
            text += "no extension exists\n" + vector_text("certificate", ob.certificate);
        }
        out.text_extra = text;
        out.reports.push_back(std::move(ob.report));
    } else {
        throw InputError("unknown deform mode " + mode);
    }
    return out;
}

// ---- selftest

// c'(x,y) = P^{-1} c(Px, Py), and likewise for the ternary bracket.
LYAlgebra transport(const LYAlgebra& a, const Matrix& P, const Matrix& Pinv)
{
    const std::size_t n = a.dim();
    LYAlgebra b(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            b.set_binary(i, j, Pinv.apply(a.binary(P.column(i), P.column(j))));
            for (std::size_t k = 0; k < n; ++k)
                b.set_ternary(i, j, k, Pinv.apply(a.ternary(P.column(i), P.column(j), P.column(k))));
        }
    return b;
}

// Unit lower-triangular times unit upper-triangular: invertible over Z.
std::pair<Matrix, Matrix> scrambler(std::mt19937_64& rng, std::size_t n)
{
    Matrix L = Matrix::identity(n), U = Matrix::identity(n);
    std::uniform_int_distribution<int> d(-2, 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) {
            L(i, j) = d(rng);
            U(j, i) = d(rng);
        }
    // inverses of unit triangular matrices by forward substitution
    auto inv_lower = [n](const Matrix& A) {
        Matrix X = Matrix::identity(n);
        for (std::size_t c = 0; c < n; ++c)
            for (std::size_t i = 0; i < n; ++i) {
                Scalar s = i == c ? 1 : 0;
                for (std::size_t k = 0; k < i; ++k) s -= A(i, k) * X(k, c);
                X(i, c) = s;
            }
        return X;
    };
    Matrix Linv = inv_lower(L);
    Matrix Uinv = inv_lower(U.transpose()).transpose();
    return {L * U, Uinv * Linv};
}

struct Tally {
    Check* check;
    std::size_t runs = 0;
    void record(bool ok, std::size_t trial)
    {
        ++runs;
        if (!ok) check->fail({trial}, {});
    }
};

Output cmd_selftest(std::uint64_t seed, const std::string& dims, int degree)
{
    std::size_t n = 0, m = 0;
    {
        char comma = 0;
        std::istringstream is(dims);
        long a = -1, b = -1;
        if (!(is >> a >> comma >> b) || comma != ',' || a < 1 || b < 1 || !is.eof())
            throw InputError("--dims expects \"n,m\" with positive integers");
        n = static_cast<std::size_t>(a);
        m = static_cast<std::size_t>(b);
    }
    if (degree < 0 || degree > 3) throw InputError("--degree must be between 0 and 3");
    std::mt19937_64 rng(seed);

    // the 2-dim example plus an abelian summand, in a scrambled basis
    LYAlgebra base(n);
    if (n >= 2) {
        base.set_binary(0, 1, [&] { Vector v(n); v[0] = 1; return v; }());
        base.set_ternary(0, 1, 1, [&] { Vector v(n); v[0] = 1; return v; }());
    }
    auto [P, Pinv] = scrambler(rng, n);
    LYAlgebra g = transport(base, P, Pinv);
    // V = g + Q^{m-n} with the adjoint action on g, or the zero module
    Representation rep = zero_representation(n, m);
    Matrix T(n, m);
    if (m >= n) {
        Representation ad = adjoint_representation(g);
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    rep.rho[a](i, j) = ad.rho[a](i, j);
                    for (std::size_t b = 0; b < n; ++b) rep.mu_basis(a, b)(i, j) = ad.mu_basis(a, b)(i, j);
                }
        }
        if (n >= 2) {
            // R = [[0,a],[0,b]] on the first two basis vectors, carried over
            Matrix R(n, n);
            R(0, 1) = random_scalar(rng);
            R(1, 1) = random_scalar(rng);
            Matrix TR = Pinv * R * P;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) T(i, j) = TR(i, j);
        }
    }

    Output out;
    out.command = "selftest";
    Report r;
    r.subject = "property_battery";
    Report setup;
    setup.subject = "setup";
    setup.merge(verify_lya(g), "algebra");
    setup.merge(verify_representation(g, rep), "module");
    setup.merge(is_relative_rota_baxter(g, rep, T), "operator");
    out.reports.push_back(setup);
    if (!setup.passed()) return out;

    std::vector<Tally> tallies;
    auto tally = [&](const char* name) -> Tally& {
        tallies.push_back(Tally{&r.add(name)});
        return tallies.back();
    };
    tallies.reserve(8);
    Tally& skew = tally("graded_skew_symmetry");
    Tally& jac = tally("graded_jacobi");
    Tally& dd = tally("coboundary_squares_to_zero");
    Tally& pi = tally("coboundary_is_bracket_with_pi");
    Tally& twd = tally("coboundary_is_twisted_l1");
    Tally& smc = tally("strict_mc_iff_rota_baxter");
    Tally& lin = tally("twisted_mc_iff_linear_deformation");

    auto sign = [](int e) { return Scalar(e % 2 ? -1 : 1); };
    const int top = std::min(degree, 2);
    for (std::size_t t = 0; t < 6; ++t) {
        int p = static_cast<int>(rng() % static_cast<unsigned>(top + 1));
        int q = static_cast<int>(rng() % static_cast<unsigned>(top + 1));
        int s = static_cast<int>(rng() % static_cast<unsigned>(std::min(top, 1) + 1));
        Cochain A = random_cochain(rng, p, n, n), B = random_cochain(rng, q, n, n), C = random_cochain(rng, s, n, n);
        skew.record(graded_bracket(A, B) == graded_bracket(B, A).scaled(-sign(p * q)), t);
        Cochain j = graded_bracket(graded_bracket(A, B), C).scaled(sign(p * s));
        j += graded_bracket(graded_bracket(B, C), A).scaled(sign(q * p));
        j += graded_bracket(graded_bracket(C, A), B).scaled(sign(s * q));
        jac.record(j.is_zero(), t);
    }
    Cochain Pi = algebra_to_pi(g);
    Representation ad = adjoint_representation(g);
    for (int p = 0; p <= degree; ++p) {
        for (std::size_t t = 0; t < 3; ++t) {
            Cochain F = random_cochain(rng, p, n, m);
            if (p + 1 <= degree) dd.record(yamaguti_coboundary(g, rep, yamaguti_coboundary(g, rep, F)).is_zero(), t);
            Cochain G = random_cochain(rng, p, n, n);
            pi.record(yamaguti_coboundary(g, ad, G) == graded_bracket(Pi, G).scaled(sign(p)), t);
        }
    }
    BigSpaceContext ctx(g, rep);
    RBComplex cx(g, rep, T);
    TwistedLInfinity tw(ctx, T);
    for (int p = 0; p <= std::min(degree, 2); ++p)
        for (std::size_t t = 0; t < 2; ++t) {
            Cochain F = random_cochain(rng, p, m, n);
            twd.record(theorem_diff_oracle(cx, tw, F).passed(), t);
        }
    for (std::size_t t = 0; t < 8; ++t) {
        Matrix X = t % 2 ? random_matrix(rng, n, m) : T.scaled(random_scalar(rng));
        smc.record(is_relative_rota_baxter(g, rep, X).passed() == strict_mc_check(ctx, X).passed(), t);
        Matrix Y = t % 2 ? random_matrix(rng, n, m) : T.scaled(random_scalar(rng));
        lin.record(linear_deformation_check(cx, Y).passed() == twisted_mc_polynomial_check(tw, Y).passed(), t);
    }
    json counts = json::object();
    for (auto& ta : tallies) {
        ta.check->note = std::to_string(ta.runs - ta.check->violations) + "/" + std::to_string(ta.runs) + " passed";
        counts[ta.check->name] = {{"passed", ta.runs - ta.check->violations}, {"runs", ta.runs}};
    }
    out.extra["seed"] = seed;
    out.extra["dims"] = {n, m};
    out.extra["degree"] = degree;
    out.extra["counts"] = counts;
    out.reports.push_back(std::move(r));
    return out;
}

}  // namespace

int main(int argc, char** argv)
{
    Options opt;
    CLI::App app{"Lie-Yamaguti algebras, relative Rota-Baxter operators, cohomology and deformations"};
    app.require_subcommand(1);
    app.add_option("--format", opt.format, "json (default) or text")->check(CLI::IsMember({"json", "text"}));
    app.add_flag("--adjoint", opt.adjoint, "use the adjoint module instead of a representation section");
    app.add_option("--max-level", opt.max_level, "largest cochain level to materialize")->check(CLI::PositiveNumber);
    app.add_option("--max-tensor-entries", opt.max_entries, "largest tensor to allocate")
        ->check(CLI::PositiveNumber);
    app.fallthrough();

    std::string file;
    auto* verify = app.add_subcommand("verify", "check the algebra (and representation) axioms");
    verify->add_option("file", file)->required();
    auto* rb = app.add_subcommand("rb-check", "check the Rota-Baxter identities and the Maurer-Cartan form");
    rb->add_option("file", file)->required();

    std::vector<int> levels;
    std::string complex = "rb";
    auto* coh = app.add_subcommand("cohomology", "cohomology dimensions per level");
    coh->add_option("file", file)->required();
    coh->add_option("--level", levels, "levels (comma separated or repeated)")->delimiter(',');
    coh->add_option("--complex", complex, "yamaguti or rb")->check(CLI::IsMember({"yamaguti", "rb"}));

    std::string mode;
    std::vector<std::string> ts{"1", "1/2", "-2"};
    auto* def = app.add_subcommand("deform", "deformations of the operator");
    def->add_option("mode", mode, "check-linear, nijenhuis, order-n or obstruction")
        ->required()
        ->check(CLI::IsMember({"check-linear", "nijenhuis", "order-n", "obstruction"}));
    def->add_option("file", file)->required();
    def->add_option("--t", ts, "parameter values for the nijenhuis witnesses")->delimiter(',');

    std::uint64_t seed = 1;
    std::string dims = "2,2";
    int degree = 1;
    auto* st = app.add_subcommand("selftest", "seeded property battery");
    st->add_option("--seed", seed);
    st->add_option("--dims", dims, "\"n,m\": algebra and module dimensions");
    st->add_option("--degree", degree, "largest cochain degree");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kPass : kInput;
    }
    set_max_level(opt.max_level);
    set_max_tensor_entries(opt.max_entries);

    try {
        Output out;
        if (*verify) {
            out = cmd_verify(file, opt);
        } else if (*rb) {
            out = cmd_rb_check(file, opt);
        } else if (*coh) {
            if (levels.empty()) levels.push_back(complex == "rb" ? 1 : 2);
            out = cmd_cohomology(file, levels, complex, opt);
        } else if (*def) {
            out = cmd_deform(mode, file, ts, opt);
        } else {
            out = cmd_selftest(seed, dims, degree);
        }
        return emit(out, opt);
    } catch (const ParseError& e) {
        return emit_error(opt, "parse", e.what(), &e);
    } catch (const ResourceCapExceeded& e) {
        return emit_error(opt, "resource_cap", e.what());
    } catch (const InputError& e) {
        return emit_error(opt, "input", e.what());
    } catch (const DimensionMismatch& e) {
        return emit_error(opt, "dimension", e.what());
    } catch (const StructureError& e) {
        return emit_error(opt, "structure", e.what());
    } catch (const NotVerifiedDeformation& e) {
        return emit_error(opt, "not_a_deformation", e.what());
    }
}
