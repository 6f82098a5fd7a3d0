#include "lya/io.hpp"

#include "lya/cochain.hpp"
#include "lya/errors.hpp"
#include "lya/limits.hpp"

#include <array>
#include <set>
#include <sstream>

namespace lya {

using nlohmann::json;

namespace {

// Byte offset -> 1-based line and column.
std::pair<std::size_t, std::size_t> locate(const std::string& text, std::size_t offset)
{
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

[[noreturn]] void bad(const std::string& where, const std::string& what) { throw ParseError(where + ": " + what); }

Scalar scalar_from(const json& j, const std::string& where)
{
    if (j.is_string()) {
        try {
            return parse_scalar(j.get<std::string>());
        } catch (const ParseError& e) {
            bad(where, e.what());
        }
    }
    if (j.is_number_integer()) return Scalar(j.dump());
    bad(where, "expected a rational string such as \"3/4\"");
}

Vector vector_from(const json& j, std::size_t n, const std::string& where)
{
    if (!j.is_array() || j.size() != n) bad(where, "expected a list of " + std::to_string(n) + " rationals");
    Vector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = scalar_from(j[i], where + "[" + std::to_string(i) + "]");
    return v;
}

std::size_t index_from(const json& j, std::size_t n, const std::string& where)
{
    if (!j.is_number_integer()) bad(where, "expected a 1-based integer index");
    const long long v = j.get<long long>();
    if (v < 1 || static_cast<unsigned long long>(v) > n)
        bad(where, "index " + std::to_string(v) + " out of range 1.." + std::to_string(n));
    return static_cast<std::size_t>(v - 1);
}

std::size_t size_from(const json& obj, const char* key, const std::string& where)
{
    if (!obj.contains(key)) bad(where, std::string("missing \"") + key + "\"");
    const json& j = obj.at(key);
    if (!j.is_number_integer() || j.get<long long>() < 0) bad(where + "." + key, "expected a nonnegative integer");
    return static_cast<std::size_t>(j.get<long long>());
}

const json* field(const json& obj, const char* key, const std::string& where)
{
    if (!obj.contains(key)) bad(where, std::string("missing \"") + key + "\"");
    return &obj.at(key);
}

LYAlgebra algebra_from(const json& a, std::vector<std::string>& basis)
{
    const std::string where = "algebra";
    if (!a.is_object()) bad(where, "expected an object");
    const std::size_t n = size_from(a, "dimension", where);
    check_tensor_size(n * n * n * n, "ternary structure tensor");
    LYAlgebra alg(n);
    basis.clear();
    if (a.contains("basis")) {
        const json& b = a.at("basis");
        if (!b.is_array() || b.size() != n) bad(where + ".basis", "expected " + std::to_string(n) + " names");
        for (const auto& s : b) {
            if (!s.is_string()) bad(where + ".basis", "names must be strings");
            basis.push_back(s.get<std::string>());
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) basis.push_back("e" + std::to_string(i + 1));
    }
    // binary entries are keyed (i, j, n), ternary ones (i, j, k)
    std::set<std::array<std::size_t, 3>> seen;
    if (a.contains("binary")) {
        const json& list = a.at("binary");
        if (!list.is_array()) bad(where + ".binary", "expected a list");
        for (std::size_t e = 0; e < list.size(); ++e) {
            const std::string w = where + ".binary[" + std::to_string(e) + "]";
            const json& it = list[e];
            if (!it.is_object()) bad(w, "expected {i, j, value}");
            std::size_t i = index_from(*field(it, "i", w), n, w + ".i");
            std::size_t j = index_from(*field(it, "j", w), n, w + ".j");
            if (i >= j) bad(w, "entries need i < j; the skew part is implied");
            if (!seen.insert({i, j, n}).second) bad(w, "duplicate entry");
            alg.set_binary(i, j, vector_from(*field(it, "value", w), n, w + ".value"));
        }
    }
    if (a.contains("ternary")) {
        const json& list = a.at("ternary");
        if (!list.is_array()) bad(where + ".ternary", "expected a list");
        for (std::size_t e = 0; e < list.size(); ++e) {
            const std::string w = where + ".ternary[" + std::to_string(e) + "]";
            const json& it = list[e];
            if (!it.is_object()) bad(w, "expected {i, j, k, value}");
            std::size_t i = index_from(*field(it, "i", w), n, w + ".i");
            std::size_t j = index_from(*field(it, "j", w), n, w + ".j");
            std::size_t k = index_from(*field(it, "k", w), n, w + ".k");
            if (i >= j) bad(w, "entries need i < j; the skew part is implied");
            if (!seen.insert({i, j, k}).second) bad(w, "duplicate entry");
            alg.set_ternary(i, j, k, vector_from(*field(it, "value", w), n, w + ".value"));
        }
    }
    return alg;
}

Representation representation_from(const json& r, std::size_t n)
{
    const std::string where = "representation";
    if (!r.is_object()) bad(where, "expected an object");
    const std::size_t m = size_from(r, "module_dim", where);
    check_tensor_size(n * n * m * m, "mu tensor");
    Representation rep(n, m);
    if (r.contains("rho")) {
        const json& rho = r.at("rho");
        if (!rho.is_array() || rho.size() != n) bad(where + ".rho", "expected " + std::to_string(n) + " matrices");
        for (std::size_t a = 0; a < n; ++a)
            rep.rho[a] = matrix_from_json(rho[a], m, m, where + ".rho[" + std::to_string(a) + "]");
    }
    if (r.contains("mu")) {
        const json& mu = r.at("mu");
        if (!mu.is_array() || mu.size() != n) bad(where + ".mu", "expected an n x n grid of matrices");
        for (std::size_t a = 0; a < n; ++a) {
            if (!mu[a].is_array() || mu[a].size() != n) bad(where + ".mu", "expected an n x n grid of matrices");
            for (std::size_t b = 0; b < n; ++b)
                rep.mu_basis(a, b) = matrix_from_json(
                    mu[a][b], m, m, where + ".mu[" + std::to_string(a) + "][" + std::to_string(b) + "]");
        }
    }
    return rep;
}

}  // namespace

Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols, const std::string& where)
{
    if (!j.is_array() || j.size() != rows)
        bad(where, "expected a " + std::to_string(rows) + " x " + std::to_string(cols) + " matrix (list of rows)");
    Matrix a(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        Vector row = vector_from(j[i], cols, where + "[" + std::to_string(i) + "]");
        for (std::size_t k = 0; k < cols; ++k) a(i, k) = row[k];
    }
    return a;
}

ProblemFile parse_problem(const std::string& text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        auto [line, col] = locate(text, e.byte == 0 ? 0 : e.byte - 1);
        std::string msg = e.what();
        auto pos = msg.find("syntax error");
        if (pos != std::string::npos) msg = msg.substr(pos);
        throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg, line,
                         col);
    }
    if (!doc.is_object()) bad("document", "expected a JSON object");
    for (const auto& [key, value] : doc.items()) {
        (void)value;
        if (key != "algebra" && key != "representation" && key != "operator" && key != "deformation" &&
            key != "wedge_element")
            bad("document", "unknown section \"" + key + "\"");
    }
    ProblemFile p;
    p.algebra = algebra_from(*field(doc, "algebra", "document"), p.basis);
    const std::size_t n = p.algebra.dim();
    if (doc.contains("representation")) p.representation = representation_from(doc.at("representation"), n);
    auto module_dim = [&](const std::string& where) {
        if (!p.representation) bad(where, "needs a representation section (or --adjoint)");
        return p.representation->m;
    };
    if (doc.contains("operator")) {
        const json& op = doc.at("operator");
        // the module dimension may come from --adjoint later; infer it from the rows
        std::size_t m = p.representation ? p.representation->m
                                          : (op.is_array() && !op.empty() && op[0].is_array() ? op[0].size() : 0);
        p.op = matrix_from_json(op, n, m, "operator");
    }
    if (doc.contains("deformation")) {
        const json& d = doc.at("deformation");
        if (!d.is_array()) bad("deformation", "expected a list of matrices");
        std::size_t m = p.op ? p.op->cols() : module_dim("deformation");
        for (std::size_t i = 0; i < d.size(); ++i)
            p.deformation.push_back(matrix_from_json(d[i], n, m, "deformation[" + std::to_string(i) + "]"));
    }
    if (doc.contains("wedge_element")) {
        const json& w = doc.at("wedge_element");
        if (!w.is_array()) bad("wedge_element", "expected a list of {i, j, coeff}");
        WedgeBasis wb(n);
        Vector x(wb.size());
        for (std::size_t e = 0; e < w.size(); ++e) {
            const std::string where = "wedge_element[" + std::to_string(e) + "]";
            const json& it = w[e];
            if (!it.is_object()) bad(where, "expected {i, j, coeff}");
            std::size_t i = index_from(*field(it, "i", where), n, where + ".i");
            std::size_t j = index_from(*field(it, "j", where), n, where + ".j");
            if (i >= j) bad(where, "entries need i < j");
            x[wb.index(i, j)] += scalar_from(*field(it, "coeff", where), where + ".coeff");
        }
        p.wedge_element = x;
    }
    return p;
}

json scalar_json(const Scalar& s) { return to_string(s); }

json vector_json(const Vector& v)
{
    json j = json::array();
    for (const auto& x : v) j.push_back(to_string(x));
    return j;
}

json matrix_json(const Matrix& a)
{
    json j = json::array();
    for (std::size_t i = 0; i < a.rows(); ++i) j.push_back(vector_json(a.row(i)));
    return j;
}

json problem_to_json(const ProblemFile& p)
{
    const LYAlgebra& alg = p.algebra;
    const std::size_t n = alg.dim();
    json a;
    a["dimension"] = n;
    if (!p.basis.empty()) a["basis"] = p.basis;
    a["binary"] = json::array();
    a["ternary"] = json::array();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Vector b = alg.binary_basis(i, j);
            if (!is_zero(b)) a["binary"].push_back({{"i", i + 1}, {"j", j + 1}, {"value", vector_json(b)}});
            for (std::size_t k = 0; k < n; ++k) {
                Vector t = alg.ternary_basis(i, j, k);
                if (!is_zero(t))
                    a["ternary"].push_back({{"i", i + 1}, {"j", j + 1}, {"k", k + 1}, {"value", vector_json(t)}});
            }
        }
    json doc;
    doc["algebra"] = a;
    if (p.representation) {
        const Representation& r = *p.representation;
        json rep;
        rep["module_dim"] = r.m;
        rep["rho"] = json::array();
        for (const auto& m : r.rho) rep["rho"].push_back(matrix_json(m));
        rep["mu"] = json::array();
        for (std::size_t x = 0; x < n; ++x) {
            json row = json::array();
            for (std::size_t y = 0; y < n; ++y) row.push_back(matrix_json(r.mu_basis(x, y)));
            rep["mu"].push_back(row);
        }
        doc["representation"] = rep;
    }
    if (p.op) doc["operator"] = matrix_json(*p.op);
    if (!p.deformation.empty()) {
        doc["deformation"] = json::array();
        for (const auto& m : p.deformation) doc["deformation"].push_back(matrix_json(m));
    }
    if (p.wedge_element) {
        WedgeBasis wb(n);
        json w = json::array();
        for (std::size_t k = 0; k < wb.size(); ++k) {
            const Scalar& c = (*p.wedge_element)[k];
            if (sgn(c) == 0) continue;
            auto [i, j] = wb.pair(k);
            w.push_back({{"i", i + 1}, {"j", j + 1}, {"coeff", to_string(c)}});
        }
        doc["wedge_element"] = w;
    }
    return doc;
}

// Witness tuples are written 1-based, like file indices.
json report_json(const Report& r)
{
    json j;
    j["subject"] = r.subject;
    j["passed"] = r.passed();
    j["checks"] = json::array();
    for (const auto& c : r.checks) {
        json cj;
        cj["name"] = c.name;
        cj["passed"] = c.passed;
        cj["violations"] = c.violations;
        if (c.advisory) cj["advisory"] = true;
        if (!c.witness.empty()) {
            json w = json::array();
            for (auto i : c.witness) w.push_back(i + 1);
            cj["witness"] = w;
        }
        if (!c.residual.empty()) cj["residual"] = vector_json(c.residual);
        if (!c.note.empty()) cj["note"] = c.note;
        j["checks"].push_back(cj);
    }
    if (!r.notes.empty()) j["notes"] = r.notes;
    return j;
}

Report report_from_json(const json& j)
{
    Report r;
    r.subject = j.value("subject", "");
    for (const auto& cj : j.at("checks")) {
        Check& c = r.add(cj.at("name").get<std::string>());
        c.passed = cj.at("passed").get<bool>();
        c.violations = cj.value("violations", std::size_t{0});
        c.advisory = cj.value("advisory", false);
        if (cj.contains("witness"))
            for (const auto& i : cj.at("witness")) c.witness.push_back(i.get<std::size_t>() - 1);
        if (cj.contains("residual"))
            for (const auto& x : cj.at("residual")) c.residual.push_back(parse_scalar(x.get<std::string>()));
        c.note = cj.value("note", "");
    }
    if (j.contains("notes"))
        for (const auto& s : j.at("notes")) r.notes.push_back(s.get<std::string>());
    return r;
}

std::string report_text(const Report& r)
{
    std::ostringstream os;
    os << r.subject << ": " << (r.passed() ? "PASS" : "FAIL") << "\n";
    for (const auto& c : r.checks) {
        os << "  " << (c.passed ? "[ok]   " : c.advisory ? "[note] " : "[FAIL] ") << c.name;
        if (!c.passed) {
            os << ": " << c.violations << " violation" << (c.violations == 1 ? "" : "s");
            if (!c.witness.empty()) {
                os << ", first at (";
                for (std::size_t i = 0; i < c.witness.size(); ++i) os << (i ? "," : "") << c.witness[i] + 1;
                os << ")";
            }
            if (!c.residual.empty()) {
                os << ", residual [";
                for (std::size_t i = 0; i < c.residual.size(); ++i) os << (i ? ", " : "") << to_string(c.residual[i]);
                os << "]";
            }
        }
        if (!c.note.empty()) os << "  (" << c.note << ")";
        os << "\n";
    }
    for (const auto& n : r.notes) os << "  note: " << n << "\n";
    return os.str();
}

}  // namespace lya
