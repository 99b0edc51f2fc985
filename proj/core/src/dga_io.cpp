#include "hochbv/dga_io.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>

namespace hochbv {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> toks;
    std::string cur;
    for (char c : line) {
        if (c == '#') break;
        if (std::isspace(static_cast<unsigned char>(c))) {
            if (!cur.empty()) toks.push_back(std::move(cur)), cur.clear();
        } else if (c == '=' || c == '+') {
            if (!cur.empty()) toks.push_back(std::move(cur)), cur.clear();
            toks.emplace_back(1, c);
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) toks.push_back(std::move(cur));
    return toks;
}

}  // namespace

DgAlgebra parse_algebra(std::istream& in) {
    DgAlgebra A;
    A.name = "algebra";

    struct Pending {
        int line;
        std::vector<std::string> toks;
    };
    std::vector<Pending> d_lines, mul_lines, unit_lines;

    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        const std::string& kw = toks[0];
        if (kw == "algebra") {
            if (toks.size() != 2) throw ParseError(lineno, "expected: algebra <name>");
            A.name = toks[1];
        } else if (kw == "generator") {
            if (toks.size() != 4 || toks[2] != "degree")
                throw ParseError(lineno, "expected: generator <name> degree <int>");
            if (A.index_of(toks[1]) >= 0)
                throw ParseError(lineno, "duplicate generator '" + toks[1] + "'");
            int deg;
            try {
                std::size_t pos;
                deg = std::stoi(toks[3], &pos);
                if (pos != toks[3].size()) throw std::invalid_argument("");
            } catch (const std::exception&) {
                throw ParseError(lineno, "bad degree '" + toks[3] + "'");
            }
            A.basis_names.push_back(toks[1]);
            A.degree.push_back(deg);
        } else if (kw == "d") {
            d_lines.push_back({lineno, toks});
        } else if (kw == "mul") {
            mul_lines.push_back({lineno, toks});
        } else if (kw == "unit") {
            unit_lines.push_back({lineno, toks});
        } else {
            throw ParseError(lineno, "unknown keyword '" + kw + "'");
        }
    }

    std::size_t n = A.dim();
    if (n == 0) throw ParseError(lineno, "no generators");

    auto need = [&](int ln, const std::string& name) -> std::size_t {
        int i = A.index_of(name);
        if (i < 0) throw ParseError(ln, "unknown generator '" + name + "'");
        return static_cast<std::size_t>(i);
    };
    // parse "x + y + z" or "0" starting at toks[from]
    auto parse_sum = [&](int ln, const std::vector<std::string>& toks, std::size_t from) {
        F2Vector v(n);
        if (from >= toks.size()) throw ParseError(ln, "empty sum");
        if (toks.size() == from + 1 && toks[from] == "0") return v;
        bool expect_name = true;
        for (std::size_t i = from; i < toks.size(); ++i) {
            if (expect_name) {
                if (toks[i] == "+" || toks[i] == "=") throw ParseError(ln, "malformed sum");
                v.flip(need(ln, toks[i]));
            } else if (toks[i] != "+") {
                throw ParseError(ln, "expected '+' in sum");
            }
            expect_name = !expect_name;
        }
        if (expect_name) throw ParseError(ln, "trailing '+' in sum");
        return v;
    };

    A.diff.assign(n, F2Vector(n));
    A.mult.assign(n, std::vector<F2Vector>(n, F2Vector(n)));
    A.unit = F2Vector(n);

    for (const auto& p : d_lines) {
        if (p.toks.size() < 4 || p.toks[2] != "=")
            throw ParseError(p.line, "expected: d <name> = <sum>");
        A.diff[need(p.line, p.toks[1])] = parse_sum(p.line, p.toks, 3);
    }
    for (const auto& p : mul_lines) {
        if (p.toks.size() < 5 || p.toks[3] != "=")
            throw ParseError(p.line, "expected: mul <name> <name> = <sum>");
        A.mult[need(p.line, p.toks[1])][need(p.line, p.toks[2])] =
            parse_sum(p.line, p.toks, 4);
    }
    if (unit_lines.empty()) throw ParseError(lineno, "missing 'unit = <sum>'");
    for (const auto& p : unit_lines) {
        if (p.toks.size() < 3 || p.toks[1] != "=")
            throw ParseError(p.line, "expected: unit = <sum>");
        A.unit = parse_sum(p.line, p.toks, 2);
    }
    return A;
}

DgAlgebra parse_algebra_string(const std::string& text) {
    std::istringstream in(text);
    return parse_algebra(in);
}

DgAlgebra load_algebra_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open algebra file: " + path);
    return parse_algebra(in);
}

std::string serialize_algebra(const DgAlgebra& A) {
    std::ostringstream out;
    out << "algebra " << A.name << "\n";
    for (std::size_t i = 0; i < A.dim(); ++i)
        out << "generator " << A.basis_names[i] << " degree " << A.degree[i] << "\n";
    for (std::size_t i = 0; i < A.dim(); ++i)
        if (!A.diff[i].is_zero())
            out << "d " << A.basis_names[i] << " = " << A.show(A.diff[i]) << "\n";
    for (std::size_t i = 0; i < A.dim(); ++i)
        for (std::size_t j = 0; j < A.dim(); ++j)
            if (!A.mult[i][j].is_zero())
                out << "mul " << A.basis_names[i] << " " << A.basis_names[j] << " = "
                    << A.show(A.mult[i][j]) << "\n";
    out << "unit = " << A.show(A.unit) << "\n";
    return out.str();
}

}  // namespace hochbv
