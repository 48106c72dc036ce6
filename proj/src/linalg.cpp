#include "lindisc/linalg.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace lindisc {

RVector RVector::constant(std::size_t dim, const Rational &value) {
    RVector v(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        v[i] = value;
    }
    return v;
}

RVector RVector::operator+(const RVector &o) const {
    if (dim() != o.dim()) {
        throw DimensionError("vector sum: dim " + std::to_string(dim()) + " vs " +
                             std::to_string(o.dim()));
    }
    RVector r(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
        r[i] = entries_[i] + o[i];
    }
    return r;
}

RVector RVector::operator-(const RVector &o) const {
    if (dim() != o.dim()) {
        throw DimensionError("vector difference: dim " + std::to_string(dim()) + " vs " +
                             std::to_string(o.dim()));
    }
    RVector r(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
        r[i] = entries_[i] - o[i];
    }
    return r;
}

RVector RVector::operator-() const {
    RVector r(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
        r[i] = -entries_[i];
    }
    return r;
}

RMatrix RMatrix::identity(std::size_t n) {
    RMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m.at(i, i) = Rational(1);
    }
    return m;
}

RVector RMatrix::row(std::size_t r) const {
    RVector v(cols_);
    for (std::size_t c = 0; c < cols_; ++c) {
        v[c] = at(r, c);
    }
    return v;
}

RVector mat_vec_mul(const RMatrix &a, const RVector &v) {
    if (a.cols() != v.dim()) {
        throw DimensionError("matrix-vector product: matrix has " + std::to_string(a.cols()) +
                             " columns, vector has dim " + std::to_string(v.dim()));
    }
    RVector r(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Rational acc;
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Rational &e = a.at(i, j);
            if (!e.is_zero()) {
                acc += e * v[j];
            }
        }
        r[i] = std::move(acc);
    }
    return r;
}

Rational inf_norm(const RVector &v) {
    if (v.dim() == 0) {
        throw DimensionError("inf_norm of empty vector");
    }
    Rational best = v[0].abs();
    for (std::size_t i = 1; i < v.dim(); ++i) {
        Rational a = v[i].abs();
        if (a > best) {
            best = std::move(a);
        }
    }
    return best;
}

namespace {

// Next line that is neither blank nor a '#' comment; false at EOF.
bool next_content_line(std::istream &in, std::string &line, int &lineno) {
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') {
            continue;
        }
        return true;
    }
    return false;
}

std::vector<std::string> tokenize(const std::string &line) {
    std::vector<std::string> out;
    std::istringstream iss(line);
    std::string tok;
    while (iss >> tok) {
        out.push_back(tok);
    }
    return out;
}

Rational parse_entry(const std::string &tok, int lineno) {
    try {
        return Rational::parse(tok);
    } catch (const ParseError &e) {
        throw ParseError(lineno, e.what());
    }
}

std::size_t parse_count(const std::string &tok, int lineno, const char *what) {
    try {
        std::size_t pos = 0;
        long long v = std::stoll(tok, &pos);
        if (pos != tok.size() || v < 0) {
            throw std::invalid_argument(tok);
        }
        return static_cast<std::size_t>(v);
    } catch (const std::exception &) {
        throw ParseError(lineno, std::string("bad ") + what + " '" + tok + "'");
    }
}

} // namespace

RMatrix read_matrix(std::istream &in) {
    std::string line;
    int lineno = 0;
    if (!next_content_line(in, line, lineno)) {
        throw ParseError(lineno, "missing matrix header 'm n'");
    }
    auto header = tokenize(line);
    if (header.size() != 2) {
        throw ParseError(lineno, "matrix header must be 'm n'");
    }
    std::size_t m = parse_count(header[0], lineno, "row count");
    std::size_t n = parse_count(header[1], lineno, "column count");
    RMatrix a(m, n);
    for (std::size_t i = 0; i < m; ++i) {
        if (!next_content_line(in, line, lineno)) {
            throw ParseError(lineno, "expected " + std::to_string(m) + " matrix rows, got " +
                                         std::to_string(i));
        }
        auto toks = tokenize(line);
        if (toks.size() != n) {
            throw ParseError(lineno, "matrix row has " + std::to_string(toks.size()) +
                                         " entries, expected " + std::to_string(n));
        }
        for (std::size_t j = 0; j < n; ++j) {
            a.at(i, j) = parse_entry(toks[j], lineno);
        }
    }
    return a;
}

void write_matrix(std::ostream &out, const RMatrix &a) {
    out << a.rows() << " " << a.cols() << "\n";
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (j > 0) {
                out << " ";
            }
            out << a.at(i, j);
        }
        out << "\n";
    }
}

RVector read_vector(std::istream &in) {
    std::string line;
    int lineno = 0;
    if (!next_content_line(in, line, lineno)) {
        throw ParseError(lineno, "missing vector header 'n'");
    }
    auto header = tokenize(line);
    if (header.size() != 1) {
        throw ParseError(lineno, "vector header must be a single count");
    }
    std::size_t n = parse_count(header[0], lineno, "entry count");
    RVector v(n);
    std::size_t have = 0;
    while (have < n) {
        if (!next_content_line(in, line, lineno)) {
            throw ParseError(lineno, "expected " + std::to_string(n) + " vector entries, got " +
                                         std::to_string(have));
        }
        for (const auto &tok : tokenize(line)) {
            if (have == n) {
                throw ParseError(lineno, "too many vector entries");
            }
            v[have++] = parse_entry(tok, lineno);
        }
    }
    return v;
}

void write_vector(std::ostream &out, const RVector &v) {
    out << v.dim() << "\n";
    for (std::size_t i = 0; i < v.dim(); ++i) {
        out << v[i] << "\n";
    }
}

namespace {

template <typename T, typename F> T read_file(const std::string &path, F reader) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open '" + path + "'");
    }
    return reader(in);
}

} // namespace

RMatrix read_matrix_file(const std::string &path) {
    return read_file<RMatrix>(path, [](std::istream &in) { return read_matrix(in); });
}

RVector read_vector_file(const std::string &path) {
    return read_file<RVector>(path, [](std::istream &in) { return read_vector(in); });
}

} // namespace lindisc
