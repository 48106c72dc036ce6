#include "lindisc/nae_sat.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace lindisc {

Assignment Assignment::from_code(std::uint64_t code, int n) {
    Assignment a;
    a.bits.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        a.bits[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((code >> i) & 1U);
    }
    return a;
}

std::uint64_t Assignment::code() const {
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        c |= static_cast<std::uint64_t>(bits[i]) << i;
    }
    return c;
}

Assignment Assignment::complement() const {
    Assignment a = *this;
    for (auto &b : a.bits) {
        b = static_cast<std::uint8_t>(1U - b);
    }
    return a;
}

Assignment merge_assignment(const Assignment &universal, const Assignment &existential_suffix) {
    Assignment merged = universal;
    merged.bits.insert(merged.bits.end(), existential_suffix.bits.begin(),
                       existential_suffix.bits.end());
    return merged;
}

namespace {

struct TokenLine {
    std::vector<std::string> toks;
    int lineno = 0;
};

long long to_int(const std::string &tok, int lineno) {
    try {
        std::size_t pos = 0;
        long long v = std::stoll(tok, &pos);
        if (pos != tok.size()) {
            throw std::invalid_argument(tok);
        }
        return v;
    } catch (const std::exception &) {
        throw ParseError(lineno, "expected integer, got '" + tok + "'");
    }
}

// Reads a 0-terminated run of positive variable indices from a quantifier line.
std::vector<int> quantifier_vars(const TokenLine &line, int n) {
    std::vector<int> vars;
    bool terminated = false;
    for (std::size_t i = 1; i < line.toks.size(); ++i) {
        long long v = to_int(line.toks[i], line.lineno);
        if (v == 0) {
            if (i + 1 != line.toks.size()) {
                throw ParseError(line.lineno, "tokens after terminating 0");
            }
            terminated = true;
            break;
        }
        if (v < 1 || v > n) {
            throw ParseError(line.lineno,
                             "variable " + std::to_string(v) + " out of range [1, " +
                                 std::to_string(n) + "]");
        }
        vars.push_back(static_cast<int>(v));
    }
    if (!terminated) {
        throw ParseError(line.lineno, "quantifier line missing terminating 0");
    }
    if (vars.empty()) {
        throw ParseError(line.lineno, "empty quantifier block");
    }
    return vars;
}

} // namespace

QuantifiedNaeFormula parse_formula(const std::string &text) {
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;

    std::vector<TokenLine> lines;
    while (std::getline(in, raw)) {
        ++lineno;
        std::istringstream ls(raw);
        TokenLine tl;
        tl.lineno = lineno;
        std::string tok;
        while (ls >> tok) {
            tl.toks.push_back(tok);
        }
        if (tl.toks.empty() || tl.toks[0] == "c" || tl.toks[0][0] == 'c') {
            continue;
        }
        lines.push_back(std::move(tl));
    }

    std::size_t pos = 0;
    if (pos >= lines.size() || lines[pos].toks[0] != "p") {
        throw ParseError(pos < lines.size() ? lines[pos].lineno : lineno,
                         "expected header 'p cnf <n> <m>'");
    }
    const TokenLine &header = lines[pos];
    if (header.toks.size() != 4 || header.toks[1] != "cnf") {
        throw ParseError(header.lineno, "malformed header, expected 'p cnf <n> <m>'");
    }
    long long n = to_int(header.toks[2], header.lineno);
    long long m = to_int(header.toks[3], header.lineno);
    if (n < 0 || m < 0) {
        throw ParseError(header.lineno, "negative counts in header");
    }
    ++pos;

    QuantifiedNaeFormula qf;
    qf.formula.n = static_cast<int>(n);

    // Quantifier prefix: at most one 'a' block, then at most one 'e' block.
    std::optional<std::vector<int>> a_vars;
    std::optional<std::vector<int>> e_vars;
    while (pos < lines.size() && (lines[pos].toks[0] == "a" || lines[pos].toks[0] == "e")) {
        const TokenLine &tl = lines[pos];
        if (tl.toks[0] == "a") {
            if (a_vars) {
                throw ParseError(tl.lineno, "more than one universal block");
            }
            if (e_vars) {
                throw ParseError(tl.lineno, "universal block after existential block");
            }
            a_vars = quantifier_vars(tl, qf.formula.n);
        } else {
            if (e_vars) {
                throw ParseError(tl.lineno, "more than one existential block");
            }
            e_vars = quantifier_vars(tl, qf.formula.n);
        }
        ++pos;
    }
    if (a_vars) {
        std::vector<int> sorted = *a_vars;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            if (sorted[i] != static_cast<int>(i) + 1) {
                throw ParseError(header.lineno,
                                 "universal variables must be the prefix v1..v" +
                                     std::to_string(sorted.size()));
            }
        }
        qf.n_universal = static_cast<int>(sorted.size());
    }
    if (e_vars) {
        for (int v : *e_vars) {
            if (v <= qf.n_universal) {
                throw ParseError(header.lineno,
                                 "variable " + std::to_string(v) +
                                     " is both universal and existential");
            }
        }
    }

    // Clauses: 0-terminated literal runs, each with 1..3 literals. A short
    // clause is padded by replicating its first literal.
    std::vector<Literal> current;
    int clause_start_line = 0;
    for (; pos < lines.size(); ++pos) {
        const TokenLine &tl = lines[pos];
        if (tl.toks[0] == "a" || tl.toks[0] == "e") {
            throw ParseError(tl.lineno, "quantifier line after clauses");
        }
        for (const auto &tok : tl.toks) {
            long long lit = to_int(tok, tl.lineno);
            if (lit == 0) {
                if (current.empty()) {
                    throw ParseError(tl.lineno, "empty clause");
                }
                if (current.size() > 3) {
                    throw ParseError(tl.lineno, "clause has " + std::to_string(current.size()) +
                                                    " literals, at most 3 supported");
                }
                Clause cl;
                if (current.size() == 3) {
                    cl.lits = {current[0], current[1], current[2]};
                } else if (current.size() == 2) {
                    // Replica goes in front: (l1, l2) reads back as (l1, l1, l2).
                    cl.lits = {current[0], current[0], current[1]};
                } else {
                    cl.lits = {current[0], current[0], current[0]};
                }
                qf.formula.clauses.push_back(cl);
                current.clear();
            } else {
                if (current.empty()) {
                    clause_start_line = tl.lineno;
                }
                long long v = lit > 0 ? lit : -lit;
                if (v > qf.formula.n) {
                    throw ParseError(tl.lineno, "variable " + std::to_string(v) +
                                                    " out of range [1, " +
                                                    std::to_string(qf.formula.n) + "]");
                }
                current.push_back(Literal{static_cast<int>(v), lit > 0 ? +1 : -1});
            }
        }
    }
    if (!current.empty()) {
        throw ParseError(clause_start_line, "clause missing terminating 0");
    }
    if (qf.formula.m() != static_cast<int>(m)) {
        throw ParseError(header.lineno, "header declares " + std::to_string(m) +
                                            " clauses, file has " +
                                            std::to_string(qf.formula.m()));
    }
    return qf;
}

QuantifiedNaeFormula parse_formula_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_formula(ss.str());
}

std::string serialize_formula(const QuantifiedNaeFormula &qf) {
    std::ostringstream out;
    out << "p cnf " << qf.formula.n << " " << qf.formula.m() << "\n";
    if (qf.n_universal > 0) {
        out << "a";
        for (int v = 1; v <= qf.n_universal; ++v) {
            out << " " << v;
        }
        out << " 0\n";
        if (qf.n_universal < qf.formula.n) {
            out << "e";
            for (int v = qf.n_universal + 1; v <= qf.formula.n; ++v) {
                out << " " << v;
            }
            out << " 0\n";
        }
    }
    for (const auto &cl : qf.formula.clauses) {
        for (const auto &lit : cl.lits) {
            out << lit.sign * lit.var << " ";
        }
        out << "0\n";
    }
    return out.str();
}

bool eval_nae(const NaeFormula &f, const Assignment &psi) {
    if (psi.size() < f.n) {
        throw PreconditionError("assignment covers " + std::to_string(psi.size()) +
                                " variables, formula has " + std::to_string(f.n));
    }
    for (const auto &cl : f.clauses) {
        bool any_true = false;
        bool any_false = false;
        for (const auto &lit : cl.lits) {
            int v = psi.value(lit.var);
            if (lit.sign < 0) {
                v = 1 - v;
            }
            (v != 0 ? any_true : any_false) = true;
        }
        if (!any_true || !any_false) {
            return false;
        }
    }
    return true;
}

namespace {

void check_capacity(int n, int limit) {
    if (n > limit) {
        throw CapacityError("exhaustive search over " + std::to_string(n) +
                            " variables exceeds limit " + std::to_string(limit));
    }
}

} // namespace

std::optional<Assignment> solve_nae(const NaeFormula &f, int limit) {
    check_capacity(f.n, limit);
    const std::uint64_t total = std::uint64_t{1} << f.n;
    for (std::uint64_t code = 0; code < total; ++code) {
        Assignment psi = Assignment::from_code(code, f.n);
        if (eval_nae(f, psi)) {
            return psi;
        }
    }
    return std::nullopt;
}

ForallExistsVerdict solve_forall_exists(const QuantifiedNaeFormula &qf, int limit) {
    check_capacity(qf.formula.n, limit);
    const int np = qf.n_universal;
    const int ne = qf.formula.n - np;

    ForallExistsVerdict verdict;
    verdict.witnesses.reserve(std::size_t{1} << np);
    const std::uint64_t universal_total = std::uint64_t{1} << np;
    const std::uint64_t existential_total = std::uint64_t{1} << ne;
    for (std::uint64_t ua = 0; ua < universal_total; ++ua) {
        Assignment psi_a = Assignment::from_code(ua, np);
        std::optional<Assignment> found;
        for (std::uint64_t ex = 0; ex < existential_total; ++ex) {
            Assignment merged = merge_assignment(psi_a, Assignment::from_code(ex, ne));
            if (eval_nae(qf.formula, merged)) {
                found = std::move(merged);
                break;
            }
        }
        if (!found) {
            verdict.yes = false;
            verdict.witnesses.clear();
            verdict.counterexample = std::move(psi_a);
            return verdict;
        }
        verdict.witnesses.push_back(std::move(*found));
    }
    verdict.yes = true;
    return verdict;
}

} // namespace lindisc
