#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lindisc/errors.hpp"

namespace lindisc {

// Variables are 1-based throughout; sign is +1 for v, -1 for "not v".
struct Literal {
    int var = 0;
    int sign = +1;

    friend bool operator==(const Literal &, const Literal &) = default;
    friend auto operator<=>(const Literal &, const Literal &) = default;
};

// Exactly three literals; shorter input clauses are padded by replicating
// their first literal, so a replicated literal is a legal state.
struct Clause {
    std::array<Literal, 3> lits;

    friend bool operator==(const Clause &, const Clause &) = default;
    friend auto operator<=>(const Clause &, const Clause &) = default;
};

struct NaeFormula {
    int n = 0; // variables v_1..v_n
    std::vector<Clause> clauses;

    int m() const { return static_cast<int>(clauses.size()); }

    friend bool operator==(const NaeFormula &, const NaeFormula &) = default;
};

// Two-level formula: v_1..v_{n'} are universally quantified, the rest
// existentially. n' = 0 means a plain NAE3SAT instance.
struct QuantifiedNaeFormula {
    int n_universal = 0;
    NaeFormula formula;

    int n() const { return formula.n; }
    int m() const { return formula.m(); }

    friend bool operator==(const QuantifiedNaeFormula &, const QuantifiedNaeFormula &) = default;
};

// Total 0/1 assignment to a 1-based prefix of variables. bits[i] is the
// value of v_{i+1}; code() packs it with v_1 as the least significant bit.
struct Assignment {
    std::vector<std::uint8_t> bits;

    Assignment() = default;
    explicit Assignment(std::vector<std::uint8_t> b) : bits(std::move(b)) {}

    static Assignment from_code(std::uint64_t code, int n);
    std::uint64_t code() const;

    int size() const { return static_cast<int>(bits.size()); }
    int value(int var) const { return bits[static_cast<std::size_t>(var - 1)]; }

    Assignment complement() const;

    friend bool operator==(const Assignment &, const Assignment &) = default;
};

// Outcome of the two-level solve. On YES, `witnesses[c]` is a full
// assignment over [n] whose universal prefix has code c; its existential
// suffix is the lexicographically first working completion. On NO,
// `counterexample` is one universal assignment with no completion.
struct ForallExistsVerdict {
    bool yes = false;
    std::vector<Assignment> witnesses;
    std::optional<Assignment> counterexample;
};

inline constexpr int kDefaultExhaustiveLimit = 24;

// DIMACS CNF with optional QDIMACS-style quantifier lines ("a ... 0",
// "e ... 0"). Universal variables must form the prefix v_1..v_{n'}.
QuantifiedNaeFormula parse_formula(const std::string &text);
QuantifiedNaeFormula parse_formula_file(const std::string &path);
std::string serialize_formula(const QuantifiedNaeFormula &qf);

// True iff every clause has at least one true and at least one false literal.
bool eval_nae(const NaeFormula &f, const Assignment &psi);

// First satisfying assignment in code order, or nullopt.
std::optional<Assignment> solve_nae(const NaeFormula &f, int limit = kDefaultExhaustiveLimit);

ForallExistsVerdict solve_forall_exists(const QuantifiedNaeFormula &qf,
                                        int limit = kDefaultExhaustiveLimit);

// Merge a universal prefix with an existential suffix (bits for v_{n'+1}..v_n).
Assignment merge_assignment(const Assignment &universal, const Assignment &existential_suffix);

} // namespace lindisc
