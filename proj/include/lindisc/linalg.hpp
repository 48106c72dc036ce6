#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <vector>

#include "lindisc/rational.hpp"

namespace lindisc {

// Dense rational vector. Entries are exact; nothing here ever rounds.
class RVector {
  public:
    RVector() = default;
    explicit RVector(std::size_t dim) : entries_(dim) {}
    RVector(std::initializer_list<Rational> init) : entries_(init) {}
    explicit RVector(std::vector<Rational> entries) : entries_(std::move(entries)) {}

    static RVector constant(std::size_t dim, const Rational &value);

    std::size_t dim() const { return entries_.size(); }
    const Rational &operator[](std::size_t i) const { return entries_[i]; }
    Rational &operator[](std::size_t i) { return entries_[i]; }

    const std::vector<Rational> &entries() const { return entries_; }

    RVector operator+(const RVector &o) const;
    RVector operator-(const RVector &o) const;
    RVector operator-() const;

    friend bool operator==(const RVector &a, const RVector &b) = default;

  private:
    std::vector<Rational> entries_;
};

// Dense rational matrix, row-major.
class RMatrix {
  public:
    RMatrix() = default;
    RMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static RMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Rational &at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    Rational &at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

    RVector row(std::size_t r) const;

    friend bool operator==(const RMatrix &a, const RMatrix &b) = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

// Exact product; throws DimensionError naming both dimensions on mismatch.
RVector mat_vec_mul(const RMatrix &a, const RVector &v);

// max_i |v_i|; throws DimensionError on the empty vector.
Rational inf_norm(const RVector &v);

// Text formats. Matrix: a line "m n" followed by m rows of n rationals.
// Vector: a line "n" followed by n rationals. Lines starting with '#' are
// skipped everywhere; entries may be "p/q" or decimals.
RMatrix read_matrix(std::istream &in);
void write_matrix(std::ostream &out, const RMatrix &a);
RVector read_vector(std::istream &in);
void write_vector(std::ostream &out, const RVector &v);

RMatrix read_matrix_file(const std::string &path);
RVector read_vector_file(const std::string &path);

} // namespace lindisc
