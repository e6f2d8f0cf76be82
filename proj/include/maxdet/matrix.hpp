#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "maxdet/errors.hpp"

namespace maxdet {

class IntMatrix;

// Square matrix over {0,1}, row-major. The object being grown.
class BinaryMatrix {
public:
    explicit BinaryMatrix(int n);  // zero matrix
    BinaryMatrix(int n, std::vector<std::uint8_t> entries);

    // Rows as strings of '0'/'1' characters, e.g. {"101","110","011"}.
    static BinaryMatrix from_rows(const std::vector<std::string>& rows);

    int size() const { return n_; }
    std::uint8_t at(int i, int j) const { return e_[static_cast<std::size_t>(i) * n_ + j]; }
    void set(int i, int j, std::uint8_t v);

    std::vector<std::string> row_strings() const;
    IntMatrix to_int() const;

    bool operator==(const BinaryMatrix&) const = default;

private:
    int n_;
    std::vector<std::uint8_t> e_;
};

// Square matrix of signed exact 64-bit integers (adjugates, cofactors,
// bordered assemblies). All arithmetic on entries goes through the checked
// helpers; overflow is an error, never a silent wrap.
class IntMatrix {
public:
    explicit IntMatrix(int n);  // zero matrix
    IntMatrix(int n, std::vector<std::int64_t> entries);

    static IntMatrix identity(int n);

    int size() const { return n_; }
    std::int64_t at(int i, int j) const { return e_[static_cast<std::size_t>(i) * n_ + j]; }
    void set(int i, int j, std::int64_t v) { e_[static_cast<std::size_t>(i) * n_ + j] = v; }

    const std::vector<std::int64_t>& entries() const { return e_; }
    IntMatrix transposed() const;
    IntMatrix multiplied_by(const IntMatrix& rhs) const;  // checked arithmetic

    bool operator==(const IntMatrix&) const = default;

private:
    int n_;
    std::vector<std::int64_t> e_;
};

}  // namespace maxdet
