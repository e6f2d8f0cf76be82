#include "maxdet/matrix.hpp"

#include "maxdet/checked_int.hpp"

namespace maxdet {

namespace {

void require_dimension(int n) {
    if (n < 1) throw DimensionError("matrix dimension must be >= 1, got " + std::to_string(n));
}

}  // namespace

BinaryMatrix::BinaryMatrix(int n) : n_(n) {
    require_dimension(n);
    e_.assign(static_cast<std::size_t>(n) * n, 0);
}

BinaryMatrix::BinaryMatrix(int n, std::vector<std::uint8_t> entries) : n_(n), e_(std::move(entries)) {
    require_dimension(n);
    if (e_.size() != static_cast<std::size_t>(n) * n)
        throw DimensionError("entry count does not match dimension");
    for (std::uint8_t v : e_)
        if (v > 1) throw InputError("binary matrix entry out of {0,1}");
}

BinaryMatrix BinaryMatrix::from_rows(const std::vector<std::string>& rows) {
    const int n = static_cast<int>(rows.size());
    require_dimension(n);
    std::vector<std::uint8_t> e;
    e.reserve(static_cast<std::size_t>(n) * n);
    for (const std::string& row : rows) {
        if (row.size() != static_cast<std::size_t>(n))
            throw InputError("row length " + std::to_string(row.size()) +
                             " does not match matrix dimension " + std::to_string(n));
        for (char c : row) {
            if (c != '0' && c != '1') throw InputError(std::string("invalid matrix character '") + c + "'");
            e.push_back(static_cast<std::uint8_t>(c - '0'));
        }
    }
    return {n, std::move(e)};
}

void BinaryMatrix::set(int i, int j, std::uint8_t v) {
    if (v > 1) throw InputError("binary matrix entry out of {0,1}");
    e_[static_cast<std::size_t>(i) * n_ + j] = v;
}

std::vector<std::string> BinaryMatrix::row_strings() const {
    std::vector<std::string> rows;
    rows.reserve(n_);
    for (int i = 0; i < n_; ++i) {
        std::string row(static_cast<std::size_t>(n_), '0');
        for (int j = 0; j < n_; ++j) row[j] = static_cast<char>('0' + at(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

IntMatrix BinaryMatrix::to_int() const {
    IntMatrix m(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) m.set(i, j, at(i, j));
    return m;
}

IntMatrix::IntMatrix(int n) : n_(n) {
    require_dimension(n);
    e_.assign(static_cast<std::size_t>(n) * n, 0);
}

IntMatrix::IntMatrix(int n, std::vector<std::int64_t> entries) : n_(n), e_(std::move(entries)) {
    require_dimension(n);
    if (e_.size() != static_cast<std::size_t>(n) * n)
        throw DimensionError("entry count does not match dimension");
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) t.set(j, i, at(i, j));
    return t;
}

IntMatrix IntMatrix::multiplied_by(const IntMatrix& rhs) const {
    if (rhs.n_ != n_) throw DimensionError("matrix product dimension mismatch");
    IntMatrix out(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            std::int64_t acc = 0;
            for (int k = 0; k < n_; ++k) acc = checked_add(acc, checked_mul(at(i, k), rhs.at(k, j)));
            out.set(i, j, acc);
        }
    return out;
}

}  // namespace maxdet
