#ifndef TORICGM_EXACT_LINALG_HPP
#define TORICGM_EXACT_LINALG_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "toricgm/poly.hpp"

namespace toricgm {

using DenseMatrix = std::vector<std::vector<Rational>>;
using IntMatrix = std::vector<std::vector<long long>>;
// Sorted by index, no zero entries.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

std::size_t rank(DenseMatrix m);
std::size_t rank(const IntMatrix& m);

// Exact inverse; nullopt when singular.
std::optional<DenseMatrix> inverse(const DenseMatrix& m);
Rational determinant(DenseMatrix m);

// Incrementally built row-echelon basis of a subspace of Q^N, used for
// span membership and dimension counts on large sparse systems.
class EchelonBasis {
public:
    // Returns true when v was independent of the current rows (and keeps it).
    bool insert(const SparseVector& v);
    SparseVector reduce(const SparseVector& v) const;
    bool contains(const SparseVector& v) const { return reduce(v).empty(); }
    std::size_t size() const { return rows_.size(); }

private:
    // pivot column -> row with leading entry 1 at that column
    std::map<std::size_t, SparseVector> rows_;
};

}  // namespace toricgm

#endif  // TORICGM_EXACT_LINALG_HPP
