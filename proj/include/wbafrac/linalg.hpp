#pragma once

// Incremental reduced row echelon form over exact Scalars.
//
// Rows are sparse vectors indexed by integer columns. Each inserted vector can
// carry a tag vector; tags follow every row operation, so after reduction the
// tag records which combination of inserted vectors was used. That is how
// kernels and "which generator produced this" bookkeeping are recovered.

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "wbafrac/element.hpp"

namespace wbafrac {

using Vec = LinearCombination<std::size_t>;

class Echelon {
public:
    struct Row {
        Vec vec;  // leading entry 1 at the pivot, zero at every other pivot column
        Vec tag;
    };

    struct Reduction {
        Vec residual;
        Vec tag;  // v == residual + (combination of inserted vectors whose tags sum to tag)
    };

    /// Inserts v. Returns true when v was independent of the current rows.
    /// Dependent insertions record tag - (tag of the combination) as a kernel vector.
    bool insert(const Vec& v, const Vec& tag = Vec());

    Reduction reduce(const Vec& v) const;
    Vec residual(const Vec& v) const;
    bool contains(const Vec& v) const { return residual(v).is_zero(); }

    std::size_t rank() const { return rows_.size(); }
    bool is_pivot(std::size_t col) const { return rows_.count(col) != 0; }
    const std::map<std::size_t, Row>& rows() const { return rows_; }
    /// Tag combinations of inserted vectors that sum to zero.
    const std::vector<Vec>& kernel() const { return kernel_; }

private:
    void eliminate(Vec& v, Vec& tag) const;

    std::map<std::size_t, Row> rows_;
    std::vector<Vec> kernel_;
};

/// Solves sum_i x_i columns[i] == target. Returns nullopt when inconsistent.
std::optional<std::vector<Scalar>> solve_linear(const std::vector<Vec>& columns, const Vec& target);

}  // namespace wbafrac
