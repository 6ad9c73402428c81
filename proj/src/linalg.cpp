#include "wbafrac/linalg.hpp"

namespace wbafrac {

void Echelon::eliminate(Vec& v, Vec& tag) const
{
    // Rows are fully reduced, so subtracting one row never reintroduces another pivot.
    std::vector<std::pair<std::size_t, Scalar>> hits;
    for (const auto& [col, c] : v) {
        if (rows_.count(col)) hits.emplace_back(col, c);
    }
    for (const auto& [col, c] : hits) {
        const Row& row = rows_.at(col);
        v.add_scaled(row.vec, -c);
        tag.add_scaled(row.tag, -c);
    }
}

bool Echelon::insert(const Vec& v, const Vec& tag)
{
    Vec w = v;
    Vec t = tag;
    eliminate(w, t);
    if (w.is_zero()) {
        if (!t.is_zero()) kernel_.push_back(std::move(t));
        return false;
    }
    const std::size_t pivot = w.begin()->first;
    const Scalar inv = w.begin()->second.inverse();
    w *= inv;
    t *= inv;
    for (auto& [col, row] : rows_) {
        Scalar c = row.vec.coeff(pivot);
        if (c.is_zero()) continue;
        row.vec.add_scaled(w, -c);
        row.tag.add_scaled(t, -c);
    }
    rows_.emplace(pivot, Row{std::move(w), std::move(t)});
    return true;
}

Echelon::Reduction Echelon::reduce(const Vec& v) const
{
    Reduction out{v, Vec()};
    Vec neg;
    eliminate(out.residual, neg);
    out.tag = -neg;
    return out;
}

Vec Echelon::residual(const Vec& v) const
{
    Vec w = v;
    Vec scratch;
    std::vector<std::pair<std::size_t, Scalar>> hits;
    for (const auto& [col, c] : w) {
        if (rows_.count(col)) hits.emplace_back(col, c);
    }
    for (const auto& [col, c] : hits) w.add_scaled(rows_.at(col).vec, -c);
    return w;
}

std::optional<std::vector<Scalar>> solve_linear(const std::vector<Vec>& columns, const Vec& target)
{
    Echelon ech;
    for (std::size_t i = 0; i < columns.size(); ++i) ech.insert(columns[i], Vec::basis(i));
    auto red = ech.reduce(target);
    if (!red.residual.is_zero()) return std::nullopt;
    std::vector<Scalar> x(columns.size());
    for (const auto& [i, c] : red.tag) x[i] = c;
    return x;
}

}  // namespace wbafrac
