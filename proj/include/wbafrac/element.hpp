#pragma once

// Sparse linear combinations of basis vectors and of their tensor products.

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>

#include "wbafrac/field.hpp"

namespace wbafrac {

/// A basis vector: position `index` inside the ordered basis of component `block`.
struct BasisId {
    std::uint32_t block = 0;
    std::uint32_t index = 0;

    auto operator<=>(const BasisId&) const = default;
};

template <class Key>
class LinearCombination {
public:
    using Map = std::map<Key, Scalar>;
    using const_iterator = typename Map::const_iterator;

    LinearCombination() = default;

    static LinearCombination basis(const Key& k)
    {
        LinearCombination out;
        out.terms_.emplace(k, Scalar(1));
        return out;
    }

    static LinearCombination term(const Key& k, const Scalar& c)
    {
        LinearCombination out;
        out.add(k, c);
        return out;
    }

    void add(const Key& k, const Scalar& c)
    {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    /// this += c * other
    void add_scaled(const LinearCombination& other, const Scalar& c)
    {
        if (c.is_zero()) return;
        for (const auto& [k, v] : other.terms_) add(k, v * c);
    }

    LinearCombination& operator+=(const LinearCombination& other)
    {
        for (const auto& [k, v] : other.terms_) add(k, v);
        return *this;
    }

    LinearCombination& operator-=(const LinearCombination& other)
    {
        for (const auto& [k, v] : other.terms_) add(k, -v);
        return *this;
    }

    LinearCombination& operator*=(const Scalar& c)
    {
        if (c.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, v] : terms_) v *= c;
        return *this;
    }

    friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
    friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
    friend LinearCombination operator*(LinearCombination a, const Scalar& c) { return a *= c; }
    friend LinearCombination operator*(const Scalar& c, LinearCombination a) { return a *= c; }
    LinearCombination operator-() const
    {
        LinearCombination out = *this;
        for (auto& [k, v] : out.terms_) v = -v;
        return out;
    }

    bool operator==(const LinearCombination& other) const
    {
        if (terms_.size() != other.terms_.size()) return false;
        auto it = other.terms_.begin();
        for (const auto& [k, v] : terms_) {
            if (!(k == it->first) || v != it->second) return false;
            ++it;
        }
        return true;
    }

    Scalar coeff(const Key& k) const
    {
        auto it = terms_.find(k);
        return it == terms_.end() ? Scalar() : it->second;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const_iterator begin() const { return terms_.begin(); }
    const_iterator end() const { return terms_.end(); }
    const Map& terms() const { return terms_; }

private:
    Map terms_;
};

using Element = LinearCombination<BasisId>;
using Tensor2 = LinearCombination<std::array<BasisId, 2>>;
using Tensor3 = LinearCombination<std::array<BasisId, 3>>;

Tensor2 tensor(const Element& a, const Element& b);
Tensor3 tensor(const Element& a, const Element& b, const Element& c);

/// Linear map id (x) f applied to a two-fold tensor, f given on basis vectors.
template <class F>
Tensor2 apply_right(const Tensor2& t, F&& f)
{
    Tensor2 out;
    for (const auto& [k, c] : t) {
        Element img = f(k[1]);
        for (const auto& [b, v] : img) out.add({k[0], b}, c * v);
    }
    return out;
}

template <class F>
Tensor2 apply_left(const Tensor2& t, F&& f)
{
    Tensor2 out;
    for (const auto& [k, c] : t) {
        Element img = f(k[0]);
        for (const auto& [b, v] : img) out.add({b, k[1]}, c * v);
    }
    return out;
}

nlohmann::json to_json(const BasisId& b);
BasisId basis_id_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Element& e);
Element element_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Tensor2& t);
Tensor2 tensor2_from_json(const nlohmann::json& j);

}  // namespace wbafrac
