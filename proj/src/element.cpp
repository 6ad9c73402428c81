#include "wbafrac/element.hpp"

namespace wbafrac {

Tensor2 tensor(const Element& a, const Element& b)
{
    Tensor2 out;
    for (const auto& [ka, va] : a)
        for (const auto& [kb, vb] : b) out.add({ka, kb}, va * vb);
    return out;
}

Tensor3 tensor(const Element& a, const Element& b, const Element& c)
{
    Tensor3 out;
    for (const auto& [ka, va] : a)
        for (const auto& [kb, vb] : b) {
            Scalar ab = va * vb;
            for (const auto& [kc, vc] : c) out.add({ka, kb, kc}, ab * vc);
        }
    return out;
}

nlohmann::json to_json(const BasisId& b) { return nlohmann::json::array({b.block, b.index}); }

BasisId basis_id_from_json(const nlohmann::json& j)
{
    if (!j.is_array() || j.size() != 2) throw InvalidArgument("basis id must be [block, index]");
    return {j[0].get<std::uint32_t>(), j[1].get<std::uint32_t>()};
}

nlohmann::json to_json(const Element& e)
{
    auto out = nlohmann::json::array();
    for (const auto& [k, v] : e) out.push_back({to_json(k), to_json(v)});
    return out;
}

Element element_from_json(const nlohmann::json& j)
{
    if (!j.is_array()) throw InvalidArgument("element must be a list of [basis, scalar] pairs");
    Element out;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 2) throw InvalidArgument("malformed element term");
        out.add(basis_id_from_json(t[0]), scalar_from_json(t[1]));
    }
    return out;
}

nlohmann::json to_json(const Tensor2& t)
{
    auto out = nlohmann::json::array();
    for (const auto& [k, v] : t) out.push_back({to_json(k[0]), to_json(k[1]), to_json(v)});
    return out;
}

Tensor2 tensor2_from_json(const nlohmann::json& j)
{
    if (!j.is_array()) throw InvalidArgument("tensor must be a list of [basis, basis, scalar] triples");
    Tensor2 out;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 3) throw InvalidArgument("malformed tensor term");
        out.add({basis_id_from_json(t[0]), basis_id_from_json(t[1])}, scalar_from_json(t[2]));
    }
    return out;
}

}  // namespace wbafrac
