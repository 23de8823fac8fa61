#include "fa/json_io.hpp"

#include <stdexcept>

namespace fa {

namespace {

const json& field(const json& j, const char* name)
{
    if (!j.is_object() || !j.contains(name))
        throw std::invalid_argument(std::string("missing field '") + name + "'");
    return j.at(name);
}

std::int64_t integer(const json& j, const char* what)
{
    if (!j.is_number_integer())
        throw std::invalid_argument(std::string(what) + " must be an integer");
    return j.get<std::int64_t>();
}

int nonnegative(const json& j, const char* what)
{
    std::int64_t v = integer(j, what);
    if (v < 0 || v > 1000000)
        throw std::invalid_argument(std::string(what) + " out of range");
    return static_cast<int>(v);
}

} // namespace

json partition_to_json(const Partition& p)
{
    json a = json::array();
    for (int x : p.parts())
        a.push_back(x);
    return a;
}

Partition partition_from_json(const json& j)
{
    if (!j.is_array())
        throw std::invalid_argument("partition must be an array of positive integers");
    std::vector<int> parts;
    for (const auto& x : j) {
        if (!x.is_number_integer() || x.get<std::int64_t>() <= 0 || x.get<std::int64_t>() > 1000000)
            throw std::invalid_argument("partition entries must be positive integers");
        parts.push_back(x.get<int>());
    }
    return Partition(parts);
}

json irr_to_json(const IrrDecomposition& d)
{
    json mults = json::array();
    for (const auto& [p, c] : d.mults)
        mults.push_back({{"partition", partition_to_json(p)}, {"mult", c}});
    return {{"n", d.n}, {"mults", mults}};
}

IrrDecomposition irr_from_json(const json& j)
{
    IrrDecomposition d;
    d.n = nonnegative(field(j, "n"), "n");
    const json& mults = field(j, "mults");
    if (!mults.is_array())
        throw std::invalid_argument("'mults' must be an array");
    for (const auto& e : mults) {
        Partition p = partition_from_json(field(e, "partition"));
        if (p.size() != d.n)
            throw std::invalid_argument("partition " + p.pretty() + " does not have size " + std::to_string(d.n));
        d.add(p, integer(field(e, "mult"), "mult"));
    }
    return d;
}

json virtual_fb_to_json(const VirtualFB& v)
{
    json coeffs = json::array();
    for (const auto& [p, c] : v.coeffs())
        coeffs.push_back({{"partition", partition_to_json(p)}, {"coeff", c}});
    return {{"trunc", v.trunc()}, {"coeffs", coeffs}};
}

VirtualFB virtual_fb_from_json(const json& j)
{
    VirtualFB v(nonnegative(field(j, "trunc"), "trunc"));
    const json& coeffs = field(j, "coeffs");
    if (!coeffs.is_array())
        throw std::invalid_argument("'coeffs' must be an array");
    for (const auto& e : coeffs) {
        Partition p = partition_from_json(field(e, "partition"));
        if (p.size() > v.trunc())
            throw std::invalid_argument("partition " + p.pretty() + " exceeds the truncation");
        v.add(p, integer(field(e, "coeff"), "coeff"));
    }
    return v;
}

json bimod_to_json(const VirtualFBBimod& b)
{
    json coeffs = json::array();
    for (const auto& [k, c] : b.coeffs())
        coeffs.push_back(
            {{"left", partition_to_json(k.first)}, {"right", partition_to_json(k.second)}, {"coeff", c}});
    return {{"trunc_left", b.trunc_left()}, {"trunc_right", b.trunc_right()}, {"coeffs", coeffs}};
}

VirtualFBBimod bimod_from_json(const json& j)
{
    VirtualFBBimod b(nonnegative(field(j, "trunc_left"), "trunc_left"),
                     nonnegative(field(j, "trunc_right"), "trunc_right"));
    const json& coeffs = field(j, "coeffs");
    if (!coeffs.is_array())
        throw std::invalid_argument("'coeffs' must be an array");
    for (const auto& e : coeffs) {
        Partition l = partition_from_json(field(e, "left"));
        Partition r = partition_from_json(field(e, "right"));
        if (l.size() > b.trunc_left() || r.size() > b.trunc_right())
            throw std::invalid_argument("bimodule entry exceeds the truncation");
        b.add(l, r, integer(field(e, "coeff"), "coeff"));
    }
    return b;
}

json fb_module_to_json(const FBModuleData& f)
{
    json degrees = json::object();
    for (const auto& [k, d] : f.degrees)
        degrees[std::to_string(k)] = irr_to_json(d);
    return {{"trunc", f.trunc}, {"F0_dim", f.F0_dim}, {"degrees", degrees}};
}

FBModuleData fb_module_from_json(const json& j)
{
    FBModuleData f;
    f.trunc = nonnegative(field(j, "trunc"), "trunc");
    f.F0_dim = nonnegative(field(j, "F0_dim"), "F0_dim");
    const json& degrees = field(j, "degrees");
    if (!degrees.is_object())
        throw std::invalid_argument("'degrees' must be an object keyed by degree");
    for (const auto& [key, value] : degrees.items()) {
        if (key.empty() || key.size() > 6 || key.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("degree key '" + key + "' is not a nonnegative integer");
        int k = std::stoi(key);
        IrrDecomposition d = irr_from_json(value);
        if (d.n != k)
            throw std::invalid_argument("degree " + key + " carries n = " + std::to_string(d.n));
        f.degrees[k] = d;
    }
    f.validate();
    return f;
}

} // namespace fa
