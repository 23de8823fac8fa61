#include "fa/facalc.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fa {

IrrDecomposition FBModuleData::degree(int k) const
{
    auto it = degrees.find(k);
    if (it != degrees.end())
        return it->second;
    IrrDecomposition d;
    d.n = k;
    return d;
}

std::int64_t FBModuleData::dimension(int k) const
{
    return k == 0 ? F0_dim : degree(k).dimension();
}

VirtualFB FBModuleData::bar() const
{
    VirtualFB r(trunc);
    for (const auto& [k, d] : degrees)
        if (k >= 1)
            r.add(d);
    return r;
}

void FBModuleData::validate() const
{
    if (trunc < 0)
        throw std::invalid_argument("FB module data: negative truncation");
    if (F0_dim < 0)
        throw std::invalid_argument("FB module data: negative F0_dim");
    for (const auto& [k, d] : degrees) {
        if (k < 1 || k > trunc)
            throw std::invalid_argument("FB module data: degree " + std::to_string(k) + " outside 1.." +
                                        std::to_string(trunc));
        if (d.n != k && !d.is_zero())
            throw std::invalid_argument("FB module data: degree " + std::to_string(k) + " holds partitions of " +
                                        std::to_string(d.n));
        if (!d.is_effective())
            throw std::invalid_argument("FB module data: negative multiplicity in degree " + std::to_string(k));
    }
}

SimpleLabel SimpleLabel::k0()
{
    return SimpleLabel(Kind::K0, 0, Partition());
}

SimpleLabel SimpleLabel::lambda_bar(int n)
{
    if (n < 0)
        throw std::invalid_argument("Lambda_bar: negative index");
    return SimpleLabel(Kind::LambdaBar, n, Partition());
}

SimpleLabel SimpleLabel::c(const Partition& lambda)
{
    if (lambda.empty() || lambda.is_column())
        throw std::invalid_argument("C(lambda) needs a nonempty partition other than a column; got " +
                                    lambda.pretty());
    return SimpleLabel(Kind::C, lambda.size(), lambda);
}

std::string SimpleLabel::str() const
{
    switch (kind_) {
    case Kind::K0:
        return "k0";
    case Kind::LambdaBar:
        return "L " + std::to_string(n_);
    case Kind::C:
        return "C " + lambda_.str();
    }
    return "";
}

SimpleLabel SimpleLabel::parse(const std::string& text)
{
    std::istringstream in(text);
    std::string kind, arg, extra;
    in >> kind >> arg >> extra;
    if (!extra.empty())
        throw std::invalid_argument("malformed simple label '" + text + "'");
    if (kind == "k0" && arg.empty())
        return k0();
    if (kind == "L" && !arg.empty()) {
        if (arg.find_first_not_of("0123456789") != std::string::npos || arg.size() > 6)
            throw std::invalid_argument("malformed simple label '" + text + "'");
        return lambda_bar(std::stoi(arg));
    }
    if (kind == "C" && !arg.empty())
        return c(Partition::parse(arg));
    throw std::invalid_argument("unknown simple label '" + text + "'");
}

std::int64_t ProjectiveLabel::dimension(int m) const
{
    if (kind == Kind::LambdaPfin)
        return binomial(m, j);
    if (m < 1)
        return 0;
    return schur_dim(nu, m - 1);
}

std::string ProjectiveLabel::str() const
{
    if (kind == Kind::LambdaPfin)
        return "Lambda^" + std::to_string(j) + "(P)";
    return "S_" + nu.pretty() + "(Pbar)";
}

namespace {

VirtualFBBimod bimod_from_characters(int trunc, bool surjective)
{
    VirtualFBBimod r(trunc, trunc);
    for (int s = 0; s <= trunc; ++s)
        for (int t = 0; t <= trunc; ++t) {
            if (surjective && s < t)
                continue;
            if (!surjective && t == 0 && s > 0)
                continue;
            for (const auto& [k, c] : decompose_bimodule(perm_character_maps(s, t, surjective)))
                r.add(k.first, k.second, c);
        }
    return r;
}

/* the left-variable class sgn_k (x)_{S_k} M(-, k) */
VirtualFB sign_slice(const VirtualFBBimod& m, int k)
{
    return m.left_slice(column(k));
}

} // namespace

VirtualFBBimod kfa_class(int trunc)
{
    return bimod_from_characters(trunc, false);
}

VirtualFBBimod kfs_class_direct(int trunc)
{
    return bimod_from_characters(trunc, true);
}

VirtualFBBimod kfs_class_from_kfa(int trunc)
{
    return convolve_right(kfa_class(trunc), series_S(0, trunc));
}

VirtualFBBimod fs_class(int trunc)
{
    VirtualFBBimod direct = kfs_class_direct(trunc);
    VirtualFBBimod derived = kfs_class_from_kfa(trunc);
    if (!(direct == derived))
        throw std::logic_error("surjection bimodule class disagrees with the convolution of the map class");
    return direct;
}

IrrDecomposition simple_eval(const SimpleLabel& label, int t)
{
    if (t < 0)
        throw std::invalid_argument("simple_eval: negative size");
    IrrDecomposition d;
    d.n = t;
    switch (label.kind()) {
    case SimpleLabel::Kind::K0:
        if (t == 0)
            d.add(Partition(), 1);
        break;
    case SimpleLabel::Kind::LambdaBar: {
        int n = label.n();
        if (t > n) {
            std::vector<int> parts{t - n};
            parts.insert(parts.end(), n, 1);
            d.add(Partition(parts), 1);
        }
        break;
    }
    case SimpleLabel::Kind::C:
        if (t >= label.n())
            for (const auto& mu : partitions_of(t))
                if (contains(mu, label.lambda()) && is_horizontal_strip(mu, label.lambda()))
                    d.add(mu, 1);
        break;
    }
    return d;
}

std::int64_t simple_dimension(const SimpleLabel& label, int t)
{
    return simple_eval(label, t).dimension();
}

std::vector<ProjectiveLabel> decompose_schur_pfin(const Partition& lambda)
{
    const int n = lambda.size();
    if (n == 0)
        throw std::invalid_argument("decompose_schur_pfin: the empty partition is not allowed");
    std::vector<ProjectiveLabel> out;
    bool hook_shape = lambda.is_hook();
    int s = lambda.part(0);
    for (int m = 0; m <= n; ++m)
        for (const auto& nu : partitions_of(m)) {
            if (!contains(lambda, nu) || !is_horizontal_strip(lambda, nu))
                continue;
            if (hook_shape && (nu == column(n - s + 1) || nu == column(n - s)))
                continue;
            out.push_back(ProjectiveLabel::schur_pbar(nu));
        }
    if (hook_shape)
        out.push_back(ProjectiveLabel::lambda_pfin(n - s + 1));
    std::sort(out.begin(), out.end());
    return out;
}

std::map<SimpleLabel, std::int64_t> KfiStructure::composition_factors() const
{
    auto out = simples;
    out[SimpleLabel::lambda_bar(projective.j)] += 1;
    out[SimpleLabel::lambda_bar(projective.j - 1)] += 1;
    return out;
}

KfiStructure structure_kfi(int n)
{
    if (n < 1)
        throw std::invalid_argument("structure_kfi: need n >= 1");
    KfiStructure r;
    r.projective = ProjectiveLabel::lambda_pfin(n);
    for (const auto& lambda : partitions_of(n))
        if (!lambda.is_column())
            r.simples[SimpleLabel::c(lambda)] = specht_dim(lambda);
    return r;
}

VirtualFB hom_projcover(const FBModuleData& F)
{
    F.validate();
    const int N = F.trunc;
    if (N < 1)
        throw std::invalid_argument("hom_projcover: need trunc >= 1");
    VirtualFB r = day(F.bar(), series_S(0, N));
    for (int k = 1; k <= N; ++k) {
        std::int64_t c = sgn_coinvariants(F.degree(k));
        if (c)
            r = r + series_S(k - 1, N).scaled(c);
    }
    return r.truncated(N - 1);
}

VirtualFBBimod hom_projcover_pfin(int n, int trunc)
{
    if (n < 0 || trunc < 0)
        throw std::invalid_argument("hom_projcover_pfin: negative argument");
    VirtualFBBimod kfs = fs_class(std::max(n, trunc + 1));
    VirtualFBBimod r(n, trunc);
    for (int k = 0; k <= trunc; ++k)
        for (const auto& [key, c] : kfs.block(n, k))
            r.add(key.first, key.second, c);
    for (int k = 1; k <= trunc + 1; ++k)
        for (const auto& [key, c] : kfs.block(n, k))
            if (key.second == column(k))
                r.add(key.first, column(k - 1), c);
    return r;
}

VirtualFBBimod hom_projcover_pbar(int trunc)
{
    VirtualFBBimod kfs = fs_class(trunc + 1);
    VirtualFB s0 = series_S(0, trunc);
    VirtualFBBimod r = convolve_left(kfs.truncated(trunc, trunc), s0);
    for (int k = 1; k <= trunc + 1; ++k) {
        VirtualFB left = day(sign_slice(kfs, k).truncated(trunc), s0);
        r = r + VirtualFBBimod::external(left, VirtualFB::sign(k - 1, trunc));
    }
    return r;
}

VirtualFBBimod endo_projcover(int trunc)
{
    VirtualFBBimod r = hom_projcover_pbar(trunc);
    for (int l = 0; l + 1 <= trunc; ++l)
        r = r + VirtualFBBimod::external(VirtualFB::sign(l, trunc), VirtualFB::sign(l + 1, trunc));
    return r;
}

VirtualFBBimod hom_pbar_pbar(int trunc)
{
    VirtualFBBimod kfs = fs_class(trunc);
    VirtualFBBimod r = convolve_left(kfs, series_S(0, trunc));
    for (int k = 1; k <= trunc; ++k)
        r = r + VirtualFBBimod::external(series_S(k, trunc), VirtualFB::sign(k - 1, trunc));
    return r;
}

BimodDecomposition pbar_hom_block(const VirtualFBBimod& table, int s, int t)
{
    return table.block(t, s);
}

VirtualFB hom_lambdabar_pbar(int s, int trunc)
{
    if (s < 0 || trunc < 0)
        throw std::invalid_argument("hom_lambdabar_pbar: negative argument");
    VirtualFBBimod kfs = fs_class(std::max(s, trunc));
    VirtualFB r = day(sign_slice(kfs, s).truncated(trunc), series_S(0, trunc));
    if (s + 1 <= trunc)
        r = r + series_S(s + 1, trunc);
    return r;
}

MultiplicityResult multiplicities(const FBModuleData& F)
{
    MultiplicityResult out;
    auto record = [&](const SimpleLabel& label, std::int64_t m) {
        if (m < 0)
            out.negative.push_back(label.str());
        if (m != 0)
            out.mults[label] = m;
    };
    record(SimpleLabel::k0(), F.F0_dim);
    VirtualFB h = hom_projcover(F);
    for (int n = 0; n <= h.trunc(); ++n)
        for (const auto& lambda : partitions_of(n)) {
            std::int64_t c = h[lambda];
            if (lambda.is_column())
                record(SimpleLabel::lambda_bar(n), c);
            else
                record(SimpleLabel::c(lambda), c);
        }
    return out;
}

std::vector<std::int64_t> composition_dimensions(const std::map<SimpleLabel, std::int64_t>& mults, int max_t)
{
    std::vector<std::int64_t> dims(max_t + 1, 0);
    for (const auto& [label, m] : mults)
        for (int t = 0; t <= max_t; ++t)
            dims[t] += m * simple_dimension(label, t);
    return dims;
}

} // namespace fa
