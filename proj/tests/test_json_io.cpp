#include "fa/json_io.hpp"

#include <doctest.h>

using namespace fa;

TEST_CASE("partition JSON")
{
    CHECK(partition_to_json({2, 1}) == json::parse("[2,1]"));
    CHECK(partition_to_json(Partition()) == json::array());
    CHECK(partition_from_json(json::parse("[3,1,1]")) == Partition{3, 1, 1});
    CHECK_THROWS_AS(partition_from_json(json::parse("[1,2]")), std::invalid_argument);
    CHECK_THROWS_AS(partition_from_json(json::parse("[0]")), std::invalid_argument);
    CHECK_THROWS_AS(partition_from_json(json::parse("\"2,1\"")), std::invalid_argument);
    CHECK_THROWS_AS(partition_from_json(json::parse("[1.5]")), std::invalid_argument);
}

TEST_CASE("round trips")
{
    IrrDecomposition d;
    d.n = 3;
    d.add({2, 1}, 2);
    d.add({3}, -1);
    CHECK(irr_from_json(irr_to_json(d)) == d);

    VirtualFB v = series_S(1, 5);
    CHECK(virtual_fb_from_json(virtual_fb_to_json(v)) == v);

    VirtualFBBimod b = fs_class(3);
    CHECK(bimod_from_json(bimod_to_json(b)) == b);

    FBModuleData f;
    f.trunc = 3;
    f.F0_dim = 1;
    f.degrees[1] = IrrDecomposition::single({1});
    f.degrees[3] = IrrDecomposition::single({2, 1}, 2);
    FBModuleData back = fb_module_from_json(fb_module_to_json(f));
    CHECK(back.trunc == f.trunc);
    CHECK(back.F0_dim == f.F0_dim);
    CHECK(back.degrees == f.degrees);
}

TEST_CASE("malformed documents are rejected")
{
    CHECK_THROWS_AS(irr_from_json(json::parse(R"({"n":2,"mults":[{"partition":[3],"mult":1}]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(irr_from_json(json::parse(R"({"n":2})")), std::invalid_argument);
    CHECK_THROWS_AS(virtual_fb_from_json(json::parse(R"({"trunc":1,"coeffs":[{"partition":[2],"coeff":1}]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(fb_module_from_json(json::parse(R"({"trunc":2,"F0_dim":-1,"degrees":{}})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(fb_module_from_json(json::parse(R"({"trunc":2,"F0_dim":0,"degrees":{"x":{}}})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(fb_module_from_json(json::parse(R"({"trunc":2,"F0_dim":0,"degrees":[]})")),
                    std::invalid_argument);
}
