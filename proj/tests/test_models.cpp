#include <doctest.h>

#include "scheepers/embedded.hpp"
#include "scheepers/formats.hpp"
#include "scheepers/models.hpp"

using namespace scheepers;

namespace {

cardinal_expr e(std::string_view s) { return normalize_expr(parse_expr(s)); }

model flat(std::string name, int level_of_d) {
    model m{std::move(name), "test", {}};
    for (auto a : all_atoms) m.levels[a] = 1;
    m.levels[cardinal_atom::d] = level_of_d;
    m.levels[cardinal_atom::c] = std::max(1, level_of_d);
    return m;
}

}  // namespace

TEST_CASE("every shipped model satisfies every constraint") {
    const auto& reg = default_registry();
    REQUIRE(reg.models().size() >= 7);
    for (const auto& m : reg.models()) {
        INFO(m.name);
        CHECK(validate_model(m, reg.constraints()).empty());
    }
    for (auto name : {"ch", "cohen", "random", "hechler", "laver", "mathias", "miller"})
        CHECK(reg.find(name) != nullptr);
}

TEST_CASE("the classical models agree with cov(M) = od") {
    const auto& reg = default_registry();
    for (auto name : {"cohen", "random", "hechler", "laver", "mathias", "miller"}) {
        const auto* m = reg.find(name);
        REQUIRE(m);
        CHECK(eval(e("cov(M)"), *m) == eval(e("od"), *m));
    }
}

TEST_CASE("validation finds violations") {
    std::vector<zfc_constraint> cs{{e("b"), e("d"), "b <= d"}};
    auto m = flat("bad", 2);
    m.levels[cardinal_atom::b] = 2;
    m.levels[cardinal_atom::d] = 1;
    auto v = validate_model(m, cs);
    REQUIRE(v.size() == 1);
    CHECK(v[0].constraint == "b <= d");
    CHECK(v[0].lhs_level == 2);

    auto low = flat("low", 1);
    low.levels[cardinal_atom::aleph1] = 0;
    CHECK_FALSE(validate_model(low, cs).empty());

    auto top = flat("top", 1);
    top.levels[cardinal_atom::u] = 3;
    CHECK_FALSE(validate_model(top, cs).empty());

    auto missing = flat("missing", 2);
    missing.levels.erase(cardinal_atom::b);
    CHECK(validate_model(missing, cs).empty());
}

TEST_CASE("registry rejects invalid input") {
    std::vector<zfc_constraint> cs{{e("b"), e("d"), "b <= d"}};
    auto bad = flat("bad", 1);
    bad.levels[cardinal_atom::b] = 2;
    bad.levels[cardinal_atom::c] = 2;
    CHECK_THROWS_AS(model_registry({bad}, cs), invalid_registry);
    CHECK_THROWS_AS(model_registry({flat("x", 1), flat("x", 2)}, cs), invalid_registry);
    CHECK_NOTHROW(model_registry({flat("x", 1), flat("y", 2)}, cs));
}

TEST_CASE("eval") {
    const auto& reg = default_registry();
    const auto& cohen = *reg.find("cohen");
    CHECK(eval(e("min{b,d}"), cohen) == 1);
    CHECK(eval(e("max{b,d}"), cohen) == 2);
    const auto& laver = *reg.find("laver");
    CHECK_THROWS_AS(eval(e("g"), laver), unknown_atom);
    CHECK_FALSE(try_eval(e("min{g,b}"), laver).has_value());
}

TEST_CASE("consistently_less") {
    const auto& reg = default_registry();
    CHECK(reg.consistently_less(e("p"), e("b")).has_value());
    CHECK(reg.consistently_less(e("b"), e("d")).has_value());
    CHECK(reg.consistently_less(e("od"), e("min{b,h,s}")) == "mathias");
    CHECK(reg.consistently_less(e("b"), e("s")) == "b-below-s");
    CHECK_FALSE(reg.consistently_less(e("d"), e("b")).has_value());
    CHECK_FALSE(reg.consistently_less(e("t"), e("p")).has_value());
    CHECK_FALSE(reg.consistently_less(e("p"), e("t")).has_value());
    CHECK_FALSE(reg.consistently_less(e("od"), e("cov(M)")).has_value());
    CHECK_FALSE(reg.consistently_less(e("b"), e("b")).has_value());
}

TEST_CASE("provably_le") {
    const auto& reg = default_registry();
    CHECK(reg.provably_le(e("p"), e("d")));
    CHECK(reg.provably_le(e("cov(M)"), e("od")));
    CHECK(reg.provably_le(e("min{b,s}"), e("b")));
    CHECK(reg.provably_le(e("b"), e("max{b,s}")));
    CHECK(reg.provably_le(e("t"), e("min{b,s}")));
    CHECK_FALSE(reg.provably_le(e("d"), e("b")));
    CHECK_FALSE(reg.provably_le(e("b"), e("min{b,s}")));
    CHECK_FALSE(reg.provably_le(e("od"), e("cov(M)")));
}

TEST_CASE("the shipped registry is never contradicted by provably_le") {
    const auto& reg = default_registry();
    std::vector<cardinal_expr> xs;
    for (auto a : all_atoms) xs.push_back(atom(a));
    xs.push_back(e("min{b,s}"));
    xs.push_back(e("max{b,s}"));
    for (const auto& x : xs)
        for (const auto& y : xs)
            if (reg.provably_le(x, y)) CHECK_FALSE(reg.consistently_less(y, x).has_value());
}
