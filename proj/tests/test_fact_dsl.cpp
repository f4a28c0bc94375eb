#include <doctest.h>

#include <random>

#include "scheepers/fact_dsl.hpp"
#include "support.hpp"

using namespace scheepers;

namespace {

std::vector<diagnostic> errors_of(std::string_view text) {
    try {
        parse_facts(text);
    } catch (const syntax_errors& e) {
        return e.diagnostics();
    }
    return {};
}

property_id serial(int s) { return property_by_serial(s).id; }

property_ref random_ref(std::mt19937_64& rng) {
    if (rng() % 2) return static_cast<int>(rng() % 22);
    return property_id{static_cast<selector_kind>(rng() % 3), static_cast<cover_kind>(rng() % 4),
                       static_cast<cover_kind>(rng() % 4), static_cast<cover_variant>(rng() % 3)};
}

cardinal_expr random_value(std::mt19937_64& rng) {
    static const std::vector<std::string> pool{"b", "d", "cov(M)", "min{b,s}", "max{b,s}", "od", "min{b,h,s}"};
    return normalize_expr(parse_expr(pool[rng() % pool.size()]));
}

std::string random_text(std::mt19937_64& rng) {
    static const std::string alphabet = "abc XYZ 0123 (){}=#\"\\,.:;-";
    std::string s;
    std::size_t n = rng() % 12;
    for (std::size_t i = 0; i < n; ++i) s += alphabet[rng() % alphabet.size()];
    return s;
}

declaration random_declaration(std::mt19937_64& rng) {
    declaration d;
    switch (rng() % 6) {
        case 0: {
            int s = static_cast<int>(rng() % 22);
            d.body = property_decl{s, display_name(serial(s)),
                                   rng() % 2 ? std::optional(random_value(rng)) : std::nullopt};
            break;
        }
        case 1: {
            auto r = random_ref(rng);
            while (std::holds_alternative<int>(r)) r = random_ref(rng);
            d.body = variant_decl{std::get<property_id>(r),
                                  rng() % 2 ? std::optional(random_value(rng)) : std::nullopt};
            break;
        }
        case 2: d.body = arrow_decl{random_ref(rng), random_ref(rng)}; break;
        case 3: {
            nonimp_decl n{random_ref(rng), random_ref(rng), std::nullopt};
            if (rng() % 2) n.model = "cohen";
            d.body = n;
            if (!n.model) d.cite = random_text(rng) + "x";
            break;
        }
        case 4:
            d.body = card_decl{random_ref(rng), static_cast<bound_relation>(rng() % 3), random_value(rng)};
            break;
        default: d.body = include_decl{random_text(rng) + ".facts"}; break;
    }
    if (!d.cite && !std::holds_alternative<include_decl>(d.body) && rng() % 2) d.cite = random_text(rng) + "!";
    return d;
}

}  // namespace

TEST_CASE("basic declarations") {
    auto f = parse_facts("arrow 0 18");
    REQUIRE(f.declarations.size() == 1);
    const auto& a = std::get<arrow_decl>(f.declarations[0].body);
    CHECK(a.from == property_ref{0});
    CHECK(a.to == property_ref{18});
    CHECK(f.declarations[0].line == 1);

    CHECK(parse_facts("").declarations.empty());
    CHECK(parse_facts("# only a comment\n\n   \n").declarations.empty());

    auto g = parse_facts("property 14 \"Sfin(T,T)\" non=min{s,b} cite=\"a \\\"quoted\\\" source\"  # trailing\n"
                         "variant Sfin Gamma T borel non=b\n"
                         "nonimp S1:T:O:clopen 3 model=laver\n"
                         "card 6 ge cov(M)\n"
                         "include \"other.facts\"\n");
    REQUIRE(g.declarations.size() == 5);
    const auto& p = std::get<property_decl>(g.declarations[0].body);
    CHECK(p.serial == 14);
    CHECK(p.name == "Sfin(T,T)");
    CHECK(to_string(*p.non) == "min{b,s}");
    CHECK(g.declarations[0].cite == "a \"quoted\" source");
    const auto& v = std::get<variant_decl>(g.declarations[1].body);
    CHECK(v.id == property_id{selector_kind::sfin, cover_kind::gamma, cover_kind::tau, cover_variant::borel});
    const auto& n = std::get<nonimp_decl>(g.declarations[2].body);
    CHECK(n.model == "laver");
    CHECK(std::holds_alternative<property_id>(n.from));
    const auto& c = std::get<card_decl>(g.declarations[3].body);
    CHECK(c.relation == bound_relation::ge);
    CHECK(std::get<include_decl>(g.declarations[4].body).path == "other.facts");
    CHECK(g.declarations[4].line == 5);
}

TEST_CASE("every malformed line is reported") {
    auto errs = errors_of("arrow 0\n"
                          "arrow 0 1\n"
                          "frobnicate 1 2\n"
                          "arrow 0 1 2\n"
                          "nonimp 0 1\n"
                          "card 0 lt b\n"
                          "card 0 eq min{b\n"
                          "property x \"S1(Gamma,Gamma)\"\n"
                          "property 0 S1\n"
                          "arrow 0 1 colour=red\n"
                          "arrow 0 1 cite=\"unterminated\n"
                          "variant S1 Gamma Gamma sometimes\n"
                          "arrow S1:Q:O:open 1\n"
                          "include bare\n");
    REQUIRE(errs.size() == 13);
    CHECK(errs[0].line == 1);
    CHECK(errs[0].message.find("missing") != std::string::npos);
    CHECK(errs[1].line == 3);
    CHECK(errs[1].column == 1);
    CHECK(errs[2].line == 4);
    CHECK(errs[2].column == 11);
    CHECK(errs[3].line == 5);
    CHECK(errs[4].line == 6);
    CHECK(errs[4].column == 8);
    CHECK(errs[5].line == 7);
    CHECK(errs[5].column == 16);
    CHECK(errs[6].line == 8);
    CHECK(errs[8].line == 10);
    CHECK(errs[8].message.find("colour") != std::string::npos);
    CHECK(errs[9].message.find("unterminated") != std::string::npos);
    CHECK(errs[12].line == 14);
}

TEST_CASE("duplicate options and empty citations") {
    CHECK(errors_of("arrow 0 1 cite=\"a\" cite=\"b\"").size() == 1);
    CHECK(errors_of("arrow 0 1 cite=\"\"").size() == 1);
    CHECK(errors_of("nonimp 0 1 model=").size() == 1);
}

TEST_CASE("declarations round-trip") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 500; ++i) {
        fact_file f;
        std::size_t n = rng() % 6;
        for (std::size_t k = 0; k < n; ++k) f.declarations.push_back(random_declaration(rng));
        auto text = render_facts(f);
        INFO(text);
        CHECK(parse_facts(text) == f);
        for (const auto& d : f.declarations) CHECK(parse_facts(render_declaration(d)).declarations.at(0) == d);
    }
}

TEST_CASE("the shipped fact files round-trip") {
    for (auto name : {"base.facts", "diagram.facts"}) {
        auto f = parse_facts(testing::embedded_text(name), name);
        CHECK(parse_facts(render_facts(f)) == f);
    }
}

TEST_CASE("loading resolves includes and references") {
    std::map<std::string, std::string> files{
        {"root", "include \"a\"\narrow 0 1 cite=\"here\"\nnonimp 1 0 model=cohen\n"},
        {"a", "property 0 \"S1(Gamma,Gamma)\" non=b\nproperty 1 \"S1(Gamma,T)\"\ncard 1 le d\n"},
    };
    include_resolver resolver = [&](const std::string& path, const std::string&) -> std::optional<source_text> {
        auto it = files.find(path);
        if (it == files.end()) return std::nullopt;
        return source_text{path, it->second};
    };
    auto kb = load_knowledge_base({"root", files["root"]}, default_registry(), resolver);
    CHECK(kb.properties.size() == 2);
    CHECK(kb.properties[1].non == std::nullopt);
    REQUIRE(kb.facts.size() == 4);
    std::set<std::string> sources;
    for (const auto& f : kb.facts) sources.insert(f.source);
    CHECK(sources == std::set<std::string>{"a:1", "a:3", "here", "model:cohen"});

    files["a"] += "include \"root\"\n";
    CHECK_THROWS_AS(load_knowledge_base({"root", files["root"]}, default_registry(), resolver),
                    invalid_knowledge_base);
    files["a"] = "include \"missing\"\n";
    CHECK_THROWS_AS(load_knowledge_base({"root", files["root"]}, default_registry(), resolver),
                    invalid_knowledge_base);
    files["a"] = "arrow 0 1 2\n";
    CHECK_THROWS_AS(load_knowledge_base({"root", files["root"]}, default_registry(), resolver), syntax_errors);
}

TEST_CASE("the shipped knowledge base") {
    const auto& kb = default_knowledge_base();
    CHECK(kb.properties.size() == 29);
    for (int s = 0; s < serial_count; ++s) CHECK(kb.properties[s].serial == s);
    for (const auto& f : kb.facts) CHECK_FALSE(f.source.empty());
}
