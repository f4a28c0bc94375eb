#include <doctest.h>

#include <algorithm>
#include <random>

#include "scheepers/embedded.hpp"
#include "scheepers/formats.hpp"
#include "scheepers/inference.hpp"
#include "support.hpp"

using namespace scheepers;
using testing::kb_from;

namespace {

const closure_result& full() {
    static const closure_result r = close(default_knowledge_base(), default_registry());
    return r;
}

// Reflexive-transitive closure of the arrow facts, by Warshall.
std::vector<std::vector<bool>> warshall(const knowledge_base& kb) {
    const auto n = kb.properties.size();
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) reach[i][i] = true;
    for (const auto& f : kb.facts)
        if (const auto* a = std::get_if<arrow_fact>(&f.body)) reach[kb.require(a->from)][kb.require(a->to)] = true;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (reach[i][k] && reach[k][j]) reach[i][j] = true;
    return reach;
}

property_id serial(int s) { return property_by_serial(s).id; }

cardinal_expr e(std::string_view s) { return normalize_expr(parse_expr(s)); }

}  // namespace

TEST_CASE("the closure reproduces the reference table") {
    auto t = full().serial_table();
    CHECK(diff(t, load_reference_table()).empty());
    CHECK(t.count(verdict::unknown) == 55);
    const auto n = full().kb().properties.size();
    CHECK(full().iterations() <= n * n + 2);
}

TEST_CASE("implications are exactly the transitive closure of the arrows") {
    const auto& r = full();
    auto reach = warshall(r.kb());
    const auto n = r.kb().properties.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            INFO(i << " " << j);
            CHECK((r.cell(i, j) == verdict::implies) == reach[i][j]);
        }
}

TEST_CASE("every derivation replays") {
    const auto& r = full();
    for (std::size_t i = 0; i < r.derivations().size(); ++i) {
        auto failure = replay_trace(r, default_registry(), r.trace_of(i));
        INFO("derivation " << i << ": " << failure.value_or(""));
        CHECK_FALSE(failure.has_value());
    }
}

TEST_CASE("replay rejects tampered traces") {
    const auto& r = full();
    auto j = query(r, serial(18), serial(8));
    REQUIRE(j.value == verdict::not_implies);
    auto bad = j.trace;
    bad.steps.back().witness = "ch";
    CHECK(replay_trace(r, default_registry(), bad).has_value());
    bad = j.trace;
    bad.steps.back().conclusion.second = 9;
    CHECK(replay_trace(r, default_registry(), bad).has_value());
    bad = j.trace;
    bad.steps.back().premises = {};
    CHECK(replay_trace(r, default_registry(), bad).has_value());
}

TEST_CASE("traces end at their cell and have minimal premises") {
    const auto& r = full();
    for (int a = 0; a < serial_count; ++a)
        for (int b = 0; b < serial_count; ++b) {
            auto j = query(r, serial(a), serial(b));
            if (j.value == verdict::unknown) {
                CHECK(j.trace.steps.empty());
                continue;
            }
            REQUIRE_FALSE(j.trace.steps.empty());
            const auto& last = j.trace.steps.back().conclusion;
            CHECK(last.first == static_cast<std::size_t>(a));
            CHECK(last.second == static_cast<std::size_t>(b));
            for (std::size_t k = 0; k < j.trace.steps.size(); ++k)
                for (auto p : j.trace.steps[k].premises) CHECK(p < k);
        }
}

TEST_CASE("fact order does not matter") {
    auto lines = [] {
        std::vector<std::string> out;
        std::string text = testing::flattened_base();
        std::size_t start = 0;
        while (start < text.size()) {
            auto end = text.find('\n', start);
            if (end == std::string::npos) end = text.size();
            out.push_back(text.substr(start, end - start));
            start = end + 1;
        }
        return out;
    }();
    auto reference = full().serial_table();
    std::mt19937_64 rng(2024);
    for (int k = 0; k < 10; ++k) {
        std::shuffle(lines.begin(), lines.end(), rng);
        std::string text;
        for (const auto& l : lines) text += l + "\n";
        auto r = close(kb_from(text), default_registry());
        CHECK(r.serial_table() == reference);
        CHECK(r.derivations().size() == full().derivations().size());
    }
}

TEST_CASE("adding the conclusions as facts changes nothing") {
    const auto& r = full();
    auto kb = r.kb();
    for (const auto& d : r.derivations()) {
        const auto& s = d.conclusion;
        const auto& p = kb.properties[s.first].id;
        switch (s.kind) {
            case statement_kind::implies:
                if (s.first != s.second) kb.facts.push_back({arrow_fact{p, kb.properties[s.second].id}, "derived"});
                break;
            case statement_kind::not_implies:
                kb.facts.push_back({nonimp_fact{p, kb.properties[s.second].id, std::nullopt}, "derived"});
                break;
            case statement_kind::lower_bound:
                kb.facts.push_back({bound_fact{p, bound_relation::ge, *s.value}, "derived"});
                break;
            case statement_kind::upper_bound:
                kb.facts.push_back({bound_fact{p, bound_relation::le, *s.value}, "derived"});
                break;
            case statement_kind::exact_value:
                kb.facts.push_back({bound_fact{p, bound_relation::eq, *s.value}, "derived"});
                break;
        }
    }
    auto again = close(make_knowledge_base(kb.properties, kb.facts, default_registry()), default_registry());
    CHECK(again.serial_table() == r.serial_table());
    for (std::size_t i = 0; i < kb.properties.size(); ++i) {
        auto a = r.interval(i);
        auto b = again.interval(i);
        CHECK(a.exact == b.exact);
        CHECK(a.lower == b.lower);
        CHECK(a.upper == b.upper);
    }
}

TEST_CASE("adding an arrow on an unsettled cell only adds information") {
    const auto& r = full();
    auto before = r.serial_table();
    int tried = 0, contradicted = 0;
    for (int a = 0; a < serial_count; ++a)
        for (int b = 0; b < serial_count; ++b) {
            if (before.at(a, b) != verdict::unknown) continue;
            auto kb = r.kb();
            kb.facts.push_back({arrow_fact{serial(a), serial(b)}, "hypothesis"});
            ++tried;
            try {
                auto after = close(make_knowledge_base(kb.properties, kb.facts, default_registry()),
                                   default_registry())
                                 .serial_table();
                CHECK(after.at(a, b) == verdict::implies);
                for (int i = 0; i < serial_count; ++i)
                    for (int j = 0; j < serial_count; ++j)
                        if (before.at(i, j) != verdict::unknown) CHECK(after.at(i, j) == before.at(i, j));
            } catch (const contradiction&) {
                ++contradicted;
            }
        }
    CHECK(tried == 55);
    CHECK(contradicted == 0);
}

TEST_CASE("derived intervals are consistent with every model") {
    const auto& r = full();
    const auto& reg = default_registry();
    for (std::size_t i = 0; i < r.kb().properties.size(); ++i) {
        auto card = r.interval(i);
        for (const auto& lo : card.lower)
            for (const auto& hi : card.upper) {
                INFO(display_name(r.kb().properties[i].id) << ": " << to_string(lo) << " <= " << to_string(hi));
                CHECK_FALSE(reg.consistently_less(hi, lo).has_value());
            }
        if (card.exact) {
            CHECK(std::find(card.lower.begin(), card.lower.end(), *card.exact) != card.lower.end());
            CHECK(std::find(card.upper.begin(), card.upper.end(), *card.exact) != card.upper.end());
        }
    }
}

TEST_CASE("critical cardinalities of the numbered properties") {
    const auto& r = full();
    for (int s = 0; s < serial_count; ++s) {
        auto card = derive_cardinality(r, serial(s));
        INFO("serial " << s);
        if (s == 6 || s == 7) {
            CHECK_FALSE(card.exact.has_value());
            CHECK(std::find(card.lower.begin(), card.lower.end(), e("cov(M)")) != card.lower.end());
            CHECK(std::find(card.upper.begin(), card.upper.end(), e("d")) != card.upper.end());
            CHECK(std::find(card.upper.begin(), card.upper.end(), e("od")) != card.upper.end());
        } else {
            REQUIRE(card.exact.has_value());
            CHECK(*card.exact == *property_by_serial(s).non);
        }
    }
    CHECK(render_cardinality(r, default_registry(), serial(6)) ==
          "cov(M) <= non(S1(T,Omega)) <= d\nnon(S1(T,Omega)) <= od\n");
    CHECK(render_cardinality(r, default_registry(), serial(12)) == "non(Sfin(Gamma,T)) = b\n");
}

TEST_CASE("sandwich: the exact value of Sfin(Gamma,T) is re-derived") {
    auto figure = testing::replace_once(testing::embedded_text("diagram.facts"),
                                        "property 12 \"Sfin(Gamma,T)\" non=b", "property 12 \"Sfin(Gamma,T)\"");
    std::string base = testing::embedded_text("base.facts");
    base.erase(base.find("include \"diagram.facts\""), std::string("include \"diagram.facts\"").size());
    auto r = close(kb_from(figure + base), default_registry());
    auto card = derive_cardinality(r, serial(12));
    REQUIRE(card.exact.has_value());
    CHECK(*card.exact == e("b"));
    CHECK(r.serial_table() == full().serial_table());

    const auto& derivs = r.derivations();
    auto it = std::find_if(derivs.begin(), derivs.end(), [](const derivation& d) {
        return d.conclusion.kind == statement_kind::exact_value && d.conclusion.first == 12;
    });
    REQUIRE(it != derivs.end());
    CHECK(it->rule == rule_id::r6);
    auto trace = r.trace_of(static_cast<std::size_t>(it - derivs.begin()));
    CHECK(std::any_of(trace.steps.begin(), trace.steps.end(),
                      [](const proof_step& s) { return s.rule == rule_id::r5; }));
}

TEST_CASE("without the od endpoint exactly the od cells become unknown") {
    auto text = testing::drop_lines(testing::flattened_base(), "S1:T:O:clopen");
    text = testing::drop_lines(text, "variant S1 T O clopen");
    auto r = close(kb_from(text), default_registry());
    auto cells = diff(r.serial_table(), load_reference_table());
    REQUIRE_FALSE(cells.empty());
    for (const auto& c : cells) {
        CHECK(c.left == verdict::unknown);
        CHECK(c.right == verdict::not_implies);
        CHECK((c.col == 6 || c.col == 7));
        CHECK(load_reference_table().is_framed(c.row, c.col));
    }
    auto card = derive_cardinality(r, serial(6));
    CHECK(card.upper == std::vector{e("d")});
}

TEST_CASE("the sandwich endpoints add no cells to the numbered table") {
    auto text = testing::flattened_base();
    for (auto needle : {"Sfin:Gamma:T:", "S1:T:T:", "Sfin:T:T:", "variant Sfin Gamma T", "variant S1 T T",
                        "variant Sfin T T"})
        text = testing::drop_lines(text, needle);
    auto r = close(kb_from(text), default_registry());
    CHECK(r.serial_table() == full().serial_table());
}

TEST_CASE("framed cells are derived by the cardinality rule") {
    const auto& ref = load_reference_table();
    REQUIRE(ref.framed().size() == 21);
    for (auto [a, b] : ref.framed()) {
        auto j = query(full(), serial(static_cast<int>(a)), serial(static_cast<int>(b)));
        CHECK(j.value == verdict::not_implies);
        const auto& steps = j.trace.steps;
        CHECK(std::any_of(steps.begin(), steps.end(), [](const proof_step& s) { return s.rule == rule_id::r4; }));
        for (const auto& s : steps)
            if (s.fact_index) CHECK(full().kb().facts[*s.fact_index].source != "legacy:Table1");
    }
}

TEST_CASE("explain") {
    auto text = explain(full(), serial(18), serial(8));
    auto last = text.substr(text.rfind('\n', text.size() - 2) + 1);
    CHECK(last.find("[R4] Ufin(Gamma,Gamma) -/-> S1(Omega,Gamma)") != std::string::npos);
    CHECK(last.find("p < b") != std::string::npos);
    CHECK_THROWS_AS(explain(full(), serial(16), serial(0)), nothing_to_explain);
    CHECK(explain(full(), serial(3), serial(3)).find("[R1]") != std::string::npos);
    property_id nowhere{selector_kind::ufin, cover_kind::open, cover_kind::open, cover_variant::borel};
    CHECK_THROWS_AS(query(full(), nowhere, serial(0)), unknown_property);
}

TEST_CASE("legacy facts are used only where the cardinality rule cannot reach") {
    const auto& r = full();
    std::size_t legacy = 0;
    for (const auto& f : r.kb().facts)
        if (f.source == "legacy:Table1") ++legacy;
    CHECK(legacy == 6);
    auto without = close(kb_from(testing::drop_lines(testing::flattened_base(), "legacy:Table1")), default_registry())
                       .serial_table();
    CHECK(without.count(verdict::not_implies) == 212);
    CHECK(r.serial_table().count(verdict::not_implies) == 266);
    for (auto [a, b] : load_reference_table().framed()) CHECK(without.at(a, b) == verdict::not_implies);
    // Each legacy pair is out of reach of the rule on its own.
    for (const auto& f : r.kb().facts)
        if (const auto* n = std::get_if<nonimp_fact>(&f.body); n && f.source == "legacy:Table1")
            CHECK(without.at(*serial_of(n->from), *serial_of(n->to)) == verdict::unknown);
}

TEST_CASE("a forced contradiction reports both traces") {
    auto text = testing::flattened_base() + "arrow 18 8\n";
    try {
        close(kb_from(text), default_registry());
        FAIL("no contradiction");
    } catch (const contradiction& c) {
        CHECK(c.from() == serial(18));
        CHECK(c.to() == serial(8));
        CHECK_FALSE(c.implies_trace().steps.empty());
        CHECK_FALSE(c.not_implies_trace().steps.empty());
        CHECK(c.not_implies_trace().steps.back().rule == rule_id::r4);
        std::string what = c.what();
        CHECK(what.find("implication trace") != std::string::npos);
        CHECK(what.find("non-implication trace") != std::string::npos);
    }
}

TEST_CASE("knowledge base validation") {
    auto base = testing::flattened_base();
    CHECK_THROWS_AS(kb_from(base + "nonimp 0 1 model=nowhere\n"), invalid_knowledge_base);
    CHECK_THROWS_AS(kb_from(base + "arrow 0 Ufin:O:O:borel\n"), invalid_knowledge_base);
    CHECK_THROWS_AS(kb_from(base + "arrow 3 3\n"), invalid_knowledge_base);
    CHECK_THROWS_AS(kb_from(base + "property 3 \"S1(Gamma,O)\"\n"), invalid_knowledge_base);
    CHECK_THROWS_AS(kb_from("property 3 \"S1(Gamma,T)\"\n"), invalid_knowledge_base);
    CHECK_THROWS_AS(kb_from("property 30 \"S1(Gamma,T)\"\n"), invalid_knowledge_base);
    CHECK_THROWS_AS(kb_from("variant S1 Gamma Gamma open\n"), invalid_knowledge_base);
    CHECK_THROWS_AS(kb_from("arrow 0 1\n"), invalid_knowledge_base);

    std::vector<property> props{property_by_serial(0), property_by_serial(1)};
    std::vector<fact> facts{{arrow_fact{serial(0), serial(1)}, ""}};
    CHECK_THROWS_AS(make_knowledge_base(props, facts, default_registry()), invalid_knowledge_base);
    facts[0].source = "x";
    CHECK_NOTHROW(make_knowledge_base(props, facts, default_registry()));
    props.push_back(property_by_serial(0));
    CHECK_THROWS_AS(make_knowledge_base(props, facts, default_registry()), invalid_knowledge_base);
}

TEST_CASE("a nonimplication witnessed by a named model") {
    auto r = close(kb_from("property 0 \"S1(Gamma,Gamma)\"\nproperty 1 \"S1(Gamma,T)\"\n"
                           "arrow 0 1\nnonimp 1 0 model=cohen\n"),
                   default_registry());
    CHECK(r.cell(1, 0) == verdict::not_implies);
    CHECK(r.cell(0, 1) == verdict::implies);
    CHECK(r.cell(0, 0) == verdict::implies);
}

TEST_CASE("R3 propagation") {
    auto r = close(kb_from("property 0 \"S1(Gamma,Gamma)\"\nproperty 1 \"S1(Gamma,T)\"\n"
                           "property 2 \"S1(Gamma,Omega)\"\n"
                           "arrow 0 1\narrow 1 2\nnonimp 2 1 cite=\"x\"\n"),
                   default_registry());
    CHECK(r.cell(2, 0) == verdict::not_implies);  // 2 -> 0 would give 2 -> 1
    CHECK(r.cell(1, 0) == verdict::unknown);
    CHECK(query(r, serial(2), serial(0)).trace.steps.back().rule == rule_id::r3a);
}
