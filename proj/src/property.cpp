#include "scheepers/property.hpp"

#include <array>
#include <vector>

#include "scheepers/error.hpp"

namespace scheepers {

std::string_view selector_name(selector_kind k) {
    switch (k) {
    case selector_kind::s1: return "S1";
    case selector_kind::sfin: return "Sfin";
    case selector_kind::ufin: return "Ufin";
    }
    return "?";
}

std::string_view cover_name(cover_kind c) {
    switch (c) {
    case cover_kind::gamma: return "Gamma";
    case cover_kind::tau: return "T";
    case cover_kind::omega: return "Omega";
    case cover_kind::open: return "O";
    }
    return "?";
}

std::string_view variant_name(cover_variant v) {
    switch (v) {
    case cover_variant::borel: return "borel";
    case cover_variant::open: return "open";
    case cover_variant::clopen: return "clopen";
    }
    return "?";
}

std::optional<selector_kind> selector_from_name(std::string_view s) {
    for (auto k : {selector_kind::s1, selector_kind::sfin, selector_kind::ufin})
        if (selector_name(k) == s) return k;
    return std::nullopt;
}

std::optional<cover_kind> cover_from_name(std::string_view s) {
    if (s == "Tau") return cover_kind::tau;
    for (auto c : {cover_kind::gamma, cover_kind::tau, cover_kind::omega, cover_kind::open})
        if (cover_name(c) == s) return c;
    return std::nullopt;
}

std::optional<cover_variant> variant_from_name(std::string_view s) {
    for (auto v : {cover_variant::borel, cover_variant::open, cover_variant::clopen})
        if (variant_name(v) == s) return v;
    return std::nullopt;
}

namespace {

// B_O is written B and C_O is written C.
std::string cover_text(cover_kind c, cover_variant v) {
    if (v == cover_variant::open) return std::string(cover_name(c));
    std::string prefix = v == cover_variant::borel ? "B" : "C";
    if (c == cover_kind::open) return prefix;
    return prefix + "_" + std::string(cover_name(c));
}

std::optional<std::pair<cover_kind, cover_variant>> parse_cover_text(std::string_view s) {
    if (s == "B") return std::pair{cover_kind::open, cover_variant::borel};
    if (s == "C") return std::pair{cover_kind::open, cover_variant::clopen};
    auto v = cover_variant::open;
    if (s.starts_with("B_")) v = cover_variant::borel, s.remove_prefix(2);
    else if (s.starts_with("C_")) v = cover_variant::clopen, s.remove_prefix(2);
    auto c = cover_from_name(s);
    if (!c) return std::nullopt;
    return std::pair{*c, v};
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (;;) {
        auto pos = s.find(sep, start);
        parts.push_back(s.substr(start, pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

}  // namespace

std::string display_name(const property_id& id) {
    return std::string(selector_name(id.kind)) + "(" + cover_text(id.from, id.variant) + "," +
           cover_text(id.to, id.variant) + ")";
}

std::string structural_ref(const property_id& id) {
    return std::string(selector_name(id.kind)) + ":" + std::string(cover_name(id.from)) + ":" +
           std::string(cover_name(id.to)) + ":" + std::string(variant_name(id.variant));
}

std::optional<property_id> parse_display_name(std::string_view s) {
    auto open = s.find('(');
    if (open == std::string_view::npos || !s.ends_with(")")) return std::nullopt;
    auto kind = selector_from_name(s.substr(0, open));
    auto args = split(s.substr(open + 1, s.size() - open - 2), ',');
    if (!kind || args.size() != 2) return std::nullopt;
    auto from = parse_cover_text(args[0]);
    auto to = parse_cover_text(args[1]);
    if (!from || !to || from->second != to->second) return std::nullopt;
    return property_id{*kind, from->first, to->first, from->second};
}

std::optional<property_id> parse_structural_ref(std::string_view s) {
    auto parts = split(s, ':');
    if (parts.size() != 4) return std::nullopt;
    auto kind = selector_from_name(parts[0]);
    auto from = cover_from_name(parts[1]);
    auto to = cover_from_name(parts[2]);
    auto variant = variant_from_name(parts[3]);
    if (!kind || !from || !to || !variant) return std::nullopt;
    return property_id{*kind, *from, *to, *variant};
}

namespace {

property node(int serial, selector_kind k, cover_kind from, cover_kind to,
              std::optional<cardinal_expr> non) {
    return property{{k, from, to, cover_variant::open}, serial, std::move(non)};
}

std::vector<property> build_diagram() {
    using sk = selector_kind;
    using ck = cover_kind;
    using ca = cardinal_atom;
    const auto b = atom(ca::b), d = atom(ca::d), t = atom(ca::t), p = atom(ca::p),
               cov = atom(ca::cov_m), s = atom(ca::s);
    return {
        node(0, sk::s1, ck::gamma, ck::gamma, b),
        node(1, sk::s1, ck::gamma, ck::tau, b),
        node(2, sk::s1, ck::gamma, ck::omega, d),
        node(3, sk::s1, ck::gamma, ck::open, d),
        node(4, sk::s1, ck::tau, ck::gamma, t),
        node(5, sk::s1, ck::tau, ck::tau, t),
        node(6, sk::s1, ck::tau, ck::omega, std::nullopt),
        node(7, sk::s1, ck::tau, ck::open, std::nullopt),
        node(8, sk::s1, ck::omega, ck::gamma, p),
        node(9, sk::s1, ck::omega, ck::tau, p),
        node(10, sk::s1, ck::omega, ck::omega, cov),
        node(11, sk::s1, ck::open, ck::open, cov),
        node(12, sk::sfin, ck::gamma, ck::tau, b),
        node(13, sk::sfin, ck::gamma, ck::omega, d),
        node(14, sk::sfin, ck::tau, ck::tau, normalize_expr(min_of({s, b}))),
        node(15, sk::sfin, ck::tau, ck::omega, d),
        node(16, sk::sfin, ck::omega, ck::tau, p),
        node(17, sk::sfin, ck::omega, ck::omega, d),
        node(18, sk::ufin, ck::gamma, ck::gamma, b),
        node(19, sk::ufin, ck::gamma, ck::tau, normalize_expr(max_of({b, s}))),
        node(20, sk::ufin, ck::gamma, ck::omega, d),
        node(21, sk::ufin, ck::gamma, ck::open, d),
    };
}

}  // namespace

std::span<const property> diagram_properties() {
    static const std::vector<property> diagram = build_diagram();
    return diagram;
}

const property& property_by_serial(int serial) {
    if (serial < 0 || serial >= serial_count) throw unknown_serial(serial);
    return diagram_properties()[static_cast<std::size_t>(serial)];
}

std::optional<int> serial_of(const property_id& id) {
    for (const auto& p : diagram_properties())
        if (p.id == id) return p.serial;
    return std::nullopt;
}

}  // namespace scheepers
