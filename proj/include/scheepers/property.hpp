#ifndef SCHEEPERS_PROPERTY_HPP
#define SCHEEPERS_PROPERTY_HPP

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "scheepers/cardinal.hpp"

namespace scheepers {

enum class selector_kind { s1, sfin, ufin };

/// Ordered by inclusion of the cover classes: Gamma < T < Omega < O.
enum class cover_kind { gamma, tau, omega, open };

/// Borel covers, open covers, clopen covers; Borel -> open -> clopen.
enum class cover_variant { borel, open, clopen };

std::string_view selector_name(selector_kind k);   // S1, Sfin, Ufin
std::string_view cover_name(cover_kind c);         // Gamma, T, Omega, O
std::string_view variant_name(cover_variant v);    // borel, open, clopen

std::optional<selector_kind> selector_from_name(std::string_view s);
/// Accepts "Tau" as a synonym of "T".
std::optional<cover_kind> cover_from_name(std::string_view s);
std::optional<cover_variant> variant_from_name(std::string_view s);

/// Structural identity of a selection property.
struct property_id {
    selector_kind kind = selector_kind::s1;
    cover_kind from = cover_kind::gamma;
    cover_kind to = cover_kind::gamma;
    cover_variant variant = cover_variant::open;

    friend auto operator<=>(const property_id&, const property_id&) = default;
};

/// `S1(Gamma,T)`, `Sfin(B_Gamma,B_T)`, `S1(C_T,C)`.
std::string display_name(const property_id& id);

/// `S1:T:O:clopen`.
std::string structural_ref(const property_id& id);

/// Inverse of display_name.
std::optional<property_id> parse_display_name(std::string_view s);

/// Inverse of structural_ref.
std::optional<property_id> parse_structural_ref(std::string_view s);

/// A node of the diagram. Open-variant nodes drawn in the diagram carry a
/// serial 0..21; `non` is the critical cardinality when it is known.
struct property {
    property_id id;
    std::optional<int> serial;
    std::optional<cardinal_expr> non;

    friend bool operator==(const property&, const property&) = default;
};

inline constexpr int serial_count = 22;

/// The 22 numbered properties in serial order.
std::span<const property> diagram_properties();

/// Throws unknown_serial outside 0..21.
const property& property_by_serial(int serial);

std::optional<int> serial_of(const property_id& id);

}  // namespace scheepers

#endif  // SCHEEPERS_PROPERTY_HPP
