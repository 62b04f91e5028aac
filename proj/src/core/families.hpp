#pragma once

#include <array>
#include <map>
#include <optional>
#include <string_view>

#include "core/graph.hpp"

namespace matchcx {

enum class FamilyId : unsigned char { G, B, A, D, J, O, M, Q, F, H };

inline constexpr std::array<FamilyId, 10> kAllFamilies = {
    FamilyId::G, FamilyId::B, FamilyId::A, FamilyId::D, FamilyId::J,
    FamilyId::O, FamilyId::M, FamilyId::Q, FamilyId::F, FamilyId::H};

char family_char(FamilyId f);
std::optional<FamilyId> parse_family(std::string_view token);

/// The n-th member of a family: G_n = L(Γ_{3,n}) or G_n with the family's
/// extra vertices attached.
///
/// G_n has vertices u_i, w_i, y_i (i < n) for the horizontal grid edges of
/// rows 1..3 and v_j, x_j (j <= n) for the upper and lower vertical edges of
/// column j. G_2 is the n >= 3 edge formula instantiated at n = 2. O_n for
/// n >= 2 uses the drawn edge set (O_1's gadget plus o1u1, o2w1, o3y1).
Graph build_family(FamilyId f, int n);

/// Maps each line-graph vertex of Γ_{3,n} (an edge-pair label on grid cells)
/// to its G_n label: row-r horizontal edges to u/w/y, column verticals to v/x.
std::map<VertexLabel, VertexLabel> grid3_line_labels(int n);

}  // namespace matchcx
