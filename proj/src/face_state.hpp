#pragma once

#include <optional>
#include <vector>

#include "nestcx/building.hpp"
#include "nestcx/nested.hpp"

namespace nestcx::detail {

// Incremental state for one growing face. unions caches the union of every
// nonempty pairwise disjoint subfamily; entries that reach or leave their
// component are dropped since no member can ever contain them. The cache
// makes the full condition (no disjoint subfamily completing to a member
// together with the new vertex) checkable in one pass.
struct FaceState {
  NestedSet members;
  std::vector<Subset> unions;
};

inline bool can_extend_general(const BuildingSet& b, const FaceState& st, Subset v) {
  for (Subset m : st.members) {
    if (m.subset_of(v) || v.subset_of(m)) continue;
    if (!m.disjoint_from(v)) return false;
  }
  for (Subset u : st.unions)
    if (u.disjoint_from(v) && b.contains(u | v)) return false;
  return true;
}

// For families of connected subgraphs the pairwise condition is already
// exact: a disjoint subfamily whose union is connected glues along edges,
// so some pair in it already has a connected union.
inline bool can_extend_graphical(const BuildingSet& b, const FaceState& st, Subset v) {
  for (Subset m : st.members) {
    if (m.subset_of(v) || v.subset_of(m)) continue;
    if (!m.disjoint_from(v)) return false;
    if (b.contains(m | v)) return false;
  }
  return true;
}

inline void push_member(const BuildingSet& b, FaceState& st, Subset v, bool general) {
  if (general) {
    Subset comp = b.component_of(v.min_element());
    std::size_t old = st.unions.size();
    st.unions.push_back(v);
    for (std::size_t i = 0; i < old; i++) {
      Subset u = st.unions[i];
      if (!u.disjoint_from(v)) continue;
      Subset w = u | v;
      if (w.proper_subset_of(comp)) st.unions.push_back(w);
    }
  }
  st.members.push_back(v);
}

inline void pop_member(FaceState& st, std::size_t member_mark, std::size_t union_mark) {
  st.members.resize(member_mark);
  st.unions.resize(union_mark);
}

// Runs the face through the incremental test member by member; nullopt when
// some prefix already fails. The face must be in canonical order.
inline std::optional<FaceState> try_build_state(const BuildingSet& b, const NestedSet& face,
                                                bool general) {
  FaceState st;
  for (Subset m : face) {
    bool ok = general ? can_extend_general(b, st, m) : can_extend_graphical(b, st, m);
    if (!ok) return std::nullopt;
    push_member(b, st, m, general);
  }
  return st;
}

}  // namespace nestcx::detail
