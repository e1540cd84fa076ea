#include "nestcx/building.hpp"

#include <algorithm>
#include <cassert>

namespace nestcx {

namespace {

// Binary partition search: each candidate is either added to the growing
// subset or excluded from the whole subtree, so every connected subset with
// the given minimum element is emitted exactly once.
void grow_connected(const std::vector<Subset>& adj, Subset allowed, Subset s, Subset ext,
                    Subset forbidden, std::vector<Subset>& out) {
  out.push_back(s);
  while (!ext.empty()) {
    int v = ext.min_element();
    ext = ext.without(v);
    Subset s2 = s.with(v);
    Subset ext2 = ((ext | adj[v]) & allowed) - s2 - forbidden;
    grow_connected(adj, allowed, s2, ext2, forbidden, out);
    forbidden = forbidden.with(v);
  }
}

}  // namespace

void BuildingSet::finish(std::vector<Subset> sets, int ground_size, bool check_axioms) {
  n_ = ground_size;
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  sets_ = std::move(sets);

  member_.assign(std::size_t{1} << n_, false);
  for (Subset s : sets_) {
    if (s.empty()) throw Error(Errc::empty_set_member, "the empty set is not a valid member");
    if (!s.subset_of(Subset::full(n_)))
      throw Error(Errc::parse_error, "member " + s.to_string() + " exceeds the ground set");
    member_[s.bits()] = true;
  }

  if (check_axioms) {
    for (int e = 0; e < n_; e++) {
      if (!member_[Subset::single(e).bits()])
        throw Error(Errc::missing_singleton, "singleton {" + std::to_string(e + 1) + "} is missing");
    }
    for (std::size_t i = 0; i < sets_.size(); i++) {
      for (std::size_t j = i + 1; j < sets_.size(); j++) {
        Subset a = sets_[i], b = sets_[j];
        if (!a.disjoint_from(b) && !member_[(a | b).bits()])
          throw Error(Errc::union_not_closed, "members " + a.to_string() + " and " + b.to_string() +
                                                  " intersect but their union is absent");
      }
    }
  }

  // Maximal members, largest first. Union closure forces any member meeting
  // the accumulated union of chosen maximals to lie inside it.
  components_.clear();
  Subset covered;
  for (auto it = sets_.rbegin(); it != sets_.rend(); it++) {
    if (it->disjoint_from(covered)) {
      components_.push_back(*it);
      covered = covered | *it;
    } else {
      assert(it->subset_of(covered));
    }
  }
  if (covered != Subset::full(n_))
    throw Error(Errc::missing_singleton, "members do not cover the ground set");
  std::sort(components_.begin(), components_.end());
  rank_ = n_ - int(components_.size());

  comp_of_.assign(n_, -1);
  for (std::size_t c = 0; c < components_.size(); c++)
    for (int e : components_[c].elements()) comp_of_[e] = int(c);

  vertices_.clear();
  for (Subset s : sets_)
    if (!is_component(s)) vertices_.push_back(s);
}

BuildingSet BuildingSet::validate(std::vector<Subset> sets, GroundSet ground) {
  BuildingSet b;
  b.finish(std::move(sets), ground.size, /*check_axioms=*/true);
  return b;
}

BuildingSet BuildingSet::from_family_unchecked(std::vector<Subset> sets, int ground_size) {
  BuildingSet b;
  b.finish(std::move(sets), ground_size, /*check_axioms=*/false);
  return b;
}

BuildingSet BuildingSet::from_graph(const Graph& g) {
  const int n = g.vertex_count;
  auto adj = g.adjacency();
  std::vector<Subset> sets;
  for (int seed = 0; seed < n; seed++) {
    Subset allowed = Subset::full(n) - Subset(Subset::single(seed).bits() - 1);
    Subset s = Subset::single(seed);
    grow_connected(adj, allowed, s, (adj[seed] & allowed) - s, Subset(), sets);
  }
  return from_family_unchecked(std::move(sets), n);
}

bool BuildingSet::is_component(Subset s) const {
  if (s.empty()) return false;
  return component_of(s.min_element()) == s;
}

std::optional<int> BuildingSet::vertex_index(Subset s) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), s);
  if (it != vertices_.end() && *it == s) return int(it - vertices_.begin());
  return std::nullopt;
}

std::vector<Subset> BuildingSet::maximal_members_within(Subset t) const {
  std::vector<Subset> out;
  Subset covered;
  for (auto it = sets_.rbegin(); it != sets_.rend(); it++) {
    if (!it->subset_of(t)) continue;
    if (it->disjoint_from(covered)) {
      out.push_back(*it);
      covered = covered | *it;
      if (covered == t) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

ReindexedBuilding restriction(const BuildingSet& b, Subset c) {
  if (c.empty()) throw Error(Errc::empty_restriction, "restriction to the empty set");
  if (!c.subset_of(b.ground()))
    throw Error(Errc::parse_error, "restriction support exceeds the ground set");
  std::vector<Subset> sets;
  for (Subset s : b.sets())
    if (s.subset_of(c)) sets.push_back(compress(s, c));
  return {BuildingSet::from_family_unchecked(std::move(sets), c.count()), c, c.elements()};
}

ReindexedBuilding contraction(const BuildingSet& b, Subset c, bool strict) {
  if (c.empty()) throw Error(Errc::empty_restriction, "contraction by the empty set");
  if (strict && !b.contains(c))
    throw Error(Errc::not_a_member, "contraction by non-member " + c.to_string());
  Subset rest = b.ground() - c;
  if (rest.empty()) throw Error(Errc::empty_ground, "contraction by the whole ground set");
  std::vector<Subset> sets;
  for (Subset s : b.sets()) {
    if (s.disjoint_from(c))
      sets.push_back(compress(s, rest));
    else if (c.proper_subset_of(s))
      sets.push_back(compress(s - c, rest));
  }
  return {BuildingSet::from_family_unchecked(std::move(sets), rest.count()), rest, rest.elements()};
}

BuildingSet product(const std::vector<BuildingSet>& factors) {
  if (factors.empty()) throw Error(Errc::empty_ground, "product of no factors");
  int total = 0;
  for (const auto& f : factors) total += f.ground_size();
  if (total > GroundSet::kMaxSize)
    throw Error(Errc::too_large, "product ground set exceeds supported width");
  std::vector<Subset> sets;
  int offset = 0;
  for (const auto& f : factors) {
    for (Subset s : f.sets()) sets.push_back(Subset(s.bits() << offset));
    offset += f.ground_size();
  }
  return BuildingSet::from_family_unchecked(std::move(sets), total);
}

BuildingSet link_building(const BuildingSet& b, Subset c) {
  if (!b.is_vertex(c))
    throw Error(Errc::not_linkable, c.to_string() + " is not a non-maximal member");
  std::vector<Subset> sets;
  for (Subset s : b.sets()) {
    if (s.subset_of(c) || s.disjoint_from(c))
      sets.push_back(s);
    else if (c.proper_subset_of(s))
      sets.push_back(s - c);
  }
  return BuildingSet::from_family_unchecked(std::move(sets), b.ground_size());
}

GraphicalTest is_graphical(const BuildingSet& b) {
  std::vector<std::pair<int, int>> edges;
  for (Subset s : b.sets()) {
    if (s.count() == 2) {
      auto e = s.elements();
      edges.emplace_back(e[0], e[1]);
    }
  }
  Graph g = Graph::make(b.ground_size(), std::move(edges));
  bool match = BuildingSet::from_graph(g).sets() == b.sets();
  return {match, std::move(g)};
}

}  // namespace nestcx
