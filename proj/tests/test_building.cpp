#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "nestcx/building.hpp"

using namespace nestcx;

namespace {

std::vector<Subset> family(std::initializer_list<std::initializer_list<int>> sets) {
  std::vector<Subset> out;
  for (auto s : sets) out.push_back(Subset::of(s));
  return out;
}

}  // namespace

TEST_CASE("axioms are enforced with the right codes") {
  CHECK_THROWS_WITH_AS(BuildingSet::validate(family({{0}, {1}, {0, 1, 2}}), GroundSet(3)),
                       "MissingSingleton: singleton {3} is missing", Error);
  // Two intersecting members whose union is absent.
  CHECK_THROWS_WITH_AS(
      BuildingSet::validate(family({{0}, {1}, {2}, {0, 1}, {1, 2}}), GroundSet(3)),
      "UnionNotClosed: members {1,2} and {2,3} intersect but their union is absent", Error);
  CHECK_THROWS_AS(BuildingSet::validate(family({{0}, {1}, {}}), GroundSet(2)), Error);

  // Valid families of both kinds.
  CHECK_NOTHROW(BuildingSet::validate(family({{0}, {1}}), GroundSet(2)));
  CHECK_NOTHROW(fx::hexagon());
}

TEST_CASE("components, rank and vertices") {
  BuildingSet b = fx::square();
  CHECK(b.ground_size() == 4);
  CHECK(b.rank() == 2);
  CHECK(b.components() == family({{0, 2}, {1, 3}}));
  CHECK(b.vertices() == family({{0}, {1}, {2}, {3}}));
  CHECK(b.contains(Subset::of({0, 2})));
  CHECK(!b.contains(Subset::of({0, 1})));
  CHECK(b.is_component(Subset::of({0, 2})));
  CHECK(!b.is_component(Subset::of({0})));
  CHECK(b.is_vertex(Subset::of({0})));
  CHECK(b.component_of(0) == Subset::of({0, 2}));
  CHECK(b.component_of(3) == Subset::of({1, 3}));
  CHECK(b.vertex_index(Subset::of({2})) == 2);
  CHECK(!b.vertex_index(Subset::of({0, 2})));

  // Rank 0: singletons only.
  BuildingSet s = BuildingSet::validate(family({{0}, {1}}), GroundSet(2));
  CHECK(s.rank() == 0);
  CHECK(s.components() == family({{0}, {1}}));
  CHECK(s.vertices().empty());
}

TEST_CASE("maximal members within a subset") {
  BuildingSet b = fx::pentagon();
  // A member gives itself; a non-member splits into its largest pieces.
  CHECK(b.maximal_members_within(Subset::of({0, 1})) == family({{0, 1}}));
  CHECK(b.maximal_members_within(Subset::of({0, 2})) == family({{0}, {2}}));
  CHECK(b.maximal_members_within(Subset::of({0, 1, 2})) == family({{0, 1, 2}}));
}

TEST_CASE("connected subgraph families") {
  CHECK(fx::pentagon().sets() == family({{0}, {1}, {2}, {0, 1}, {1, 2}, {0, 1, 2}}));
  CHECK(fx::square().sets() == family({{0}, {1}, {2}, {3}, {0, 2}, {1, 3}}));
  CHECK(BuildingSet::from_graph(edgeless_graph(3)).sets() == family({{0}, {1}, {2}}));
  // The complete graph gives every nonempty subset.
  CHECK(int(fx::hexagon().sets().size()) == 7);
  // A 4-cycle: everything but the two diagonal pairs.
  CHECK(int(BuildingSet::from_graph(cycle_graph(4)).sets().size()) == 13);
}

TEST_CASE("graphical recognition returns the witness graph either way") {
  GraphicalTest sq = is_graphical(fx::square());
  CHECK(sq.graphical);
  CHECK(sq.graph.edges == std::vector<std::pair<int, int>>{{0, 2}, {1, 3}});

  GraphicalTest tz = is_graphical(fx::trapezoid());
  CHECK(!tz.graphical);
  CHECK(tz.graph.edges == std::vector<std::pair<int, int>>{{0, 1}});

  GraphicalTest tr = is_graphical(fx::triangle());
  CHECK(!tr.graphical);
  CHECK(tr.graph.edges.empty());

  // Round trip through every small graph.
  for (int n = 1; n <= 5; n++) {
    int pairs = n * (n - 1) / 2;
    for (int mask = 0; mask < (1 << pairs); mask++) {
      std::vector<std::pair<int, int>> edges;
      int k = 0;
      for (int i = 0; i < n; i++)
        for (int j = i + 1; j < n; j++, k++)
          if (mask >> k & 1) edges.emplace_back(i, j);
      Graph g = Graph::make(n, edges);
      GraphicalTest t = is_graphical(BuildingSet::from_graph(g));
      CHECK(t.graphical);
      CHECK(t.graph.edges == g.edges);
    }
  }
}

TEST_CASE("restriction keeps members inside the chosen set") {
  ReindexedBuilding r = restriction(fx::pentagon(), Subset::of({0, 1}));
  CHECK(r.building.sets() == family({{0}, {1}, {0, 1}}));
  CHECK(r.support == Subset::of({0, 1}));
  CHECK(r.lift(Subset::of({1})) == Subset::of({1}));

  // Restriction to the full ground set is the identity.
  CHECK(restriction(fx::hexagon(), Subset::full(3)).building.sets() == fx::hexagon().sets());
  // Non-contiguous support exercises the re-indexing.
  ReindexedBuilding h = restriction(fx::hexagon(), Subset::of({0, 2}));
  CHECK(h.building.sets() == family({{0}, {1}, {0, 1}}));
  CHECK(h.lift(Subset::of({0, 1})) == Subset::of({0, 2}));

  CHECK_THROWS_AS(restriction(fx::pentagon(), Subset()), Error);
}

TEST_CASE("contraction rewrites members through the removed set") {
  // Contracting the middle of the path joins the two ends.
  ReindexedBuilding c = contraction(fx::pentagon(), Subset::of({1}));
  CHECK(c.building.sets() == family({{0}, {1}, {0, 1}}));
  CHECK(c.to_parent == std::vector<int>{0, 2});

  ReindexedBuilding d = contraction(fx::square(), Subset::of({0}));
  CHECK(d.building.sets() == family({{0}, {1}, {2}, {0, 2}}));
  CHECK(d.to_parent == std::vector<int>{1, 2, 3});

  // Nothing to contract through.
  BuildingSet s = BuildingSet::validate(family({{0}, {1}}), GroundSet(2));
  CHECK(contraction(s, Subset::of({0})).building.sets() == family({{0}}));

  // Any nonempty set works by default; strictness insists on membership.
  CHECK_NOTHROW(contraction(fx::square(), Subset::of({0, 1})));
  CHECK_THROWS_AS(contraction(fx::square(), Subset::of({0, 1}), /*strict=*/true), Error);
  CHECK_NOTHROW(contraction(fx::square(), Subset::of({0, 2}), /*strict=*/true));
  CHECK_THROWS_AS(contraction(fx::hexagon(), Subset::full(3)), Error);
}

TEST_CASE("product concatenates ground sets") {
  BuildingSet p = product({fx::triangle(), fx::triangle()});
  CHECK(p.ground_size() == 6);
  CHECK(p.rank() == 4);
  CHECK(p.components() == family({{0, 1, 2}, {3, 4, 5}}));

  CHECK(product({fx::pentagon()}).sets() == fx::pentagon().sets());

  BuildingSet s = BuildingSet::validate(family({{0}}), GroundSet(1));
  CHECK(product({s, s}).rank() == 0);

  // A building is the product of its component restrictions, up to the
  // relabeling that packs each component into a contiguous block.
  BuildingSet sq = fx::square();
  std::vector<BuildingSet> parts;
  std::vector<int> to_parent;
  for (Subset comp : sq.components()) {
    ReindexedBuilding r = restriction(sq, comp);
    parts.push_back(r.building);
    to_parent.insert(to_parent.end(), r.to_parent.begin(), r.to_parent.end());
  }
  std::vector<Subset> relabeled;
  BuildingSet assembled = product(parts);
  for (Subset m : assembled.sets()) {
    Subset image;
    for (int e : m.elements()) image = image.with(to_parent[e]);
    relabeled.push_back(image);
  }
  std::sort(relabeled.begin(), relabeled.end());
  CHECK(relabeled == sq.sets());
}

TEST_CASE("link building keeps the ground set and drops the center") {
  BuildingSet b = fx::pentagon();
  BuildingSet l = link_building(b, Subset::of({0, 1}));
  // Members inside the center stay, {0,1,2} turns into {2}, and the center
  // itself survives as a component, so it indexes no face of the link.
  CHECK(l.sets() == family({{0}, {1}, {2}, {0, 1}}));
  CHECK(l.is_component(Subset::of({0, 1})));
  CHECK_THROWS_AS(link_building(b, Subset::of({0, 2})), Error);
  CHECK_THROWS_AS(link_building(b, Subset::of({0, 1, 2})), Error);
}
