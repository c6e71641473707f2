#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <string>

#include <hypercat/bijection.hh>
#include <hypercat/labelings.hh>
#include <hypercat/plane_tree.hh>
#include <hypercat/tours.hh>

#include "oracles.hh"

using namespace hypercat;

namespace {

  DyckPath dyck(const std::string& word)
  {
    DyckPath d;
    for (char c : word)
      d.steps.push_back(c == 'U' ? 1 : -1);
    return d;
  }

  std::string word_of(const PlaneTree& t)
  {
    std::string w;
    for (auto s : dyck_from_plane(t).steps)
      w += s == 1 ? 'U' : 'D';
    return w;
  }

} // namespace

TEST_CASE("plane tree counts are Catalan", "[plane]")
{
  const unsigned catalan[] = {1, 1, 2, 5, 14, 42, 132, 429};
  for (unsigned k = 1; k <= 8; ++k)
    CHECK(enumerate_plane_trees(k).size() == catalan[k - 1]);
}

TEST_CASE("enumeration is lexicographic in the Dyck word", "[plane]")
{
  auto trees = enumerate_plane_trees(4);
  REQUIRE(trees.size() == 5);
  CHECK(word_of(trees.front()) == "UUUDDD"); // chain
  CHECK(word_of(trees.back()) == "UDUDUD");  // all children on the root
  auto key = [](const PlaneTree& t) {        // up-step sorts before down-step
    std::string s = word_of(t);
    for (char& c : s)
      c = c == 'U' ? '0' : '1';
    return s;
  };
  for (std::size_t i = 0; i + 1 < trees.size(); ++i)
    CHECK(key(trees[i]) < key(trees[i + 1]));
}

TEST_CASE("dyck / ballot / plane conversions invert each other", "[plane]")
{
  for (unsigned k = 1; k <= 7; ++k) {
    std::set<std::string> words;
    for (const PlaneTree& t : enumerate_plane_trees(k)) {
      CHECK(plane_from_dyck(dyck_from_plane(t)) == t);
      CHECK(plane_from_ballot(ballot_from_plane(t)) == t);
      words.insert(word_of(t));
      for (unsigned v = 1; v < t.k; ++v) {
        CHECK(t.parent[v] < v); // preorder numbering
        CHECK(t.level[v] == t.level[t.parent[v]] + 1);
      }
    }
    CHECK(words.size() == enumerate_plane_trees(k).size());
  }
}

TEST_CASE("malformed step sequences are rejected", "[plane]")
{
  CHECK_THROWS_AS(plane_from_dyck(dyck("UUD")), std::invalid_argument);
  CHECK_THROWS_AS(plane_from_dyck(dyck("DU")), std::invalid_argument);
  CHECK_THROWS_AS(plane_from_dyck(DyckPath{{1, 0, -1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_plane_trees(0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_plane_trees(20), resource_error);
}

TEST_CASE("admissible labelings of small trees", "[plane]")
{
  SECTION("single vertex: one empty labeling")
  {
    PlaneTree t = plane_from_dyck(DyckPath{});
    CHECK(count_admissible_labelings(t, 2) == 1);
  }
  SECTION("chain of 3 has no 2-labeling: levels have one vertex each")
  {
    CHECK(count_admissible_labelings(plane_from_dyck(dyck("UUDD")), 2) == 0);
  }
  SECTION("four children on the root: three ways to pair them")
  {
    PlaneTree t = plane_from_dyck(dyck("UDUDUDUD"));
    CHECK(count_admissible_labelings(t, 2) == 3);
  }
  SECTION("grandchildren force their parents into one block")
  {
    // two chains and two leaves on the root: level sets {1,3,5,6} and {2,4}
    PlaneTree t = plane_from_dyck(dyck("UUDDUUDDUDUD"));
    CHECK(is_admissible(t, MLabeling{2, {{1, 3}, {5, 6}, {2, 4}}}));
    CHECK_FALSE(is_admissible(t, MLabeling{2, {{1, 5}, {3, 6}, {2, 4}}}));
    CHECK_FALSE(is_admissible(t, MLabeling{2, {{1, 3}, {5, 6}, {2, 3}}}));
    CHECK_FALSE(is_admissible(t, MLabeling{2, {{1, 3, 5, 6}, {2, 4}}}));
    CHECK(count_admissible_labelings(t, 2) == 1);
  }
  SECTION("every plane tree has exactly one 1-labeling")
  {
    for (unsigned k = 1; k <= 6; ++k)
      for (const PlaneTree& t : enumerate_plane_trees(k))
        CHECK(count_admissible_labelings(t, 1) == 1);
  }
}

TEST_CASE("labeling counts add up across all plane trees", "[plane]")
{
  CHECK(hypercatalan_via_labelings(0, 5) == 1);
  CHECK(hypercatalan_via_labelings(1, 1) == 1);
  CHECK(hypercatalan_via_labelings(1, 4) == 1);
  CHECK(hypercatalan_via_labelings(2, 2) == 6);
  CHECK(hypercatalan_via_labelings(3, 1) == 5);
  CHECK(hypercatalan_via_labelings(2, 3) == 20);
  CHECK(hypercatalan_via_labelings(4, 1) == 14);
  CHECK_THROWS_AS(hypercatalan_via_labelings(7, 2), resource_error);
}

TEST_CASE("labeling route agrees with the tree-sum route", "[plane]")
{
  for (unsigned m = 1; m <= 6; ++m)
    for (unsigned n = 1; n * m <= 6; ++n)
      CHECK(hypercatalan_via_labelings(n, m) == hypercatalan(n, m));
}

TEST_CASE("tour word validation", "[plane]")
{
  FreeTree path2 = from_edges(2, {{0, 1}}).tree;
  CHECK_NOTHROW(validate_tour(path2, TourWord{{0, 1, 0}}, 1));
  CHECK_THROWS_AS(validate_tour(path2, TourWord{{0, 1}}, 1), std::invalid_argument);
  CHECK_THROWS_AS(validate_tour(path2, TourWord{{0, 1, 1}}, 1), std::invalid_argument);
  CHECK_THROWS_AS(validate_tour(path2, TourWord{{1, 0, 1}}, 2), std::invalid_argument);

  // canonical 3-vertex path: leaves 1 and 2 both hang off the root
  FreeTree path3 = from_edges(3, {{0, 1}, {1, 2}}).tree;
  CHECK_NOTHROW(validate_tour(path3, TourWord{{0, 1, 0, 2, 0}}, 1));
  // closed, right length, but one edge crossed 4 times and the other 0
  CHECK_THROWS_AS(validate_tour(path3, TourWord{{1, 0, 1, 0, 1}}, 1), std::invalid_argument);
  // 1 - 2 is not an edge
  CHECK_THROWS_AS(validate_tour(path3, TourWord{{0, 1, 2, 1, 0}}, 1), std::invalid_argument);
}

TEST_CASE("a single-edge tour reads off as a one-block tree", "[plane]")
{
  FreeTree path2 = from_edges(2, {{0, 1}}).tree;
  LabeledPlaneTree lt = tour_to_labeled_tree(path2, TourWord{{0, 1, 0}}, 1);
  CHECK(lt.tree.k == 2);
  CHECK(lt.labeling.blocks == std::vector<std::vector<unsigned>>{{1}});

  TreeTour back = labeled_tree_to_tour(lt.tree, lt.labeling);
  CHECK(back.tree == path2);
  CHECK(back.walk.vertices.size() == 3);
}

TEST_CASE("the spider walk reads off as the fixed labeled tree", "[plane]")
{
  // centre v with legs a, b, c and an extra edge a - d
  CanonicalTree ct = from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}});
  auto cv = [&](unsigned v) { return ct.to_canonical[v]; };
  TourWord w;
  for (unsigned v : {0u, 1u, 4u, 1u, 0u, 2u, 0u, 1u, 4u, 1u, 0u, 3u, 0u, 2u, 0u, 3u, 0u})
    w.vertices.push_back(cv(v));

  LabeledPlaneTree lt = tour_to_labeled_tree(ct.tree, w, 2);
  CHECK(word_of(lt.tree) == "UUDDUDUUDDUDUDUD");
  CHECK(lt.labeling.blocks ==
        std::vector<std::vector<unsigned>>{{1, 4}, {2, 5}, {3, 7}, {6, 8}});

  TreeTour back = labeled_tree_to_tour(lt.tree, lt.labeling);
  REQUIRE(back.tree == ct.tree);
  bool matched = false;
  for (const auto& g : oracle::automorphisms_brute(ct.tree)) {
    bool all = true;
    for (std::size_t i = 0; i < w.vertices.size(); ++i)
      if (g[w.vertices[i]] != back.walk.vertices[i]) {
        all = false;
        break;
      }
    matched |= all;
  }
  CHECK(matched);
}

TEST_CASE("collapsing a labeled tree inverts the reading exactly", "[plane]")
{
  for (unsigned k = 2; k <= 5; ++k)
    for (const PlaneTree& t : enumerate_plane_trees(k))
      for (unsigned m : {1u, 2u})
        for_each_admissible_labeling(t, m, [&](const MLabeling& lab) {
          TreeTour tour = labeled_tree_to_tour(t, lab);
          LabeledPlaneTree back = tour_to_labeled_tree(tour.tree, tour.walk, m);
          CHECK(back.tree == t);
          CHECK(back.labeling == lab);
        });
}

TEST_CASE("tours hit each labeled tree once per tree symmetry", "[plane]")
{
  // Reading a tour is invariant under tree automorphisms (relabelling the
  // walk leaves the Dyck word and the block structure alone), and symmetries
  // act freely on tours, so across all starting points every labeled plane
  // tree that collapses back to t must show up exactly |Aut(t)| times.
  for (unsigned n = 2; n <= 4; ++n)
    for (const FreeTree& t : enumerate_free_trees(n))
      for (unsigned m : {1u, 2u}) {
        auto auts = oracle::automorphisms_brute(t);
        using Image = std::pair<std::string, std::vector<std::vector<unsigned>>>;
        std::map<Image, std::size_t> hits;
        std::size_t total_words = 0;
        for (unsigned v = 0; v < n; ++v) {
          auto words = oracle::enumerate_tour_words(t, v, m);
          CHECK(Int(words.size()) == tour_count_at(t, v, m));
          total_words += words.size();
          for (const auto& vs : words) {
            LabeledPlaneTree lt = tour_to_labeled_tree(t, TourWord{vs}, m);
            ++hits[{word_of(lt.tree), lt.labeling.blocks}];

            TreeTour back = labeled_tree_to_tour(lt.tree, lt.labeling);
            REQUIRE(back.tree == t);
            bool matched = false;
            for (const auto& g : auts) {
              bool all = true;
              for (std::size_t i = 0; i < vs.size(); ++i)
                if (g[vs[i]] != back.walk.vertices[i]) {
                  all = false;
                  break;
                }
              matched |= all;
            }
            CHECK(matched);
          }
        }
        for (const auto& [image, count] : hits)
          CHECK(count == auts.size());
        CHECK(hits.size() * auts.size() == total_words);

        std::size_t expected = 0;
        for (const PlaneTree& pt : enumerate_plane_trees(m * (n - 1) + 1))
          for_each_admissible_labeling(pt, m, [&](const MLabeling& lab) {
            if (labeled_tree_to_tour(pt, lab).tree == t)
              ++expected;
          });
        CHECK(hits.size() == expected);
      }
}

TEST_CASE("inadmissible input to the collapse is rejected", "[plane]")
{
  PlaneTree t = plane_from_dyck(dyck("UDUDUDUD"));
  CHECK_THROWS_AS(labeled_tree_to_tour(t, MLabeling{2, {{1, 2}, {3}}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(labeled_tree_to_tour(plane_from_dyck(dyck("UUDD")), MLabeling{2, {{1, 2}}}),
                  std::invalid_argument);
}
