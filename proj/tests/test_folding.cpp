#include <doctest.h>

#include <stdexcept>

#include <vector>

#include "artin/folding.hpp"
#include "artin/normal_form.hpp"

using namespace artin;

TEST_CASE("bipartition of catalog graphs") {
  auto [s3a, s3b] = bipartition(CoxeterGraph::type_a(3));
  CHECK(s3a == std::vector<int>{1, 3});
  CHECK(s3b == std::vector<int>{2});

  auto [d4a, d4b] = bipartition(CoxeterGraph::type_d(4));
  CHECK(d4a == std::vector<int>{1, 3, 4});
  CHECK(d4b == std::vector<int>{2});

  CHECK_THROWS_AS(bipartition(CoxeterGraph::type_a(1)), std::invalid_argument);
  // an odd cycle is not bipartite
  CHECK_THROWS_AS(bipartition(CoxeterGraph::custom(3, {{1, 2, 3}, {2, 3, 3}, {1, 3, 3}})),
                  std::invalid_argument);
  // disconnected
  CHECK_THROWS_AS(bipartition(CoxeterGraph::custom(4, {{1, 2, 3}, {3, 4, 3}})),
                  std::invalid_argument);
}

TEST_CASE("dihedral foldings of A and D graphs") {
  Folding fa3 = dihedral_folding(CoxeterGraph::type_a(3));
  CHECK(fa3.target_label == 4);
  CHECK(fa3.part_s == std::vector<int>{1, 3});
  CHECK(fa3.part_t == std::vector<int>{2});

  Folding fd4 = dihedral_folding(CoxeterGraph::type_d(4));
  CHECK(fd4.target_label == 6);

  Folding flipped = dihedral_folding(CoxeterGraph::type_a(3), true);
  CHECK(flipped.part_s == std::vector<int>{2});
  CHECK(flipped.part_t == std::vector<int>{1, 3});

  CHECK_THROWS_AS(dihedral_folding(CoxeterGraph::type_a(1)), std::invalid_argument);
  CHECK_THROWS_AS(dihedral_folding(CoxeterGraph::dihedral(5)), std::invalid_argument);
  CHECK_THROWS_AS(dihedral_folding(CoxeterGraph::custom(2, {{1, 2, 4}})), std::invalid_argument);
}

TEST_CASE("generator images of the induced monoid map") {
  auto [xa, ya] = lcm_hom_images(dihedral_folding(CoxeterGraph::type_a(3)));
  CHECK(xa.letters() == std::vector<int>{1, 3});
  CHECK(ya.letters() == std::vector<int>{2});

  auto [xd4, yd4] = lcm_hom_images(dihedral_folding(CoxeterGraph::type_d(4)));
  CHECK(xd4.letters() == std::vector<int>{1, 3, 4});
  CHECK(yd4.letters() == std::vector<int>{2});

  auto [xd5, yd5] = lcm_hom_images(dihedral_folding(CoxeterGraph::type_d(5)));
  CHECK(xd5.letters() == std::vector<int>{1, 3});
  CHECK(yd5.letters() == std::vector<int>{2, 4, 5});
}

TEST_CASE("verify_lcm_hom on the basic instances") {
  FoldingReport a3 = verify_lcm_hom(dihedral_folding(CoxeterGraph::type_a(3)));
  CHECK(a3.h == 4);
  CHECK(a3.relation_at_h);
  CHECK(a3.divisibility);
  CHECK_FALSE(a3.first_shorter_relation.has_value());
  CHECK(a3.passed());

  // D_4 reproduces xyxyxy = yxyxyx with x = T_1 T_3 T_4, y = T_2
  CoxeterGraph d4 = CoxeterGraph::type_d(4);
  FoldingReport rd4 = verify_lcm_hom(dihedral_folding(d4));
  CHECK(rd4.h == 6);
  CHECK(rd4.passed());
  PositiveWord x(d4, {1, 3, 4}), y(d4, {2});
  CHECK(words_equal(prod_word(x, y, 6), prod_word(y, x, 6)));

  // the identity folding of I2(h) onto itself: the relation at h is the
  // defining relation
  for (int h : {3, 5, 8}) {
    CoxeterGraph i2 = CoxeterGraph::dihedral(h);
    Folding identity_fold{i2, h, {1}, {2}, false};
    FoldingReport r = verify_lcm_hom(identity_fold);
    CHECK(r.passed());
    CHECK(words_equal(prod_word(r.x, r.y, h), prod_word(r.y, r.x, h)));
  }
}

TEST_CASE("verify_lcm_hom across the rank ranges") {
  for (int n = 3; n <= 6; ++n) CHECK(verify_lcm_hom(dihedral_folding(CoxeterGraph::type_a(n))).passed());
  for (int n = 4; n <= 6; ++n) CHECK(verify_lcm_hom(dihedral_folding(CoxeterGraph::type_d(n))).passed());
}

TEST_CASE("orientation flip swaps the images and preserves verdicts") {
  for (const CoxeterGraph& g : {CoxeterGraph::type_a(4), CoxeterGraph::type_a(5),
                                CoxeterGraph::type_d(4), CoxeterGraph::type_d(5)}) {
    FoldingReport plain = verify_lcm_hom(dihedral_folding(g, false));
    FoldingReport flip = verify_lcm_hom(dihedral_folding(g, true));
    CHECK(plain.x.letters() == flip.y.letters());
    CHECK(plain.y.letters() == flip.x.letters());
    CHECK(plain.relation_at_h == flip.relation_at_h);
    CHECK(plain.divisibility == flip.divisibility);
    CHECK(plain.first_shorter_relation == flip.first_shorter_relation);
  }
}

TEST_CASE("the images respect lcms: lcm(x,y) is the h-fold product") {
  std::vector<CoxeterGraph> sources;
  for (int n = 3; n <= 7; ++n) sources.push_back(CoxeterGraph::type_a(n));
  for (int n = 4; n <= 7; ++n) sources.push_back(CoxeterGraph::type_d(n));
  for (const CoxeterGraph& g : sources) {
    Folding f = dihedral_folding(g);
    auto [x, y] = lcm_hom_images(f);
    CHECK(words_equal(lcm_pair(x, y), prod_word(x, y, f.target_label)));
  }
}
