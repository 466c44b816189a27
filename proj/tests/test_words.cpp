#include <doctest.h>

#include <random>

#include "brute_force.hpp"
#include "fixture.hpp"
#include "qlin/words/io.hpp"
#include "qlin/words/reduce.hpp"

using namespace qlin;
using namespace qlin::words;
using qlin::exact::ExactScalar;
using qlin::exact::ScalarMatrix;

namespace {

GammaElement word_w(long k = 1) { return GammaElement::generator(0, k); }
GammaElement word_b(long k = 1) { return GammaElement::generator(1, k); }

}  // namespace

TEST_CASE("fixture diagonalization sanity") {
  const ScalarMatrix h = fixture::conjugator_h();
  const ScalarMatrix a = fixture::matrix_a();
  const ScalarMatrix d = h * a * exact::inverse(h);
  CHECK(d(0, 1).is_zero());
  CHECK(d(1, 0).is_zero());
  CHECK(d(0, 0) == fixture::eigen_top());
  CHECK(d(1, 1) == fixture::eigen_bottom());
  CHECK(d(0, 0).abs() > d(1, 1).abs());
}

TEST_CASE("cyclic membership recovers exact powers") {
  const auto group = fixture::group();
  const ScalarMatrix w = fixture::matrix_a();
  const ScalarMatrix h = fixture::conjugator_h();

  CHECK(cyclic_membership(ScalarMatrix(ScalarMatrix::Identity(2, 2)), w, h) == 0);
  CHECK(cyclic_membership(exact::matrix_power(w, 3), w, h) == 3);
  CHECK(cyclic_membership(exact::matrix_power(w, -5), w, h) == -5);

  // w*b is outside <w>: the exact conjugate picks up a nonzero off-diagonal.
  const ScalarMatrix wb = group.evaluate(word_w() * word_b());
  const ScalarMatrix conj = h * wb * exact::inverse(h);
  CHECK((!conj(0, 1).is_zero() || !conj(1, 0).is_zero()));
  CHECK(!cyclic_membership(wb, w, h).has_value());
  CHECK(!cyclic_membership(group.evaluate(word_b()), w, h).has_value());
}

TEST_CASE("cyclic membership rejects bad bases") {
  const ScalarMatrix w = fixture::matrix_a();
  ScalarMatrix sing(2, 2);
  sing << ExactScalar(1), ExactScalar(2), ExactScalar(2), ExactScalar(4);
  CHECK_THROWS_AS(cyclic_membership(w, w, sing), MathError);
  // Identity basis leaves w non-diagonal.
  CHECK_THROWS_AS(cyclic_membership(w, w, ScalarMatrix(ScalarMatrix::Identity(2, 2))), MathError);
}

TEST_CASE("britton reduction removes pinches") {
  const CyclicGroup cyc = fixture::cyclic();

  // t w t^-1  ->  w as prefix, no syllables
  HnnWord pinch{GammaElement{}, {Syllable{1, word_w()}, Syllable{-1, GammaElement{}}}};
  HnnWord red = britton_reduce(pinch, cyc);
  CHECK(red.in_base_group());
  CHECK(red.prefix == word_w());

  // t b t^-1 stays put
  HnnWord stuck{GammaElement{}, {Syllable{1, word_b()}, Syllable{-1, GammaElement{}}}};
  CHECK(britton_reduce(stuck, cyc) == stuck);

  // t w^2 t^-1 w^-2 -> empty
  HnnWord two{GammaElement{}, {Syllable{1, word_w(2)}, Syllable{-1, word_w(-2)}}};
  red = britton_reduce(two, cyc);
  CHECK(red.in_base_group());
  CHECK(red.prefix.empty_word());

  CHECK_THROWS_AS(britton_reduce(HnnWord{GammaElement{}, {Syllable{0, word_b()}}}, cyc),
                  ValidationError);
}

TEST_CASE("britton reduction agrees with exhaustive rewriting") {
  const CyclicGroup cyc = fixture::cyclic();
  const auto group = fixture::group();

  for (const std::string& s : brute::all_words(4)) {
    const brute::Closure truth = brute::bfs_closure(s, cyc);
    const HnnWord word = brute::to_hnn(s);
    const HnnWord red = britton_reduce(word, cyc);

    long stable = 0;
    for (const Syllable& syl : red.syllables) stable += std::abs(syl.p);

    CAPTURE(s);
    CHECK(red.in_base_group() == truth.base_group);
    CHECK(stable == truth.min_stable_letters);
    if (truth.base_group) {
      CHECK(exact::equal(group.evaluate(red.prefix),
                         group.evaluate(brute::block_to_gamma(truth.best_base_word))));
    }
    CHECK(britton_reduce(red, cyc) == red);  // idempotent
  }
}

TEST_CASE("amalgam normal form") {
  const CyclicGroup cyc = fixture::cyclic();

  AmalgamWord both_in{{AmalgamLetter{1, word_w()}, AmalgamLetter{2, word_w(-1)}}};
  CHECK(amalgam_normal_form(both_in, cyc).letters.empty());

  AmalgamWord already{{AmalgamLetter{1, word_b()}, AmalgamLetter{2, word_b()}}};
  CHECK(amalgam_normal_form(already, cyc) == already);

  // (1, b w) (2, w^-1 b): the interior w-power shifts across the amalgam.
  AmalgamWord shifted{{AmalgamLetter{1, word_b() * word_w()},
                       AmalgamLetter{2, word_w(-1) * word_b()}}};
  CHECK(amalgam_normal_form(shifted, cyc) == already);

  // Same-factor letters merge: (1, b)(1, b^-1) is trivial.
  AmalgamWord cancel{{AmalgamLetter{1, word_b()}, AmalgamLetter{1, word_b(-1)}}};
  CHECK(amalgam_normal_form(cancel, cyc).letters.empty());

  // A lone w-power survives as a single letter.
  AmalgamWord lone{{AmalgamLetter{1, word_w(2)}, AmalgamLetter{2, word_w(1)}}};
  const AmalgamWord lone_nf = amalgam_normal_form(lone, cyc);
  REQUIRE(lone_nf.letters.size() == 1);
  CHECK(cyc.member(lone_nf.letters[0].g) == 3);
}

TEST_CASE("amalgam cyclic canonical form") {
  const CyclicGroup cyc = fixture::cyclic();

  // (1,b)(2,b)(1,b) rotates to an even alternating word starting in factor 1.
  AmalgamWord odd{{AmalgamLetter{1, word_b()}, AmalgamLetter{2, word_b()},
                   AmalgamLetter{1, word_b()}}};
  const AmalgamWord canon = amalgam_cyclic_canonical(odd, cyc);
  REQUIRE(canon.letters.size() == 2);
  CHECK(canon.letters[0].factor == 1);
  CHECK(canon.letters[1].factor == 2);

  // (1,b)(2,b)(1,b^-1) is conjugate into one factor.
  AmalgamWord conj{{AmalgamLetter{1, word_b()}, AmalgamLetter{2, word_b()},
                    AmalgamLetter{1, word_b(-1)}}};
  CHECK(amalgam_cyclic_canonical(conj, cyc).letters.size() == 1);
}

TEST_CASE("collapse witness") {
  const CyclicGroup cyc = fixture::cyclic();
  const AmalgamWord witness = collapse_witness(word_b(), cyc);
  REQUIRE(witness.letters.size() == 2);
  CHECK(witness.letters[0].g == word_b());
  CHECK(witness.letters[1].g == word_b(-1));
  CHECK(amalgam_normal_form(witness, cyc).letters.size() == 2);

  CHECK_THROWS_AS(collapse_witness(word_w(), cyc), MathError);
  CHECK_THROWS_AS(collapse_witness(word_w(3), cyc), MathError);
}

TEST_CASE("word json round trip") {
  HnnWord word{word_b(), {Syllable{2, word_w() * word_b(-1)}, Syllable{-1, word_b()}}};
  CHECK(hnn_from_json(to_json(word)) == word);

  AmalgamWord aw{{AmalgamLetter{1, word_b()}, AmalgamLetter{2, word_w(-2)}}};
  CHECK(amalgam_from_json(to_json(aw)) == aw);

  CHECK_THROWS_AS(hnn_from_json(nlohmann::json{{"prefix", 3}}), ValidationError);
  CHECK_THROWS_AS(hnn_from_json(nlohmann::json{{"unknown", 3}}), ValidationError);
  CHECK_THROWS_AS(hnn_from_json(nlohmann::json::parse(R"({"syllables": [[0, []]]})")),
                  ValidationError);
  CHECK_THROWS_AS(amalgam_from_json(nlohmann::json::parse(R"([[3, []]])")), ValidationError);
}
