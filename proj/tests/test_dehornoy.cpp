#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <braidforge/dehornoy.hpp>
#include <braidforge/garside.hpp>

#include "oracles.hpp"

using namespace braidforge;
using namespace braidforge::dehornoy;
using words::make_word;

static int max_index(const BraidWord& w) {
  int k = 0;
  for (int v : w.letters) k = std::max(k, v < 0 ? -v : v);
  return k;
}

// The main generator of the certificate must appear with one sign only.
static void check_certificate(const BraidWord& input, const Verdict& d) {
  REQUIRE(garside::equals(input, d.certificate));
  if (d.kind == Kind::Identity) {
    REQUIRE(d.index == 0);
    REQUIRE(d.certificate.letters.empty());
    return;
  }
  REQUIRE(d.index == max_index(d.certificate));
  for (int v : d.certificate.letters)
    if (std::abs(v) == d.index) REQUIRE((v > 0) == (d.kind == Kind::Positive));
}

TEST_CASE("handle reduction exposes the sign of the top generator") {
  Verdict d = main_verdict(make_word(3, {2, 1, -2}));
  REQUIRE(d.kind == Kind::Positive);
  REQUIRE(d.index == 2);
  check_certificate(make_word(3, {2, 1, -2}), d);

  Verdict neg = main_verdict(make_word(3, {2, -1, -2}));
  REQUIRE(neg.kind == Kind::Negative);  // reduces to -1 -2 1
  REQUIRE(neg.index == 2);
  check_certificate(make_word(3, {2, -1, -2}), neg);

  // commutator: stays sigma_2-positive after reduction
  Verdict comm = main_verdict(make_word(3, {2, 1, -2, -1}));
  REQUIRE(comm.kind == Kind::Positive);
  REQUIRE(comm.index == 2);
  check_certificate(make_word(3, {2, 1, -2, -1}), comm);

  Verdict pos1 = main_verdict(make_word(3, {1}));
  REQUIRE(pos1.kind == Kind::Positive);
  REQUIRE(pos1.index == 1);
}

TEST_CASE("words that cancel completely come back as the identity") {
  REQUIRE(main_verdict(make_word(3, {})).kind == Kind::Identity);
  REQUIRE(main_verdict(make_word(3, {1, -1})).kind == Kind::Identity);
  // braid relation conjugate: sigma_1 sigma_2 sigma_1 (sigma_2 sigma_1 sigma_2)^{-1}
  Verdict d = main_verdict(make_word(3, {1, 2, 1, -2, -1, -2}));
  REQUIRE(d.kind == Kind::Identity);
  check_certificate(make_word(3, {1, 2, 1, -2, -1, -2}), d);
}

TEST_CASE("inverse words land in the opposite class") {
  std::mt19937 rng(77101);
  for (int trial = 0; trial < 50; ++trial) {
    BraidWord w = make_word(3, oracles::random_signed_word(rng, 3, 6));
    Verdict a = main_verdict(w);
    Verdict b = main_verdict(words::invert(w));
    if (a.kind == Kind::Identity) {
      REQUIRE(b.kind == Kind::Identity);
    } else {
      REQUIRE(a.index == b.index);
      REQUIRE(((a.kind == Kind::Positive) ^ (b.kind == Kind::Positive)));
    }
    check_certificate(w, a);
  }
}

TEST_CASE("every nonempty positive word is order-positive") {
  for (const auto& w : oracles::all_positive_words(3, 5)) {
    REQUIRE(is_dehornoy_positive(make_word(3, w)));
  }
  REQUIRE(is_dehornoy_positive(make_word(4, {3, 1, 2})));
  REQUIRE_FALSE(is_dehornoy_positive(make_word(3, {})));
  REQUIRE_FALSE(is_dehornoy_positive(make_word(3, {-2})));
}

TEST_CASE("comparison orders generators by their sigma-positive quotient") {
  CompareResult r = compare(make_word(3, {1}), make_word(3, {2}));
  REQUIRE(r.order == Ordering::LT);
  REQUIRE(garside::equals(r.certificate, make_word(3, {-1, 2})));

  REQUIRE(compare(make_word(3, {2}), make_word(3, {1})).order == Ordering::GT);
  REQUIRE(compare(make_word(3, {1, 2}), make_word(3, {1, 2})).order == Ordering::EQ);
  REQUIRE(compare(make_word(3, {1, 2, 1}), make_word(3, {2, 1, 2})).order == Ordering::EQ);
  REQUIRE_THROWS_AS(compare(make_word(3, {1}), make_word(4, {1})), Error);
}

TEST_CASE("comparison is a left-invariant strict order on samples") {
  std::mt19937 rng(91733);
  auto word = [&](int len) { return make_word(3, oracles::random_signed_word(rng, 3, len)); };
  for (int trial = 0; trial < 40; ++trial) {
    BraidWord u = word(5), v = word(5), z = word(4);
    Ordering uv = compare(u, v).order;
    // antisymmetry
    Ordering vu = compare(v, u).order;
    REQUIRE((uv == Ordering::EQ) == (vu == Ordering::EQ));
    if (uv == Ordering::LT) REQUIRE(vu == Ordering::GT);
    // left invariance
    REQUIRE(compare(words::concat(z, u), words::concat(z, v)).order == uv);
    // consistency with the word problem
    REQUIRE((uv == Ordering::EQ) == garside::equals(u, v));
  }
}
