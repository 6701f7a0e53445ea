#include <set>
#include <vector>

#include "doctest.h"

#include "creasim/rng.hpp"

using namespace creasim;

TEST_SUITE("rng") {

// Published Random123 known-answer vectors for philox4x32-10.
TEST_CASE("philox known answers") {
  CHECK(Rng::block({0, 0, 0, 0}, {0, 0}) ==
        std::array<std::uint32_t, 4>{0x6627e8d5u, 0xe169c58du, 0xbc57ac4cu, 0x9b00dbd8u});
  CHECK(Rng::block({0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu},
                   {0xffffffffu, 0xffffffffu}) ==
        std::array<std::uint32_t, 4>{0x408f276du, 0x41c83b0eu, 0xa20bc7c6u, 0x6d5451fdu});
  CHECK(Rng::block({0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u},
                   {0xa4093822u, 0x299f31d0u}) ==
        std::array<std::uint32_t, 4>{0xd16cfe09u, 0x94fdccebu, 0x5001e420u, 0x24126ea1u});
}

TEST_CASE("same seed replays the exact sequence") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("different seeds diverge") {
  Rng a(1), b(2);
  int same = 0;
  for (int i = 0; i < 64; ++i) {
    if (a.next_u32() == b.next_u32()) ++same;
  }
  CHECK(same < 4);
}

TEST_CASE("next_real stays in [0, 1)") {
  Rng r(7);
  for (int i = 0; i < 10000; ++i) {
    const double x = r.next_real();
    CHECK(x >= 0.0);
    CHECK(x < 1.0);
  }
}

TEST_CASE("next_below bounds and full residue coverage") {
  Rng r(3);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 1000; ++i) {
    const std::uint64_t v = r.next_below(7);
    CHECK(v < 7);
    seen.insert(v);
  }
  CHECK(seen.size() == 7);
  CHECK(r.next_below(1) == 0);
}

TEST_CASE("next_real_range respects the interval") {
  Rng r(9);
  for (int i = 0; i < 1000; ++i) {
    const double x = r.next_real_range(-0.25, 0.25);
    CHECK(x >= -0.25);
    CHECK(x < 0.25);
  }
}

TEST_CASE("stream seeds are distinct per agent index") {
  std::set<std::uint64_t> seeds;
  for (std::uint64_t i = 0; i < 1000; ++i) seeds.insert(derive_stream_seed(123, i));
  CHECK(seeds.size() == 1000);
  CHECK(derive_stream_seed(1, 0) != derive_stream_seed(2, 0));
}

TEST_CASE("mix64 of zero is nonzero and stable") {
  CHECK(mix64(0) != 0);
  CHECK(mix64(0) == mix64(0));
}

}  // TEST_SUITE
