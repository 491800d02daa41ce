#include <doctest.h>

#include <sstream>

#include "diffseq/error.hpp"
#include "diffseq/serialize.hpp"
#include "diffseq/verify.hpp"

using namespace diffseq;

TEST_SUITE("serialize") {

TEST_CASE("text form") {
  const Coloring s = Coloring::from_string("11000011");
  CHECK(to_text(s) == "11000011\n");
  CHECK(from_text("11000011\n") == s);
  CHECK(from_text("11000011") == s);
  CHECK(from_text("11000011\r\n") == s);
  CHECK_THROWS_AS(from_text(""), MalformedInput);
  CHECK_THROWS_AS(from_text("\n"), MalformedInput);
  CHECK_THROWS_AS(from_text("1102\n"), MalformedInput);
  CHECK_THROWS_AS(from_text("10\n10\n"), MalformedInput);
}

TEST_CASE("binary layout") {
  // bits 1..10 = 1100001110: byte 0 holds bits 1..8 LSB-first
  const Coloring s = Coloring::from_string("1100001110");
  const std::string bytes = to_binary(s);
  REQUIRE(bytes.size() == 8 + 2);
  CHECK(static_cast<unsigned char>(bytes[0]) == 10);
  for (int b = 1; b < 8; ++b) CHECK(bytes[b] == 0);
  CHECK(static_cast<unsigned char>(bytes[8]) == 0b11000011);
  CHECK(static_cast<unsigned char>(bytes[9]) == 0b00000001);
  CHECK(from_binary(bytes) == s);
}

TEST_CASE("binary rejects malformed payloads") {
  const std::string good = to_binary(Coloring::from_string("101"));
  CHECK_THROWS_AS(from_binary(good.substr(0, 5)), MalformedInput);
  CHECK_THROWS_AS(from_binary(good + "x"), MalformedInput);
  CHECK_THROWS_AS(from_binary(good.substr(0, 8)), MalformedInput);
  std::string padded = good;
  padded.back() = static_cast<char>(0xff);
  CHECK_THROWS_AS(from_binary(padded), MalformedInput);
  CHECK_THROWS_AS(from_binary(std::string(8, '\0')), MalformedInput);
}

TEST_CASE("both encodings round-trip random colorings") {
  SplitMix64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const Coloring s = rng.coloring(rng.between(1, 300));
    CHECK(from_text(to_text(s)) == s);
    CHECK(from_binary(to_binary(s)) == s);
    CHECK(decode_coloring(to_text(s)) == s);
    CHECK(decode_coloring(to_binary(s)) == s);
  }
}

TEST_CASE("write_coloring") {
  std::ostringstream text, bin;
  const Coloring s = Coloring::from_string("1");
  write_coloring(text, s, ColoringEncoding::kText);
  write_coloring(bin, s, ColoringEncoding::kBinary);
  CHECK(text.str() == "1\n");
  CHECK(bin.str() == to_binary(s));
}

}
