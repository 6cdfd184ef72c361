#include <gtest/gtest.h>

#include <random>

#include "j4free/error.hpp"
#include "j4free/io.hpp"
#include "j4free/planes.hpp"

using namespace j4free;

TEST(Io, AlistLayout) {
  Matrix01 m(2, 3);
  m.set(0, 0);
  m.set(0, 2);
  m.set(1, 1);
  EXPECT_EQ(to_alist(m),
            "3 2\n"
            "1 2\n"
            "1 1 1\n"
            "2 1\n"
            "1\n"
            "2\n"
            "1\n"
            "1 3\n"
            "2 0\n");
}

TEST(Io, RoundTripEveryFormat) {
  std::mt19937 rng(3);
  std::vector<Matrix01> cases{pg2_singer(4).incidence(), antiflag_singer(5).incidence()};
  for (int k = 0; k < 20; ++k) {
    Matrix01 m(1 + rng() % 70, 1 + rng() % 70);
    for (int u = 0; u < 60; ++u) m.set(rng() % m.rows(), rng() % m.cols());
    cases.push_back(m);
  }
  for (const auto& m : cases) {
    for (auto f : {MatrixFormat::alist, MatrixFormat::json, MatrixFormat::pbm, MatrixFormat::tsv}) {
      const auto text = write_matrix(m, f);
      EXPECT_EQ(read_matrix(text, f), m);
      EXPECT_EQ(sniff_format(text), f);
    }
  }
}

TEST(Io, JsonCarriesParameters) {
  const auto text = to_json(pg2_singer(2).incidence());
  EXPECT_NE(text.find("\"m1\":7"), std::string::npos);
  EXPECT_NE(text.find("\"n1\":3"), std::string::npos);
}

TEST(Io, PbmLayout) {
  Matrix01 m(2, 2);
  m.set(1, 0);
  EXPECT_EQ(to_pbm(m), "P1\n2 2\n0 0\n1 0\n");
}

TEST(Io, MalformedInputIsRejected) {
  EXPECT_THROW(from_alist("3 2\n1\n"), Error);
  EXPECT_THROW(from_pbm("P4\n1 1\n0\n"), Error);
  EXPECT_THROW(from_json("{\"rows\": 3}"), Error);
  EXPECT_THROW(parse_format("xml"), Error);
}
