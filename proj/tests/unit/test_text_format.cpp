#include "helpers.hpp"
#include "hnslope/text_format.hpp"

using namespace hnslope;
using testing::error_of;
using testing::sv;

TEST_CASE("documents") {
  auto doc = Document::parse("ring=hahn p=2  # comment\nq=2\nphi=\n1; 0\n0; t^(-1)\nslopes=[1/2 x 2,\n  0 x 1]\n");
  CHECK(doc.value("ring") == "hahn");
  REQUIRE(doc.block("phi"));
  CHECK(doc.block("phi")->rows.size() == 2);
  CHECK(doc.block("phi")->lines[1] == 5);
  CHECK(error_of([] { Document::parse("a=1\na=2\n"); }) == ErrorKind::SchemaError);
  CHECK(error_of([] { Document::parse("1; 0\n"); }) == ErrorKind::ParseError);
}

TEST_CASE("phi modules round trip") {
  auto doc = Document::parse("ring=hahn p=2 m=2\nq=2\nphi=\n1; a*t\n0; t^(-1)\ntriv=\n1; 0\n0; t\n");
  auto m = read_phi_module(doc);
  CHECK(m.ring()->field->size() == 4);
  CHECK(m.ring()->field->modulus() == std::vector<unsigned>{1, 1, 1});
  auto again = read_phi_module(Document::parse(format(m)));
  CHECK(again.phi() == m.phi());
  CHECK(format(again) == format(m));
  CHECK(read_trivialization(doc, m).has_value());
}

TEST_CASE("entry errors carry positions") {
  try {
    read_phi_module(Document::parse("ring=hahn p=3\nphi=\n1; t^^2\n"));
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParseError);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    CHECK(std::string(e.what()).find("column") != std::string::npos);
  }
  CHECK(error_of([] { read_ring(Document::parse("ring=ell\n")); }) == ErrorKind::SchemaError);
}

TEST_CASE("isocrystals and hodge-tate files") {
  auto d = read_isocrystal(Document::parse("ring=padic p=3\nslopes=[1/2 x 2, -1 x 1]\n"));
  CHECK(newton_type(d) == sv("[1/2, 1/2, -1]"));
  auto e = read_isocrystal(Document::parse(format(d)));
  CHECK(e.phi() == d.phi());

  auto doc = Document::parse("ring=xi N=6\nmatrix=\nxi^-2; 0\n0; 1\ncandidate=\n1\n0\ncandidate=\n1\n1\nexhaustive=true\n");
  auto h = read_ht_module(doc);
  CHECK(h.ring()->default_precision == Rational(6));
  CHECK(read_candidates(doc).size() == 2);
  CHECK(read_ht_module(Document::parse(format(h))).xi() == h.xi());
  CHECK(parse_slope_data("[3, 1/2, -2]") == sv("[3, 1/2, -2]"));
}

TEST_CASE("default moduli") {
  CHECK(default_modulus(2, 2) == std::vector<long>{1, 1, 1});
  CHECK(default_modulus(2, 3) == std::vector<long>{1, 1, 0, 1});
  CHECK(default_modulus(3, 2) == std::vector<long>{1, 0, 1});
}
