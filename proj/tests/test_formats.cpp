#include "support.hpp"

#include <pea/text_format.hpp>

#include <gtest/gtest.h>

using namespace pea;
using namespace pea::testing;

namespace {

Errc code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return Errc::InternalInconsistency;
}

}  // namespace

TEST(Rational, PrintsLowestTerms) {
    EXPECT_EQ(to_string(make_rational(2, 4)), "1/2");
    EXPECT_EQ(to_string(make_rational(-6, 4)), "-3/2");
    EXPECT_EQ(to_string(make_rational(4, 2)), "2");
    EXPECT_EQ(to_string(make_rational(0, 7)), "0");
    EXPECT_EQ(to_string(make_rational(3, -9)), "-1/3");
}

TEST(Rational, ParsesAndCanonicalizes) {
    EXPECT_EQ(parse_rational("3/6"), make_rational(1, 2));
    EXPECT_EQ(parse_rational("-4"), Rational(-4));
    EXPECT_EQ(parse_rational("5/1"), Rational(5));
    EXPECT_EQ(to_string(parse_rational("10/4")), "5/2");
    for (const char* bad : {"", "/2", "1/", "1/0", "1.5", "a", "--1", "1/-2", "+1", " 1"})
        EXPECT_EQ(code_of([&] { parse_rational(bad); }), Errc::Parse) << bad;
}

TEST(Rational, JoinValues) {
    const RationalVector v{Rational(0), make_rational(1, 4), make_rational(1, 2), make_rational(3, 4), Rational(1)};
    EXPECT_EQ(join_values(v), "0,1/4,1/2,3/4,1");
    EXPECT_EQ(join_values(RationalVector{}), "");
}

TEST(Sha256, KnownVector) {
    EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(AlgebraFormat, LinesAndComments) {
    const auto e = parse_algebra(
        "# smallest chain\n"
        "elements: 0 m 1\n"
        "zero: 0\n"
        "one: 1\n"
        "\n"
        "m + m = 1\n"
        "0 + 0 = 0\n0 + m = m\nm + 0 = m\n0 + 1 = 1\n1 + 0 = 1\n");
    EXPECT_EQ(e.size(), 3u);
    EXPECT_EQ(e.sum(e.at("m"), e.at("m")), e.one());
}

TEST(AlgebraFormat, JsonBody) {
    const auto e = parse_algebra(
        "elements: 0 m 1\nzero: 0\none: 1\n"
        "[[\"m\",\"m\",\"1\"], [\"0\",\"0\",\"0\"], [\"0\",\"m\",\"m\"], [\"m\",\"0\",\"m\"],\n"
        " [\"0\",\"1\",\"1\"], [\"1\",\"0\",\"1\"]]\n");
    const auto lines = parse_algebra(
        "elements: 0 m 1\nzero: 0\none: 1\n"
        "0 + 0 = 0\n0 + m = m\nm + 0 = m\nm + m = 1\n0 + 1 = 1\n1 + 0 = 1\n");
    EXPECT_EQ(e, lines);
    EXPECT_EQ(e.hash(), lines.hash());
    EXPECT_EQ(parse_algebra(export_algebra(e)), e);
}

TEST(AlgebraFormat, CanonicalExportIsSortedByIndex) {
    const auto text = export_algebra(chain_algebra(2));
    EXPECT_EQ(text,
              "elements: 0 1 2\nzero: 0\none: 2\n"
              "0 + 0 = 0\n0 + 1 = 1\n0 + 2 = 2\n1 + 0 = 1\n1 + 1 = 2\n2 + 0 = 2\n");
}

TEST(AlgebraFormat, Errors) {
    EXPECT_EQ(code_of([] { parse_algebra("zero: 0\none: 0\n"); }), Errc::Parse);
    EXPECT_EQ(code_of([] { parse_algebra("elements: 0\none: 0\n0 + 0 = 0\n"); }), Errc::Parse);
    EXPECT_EQ(code_of([] { parse_algebra("elements: 0\nzero: 0\none: 0\n0 plus 0 = 0\n"); }), Errc::Parse);
    EXPECT_EQ(code_of([] { parse_algebra("elements: 0\nzero: 0\none: 0\n[[\"0\",\"0\"]]\n"); }), Errc::Parse);
    EXPECT_EQ(code_of([] { parse_algebra("elements: 0\nzero: 0\none: 0\n[[\"0\",\"0\",\n"); }), Errc::Parse);
    EXPECT_EQ(code_of([] { parse_algebra("elements: 0 [x\nzero: 0\none: 0\n"); }), Errc::Parse);
    EXPECT_EQ(code_of([] { parse_algebra("elements: 0 0\nzero: 0\none: 0\n"); }), Errc::DuplicateLabel);
    EXPECT_EQ(code_of([] { parse_algebra("elements: 0\nzero: 0\none: 0\n0 + 0 = z\n"); }), Errc::UnknownLabel);
    EXPECT_EQ(code_of([] { parse_algebra("elements: 0 a\nzero: 0\none: a\n0 + 0 = 0\n"); }),
              Errc::AxiomViolation);
}

TEST(MeasureFormat, RoundTrip) {
    const auto e = chain_algebra(3);
    const SignedMeasure m(e, {Rational(0), make_rational(-1, 3), make_rational(-2, 3), Rational(-1)});
    const auto text = export_measure(e, m);
    EXPECT_EQ(text, "algebra: " + e.hash() + "\n0 = 0\n1 = -1/3\n2 = -2/3\n3 = -1\n");
    EXPECT_EQ(parse_measure(e, text), m);
}

TEST(MeasureFormat, AcceptsAnyLineOrderAndNonCanonicalFractions) {
    const auto e = chain_algebra(2);
    const auto m = parse_measure(e, "algebra: " + e.hash() + "\n2 = 2/2\n# comment\n1 = 2/4\n0 = 0/5\n");
    EXPECT_EQ(export_measure(e, m), "algebra: " + e.hash() + "\n0 = 0\n1 = 1/2\n2 = 1\n");
}

TEST(MeasureFormat, Errors) {
    const auto e = chain_algebra(2);
    const std::string h = "algebra: " + e.hash() + "\n";
    EXPECT_EQ(code_of([&] { parse_measure(e, "0 = 0\n1 = 1\n2 = 2\n"); }), Errc::Parse);
    EXPECT_EQ(code_of([&] { parse_measure(e, "algebra: 00\n0 = 0\n1 = 1\n2 = 2\n"); }), Errc::AlgebraMismatch);
    EXPECT_EQ(code_of([&] { parse_measure(e, h + "0 = 0\n1 = 1\n"); }), Errc::Parse);
    EXPECT_EQ(code_of([&] { parse_measure(e, h + "0 = 0\n1 = 1\n1 = 1\n2 = 2\n"); }), Errc::DuplicateLabel);
    EXPECT_EQ(code_of([&] { parse_measure(e, h + "0 = 0\n1 = 1\n9 = 1\n2 = 2\n"); }), Errc::UnknownLabel);
    EXPECT_EQ(code_of([&] { parse_measure(e, h + "0 = 0\n1 = 1\n2 = 3\n"); }), Errc::AdditivityViolation);
    EXPECT_EQ(code_of([&] { parse_measure(e, h + "0 = 0\n1 = x\n2 = 3\n"); }), Errc::Parse);
}

TEST(Files, MissingFileIsAnIoError) {
    EXPECT_EQ(code_of([] { read_file("/nonexistent/definitely/missing.pea"); }), Errc::Io);
    EXPECT_EQ(code_of([] { write_file("/nonexistent/dir/out.pea", "x"); }), Errc::Io);
}
