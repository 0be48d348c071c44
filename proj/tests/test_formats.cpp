#include <doctest.h>

#include <sstream>

#include "helpers.hpp"
#include "qsig/formats.hpp"

namespace qsig {
namespace {

using testing::angle_pi;

SeifertMatrix read_matrix(const std::string& text) {
    std::istringstream in(text);
    return read_matrix_file(in);
}

DiagramData read_diagram(const std::string& text) {
    std::istringstream in(text);
    return read_diagram_file(in);
}

long count_of(const std::string& haystack, const std::string& needle) {
    long n = 0;
    for (std::size_t pos = haystack.find(needle); pos != std::string::npos;
         pos = haystack.find(needle, pos + needle.size()))
        ++n;
    return n;
}

TEST_CASE("matrix files round-trip byte for byte") {
    const SeifertMatrix a = testing::seifert({{1, 1}, {0, 1}}, 1);
    const std::string text = write_matrix_file(a);
    CHECK(text == "dimension 2\nparity odd-q\n1 1\n0 1\n");

    const SeifertMatrix back = read_matrix(text);
    CHECK(back.entries() == a.entries());
    CHECK(back.parity() == 1);
    CHECK(write_matrix_file(back) == text);

    RationalMatrix m(1, 1);
    m.at(0, 0) = make_rational(-3, 7);
    CHECK(write_matrix_file(SeifertMatrix(m, -1)) == "dimension 1\nparity even-q\n-3/7\n");
}

TEST_CASE("matrix files tolerate comments and blank lines") {
    const SeifertMatrix a = read_matrix("# a knot\n\ndimension 1\n  # indented remark\n"
                                        "parity even-q\n\n -2/3 \n");
    CHECK(a.dimension() == 1);
    CHECK(a.parity() == -1);
    CHECK(a.entries().at(0, 0) == make_rational(-2, 3));
}

TEST_CASE("matrix files report malformed input by line and entry") {
    CHECK(testing::error_message<input_error>([] { read_matrix(""); }) ==
          "unexpected end of file, expected a dimension line");
    CHECK(testing::error_message<input_error>([] { read_matrix("dim 2\n"); }) ==
          "line 1: expected \"dimension <n>\"");
    CHECK(testing::error_message<input_error>([] { read_matrix("dimension -1\n"); }) ==
          "line 1: expected a nonnegative dimension, got \"-1\"");
    CHECK(testing::error_message<input_error>(
              [] { read_matrix("dimension 1\nparity odd\n0\n"); }) ==
          "line 2: expected \"parity odd-q\" or \"parity even-q\"");
    CHECK(testing::error_message<input_error>(
              [] { read_matrix("dimension 2\nparity odd-q\n1 2 3\n1 2\n"); }) ==
          "line 3: expected 2 entries, got 3");
    CHECK(testing::error_message<input_error>(
              [] { read_matrix("dimension 2\nparity odd-q\n1 x\n0 1\n"); }) ==
          "line 3: entry (1,2) is not a rational \"p/q\"");
    CHECK(testing::error_message<input_error>(
              [] { read_matrix("dimension 1\nparity odd-q\n1/0\n"); }) ==
          "line 3: entry (1,1) rational with zero denominator: '1/0'");
    CHECK(testing::error_message<input_error>(
              [] { read_matrix("dimension 1\nparity odd-q\n2\nextra\n"); }) ==
          "line 4: unexpected trailing content");
}

TEST_CASE("diagram files round-trip with curves and s3 data") {
    const std::string text = "components 2\nmatrix\n0 1\n1 0\ncurve a 1 0\ncurve b 0 1\n"
                             "s3\n0 2\n2 1/3\n";
    const DiagramData d = read_diagram(text);
    CHECK(d.diagram.components() == 2);
    CHECK(d.curve_names == std::vector<std::string>{"a", "b"});
    REQUIRE(d.curves.size() == 2);
    CHECK(d.curves[0].lk_vector() == std::vector<Integer>{Integer(1), Integer(0)});
    REQUIRE(d.s3_linking.has_value());
    CHECK(d.s3_linking->at(1, 1) == make_rational(1, 3));
    CHECK(write_diagram_file(d) == text);

    const DiagramData bare = read_diagram("components 1\nmatrix\n4\n");
    CHECK(bare.curves.empty());
    CHECK_FALSE(bare.s3_linking.has_value());
    CHECK(write_diagram_file(bare) == "components 1\nmatrix\n4\n");
}

TEST_CASE("diagram files report malformed input by line") {
    CHECK(testing::error_message<input_error>(
              [] { read_diagram("components 1\nrows\n4\n"); }) == "line 2: expected \"matrix\"");
    CHECK(testing::error_message<input_error>(
              [] { read_diagram("components 1\nmatrix\n1/2\n"); }) ==
          "line 3: entry (1,1) must be an integer");
    CHECK(testing::error_message<input_error>(
              [] { read_diagram("components 1\nmatrix\n4\nfoo bar\n"); }) ==
          "line 4: expected \"curve\" or \"s3\", got \"foo\"");
    CHECK(testing::error_message<input_error>(
              [] { read_diagram("components 2\nmatrix\n0 1\n1 0\ncurve a 1\n"); }) ==
          "line 5: expected \"curve <name>\" and 2 linking numbers");
    CHECK(testing::error_message<input_error>([] {
              read_diagram("components 1\nmatrix\n4\ncurve a 1\ncurve b 2\ns3\n0 1\n2 0\n");
          }) == "the s3 linking block must be symmetric");
}

TEST_CASE("angles parse as rational multiples of pi") {
    CHECK(parse_angle_pi("7/33 pi") == make_rational(7, 33));
    CHECK(parse_angle_pi("7/33pi") == make_rational(7, 33));
    CHECK(parse_angle_pi("pi") == Rational(1));
    CHECK(parse_angle_pi("-pi") == Rational(-1));
    CHECK(parse_angle_pi("+pi") == Rational(1));
    CHECK(parse_angle_pi("pi/2") == make_rational(1, 2));
    CHECK(parse_angle_pi("2pi/3") == make_rational(2, 3));
    CHECK(parse_angle_pi("-5 pi / 3") == make_rational(-5, 3));
    CHECK(parse_angle_pi("0") == Rational(0));

    CHECK(testing::error_message<input_error>([] { parse_angle_pi("3/2"); }) ==
          "angle must be a rational multiple of pi, like \"7/33 pi\"");
    CHECK(testing::error_message<input_error>([] { parse_angle_pi("pipi"); }) ==
          "malformed angle \"pipi\"");
    CHECK(testing::error_message<input_error>([] { parse_angle_pi("pi/0"); }) ==
          "malformed angle \"pi/0\"");
    CHECK(testing::error_message<input_error>([] { parse_angle_pi("1.5pi"); }) ==
          "malformed angle \"1.5pi\"");
    CHECK(testing::error_message<input_error>([] { parse_angle_pi("pi/2/3"); }) ==
          "malformed angle \"pi/2/3\"");
}

TEST_CASE("pi multiples format in lowest terms") {
    CHECK(format_pi_multiple(Rational(0)) == "0");
    CHECK(format_pi_multiple(Rational(1)) == "pi");
    CHECK(format_pi_multiple(Rational(-1)) == "-pi");
    CHECK(format_pi_multiple(Rational(2)) == "2pi");
    CHECK(format_pi_multiple(make_rational(1, 2)) == "pi/2");
    CHECK(format_pi_multiple(make_rational(5, 3)) == "5pi/3");
    CHECK(format_pi_multiple(make_rational(-7, 33)) == "-7pi/33");
}

TEST_CASE("breakpoint labels recover pi multiples from tangent form") {
    CHECK(breakpoint_label(Angle::rational_pi(make_rational(5, 3))) == "5pi/3");
    CHECK(breakpoint_label(Angle::rational_pi(Rational(0))) == "0");

    const SignatureProfile prof = signature_profile(testing::trefoil());
    REQUIRE(prof.breakpoints().size() == 2);
    CHECK(prof.breakpoints()[0].kind() == Angle::Kind::tangent);
    CHECK(breakpoint_label(prof.breakpoints()[0]) == "pi/3");
    CHECK(breakpoint_label(prof.breakpoints()[1]) == "5pi/3");

    // an angle that is no rational multiple of pi keeps its algebraic form
    const Angle plain =
        Angle::from_tangent_half(RealAlgebraic::from_rational(make_rational(1, 2)), 0);
    CHECK(breakpoint_label(plain) == "tan(theta/2) = 1/2");
}

TEST_CASE("profile tables pin the trefoil output") {
    CHECK(profile_table(signature_profile(testing::trefoil())) ==
          "breakpoint  left  right  jump\n"
          "pi/3        0     2      2\n"
          "5pi/3       2     0      -2\n");
    CHECK(profile_table(signature_profile(SeifertMatrix(RationalMatrix(2, 2), 1))) ==
          "no breakpoints; sigma = 0 everywhere\n");
    CHECK(profile_table(signature_profile(testing::seifert({{1}}, 1))) ==
          "no breakpoints; sigma = 1 away from theta = 0\n");
}

TEST_CASE("profile plots carry one line per arc and breakpoint") {
    const std::string svg = profile_svg(signature_profile(testing::trefoil()));
    CHECK(svg.starts_with("<svg "));
    CHECK(svg.ends_with("</svg>\n"));
    CHECK(count_of(svg, "class=\"arc\"") == 2);
    CHECK(count_of(svg, "class=\"arc-wrap\"") == 1);
    CHECK(count_of(svg, "class=\"breakpoint\"") == 2);
    CHECK(count_of(svg, ">pi<") == 1); // axis labels are pi-gridded

    const std::string flat = profile_svg(signature_profile(SeifertMatrix(RationalMatrix(1, 1), 1)));
    CHECK(count_of(flat, "class=\"arc\"") == 1);
    CHECK(count_of(flat, "class=\"arc-wrap\"") == 0);
    CHECK(count_of(flat, "class=\"breakpoint\"") == 0);
}

TEST_CASE("random matrices survive a write-read cycle") {
    testing::Rng rng(6101);
    for (int trial = 0; trial < 20; ++trial) {
        const SeifertMatrix a = testing::random_seifert(rng, 4);
        const SeifertMatrix b = read_matrix(write_matrix_file(a));
        CHECK(b.entries() == a.entries());
        CHECK(b.parity() == a.parity());
    }
}

} // namespace
} // namespace qsig
