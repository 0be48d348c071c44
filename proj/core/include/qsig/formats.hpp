#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qsig/linkclass.hpp"

namespace qsig {

// Text format for a Seifert matrix:
//
//   dimension 2
//   parity odd-q
//   1 1
//   0 1
//
// Blank lines and lines starting with '#' are ignored on input.  parity is
// "odd-q" (eps = +1) or "even-q" (eps = -1); entries are rationals "p/q".
// Parse errors carry the line number and the entry position.
SeifertMatrix read_matrix_file(std::istream& in);
std::string write_matrix_file(const SeifertMatrix& a);

// Text format for a surgery description plus optional curves:
//
//   components 2
//   matrix
//   3 0
//   0 4
//   curve x 1 0
//   curve y 0 1
//   s3
//   0 1/2
//   1/2 3
//
// The matrix block holds the integer linking matrix of the surgery link with
// framings on the diagonal.  Each curve line gives a name and the linking
// numbers with the surgery components; the optional s3 block gives the
// pairwise S^3 linking numbers of the curves, framings on its diagonal.
struct DiagramData {
    FramedLinkDiagram diagram;
    std::vector<std::string> curve_names;
    std::vector<CurveClass> curves;
    std::optional<Mat<Rational>> s3_linking;
};

DiagramData read_diagram_file(std::istream& in);
std::string write_diagram_file(const DiagramData& d);

// "7/33 pi", "2pi", "pi/3", "-pi", "0" -> the multiple of pi as a rational.
Rational parse_angle_pi(const std::string& text);

// Canonical rendering of r*pi: "0", "pi/3", "5pi/3", "-pi", "2pi".
std::string format_pi_multiple(const Rational& r);

// Exact label of an angle: the pi-multiple form when rational, otherwise the
// defining polynomial and isolating interval of tan(theta/2).
std::string breakpoint_label(const Angle& theta);

// Table with one row per breakpoint (label, left value, right value, jump),
// or a constant-value annotation when there is no breakpoint.
std::string profile_table(const SignatureProfile& prof);

// Step plot of sigma over [0, 2 pi) as a standalone SVG: one horizontal
// line of class "arc" per arc (a wrapped tail uses class "arc-wrap"), one
// dashed vertical line of class "breakpoint" per breakpoint.
std::string profile_svg(const SignatureProfile& prof);

} // namespace qsig
