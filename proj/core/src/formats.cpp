#include "qsig/formats.hpp"

#include <algorithm>
#include <array>
#include <iomanip>
#include <istream>
#include <numbers>
#include <sstream>

#include "qsig/algebraic.hpp"
#include "qsig/errors.hpp"

namespace qsig {

namespace {

// Input lines with their 1-based numbers, comments and blanks dropped.
struct Lines {
    std::vector<std::pair<long, std::string>> v;
    std::size_t next = 0;

    explicit Lines(std::istream& in) {
        std::string line;
        long number = 0;
        while (std::getline(in, line)) {
            ++number;
            const auto start = line.find_first_not_of(" \t\r");
            if (start == std::string::npos || line[start] == '#')
                continue;
            v.emplace_back(number, line);
        }
    }

    bool done() const { return next >= v.size(); }
    const std::pair<long, std::string>& take(const char* what) {
        if (done())
            throw input_error(std::string("unexpected end of file, expected ") + what);
        return v[next++];
    }
};

std::vector<std::string> split_tokens(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    std::string t;
    while (ss >> t)
        out.push_back(t);
    return out;
}

std::string at_line(long number) { return "line " + std::to_string(number) + ": "; }

long parse_count(const std::string& token, long line, const char* what) {
    try {
        std::size_t used = 0;
        const long n = std::stol(token, &used);
        if (used != token.size() || n < 0)
            throw input_error("");
        return n;
    } catch (...) {
        throw input_error(at_line(line) + "expected a nonnegative " + what + ", got \"" + token +
                          "\"");
    }
}

Rational parse_entry(const std::string& token, long line, long i, long j) {
    const std::string where = at_line(line) + "entry (" + std::to_string(i + 1) + "," +
                              std::to_string(j + 1) + ")";
    try {
        const auto r = parse_rational(token);
        if (!r)
            throw input_error("is not a rational \"p/q\"");
        return *r;
    } catch (const input_error& e) {
        throw input_error(where + " " + e.what());
    }
}

Mat<Rational> parse_rational_rows(Lines& lines, long rows, long cols, const char* what) {
    Mat<Rational> m(rows, cols);
    for (long i = 0; i < rows; ++i) {
        const auto& [number, line] = lines.take(what);
        const auto tokens = split_tokens(line);
        if (static_cast<long>(tokens.size()) != cols)
            throw input_error(at_line(number) + "expected " + std::to_string(cols) + " entries, got " +
                              std::to_string(tokens.size()));
        for (long j = 0; j < cols; ++j)
            m.at(i, j) = parse_entry(tokens[static_cast<std::size_t>(j)], number, i, j);
    }
    return m;
}

Integer integer_entry(const Rational& r, long line, long i, long j) {
    if (denominator(r) != 1)
        throw input_error(at_line(line) + "entry (" + std::to_string(i + 1) + "," +
                          std::to_string(j + 1) + ") must be an integer");
    return numerator(r);
}

} // namespace

SeifertMatrix read_matrix_file(std::istream& in) {
    Lines lines(in);

    const auto& [dim_no, dim_line] = lines.take("a dimension line");
    const auto dim_tokens = split_tokens(dim_line);
    if (dim_tokens.size() != 2 || dim_tokens[0] != "dimension")
        throw input_error(at_line(dim_no) + "expected \"dimension <n>\"");
    const long dim = parse_count(dim_tokens[1], dim_no, "dimension");

    const auto& [par_no, par_line] = lines.take("a parity line");
    const auto par_tokens = split_tokens(par_line);
    if (par_tokens.size() != 2 || par_tokens[0] != "parity" ||
        (par_tokens[1] != "odd-q" && par_tokens[1] != "even-q"))
        throw input_error(at_line(par_no) + "expected \"parity odd-q\" or \"parity even-q\"");
    const int parity = par_tokens[1] == "odd-q" ? 1 : -1;

    Mat<Rational> entries = parse_rational_rows(lines, dim, dim, "a matrix row");
    if (!lines.done())
        throw input_error(at_line(lines.v[lines.next].first) + "unexpected trailing content");
    return SeifertMatrix(std::move(entries), parity);
}

std::string write_matrix_file(const SeifertMatrix& a) {
    std::ostringstream out;
    out << "dimension " << a.dimension() << "\n";
    out << "parity " << (a.parity() > 0 ? "odd-q" : "even-q") << "\n";
    for (long i = 0; i < a.dimension(); ++i) {
        for (long j = 0; j < a.dimension(); ++j)
            out << (j ? " " : "") << to_string(a.entries().at(i, j));
        out << "\n";
    }
    return out.str();
}

DiagramData read_diagram_file(std::istream& in) {
    Lines lines(in);

    const auto& [comp_no, comp_line] = lines.take("a components line");
    const auto comp_tokens = split_tokens(comp_line);
    if (comp_tokens.size() != 2 || comp_tokens[0] != "components")
        throw input_error(at_line(comp_no) + "expected \"components <n>\"");
    const long m = parse_count(comp_tokens[1], comp_no, "component count");

    const auto& [mat_no, mat_line] = lines.take("a matrix block");
    if (split_tokens(mat_line) != std::vector<std::string>{"matrix"})
        throw input_error(at_line(mat_no) + "expected \"matrix\"");
    Mat<Integer> lk(m, m);
    for (long i = 0; i < m; ++i) {
        const auto& [number, line] = lines.take("a matrix row");
        const auto tokens = split_tokens(line);
        if (static_cast<long>(tokens.size()) != m)
            throw input_error(at_line(number) + "expected " + std::to_string(m) + " entries, got " +
                              std::to_string(tokens.size()));
        for (long j = 0; j < m; ++j)
            lk.at(i, j) =
                integer_entry(parse_entry(tokens[static_cast<std::size_t>(j)], number, i, j),
                              number, i, j);
    }

    DiagramData d{FramedLinkDiagram(std::move(lk)), {}, {}, std::nullopt};
    while (!lines.done()) {
        const auto& [number, line] = lines.v[lines.next];
        const auto tokens = split_tokens(line);
        if (tokens[0] == "curve") {
            ++lines.next;
            if (static_cast<long>(tokens.size()) != m + 2)
                throw input_error(at_line(number) + "expected \"curve <name>\" and " +
                                  std::to_string(m) + " linking numbers");
            std::vector<Integer> v;
            for (long j = 0; j < m; ++j)
                v.push_back(integer_entry(
                    parse_entry(tokens[static_cast<std::size_t>(j + 2)], number, 0, j), number, 0,
                    j));
            d.curve_names.push_back(tokens[1]);
            d.curves.push_back(CurveClass(std::move(v)));
        } else if (tokens == std::vector<std::string>{"s3"}) {
            ++lines.next;
            const long k = static_cast<long>(d.curves.size());
            Mat<Rational> s3 = parse_rational_rows(lines, k, k, "an s3 row");
            for (long i = 0; i < k; ++i)
                for (long j = i + 1; j < k; ++j)
                    if (s3.at(i, j) != s3.at(j, i))
                        throw input_error("the s3 linking block must be symmetric");
            d.s3_linking = std::move(s3);
            break;
        } else {
            throw input_error(at_line(number) + "expected \"curve\" or \"s3\", got \"" + tokens[0] +
                              "\"");
        }
    }
    if (!lines.done())
        throw input_error(at_line(lines.v[lines.next].first) + "unexpected trailing content");
    return d;
}

std::string write_diagram_file(const DiagramData& d) {
    std::ostringstream out;
    const long m = d.diagram.components();
    out << "components " << m << "\n";
    out << "matrix\n";
    for (long i = 0; i < m; ++i) {
        for (long j = 0; j < m; ++j)
            out << (j ? " " : "") << d.diagram.lk_matrix().at(i, j);
        out << "\n";
    }
    for (std::size_t k = 0; k < d.curves.size(); ++k) {
        out << "curve " << d.curve_names[k];
        for (const Integer& z : d.curves[k].lk_vector())
            out << " " << z;
        out << "\n";
    }
    if (d.s3_linking) {
        out << "s3\n";
        for (long i = 0; i < d.s3_linking->rows(); ++i) {
            for (long j = 0; j < d.s3_linking->cols(); ++j)
                out << (j ? " " : "") << to_string(d.s3_linking->at(i, j));
            out << "\n";
        }
    }
    return out.str();
}

Rational parse_angle_pi(const std::string& text) {
    std::string s;
    for (char c : text)
        if (c != ' ' && c != '\t')
            s += c;
    const auto number = [&](const std::string& part) {
        const auto r = parse_rational(part);
        if (!r)
            throw input_error("malformed angle \"" + text + "\"");
        return *r;
    };
    const auto pos = s.find("pi");
    if (pos == std::string::npos) {
        if (number(s) != 0)
            throw input_error("angle must be a rational multiple of pi, like \"7/33 pi\"");
        return Rational(0);
    }
    if (s.find("pi", pos + 1) != std::string::npos)
        throw input_error("malformed angle \"" + text + "\"");
    const std::string left = s.substr(0, pos);
    const std::string right = s.substr(pos + 2);
    Rational value;
    if (left.empty() || left == "+")
        value = 1;
    else if (left == "-")
        value = -1;
    else
        value = number(left);
    if (!right.empty()) {
        if (right[0] != '/')
            throw input_error("malformed angle \"" + text + "\"");
        const Rational q = number(right.substr(1));
        if (q == 0 || denominator(q) != 1)
            throw input_error("malformed angle \"" + text + "\"");
        value /= q;
    }
    return value;
}

std::string format_pi_multiple(const Rational& r) {
    if (r == 0)
        return "0";
    const Integer& num = numerator(r);
    std::string s;
    if (num == -1)
        s = "-pi";
    else if (num == 1)
        s = "pi";
    else
        s = num.get_str() + "pi";
    if (denominator(r) != 1)
        s += "/" + denominator(r).get_str();
    return s;
}

std::string breakpoint_label(const Angle& theta) {
    if (theta.kind() == Angle::Kind::rational_pi)
        return format_pi_multiple(theta.pi_multiple());
    // Angles at rational multiples of pi mostly carry irrational tangents, so
    // they are stored in tangent form; recover the multiple for display by
    // guessing it from a float approximation and certifying the guess
    // exactly.  A rational tangent can be skipped outright: on the rational-pi
    // grid the only rational tangents are 0 and +-1, and those angles are
    // normalized to rational-pi form on construction.  The denominator bound
    // keeps the certification polynomials small; profile breakpoints have tiny
    // denominators, so a larger guess means the angle is off the grid and the
    // faithful algebraic label is the right answer anyway.
    if (theta.tangent_half().is_rational())
        return "tan(theta/2) = " + theta.tangent_half().to_string();
    const double approx = theta.approx_radians() / std::numbers::pi;
    const Rational guess = simplest_rational_between(ArcBound::at(Rational(approx - 1e-9)),
                                                     ArcBound::at(Rational(approx + 1e-9)));
    try {
        if (denominator(guess) <= 1000 && equal_canonical(theta, Angle::rational_pi(guess)))
            return format_pi_multiple(guess);
    } catch (const precision_error&) {
        // an undecided comparison only means the guess was wrong
    }
    return "tan(theta/2) = " + theta.tangent_half().to_string();
}

std::string profile_table(const SignatureProfile& prof) {
    std::ostringstream out;
    const auto& bps = prof.breakpoints();
    if (bps.empty()) {
        if (prof.is_identically_zero())
            out << "no breakpoints; sigma = 0 everywhere\n";
        else
            out << "no breakpoints; sigma = " << prof.constant_value()
                << " away from theta = 0\n";
        return out.str();
    }
    std::vector<std::array<std::string, 4>> rows;
    rows.push_back({"breakpoint", "left", "right", "jump"});
    const std::size_t n = bps.size();
    for (std::size_t k = 0; k < n; ++k) {
        const long right = prof.interval_values()[k];
        const long left = prof.interval_values()[(k + n - 1) % n];
        rows.push_back({breakpoint_label(bps[k]), std::to_string(left), std::to_string(right),
                        std::to_string(prof.jumps()[k])});
    }
    std::array<std::size_t, 4> width{};
    for (const auto& row : rows)
        for (std::size_t c = 0; c < 4; ++c)
            width[c] = std::max(width[c], row[c].size());
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < 4; ++c) {
            if (c)
                out << "  ";
            out << row[c];
            if (c + 1 < 4)
                out << std::string(width[c] - row[c].size(), ' ');
        }
        out << "\n";
    }
    return out.str();
}

namespace {

std::string fmt(double x) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(2) << x;
    return out.str();
}

} // namespace

std::string profile_svg(const SignatureProfile& prof) {
    constexpr double width = 800, height = 400;
    constexpr double left = 60, right = 780, top = 30, bottom = 360;
    constexpr double two_pi = 6.283185307179586;

    long lo = 0, hi = 0;
    for (long v : prof.interval_values()) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    hi = std::max(hi, prof.constant_value() + 1);
    lo = std::min(lo, prof.constant_value() - 1);

    const auto x_of = [&](double theta) {
        return left + (right - left) * theta / two_pi;
    };
    const auto y_of = [&](double v) {
        return bottom - (bottom - top) * (v - static_cast<double>(lo)) /
                            static_cast<double>(hi - lo);
    };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    out << "  <rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
    // axes with pi-gridded x labels
    out << "  <line class=\"axis\" x1=\"" << fmt(left) << "\" y1=\"" << fmt(y_of(0)) << "\" x2=\""
        << fmt(right) << "\" y2=\"" << fmt(y_of(0)) << "\" stroke=\"#999\"/>\n";
    const char* labels[5] = {"0", "pi/2", "pi", "3pi/2", "2pi"};
    for (int k = 0; k <= 4; ++k) {
        const double x = x_of(two_pi * k / 4);
        out << "  <line class=\"tick\" x1=\"" << fmt(x) << "\" y1=\"" << fmt(bottom) << "\" x2=\""
            << fmt(x) << "\" y2=\"" << fmt(bottom + 6) << "\" stroke=\"#333\"/>\n";
        out << "  <text x=\"" << fmt(x) << "\" y=\"" << fmt(bottom + 22)
            << "\" text-anchor=\"middle\" font-size=\"13\">" << labels[k] << "</text>\n";
    }
    for (long v = lo; v <= hi; ++v) {
        out << "  <text x=\"" << fmt(left - 10) << "\" y=\"" << fmt(y_of(v) + 4)
            << "\" text-anchor=\"end\" font-size=\"13\">" << v << "</text>\n";
    }

    const auto arc_line = [&](const char* cls, double t0, double t1, long v) {
        out << "  <line class=\"" << cls << "\" x1=\"" << fmt(x_of(t0)) << "\" y1=\""
            << fmt(y_of(v)) << "\" x2=\"" << fmt(x_of(t1)) << "\" y2=\"" << fmt(y_of(v))
            << "\" stroke=\"#0057b7\" stroke-width=\"2.5\"/>\n";
    };

    const auto& bps = prof.breakpoints();
    if (bps.empty()) {
        arc_line("arc", 0, two_pi, prof.constant_value());
    } else {
        std::vector<double> theta;
        for (const Angle& b : bps)
            theta.push_back(b.approx_radians());
        const std::size_t n = theta.size();
        for (std::size_t k = 0; k + 1 < n; ++k)
            arc_line("arc", theta[k], theta[k + 1], prof.interval_values()[k]);
        // final arc wraps past 2 pi back to the first breakpoint
        arc_line("arc", theta[n - 1], two_pi, prof.interval_values()[n - 1]);
        if (theta[0] > 0)
            arc_line("arc-wrap", 0, theta[0], prof.interval_values()[n - 1]);
        for (std::size_t k = 0; k < n; ++k) {
            out << "  <line class=\"breakpoint\" x1=\"" << fmt(x_of(theta[k])) << "\" y1=\""
                << fmt(top) << "\" x2=\"" << fmt(x_of(theta[k])) << "\" y2=\"" << fmt(bottom)
                << "\" stroke=\"#c33\" stroke-width=\"1\" stroke-dasharray=\"5,4\"/>\n";
        }
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace qsig
