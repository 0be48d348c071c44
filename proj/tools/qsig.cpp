#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qsig/errors.hpp"
#include "qsig/formats.hpp"
#include "qsig/linkclass.hpp"

namespace {

using namespace qsig;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw input_error("cannot open \"" + path + "\"");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void spill(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out)
        throw input_error("cannot write \"" + path + "\"");
    out << content;
}

SeifertMatrix load_matrix(const std::string& path) {
    std::istringstream in(slurp(path));
    try {
        return read_matrix_file(in);
    } catch (const input_error& e) {
        throw input_error(path + ": " + e.what());
    }
}

DiagramData load_diagram(const std::string& path) {
    std::istringstream in(slurp(path));
    try {
        return read_diagram_file(in);
    } catch (const input_error& e) {
        throw input_error(path + ": " + e.what());
    }
}

std::vector<Integer> parse_integer_list(const std::string& text, const char* what) {
    std::vector<Integer> out;
    std::string token;
    std::istringstream ss(text);
    while (std::getline(ss, token, ',')) {
        const auto r = parse_rational(token);
        if (!r || denominator(*r) != 1)
            throw input_error(std::string("invalid ") + what + " \"" + token + "\"");
        out.push_back(numerator(*r));
    }
    if (out.empty())
        throw input_error(std::string("empty ") + what + " list");
    return out;
}

long curve_index(const DiagramData& d, const std::string& name, const char* what) {
    if (d.curves.empty())
        throw input_error("the diagram has no curve records");
    if (name.empty())
        return 0;
    for (std::size_t k = 0; k < d.curve_names.size(); ++k)
        if (d.curve_names[k] == name)
            return static_cast<long>(k);
    throw input_error(std::string("no curve named \"") + name + "\" for " + what);
}

// The linking matrix a surgery subcommand operates on: induced from the
// curves when the diagram has them, otherwise the surgery matrix itself.
Mat<Rational> subject_matrix(const DiagramData& d) {
    if (!d.curves.empty()) {
        if (!d.s3_linking)
            throw input_error("the diagram has curves but no s3 block");
        return induced_linking_matrix(d.diagram, d.curves, *d.s3_linking);
    }
    Mat<Rational> a(d.diagram.components(), d.diagram.components());
    for (long i = 0; i < a.rows(); ++i)
        for (long j = 0; j < a.cols(); ++j)
            a.at(i, j) = Rational(d.diagram.lk_matrix().at(i, j));
    return a;
}

std::string render_matrix(const Mat<Rational>& m) {
    std::ostringstream out;
    for (long i = 0; i < m.rows(); ++i) {
        for (long j = 0; j < m.cols(); ++j)
            out << (j ? " " : "") << to_string(m.at(i, j));
        out << "\n";
    }
    return out.str();
}

std::string render_matrix(const Mat<Integer>& m) {
    std::ostringstream out;
    for (long i = 0; i < m.rows(); ++i) {
        for (long j = 0; j < m.cols(); ++j)
            out << (j ? " " : "") << m.at(i, j);
        out << "\n";
    }
    return out.str();
}

int run_family(const std::string& parity_word, const std::string& primes_csv, bool eightfold) {
    int parity = 0;
    if (parity_word == "odd")
        parity = 1;
    else if (parity_word == "even")
        parity = -1;
    else
        throw input_error("--parity must be \"odd\" or \"even\"");
    const auto fam =
        independent_family(parity, parse_integer_list(primes_csv, "prime"), eightfold);
    bool all = true;
    for (const FamilyCheck& c : fam.verification_report()) {
        const std::string label = format_pi_multiple(c.theta_pi);
        std::cout << "p=" << c.prime << " delta(" << label << ") = " << c.delta_at_theta
                  << (c.delta_at_theta != 0 ? " nonzero: PASS" : " zero: FAIL") << "\n";
        std::cout << "p=" << c.prime << " delta(" << label << " + 2pi) = " << c.delta_after_turn
                  << (c.delta_after_turn == 0 ? " vanishes: PASS" : " nonzero: FAIL") << "\n";
        all = all && c.passed;
    }
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Signature invariants of links in rational homology spheres"};
    app.require_subcommand(1);

    std::string matrix_path, theta_text, tau_csv, plot_path, out_path;
    std::string diagram_path, x_name, y_name, parity_word, primes_csv;
    std::string complexity_text = "1";
    bool eightfold = false;

    auto* profile_cmd = app.add_subcommand("profile", "Signature profile of a Seifert matrix");
    profile_cmd->add_option("matrix", matrix_path, "matrix file")->required();
    profile_cmd->add_option("--plot", plot_path, "write a step-plot SVG here");
    profile_cmd->add_option("--out", out_path, "write the table here instead of stdout");

    auto* delta_cmd = app.add_subcommand("delta", "Jump of the signature at an exact angle");
    delta_cmd->add_option("matrix", matrix_path, "matrix file")->required();
    delta_cmd->add_option("--theta", theta_text, "angle, a rational multiple of pi like \"1/3 pi\"")
        ->required();
    delta_cmd->add_option("--complexity", complexity_text, "complexity of the link class");
    delta_cmd->add_option("--tau", tau_csv, "type vector, comma-separated integers");

    auto* surgery_cmd = app.add_subcommand("surgery", "Linking data of a surgery diagram");
    surgery_cmd->require_subcommand(1);
    auto* lk_cmd = surgery_cmd->add_subcommand("lk", "linking number of two curves");
    lk_cmd->add_option("diagram", diagram_path, "diagram file")->required();
    lk_cmd->add_option("--x", x_name, "first curve name (default: the first curve)");
    lk_cmd->add_option("--y", y_name, "second curve name (default: the first curve)");
    auto* matrix_cmd = surgery_cmd->add_subcommand("matrix", "induced linking matrix of the curves");
    matrix_cmd->add_option("diagram", diagram_path, "diagram file")->required();
    auto* admits_cmd = surgery_cmd->add_subcommand("admits", "does the link admit the type?");
    admits_cmd->add_option("diagram", diagram_path, "diagram file")->required();
    admits_cmd->add_option("--tau", tau_csv, "type vector")->required();
    auto* framing_cmd = surgery_cmd->add_subcommand("framing", "framing induced by the type");
    framing_cmd->add_option("diagram", diagram_path, "diagram file")->required();
    framing_cmd->add_option("--tau", tau_csv, "type vector")->required();
    auto* realize_cmd =
        surgery_cmd->add_subcommand("realize", "B, V with B^T V^{-1} B the linking matrix");
    realize_cmd->add_option("diagram", diagram_path, "diagram file")->required();

    auto* family_cmd = app.add_subcommand("family", "Independence report for the knot family");
    family_cmd->add_option("--parity", parity_word, "odd or even")->required();
    family_cmd->add_option("--primes", primes_csv, "comma-separated primes > 7")->required();
    family_cmd->add_flag("--eightfold", eightfold, "use eight block-summed copies of the base");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (profile_cmd->parsed()) {
            const SignatureProfile prof = signature_profile(load_matrix(matrix_path));
            const std::string table = profile_table(prof);
            if (out_path.empty())
                std::cout << table;
            else
                spill(out_path, table);
            if (!plot_path.empty())
                spill(plot_path, profile_svg(prof));
        } else if (delta_cmd->parsed()) {
            const SeifertMatrix a = load_matrix(matrix_path);
            const Rational theta_pi = parse_angle_pi(theta_text);
            const auto c = parse_rational(complexity_text);
            if (!c || denominator(*c) != 1 || *c == 0)
                throw input_error("--complexity must be a nonzero integer");
            std::vector<Integer> tau{Integer(1)};
            if (!tau_csv.empty())
                tau = parse_integer_list(tau_csv, "type entry");
            const LinkClass l(TypeVector(tau), numerator(*c), a);
            std::cout << link_delta(l, Angle::rational_pi(theta_pi)) << "\n";
        } else if (lk_cmd->parsed()) {
            const DiagramData d = load_diagram(diagram_path);
            const long i = curve_index(d, x_name, "--x");
            const long j = curve_index(d, y_name, "--y");
            if (!d.s3_linking)
                throw input_error("the diagram has no s3 block");
            std::cout << to_string(lk_sigma(d.diagram, d.curves[static_cast<std::size_t>(i)],
                                            d.curves[static_cast<std::size_t>(j)],
                                            d.s3_linking->at(i, j)))
                      << "\n";
        } else if (matrix_cmd->parsed()) {
            const DiagramData d = load_diagram(diagram_path);
            if (d.curves.empty() || !d.s3_linking)
                throw input_error("the matrix subcommand needs curves and an s3 block");
            std::cout << render_matrix(
                induced_linking_matrix(d.diagram, d.curves, *d.s3_linking));
        } else if (admits_cmd->parsed()) {
            const Mat<Rational> a = subject_matrix(load_diagram(diagram_path));
            const TypeVector tau(parse_integer_list(tau_csv, "type entry"));
            std::cout << (admits_type(a, tau) ? "yes" : "no") << "\n";
        } else if (framing_cmd->parsed()) {
            const Mat<Rational> a = subject_matrix(load_diagram(diagram_path));
            const TypeVector tau(parse_integer_list(tau_csv, "type entry"));
            const auto d = framing_for_type(a, tau);
            if (!d) {
                std::cout << "none\n";
            } else {
                std::cout << "D = diag(";
                for (std::size_t k = 0; k < d->size(); ++k)
                    std::cout << (k ? "," : "") << (*d)[k];
                std::cout << ")\n";
            }
        } else if (realize_cmd->parsed()) {
            const Realization r = realize_linking_matrix(subject_matrix(load_diagram(diagram_path)));
            std::cout << "B =\n" << render_matrix(r.b) << "V =\n" << render_matrix(r.v);
        } else if (family_cmd->parsed()) {
            return run_family(parity_word, primes_csv, eightfold);
        }
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const precondition_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const precision_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
