#include "diracbrush/cli.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "diracbrush/brush.hpp"
#include "diracbrush/gauss_oracle.hpp"
#include "diracbrush/mu_reduction.hpp"
#include "diracbrush/simd/kernels.hpp"
#include "diracbrush/spiral.hpp"
#include "diracbrush/theta_engine.hpp"

namespace diracbrush {

namespace {

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char sep)
{
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, sep)) parts.push_back(cur);
    if (!text.empty() && text.back() == sep) parts.emplace_back();
    return parts;
}

Integer parse_integer(const std::string& text)
{
    Integer v;
    std::string t = text;
    if (!t.empty() && t.front() == '+') t.erase(0, 1);
    if (t.empty() || v.set_str(t, 10) != 0) throw ParseError("not an integer: '" + text + "'");
    return v;
}

double parse_double(const std::string& text)
{
    double v = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    if (first != last && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || first == last) throw ParseError("not a number: '" + text + "'");
    return v;
}

std::vector<std::string> fields(const std::string& text, std::size_t count, const char* what)
{
    std::vector<std::string> parts = split(text, ',');
    if (parts.size() != count)
        throw ParseError(std::string(what) + " needs " + std::to_string(count) + " comma-separated values: '" + text + "'");
    return parts;
}

SL2Z parse_matrix(const std::string& text)
{
    const auto f = fields(text, 4, "matrix");
    return SL2Z(parse_integer(f[0]), parse_integer(f[1]), parse_integer(f[2]), parse_integer(f[3]));
}

ShiftClass parse_shift(const std::string& text)
{
    const auto f = fields(text, 2, "shift");
    return {parse_integer(f[0]), parse_integer(f[1])};
}

ComplexF parse_complex(const std::string& text)
{
    const auto f = fields(text, 2, "complex number");
    return {parse_double(f[0]), parse_double(f[1])};
}

CotValue parse_cot(const std::string& text)
{
    if (text == "inf" || text == "infinity") return CotValue::infinite();
    if (text == "irrational" || text == "sqrt2" || text == "sqrt3" || text == "golden" || text == "pi")
        return CotValue::irrational();
    return CotValue::finite(Rational::parse(text));
}

std::string num(double v)
{
    if (v == 0) v = 0;  // no "-0"
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
    return std::string(buf, res.ptr);
}

// Writes to --csv PATH when given, otherwise to stdout.
void emit(const std::string& path, std::ostream& out, const std::function<void(std::ostream&)>& body)
{
    if (path.empty()) {
        body(out);
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw IoError("cannot open " + path);
    body(file);
    if (!file) throw IoError("write failed: " + path);
}

void write_trace(std::ostream& os, const std::vector<TraceRow>& rows)
{
    os << "X,re,im\n";
    for (const TraceRow& r : rows) os << num(r.x) << ',' << num(r.re) << ',' << num(r.im) << '\n';
}

struct Options {
    std::string backend;
    std::string matrix, shift, z, tau = "0,1";
    std::string cot, rsq = "1";
    long branch = 0;
    std::string kmin = "0", kmax = "10";
    std::string csv;
    bool json = false;
    double xmax = 1.0;
    int samples = 201;
    double tol = 1e-16;
    std::string window = "0,1,0,1";
    double step = 0.05;
    std::string target;
    int depth = 8;
    std::string trace_dir;
};

void cmd_mu(const Options& o, std::ostream& out)
{
    const SL2Z m = parse_matrix(o.matrix);
    const ShiftClass s = parse_shift(o.shift);
    require_parity(m, s);
    const EighthRoot mu = mu_reduce(m, s).mu;
    const GaussMu g = gauss_sum_mu(m, s);
    const bool agrees = g.root == mu;
    const ComplexF v = mu.value();
    if (o.json) {
        nlohmann::ordered_json j;
        j["k8"] = mu.k();
        j["mu_re"] = v.real();
        j["mu_im"] = v.imag();
        j["oracle_agrees"] = agrees;
        out << j.dump() << '\n';
        return;
    }
    out << "k8 " << mu.k() << '\n'
        << "mu " << num(v.real()) << ',' << num(v.imag()) << '\n'
        << "oracle " << num(g.value.real()) << ',' << num(g.value.imag()) << '\n'
        << "oracle_agrees " << (agrees ? "true" : "false") << '\n';
}

BrushSpec brush_from(const Options& o)
{
    return brush_spec(alpha_from_cot(parse_cot(o.cot), Rational::parse(o.rsq), o.branch));
}

void cmd_brush(const Options& o, std::ostream& out)
{
    const BrushSpec spec = brush_from(o);
    const Integer lo = parse_integer(o.kmin), hi = parse_integer(o.kmax);
    if (hi < lo) throw DomainError("kmax < kmin");
    const std::vector<double> phases = coefficient_phases(spec, lo, hi);
    const double mag = std::pow(spec.s_sq.to_double(), -0.25);
    const double s = spec.s();
    const double half_q = spec.shift.q.get_d() / 2.0;
    emit(o.csv, out, [&](std::ostream& os) {
        os << "n,position,re,im\n";
        Integer n = lo;
        for (double phi : phases) {
            const ComplexF c = mag * cispi(phi);
            os << n.get_str() << ',' << num((n.get_d() + half_q) / s) << ',' << num(c.real()) << ',' << num(c.imag())
               << '\n';
            ++n;
        }
    });
}

void cmd_trace(const Options& o, std::ostream& out)
{
    const BrushSpec spec = brush_from(o);
    const auto rows = antiderivative_trace(spec, o.xmax, o.samples);
    emit(o.csv, out, [&](std::ostream& os) { write_trace(os, rows); });
}

void cmd_theta(const Options& o, std::ostream& out)
{
    const SL2Z m = parse_matrix(o.matrix);
    const ShiftClass s = parse_shift(o.shift);
    const FunctionalEquation fe = functional_equation(m, s, parse_complex(o.z), parse_complex(o.tau), o.tol);
    if (o.json) {
        nlohmann::ordered_json j;
        j["lhs_re"] = fe.lhs.real();
        j["lhs_im"] = fe.lhs.imag();
        j["rhs_re"] = fe.rhs.real();
        j["rhs_im"] = fe.rhs.imag();
        j["residual"] = fe.residual;
        out << j.dump() << '\n';
        return;
    }
    out << "lhs " << num(fe.lhs.real()) << ',' << num(fe.lhs.imag()) << '\n'
        << "rhs " << num(fe.rhs.real()) << ',' << num(fe.rhs.imag()) << '\n'
        << "residual " << num(fe.residual) << '\n';
}

void cmd_bargmann(const Options& o, std::ostream& out)
{
    const auto w = fields(o.window, 4, "window");
    const auto rows = bargmann_grid(parse_double(w[0]), parse_double(w[1]), parse_double(w[2]), parse_double(w[3]),
                                    o.step, Rational::parse(o.rsq));
    emit(o.csv, out, [&](std::ostream& os) {
        os << "re_z,im_z,mass,phase\n";
        for (const GridRow& r : rows)
            os << num(r.re_z) << ',' << num(r.im_z) << ',' << num(r.mass) << ',' << num(r.phase) << '\n';
    });
}

void cmd_fresnel(const Options& o, std::ostream& out)
{
    if (o.samples < 2) throw DomainError("need at least two samples");
    const int last = o.samples - 1;
    std::vector<TraceRow> rows;
    for (int i = 0; i < o.samples; ++i) {
        const double x = o.xmax * (2 * i - last) / last;
        const ComplexF v = fresnel_S(x);
        rows.push_back({x, v.real(), v.imag()});
    }
    emit(o.csv, out, [&](std::ostream& os) { write_trace(os, rows); });
}

void cmd_approx(const Options& o, std::ostream& out)
{
    const auto conv = continued_fraction_convergents(o.target, o.depth);
    out << "index,p,q\n";
    for (const Convergent& c : conv) out << c.index << ',' << c.p.get_str() << ',' << c.q.get_str() << '\n';
    if (o.trace_dir.empty()) return;
    std::filesystem::create_directories(o.trace_dir);
    for (const Convergent& c : conv) {
        if (c.q == 0) continue;
        const BrushSpec spec = brush_spec(alpha_from_cot(CotValue::finite(Rational(c.p, c.q)), Rational::parse(o.rsq)));
        const auto rows = antiderivative_trace(spec, o.xmax, o.samples);
        const std::string path =
            (std::filesystem::path(o.trace_dir) / ("trace_" + c.p.get_str() + "_" + c.q.get_str() + ".csv")).string();
        emit(path, out, [&](std::ostream& os) { write_trace(os, rows); });
    }
}

void cmd_classify(const Options& o, std::ostream& out)
{
    const SupportClass sc = classify_support(parse_cot(o.cot), Rational::parse(o.rsq));
    if (sc.discrete)
        out << "discrete a=" << sc.a.get_str() << " b=" << sc.b.get_str() << '\n';
    else
        out << "dense\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Dirac brush toolkit: fractional Fourier transforms of Dirac combs", "diracbrush"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--backend", o.backend, "Kernel backend: scalar or avx2")->check(CLI::IsMember({"scalar", "avx2"}));

    auto* mu = app.add_subcommand("mu", "theta multiplier mu(M; q, p)");
    mu->add_option("--matrix", o.matrix, "a,b,c,d")->required();
    mu->add_option("--shift", o.shift, "q,p")->required();
    mu->add_flag("--json", o.json);

    auto add_cot = [&](CLI::App* sub) {
        sub->add_option("--cot", o.cot, "cot(pi alpha/2) as p/q, decimal, or inf")->required();
        sub->add_option("--rsq", o.rsq, "r^2 as a rational");
        sub->add_option("--branch", o.branch, "alpha branch (odd flips the sign)");
    };

    auto* brush = app.add_subcommand("brush", "brush coefficients");
    add_cot(brush);
    brush->add_option("--kmin", o.kmin);
    brush->add_option("--kmax", o.kmax);
    brush->add_option("--csv", o.csv);

    auto* trace = app.add_subcommand("trace", "antiderivative trace Pi(X)");
    add_cot(trace);
    trace->add_option("--xmax", o.xmax);
    trace->add_option("--samples", o.samples);
    trace->add_option("--csv", o.csv);

    auto* theta = app.add_subcommand("theta", "theta functional equation check");
    theta->add_option("--matrix", o.matrix)->required();
    theta->add_option("--shift", o.shift)->required();
    theta->add_option("--z", o.z, "re,im")->required();
    theta->add_option("--tau", o.tau, "re,im");
    theta->add_option("--tol", o.tol);
    theta->add_flag("--json", o.json);

    auto* barg = app.add_subcommand("bargmann", "normalized Bargmann mass of a comb");
    barg->add_option("--rsq", o.rsq);
    barg->add_option("--window", o.window, "re_lo,re_hi,im_lo,im_hi");
    barg->add_option("--step", o.step);
    barg->add_option("--csv", o.csv);

    auto* fres = app.add_subcommand("fresnel", "Fresnel integral S(X)");
    fres->add_option("--xmax", o.xmax);
    fres->add_option("--samples", o.samples);
    fres->add_option("--csv", o.csv);

    auto* approx = app.add_subcommand("approx", "continued-fraction convergents");
    approx->add_option("--target", o.target, "sqrt2, sqrt3, golden, pi, or a decimal")->required();
    approx->add_option("--depth", o.depth);
    approx->add_option("--trace-dir", o.trace_dir, "write trace_<p>_<q>.csv for each convergent");
    approx->add_option("--rsq", o.rsq);
    approx->add_option("--xmax", o.xmax);
    approx->add_option("--samples", o.samples);

    auto* classify = app.add_subcommand("classify", "discrete or dense support");
    classify->add_option("--cot", o.cot)->required();
    classify->add_option("--rsq", o.rsq);

    const auto fail = [&](const char* kind, const std::string& what, int code) {
        std::string line = what;
        std::replace(line.begin(), line.end(), '\n', ' ');
        err << "error[" << kind << "]: " << line << '\n';
        return code;
    };

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(std::move(rev));
        if (o.backend == "scalar") simd::set_backend(simd::Backend::scalar);
        if (o.backend == "avx2") simd::set_backend(simd::Backend::avx2);

        if (mu->parsed()) cmd_mu(o, out);
        else if (brush->parsed()) cmd_brush(o, out);
        else if (trace->parsed()) cmd_trace(o, out);
        else if (theta->parsed()) cmd_theta(o, out);
        else if (barg->parsed()) cmd_bargmann(o, out);
        else if (fres->parsed()) cmd_fresnel(o, out);
        else if (approx->parsed()) cmd_approx(o, out);
        else if (classify->parsed()) cmd_classify(o, out);
        return 0;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        return fail("parse", e.what(), 2);
    } catch (const ParseError& e) {
        return fail("parse", e.what(), 2);
    } catch (const ParityError& e) {
        return fail("parity", e.what(), 2);
    } catch (const DeterminantError& e) {
        return fail("determinant", e.what(), 3);
    } catch (const DomainError& e) {
        return fail("domain", e.what(), 3);
    } catch (const NumericalError& e) {
        return fail("numerical", e.what(), 4);
    } catch (const IoError& e) {
        return fail("io", e.what(), 1);
    } catch (const std::filesystem::filesystem_error& e) {
        return fail("io", e.what(), 1);
    }
}

}  // namespace diracbrush
