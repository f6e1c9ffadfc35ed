#include "halfstat/multiport.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace halfstat {

Multiport Multiport::from_matrix(const ComplexMatrix& entries, double tol) {
    if (!entries.is_square())
        throw ShapeError("multiport matrix must be square");
    if (!entries.all_finite())
        throw ValidationError("multiport matrix has non-finite entries",
                              std::numeric_limits<double>::infinity());
    const double dev = unitarity_deviation(entries);
    if (dev > tol)
        throw ValidationError("matrix is not unitary (max deviation " +
                                  std::to_string(dev) + ")",
                              dev);
    return Multiport(static_cast<int>(entries.rows()), entries);
}

Multiport beam_splitter(int d, const BeamSplitterParams& p) {
    if (p.mode_i == p.mode_j)
        throw std::invalid_argument("beam splitter modes must differ");
    if (p.mode_i < 1 || p.mode_j < 1 || p.mode_i > d || p.mode_j > d)
        throw ShapeError("beam splitter mode index out of range");
    const Complex phase = std::polar(1.0, p.phase);
    const Complex t = phase * std::cos(p.theta);
    const Complex r = Complex(0, 1) * phase * std::sin(p.theta);
    ComplexMatrix m = ComplexMatrix::identity(static_cast<std::size_t>(d));
    const std::size_t a = static_cast<std::size_t>(p.mode_i - 1);
    const std::size_t b = static_cast<std::size_t>(p.mode_j - 1);
    m(a, a) = t;
    m(a, b) = r;
    m(b, a) = r;
    m(b, b) = t;
    return Multiport::from_matrix(m);
}

Multiport compose(const CircuitSpec& spec) {
    if (spec.dim < 1) throw ShapeError("circuit dim must be positive");
    ComplexMatrix total =
        ComplexMatrix::identity(static_cast<std::size_t>(spec.dim));
    // first listed stage acts first: total = U_n ... U_2 U_1
    for (const auto& stage : spec.stages)
        total = beam_splitter(spec.dim, stage).matrix() * total;
    return Multiport::from_matrix(total);
}

namespace {

struct Token {
    std::string text;
    int column;  // 1-based
};

std::vector<Token> tokenize_line(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        if (line[i] == '#') break;
        std::size_t start = i;
        while (i < line.size() &&
               !std::isspace(static_cast<unsigned char>(line[i])) &&
               line[i] != '#')
            ++i;
        out.push_back({line.substr(start, i - start),
                       static_cast<int>(start) + 1});
    }
    return out;
}

int parse_int(const Token& tok, int line_no, const char* what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.text.data(),
                                     tok.text.data() + tok.text.size(), value);
    if (ec != std::errc{} || ptr != tok.text.data() + tok.text.size())
        throw ParseError(std::string("expected integer ") + what + ", got '" +
                             tok.text + "'",
                         line_no, tok.column);
    return value;
}

double parse_keyed_float(const Token& tok, const std::string& key,
                         int line_no) {
    const std::string prefix = key + "=";
    if (tok.text.rfind(prefix, 0) != 0)
        throw ParseError("expected '" + key + "=<radians>', got '" + tok.text +
                             "'",
                         line_no, tok.column);
    const std::string num = tok.text.substr(prefix.size());
    try {
        std::size_t pos = 0;
        double v = std::stod(num, &pos);
        if (pos != num.size()) throw std::invalid_argument(num);
        return v;
    } catch (const std::exception&) {
        throw ParseError("non-numeric value for '" + key + "': '" + num + "'",
                         line_no, tok.column);
    }
}

}  // namespace

CircuitSpec parse_circuit(const std::string& text) {
    CircuitSpec spec;
    bool have_dim = false;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto toks = tokenize_line(line);
        if (toks.empty()) continue;
        if (!have_dim) {
            if (toks[0].text != "dim")
                throw ParseError("first directive must be 'dim <d>'", line_no,
                                 toks[0].column);
            if (toks.size() != 2)
                throw ParseError("'dim' takes exactly one argument", line_no,
                                 toks[0].column);
            spec.dim = parse_int(toks[1], line_no, "dimension");
            if (spec.dim < 1)
                throw ParseError("dim must be positive", line_no,
                                 toks[1].column);
            have_dim = true;
            continue;
        }
        if (toks[0].text != "bs")
            throw ParseError("unknown directive '" + toks[0].text + "'",
                             line_no, toks[0].column);
        if (toks.size() < 4 || toks.size() > 5)
            throw ParseError("'bs' takes <i> <j> theta=<radians> "
                             "[phase=<radians>]",
                             line_no, toks[0].column);
        BeamSplitterParams p;
        p.mode_i = parse_int(toks[1], line_no, "mode index");
        p.mode_j = parse_int(toks[2], line_no, "mode index");
        for (const auto* tok : {&toks[1], &toks[2]}) {
            const int m = (tok == &toks[1]) ? p.mode_i : p.mode_j;
            if (m < 1 || m > spec.dim)
                throw ParseError("mode " + std::to_string(m) + " exceeds dim " +
                                     std::to_string(spec.dim),
                                 line_no, tok->column);
        }
        if (p.mode_i == p.mode_j)
            throw ParseError("beam splitter modes must differ", line_no,
                             toks[1].column);
        p.theta = parse_keyed_float(toks[3], "theta", line_no);
        if (toks.size() == 5)
            p.phase = parse_keyed_float(toks[4], "phase", line_no);
        spec.stages.push_back(p);
    }
    if (!have_dim) throw ParseError("missing 'dim' header", line_no + 1, 1);
    return spec;
}

std::string render_circuit(const CircuitSpec& spec) {
    std::string out = "dim " + std::to_string(spec.dim) + "\n";
    char buf[128];
    for (const auto& s : spec.stages) {
        if (s.phase != 0.0)
            std::snprintf(buf, sizeof buf, "bs %d %d theta=%.17g phase=%.17g\n",
                          s.mode_i, s.mode_j, s.theta, s.phase);
        else
            std::snprintf(buf, sizeof buf, "bs %d %d theta=%.17g\n", s.mode_i,
                          s.mode_j, s.theta);
        out += buf;
    }
    return out;
}

Multiport model_a(double theta) {
    const Complex t = std::cos(theta);
    const Complex r = Complex(0, 1) * std::sin(theta);
    return Multiport::from_matrix(ComplexMatrix(2, 2, {t, r, r, t}));
}

Multiport model_b(double theta) {
    const Complex t = std::cos(theta);
    const Complex r = Complex(0, 1) * std::sin(theta);
    return Multiport::from_matrix(ComplexMatrix(
        3, 3,
        {t, r * r, r * t,
         Complex{}, t, r,
         r, r * t, t * t}));
}

}  // namespace halfstat
