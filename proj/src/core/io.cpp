#include "core/io.hpp"

#include <fstream>
#include <sstream>

#include "core/errors.hpp"

namespace arrowsmith {

namespace {

constexpr int kMaxDegree = 8;       // complexes live inside [-8, 8]
constexpr std::size_t kMaxDim = 16;  // per-degree dimension cap in files

struct Line {
    int number;
    std::vector<std::string> tokens;
    std::string text;  // after comment stripping
};

std::vector<std::string> tokenize(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

std::vector<Line> content_lines(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        auto tokens = tokenize(raw);
        if (!tokens.empty()) out.push_back({number, std::move(tokens), raw});
    }
    return out;
}

long parse_long(const std::string& tok, int line) {
    try {
        std::size_t pos = 0;
        long v = std::stol(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError(line, "expected an integer, got '" + tok + "'");
    }
}

std::size_t parse_index(const std::string& tok, int line) {
    long v = parse_long(tok, line);
    if (v < 0) throw ParseError(line, "expected a non-negative index, got '" + tok + "'");
    return static_cast<std::size_t>(v);
}

Scalar parse_scalar_tok(const Field& field, const std::string& tok, int line) {
    try {
        return field.parse_scalar(tok);
    } catch (const std::exception& e) {
        throw ParseError(line, e.what());
    }
}

// Splits "D 1 ; 2 2 ; 1 0 ; 0 1" into header tokens and the literal tail.
std::pair<std::vector<std::string>, std::string> split_header(const Line& line) {
    auto semi = line.text.find(';');
    if (semi == std::string::npos)
        throw ParseError(line.number, "expected ';' introducing a matrix literal");
    return {tokenize(line.text.substr(0, semi)), line.text.substr(semi + 1)};
}

Field parse_field_line(const std::vector<Line>& lines, std::size_t& pos) {
    if (lines.empty()) throw ParseError(1, "empty file, expected a FIELD line");
    const Line& l = lines[pos];
    if (l.tokens[0] != "FIELD") throw ParseError(l.number, "expected FIELD as the first entry");
    try {
        if (l.tokens.size() == 2 && l.tokens[1] == "Q") {
            ++pos;
            return Field::rationals();
        }
        if (l.tokens.size() == 3 && l.tokens[1] == "FP") {
            Field f = Field::prime(static_cast<unsigned long>(parse_long(l.tokens[2], l.number)));
            ++pos;
            return f;
        }
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(l.number, e.what());
    }
    throw ParseError(l.number, "FIELD must be 'FIELD Q' or 'FIELD FP <p>'");
}

Document parse_algebra(const Field& field, const std::vector<Line>& lines, std::size_t pos) {
    const Line& dim_line = lines[pos];
    if (dim_line.tokens.size() != 2) throw ParseError(dim_line.number, "DIM takes one argument");
    std::size_t dim = parse_index(dim_line.tokens[1], dim_line.number);
    ++pos;

    std::vector<MultTriple> triples;
    std::optional<Matrix> unit, aug;
    for (; pos < lines.size(); ++pos) {
        const Line& l = lines[pos];
        const std::string& key = l.tokens[0];
        if (key == "MULT") {
            if (l.tokens.size() != 5)
                throw ParseError(l.number, "MULT takes i j k <scalar>");
            std::size_t i = parse_index(l.tokens[1], l.number);
            std::size_t j = parse_index(l.tokens[2], l.number);
            std::size_t k = parse_index(l.tokens[3], l.number);
            if (i >= dim || j >= dim || k >= dim)
                throw ParseError(l.number, "MULT index out of range");
            triples.push_back({i, j, k, parse_scalar_tok(field, l.tokens[4], l.number)});
        } else if (key == "UNIT" || key == "AUG") {
            if (l.tokens.size() != dim + 1)
                throw ParseError(l.number, key + " needs exactly " + std::to_string(dim) +
                                               " scalars");
            std::vector<Scalar> entries;
            for (std::size_t t = 1; t < l.tokens.size(); ++t)
                entries.push_back(parse_scalar_tok(field, l.tokens[t], l.number));
            if (key == "UNIT")
                unit = Matrix::column(field, entries);
            else
                aug = Matrix::row(field, entries);
        } else {
            throw ParseError(l.number, "unexpected '" + key + "' in an algebra file");
        }
    }
    NonUnitalAlgebra base(field, dim, std::move(triples));
    if (aug && !unit) throw ParseError(lines.back().number, "AUG requires a UNIT line");
    if (!unit) return base;
    UnitalAlgebra unital(std::move(base), std::move(*unit));
    if (!aug) return unital;
    return AugmentedAlgebra(std::move(unital), std::move(*aug));
}

Document parse_arrow(const Field& field, const std::vector<Line>& lines, std::size_t pos) {
    const Line& l = lines[pos];
    if (l.tokens.size() != 1) throw ParseError(l.number, "ARROW takes no arguments");
    if (pos + 1 >= lines.size())
        throw ParseError(l.number, "ARROW must be followed by a matrix literal");
    if (pos + 2 < lines.size())
        throw ParseError(lines[pos + 2].number, "unexpected content after the arrow matrix");
    return ArrowObject{parse_matrix_literal(field, lines[pos + 1].text, lines[pos + 1].number)};
}

Document parse_chain(const Field& field, const std::vector<Line>& lines, std::size_t pos) {
    const Line& range_line = lines[pos];
    if (range_line.tokens.size() != 3) throw ParseError(range_line.number, "RANGE takes lo hi");
    long lo = parse_long(range_line.tokens[1], range_line.number);
    long hi = parse_long(range_line.tokens[2], range_line.number);
    if (lo > hi || lo < -kMaxDegree || hi > kMaxDegree)
        throw ParseError(range_line.number, "RANGE must satisfy -8 <= lo <= hi <= 8");
    ++pos;
    if (pos >= lines.size() || lines[pos].tokens[0] != "DIMS")
        throw ParseError(range_line.number, "RANGE must be followed by a DIMS line");
    const Line& dims_line = lines[pos];
    std::size_t count = static_cast<std::size_t>(hi - lo + 1);
    if (dims_line.tokens.size() != count + 1)
        throw ParseError(dims_line.number,
                         "DIMS needs exactly " + std::to_string(count) + " entries");
    std::vector<std::size_t> dims;
    for (std::size_t t = 1; t < dims_line.tokens.size(); ++t) {
        dims.push_back(parse_index(dims_line.tokens[t], dims_line.number));
        if (dims.back() > kMaxDim)
            throw ParseError(dims_line.number, "per-degree dimension exceeds 16");
    }
    ++pos;

    auto dim_at = [&](long n) -> std::size_t {
        return (n < lo || n > hi) ? 0 : dims[static_cast<std::size_t>(n - lo)];
    };

    std::map<int, Matrix> diffs, maps, mults;
    for (; pos < lines.size(); ++pos) {
        const Line& l = lines[pos];
        auto [header, tail] = split_header(l);
        if (header.size() != 2)
            throw ParseError(l.number, "expected 'D|MAP|MULT <degree> ; <matrix literal>'");
        long n = parse_long(header[1], l.number);
        Matrix m = parse_matrix_literal(field, tail, l.number);
        if (header[0] == "D") {
            if (n <= lo || n > hi)
                throw ParseError(l.number, "differential degree out of range");
            if (m.rows() != dim_at(n - 1) || m.cols() != dim_at(n))
                throw ParseError(l.number, "differential shape disagrees with DIMS");
            if (!diffs.emplace(static_cast<int>(n), std::move(m)).second)
                throw ParseError(l.number, "duplicate differential");
        } else if (header[0] == "MAP") {
            if (n < lo || n > hi) throw ParseError(l.number, "MAP degree out of range");
            if (m.rows() != dim_at(n) || m.cols() != dim_at(n))
                throw ParseError(l.number, "MAP component must be square against DIMS");
            if (!maps.emplace(static_cast<int>(n), std::move(m)).second)
                throw ParseError(l.number, "duplicate MAP component");
        } else if (header[0] == "MULT") {
            if (n < lo || n > hi) throw ParseError(l.number, "MULT degree out of range");
            std::size_t sq = 0;
            for (long p = lo; p <= hi; ++p) sq += dim_at(p) * dim_at(n - p);
            if (m.rows() != dim_at(n) || m.cols() != sq)
                throw ParseError(l.number, "MULT shape disagrees with the tensor-square layout");
            if (!mults.emplace(static_cast<int>(n), std::move(m)).second)
                throw ParseError(l.number, "duplicate MULT component");
        } else {
            throw ParseError(l.number, "unexpected '" + header[0] + "' in a complex file");
        }
    }
    if (!maps.empty() && !mults.empty())
        throw ParseError(lines.back().number, "a file cannot carry both MAP and MULT blocks");

    ChainComplex complex =
        ChainComplex::unchecked(field, static_cast<int>(lo), dims, std::move(diffs));
    if (!maps.empty()) return ChainMapDoc{ChainMap::unchecked(complex, complex, std::move(maps))};
    if (!mults.empty()) {
        ChainComplex sq = tensor_complex(complex, complex);
        ChainMap mult = ChainMap::unchecked(std::move(sq), complex, std::move(mults));
        return DGAlgebraNU{std::move(complex), std::move(mult)};
    }
    return complex;
}

}  // namespace

Matrix parse_matrix_literal(const Field& field, const std::string& text, int line) {
    // groups separated by ';': "r c" then r rows
    std::vector<std::string> groups;
    std::string current;
    for (char ch : text) {
        if (ch == ';') {
            groups.push_back(current);
            current.clear();
        } else {
            current += ch;
        }
    }
    groups.push_back(current);
    auto head = tokenize(groups[0]);
    if (head.size() != 2) throw ParseError(line, "matrix literal must start with 'rows cols'");
    std::size_t rows = parse_index(head[0], line);
    std::size_t cols = parse_index(head[1], line);
    if (groups.size() != rows + 1)
        throw ParseError(line, "matrix literal needs exactly " + std::to_string(rows) +
                                   " row groups");
    Matrix m(field, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        auto entries = tokenize(groups[i + 1]);
        if (entries.size() != cols)
            throw ParseError(line, "row " + std::to_string(i) + " needs " + std::to_string(cols) +
                                       " entries");
        for (std::size_t j = 0; j < cols; ++j)
            m.set(i, j, parse_scalar_tok(field, entries[j], line));
    }
    return m;
}

std::string emit_matrix_literal(const Matrix& m) {
    std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out += " ;";
        for (std::size_t j = 0; j < m.cols(); ++j)
            out += " " + m.field().format_scalar(m.at(i, j));
    }
    return out;
}

std::string document_kind(const Document& doc) {
    struct {
        std::string operator()(const NonUnitalAlgebra&) { return "nonunital-algebra"; }
        std::string operator()(const UnitalAlgebra&) { return "unital-algebra"; }
        std::string operator()(const AugmentedAlgebra&) { return "augmented-algebra"; }
        std::string operator()(const ArrowObject&) { return "arrow"; }
        std::string operator()(const ChainComplex&) { return "chain-complex"; }
        std::string operator()(const ChainMapDoc&) { return "chain-map"; }
        std::string operator()(const DGAlgebraNU&) { return "dg-algebra"; }
    } visitor;
    return std::visit(visitor, doc);
}

Document parse_document(const std::string& text) {
    auto lines = content_lines(text);
    std::size_t pos = 0;
    Field field = parse_field_line(lines, pos);
    if (pos >= lines.size())
        throw ParseError(lines.back().number, "expected DIM, RANGE or ARROW after FIELD");
    const std::string& key = lines[pos].tokens[0];
    if (key == "DIM") return parse_algebra(field, lines, pos);
    if (key == "ARROW") return parse_arrow(field, lines, pos);
    if (key == "RANGE") return parse_chain(field, lines, pos);
    throw ParseError(lines[pos].number, "expected DIM, RANGE or ARROW, got '" + key + "'");
}

Document read_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_document(buf.str());
}

namespace {

std::string emit_algebra_core(const NonUnitalAlgebra& a) {
    std::string out = "FIELD " + a.field().spec_string() + "\n";
    out += "DIM " + std::to_string(a.dim()) + "\n";
    for (const auto& t : a.triples())
        out += "MULT " + std::to_string(t.i) + " " + std::to_string(t.j) + " " +
               std::to_string(t.k) + " " + a.field().format_scalar(t.c) + "\n";
    return out;
}

std::string emit_vector_line(const std::string& key, const Matrix& column_or_row) {
    std::string out = key;
    const Matrix& m = column_or_row;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out += " " + m.field().format_scalar(m.at(i, j));
    return out + "\n";
}

std::string emit_complex_core(const ChainComplex& c) {
    std::string out = "FIELD " + c.field().spec_string() + "\n";
    int lo = c.has_support() ? c.lo() : 0;
    int hi = c.has_support() ? c.hi() : 0;
    out += "RANGE " + std::to_string(lo) + " " + std::to_string(hi) + "\n";
    out += "DIMS";
    for (int n = lo; n <= hi; ++n) out += " " + std::to_string(c.dim(n));
    out += "\n";
    for (int n = lo + 1; n <= hi; ++n)
        if (!c.d(n).is_zero())
            out += "D " + std::to_string(n) + " ; " + emit_matrix_literal(c.d(n)) + "\n";
    return out;
}

}  // namespace

std::string emit_document(const Document& doc) {
    struct {
        std::string operator()(const NonUnitalAlgebra& a) { return emit_algebra_core(a); }
        std::string operator()(const UnitalAlgebra& a) {
            return emit_algebra_core(a.base()) + emit_vector_line("UNIT", a.unit());
        }
        std::string operator()(const AugmentedAlgebra& a) {
            return emit_algebra_core(a.base()) + emit_vector_line("UNIT", a.unit()) +
                   emit_vector_line("AUG", a.eps());
        }
        std::string operator()(const ArrowObject& a) {
            return "FIELD " + a.field().spec_string() + "\nARROW\n" +
                   emit_matrix_literal(a.map) + "\n";
        }
        std::string operator()(const ChainComplex& c) { return emit_complex_core(c); }
        std::string operator()(const ChainMapDoc& d) {
            std::string out = emit_complex_core(d.map.src());
            const ChainComplex& c = d.map.src();
            int lo = c.has_support() ? c.lo() : 0;
            int hi = c.has_support() ? c.hi() : 0;
            for (int n = lo; n <= hi; ++n)
                out += "MAP " + std::to_string(n) + " ; " +
                       emit_matrix_literal(d.map.component(n)) + "\n";
            return out;
        }
        std::string operator()(const DGAlgebraNU& a) {
            std::string out = emit_complex_core(a.carrier);
            const ChainComplex& c = a.carrier;
            int lo = c.has_support() ? c.lo() : 0;
            int hi = c.has_support() ? c.hi() : 0;
            for (int n = lo; n <= hi; ++n)
                out += "MULT " + std::to_string(n) + " ; " +
                       emit_matrix_literal(a.mult.component(n)) + "\n";
            return out;
        }
    } visitor;
    return std::visit(visitor, doc);
}

void write_document(const Document& doc, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << emit_document(doc);
}

Report validate_document(const Document& doc) {
    struct {
        Report operator()(const NonUnitalAlgebra& a) { return validate(a); }
        Report operator()(const UnitalAlgebra& a) { return validate(a); }
        Report operator()(const AugmentedAlgebra& a) { return validate(a); }
        Report operator()(const ArrowObject&) {
            Report rep("arrow");
            rep.add("shape", true);
            return rep;
        }
        Report operator()(const ChainComplex& c) {
            Report rep("chain complex");
            rep.add("d o d = 0", c.d_squared_zero(), first_bad_degree(c));
            return rep;
        }
        Report operator()(const ChainMapDoc& d) {
            Report rep("chain map");
            rep.add("d o d = 0", d.map.src().d_squared_zero(), first_bad_degree(d.map.src()));
            std::string where;
            const ChainComplex& c = d.map.src();
            for (int n = c.has_support() ? c.lo() : 1; n <= (c.has_support() ? c.hi() + 1 : 0);
                 ++n)
                if (!(c.d(n) * d.map.component(n) == d.map.component(n - 1) * c.d(n))) {
                    where = "d o f != f o d at degree " + std::to_string(n);
                    break;
                }
            rep.add("chain condition", d.map.chain_condition_holds(), where);
            return rep;
        }
        Report operator()(const DGAlgebraNU& a) { return validate(a); }

        static std::string first_bad_degree(const ChainComplex& c) {
            for (int n = c.has_support() ? c.lo() + 2 : 1; n <= (c.has_support() ? c.hi() : 0);
                 ++n)
                if (!(c.d(n - 1) * c.d(n)).is_zero()) return "d o d != 0 at degree " +
                                                             std::to_string(n);
            return "";
        }
    } visitor;
    return std::visit(visitor, doc);
}

}  // namespace arrowsmith
