#include "bsym/io.hpp"

#include "bsym/error.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace bsym {

namespace {

class TokenStream {
public:
    explicit TokenStream(std::istream& in) {
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
            std::size_t i = 0;
            while (i < line.size()) {
                while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
                const std::size_t start = i;
                while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
                if (i > start) tokens_.push_back({line.substr(start, i - start), line_no});
            }
        }
    }

    bool done() const noexcept { return pos_ == tokens_.size(); }

    const std::string& peek() const {
        if (done()) throw ParseError("unexpected end of input");
        return tokens_[pos_].text;
    }

    std::string next() {
        const std::string& t = peek();
        ++pos_;
        return t;
    }

    std::size_t next_count(const char* what) {
        const std::string t = next();
        std::size_t v = 0;
        auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
        if (ec != std::errc{} || ptr != t.data() + t.size())
            throw ParseError("line " + std::to_string(line()) + ": expected " + what + ", got '" + t + "'");
        return v;
    }

    std::size_t line() const noexcept { return pos_ == 0 ? 0 : tokens_[pos_ - 1].line; }

private:
    struct Token {
        std::string text;
        std::size_t line;
    };
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

Matrix parse_matrix(TokenStream& ts) {
    const Field field = Field::parse(ts.next());
    const std::size_t rows = ts.next_count("row count");
    const std::size_t cols = ts.next_count("column count");
    Matrix m(field, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            const std::size_t v = ts.next_count("matrix entry");
            if (v >= field.order())
                throw ParseError("line " + std::to_string(ts.line()) + ": entry " + std::to_string(v) +
                                 " is not an element of GF(" + field.order_string() + ")");
            m(r, c) = FieldElement{static_cast<std::uint16_t>(v)};
        }
    return m;
}

LinearCode parse_code(TokenStream& ts) {
    const std::string tag = ts.next();
    if (tag != "G" && tag != "H")
        throw ParseError("line " + std::to_string(ts.line()) + ": expected code tag G or H, got '" + tag + "'");
    const Matrix m = parse_matrix(ts);
    if (m.cols() == 0) throw ParseError("code of length zero");
    LinearCode code = tag == "G" ? LinearCode::from_generator(m) : LinearCode::from_parity_check(m);
    if (code.dimension() == 0) throw ParseError("code file describes the zero code");
    return code;
}

std::ifstream open(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    return in;
}

} // namespace

Matrix read_matrix(std::istream& in) {
    TokenStream ts(in);
    Matrix m = parse_matrix(ts);
    if (!ts.done()) throw ParseError("trailing input after matrix");
    return m;
}

void write_matrix(std::ostream& out, const Matrix& m) {
    out << m.field().order_string() << ' ' << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? " " : "") << m(r, c).value;
        out << '\n';
    }
}

LinearCode read_code(std::istream& in) {
    TokenStream ts(in);
    LinearCode code = parse_code(ts);
    if (!ts.done()) throw ParseError("trailing input after code");
    return code;
}

void write_code(std::ostream& out, const LinearCode& code, CodeTag tag) {
    out << (tag == CodeTag::Generator ? "G" : "H") << '\n';
    write_matrix(out, tag == CodeTag::Generator ? code.generator() : code.parity_check());
}

MatrixProductSpec read_matrix_product_spec(std::istream& in) {
    TokenStream ts(in);
    if (ts.next() != "A") throw ParseError("matrix product spec must start with tag A");
    Matrix a = parse_matrix(ts);
    std::vector<LinearCode> constituents;
    while (!ts.done()) constituents.push_back(parse_code(ts));
    try {
        return MatrixProductSpec(std::move(constituents), std::move(a));
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

void write_matrix_product_spec(std::ostream& out, const MatrixProductSpec& spec) {
    out << "A\n";
    write_matrix(out, spec.mixing());
    for (const auto& c : spec.constituents()) write_code(out, c);
}

LinearCode load_code(const std::filesystem::path& path) {
    auto in = open(path);
    return read_code(in);
}

MatrixProductSpec load_matrix_product_spec(const std::filesystem::path& path) {
    auto in = open(path);
    return read_matrix_product_spec(in);
}

} // namespace bsym
