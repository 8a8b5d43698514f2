#include "quiveralg/path_coalgebra.hpp"

#include <cctype>

namespace quiveralg {

std::vector<PathPair> deconcatenations(const Quiver& q, const Path& p) {
    std::vector<PathPair> out;
    out.reserve(p.length() + 1);
    for (std::size_t i = 0; i <= p.length(); ++i) {
        out.emplace_back(subpath(q, p, 0, i), subpath(q, p, i, p.length()));
    }
    return out;
}

std::vector<Path> hull_span(const Quiver& q, int v, Side side, std::size_t max_len) {
    return side == Side::Right ? paths_starting_at(q, v, max_len) : paths_ending_at(q, v, max_len);
}

std::vector<Path> grouplike_coradical(const Quiver& q) {
    std::vector<Path> out;
    for (int v = 0; v < q.vertex_count(); ++v) out.push_back(Path::vertex(v));
    return out;
}

Element<Rational> parse_element(const Quiver& q, const std::string& text) {
    Element<Rational> out;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto fail = [&](const std::string& msg) {
        throw InputError("column " + std::to_string(i + 1) + ": " + msg + " in '" + text + "'");
    };
    skip();
    if (text.substr(i) == "0") return out;
    bool first = true;
    while (true) {
        skip();
        if (i >= text.size()) {
            if (first) fail("empty expression");
            break;
        }
        Rational sign(1);
        if (text[i] == '+' || text[i] == '-') {
            if (text[i] == '-') sign = -1;
            ++i;
            skip();
        } else if (!first) {
            fail("expected '+' or '-'");
        }
        first = false;
        Rational coeff(1);
        if (i < text.size() && text[i] != '[') {
            std::size_t start = i;
            while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) ||
                                       text[i] == '/')) {
                ++i;
            }
            if (start == i) fail("expected a coefficient or '['");
            coeff = parse_rational(text.substr(start, i - start));
            skip();
            if (i >= text.size() || text[i] != '*') fail("expected '*'");
            ++i;
            skip();
        }
        if (i >= text.size() || text[i] != '[') fail("expected '['");
        std::size_t close = text.find(']', i);
        if (close == std::string::npos) fail("unterminated '['");
        Path p = parse_path(q, text.substr(i + 1, close - i - 1));
        out.add(p, sign * coeff);
        i = close + 1;
    }
    return out;
}

}  // namespace quiveralg
