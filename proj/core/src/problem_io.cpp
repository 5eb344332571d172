#include "pucs/problem_io.hpp"

#include <cstdio>
#include <sstream>

namespace pucs {

namespace {

struct Tokenizer {
    std::vector<std::string> tokens;
    std::size_t pos = 0;
    int line = 0;

    bool done() const { return pos >= tokens.size(); }

    const std::string& next(const char* what) {
        if (done()) throw ParseError(line, std::string("expected ") + what + ", got end of line");
        return tokens[pos++];
    }

    double next_double(const char* what) {
        const std::string& tok = next(what);
        try {
            std::size_t used = 0;
            double v = std::stod(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            return v;
        } catch (const std::exception&) {
            throw ParseError(line, std::string("expected ") + what + ", got '" + tok + "'");
        }
    }

    long next_int(const char* what) {
        const std::string& tok = next(what);
        try {
            std::size_t used = 0;
            long v = std::stol(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            return v;
        } catch (const std::exception&) {
            throw ParseError(line, std::string("expected ") + what + ", got '" + tok + "'");
        }
    }

    void expect_keyword(const char* kw) {
        const std::string& tok = next(kw);
        if (tok != kw) throw ParseError(line, std::string("expected '") + kw + "', got '" + tok + "'");
    }

    void expect_end() {
        if (!done()) throw ParseError(line, "unexpected trailing token '" + tokens[pos] + "'");
    }

    Vec next_vec(std::size_t n, const char* what) {
        Vec v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = next_double(what);
        return v;
    }
};

Tokenizer tokenize(const std::string& text_line, int line_no) {
    Tokenizer t;
    t.line = line_no;
    std::istringstream in(text_line);
    std::string tok;
    while (in >> tok) {
        if (tok.front() == '#') break;  // comment to end of line
        t.tokens.push_back(tok);
    }
    return t;
}

void append_vec(std::string& out, const Vec& v) {
    for (double x : v) {
        out += ' ';
        out += format_double(x);
    }
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

ParsedProblem parse_problem(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;

    long dimension = 0;
    int dimension_line = 0;
    std::vector<UcsSet> sets;
    std::string current_name;
    std::vector<ConvexPiece> current_pieces;
    bool in_set = false;
    std::vector<std::pair<int, Vec>> initial_points;

    auto flush_set = [&](int line) {
        if (!in_set) return;
        if (current_pieces.empty())
            throw ParseError(line, "set '" + current_name + "' has no pieces");
        sets.emplace_back(current_name, std::move(current_pieces));
        current_pieces.clear();
        in_set = false;
    };

    while (std::getline(in, raw)) {
        ++line_no;
        Tokenizer t = tokenize(raw, line_no);
        if (t.done()) continue;
        const std::string& head = t.next("directive");

        try {
            if (head == "dimension") {
                if (dimension != 0) throw ParseError(line_no, "duplicate dimension directive");
                dimension = t.next_int("dimension value");
                if (dimension < 1) throw ParseError(line_no, "dimension must be positive");
                dimension_line = line_no;
                t.expect_end();
            } else if (head == "set") {
                if (dimension == 0) throw ParseError(line_no, "dimension must precede sets");
                flush_set(line_no);
                current_name = t.next("set name");
                t.expect_end();
                in_set = true;
            } else if (head == "ball" || head == "box" || head == "halfspace" ||
                       head == "hyperplane") {
                if (!in_set) throw ParseError(line_no, "piece outside of any set");
                auto n = static_cast<std::size_t>(dimension);
                if (head == "ball") {
                    t.expect_keyword("center");
                    Vec center = t.next_vec(n, "center coordinate");
                    t.expect_keyword("radius");
                    double radius = t.next_double("radius");
                    t.expect_end();
                    current_pieces.emplace_back(Ball{std::move(center), radius});
                } else if (head == "box") {
                    t.expect_keyword("lower");
                    Vec lower = t.next_vec(n, "lower coordinate");
                    t.expect_keyword("upper");
                    Vec upper = t.next_vec(n, "upper coordinate");
                    t.expect_end();
                    current_pieces.emplace_back(Box{std::move(lower), std::move(upper)});
                } else {
                    t.expect_keyword("normal");
                    Vec normal = t.next_vec(n, "normal coordinate");
                    t.expect_keyword("offset");
                    double offset = t.next_double("offset");
                    t.expect_end();
                    if (head == "halfspace")
                        current_pieces.emplace_back(Halfspace{std::move(normal), offset});
                    else
                        current_pieces.emplace_back(Hyperplane{std::move(normal), offset});
                }
            } else if (head == "initial") {
                if (dimension == 0) throw ParseError(line_no, "dimension must precede initial points");
                long r = t.next_int("orbit index");
                if (r < 1) throw ParseError(line_no, "orbit index must be >= 1");
                Vec point = t.next_vec(static_cast<std::size_t>(dimension), "coordinate");
                t.expect_end();
                initial_points.emplace_back(static_cast<int>(r), std::move(point));
            } else {
                throw ParseError(line_no, "unknown directive '" + head + "'");
            }
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception& e) {
            // Validation failures from piece constructors, annotated.
            throw ParseError(line_no, e.what());
        }
    }
    flush_set(line_no);

    if (dimension == 0) throw ParseError(line_no, "missing dimension directive");
    if (sets.empty()) throw ParseError(dimension_line, "problem has no sets");

    ParsedProblem out{Problem(static_cast<std::size_t>(dimension), std::move(sets)),
                      std::move(initial_points),
                      {}};
    for (std::size_t i = 0; i < out.problem.set_count(); ++i) {
        const UcsSet& set = out.problem.sets()[i];
        for (const DisjointViolation& v : check_disjoint(set)) {
            out.warnings.push_back("set '" + set.name() + "': pieces " + std::to_string(v.first) +
                                   " and " + std::to_string(v.second) +
                                   " are not strictly disjoint (gap " + format_double(v.gap) +
                                   (v.approximate ? ", approximate)" : ")"));
        }
    }
    return out;
}

std::string serialize_problem(const Problem& problem,
                              const std::vector<std::pair<int, Vec>>& initial_points) {
    std::string out = "dimension " + std::to_string(problem.dimension()) + "\n";
    for (const UcsSet& set : problem.sets()) {
        out += "\nset " + set.name() + "\n";
        for (const ConvexPiece& piece : set.pieces()) {
            std::visit(
                [&out](const auto& s) {
                    using T = std::decay_t<decltype(s)>;
                    if constexpr (std::is_same_v<T, Ball>) {
                        out += "  ball center";
                        append_vec(out, s.center);
                        out += " radius " + format_double(s.radius) + "\n";
                    } else if constexpr (std::is_same_v<T, Box>) {
                        out += "  box lower";
                        append_vec(out, s.lower);
                        out += " upper";
                        append_vec(out, s.upper);
                        out += "\n";
                    } else if constexpr (std::is_same_v<T, Halfspace>) {
                        out += "  halfspace normal";
                        append_vec(out, s.normal);
                        out += " offset " + format_double(s.offset) + "\n";
                    } else {
                        out += "  hyperplane normal";
                        append_vec(out, s.normal);
                        out += " offset " + format_double(s.offset) + "\n";
                    }
                },
                piece.shape());
        }
    }
    if (!initial_points.empty()) {
        out += "\n";
        for (const auto& [r, point] : initial_points) {
            out += "initial " + std::to_string(r);
            append_vec(out, point);
            out += "\n";
        }
    }
    return out;
}

}  // namespace pucs
