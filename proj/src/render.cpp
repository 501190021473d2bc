#include "sandpile/render.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "sandpile/rank.hpp"

namespace sandpile {

namespace {

using Point = std::pair<Value, Value>;
using Edge = std::pair<Point, Point>;  // from the lower/left endpoint

std::vector<Edge> edges_of(const std::string& steps, bool sink_step, Value m, Value n) {
    std::vector<Edge> out;
    Value x = 0, y = 0;
    for (char c : steps) {
        if (c == 'N') {
            out.push_back({{x, y}, {x, y + 1}});
            ++y;
        } else {
            out.push_back({{x, y}, {x + 1, y}});
            ++x;
        }
    }
    if (sink_step && x == m - 1 && y == n) out.push_back({{x, y}, {x + 1, y}});
    return out;
}

std::string label_text(const DiagramLabel& l) {
    return l.text + (l.side == Side::Right ? "r" : "g");
}

void check_steps(const std::string& steps, Value north, Value east, const char* which) {
    Value cn = std::count(steps.begin(), steps.end(), 'N');
    Value ce = std::count(steps.begin(), steps.end(), 'E');
    if (cn != north || ce != east || cn + ce != static_cast<Value>(steps.size()))
        throw Error(std::string("diagram: malformed ") + which + " path");
}

}  // namespace

DiagramSpec diagram_of(const Configuration& u) {
    if (!is_stable(u) || !is_sorted(u)) throw Error("diagram_of: expected a stable sorted configuration");
    const Value m = u.shape.m, n = u.shape.n;
    DiagramSpec d;
    d.shape = u.shape;
    d.col_min = 0;
    d.col_max = m - 1;
    Value x = 0;
    for (Value b : u.b) {
        d.green.append(static_cast<std::size_t>(b + 1 - x), 'E');
        x = b + 1;
        d.green.push_back('N');
    }
    d.green.append(static_cast<std::size_t>(m - x), 'E');
    Value y = 0;
    for (Value a : u.a) {
        d.red.append(static_cast<std::size_t>(a + 1 - y), 'N');
        y = a + 1;
        d.red.push_back('E');
    }
    d.red.append(static_cast<std::size_t>(n - y), 'N');
    // Row t (0-based) of the intersection runs from the first column whose red
    // height exceeds t up to the green north step of that row.
    std::size_t h = 0;
    for (Value t = 0; t < n; ++t) {
        while (h < u.a.size() && u.a[h] < t) ++h;
        Value hi = std::min(m - 1, u.b[static_cast<std::size_t>(t)]);
        for (Value c = static_cast<Value>(h); c <= hi; ++c) d.shaded.push_back({c, t});
    }
    return d;
}

Configuration configuration_of(const DiagramSpec& spec) {
    const Value m = spec.shape.m, n = spec.shape.n;
    check_steps(spec.green, n, m, "green");
    check_steps(spec.red, n, m - 1, "red");
    std::vector<Value> a, b;
    Value x = 0, y = 0;
    for (char c : spec.green) {
        if (c == 'E')
            ++x;
        else
            b.push_back(x - 1);
    }
    for (char c : spec.red) {
        if (c == 'N')
            ++y;
        else
            a.push_back(y - 1);
    }
    return Configuration(spec.shape, a, std::nullopt, b);
}

DiagramSpec cylindric_diagram(const Configuration& u) {
    const Value sink = u.sink_value();
    if (sink > 100000) throw Error("cylindric_diagram: too many labels to draw");
    DiagramSpec d = diagram_of(u);
    d.shaded.clear();
    Cylinder cyl(u.with_sink(std::nullopt));
    for (Value s = 0; s <= sink; ++s) {
        CylCell c = cyl.label(s);
        d.labels.push_back({c.column, c.row, std::to_string(s), c.side});
        d.col_min = std::min(d.col_min, c.column);
        d.col_max = std::max(d.col_max, c.column);
    }
    return d;
}

std::string render_text(const DiagramSpec& spec) {
    const Value n = spec.shape.n, m = spec.shape.m;
    std::size_t cw = 3;
    for (const auto& l : spec.labels) cw = std::max(cw, label_text(l).size() + 1);
    const Value cols = spec.col_max - spec.col_min + 1;
    const std::size_t width = static_cast<std::size_t>(cols) * (cw + 1) + 1;
    std::vector<std::string> grid(static_cast<std::size_t>(2 * n + 1), std::string(width, ' '));

    auto col_of = [&](Value x) { return static_cast<std::size_t>(x - spec.col_min) * (cw + 1); };
    auto row_of = [&](Value y) { return static_cast<std::size_t>(2 * (n - y)); };

    for (Value y = 0; y <= n; ++y)
        for (Value x = spec.col_min; x <= spec.col_max + 1; ++x) {
            grid[row_of(y)][col_of(x)] = '+';
            if (x <= spec.col_max)
                for (std::size_t k = 1; k <= cw; ++k) grid[row_of(y)][col_of(x) + k] = '-';
            if (y < n) grid[row_of(y) - 1][col_of(x)] = '|';
        }

    std::map<Edge, int> marks;  // bit 1 red, bit 2 green
    for (const Edge& e : edges_of(spec.red, true, m, n)) marks[e] |= 1;
    for (const Edge& e : edges_of(spec.green, false, m, n)) marks[e] |= 2;
    for (const auto& [e, bits] : marks) {
        char g = bits == 3 ? '*' : bits == 1 ? 'R' : 'G';
        auto [p, q] = e;
        if (p.second == q.second) {
            for (std::size_t k = 1; k <= cw; ++k) grid[row_of(p.second)][col_of(p.first) + k] = g;
        } else {
            grid[row_of(p.second) - 1][col_of(p.first)] = g;
        }
    }

    for (const auto& [c, r] : spec.shaded) grid[row_of(r) - 1][col_of(c) + (cw + 1) / 2] = '#';
    for (const auto& l : spec.labels) {
        std::string t = label_text(l);
        std::size_t start = col_of(l.column) + 1 + (cw - t.size());
        grid[row_of(l.row) - 1].replace(start, t.size(), t);
    }

    std::string out;
    for (auto& line : grid) {
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line;
        out += '\n';
    }
    return out;
}

std::string render_svg(const DiagramSpec& spec) {
    constexpr Value cell = 20, margin = 20;
    const Value n = spec.shape.n, m = spec.shape.m;
    const Value cols = spec.col_max - spec.col_min + 1;
    const Value w = cols * cell + 2 * margin, h = n * cell + 2 * margin;
    auto px = [&](Value x) { return (x - spec.col_min) * cell + margin; };
    auto py = [&](Value y) { return (n - y) * cell + margin; };

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w << "\" height=\"" << h
        << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
    out << "<rect x=\"0\" y=\"0\" width=\"" << w << "\" height=\"" << h << "\" style=\"fill:#ffffff\"/>\n";
    for (const auto& [c, r] : spec.shaded)
        out << "<rect x=\"" << px(c) << "\" y=\"" << py(r + 1) << "\" width=\"" << cell << "\" height=\"" << cell
            << "\" style=\"fill:#f4b6c8\"/>\n";
    for (Value x = spec.col_min; x <= spec.col_max + 1; ++x)
        out << "<line x1=\"" << px(x) << "\" y1=\"" << py(0) << "\" x2=\"" << px(x) << "\" y2=\"" << py(n)
            << "\" style=\"stroke:#c0c0c0;stroke-width:1\"/>\n";
    for (Value y = 0; y <= n; ++y)
        out << "<line x1=\"" << px(spec.col_min) << "\" y1=\"" << py(y) << "\" x2=\"" << px(spec.col_max + 1)
            << "\" y2=\"" << py(y) << "\" style=\"stroke:#c0c0c0;stroke-width:1\"/>\n";

    auto polyline = [&](const std::vector<Edge>& edges, const char* color, int width) {
        out << "<polyline points=\"" << px(0) << "," << py(0);
        for (const Edge& e : edges) out << " " << px(e.second.first) << "," << py(e.second.second);
        out << "\" style=\"fill:none;stroke:" << color << ";stroke-width:" << width << "\"/>\n";
    };
    polyline(edges_of(spec.green, false, m, n), "#1a9c3a", 5);
    polyline(edges_of(spec.red, true, m, n), "#d7191c", 2);

    for (const auto& l : spec.labels)
        out << "<text x=\"" << px(l.column) + cell / 2 << "\" y=\"" << py(l.row) - 6
            << "\" style=\"font-family:monospace;font-size:10px;text-anchor:middle;fill:"
            << (l.side == Side::Right ? "#d7191c" : "#1a9c3a") << "\">" << l.text << "</text>\n";
    out << "</svg>\n";
    return out.str();
}

}  // namespace sandpile
