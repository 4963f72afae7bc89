#include "stammerlab/render.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace stammerlab {

namespace {

constexpr int kScale = 20;

// Fixed fill palette for ribbon shading, reused cyclically.
const char* kPalette[] = {"#e41a1c", "#377eb8", "#4daf4a", "#984ea3",
                          "#ff7f00", "#ffff33", "#a65628", "#f781bf"};

char ribbon_glyph(int i) {  // 1..9, then a..z
    if (i <= 9) return static_cast<char>('0' + i);
    return static_cast<char>('a' + (i - 10) % 26);
}

std::string join_lines(std::vector<std::string> lines) {
    std::string out;
    for (auto& line : lines) {
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line;
        out += '\n';
    }
    return out;
}

class Svg {
public:
    void line(int x1, int y1, int x2, int y2, const char* stroke, int width) {
        body_ << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\""
              << y2 << "\" stroke=\"" << stroke << "\" stroke-width=\"" << width << "\"/>\n";
    }
    void circle(int cx, int cy, int r, const char* fill) {
        body_ << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << r << "\" fill=\""
              << fill << "\"/>\n";
    }
    void rect(int x, int y, int w, int h, const char* fill, const char* stroke) {
        body_ << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << w << "\" height=\""
              << h << "\" fill=\"" << fill << "\" stroke=\"" << stroke << "\"/>\n";
    }
    void diamond(int cx, int cy, int half, const char* fill) {
        body_ << "<polygon points=\"" << cx - half << "," << cy << " " << cx << "," << cy - half
              << " " << cx + half << "," << cy << " " << cx << "," << cy + half
              << "\" fill=\"" << fill << "\" stroke=\"black\"/>\n";
    }
    void text(int x, int y, const std::string& s) {
        body_ << "<text x=\"" << x << "\" y=\"" << y << "\" font-size=\"10\">" << s
              << "</text>\n";
    }
    std::string finish(int width, int height) const {
        std::ostringstream out;
        out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
            << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n"
            << body_.str() << "</svg>\n";
        return out.str();
    }

private:
    std::ostringstream body_;
};

// Small Young diagram glyph at (x, y) top-left, one 4px square per cell.
void draw_partition(Svg& svg, const Partition& p, int x, int y) {
    constexpr int s = 4;
    if (p.empty()) {
        svg.circle(x + 2, y - 2, 1, "black");
        return;
    }
    for (int row = 1; row <= p.rows(); ++row)
        for (int c = 0; c < p.part(row); ++c)
            svg.rect(x + c * s, y - row * s, s, s, "none", "black");
}

std::string ascii_dyck_path(const DyckPath& p) {
    int maxh = 0;
    for (int i = 0; i <= p.length(); ++i) maxh = std::max(maxh, p.height_after(i));
    if (p.length() == 0) return "\n";
    std::vector<std::string> lines;
    for (int level = maxh; level >= 1; --level) {
        std::string line(p.length(), ' ');
        for (int i = 0; i < p.length(); ++i) {
            bool up = p.steps()[i] == Step::Up;
            int top = std::max(p.height_after(i), p.height_after(i + 1));
            if (top == level) line[i] = up ? '/' : '\\';
        }
        lines.push_back(std::move(line));
    }
    return join_lines(std::move(lines));
}

std::string svg_dyck_path(const DyckPath& p) {
    int maxh = 0;
    for (int i = 0; i <= p.length(); ++i) maxh = std::max(maxh, p.height_after(i));
    Svg svg;
    int base = (maxh + 1) * kScale;
    for (int i = 0; i < p.length(); ++i)
        svg.line(kScale + i * kScale, base - p.height_after(i) * kScale,
                 kScale + (i + 1) * kScale, base - p.height_after(i + 1) * kScale, "black", 2);
    return svg.finish((p.length() + 2) * kScale, (maxh + 2) * kScale);
}

// Shared diamond-grid ascii for Dyck shapes: one glyph per cell.
std::string ascii_shape(const DyckPath& shape, const std::map<Cell, char>& glyphs) {
    auto cells = cells_of(shape);
    if (cells.empty()) return "\n";
    int ymax = 0, xmax = 0;
    for (const Cell& c : cells) {
        ymax = std::max(ymax, c.y);
        xmax = std::max(xmax, c.x);
    }
    std::vector<std::string> lines;
    for (int y = ymax; y >= 0; --y) {
        std::string line(xmax + 1, ' ');
        for (const Cell& c : cells)
            if (c.y == y) {
                auto it = glyphs.find(c);
                line[c.x] = it == glyphs.end() ? '.' : it->second;
            }
        lines.push_back(std::move(line));
    }
    return join_lines(std::move(lines));
}

// Shared diamond-grid svg; fills cells, then overlays dots.
std::string svg_shape(const DyckPath& shape, const std::map<Cell, const char*>& fills,
                      const std::vector<Cell>& dotted) {
    auto cells = cells_of(shape);
    int ymax = 0;
    for (const Cell& c : cells) ymax = std::max(ymax, c.y);
    int oy = (ymax + 2) * kScale;  // svg y of geometric height 0
    Svg svg;
    for (const Cell& c : cells) {
        auto it = fills.find(c);
        svg.diamond((c.x + 1) * kScale, oy - c.y * kScale, kScale,
                    it == fills.end() ? "white" : it->second);
    }
    for (const Cell& c : dotted)
        svg.circle((c.x + 1) * kScale, oy - c.y * kScale, 4, "black");
    return svg.finish((shape.length() + 1) * kScale, (ymax + 4) * kScale);
}

Cell dot_cell(const DyckPath& shape, const ColumnDot& d) {
    return column_cells(shape, d.column)[d.index - 1];
}

}  // namespace

std::string render_dyck_path(const DyckPath& p, RenderFormat format) {
    return format == RenderFormat::Ascii ? ascii_dyck_path(p) : svg_dyck_path(p);
}

std::string render_rook(const PartialRookPlacement& r, RenderFormat format) {
    if (format == RenderFormat::Ascii) {
        std::vector<std::string> lines;
        for (int row = r.n; row >= 1; --row) {
            std::string line;
            for (int c = 1; c <= staircase_row_length(r.n, row); ++c) {
                if (c > 1) line += ' ';
                line += (r.dots[row - 1] == c) ? 'o' : '.';
            }
            lines.push_back(std::move(line));
        }
        return join_lines(std::move(lines));
    }
    Svg svg;
    for (int row = 1; row <= r.n; ++row) {
        int sy = (r.n - row + 1) * kScale;
        for (int c = 1; c <= staircase_row_length(r.n, row); ++c) {
            svg.rect(c * kScale, sy, kScale, kScale, "none", "gray");
            if (r.dots[row - 1] == c)
                svg.circle(c * kScale + kScale / 2, sy + kScale / 2, 5, "black");
        }
    }
    return svg.finish((2 * r.n + 2) * kScale, (r.n + 2) * kScale);
}

std::string render_stammering(const StammeringTableau& t, RenderFormat format) {
    if (format == RenderFormat::Ascii) {
        std::string out;
        for (std::size_t i = 0; i < t.steps.size(); ++i) {
            if (i) out += (i % 3 == 0) ? "; " : ", ";
            out += t.steps[i].str();
        }
        out += '\n';
        return out;
    }
    int maxrows = 1;
    for (const auto& p : t.steps) maxrows = std::max(maxrows, p.rows());
    Svg svg;
    int baseline = (maxrows + 1) * 4 + 8;
    int x = 8;
    for (const auto& p : t.steps) {
        draw_partition(svg, p, x, baseline);
        x += std::max(2, p.part(1)) * 4 + 10;
    }
    return svg.finish(x + 8, baseline + 8);
}

std::string render_chain(const ChainOfDyckShapes& c, RenderFormat format) {
    auto ribbons = c.ribbons();
    if (format == RenderFormat::Ascii) {
        std::map<Cell, char> glyphs;
        for (std::size_t i = 0; i < ribbons.size(); ++i)
            for (const Cell& cell : ribbons[i].cells)
                glyphs[cell] = ribbon_glyph(static_cast<int>(i) + 1);
        return ascii_shape(c.shape(), glyphs);
    }
    std::map<Cell, const char*> fills;
    for (std::size_t i = 0; i < ribbons.size(); ++i)
        for (const Cell& cell : ribbons[i].cells)
            fills[cell] = kPalette[i % (sizeof(kPalette) / sizeof(kPalette[0]))];
    return svg_shape(c.shape(), fills, {});
}

std::string render_laguerre(const LaguerreHistory& h, RenderFormat format) {
    std::vector<Cell> dotted;
    for (const auto& d : h.dots()) dotted.push_back(dot_cell(h.shape(), d));
    if (format == RenderFormat::Ascii) {
        std::map<Cell, char> glyphs;
        for (const Cell& c : dotted) glyphs[c] = 'o';
        return ascii_shape(h.shape(), glyphs);
    }
    return svg_shape(h.shape(), {}, dotted);
}

std::string render_dyck_tableau(const DyckTableau& t, RenderFormat format) {
    std::vector<Cell> dotted;
    for (const auto& d : t.dots()) dotted.push_back(dot_cell(t.shape(), d));
    if (format == RenderFormat::Ascii) {
        std::map<Cell, char> glyphs;
        for (const Cell& c : dotted) glyphs[c] = 'o';
        return ascii_shape(t.shape(), glyphs);
    }
    return svg_shape(t.shape(), {}, dotted);
}

std::string render_permutation(const Permutation& s, RenderFormat format) {
    if (format == RenderFormat::Ascii) {
        std::string out;
        for (int i = 0; i < s.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(s.values()[i]);
        }
        out += '\n';
        return out;
    }
    Svg svg;
    int n = s.size();
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) svg.rect(i * kScale, j * kScale, kScale, kScale, "none", "gray");
        svg.circle(i * kScale + kScale / 2, (n + 1 - s.values()[i - 1]) * kScale + kScale / 2, 5,
                   "black");
    }
    return svg.finish((n + 2) * kScale, (n + 2) * kScale);
}

std::string render_growth(const GrowthDiagram& g, RenderFormat format) {
    if (format == RenderFormat::Ascii) {
        std::vector<std::string> lines;
        for (int y = g.n; y >= 0; --y) {
            std::string labels;
            int xmax = y <= 1 ? 2 * g.n : 2 * (g.n - y + 1);
            for (int x = 0; x <= xmax; ++x) {
                if (x) labels += ' ';
                labels += g.labels[x][y].str();
            }
            lines.push_back(std::move(labels));
            if (y > 0) {
                std::string dots;
                for (int x = 0; x < 2 * (g.n - y + 1); ++x) {
                    if (x) dots += ' ';
                    dots += g.dot[x][y - 1] ? 'o' : '.';
                }
                lines.push_back(std::move(dots));
            }
        }
        return join_lines(std::move(lines));
    }
    Svg svg;
    constexpr int cell = 3 * kScale;  // room for the vertex glyphs
    int oy = (g.n + 1) * cell;
    for (int y = 0; y < g.n; ++y)
        for (int x = 0; x < 2 * (g.n - y); ++x) {
            svg.rect(cell + x * cell, oy - (y + 1) * cell, cell, cell, "none", "lightgray");
            if (g.dot[x][y])
                svg.circle(cell + x * cell + cell / 2, oy - y * cell - cell / 2, 5, "black");
        }
    for (int y = 0; y <= g.n; ++y) {
        int xmax = y <= 1 ? 2 * g.n : 2 * (g.n - y + 1);
        for (int x = 0; x <= xmax; ++x)
            draw_partition(svg, g.labels[x][y], cell + x * cell - 8, oy - y * cell + 8);
    }
    return svg.finish((2 * g.n + 2) * cell, (g.n + 2) * cell);
}

}  // namespace stammerlab
