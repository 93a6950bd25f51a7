#include "wordlab/render.hpp"

#include <cstdint>
#include <sstream>
#include <utility>
#include <vector>

#include "wordlab/error.hpp"

namespace wordlab {

namespace {

constexpr int unit = 24;
constexpr int margin = 12;

std::string strip_right(std::string line) {
  while (!line.empty() && line.back() == ' ') {
    line.pop_back();
  }
  return line;
}

// P_j for j = 1..nb: a's before the j-th b.
struct Path {
  std::size_t na = 0;
  std::size_t nb = 0;
  std::vector<std::size_t> profile;
};

Path path_of(Word const& w) {
  require_binary(w, "render");
  Path p;
  p.profile = a_counts_before_b(w.view());
  p.nb = p.profile.size();
  p.na = w.size() - p.nb;
  return p;
}

// Height of the a-step covering column i (1-based): the number of b's
// before the i-th a.
std::vector<std::size_t> a_step_heights(Word const& w) {
  std::vector<std::size_t> heights;
  std::size_t b_seen = 0;
  for (char c : w) {
    if (c == 'a') {
      heights.push_back(b_seen);
    } else {
      ++b_seen;
    }
  }
  return heights;
}

// rows_shaded: Left cells in bands 1..rows_shaded are shaded; Right cells
// only when `right` is set.
std::string ascii_frame(Word const& w, Path const& p, std::size_t rows_shaded, bool right) {
  auto const heights = a_step_heights(w);
  std::ostringstream out;
  for (std::size_t band = p.nb + 1; band-- > 0;) {
    // text row for band j = band + 1: its bottom edge is y = band
    std::size_t const j = band + 1;
    std::string line;
    for (std::size_t x = 0; x <= p.na; ++x) {
      bool const vertical = j <= p.nb && p.profile[j - 1] == x;
      line.push_back(vertical ? '|' : ' ');
      if (x == p.na) {
        break;
      }
      std::size_t const i = x + 1;
      line.push_back(heights[i - 1] == band ? '_' : ' ');
      char shade = ' ';
      if (j <= p.nb) {
        bool const left = i <= p.profile[j - 1];
        if (left && j <= rows_shaded) {
          shade = '.';
        } else if (!left && right) {
          shade = ':';
        }
      }
      line.push_back(shade);
    }
    out << strip_right(line) << '\n';
  }
  return out.str();
}

double sx(std::size_t x) { return margin + static_cast<double>(x) * unit; }
double sy(std::size_t y, std::size_t height) {
  return margin + static_cast<double>(height - y) * unit;
}

void svg_open(std::ostringstream& out, std::size_t width, std::size_t height) {
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << 2 * margin + width * unit << "\" height=\"" << 2 * margin + height * unit << "\">\n"
      << "<style>.left{fill:#9e9e9e}.right{fill:#dcdcdc}.upper{fill:#9e9e9e}"
         ".lower{fill:#dcdcdc}.grid{stroke:#eeeeee;stroke-width:1}</style>\n";
}

void svg_grid(std::ostringstream& out, std::size_t width, std::size_t height) {
  for (std::size_t x = 0; x <= width; ++x) {
    out << "<line class=\"grid\" x1=\"" << sx(x) << "\" y1=\"" << sy(0, height) << "\" x2=\""
        << sx(x) << "\" y2=\"" << sy(height, height) << "\"/>\n";
  }
  for (std::size_t y = 0; y <= height; ++y) {
    out << "<line class=\"grid\" x1=\"" << sx(0) << "\" y1=\"" << sy(y, height) << "\" x2=\""
        << sx(width) << "\" y2=\"" << sy(y, height) << "\"/>\n";
  }
}

void svg_cells(std::ostringstream& out, Path const& p, std::size_t rows_shaded, bool right) {
  for (std::size_t j = 1; j <= p.nb; ++j) {
    for (std::size_t i = 1; i <= p.na; ++i) {
      bool const left = i <= p.profile[j - 1];
      if ((left && j <= rows_shaded) || (!left && right)) {
        out << "<rect class=\"" << (left ? "left" : "right") << "\" x=\"" << sx(i - 1)
            << "\" y=\"" << sy(j, p.nb) << "\" width=\"" << unit << "\" height=\"" << unit
            << "\"/>\n";
      }
    }
  }
}

void svg_path(std::ostringstream& out, Word const& w, std::size_t height, bool diagonal) {
  std::size_t x = 0;
  std::size_t y = 0;
  for (char c : w) {
    std::size_t const nx = (c == 'a' || diagonal) ? x + 1 : x;
    std::size_t const ny = c == 'b' ? y + 1 : y;
    out << "<line x1=\"" << sx(x) << "\" y1=\"" << sy(y, height) << "\" x2=\"" << sx(nx)
        << "\" y2=\"" << sy(ny, height) << "\" stroke=\"" << (c == 'a' ? "red" : "blue")
        << "\" stroke-width=\"3\"/>\n";
    x = nx;
    y = ny;
  }
}

std::string rational_text(Rational const& r) {
  return r.denominator() == 1 ? std::to_string(r.numerator())
                              : std::to_string(r.numerator()) + "/"
                                    + std::to_string(r.denominator());
}

}  // namespace

std::string render_line(Word const& w, RenderStyle style, Shade shade) {
  auto const p = path_of(w);
  if (style == RenderStyle::ascii) {
    if (shade != Shade::steps) {
      bool const on = shade == Shade::left_right;
      return ascii_frame(w, p, on ? p.nb : 0, on);
    }
    std::ostringstream out;
    std::size_t running = 0;
    for (std::size_t t = 1; t <= p.nb; ++t) {
      running += p.profile[t - 1];
      if (t > 1) {
        out << '\n';
      }
      out << "step " << t << ": +" << p.profile[t - 1] << " = " << running << '\n'
          << ascii_frame(w, p, t, false);
    }
    return out.str();
  }

  std::ostringstream out;
  svg_open(out, p.na, p.nb);
  svg_grid(out, p.na, p.nb);
  if (shade == Shade::steps) {
    for (std::size_t t = 1; t <= p.nb; ++t) {
      out << "<g class=\"frame\" id=\"step-" << t << "\">\n";
      svg_cells(out, p, t, false);
      svg_path(out, w, p.nb, false);
      out << "</g>\n";
    }
  } else {
    if (shade == Shade::left_right) {
      svg_cells(out, p, p.nb, true);
    }
    svg_path(out, w, p.nb, false);
  }
  out << "</svg>\n";
  return out.str();
}

DiagonalAreas diagonal_areas(Word const& w) {
  require_binary(w, "diagonal_areas");
  std::vector<std::pair<std::int64_t, std::int64_t>> path{{0, 0}};
  for (char c : w) {
    auto [x, y] = path.back();
    path.emplace_back(x + 1, c == 'b' ? y + 1 : y);
  }
  auto const n = static_cast<std::int64_t>(w.size());
  auto const h = path.back().second;
  auto twice_area = [](std::vector<std::pair<std::int64_t, std::int64_t>> poly) {
    std::int64_t s = 0;
    for (std::size_t k = 0; k < poly.size(); ++k) {
      auto const [x1, y1] = poly[k];
      auto const [x2, y2] = poly[(k + 1) % poly.size()];
      s += x1 * y2 - x2 * y1;
    }
    return s < 0 ? -s : s;
  };
  auto upper = path;
  upper.emplace_back(0, h);
  auto lower = path;
  lower.emplace_back(n, 0);
  return {Rational(twice_area(upper), 2), Rational(twice_area(lower), 2)};
}

std::string render_diagonal(Word const& w, RenderStyle style) {
  require_binary(w, "render_diagonal");
  auto const areas = diagonal_areas(w);
  std::size_t const n = w.size();
  std::size_t const nb = count_letter(w, 'b');
  std::ostringstream out;
  if (style == RenderStyle::ascii) {
    // one text column per letter; '/' climbs inside its band, '_' sits on
    // the bottom edge of the band above its height
    std::vector<std::string> rows(nb + 1, std::string(n, ' '));
    std::size_t y = 0;
    for (std::size_t x = 0; x < n; ++x) {
      if (w[x] == 'b') {
        rows[y][x] = '/';
        ++y;
      } else {
        rows[y][x] = '_';
      }
    }
    for (std::size_t r = nb + 1; r-- > 0;) {
      out << strip_right(rows[r]) << '\n';
    }
    out << "upper area: " << rational_text(areas.upper) << '\n'
        << "lower area: " << rational_text(areas.lower) << '\n';
    return out.str();
  }
  svg_open(out, n, nb);
  svg_grid(out, n, nb);
  auto polygon = [&](char const* cls, std::size_t corner_x, std::size_t corner_y) {
    out << "<polygon class=\"" << cls << "\" points=\"";
    std::size_t x = 0;
    std::size_t y = 0;
    out << sx(x) << ',' << sy(y, nb);
    for (char c : w) {
      ++x;
      y += c == 'b';
      out << ' ' << sx(x) << ',' << sy(y, nb);
    }
    out << ' ' << sx(corner_x) << ',' << sy(corner_y, nb) << "\"/>\n";
  };
  polygon("upper", 0, nb);
  polygon("lower", n, 0);
  svg_path(out, w, nb, true);
  out << "<text x=\"" << margin << "\" y=\"" << margin - 2 << "\" font-size=\"10\">upper "
      << rational_text(areas.upper) << ", lower " << rational_text(areas.lower)
      << "</text>\n</svg>\n";
  return out.str();
}

std::string render_ferrers(Partition const& lambda) {
  std::string out;
  for (auto part : lambda.parts()) {
    if (part > 0) {
      out.append(part, '#');
      out.push_back('\n');
    }
  }
  return out;
}

std::string render_class_dot(ClassGraph const& g) {
  std::ostringstream out;
  out << "digraph class_" << g.signature.na << '_' << g.signature.nb << '_'
      << g.signature.m << " {\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    auto const& label = g.nodes[i].str();
    out << "  n" << i << " [label=\"" << (label.empty() ? "ε" : label) << "\"];\n";
  }
  for (auto [a, b] : g.edges) {
    out << "  n" << a << " -> n" << b << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace wordlab
