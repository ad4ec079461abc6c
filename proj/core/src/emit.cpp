#include "idemfract/emit.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "idemfract/error.hpp"

namespace idemfract {

namespace {

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) {
    while (!field.empty() && (field.back() == '\r' || field.back() == ' ')) field.pop_back();
    while (!field.empty() && field.front() == ' ') field.erase(field.begin());
    out.push_back(field);
  }
  return out;
}

int column(const std::vector<std::string>& header, std::string_view name) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return static_cast<int>(i);
  }
  return -1;
}

std::size_t parse_index(const std::string& text) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::Io, "bad index '" + text + "'");
  }
  return v;
}

std::size_t exact_sqrt(std::size_t n) {
  auto r = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(n))));
  return r * r == n ? r : 0;
}

// Reads the next whitespace-separated PGM header token, skipping comments.
std::string pgm_token(std::istream& in) {
  std::string tok;
  char c;
  while (in.get(c)) {
    if (c == '#') {
      std::string rest;
      std::getline(in, rest);
      if (!tok.empty()) break;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!tok.empty()) break;
      continue;
    }
    tok.push_back(c);
  }
  if (tok.empty()) throw Error(ErrorCode::Io, "truncated PGM header");
  return tok;
}

}  // namespace

std::string format_real(double value) {
  if (is_bottom(value)) return "-inf";
  if (std::isinf(value)) return "inf";
  if (std::isnan(value)) return "nan";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

double parse_real(std::string_view text) {
  if (text == "-inf") return kBottom;
  if (text == "inf") return -kBottom;
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::Io, "bad number '" + std::string(text) + "'");
  }
  return v;
}

void write_density_csv(std::ostream& out, const DiscreteDensity& density, const UniformGrid& grid) {
  if (!(density.shape() == grid.shape())) throw Error(ErrorCode::ShapeMismatch, "density is not on this grid");
  const std::size_t side = grid.side();
  if (grid.dimension() == 1) {
    out << "index,x,lambda,u\n";
    for (std::size_t i = 0; i < density.size(); ++i) {
      out << i << ',' << format_real(grid.value(i)[0]) << ',' << format_real(density[i]) << ','
          << format_real(std::exp(density[i])) << '\n';
    }
    return;
  }
  out << "i,j,x1,x2,lambda,u\n";
  for (std::size_t k = 0; k < density.size(); ++k) {
    const Point p = grid.value(k);
    out << k % side << ',' << k / side << ',' << format_real(p[0]) << ',' << format_real(p[1]) << ','
        << format_real(density[k]) << ',' << format_real(std::exp(density[k])) << '\n';
  }
}

void write_fuzzy_csv(std::ostream& out, const FuzzyField& field, const UniformGrid& grid) {
  if (!(field.shape == grid.shape())) throw Error(ErrorCode::ShapeMismatch, "field is not on this grid");
  const std::size_t side = grid.side();
  if (grid.dimension() == 1) {
    out << "index,x,u\n";
    for (std::size_t i = 0; i < field.values.size(); ++i) {
      out << i << ',' << format_real(grid.value(i)[0]) << ',' << format_real(field.values[i]) << '\n';
    }
    return;
  }
  out << "i,j,x1,x2,u\n";
  for (std::size_t k = 0; k < field.values.size(); ++k) {
    const Point p = grid.value(k);
    out << k % side << ',' << k / side << ',' << format_real(p[0]) << ',' << format_real(p[1]) << ','
        << format_real(field.values[k]) << '\n';
  }
}

LoadedDensity read_density_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorCode::Io, "empty density file");
  const auto header = split_csv(line);
  const int lam = column(header, "lambda");
  if (lam < 0) throw Error(ErrorCode::Io, "density CSV needs a lambda column");
  const int idx = column(header, "index");
  const int ci = column(header, "i"), cj = column(header, "j");
  const bool two_d = ci >= 0 && cj >= 0;
  if (!two_d && idx < 0) throw Error(ErrorCode::Io, "density CSV needs index or i,j columns");

  struct Row {
    std::size_t a, b;
    double v;
  };
  std::vector<Row> rows;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    const auto f = split_csv(line);
    if (f.size() != header.size()) throw Error(ErrorCode::Io, "ragged density row");
    if (two_d) {
      rows.push_back({parse_index(f[ci]), parse_index(f[cj]), parse_real(f[lam])});
    } else {
      rows.push_back({parse_index(f[idx]), 0, parse_real(f[lam])});
    }
  }
  const std::size_t side = two_d ? exact_sqrt(rows.size()) : rows.size();
  if (side < 3) throw Error(ErrorCode::Io, "density CSV does not describe a grid with M >= 2");
  UniformGrid grid(two_d ? 2 : 1, side - 1);
  DiscreteDensity density(grid.shape());
  std::vector<bool> seen(grid.size(), false);
  for (const Row& r : rows) {
    if (r.a >= side || r.b >= side) throw Error(ErrorCode::Io, "density index outside the grid");
    const std::size_t k = two_d ? r.b * side + r.a : r.a;
    if (seen[k]) throw Error(ErrorCode::Io, "duplicate density row");
    seen[k] = true;
    density[k] = r.v;
  }
  return {grid, std::move(density)};
}

void write_pgm(std::ostream& out, const FuzzyField& field, bool binary) {
  if (field.shape.dimension != 2) throw Error(ErrorCode::ShapeMismatch, "PGM output needs a 2D field");
  const std::size_t side = field.shape.side;
  out << (binary ? "P5" : "P2") << '\n' << side << ' ' << side << '\n' << 255 << '\n';
  for (std::size_t r = 0; r < side; ++r) {
    const std::size_t row = side - 1 - r;
    std::size_t width = 0;
    for (std::size_t c = 0; c < side; ++c) {
      const double u = field.values[row * side + c];
      const int px = static_cast<int>(std::lround(255.0 * std::clamp(u, 0.0, 1.0)));
      if (binary) {
        out.put(static_cast<char>(px));
        continue;
      }
      const std::string tok = std::to_string(px);
      // Plain PGM lines stay within 70 characters.
      if (width > 0 && width + 1 + tok.size() > 70) {
        out << '\n';
        width = 0;
      }
      if (width > 0) {
        out << ' ';
        ++width;
      }
      out << tok;
      width += tok.size();
    }
    if (!binary) out << '\n';
  }
}

Series2D read_pgm(std::istream& in) {
  const std::string magic = pgm_token(in);
  if (magic != "P2" && magic != "P5") throw Error(ErrorCode::Io, "not a PGM image");
  const std::size_t width = parse_index(pgm_token(in));
  const std::size_t height = parse_index(pgm_token(in));
  const std::size_t maxval = parse_index(pgm_token(in));
  if (width != height || width < 2) throw Error(ErrorCode::ShapeMismatch, "HFD needs a square image");
  if (maxval == 0 || maxval > 65535) throw Error(ErrorCode::Io, "bad PGM maxval");
  Series2D s{width, std::vector<double>(width * height)};
  const double scale = static_cast<double>(maxval);
  for (double& v : s.values) {
    std::size_t px = 0;
    if (magic == "P2") {
      if (!(in >> px)) throw Error(ErrorCode::Io, "truncated PGM data");
    } else if (maxval < 256) {
      const int c = in.get();
      if (c == std::char_traits<char>::eof()) throw Error(ErrorCode::Io, "truncated PGM data");
      px = static_cast<unsigned char>(c);
    } else {
      const int hi = in.get(), lo = in.get();
      if (lo == std::char_traits<char>::eof()) throw Error(ErrorCode::Io, "truncated PGM data");
      px = (static_cast<std::size_t>(static_cast<unsigned char>(hi)) << 8) | static_cast<unsigned char>(lo);
    }
    if (px > maxval) throw Error(ErrorCode::Io, "PGM pixel above maxval");
    v = static_cast<double>(px) / scale;
  }
  return s;
}

LoadedSeries read_series_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open '" + path + "'");
  LoadedSeries out;
  if (in.peek() == 'P') {
    out.dimension = 2;
    out.surface = read_pgm(in);
    return out;
  }
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorCode::Io, "empty series file");
  const auto header = split_csv(line);
  const int cu = column(header, "u");
  if (cu < 0) {
    // Headerless: one value per line.
    out.series.push_back(parse_real(header.empty() ? std::string{} : header.front()));
    while (std::getline(in, line)) {
      if (line.empty() || line == "\r") continue;
      out.series.push_back(parse_real(split_csv(line).front()));
    }
    return out;
  }
  const int ci = column(header, "i"), cj = column(header, "j");
  std::vector<std::array<double, 3>> rows;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    const auto f = split_csv(line);
    if (f.size() != header.size()) throw Error(ErrorCode::Io, "ragged series row");
    const double u = parse_real(f[cu]);
    if (ci >= 0 && cj >= 0) {
      rows.push_back({static_cast<double>(parse_index(f[ci])), static_cast<double>(parse_index(f[cj])), u});
    } else {
      out.series.push_back(u);
    }
  }
  if (ci >= 0 && cj >= 0) {
    const std::size_t side = exact_sqrt(rows.size());
    if (side < 2) throw Error(ErrorCode::ShapeMismatch, "2D series is not square");
    out.dimension = 2;
    out.surface = Series2D{side, std::vector<double>(side * side)};
    for (const auto& r : rows) {
      const auto i = static_cast<std::size_t>(r[0]), j = static_cast<std::size_t>(r[1]);
      if (i >= side || j >= side) throw Error(ErrorCode::Io, "series index outside the grid");
      out.surface.values[j * side + i] = r[2];
    }
  }
  return out;
}

void write_fit_csv(std::ostream& out, const HiguchiResult& result, bool surface) {
  const auto cumulative = cumulative_dimensions(result.measure, surface);
  out << "# dimension=" << format_real(result.dimension) << ",k_max=" << result.measure.size()
      << ",degenerate=" << (result.fit.degenerate ? "true" : "false") << '\n';
  out << "k,measure,abscissa,ordinate,used,cumulative_dimension\n";
  for (std::size_t i = 0; i < result.measure.size(); ++i) {
    const double k = static_cast<double>(i + 1);
    const bool used = result.measure[i] != 0.0;
    out << i + 1 << ',' << format_real(result.measure[i]) << ',';
    if (used) {
      out << format_real(std::log(1.0 / (surface ? k * k : k))) << ',' << format_real(std::log(result.measure[i]));
    } else {
      out << ',';
    }
    out << ',' << (used ? 1 : 0) << ',' << format_real(cumulative[i]) << '\n';
  }
}

}  // namespace idemfract
