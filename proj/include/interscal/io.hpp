#pragma once

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "interscal/embedding.hpp"
#include "interscal/errors.hpp"
#include "interscal/interval.hpp"
#include "interscal/quality.hpp"
#include "interscal/tops_pca.hpp"

namespace interscal {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("read failed on '" + path + "'");
  return buf.str();
}

inline void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.flush();
  if (!out) throw IoError("write failed on '" + path + "'");
}

namespace detail {

inline std::string fmt_g12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

/// The double that the 12-significant-digit text form denotes; emitted to
/// both CSV and JSON so the two formats carry identical values.
inline double round12(double x) { return std::strtod(fmt_g12(x).c_str(), nullptr); }

inline std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
  return std::string(s.substr(b, e - b));
}

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(trim(s.substr(start)));
      break;
    }
    out.push_back(trim(s.substr(start, pos - start)));
    start = pos + 1;
  }
  return out;
}

inline double parse_number(const std::string& token, std::size_t line,
                           std::size_t column) {
  const std::string t = trim(token);
  if (t.empty()) {
    throw ParseError("line " + std::to_string(line) + ", column " +
                     std::to_string(column) + ": empty cell");
  }
  char* end = nullptr;
  const double v = std::strtod(t.c_str(), &end);
  if (end != t.c_str() + t.size() || !std::isfinite(v)) {
    throw ParseError("line " + std::to_string(line) + ", column " +
                     std::to_string(column) + ": bad number '" + t + "'");
  }
  return v;
}

inline Interval parse_cell(const std::string& cell, std::size_t line,
                           std::size_t column) {
  const std::size_t colon = cell.find(':');
  if (colon == std::string::npos) {
    const double v = parse_number(cell, line, column);
    return Interval(v, v);
  }
  const double lo = parse_number(cell.substr(0, colon), line, column);
  const double hi = parse_number(cell.substr(colon + 1), line, column);
  try {
    return Interval(lo, hi);
  } catch (const ReversedBounds&) {
    throw ReversedBounds("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": reversed bounds '" + cell +
                         "'");
  }
}

inline std::string format_cell(const Interval& iv) {
  if (iv.degenerate()) return fmt_g12(iv.lo());
  return fmt_g12(iv.lo()) + ":" + fmt_g12(iv.hi());
}

inline void check_label(const std::string& label) {
  if (label.empty() || label.find(',') != std::string::npos ||
      label.find('\n') != std::string::npos || label.front() == '#') {
    throw InvalidInput("label not representable in CSV: '" + label + "'");
  }
}

struct CsvLines {
  std::vector<std::pair<std::size_t, std::string>> rows;  // line no + text
  std::vector<std::pair<std::string, std::string>> comments;  // key, value
};

inline CsvLines split_csv(std::string_view text) {
  CsvLines out;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    const std::string line = trim(text.substr(start, end - start));
    start = end + 1;
    if (line.empty()) continue;
    if (line.front() == '#') {
      std::string body = trim(std::string_view(line).substr(1));
      const std::size_t colon = body.find(':');
      if (colon != std::string::npos) {
        out.comments.emplace_back(trim(body.substr(0, colon)),
                                  trim(body.substr(colon + 1)));
      } else {
        out.comments.emplace_back(body, "");
      }
      continue;
    }
    out.rows.emplace_back(line_no, line);
  }
  return out;
}

}  // namespace detail

/// Parses the interval CSV dialect. A header starting "object," yields a
/// feature table; one starting "dissim," yields a dissimilarity matrix.
/// Cells are "lo:hi" or a bare number for a degenerate interval. A leading
/// "# self-mode: pairwise|feature" comment overrides default_mode.
inline std::variant<IntervalTable, IntervalDissimMatrix> parse_interval_csv(
    std::string_view text, SelfMode default_mode = SelfMode::PairwiseZero) {
  const detail::CsvLines lines = detail::split_csv(text);
  if (lines.rows.empty()) throw ParseError("no header row");

  SelfMode mode = default_mode;
  for (const auto& [key, value] : lines.comments) {
    if (key == "self-mode") {
      if (value == "pairwise") {
        mode = SelfMode::PairwiseZero;
      } else if (value == "feature") {
        mode = SelfMode::FeatureDerived;
      } else {
        throw ParseError("unknown self-mode '" + value + "'");
      }
    }
  }

  const auto& [header_line, header_text] = lines.rows.front();
  const std::vector<std::string> header = detail::split(header_text, ',');
  const bool table_mode = header.front() == "object";
  if (!table_mode && header.front() != "dissim") {
    throw ParseError("line " + std::to_string(header_line) +
                     ": header must begin with 'object,' or 'dissim,'");
  }
  if (header.size() < 2) {
    throw ParseError("line " + std::to_string(header_line) +
                     ": header names no columns");
  }
  const std::size_t ncols = header.size() - 1;

  std::vector<std::string> labels;
  std::vector<std::vector<Interval>> cells;
  for (std::size_t r = 1; r < lines.rows.size(); ++r) {
    const auto& [line_no, text_row] = lines.rows[r];
    const std::vector<std::string> fields = detail::split(text_row, ',');
    if (fields.size() != ncols + 1) {
      throw ParseError("line " + std::to_string(line_no) + ": expected " +
                       std::to_string(ncols + 1) + " cells, got " +
                       std::to_string(fields.size()));
    }
    labels.push_back(fields.front());
    std::vector<Interval> row;
    row.reserve(ncols);
    for (std::size_t c = 1; c < fields.size(); ++c) {
      row.push_back(detail::parse_cell(fields[c], line_no, c + 1));
    }
    cells.push_back(std::move(row));
  }
  if (cells.empty()) throw ParseError("no data rows");

  if (table_mode) {
    std::vector<Box> boxes;
    boxes.reserve(cells.size());
    for (auto& row : cells) boxes.emplace_back(std::move(row));
    return IntervalTable(std::move(boxes),
                         std::vector<std::string>(header.begin() + 1,
                                                  header.end()),
                         std::move(labels));
  }
  if (cells.size() != ncols) {
    throw ParseError("dissimilarity matrix must be square: " +
                     std::to_string(cells.size()) + " rows, " +
                     std::to_string(ncols) + " columns");
  }
  return IntervalDissimMatrix(mode, std::move(cells), std::move(labels));
}

inline std::string write_interval_table(const IntervalTable& t) {
  std::string out = "object";
  for (const std::string& c : t.column_labels()) {
    detail::check_label(c);
    out += "," + c;
  }
  out += "\n";
  for (std::size_t i = 0; i < t.objects(); ++i) {
    detail::check_label(t.row_labels()[i]);
    out += t.row_labels()[i];
    for (std::size_t k = 0; k < t.dim(); ++k) {
      out += "," + detail::format_cell(t.row(i)[k]);
    }
    out += "\n";
  }
  return out;
}

inline std::string write_dissim_matrix(const IntervalDissimMatrix& d) {
  std::string out = "# self-mode: ";
  out += to_string(d.self_mode());
  out += "\ndissim";
  for (const std::string& l : d.labels()) {
    detail::check_label(l);
    out += "," + l;
  }
  out += "\n";
  for (std::size_t i = 0; i < d.size(); ++i) {
    out += d.labels()[i];
    for (std::size_t j = 0; j < d.size(); ++j) {
      out += "," + detail::format_cell(d.entry(i, j));
    }
    out += "\n";
  }
  return out;
}

enum class OutputFormat { Csv, Json };

namespace detail {

inline std::string interval_body(
    const std::vector<std::vector<Interval>>& coords,
    std::span<const std::string> labels, std::size_t dims) {
  std::string out = "object";
  for (std::size_t r = 0; r < dims; ++r) out += ",Y" + std::to_string(r + 1);
  out += "\n";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    check_label(labels[i]);
    out += labels[i];
    for (std::size_t r = 0; r < dims; ++r) {
      out += "," + format_cell(coords[i][r]);
    }
    out += "\n";
  }
  return out;
}

inline nlohmann::json objects_json(
    const std::vector<std::vector<Interval>>& coords,
    std::span<const std::string> labels, std::size_t dims) {
  nlohmann::json arr = nlohmann::json::array();
  for (std::size_t i = 0; i < coords.size(); ++i) {
    nlohmann::json intervals = nlohmann::json::array();
    for (std::size_t r = 0; r < dims; ++r) {
      intervals.push_back({{"lo", round12(coords[i][r].lo())},
                           {"hi", round12(coords[i][r].hi())}});
    }
    arr.push_back({{"label", labels[i]},
                   {"intervals", std::move(intervals)},
                   {"describe", describe_intervals(coords[i])}});
  }
  return arr;
}

inline std::string joined_eigenvalues(const std::vector<double>& ev) {
  std::string out;
  for (std::size_t i = 0; i < ev.size(); ++i) {
    if (i > 0) out += ",";
    out += fmt_g12(ev[i]);
  }
  return out;
}

}  // namespace detail

/// Serializes an embedding: eigenvalues, positive rank, interval coordinates
/// at 12 significant digits, and the conjunction description per object.
/// CSV output parses back with parse_embedding_csv; JSON carries the same
/// numeric values.
inline std::string emit_embedding(const IntervalEmbedding& e,
                                  OutputFormat fmt) {
  if (fmt == OutputFormat::Csv) {
    std::string out = "# interscal-embedding\n";
    out += "# dims: " + std::to_string(e.dims) + "\n";
    out += "# positive-rank: " + std::to_string(e.positive_rank) + "\n";
    out += "# eigenvalues: " + detail::joined_eigenvalues(e.eigenvalues) + "\n";
    for (std::size_t i = 0; i < e.objects(); ++i) {
      out += "# describe " + e.labels[i] + ": " +
             describe_intervals(e.interval_coords[i]) + "\n";
    }
    out += detail::interval_body(e.interval_coords, e.labels, e.dims);
    return out;
  }
  nlohmann::json j;
  j["dims"] = e.dims;
  j["positive_rank"] = e.positive_rank;
  nlohmann::json ev = nlohmann::json::array();
  for (double v : e.eigenvalues) ev.push_back(detail::round12(v));
  j["eigenvalues"] = std::move(ev);
  j["objects"] = detail::objects_json(e.interval_coords, e.labels, e.dims);
  return j.dump(2) + "\n";
}

/// Interval part of an embedding read back from CSV; enough to evaluate
/// stress against and to plot.
struct EmbeddingFile {
  std::vector<double> eigenvalues;
  std::size_t positive_rank = 0;
  std::size_t dims = 0;
  std::vector<std::vector<Interval>> interval_coords;
  std::vector<std::string> labels;

  IntervalEmbedding as_embedding() const {
    IntervalEmbedding e;
    e.eigenvalues = eigenvalues;
    e.interval_coords = interval_coords;
    e.dims = dims;
    e.positive_rank = positive_rank;
    e.labels = labels;
    return e;
  }
};

inline EmbeddingFile parse_embedding_csv(std::string_view text) {
  const detail::CsvLines lines = detail::split_csv(text);
  EmbeddingFile file;
  for (const auto& [key, value] : lines.comments) {
    if (key == "dims") {
      file.dims = static_cast<std::size_t>(std::strtoull(value.c_str(), nullptr, 10));
    } else if (key == "positive-rank") {
      file.positive_rank =
          static_cast<std::size_t>(std::strtoull(value.c_str(), nullptr, 10));
    } else if (key == "eigenvalues") {
      for (const std::string& tok : detail::split(value, ',')) {
        file.eigenvalues.push_back(detail::parse_number(tok, 0, 0));
      }
    }
  }
  auto parsed = parse_interval_csv(text);
  auto* table = std::get_if<IntervalTable>(&parsed);
  if (table == nullptr) {
    throw ParseError("embedding file must carry an 'object,' table");
  }
  if (file.dims == 0) file.dims = table->dim();
  if (file.dims != table->dim()) {
    throw ParseError("embedding dims comment disagrees with table width");
  }
  for (std::size_t i = 0; i < table->objects(); ++i) {
    file.interval_coords.push_back(table->row(i).coords());
    file.labels.push_back(table->row_labels()[i]);
  }
  return file;
}

inline std::string emit_pca(const TopsPcaResult& r, OutputFormat fmt) {
  const std::size_t q = r.components.empty() ? 0 : r.components.front().size();
  if (fmt == OutputFormat::Csv) {
    std::string out = "# tops-pca\n";
    out += "# dims: " + std::to_string(q) + "\n";
    out += "# standardized: " + std::string(r.standardized ? "true" : "false") +
           "\n";
    out += "# covariance-divisor: " + std::to_string(r.covariance_divisor) +
           "\n";
    out += "# positive-rank: " + std::to_string(r.positive_rank) + "\n";
    out += "# eigenvalues: " + detail::joined_eigenvalues(r.eigenvalues) + "\n";
    for (std::size_t i = 0; i < r.components.size(); ++i) {
      out += "# describe " + r.labels[i] + ": " +
             describe_intervals(r.components[i]) + "\n";
    }
    out += detail::interval_body(r.components, r.labels, q);
    return out;
  }
  nlohmann::json j;
  j["dims"] = q;
  j["standardized"] = r.standardized;
  j["covariance_divisor"] = r.covariance_divisor;
  j["positive_rank"] = r.positive_rank;
  nlohmann::json ev = nlohmann::json::array();
  for (double v : r.eigenvalues) ev.push_back(detail::round12(v));
  j["eigenvalues"] = std::move(ev);
  j["objects"] = detail::objects_json(r.components, r.labels, q);
  return j.dump(2) + "\n";
}

inline std::string emit_stress(const StressReport& report,
                               std::span<const std::string> labels,
                               OutputFormat fmt) {
  if (fmt == OutputFormat::Csv) {
    std::string out = "# stress-report\n";
    out += "# raw-stress: " + detail::fmt_g12(report.raw_stress) + "\n";
    out += "# normalized-stress: " + detail::fmt_g12(report.normalized_stress) +
           "\n";
    out += "pair_i,pair_j,d_lo,d_hi,delta_lo,delta_hi\n";
    for (const PairStress& p : report.per_pair) {
      out += labels[p.i] + "," + labels[p.j] + "," + detail::fmt_g12(p.d_lo) +
             "," + detail::fmt_g12(p.d_hi) + "," + detail::fmt_g12(p.delta_lo) +
             "," + detail::fmt_g12(p.delta_hi) + "\n";
    }
    return out;
  }
  nlohmann::json j;
  j["raw_stress"] = detail::round12(report.raw_stress);
  j["normalized_stress"] = detail::round12(report.normalized_stress);
  nlohmann::json pairs = nlohmann::json::array();
  for (const PairStress& p : report.per_pair) {
    pairs.push_back({{"i", labels[p.i]},
                     {"j", labels[p.j]},
                     {"d_lo", detail::round12(p.d_lo)},
                     {"d_hi", detail::round12(p.d_hi)},
                     {"delta_lo", detail::round12(p.delta_lo)},
                     {"delta_hi", detail::round12(p.delta_hi)}});
  }
  j["pairs"] = std::move(pairs);
  return j.dump(2) + "\n";
}

namespace detail {

inline std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

inline std::string fmt_px(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", x);
  return buf;
}

}  // namespace detail

/// Renders each object as an axis-aligned rectangle spanning its intervals
/// on the two chosen dimensions (0-based). Content is padded 5% inside the
/// canvas; objects degenerate on both axes become 2-pixel circular markers,
/// and rectangle sides never collapse below 2 pixels. Output is
/// deterministic.
inline std::string plot_rectangles(
    const std::vector<std::vector<Interval>>& coords,
    std::span<const std::string> labels, std::size_t dim_a, std::size_t dim_b) {
  if (coords.empty()) throw InvalidInput("nothing to plot");
  const std::size_t q = coords.front().size();
  if (dim_a >= q || dim_b >= q || dim_a == dim_b) {
    throw InvalidInput("plot dimensions must be distinct and within 1.." +
                       std::to_string(q));
  }
  double xmin = coords[0][dim_a].lo(), xmax = coords[0][dim_a].hi();
  double ymin = coords[0][dim_b].lo(), ymax = coords[0][dim_b].hi();
  for (const auto& row : coords) {
    xmin = std::min(xmin, row[dim_a].lo());
    xmax = std::max(xmax, row[dim_a].hi());
    ymin = std::min(ymin, row[dim_b].lo());
    ymax = std::max(ymax, row[dim_b].hi());
  }
  const double span_x = xmax - xmin;
  const double span_y = ymax - ymin;
  const double pad_x = span_x > 0.0 ? 0.05 * span_x : 1.0;
  const double pad_y = span_y > 0.0 ? 0.05 * span_y : 1.0;
  xmin -= pad_x;
  xmax += pad_x;
  ymin -= pad_y;
  ymax += pad_y;

  const double width = 800.0, height = 600.0, margin = 45.0;
  const double avail_w = width - 2.0 * margin;
  const double avail_h = height - 2.0 * margin;
  // One scale for both axes so rectangle aspect ratios survive; content is
  // centered in the leftover direction.
  const double s = std::min(avail_w / (xmax - xmin), avail_h / (ymax - ymin));
  const double off_x = margin + (avail_w - (xmax - xmin) * s) / 2.0;
  const double off_y = margin + (avail_h - (ymax - ymin) * s) / 2.0;
  const auto px = [&](double x) { return off_x + (x - xmin) * s; };
  const auto py = [&](double y) { return height - off_y - (y - ymin) * s; };
  const double sx = s;
  const double sy = s;

  const double degen_tol = 1e-9 * std::max({span_x, span_y, 1.0});

  std::string svg =
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" "
      "viewBox=\"0 0 800 600\">\n";
  svg += "  <text x=\"" + detail::fmt_px(width / 2) + "\" y=\"" +
         detail::fmt_px(height - 12.0) +
         "\" text-anchor=\"middle\" font-size=\"13\">Y" +
         std::to_string(dim_a + 1) + "</text>\n";
  svg += "  <text x=\"14\" y=\"" + detail::fmt_px(height / 2) +
         "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 14 " +
         detail::fmt_px(height / 2) + ")\">Y" + std::to_string(dim_b + 1) +
         "</text>\n";

  for (std::size_t i = 0; i < coords.size(); ++i) {
    const Interval& ix = coords[i][dim_a];
    const Interval& iy = coords[i][dim_b];
    const std::string label =
        i < labels.size() ? labels[i] : "S" + std::to_string(i + 1);
    double tx, ty;
    if (ix.width() <= degen_tol && iy.width() <= degen_tol) {
      const double cx = px(ix.midpoint());
      const double cy = py(iy.midpoint());
      svg += "  <circle cx=\"" + detail::fmt_px(cx) + "\" cy=\"" +
             detail::fmt_px(cy) + "\" r=\"1\" fill=\"#1f77b4\"/>\n";
      tx = cx + 3.0;
      ty = cy - 3.0;
    } else {
      double w = ix.width() * sx;
      double h = iy.width() * sy;
      double x = px(ix.lo());
      double y = py(iy.hi());
      if (w < 2.0) {
        x = px(ix.midpoint()) - 1.0;
        w = 2.0;
      }
      if (h < 2.0) {
        y = py(iy.midpoint()) - 1.0;
        h = 2.0;
      }
      svg += "  <rect x=\"" + detail::fmt_px(x) + "\" y=\"" +
             detail::fmt_px(y) + "\" width=\"" + detail::fmt_px(w) +
             "\" height=\"" + detail::fmt_px(h) +
             "\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\"/>\n";
      tx = x + 2.0;
      ty = y - 3.0;
    }
    svg += "  <text x=\"" + detail::fmt_px(tx) + "\" y=\"" +
           detail::fmt_px(ty) + "\" font-size=\"11\">" +
           detail::xml_escape(label) + "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

inline std::string plot_rectangles(const IntervalEmbedding& e,
                                   std::size_t dim_a, std::size_t dim_b) {
  return plot_rectangles(e.interval_coords, e.labels, dim_a, dim_b);
}

}  // namespace interscal
