// Point-set and order files.
//
// Point file: header `x,y`, one point per line, shortest round-trip decimals.
// Order file: header `rank`, one 0-based disk index per line, front to back.
#pragma once

#include <charconv>
#include <cstddef>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "visper/geometry.hpp"

namespace visper {

/// Shortest decimal that parses back to the same double.
inline std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc{}) throw std::runtime_error("format_double: conversion failed");
  return std::string(buf, end);
}

inline double parse_double(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  double v = 0.0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || end != s.data() + s.size()) {
    throw std::invalid_argument("cannot parse number '" + std::string(s) + "'");
  }
  return v;
}

namespace detail {

inline bool next_data_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) return true;
  }
  return false;
}

inline void expect_header(std::istream& in, std::string_view header, std::string_view what) {
  std::string line;
  if (!next_data_line(in, line) || line != header) {
    throw std::invalid_argument(std::string(what) + ": expected header '" + std::string(header) + "'");
  }
}

}  // namespace detail

inline void write_points(std::ostream& out, const PointSet& ps) {
  out << "x,y\n";
  for (const Point& p : ps) out << format_double(p.x) << ',' << format_double(p.y) << '\n';
}

inline PointSet read_points(std::istream& in) {
  detail::expect_header(in, "x,y", "point file");
  std::vector<Point> pts;
  std::string line;
  while (detail::next_data_line(in, line)) {
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("point file: malformed line '" + line + "'");
    const std::string_view sv(line);
    pts.push_back({parse_double(sv.substr(0, comma)), parse_double(sv.substr(comma + 1))});
  }
  return PointSet(std::move(pts));
}

inline void write_order(std::ostream& out, const StackingOrder& f) {
  out << "rank\n";
  for (std::size_t i : f.sequence()) out << i << '\n';
}

inline StackingOrder read_order(std::istream& in) {
  detail::expect_header(in, "rank", "order file");
  std::vector<std::size_t> seq;
  std::string line;
  while (detail::next_data_line(in, line)) {
    std::size_t v = 0;
    auto [end, ec] = std::from_chars(line.data(), line.data() + line.size(), v);
    if (ec != std::errc{} || end != line.data() + line.size()) {
      throw std::invalid_argument("order file: malformed index '" + line + "'");
    }
    seq.push_back(v);
  }
  return StackingOrder::from_sequence(std::move(seq));
}

inline PointSet load_points(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_points(in);
}

inline StackingOrder load_order(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_order(in);
}

}  // namespace visper
