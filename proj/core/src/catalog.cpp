#include "torihedra/catalog.hpp"

#include <charconv>
#include <cmath>
#include <numbers>

#include "torihedra/cuts.hpp"
#include "torihedra/embedding.hpp"
#include "torihedra/errors.hpp"
#include "torihedra/tiling.hpp"

namespace torihedra {

namespace detail {
std::optional<std::string_view> frozen_catalog_text(std::string_view name);
}

namespace {

using cd = std::complex<double>;
constexpr double kPi = std::numbers::pi;
const double kSqrt3 = std::sqrt(3.0);

std::string_view strip_suffix(std::string_view name) {
  if (name.starts_with("catalog:")) name.remove_prefix(8);
  if (name.ends_with("-link")) name.remove_suffix(5);
  return name;
}

std::optional<int> family_index(std::string_view name) {
  if (!name.starts_with("Lj:")) return std::nullopt;
  int j = 0;
  const auto tail = name.substr(3);
  auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), j);
  if (ec != std::errc{} || ptr != tail.data() + tail.size() || j < 1 || j > 64) return std::nullopt;
  return j;
}

std::vector<cd> hexagon_strip_points() { return regular_polygon(6, {0, 0}, 0.0); }

TilingGraph build(std::string_view name) {
  if (name == "square-weave") return build_periodic_tiling({1, 1}, {1, -1}, {{0, 0}, {1, 0}});
  if (name == "triaxial") return build_periodic_tiling({2, 0}, {1, kSqrt3}, hexagon_strip_points());
  if (name == "3.4.6.4") {
    const double d = 1 + kSqrt3;
    return build_periodic_tiling(std::polar(d, kPi / 6), std::polar(d, kPi / 2), regular_polygon(6, {0, 0}, 0.0));
  }
  if (name == "3.3.6.6") {
    auto pts = regular_polygon(6, {0, 0}, 0.0);
    const auto upper = regular_polygon(6, {0, kSqrt3}, 0.0);
    pts.insert(pts.end(), upper.begin(), upper.end());
    return build_periodic_tiling({2, 0}, {0, 2 * kSqrt3}, pts);
  }
  if (name == "3.4.4.6") {
    auto pts = hexagon_strip_points();
    pts.push_back({0.5, kSqrt3 / 2 + 1});
    pts.push_back({-0.5, kSqrt3 / 2 + 1});
    return build_periodic_tiling({2, 0}, {0, kSqrt3 + 1}, pts);
  }
  if (auto j = family_index(name)) {
    auto pts = hexagon_strip_points();
    for (int r = 1; r < 2 * *j; ++r) {
      pts.push_back({0.5, kSqrt3 / 2 + r});
      pts.push_back({-0.5, kSqrt3 / 2 + r});
    }
    return build_periodic_tiling({2, 0}, {1, kSqrt3 + 2 * *j}, pts);
  }
  if (name == "4.8.8") {
    const double d = 1 + std::sqrt(2.0);
    return build_periodic_tiling({d, 0}, {0, d}, regular_polygon(8, {0, 0}, kPi / 8));
  }
  if (name == "6.6.6") return build_periodic_tiling({kSqrt3, 0}, {0, 3}, [] {
      auto pts = regular_polygon(6, {0, 0}, kPi / 6);
      const auto other = regular_polygon(6, {kSqrt3 / 2, 1.5}, kPi / 6);
      pts.insert(pts.end(), other.begin(), other.end());
      return pts;
    }());
  if (name == "3.12.12") {
    const double d = 2 + kSqrt3;
    return build_periodic_tiling({d, 0}, std::polar(d, kPi / 3), regular_polygon(12, {0, 0}, kPi / 12));
  }
  if (name == "4.6.12") {
    const double d = 3 + kSqrt3;
    return build_periodic_tiling({d, 0}, std::polar(d, kPi / 3), regular_polygon(12, {0, 0}, kPi / 12));
  }
  throw Error(ErrorKind::Io, "unknown catalog entry '" + std::string(name) + "'");
}

}  // namespace

std::vector<CatalogEntry> catalog_entries() {
  return {
      {"square-weave", "4.4.4.4", "square weave, two crossings per domain"},
      {"triaxial", "3.6.3.6", "trihexagonal tiling, triaxial link"},
      {"3.4.6.4", "3.4.6.4", "rhombitrihexagonal tiling"},
      {"3.3.6.6", "3.3.6.6", "hexagon strips sharing edges, two strips per domain"},
      {"3.4.4.6", "3.4.4.6", "trihexagonal strip and one square row"},
      {"4.8.8", "4.8.8", "truncated square tiling, bigons on a perfect matching"},
      {"6.6.6", "6.6.6", "hexagonal tiling, bigons on a perfect matching"},
      {"3.12.12", "3.12.12", "truncated hexagonal tiling, bigons on a perfect matching"},
      {"4.6.12", "4.6.12", "truncated trihexagonal tiling, bigons on a perfect matching"},
      {"Lj:1", "3.4.4.6 + 4.4.4.4", "one hexagon and 4 squares per domain"},
      {"Lj:2", "3.4.4.6 + 4.4.4.4", "one hexagon and 8 squares per domain"},
      {"Lj:3", "3.4.4.6 + 4.4.4.4", "one hexagon and 12 squares per domain"},
  };
}

bool is_catalog_name(std::string_view name) {
  name = strip_suffix(name);
  if (family_index(name)) return true;
  for (const auto& e : catalog_entries())
    if (e.name == name) return true;
  return false;
}

TilingGraph catalog_tiling(std::string_view name) { return build(strip_suffix(name)); }

std::optional<std::string_view> frozen_tld(std::string_view name) {
  return detail::frozen_catalog_text(strip_suffix(name));
}

std::string generate_tld(std::string_view name) {
  const TilingGraph t = catalog_tiling(name);
  // Prefer the first realizable matching whose link has no cycle of tangles.
  std::optional<TorusDiagram> fallback;
  for (const auto& matching : perfect_matchings(t)) {
    std::optional<TorusDiagram> d;
    try {
      d = realize_link(t, matching);
    } catch (const Error&) {
      continue;
    }
    if (is_weakly_prime(*d).passed && has_cycle_of_tangles(*d).passed) return serialize(*d);
    if (!fallback) fallback = std::move(d);
  }
  if (!fallback) throw Error(ErrorKind::UnmatchedVertex, "catalog tiling has no realizable matching");
  return serialize(*fallback);
}

TorusDiagram catalog_link(std::string_view name) {
  if (!is_catalog_name(name)) throw Error(ErrorKind::Io, "unknown catalog entry '" + std::string(name) + "'");
  if (auto text = frozen_tld(name)) return parse_diagram(*text);
  return parse_diagram(generate_tld(name));
}

}  // namespace torihedra
