#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace skeinpos {

enum class Sign { Positive, Negative };

/**
 * The surfaces diagrams live on.
 *
 * Disk: marked points listed in cyclic boundary order.
 * Annulus: no marked points.
 * MarkedAnnulus: point "p1" on the inner boundary, "p2" on the outer one.
 *
 * Annulus models carry one seam, a radial cut through neither marked point.
 * Edges record signed seam crossings; crossing in the clockwise sense
 * counts +1.
 */
struct SurfaceModel {
  enum class Kind { Disk, Annulus, MarkedAnnulus };

  Kind kind = Kind::Disk;
  std::vector<std::string> points;

  static SurfaceModel disk(std::vector<std::string> labels);
  static SurfaceModel annulus();
  static SurfaceModel marked_annulus();

  bool has_seam() const { return kind != Kind::Disk; }
  int point_count() const { return static_cast<int>(points.size()); }
  /// Throws std::invalid_argument for an unknown label.
  int point_index(const std::string& label) const;
  /// Neighbours in the cyclic boundary order of a disk.
  bool adjacent(int a, int b) const;

  friend bool operator==(const SurfaceModel&, const SurfaceModel&) = default;
};

/// Which diagonal of a crossing carries the over-strand: ports {0,2} or {1,3}.
enum class OverPair { Even, Odd };

/// Ports are numbered 0..3 counterclockwise around the crossing.
struct Crossing {
  int id = 0;
  OverPair over = OverPair::Even;
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// Where an edge end attaches: a crossing port, or a height level at a marked point.
struct Attachment {
  enum class Kind : std::uint8_t { Port, Endpoint };

  Kind kind = Kind::Port;
  int index = 0;  // crossing id, or marked point index
  int slot = 0;   // port 0..3, or level counted from the bottom

  static Attachment port(int crossing, int port) { return {Kind::Port, crossing, port}; }
  static Attachment endpoint(int point, int level) { return {Kind::Endpoint, point, level}; }

  bool is_port() const { return kind == Kind::Port; }
  bool is_endpoint() const { return kind == Kind::Endpoint; }

  friend auto operator<=>(const Attachment&, const Attachment&) = default;
};

/// seam counts crossings of the seam while walking from -> to.
struct Edge {
  Attachment from;
  Attachment to;
  int seam = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/**
 * A framed tangle diagram (blackboard framing) on one of the supported
 * surfaces.
 *
 * Every crossing port and every (point, level) endpoint slot is used by
 * exactly one edge end. Closed components without crossings are kept in
 * loops by their seam count. heights[p] is the number of strand ends at
 * marked point p, stacked bottom to top as levels 0..heights[p]-1.
 *
 * Diagrams are only produced by the builders below and by resolve_crossing,
 * which keep them embedded; planarity is not re-checked.
 */
struct Diagram {
  SurfaceModel surface;
  std::vector<Crossing> crossings;
  std::vector<Edge> edges;
  std::vector<int> loops;
  std::vector<int> heights;

  std::size_t crossing_count() const { return crossings.size(); }
  bool crossingless() const { return crossings.empty(); }
  /// nullptr when absent.
  const Crossing* find_crossing(int id) const;

  friend bool operator==(const Diagram&, const Diagram&) = default;
};

/// Throws StructureError when the port/endpoint bijection or seam rules fail.
void validate(const Diagram& d);

/**
 * The two port pairings produced by smoothing a crossing.
 *
 * With the over-strand on ports {0,2}, the positive smoothing joins 0-1 and
 * 2-3 and the negative one joins 0-3 and 1-2; the {1,3} case is the same
 * rule rotated by one port. This chirality is the one under which
 * theta_0 . z = q theta_1 + q^-1 theta_-1.
 */
std::array<std::pair<int, int>, 2> smoothing_pairs(OverPair over, Sign sign);

// Builders.

/// k parallel copies of the annulus core.
Diagram build_core_stack(int k);
/// The radial arc theta_0 from p1 to p2 lying over k core-parallel loops.
Diagram build_theta_over_cores(int k);

/// Marked point labels of D_n: p0, p1, ..., p{n+1}, qn, ..., q1.
SurfaceModel disk_dn(int n);

/**
 * x^k y_n on D_n: k strands from p0 to p{n+1} crossing over the n strands
 * p_i q_i; kn crossings. Requires k, n >= 1.
 */
Diagram build_xk_yn(int k, int n);
/// The all-negative smoothing of build_xk_yn(k, n), built directly. Requires 1 <= k <= n.
Diagram build_zkn(int k, int n);
/// x = p0p2 over y = p1q1 on D_1.
Diagram build_d1_xy();
/// One closed loop on a disk with a single self-crossing (a framing kink).
Diagram build_kink(Sign sign);

/// Smooths one crossing. Throws std::invalid_argument for an unknown id.
Diagram resolve_crossing(const Diagram& d, int id, Sign sign);

std::string to_string(Sign s);
nlohmann::ordered_json to_json(const Diagram& d);
nlohmann::ordered_json to_json(const SurfaceModel& s);

}  // namespace skeinpos
