#include "skeinpos/diagram.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "skeinpos/errors.hpp"

namespace skeinpos {

namespace {

// Port directions for crossings drawn with straight strands.
constexpr int kEast = 0;
constexpr int kNorth = 1;
constexpr int kWest = 2;
constexpr int kSouth = 3;

std::string attachment_name(const Attachment& a) {
  if (a.is_port()) return "c" + std::to_string(a.index) + "." + std::to_string(a.slot);
  return "m" + std::to_string(a.index) + "@" + std::to_string(a.slot);
}

}  // namespace

SurfaceModel SurfaceModel::disk(std::vector<std::string> labels) {
  std::set<std::string> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size()) throw std::invalid_argument("disk marked points must be distinct");
  return {Kind::Disk, std::move(labels)};
}

SurfaceModel SurfaceModel::annulus() { return {Kind::Annulus, {}}; }

SurfaceModel SurfaceModel::marked_annulus() { return {Kind::MarkedAnnulus, {"p1", "p2"}}; }

int SurfaceModel::point_index(const std::string& label) const {
  auto it = std::find(points.begin(), points.end(), label);
  if (it == points.end()) throw std::invalid_argument("no marked point named '" + label + "'");
  return static_cast<int>(it - points.begin());
}

bool SurfaceModel::adjacent(int a, int b) const {
  const int n = point_count();
  if (kind != Kind::Disk || n < 2 || a == b) return false;
  if (a < 0 || b < 0 || a >= n || b >= n) return false;
  return (a + 1) % n == b || (b + 1) % n == a;
}

const Crossing* Diagram::find_crossing(int id) const {
  for (const auto& c : crossings)
    if (c.id == id) return &c;
  return nullptr;
}

void validate(const Diagram& d) {
  if (d.heights.size() != d.surface.points.size())
    throw StructureError("heights must list one count per marked point");
  std::set<int> ids;
  for (const auto& c : d.crossings)
    if (!ids.insert(c.id).second) throw StructureError("duplicate crossing id " + std::to_string(c.id));

  std::map<Attachment, int> uses;
  for (const auto& e : d.edges) {
    for (const Attachment& a : {e.from, e.to}) {
      if (a.is_port()) {
        if (!ids.count(a.index) || a.slot < 0 || a.slot > 3)
          throw StructureError("edge end " + attachment_name(a) + " names no crossing port");
      } else if (a.index < 0 || a.index >= d.surface.point_count() || a.slot < 0 ||
                 a.slot >= d.heights[static_cast<std::size_t>(a.index)]) {
        throw StructureError("edge end " + attachment_name(a) + " names no endpoint slot");
      }
      ++uses[a];
    }
    if (!d.surface.has_seam() && e.seam != 0) throw StructureError("seam count on a surface without a seam");
  }
  if (!d.surface.has_seam())
    for (int w : d.loops)
      if (w != 0) throw StructureError("seam count on a surface without a seam");

  for (const auto& [a, count] : uses)
    if (count != 1) throw StructureError("attachment " + attachment_name(a) + " used " + std::to_string(count) + " times");
  std::size_t expected = 4 * d.crossings.size();
  for (int h : d.heights) {
    if (h < 0) throw StructureError("negative endpoint count");
    expected += static_cast<std::size_t>(h);
  }
  if (uses.size() != expected) throw StructureError("some crossing port or endpoint slot is unused");
}

std::array<std::pair<int, int>, 2> smoothing_pairs(OverPair over, Sign sign) {
  // Positive: each over-port joins its counterclockwise neighbour.
  const bool even = over == OverPair::Even;
  const bool positive = sign == Sign::Positive;
  if (even == positive) return {{{0, 1}, {2, 3}}};
  return {{{1, 2}, {3, 0}}};
}

Diagram build_core_stack(int k) {
  if (k < 0) throw std::invalid_argument("core stack size must be nonnegative");
  Diagram d;
  d.surface = SurfaceModel::annulus();
  d.loops.assign(static_cast<std::size_t>(k), 1);
  return d;
}

Diagram build_theta_over_cores(int k) {
  if (k < 0) throw std::invalid_argument("core count must be nonnegative");
  // theta_0 runs north from p1 (inner) to p2 (outer) along the top of the
  // annulus; core j is the circle it meets at crossing j, counted outwards.
  // Each circle leaves its crossing eastwards, runs clockwise through the
  // seam at the bottom and returns from the west.
  Diagram d;
  d.surface = SurfaceModel::marked_annulus();
  d.heights = {1, 1};
  const Attachment p1 = Attachment::endpoint(0, 0);
  const Attachment p2 = Attachment::endpoint(1, 0);
  if (k == 0) {
    d.edges.push_back({p1, p2, 0});
    return d;
  }
  for (int j = 0; j < k; ++j) {
    d.crossings.push_back({j, OverPair::Odd});
    d.edges.push_back({Attachment::port(j, kEast), Attachment::port(j, kWest), 1});
  }
  d.edges.push_back({p1, Attachment::port(0, kSouth), 0});
  for (int j = 0; j + 1 < k; ++j) d.edges.push_back({Attachment::port(j, kNorth), Attachment::port(j + 1, kSouth), 0});
  d.edges.push_back({Attachment::port(k - 1, kNorth), p2, 0});
  return d;
}

SurfaceModel disk_dn(int n) {
  if (n < 1) throw std::invalid_argument("D_n needs n >= 1");
  std::vector<std::string> labels;
  for (int i = 0; i <= n + 1; ++i) labels.push_back("p" + std::to_string(i));
  for (int i = n; i >= 1; --i) labels.push_back("q" + std::to_string(i));
  return SurfaceModel::disk(std::move(labels));
}

namespace {

int dn_p(int i) { return i; }
int dn_q(int n, int i) { return 2 * n + 2 - i; }

std::vector<int> dn_heights(int k, int n) {
  std::vector<int> h(static_cast<std::size_t>(2 * n + 2), 1);
  h[static_cast<std::size_t>(dn_p(0))] = k;
  h[static_cast<std::size_t>(dn_p(n + 1))] = k;
  return h;
}

// Strand l of x^k (1-based, counted from the p side) sits at level k - l at
// both of its ends, so the strand nearest the p side is on top.
int dn_level(int k, int l) { return k - l; }

}  // namespace

Diagram build_xk_yn(int k, int n) {
  if (k < 1 || n < 1) throw std::invalid_argument("x^k y_n needs k >= 1 and n >= 1");
  // Drawn with p0 at the bottom, p{n+1} at the top and the p side to the
  // east: strand l of x^k is the l-th vertical line from the east, y_m the
  // horizontal line from p_m (east) to q_m (west). Crossing E(l,m) has id
  // (l-1)n + (m-1) and the vertical strand on top.
  auto id = [n](int l, int m) { return (l - 1) * n + (m - 1); };
  Diagram d;
  d.surface = disk_dn(n);
  d.heights = dn_heights(k, n);
  for (int l = 1; l <= k; ++l)
    for (int m = 1; m <= n; ++m) d.crossings.push_back({id(l, m), OverPair::Odd});

  for (int l = 1; l <= k; ++l) {
    d.edges.push_back({Attachment::endpoint(dn_p(0), dn_level(k, l)), Attachment::port(id(l, 1), kSouth), 0});
    for (int m = 1; m < n; ++m)
      d.edges.push_back({Attachment::port(id(l, m), kNorth), Attachment::port(id(l, m + 1), kSouth), 0});
    d.edges.push_back({Attachment::port(id(l, n), kNorth), Attachment::endpoint(dn_p(n + 1), dn_level(k, l)), 0});
  }
  for (int m = 1; m <= n; ++m) {
    d.edges.push_back({Attachment::endpoint(dn_p(m), 0), Attachment::port(id(1, m), kEast), 0});
    for (int l = 1; l < k; ++l)
      d.edges.push_back({Attachment::port(id(l, m), kWest), Attachment::port(id(l + 1, m), kEast), 0});
    d.edges.push_back({Attachment::port(id(k, m), kWest), Attachment::endpoint(dn_q(n, m), 0), 0});
  }
  return d;
}

Diagram build_zkn(int k, int n) {
  if (k < 1 || n < 1) throw std::invalid_argument("z_{k,n} needs k >= 1 and n >= 1");
  if (k > n) throw std::invalid_argument("z_{k,n} needs k <= n");
  // Negative smoothings turn every strand into a staircase towards the
  // north-west: strand l of x^k ends at q_{k-l+1}, y_m ends at q_{m+k} when
  // m + k <= n and otherwise at the top of strand n - m + 1.
  Diagram d;
  d.surface = disk_dn(n);
  d.heights = dn_heights(k, n);
  for (int l = 1; l <= k; ++l)
    d.edges.push_back({Attachment::endpoint(dn_p(0), dn_level(k, l)), Attachment::endpoint(dn_q(n, k - l + 1), 0), 0});
  for (int m = 1; m <= n; ++m) {
    if (m + k <= n) {
      d.edges.push_back({Attachment::endpoint(dn_p(m), 0), Attachment::endpoint(dn_q(n, m + k), 0), 0});
    } else {
      d.edges.push_back(
          {Attachment::endpoint(dn_p(m), 0), Attachment::endpoint(dn_p(n + 1), dn_level(k, n - m + 1)), 0});
    }
  }
  return d;
}

Diagram build_d1_xy() { return build_xk_yn(1, 1); }

Diagram build_kink(Sign sign) {
  // Ports 0-1 close up into the small lobe, 2-3 into the outer loop.
  Diagram d;
  d.surface = SurfaceModel::disk({});
  d.crossings.push_back({0, sign == Sign::Positive ? OverPair::Even : OverPair::Odd});
  d.edges.push_back({Attachment::port(0, 0), Attachment::port(0, 1), 0});
  d.edges.push_back({Attachment::port(0, 2), Attachment::port(0, 3), 0});
  return d;
}

namespace {

std::size_t find_edge_at(const std::vector<Edge>& edges, const Attachment& a) {
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (edges[i].from == a || edges[i].to == a) return i;
  throw StructureError("no edge at " + attachment_name(a));
}

// Reorients e so that it ends at a.
Edge ending_at(const Edge& e, const Attachment& a) {
  if (e.to == a) return e;
  return {e.to, e.from, -e.seam};
}

}  // namespace

Diagram resolve_crossing(const Diagram& d, int id, Sign sign) {
  const Crossing* c = d.find_crossing(id);
  if (c == nullptr) throw std::invalid_argument("no crossing with id " + std::to_string(id));
  Diagram out = d;
  out.crossings.erase(std::find(out.crossings.begin(), out.crossings.end(), *c));

  for (auto [p, r] : smoothing_pairs(c->over, sign)) {
    const Attachment a = Attachment::port(id, p);
    const Attachment b = Attachment::port(id, r);
    std::size_t ia = find_edge_at(out.edges, a);
    std::size_t ib = find_edge_at(out.edges, b);
    if (ia == ib) {
      // The edge already runs between the two joined ports: a closed loop.
      out.loops.push_back(ending_at(out.edges[ia], b).seam);
      out.edges.erase(out.edges.begin() + static_cast<std::ptrdiff_t>(ia));
      continue;
    }
    Edge in = ending_at(out.edges[ia], a);
    Edge leave = ending_at(out.edges[ib], b);
    Edge merged{in.from, leave.from, in.seam - leave.seam};
    out.edges.erase(out.edges.begin() + static_cast<std::ptrdiff_t>(std::max(ia, ib)));
    out.edges.erase(out.edges.begin() + static_cast<std::ptrdiff_t>(std::min(ia, ib)));
    out.edges.push_back(merged);
  }
  return out;
}

std::string to_string(Sign s) { return s == Sign::Positive ? "+" : "-"; }

nlohmann::ordered_json to_json(const SurfaceModel& s) {
  nlohmann::ordered_json j;
  switch (s.kind) {
    case SurfaceModel::Kind::Disk: j["kind"] = "disk"; break;
    case SurfaceModel::Kind::Annulus: j["kind"] = "annulus"; break;
    case SurfaceModel::Kind::MarkedAnnulus: j["kind"] = "marked_annulus"; break;
  }
  j["points"] = s.points;
  return j;
}

nlohmann::ordered_json to_json(const Diagram& d) {
  auto attachment = [&d](const Attachment& a) {
    nlohmann::ordered_json j;
    if (a.is_port()) {
      j["crossing"] = a.index;
      j["port"] = a.slot;
    } else {
      j["point"] = d.surface.points.at(static_cast<std::size_t>(a.index));
      j["level"] = a.slot;
    }
    return j;
  };
  nlohmann::ordered_json j;
  j["surface"] = to_json(d.surface);
  j["crossings"] = nlohmann::ordered_json::array();
  for (const auto& c : d.crossings)
    j["crossings"].push_back({{"id", c.id}, {"over", c.over == OverPair::Even ? std::vector{0, 2} : std::vector{1, 3}}});
  j["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : d.edges)
    j["edges"].push_back({{"from", attachment(e.from)}, {"to", attachment(e.to)}, {"seam", e.seam}});
  j["loops"] = d.loops;
  nlohmann::ordered_json heights = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < d.heights.size(); ++i) heights[d.surface.points[i]] = d.heights[i];
  j["heights"] = heights;
  return j;
}

}  // namespace skeinpos
