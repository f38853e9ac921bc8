#include "skeinpos/skein.hpp"

#include <algorithm>
#include <bit>
#include <exception>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "skeinpos/errors.hpp"

namespace skeinpos {

namespace {

std::string end_label(const DiskMatching& m, const ChordEnd& e, const std::map<int, int>& arity) {
  std::string s = m.labels.at(static_cast<std::size_t>(e.point));
  auto it = arity.find(e.point);
  if (it != arity.end() && it->second > 1) s += "." + std::to_string(e.level);
  return s;
}

int surface_tag(const BasisElement& b) { return static_cast<int>(b.index()); }

}  // namespace

std::string describe(const BasisElement& b) {
  if (const auto* z = std::get_if<AnnulusPower>(&b)) return "z^" + std::to_string(z->power);
  if (const auto* t = std::get_if<AioArc>(&b)) return "theta_" + std::to_string(t->winding);
  const auto& m = std::get<DiskMatching>(b);
  std::map<int, int> arity;
  for (const auto& [a, c] : m.chords) {
    ++arity[a.point];
    ++arity[c.point];
  }
  std::string s = "chords[";
  for (std::size_t i = 0; i < m.chords.size(); ++i) {
    if (i != 0) s += ",";
    s += "(" + end_label(m, m.chords[i].first, arity) + "," + end_label(m, m.chords[i].second, arity) + ")";
  }
  return s + "]";
}

bool is_noncrossing(const DiskMatching& m) {
  auto strictly_between = [](int x, int lo, int hi) { return lo < x && x < hi; };
  for (std::size_t i = 0; i < m.chords.size(); ++i) {
    for (std::size_t j = i + 1; j < m.chords.size(); ++j) {
      int a = m.chords[i].first.point, b = m.chords[i].second.point;
      int c = m.chords[j].first.point, d = m.chords[j].second.point;
      if (a == c || a == d || b == c || b == d) continue;
      if (a > b) std::swap(a, b);
      if (strictly_between(c, a, b) != strictly_between(d, a, b)) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// SkeinVector

SkeinVector::SkeinVector(const BasisElement& b, const LaurentPoly& coeff) { add(b, coeff); }

LaurentPoly SkeinVector::coeff(const BasisElement& b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void SkeinVector::add(const BasisElement& b, const LaurentPoly& coeff) {
  if (coeff.is_zero()) return;
  if (!terms_.empty() && surface_tag(terms_.begin()->first) != surface_tag(b))
    throw std::invalid_argument("skein vector mixes basis elements of different surfaces");
  auto [it, inserted] = terms_.try_emplace(b, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

SkeinVector& SkeinVector::operator+=(const SkeinVector& other) {
  for (const auto& [b, c] : other.terms_) add(b, c);
  return *this;
}

SkeinVector SkeinVector::scaled(const LaurentPoly& s) const {
  SkeinVector r;
  if (s.is_zero()) return r;
  for (const auto& [b, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), b, s * c);
  return r;
}

IdealSpec IdealSpec::gammas(int n) {
  IdealSpec ideal;
  for (int i = 0; i < n; ++i) ideal.generators.emplace_back("p" + std::to_string(i), "p" + std::to_string(i + 1));
  return ideal;
}

IdealSpec IdealSpec::boundary(const SurfaceModel& s) {
  IdealSpec ideal;
  const int n = s.point_count();
  if (s.kind != SurfaceModel::Kind::Disk || n < 2) return ideal;
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    if (n == 2 && i == 1) break;
    ideal.generators.emplace_back(s.points[static_cast<std::size_t>(i)], s.points[static_cast<std::size_t>(j)]);
  }
  return ideal;
}

// ---------------------------------------------------------------------------
// Classification and normal form

namespace {

ArcClass oriented_arc(ChordEnd a, ChordEnd b, int seam) {
  if (b < a) return {b, a, -seam};
  return {a, b, seam};
}

struct Reduced {
  BasisElement basis;
  int trivial_loops = 0;
};

std::optional<Reduced> reduce(const SurfaceModel& s, const Classification& c) {
  int trivial = 0;
  switch (s.kind) {
    case SurfaceModel::Kind::Annulus: {
      if (!c.arcs.empty()) throw StructureError("arc in an annulus without marked points");
      int cores = 0;
      for (const auto& loop : c.loops) {
        if (loop.winding == 0) ++trivial;
        else if (loop.winding == 1) ++cores;
        else throw StructureError("embedded annulus loop with winding " + std::to_string(loop.winding));
      }
      return Reduced{AnnulusPower{cores}, trivial};
    }
    case SurfaceModel::Kind::MarkedAnnulus: {
      for (const auto& loop : c.loops) {
        if (loop.winding != 0) throw StructureError("essential loop alongside the arc of the marked annulus");
        ++trivial;
      }
      if (c.arcs.size() != 1 || c.arcs[0].a.point != 0 || c.arcs[0].b.point != 1)
        throw StructureError("marked annulus state must consist of one arc from p1 to p2");
      return Reduced{AioArc{c.arcs[0].winding}, trivial};
    }
    case SurfaceModel::Kind::Disk: {
      trivial = static_cast<int>(c.loops.size());
      DiskMatching m;
      m.labels = s.points;
      m.chords.reserve(c.arcs.size());
      for (const auto& arc : c.arcs) {
        // Both ends at one marked point: innermost such strand bounds an
        // empty disk, so the whole diagram vanishes.
        if (arc.a.point == arc.b.point) return std::nullopt;
        m.chords.emplace_back(arc.a, arc.b);
      }
      std::sort(m.chords.begin(), m.chords.end());
      return Reduced{std::move(m), trivial};
    }
  }
  throw std::logic_error("unknown surface kind");
}

const LaurentPoly& trivial_loop_power(int m) {
  static const std::vector<LaurentPoly> cache = [] {
    std::vector<LaurentPoly> v{LaurentPoly(1)};
    for (int i = 1; i <= 64; ++i) v.push_back(v.back() * trivial_loop_value());
    return v;
  }();
  if (m < 0 || m >= static_cast<int>(cache.size())) throw std::out_of_range("too many trivial loops");
  return cache[static_cast<std::size_t>(m)];
}

}  // namespace

Classification classify_components(const Diagram& d) {
  if (!d.crossingless()) throw std::invalid_argument("classify_components needs a crossingless diagram");
  Classification c;
  for (int w : d.loops) c.loops.push_back({std::abs(w)});
  for (const auto& e : d.edges) {
    if (!e.from.is_endpoint() || !e.to.is_endpoint()) throw StructureError("dangling crossing port");
    c.arcs.push_back(oriented_arc({e.from.index, e.from.slot}, {e.to.index, e.to.slot}, e.seam));
  }
  return c;
}

std::optional<SkeinTerm> normal_form(const SurfaceModel& s, const Classification& c) {
  auto r = reduce(s, c);
  if (!r) return std::nullopt;
  return SkeinTerm{std::move(r->basis), trivial_loop_power(r->trivial_loops)};
}

std::optional<SkeinTerm> normal_form(const Diagram& d) { return normal_form(d.surface, classify_components(d)); }

// ---------------------------------------------------------------------------
// State expansion

namespace {

/**
 * Walks the components of one resolution without materializing a Diagram.
 *
 * Nodes 4i..4i+3 are the ports of d.crossings[i]; endpoint slots follow.
 * Every node has one edge partner, and every port node additionally has a
 * smoothing partner chosen by the state mask.
 */
class StateTracer {
public:
  explicit StateTracer(const Diagram& d) : free_loops_(d.loops) {
    std::map<int, int> position;
    for (std::size_t i = 0; i < d.crossings.size(); ++i) {
      position[d.crossings[i].id] = static_cast<int>(i);
      over_.push_back(d.crossings[i].over);
    }
    port_nodes_ = 4 * static_cast<int>(d.crossings.size());
    std::vector<int> offset;
    int total = port_nodes_;
    for (int h : d.heights) {
      offset.push_back(total);
      total += h;
    }
    mate_.assign(static_cast<std::size_t>(total), -1);
    seam_.assign(static_cast<std::size_t>(total), 0);
    end_of_.assign(static_cast<std::size_t>(total), ChordEnd{});
    for (std::size_t p = 0; p < d.heights.size(); ++p)
      for (int l = 0; l < d.heights[p]; ++l)
        end_of_[static_cast<std::size_t>(offset[p] + l)] = {static_cast<int>(p), l};

    auto node = [&](const Attachment& a) {
      if (a.is_port()) return 4 * position.at(a.index) + a.slot;
      return offset.at(static_cast<std::size_t>(a.index)) + a.slot;
    };
    for (const auto& e : d.edges) {
      const int u = node(e.from), v = node(e.to);
      mate_[static_cast<std::size_t>(u)] = v;
      mate_[static_cast<std::size_t>(v)] = u;
      seam_[static_cast<std::size_t>(u)] = e.seam;
      seam_[static_cast<std::size_t>(v)] = -e.seam;
    }
    for (int over = 0; over < 2; ++over) {
      for (int sign = 0; sign < 2; ++sign) {
        auto pairs = smoothing_pairs(over == 0 ? OverPair::Even : OverPair::Odd,
                                     sign == 0 ? Sign::Positive : Sign::Negative);
        for (auto [a, b] : pairs) {
          partner_[over][sign][a] = b;
          partner_[over][sign][b] = a;
        }
      }
    }
    visited_.assign(mate_.size(), 0);
  }

  void trace(std::uint64_t mask, Classification& out) {
    std::fill(visited_.begin(), visited_.end(), 0);
    out.loops.clear();
    out.arcs.clear();
    for (int w : free_loops_) out.loops.push_back({std::abs(w)});

    const int total = static_cast<int>(mate_.size());
    for (int start = port_nodes_; start < total; ++start) {
      if (visited_[static_cast<std::size_t>(start)]) continue;
      int seam = 0;
      int cur = start;
      visited_[static_cast<std::size_t>(cur)] = 1;
      while (true) {
        const int next = mate_[static_cast<std::size_t>(cur)];
        seam += seam_[static_cast<std::size_t>(cur)];
        visited_[static_cast<std::size_t>(next)] = 1;
        if (next >= port_nodes_) {
          out.arcs.push_back(oriented_arc(end_of_[static_cast<std::size_t>(start)],
                                          end_of_[static_cast<std::size_t>(next)], seam));
          break;
        }
        cur = smooth(next, mask);
        visited_[static_cast<std::size_t>(cur)] = 1;
      }
    }
    for (int start = 0; start < port_nodes_; ++start) {
      if (visited_[static_cast<std::size_t>(start)]) continue;
      int seam = 0;
      int cur = start;
      do {
        visited_[static_cast<std::size_t>(cur)] = 1;
        const int next = mate_[static_cast<std::size_t>(cur)];
        seam += seam_[static_cast<std::size_t>(cur)];
        visited_[static_cast<std::size_t>(next)] = 1;
        cur = smooth(next, mask);
      } while (cur != start);
      out.loops.push_back({std::abs(seam)});
    }
  }

private:
  int smooth(int port_node, std::uint64_t mask) const {
    const int crossing = port_node / 4;
    const int port = port_node % 4;
    const int over = over_[static_cast<std::size_t>(crossing)] == OverPair::Even ? 0 : 1;
    const int sign = ((mask >> crossing) & 1u) != 0 ? 0 : 1;
    return 4 * crossing + partner_[over][sign][port];
  }

  std::vector<int> free_loops_;
  std::vector<OverPair> over_;
  int port_nodes_ = 0;
  std::vector<int> mate_;
  std::vector<int> seam_;
  std::vector<ChordEnd> end_of_;
  int partner_[2][2][4] = {};
  std::vector<char> visited_;
};

void check_cap(const Diagram& d, std::size_t cap) {
  if (d.crossing_count() > cap) throw CrossingCapExceeded(d.crossing_count(), cap);
  if (d.crossing_count() >= 63) throw CrossingCapExceeded(d.crossing_count(), 62);
}

using PairSet = std::set<std::pair<int, int>>;

// Per basis element: state counts keyed by (q exponent, trivial loops).
using Tally = std::map<BasisElement, std::map<std::pair<int, int>, std::int64_t>>;

bool in_ideal(const DiskMatching& m, const PairSet& ideal) {
  for (const auto& [a, b] : m.chords)
    if (ideal.count({std::min(a.point, b.point), std::max(a.point, b.point)})) return true;
  return false;
}

SkeinVector expand(const Diagram& d, const ResolveOptions& options, const PairSet* ideal, ResolveStats* stats) {
  check_cap(d, options.crossing_cap);
  const int c = static_cast<int>(d.crossing_count());
  const std::uint64_t states = std::uint64_t{1} << c;
  unsigned jobs = options.jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.jobs;
  jobs = static_cast<unsigned>(std::min<std::uint64_t>(jobs, states));

  struct Partial {
    Tally tally;
    ResolveStats stats;
    std::exception_ptr error;
  };
  std::vector<Partial> partials(jobs);

  auto work = [&](unsigned w) {
    Partial& part = partials[w];
    try {
      StateTracer tracer(d);
      Classification cls;
      const std::uint64_t begin = states * w / jobs;
      const std::uint64_t end = states * (w + 1) / jobs;
      for (std::uint64_t mask = begin; mask < end; ++mask) {
        ++part.stats.states;
        tracer.trace(mask, cls);
        auto r = reduce(d.surface, cls);
        if (!r) {
          ++part.stats.zero_states;
          continue;
        }
        if (ideal != nullptr && in_ideal(std::get<DiskMatching>(r->basis), *ideal)) {
          ++part.stats.discarded_states;
          continue;
        }
        const int positives = std::popcount(mask);
        part.tally[std::move(r->basis)][{2 * positives - c, r->trivial_loops}] += 1;
      }
    } catch (...) {
      part.error = std::current_exception();
    }
  };

  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(jobs);
    for (unsigned w = 0; w < jobs; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }

  Tally merged;
  ResolveStats total;
  for (auto& part : partials) {
    if (part.error) std::rethrow_exception(part.error);
    for (auto& [basis, counts] : part.tally)
      for (const auto& [key, n] : counts) merged[basis][key] += n;
    total.states += part.stats.states;
    total.zero_states += part.stats.zero_states;
    total.discarded_states += part.stats.discarded_states;
  }
  if (stats != nullptr) *stats = total;

  SkeinVector out;
  for (const auto& [basis, counts] : merged) {
    LaurentPoly coeff;
    for (const auto& [key, n] : counts)
      coeff += trivial_loop_power(key.second).shifted(key.first) * LaurentPoly(static_cast<long long>(n));
    out.add(basis, coeff);
  }
  return out;
}

}  // namespace

void for_each_state(const Diagram& d,
                    const std::function<void(std::uint64_t mask, int q_exponent, const Classification&)>& visit,
                    std::size_t crossing_cap) {
  check_cap(d, crossing_cap);
  const int c = static_cast<int>(d.crossing_count());
  StateTracer tracer(d);
  Classification cls;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << c); ++mask) {
    tracer.trace(mask, cls);
    visit(mask, 2 * std::popcount(mask) - c, cls);
  }
}

SkeinVector resolve_all(const Diagram& d, const ResolveOptions& options, ResolveStats* stats) {
  return expand(d, options, nullptr, stats);
}

SkeinVector resolve_all_mod(const Diagram& d, const IdealSpec& ideal, const ResolveOptions& options,
                            ResolveStats* stats) {
  if (d.surface.kind != SurfaceModel::Kind::Disk)
    throw std::invalid_argument("quotients by boundary-arc ideals are only supported on disks");
  PairSet generators;
  for (const auto& [a, b] : ideal.generators) {
    const int i = d.surface.point_index(a);
    const int j = d.surface.point_index(b);
    if (!d.surface.adjacent(i, j))
      throw std::invalid_argument("ideal generator (" + a + "," + b + ") is not a boundary chord");
    generators.insert({std::min(i, j), std::max(i, j)});
  }
  return expand(d, options, &generators, stats);
}

SkeinVector theta_bullet(const UniPoly& p, const ResolveOptions& options) {
  SkeinVector out;
  for (int k = 0; k <= p.degree(); ++k) {
    const LaurentPoly& c = p.coeffs()[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    out += resolve_all(build_theta_over_cores(k), options).scaled(c);
  }
  return out;
}

SkeinVector specialize_q1(const SkeinVector& v) {
  SkeinVector out;
  for (const auto& [b, c] : v.terms()) out.add(b, LaurentPoly(eval_q1(c)));
  return out;
}

nlohmann::ordered_json to_json(const SkeinVector& v) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& [b, c] : v.terms()) {
    nlohmann::ordered_json term;
    term["basis"] = describe(b);
    term["coeff"] = to_json(c);
    j.push_back(term);
  }
  return j;
}

std::string to_string(const SkeinVector& v) {
  if (v.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [b, c] : v.terms()) {
    const bool negative = c.is_monomial() && c.terms().begin()->second < 0;
    const LaurentPoly mag = negative ? -c : c;
    if (first) os << (negative ? "-" : "");
    else os << (negative ? " - " : " + ");
    first = false;
    if (mag != LaurentPoly(1)) os << (mag.is_monomial() ? mag.to_string() : "(" + mag.to_string() + ")") << "·";
    os << describe(b);
  }
  return os.str();
}

}  // namespace skeinpos
