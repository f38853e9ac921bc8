#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "skeinpos/diagram.hpp"
#include "skeinpos/laurent.hpp"
#include "skeinpos/sequences.hpp"

namespace skeinpos {

/// z^power in the annulus.
struct AnnulusPower {
  int power = 0;
  friend auto operator<=>(const AnnulusPower&, const AnnulusPower&) = default;
};

/// theta_winding in the marked annulus. Canonical order lists larger windings first.
struct AioArc {
  int winding = 0;
  friend bool operator==(const AioArc&, const AioArc&) = default;
  friend bool operator<(const AioArc& a, const AioArc& b) { return a.winding > b.winding; }
};

struct ChordEnd {
  int point = 0;
  int level = 0;
  friend auto operator<=>(const ChordEnd&, const ChordEnd&) = default;
};

/**
 * Crossingless disk diagram: a pairing of endpoint slots.
 *
 * chords is sorted, each pair with its smaller end first. The level of each
 * end records the height order at its marked point.
 */
struct DiskMatching {
  std::vector<std::string> labels;
  std::vector<std::pair<ChordEnd, ChordEnd>> chords;
  friend auto operator<=>(const DiskMatching&, const DiskMatching&) = default;
};

using BasisElement = std::variant<AnnulusPower, AioArc, DiskMatching>;

/// Canonical descriptor: "z^3", "theta_-2", "chords[(p0,q1),(p1,p2)]".
/// Ends at points holding several strands carry their level, as in "p0.1".
std::string describe(const BasisElement& b);

/// True when no two chords interleave around the boundary.
bool is_noncrossing(const DiskMatching& m);

/// Finite R-linear combination of basis elements of a single surface.
class SkeinVector {
public:
  using TermMap = std::map<BasisElement, LaurentPoly>;

  SkeinVector() = default;
  SkeinVector(const BasisElement& b, const LaurentPoly& coeff);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LaurentPoly coeff(const BasisElement& b) const;

  /// Throws std::invalid_argument when mixing basis elements of different surfaces.
  void add(const BasisElement& b, const LaurentPoly& coeff);
  SkeinVector& operator+=(const SkeinVector& other);
  SkeinVector scaled(const LaurentPoly& s) const;

  friend SkeinVector operator+(SkeinVector a, const SkeinVector& b) { return a += b; }
  friend bool operator==(const SkeinVector&, const SkeinVector&) = default;

private:
  TermMap terms_;
};

/// Two-sided ideal spanned by the listed boundary chords.
struct IdealSpec {
  std::vector<std::pair<std::string, std::string>> generators;

  /// gamma_i = p_i p_{i+1} for i < n, on D_n.
  static IdealSpec gammas(int n);
  /// Every boundary chord of a disk.
  static IdealSpec boundary(const SurfaceModel& s);
};

// Components of a crossingless diagram.

/// Loops are unoriented, so windings are reported as |seam count|.
struct LoopClass {
  int winding = 0;
};

/// Arcs are oriented from a to b; on the marked annulus a is p1.
struct ArcClass {
  ChordEnd a;
  ChordEnd b;
  int winding = 0;
};

struct Classification {
  std::vector<LoopClass> loops;
  std::vector<ArcClass> arcs;
};

/// Throws std::invalid_argument if d has crossings.
Classification classify_components(const Diagram& d);

struct SkeinTerm {
  BasisElement basis;
  LaurentPoly coeff;
  friend bool operator==(const SkeinTerm&, const SkeinTerm&) = default;
};

/**
 * Reduces a crossingless diagram to coeff * basis element.
 *
 * Trivial loops contribute -q^2 - q^-2 each. On a disk a strand with both
 * ends at one marked point kills the diagram (nullopt). Throws
 * StructureError for components that cannot occur in an embedded diagram,
 * such as an essential loop next to the arc of the marked annulus.
 */
std::optional<SkeinTerm> normal_form(const Diagram& d);
std::optional<SkeinTerm> normal_form(const SurfaceModel& s, const Classification& c);

struct ResolveOptions {
  std::size_t crossing_cap = 24;
  unsigned jobs = 1;
};

struct ResolveStats {
  std::uint64_t states = 0;
  std::uint64_t zero_states = 0;      // killed by a cap
  std::uint64_t discarded_states = 0; // landed in the ideal
};

/**
 * Visits every resolution of d in mask order. Bit i of the mask is set when
 * d.crossings[i] is smoothed positively; the exponent is #positive -
 * #negative.
 */
void for_each_state(const Diagram& d,
                    const std::function<void(std::uint64_t mask, int q_exponent, const Classification&)>& visit,
                    std::size_t crossing_cap = 24);

/// Kauffman state sum over all 2^c resolutions. Throws CrossingCapExceeded.
SkeinVector resolve_all(const Diagram& d, const ResolveOptions& options = {}, ResolveStats* stats = nullptr);

/// As resolve_all, dropping states with a chord in the ideal. Disk diagrams only.
SkeinVector resolve_all_mod(const Diagram& d, const IdealSpec& ideal, const ResolveOptions& options = {},
                            ResolveStats* stats = nullptr);

/// theta_0 placed over p(z): linear extension of resolve_all(build_theta_over_cores(k)).
SkeinVector theta_bullet(const UniPoly& p, const ResolveOptions& options = {});

/// Replaces every coefficient by its value at q = 1.
SkeinVector specialize_q1(const SkeinVector& v);

nlohmann::ordered_json to_json(const SkeinVector& v);
/// "q·theta_1 + q^-1·theta_-1"; "0" for the empty vector.
std::string to_string(const SkeinVector& v);

}  // namespace skeinpos
