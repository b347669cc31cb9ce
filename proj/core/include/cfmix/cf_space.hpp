#pragma once

#include <cstdint>
#include <map>
#include <variant>
#include <vector>

#include "cfmix/cf_sequence.hpp"

namespace cfmix {

// [word]_level.
struct Cylinder {
  int level = 0;
  GroupElement word;
};

// A point of X_level truncated at `horizon`: (word, c_{level+1}, ..., c_horizon), the tail
// stored as indices into C_{level+1}, ..., C_horizon.
struct TruncatedPoint {
  int level = 0;
  GroupElement word;
  std::vector<std::uint32_t> tail;

  int horizon() const noexcept { return level + static_cast<int>(tail.size()); }
};

// The action left F_m for every m up to the horizon; `level` is the deepest level reached.
struct UndefinedAtHorizon {
  int level = 0;
};

// A finite disjoint union of cylinders, all at one level: the union of [f]_level, f in words.
struct Window {
  int level = 0;
  ElementSet words;

  // Normalizes to the deepest level among the parts; throws DisjointnessError on overlap.
  static Window from_cylinders(const CFSequence& seq, const std::vector<Cylinder>& parts);
  // X_n as a window: every word of F_n.
  static Window tower(const CFSequence& seq, int n);
};

// (lower, upper) bounds; equal when exact.
struct MeasureBounds {
  Rational lower;
  Rational upper;

  bool exact() const { return lower == upper; }
};

struct WindowImage {
  // Image of the resolved part, normalized to the deepest level where a piece landed.
  Window image;
  // Sub-cylinders of the source, at the last level tried, whose image escapes every F_m.
  Window unresolved;
  Rational unresolved_mass;
  bool fully_resolved = true;
};

// mu([f]_n) = 1 / (#C_1 ... #C_n). Throws std::invalid_argument when f is not in F_n.
Rational measure(const CFSequence& seq, const Cylinder& cyl);
Rational measure(const CFSequence& seq, const Window& w);

// {[f c]_{n+1} : c in C_{n+1}} in C order.
std::vector<Cylinder> refine(const CFSequence& seq, const Cylinder& cyl);

// C_{from+1} C_{from+2} ... C_to as a set ({identity} when from == to).
ElementSet word_extension(const CFSequence& seq, int from, int to);

// The same set of points at a deeper level.
Window refine_to(const CFSequence& seq, const Window& w, int level);

// Throws std::invalid_argument when the point's word or tail is not valid for seq.
void validate(const CFSequence& seq, const TruncatedPoint& p);

// Consumes tail entries until the point sits at `level` (level <= horizon).
TruncatedPoint promote(const CFSequence& seq, const TruncatedPoint& p, int level);

std::variant<TruncatedPoint, UndefinedAtHorizon> act_point(const CFSequence& seq,
                                                           const GroupElement& g,
                                                           const TruncatedPoint& p);

// Equality as points of X: both promoted to their common horizon.
bool same_point(const CFSequence& seq, const TruncatedPoint& a, const TruncatedPoint& b);

// Whether the point lies in the window. Throws ContainmentError when the window is finer than
// the point's horizon.
bool contains(const CFSequence& seq, const Window& w, const TruncatedPoint& p);

// Image of a window under T_g, promoting unresolved words up to max_level.
WindowImage act_window(const CFSequence& seq, const GroupElement& g, const Window& w,
                       int max_level);
WindowImage act_cylinder(const CFSequence& seq, const GroupElement& g, const Cylinder& cyl,
                         int max_level);

// Bounds for mu(T_g A intersect B).
MeasureBounds intersect_measure(const CFSequence& seq, const GroupElement& g, const Window& A,
                                const Window& B, int max_level);

// Set operations; the result sits at the deeper of the two levels.
Window window_intersection(const CFSequence& seq, const Window& a, const Window& b);
Window window_union(const CFSequence& seq, const Window& a, const Window& b);
Window window_difference(const CFSequence& seq, const Window& a, const Window& b);
bool window_subset(const CFSequence& seq, const Window& a, const Window& b);
bool windows_disjoint(const CFSequence& seq, const Window& a, const Window& b);

// Membership tests against one window at many point levels, caching the refinements.
class WindowIndex {
 public:
  WindowIndex(const CFSequence& seq, Window w);

  const Window& window() const noexcept { return window_; }
  bool contains(const TruncatedPoint& p) const;

 private:
  const CFSequence* seq_;
  Window window_;
  mutable std::map<int, ElementSet> refined_;
};

}  // namespace cfmix
