#include "cfmix/cf_space.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "cfmix/errors.hpp"

namespace cfmix {

namespace {

void check_level(const CFSequence& seq, int n, const char* what) {
  if (n < 0 || n > seq.depth())
    throw std::out_of_range(std::string(what) + ": level " + std::to_string(n) + " out of range");
}

}  // namespace

Window Window::from_cylinders(const CFSequence& seq, const std::vector<Cylinder>& parts) {
  int level = 0;
  for (const auto& p : parts) {
    check_level(seq, p.level, "Window::from_cylinders");
    if (!seq.F(p.level).contains(p.word))
      throw std::invalid_argument("Window::from_cylinders: word " + p.word.to_string() +
                                  " not in F_" + std::to_string(p.level));
    level = std::max(level, p.level);
  }
  ElementSet words(seq.group());
  Count total = 0;
  for (const auto& p : parts) {
    const ElementSet piece = translate(p.word, word_extension(seq, p.level, level));
    total += piece.size();
    words = set_union(words, piece);
  }
  if (words.size() != total) throw DisjointnessError("window cylinders overlap");
  return {level, std::move(words)};
}

Window Window::tower(const CFSequence& seq, int n) {
  check_level(seq, n, "Window::tower");
  return {n, seq.F(n)};
}

Rational measure(const CFSequence& seq, const Cylinder& cyl) {
  check_level(seq, cyl.level, "measure");
  if (!seq.F(cyl.level).contains(cyl.word))
    throw std::invalid_argument("measure: word not in F_" + std::to_string(cyl.level));
  return seq.cylinder_measure(cyl.level);
}

Rational measure(const CFSequence& seq, const Window& w) {
  return Rational(w.words.size()) * seq.cylinder_measure(w.level);
}

std::vector<Cylinder> refine(const CFSequence& seq, const Cylinder& cyl) {
  check_level(seq, cyl.level, "refine");
  if (cyl.level == seq.depth()) throw std::out_of_range("refine: already at the deepest level");
  std::vector<Cylinder> out;
  for (const auto& c : seq.C(cyl.level + 1)) out.push_back({cyl.level + 1, compose(cyl.word, c)});
  return out;
}

ElementSet word_extension(const CFSequence& seq, int from, int to) {
  if (from > to) throw std::invalid_argument("word_extension: from > to");
  check_level(seq, to, "word_extension");
  ElementSet out = ElementSet::singleton(identity(seq.group()));
  for (int i = from + 1; i <= to; ++i) out = product_disjoint(out, seq.C_set(i));
  return out;
}

Window refine_to(const CFSequence& seq, const Window& w, int level) {
  if (level == w.level) return w;
  if (level < w.level) throw std::invalid_argument("refine_to: target level is coarser");
  check_level(seq, level, "refine_to");
  ElementSet words = w.words;
  for (int i = w.level + 1; i <= level; ++i) words = product_disjoint(words, seq.C_set(i));
  return {level, std::move(words)};
}

void validate(const CFSequence& seq, const TruncatedPoint& p) {
  check_level(seq, p.level, "validate");
  if (p.horizon() > seq.depth()) throw std::invalid_argument("point horizon exceeds the depth");
  if (!seq.F(p.level).contains(p.word))
    throw std::invalid_argument("point word not in F_" + std::to_string(p.level));
  for (std::size_t i = 0; i < p.tail.size(); ++i)
    if (p.tail[i] >= seq.c_count(p.level + 1 + static_cast<int>(i)))
      throw std::invalid_argument("point tail index out of range");
}

TruncatedPoint promote(const CFSequence& seq, const TruncatedPoint& p, int level) {
  if (level < p.level || level > p.horizon())
    throw std::out_of_range("promote: target level outside [level, horizon]");
  TruncatedPoint q{level, p.word, {}};
  const auto used = static_cast<std::size_t>(level - p.level);
  for (std::size_t i = 0; i < used; ++i)
    q.word = compose(q.word, seq.C(p.level + 1 + static_cast<int>(i))[p.tail[i]]);
  q.tail.assign(p.tail.begin() + static_cast<std::ptrdiff_t>(used), p.tail.end());
  return q;
}

std::variant<TruncatedPoint, UndefinedAtHorizon> act_point(const CFSequence& seq,
                                                           const GroupElement& g,
                                                           const TruncatedPoint& p) {
  int n = p.level;
  GroupElement word = p.word;
  std::size_t used = 0;
  while (true) {
    GroupElement moved = compose(g, word);
    if (seq.F(n).contains(moved)) {
      TruncatedPoint q{n, std::move(moved), {}};
      q.tail.assign(p.tail.begin() + static_cast<std::ptrdiff_t>(used), p.tail.end());
      return q;
    }
    if (used == p.tail.size()) return UndefinedAtHorizon{n};
    word = compose(word, seq.C(n + 1)[p.tail[used]]);
    ++used;
    ++n;
  }
}

bool same_point(const CFSequence& seq, const TruncatedPoint& a, const TruncatedPoint& b) {
  if (a.horizon() != b.horizon()) return false;
  const int h = a.horizon();
  return promote(seq, a, h).word == promote(seq, b, h).word;
}

bool contains(const CFSequence& seq, const Window& w, const TruncatedPoint& p) {
  if (w.level >= p.level) {
    if (w.level > p.horizon())
      throw ContainmentError("window at level " + std::to_string(w.level) +
                             " is finer than the point horizon " + std::to_string(p.horizon()));
    return w.words.contains(promote(seq, p, w.level).word);
  }
  return refine_to(seq, w, p.level).words.contains(p.word);
}

WindowImage act_window(const CFSequence& seq, const GroupElement& g, const Window& w,
                       int max_level) {
  check_level(seq, max_level, "act_window");
  if (w.level > max_level) throw std::invalid_argument("act_window: window deeper than max_level");
  const GroupElement ginv = inverse(g);

  std::vector<Window> pieces;
  ElementSet pending = w.words;
  int level = w.level;
  while (true) {
    ElementSet landing = set_intersection(pending, translate(ginv, seq.F(level)));
    if (!landing.empty()) {
      pending = set_difference(pending, landing);
      pieces.push_back({level, translate(g, landing)});
    }
    if (pending.empty() || level == max_level) break;
    ++level;
    pending = product_disjoint(pending, seq.C_set(level));
  }

  const int deepest = pieces.empty() ? w.level : pieces.back().level;
  ElementSet image(seq.group());
  for (const auto& piece : pieces) {
    const Window r = refine_to(seq, piece, deepest);
    image = set_union(image, r.words);
  }
  WindowImage out{{deepest, std::move(image)}, {level, pending}, 0, pending.empty()};
  out.unresolved_mass = measure(seq, out.unresolved);
  return out;
}

WindowImage act_cylinder(const CFSequence& seq, const GroupElement& g, const Cylinder& cyl,
                         int max_level) {
  return act_window(seq, g, Window::from_cylinders(seq, {cyl}), max_level);
}

Window window_intersection(const CFSequence& seq, const Window& a, const Window& b) {
  const int level = std::max(a.level, b.level);
  return {level, set_intersection(refine_to(seq, a, level).words, refine_to(seq, b, level).words)};
}

Window window_union(const CFSequence& seq, const Window& a, const Window& b) {
  const int level = std::max(a.level, b.level);
  return {level, set_union(refine_to(seq, a, level).words, refine_to(seq, b, level).words)};
}

Window window_difference(const CFSequence& seq, const Window& a, const Window& b) {
  const int level = std::max(a.level, b.level);
  return {level, set_difference(refine_to(seq, a, level).words, refine_to(seq, b, level).words)};
}

bool window_subset(const CFSequence& seq, const Window& a, const Window& b) {
  const int level = std::max(a.level, b.level);
  return is_subset(refine_to(seq, a, level).words, refine_to(seq, b, level).words);
}

bool windows_disjoint(const CFSequence& seq, const Window& a, const Window& b) {
  return window_intersection(seq, a, b).words.empty();
}

MeasureBounds intersect_measure(const CFSequence& seq, const GroupElement& g, const Window& A,
                                const Window& B, int max_level) {
  const WindowImage img = act_window(seq, g, A, max_level);
  const Rational lower = measure(seq, window_intersection(seq, img.image, B));
  return {lower, lower + img.unresolved_mass};
}

WindowIndex::WindowIndex(const CFSequence& seq, Window w) : seq_(&seq), window_(std::move(w)) {}

bool WindowIndex::contains(const TruncatedPoint& p) const {
  if (window_.level >= p.level) return cfmix::contains(*seq_, window_, p);
  auto it = refined_.find(p.level);
  if (it == refined_.end())
    it = refined_.emplace(p.level, refine_to(*seq_, window_, p.level).words).first;
  return it->second.contains(p.word);
}

}  // namespace cfmix
