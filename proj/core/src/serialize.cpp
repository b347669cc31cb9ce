#include "cfmix/serialize.hpp"

#include <bit>
#include <stdexcept>
#include <string>

#include "cfmix/errors.hpp"

namespace cfmix {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument("json: " + what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<int>();
}

const char* kind_name(CertificateKind k) {
  switch (k) {
    case CertificateKind::triangle: return "triangle";
    case CertificateKind::square: return "square";
    case CertificateKind::deferred: return "deferred";
  }
  return "deferred";
}

}  // namespace

json descriptor_to_json(const GroupDescriptor& d) {
  switch (d.kind()) {
    case GroupKind::integer_lattice:
      return {{"kind", "integer_lattice"}, {"dimension", d.dimension()}};
    case GroupKind::finite_sum:
      return {{"kind", "finite_sum"}, {"prefix", d.prefix()}, {"period", d.period()}};
    case GroupKind::lamplighter:
      return {{"kind", "lamplighter"}, {"base", d.lamp_order()}};
  }
  return {};
}

GroupDescriptor descriptor_from_json(const json& j) {
  const json& kind = field(j, "kind");
  if (!kind.is_string()) bad("group kind must be a string");
  const auto k = kind.get<std::string>();
  if (k == "integer_lattice") return GroupDescriptor::integer_lattice(as_int(field(j, "dimension"), "dimension"));
  if (k == "finite_sum") {
    std::vector<int> prefix;
    if (j.contains("prefix")) prefix = j.at("prefix").get<std::vector<int>>();
    return GroupDescriptor::finite_sum(std::move(prefix), field(j, "period").get<std::vector<int>>());
  }
  if (k == "lamplighter") return GroupDescriptor::lamplighter(as_int(field(j, "base"), "base"));
  bad("unknown group kind \"" + k + "\"");
}

json element_to_json(const GroupElement& g) {
  return json(std::vector<std::int64_t>(g.coords().begin(), g.coords().end()));
}

GroupElement element_from_json(const Group& group, const json& j) {
  if (!j.is_array()) bad("element must be an array of integers");
  std::vector<std::int64_t> coords;
  for (const auto& x : j) {
    if (!x.is_number_integer()) bad("element must be an array of integers");
    coords.push_back(x.get<std::int64_t>());
  }
  try {
    return GroupElement(group, std::move(coords));
  } catch (const GroupMismatch& e) {
    bad(e.what());
  }
}

json set_to_json(const ElementSet& s) {
  if (!s.structured()) {
    json out = json::array();
    for (const auto& g : s.explicit_elements()) out.push_back(element_to_json(g));
    return {{"elements", out}};
  }
  json blocks = json::array();
  for (const auto& b : s.blocks()) {
    if (!b.axes.empty()) {
      json axes = json::array();
      for (const auto& iv : b.axes) axes.push_back({iv.lo, iv.hi});
      blocks.push_back({{"axes", axes}});
    } else {
      json residues = json::array();
      for (auto m : b.masks) {
        json r = json::array();
        for (int i = 0; i < 64; ++i)
          if (m >> i & 1U) r.push_back(i);
        residues.push_back(r);
      }
      blocks.push_back({{"residues", residues}});
    }
  }
  return {{"blocks", blocks}};
}

ElementSet set_from_json(const Group& group, const json& j) {
  if (j.is_object() && j.contains("elements")) {
    std::vector<GroupElement> v;
    for (const auto& e : j.at("elements")) v.push_back(element_from_json(group, e));
    return ElementSet::of(group, v);
  }
  if (!group.abelian()) bad("lamplighter sets must use \"elements\"");
  const json& blocks = field(j, "blocks");
  if (!blocks.is_array()) bad("\"blocks\" must be an array");
  const auto& d = group.descriptor();
  std::vector<Block> parsed;
  for (const auto& jb : blocks) {
    Block b;
    if (group.kind() == GroupKind::integer_lattice) {
      const json& axes = field(jb, "axes");
      if (!axes.is_array() || axes.size() != static_cast<std::size_t>(d.dimension()))
        bad("block needs one [lo, hi] pair per axis");
      for (const auto& a : axes) {
        const auto v = a.get<std::vector<std::int64_t>>();
        if (v.size() != 2 || v[0] > v[1]) bad("axis must be [lo, hi] with lo <= hi");
        b.axes.push_back({v[0], v[1]});
      }
    } else {
      const json& residues = field(jb, "residues");
      for (std::size_t i = 0; i < residues.size(); ++i) {
        std::uint64_t mask = 0;
        for (auto r : residues[i].get<std::vector<int>>()) {
          if (r < 0 || r >= d.order_at(i)) bad("residue out of range");
          mask |= std::uint64_t{1} << r;
        }
        if (mask == 0) bad("empty residue list");
        b.masks.push_back(mask);
      }
      while (!b.masks.empty() && b.masks.back() == 1U) b.masks.pop_back();
    }
    parsed.push_back(std::move(b));
  }
  ElementSet out(group);
  Count total = 0;
  for (auto& b : parsed) {
    ElementSet one = ElementSet::from_disjoint_blocks(group, {std::move(b)});
    total += one.size();
    out = set_union(out, one);
  }
  if (out.size() != total) bad("set blocks overlap");
  return out;
}

json sequence_to_json(const CFSequence& seq) {
  json F = json::array();
  for (int n = 0; n <= seq.depth(); ++n) F.push_back(set_to_json(seq.F(n)));
  json C = json::array();
  for (int n = 1; n <= seq.depth(); ++n) {
    json level = json::array();
    for (const auto& c : seq.C(n)) level.push_back(element_to_json(c));
    C.push_back(level);
  }
  json schedule = json::array();
  for (const auto& e : seq.schedule()) {
    json entry = {{"element", element_to_json(e.element)}, {"level", e.level}, {"kind", kind_name(e.kind)}};
    if (e.exponent) entry["exponent"] = *e.exponent;
    schedule.push_back(entry);
  }
  return {{"schema_version", kSchemaVersion},
          {"group", descriptor_to_json(seq.group().descriptor())},
          {"F", F},
          {"C", C},
          {"schedule", schedule}};
}

CFSequence sequence_from_json(const json& j) {
  if (as_int(field(j, "schema_version"), "schema_version") != kSchemaVersion)
    bad("unsupported schema_version");
  const Group group(descriptor_from_json(field(j, "group")));
  std::vector<ElementSet> F;
  for (const auto& s : field(j, "F")) F.push_back(set_from_json(group, s));
  std::vector<std::vector<GroupElement>> C;
  for (const auto& level : field(j, "C")) {
    std::vector<GroupElement> c;
    for (const auto& e : level) c.push_back(element_from_json(group, e));
    C.push_back(std::move(c));
  }
  std::vector<ScheduleEntry> schedule;
  if (j.contains("schedule"))
    for (const auto& e : j.at("schedule")) {
      ScheduleEntry entry{element_from_json(group, field(e, "element")), as_int(field(e, "level"), "level"),
                          CertificateKind::deferred, std::nullopt};
      const auto kind = field(e, "kind").get<std::string>();
      if (kind == "triangle")
        entry.kind = CertificateKind::triangle;
      else if (kind == "square")
        entry.kind = CertificateKind::square;
      else if (kind != "deferred")
        bad("unknown certificate kind \"" + kind + "\"");
      if (e.contains("exponent")) entry.exponent = e.at("exponent").get<std::int64_t>();
      schedule.push_back(std::move(entry));
    }
  return CFSequence(group, std::move(F), std::move(C), std::move(schedule));
}

json report_to_json(const ConditionReport& r) {
  json checks = json::object();
  for (const auto& [name, c] : r.checks) {
    json w = json::array();
    for (const auto& g : c.witness) w.push_back(element_to_json(g));
    json entry = {{"passed", c.passed}, {"witness", w}, {"detail", c.detail}};
    if (c.exponent) entry["exponent"] = *c.exponent;
    checks[name] = entry;
  }
  return {{"level", r.level}, {"passed", r.passed()}, {"checks", checks}};
}

json window_to_json(const Window& w) { return {{"level", w.level}, {"words", set_to_json(w.words)}}; }

Window window_from_json(const CFSequence& seq, const json& j) {
  if (j.is_object() && j.contains("tower_level"))
    return Window::tower(seq, as_int(j.at("tower_level"), "tower_level"));
  if (j.is_object() && j.contains("cylinders")) {
    std::vector<Cylinder> parts;
    for (const auto& c : j.at("cylinders"))
      parts.push_back({as_int(field(c, "level"), "level"), element_from_json(seq.group(), field(c, "word"))});
    return Window::from_cylinders(seq, parts);
  }
  const int level = as_int(field(j, "level"), "level");
  if (level < 0 || level > seq.depth()) bad("window level out of range");
  ElementSet words = set_from_json(seq.group(), field(j, "words"));
  if (!is_subset(words, seq.F(level))) bad("window words are not inside F_level");
  return {level, std::move(words)};
}

json configuration_to_json(const CFSequence& seq, const Configuration& c) {
  json points = json::array();
  for (const auto& p : c.points) {
    json tail = json::array();
    for (std::size_t i = 0; i < p.tail.size(); ++i)
      tail.push_back(element_to_json(seq.C(p.level + 1 + static_cast<int>(i))[p.tail[i]]));
    points.push_back({{"level", p.level}, {"word", element_to_json(p.word)}, {"tail", tail}});
  }
  return {{"window", window_to_json(c.window)},
          {"horizon", c.horizon},
          {"seed", c.seed},
          {"stream", c.stream},
          {"part_counts", c.part_counts},
          {"points", points}};
}

Configuration configuration_from_json(const CFSequence& seq, const json& j) {
  Configuration c{window_from_json(seq, field(j, "window")), as_int(field(j, "horizon"), "horizon"),
                  field(j, "part_counts").get<std::vector<std::uint64_t>>(), {},
                  field(j, "seed").get<std::uint64_t>(), field(j, "stream").get<std::uint64_t>()};
  for (const auto& jp : field(j, "points")) {
    TruncatedPoint p{as_int(field(jp, "level"), "level"), element_from_json(seq.group(), field(jp, "word")), {}};
    int lvl = p.level;
    for (const auto& jc : field(jp, "tail")) {
      ++lvl;
      if (lvl > seq.depth()) bad("point tail longer than the depth");
      const GroupElement ce = element_from_json(seq.group(), jc);
      const auto C = seq.C(lvl);
      const auto it = std::find(C.begin(), C.end(), ce);
      if (it == C.end()) bad("tail entry not in C_" + std::to_string(lvl));
      p.tail.push_back(static_cast<std::uint32_t>(it - C.begin()));
    }
    validate(seq, p);
    c.points.push_back(std::move(p));
  }
  return c;
}

}  // namespace cfmix
