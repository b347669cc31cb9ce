#include <gtest/gtest.h>

#include "cfmix/serialize.hpp"
#include "fixtures.hpp"

using namespace cfmix;
using nlohmann::json;

namespace {

void expect_same(const CFSequence& a, const CFSequence& b) {
  ASSERT_TRUE(a.group() == b.group());
  ASSERT_EQ(a.depth(), b.depth());
  for (int n = 0; n <= a.depth(); ++n) EXPECT_TRUE(a.F(n) == b.F(n)) << n;
  for (int n = 1; n <= a.depth(); ++n)
    EXPECT_TRUE(std::equal(a.C(n).begin(), a.C(n).end(), b.C(n).begin(), b.C(n).end())) << n;
  EXPECT_EQ(a.schedule(), b.schedule());
}

}  // namespace

TEST(Serialize, Descriptors) {
  for (const auto& d : {GroupDescriptor::integer_lattice(3), GroupDescriptor::finite_sum({5}, {2, 3}),
                        GroupDescriptor::lamplighter(4)})
    EXPECT_EQ(descriptor_from_json(descriptor_to_json(d)), d);
  EXPECT_EQ(descriptor_to_json(GroupDescriptor::integer_lattice(2)),
            json::parse(R"({"kind": "integer_lattice", "dimension": 2})"));
  EXPECT_THROW(descriptor_from_json(json::parse(R"({"kind": "free_group"})")), std::invalid_argument);
  EXPECT_THROW(descriptor_from_json(json::parse(R"({"kind": "finite_sum", "period": [1]})")),
               std::invalid_argument);
  EXPECT_THROW(descriptor_from_json(json::parse(R"([1, 2])")), std::invalid_argument);
}

TEST(Serialize, Elements) {
  const Group L = fixtures::lamp2();
  const auto g = lamplighter_element(L, -3, 2, std::vector<std::int64_t>{1, 0, 1});
  EXPECT_EQ(element_from_json(L, element_to_json(g)), g);
  EXPECT_EQ(element_to_json(g), json::parse("[-3, 2, 1, 0, 1]"));
  EXPECT_THROW(element_from_json(fixtures::z2(), json::parse("[1]")), std::invalid_argument);
  EXPECT_THROW(element_from_json(fixtures::z2(), json::parse(R"(["a", 1])")), std::invalid_argument);
}

TEST(Serialize, Sets) {
  const Group Z = fixtures::z2();
  const auto box = set_union(ElementSet::box(Z, {{0, 3}, {-1, 1}}), ElementSet::box(Z, {{10, 12}, {0, 0}}));
  EXPECT_TRUE(set_from_json(Z, set_to_json(box)) == box);
  const auto overlap = json::parse(R"({"blocks": [{"axes": [[0, 3], [0, 0]]}, {"axes": [[2, 5], [0, 0]]}]})");
  EXPECT_THROW(set_from_json(Z, overlap), std::invalid_argument);
  const Group S = fixtures::sum23();
  const auto sub = ElementSet::coordinate_subgroup(S, 3);
  EXPECT_TRUE(set_from_json(S, set_to_json(sub)) == sub);
  const Group L = fixtures::lamp2();
  const auto some = ElementSet::of(L, enumerate(L, 30));
  EXPECT_TRUE(set_from_json(L, set_to_json(some)) == some);
}

TEST(Serialize, SequenceRoundTripIsLossless) {
  for (const auto* seq : {&fixtures::z1_depth(6), &fixtures::z2_depth6(), &fixtures::sum23_depth6(),
                          &fixtures::lamp2_depth2()}) {
    const json j = sequence_to_json(*seq);
    EXPECT_EQ(j.at("schema_version"), kSchemaVersion);
    const auto back = sequence_from_json(j);
    expect_same(*seq, back);
    EXPECT_EQ(sequence_to_json(back).dump(), j.dump());
    // through text as well
    expect_same(*seq, sequence_from_json(json::parse(j.dump(1))));
  }
}

TEST(Serialize, SequenceRejectsMalformed) {
  json j = sequence_to_json(fixtures::z1_depth(2));
  json bad_version = j;
  bad_version["schema_version"] = 99;
  EXPECT_THROW(sequence_from_json(bad_version), std::invalid_argument);
  json missing = j;
  missing.erase("C");
  EXPECT_THROW(sequence_from_json(missing), std::invalid_argument);
  json bad_kind = j;
  bad_kind["schedule"][0]["kind"] = "circle";
  EXPECT_THROW(sequence_from_json(bad_kind), std::invalid_argument);
  json bad_f0 = j;
  bad_f0["F"][0] = json::parse(R"({"blocks": [{"axes": [[0, 1]]}]})");
  EXPECT_THROW(sequence_from_json(bad_f0), std::invalid_argument);
}

TEST(Serialize, Windows) {
  const auto& seq = fixtures::z1_depth(4);
  const Group G = seq.group();
  const auto tower = window_from_json(seq, json::parse(R"({"tower_level": 2})"));
  EXPECT_EQ(tower.level, 2);
  EXPECT_TRUE(tower.words == seq.F(2));
  const auto cyl = window_from_json(seq, json::parse(R"({"cylinders": [{"level": 1, "word": [0]}, {"level": 1, "word": [1]}]})"));
  EXPECT_EQ(measure(seq, cyl), Rational(2, 3));
  const auto back = window_from_json(seq, window_to_json(cyl));
  EXPECT_EQ(back.level, cyl.level);
  EXPECT_TRUE(back.words == cyl.words);
  EXPECT_THROW(window_from_json(seq, json::parse(R"({"cylinders": [{"level": 1, "word": [0]}, {"level": 2, "word": [0]}]})")),
               std::exception);
}

TEST(Serialize, ConfigurationRoundTrip) {
  const auto& seq = fixtures::z1_depth(4);
  const auto w = Window::tower(seq, 2);
  for (std::uint64_t s = 0; s < 10; ++s) {
    const auto c = sample_configuration(seq, w, 4, s, 2);
    const auto back = configuration_from_json(seq, configuration_to_json(seq, c));
    EXPECT_EQ(back.horizon, c.horizon);
    EXPECT_EQ(back.seed, c.seed);
    EXPECT_EQ(back.stream, c.stream);
    EXPECT_EQ(back.part_counts, c.part_counts);
    ASSERT_EQ(back.points.size(), c.points.size());
    for (std::size_t i = 0; i < c.points.size(); ++i) {
      EXPECT_EQ(back.points[i].word, c.points[i].word);
      EXPECT_EQ(back.points[i].tail, c.points[i].tail);
    }
  }
}

TEST(Serialize, ReportCarriesWitness) {
  const auto& seq = fixtures::z1_depth(2);
  const auto j = report_to_json(verify_basic(seq, 1));
  EXPECT_EQ(j.at("level"), 1);
  EXPECT_TRUE(j.at("checks").contains("basic3"));
}
