#include <gtest/gtest.h>

#include <set>

#include "aqa/entities.hpp"
#include "support.hpp"

namespace aqa {
namespace {

const EntityRecognizer& recognizer() { return test::resources().recognizer(); }

std::vector<std::pair<AnswerType, std::string>> typed(const std::vector<EntityMention>& ms) {
  std::vector<std::pair<AnswerType, std::string>> out;
  for (const auto& m : ms) out.emplace_back(m.type, m.text);
  return out;
}

bool has(const std::vector<EntityMention>& ms, AnswerType type, std::string_view text) {
  return std::any_of(ms.begin(), ms.end(),
                     [&](const EntityMention& m) { return m.type == type && m.text == text; });
}

TEST(Recognize, YearInPassage) {
  const auto ms = recognizer().recognize("بني برج ايفل عام 1889");
  EXPECT_TRUE(has(ms, AnswerType::Date, "1889"));
  EXPECT_TRUE(recognizer().contains_type("بني برج ايفل عام 1889", AnswerType::Date));
}

TEST(Recognize, EmptyText) {
  EXPECT_TRUE(recognizer().recognize("").empty());
  EXPECT_FALSE(recognizer().contains_type("", AnswerType::Person));
}

TEST(Recognize, GazetteerPerson) {
  const auto ms = recognizer().recognize("جوستاف ايفل");
  ASSERT_EQ(ms.size(), 1u);
  EXPECT_EQ(ms[0].type, AnswerType::Person);
  EXPECT_EQ(ms[0].span, (CharSpan{0, 11}));
}

TEST(Recognize, SurfaceSpellingIsKept) {
  const std::string text = "المعماري الفرنسي جوستاف إيفل.";
  const auto ms = recognizer().recognize(text);
  ASSERT_TRUE(has(ms, AnswerType::Person, "جوستاف إيفل"));
}

TEST(Recognize, NumberWithUnit) {
  EXPECT_TRUE(recognizer().contains_type("طوله 324 متر", AnswerType::NumericExpression));
  const auto ms = recognizer().recognize("طوله 324 متر");
  EXPECT_TRUE(has(ms, AnswerType::NumericExpression, "324 متر"));
  // A 3-4 digit number followed by a unit is a quantity, not a year.
  EXPECT_FALSE(recognizer().contains_type("طوله 324 متر", AnswerType::Date));
  EXPECT_TRUE(recognizer().contains_type("يبلغ طوله ٦٤٠٠ كيلومتر", AnswerType::NumericExpression));
  EXPECT_TRUE(has(recognizer().recognize("نحو 6.400 كم"), AnswerType::NumericExpression, "6.400 كم"));
}

TEST(Recognize, MonthDates) {
  const auto ms = recognizer().recognize("استقلت تونس في 20 مارس 1956 بعد مفاوضات");
  EXPECT_TRUE(has(ms, AnswerType::Date, "20 مارس 1956"));
  EXPECT_FALSE(has(ms, AnswerType::Date, "1956"));
  EXPECT_TRUE(has(recognizer().recognize("في تشرين الثاني 2010"), AnswerType::Date, "تشرين الثاني 2010"));
  EXPECT_TRUE(has(recognizer().recognize("في شهر رمضان"), AnswerType::Date, "رمضان"));
  EXPECT_TRUE(has(recognizer().recognize("يوم 14/1/2011"), AnswerType::Date, "14/1/2011"));
}

TEST(Recognize, SortedByStartAndNoSameTypeOverlap) {
  const std::string text = "زار الكسندر جوستاف ايفل باريس و القاهرة في 12 ايار 1889 و دفع 20 دولار";
  const auto ms = recognizer().recognize(text);
  EXPECT_TRUE(has(ms, AnswerType::Person, "الكسندر جوستاف ايفل"));
  EXPECT_FALSE(has(ms, AnswerType::Person, "جوستاف ايفل"));
  EXPECT_TRUE(has(ms, AnswerType::Location, "باريس"));
  EXPECT_TRUE(has(ms, AnswerType::Organization, "باريس"));
  for (std::size_t i = 1; i < ms.size(); ++i) EXPECT_LE(ms[i - 1].span.begin, ms[i].span.begin);
  for (std::size_t i = 0; i < ms.size(); ++i) {
    for (std::size_t j = i + 1; j < ms.size(); ++j) {
      if (ms[i].type == ms[j].type) {
        EXPECT_FALSE(ms[i].span.overlaps(ms[j].span));
      }
    }
  }
}

TEST(Recognize, PunctuationBreaksNames) {
  EXPECT_FALSE(recognizer().contains_type("جوستاف، ايفل", AnswerType::Person));
}

// Brute-force oracle: every n-gram (n <= 4) of the normalized word forms
// looked up directly in the entry set.
TEST(Recognize, GazetteerMatchesAgreeWithBruteForceScan) {
  Gazetteer g;
  const std::vector<std::string> names = {"برج ايفل", "باريس", "نهر السين", "جوستاف ايفل"};
  for (const auto& n : names) g.add(AnswerType::Location, n);
  const EntityRecognizer rec(g, PatternLexicon{});
  const std::string text = "يقع برج إيفل في باريس قرب نهر السين، و صممه جوستاف ايفل.";

  std::set<std::string> expected;
  const auto words = word_forms("يقع برج إيفل في باريس قرب نهر السين");
  const auto tail = word_forms("و صممه جوستاف ايفل.");
  for (const auto* part : {&words, &tail}) {
    for (std::size_t i = 0; i < part->size(); ++i) {
      std::string phrase;
      for (std::size_t n = 1; n <= 4 && i + n <= part->size(); ++n) {
        phrase += (n > 1 ? " " : "") + (*part)[i + n - 1];
        if (std::find(names.begin(), names.end(), phrase) != names.end()) expected.insert(phrase);
      }
    }
  }
  std::set<std::string> actual;
  for (const auto& m : rec.recognize(text)) actual.insert(normalize(m.text));
  EXPECT_EQ(actual, expected);
}

TEST(Gazetteer, EntriesAreNormalized) {
  Gazetteer g;
  g.add(AnswerType::Person, "  جوستاف   إيفل ");
  EXPECT_TRUE(g.contains(AnswerType::Person, "جوستاف ايفل"));
  EXPECT_EQ(g.size(AnswerType::Person), 1u);
  g.add(AnswerType::Date, "1889");
  EXPECT_EQ(g.size(AnswerType::Date), 0u);
}

TEST(Gazetteer, ShippedFilesLoad) {
  const auto& g = recognizer().gazetteer();
  EXPECT_TRUE(g.contains(AnswerType::Person, "جوستاف ايفل"));
  EXPECT_TRUE(g.contains(AnswerType::Location, "كندا"));
  EXPECT_TRUE(g.contains(AnswerType::Organization, "كوالالمبور"));
  EXPECT_TRUE(recognizer().patterns().months.contains("تشرين الثاني"));
  EXPECT_TRUE(recognizer().patterns().units.contains("كيلومتر"));
}

TEST(Gazetteer, GrowthKeepsTypes) {
  Gazetteer g;
  g.add(AnswerType::Person, "جوستاف ايفل");
  const std::string text = "المهندس جوستاف ايفل صمم البرج";
  const EntityRecognizer before(g, PatternLexicon{});
  g.add(AnswerType::Location, "البرج");
  g.add(AnswerType::Person, "المهندس جوستاف ايفل");
  const EntityRecognizer after(g, PatternLexicon{});
  EXPECT_TRUE(before.contains_type(text, AnswerType::Person));
  EXPECT_TRUE(after.contains_type(text, AnswerType::Person));
  EXPECT_TRUE(after.contains_type(text, AnswerType::Location));
  EXPECT_EQ(typed(before.recognize(text)).size(), 1u);
}

}  // namespace
}  // namespace aqa
