#include <gtest/gtest.h>

#include <mutex>
#include <random>
#include <thread>

#include "aqa/errors.hpp"
#include "aqa/html.hpp"
#include "aqa/passages.hpp"
#include "support.hpp"

namespace aqa {
namespace {

const QuestionAnalysis& eiffel() {
  static const auto a = test::resources().analyzer().analyze("من صمم برج ايفل؟");
  return a;
}

Passage passage(std::string text, std::size_t rank = 1, std::size_t position = 0) {
  Passage p;
  p.text = std::move(text);
  p.source_url = "http://x.example/" + std::to_string(rank);
  p.source_rank = rank;
  p.position = position;
  return p;
}

TEST(Segment, Examples) {
  const auto ps = segment_passages("الفقرة الأولى.\n\nالفقرة الثانية.", "u", 2);
  ASSERT_EQ(ps.size(), 2u);
  EXPECT_EQ(ps[0].text, "الفقرة الأولى.");
  EXPECT_EQ(ps[1].text, "الفقرة الثانية.");
  EXPECT_EQ(ps[1].position, 1u);
  EXPECT_EQ(ps[1].source_rank, 2u);
  EXPECT_EQ(ps[1].source_url, "u");
  EXPECT_TRUE(segment_passages("").empty());
  EXPECT_TRUE(segment_passages(" \n\n \n").empty());
}

TEST(Segment, LinesInsideParagraphAreJoined) {
  const auto ps = segment_passages("سطر أول\n  سطر ثان  \n\n\n\nثالث");
  ASSERT_EQ(ps.size(), 2u);
  EXPECT_EQ(ps[0].text, "سطر أول سطر ثان");
}

TEST(Segment, LongParagraphsSplitOnSentences) {
  const auto ps = segment_passages("طوله 6.400 كم. هل هو الأطول؟! نعم؛ ربما", "", 1, 10);
  ASSERT_EQ(ps.size(), 4u);
  EXPECT_EQ(ps[0].text, "طوله 6.400 كم.");
  EXPECT_EQ(ps[1].text, "هل هو الأطول؟!");
  EXPECT_EQ(ps[2].text, "نعم؛");
  EXPECT_EQ(ps[3].text, "ربما");
}

TEST(Segment, EiffelFixturePage) {
  const auto html = test::read_file(test::fixtures_dir() / "20a14f05a1043372" / "pages" /
                                    "b9dc51d22549168a.html");
  const auto ps = segment_passages(html_to_text(html), "u", 1);
  EXPECT_GE(ps.size(), 3u);
  for (const auto& p : ps) EXPECT_EQ(p.text.find('<'), std::string::npos);
}

TEST(Threshold, CeilingOfFraction) {
  EXPECT_EQ(keyword_threshold(3), 2u);
  EXPECT_EQ(keyword_threshold(4), 2u);
  EXPECT_EQ(keyword_threshold(1), 1u);
  EXPECT_EQ(keyword_threshold(0), 0u);
  EXPECT_EQ(keyword_threshold(5, {2, 3, 2}), 4u);
  EXPECT_THROW(keyword_threshold(3, {1, 0, 2}), std::invalid_argument);
}

TEST(Score, KeywordsFocusAndEntity) {
  auto p = passage("صمم المهندس جوستاف إيفل برج إيفل في باريس");
  score_passage(p, eiffel(), test::resources().recognizer());
  EXPECT_EQ(p.keyword_hits, 3u);
  EXPECT_TRUE(p.focus_hit);
  EXPECT_TRUE(p.ne_validated);
  EXPECT_EQ(p.score, 5u);

  auto q = passage("البرج الحديدي في باريس");
  score_passage(q, eiffel(), test::resources().recognizer());
  EXPECT_EQ(q.keyword_hits, 1u);
  EXPECT_FALSE(q.focus_hit);
  EXPECT_EQ(q.score, 1u);
}

TEST(FilterAndRank, KeepsValidatedAndOrders) {
  std::vector<Passage> in = {
      passage("برج ايفل في باريس", 1, 0),                        // no person
      passage("صمم برج ايفل جوستاف ايفل", 2, 0),                 // 5
      passage("صمم جوستاف ايفل البرج", 1, 1),                    // 3 hits, no focus
      passage("جوستاف ايفل مهندس", 1, 2),                        // 1 hit, below threshold
      passage("برج ايفل من تصميم جوستاف ايفل", 1, 3),            // 2 + focus = 4
  };
  const auto out = filter_and_rank(in, eiffel(), test::resources().recognizer());
  ASSERT_EQ(out.size(), 3u);
  EXPECT_EQ(out[0].score, 5u);
  EXPECT_EQ(out[1].score, 4u);
  EXPECT_EQ(out[2].score, 3u);
  EXPECT_FALSE(out[2].focus_hit);
  for (const auto& p : out) {
    EXPECT_TRUE(p.ne_validated);
    EXPECT_GE(p.keyword_hits, 2u);
  }
}

TEST(FilterAndRank, TiesBrokenBySourceRankThenPosition) {
  std::vector<Passage> in = {
      passage("صمم برج ايفل جوستاف ايفل", 3, 0),
      passage("صمم برج ايفل جوستاف ايفل", 1, 4),
      passage("صمم برج ايفل جوستاف ايفل", 1, 2),
  };
  const auto out = filter_and_rank(in, eiffel(), test::resources().recognizer());
  ASSERT_EQ(out.size(), 3u);
  EXPECT_EQ(std::make_pair(out[0].source_rank, out[0].position), std::make_pair(1ul, 2ul));
  EXPECT_EQ(std::make_pair(out[1].source_rank, out[1].position), std::make_pair(1ul, 4ul));
  EXPECT_EQ(out[2].source_rank, 3u);
}

TEST(FilterAndRank, NothingValidated) {
  EXPECT_TRUE(filter_and_rank({passage("لا شيء هنا")}, eiffel(), test::resources().recognizer()).empty());
  EXPECT_TRUE(filter_and_rank({}, eiffel(), test::resources().recognizer()).empty());
}

struct Pipeline {
  FixtureProvider provider{test::fixtures_dir()};
  FixtureFetcher fetcher{test::fixtures_dir()};

  RetrievalResult run(std::string_view text, RetrievalOptions options = {}) {
    const auto& r = test::resources();
    RetrievalDeps deps{r.analyzer(), provider, fetcher, r.recognizer()};
    return retrieve(Question{"t", std::string(text)}, deps, options);
  }
};

TEST(Retrieve, EiffelFixture) {
  Pipeline p;
  const auto result = p.run("من صمم برج ايفل؟");
  EXPECT_EQ(result.urls.size(), 4u);
  EXPECT_EQ(result.documents.size(), 3u);
  ASSERT_EQ(result.failures.size(), 1u);
  EXPECT_EQ(result.failures[0].url, "http://www.unreachable.example/eiffel.html");
  ASSERT_FALSE(result.passages.empty());
  EXPECT_NE(normalize(result.passages[0].text).find("جوستاف ايفل"), std::string::npos);
  EXPECT_EQ(result.passages[0].source_rank, 1u);
  for (std::size_t i = 1; i < result.passages.size(); ++i) {
    EXPECT_FALSE(ranks_before(result.passages[i], result.passages[i - 1]));
  }
}

TEST(Retrieve, AllShippedQuestionsValidate) {
  Pipeline p;
  for (const char* q : {"أين تقع شلالات نياغرا؟", "متى استقلت تونس؟", "ماهي عاصمة ماليزيا؟",
                        "كم يبلغ طول نهر الأمازون؟"}) {
    EXPECT_FALSE(p.run(q).passages.empty()) << q;
  }
}

TEST(Retrieve, UnknownQueryYieldsNothing) {
  Pipeline p;
  const auto result = p.run("من كتب رواية الحرافيش؟");
  EXPECT_TRUE(result.urls.empty());
  EXPECT_TRUE(result.passages.empty());
}

TEST(Retrieve, Errors) {
  Pipeline p;
  EXPECT_THROW(p.run("ما"), LinguisticError);
  EXPECT_THROW(p.run("من صمم برج ايفل؟", {.max_fetch_concurrency = 0}), std::invalid_argument);
}

// Delays every fetch by a random amount so completion order varies.
class JitterFetcher : public PageFetcher {
 public:
  explicit JitterFetcher(const PageFetcher& inner, std::uint64_t seed) : inner_(inner), rng_(seed) {}

  FetchedPage fetch(const UrlRecord& url) const override {
    int ms;
    {
      std::lock_guard lock(mu_);
      ms = std::uniform_int_distribution<int>(0, 15)(rng_);
    }
    std::this_thread::sleep_for(std::chrono::milliseconds(ms));
    return inner_.fetch(url);
  }

 private:
  const PageFetcher& inner_;
  mutable std::mutex mu_;
  mutable std::mt19937 rng_;
};

TEST(Retrieve, ResultIndependentOfFetchOrder) {
  const auto& r = test::resources();
  FixtureProvider provider(test::fixtures_dir());
  FixtureFetcher base(test::fixtures_dir());
  const Question q{"t", "من صمم برج ايفل؟"};
  RetrievalDeps serial{r.analyzer(), provider, base, r.recognizer()};
  const auto expected = retrieve(q, serial, {.max_fetch_concurrency = 1});
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    JitterFetcher jitter(base, seed);
    RetrievalDeps deps{r.analyzer(), provider, jitter, r.recognizer()};
    const auto got = retrieve(q, deps, {.max_fetch_concurrency = 8});
    EXPECT_EQ(got.passages, expected.passages);
    ASSERT_EQ(got.documents.size(), expected.documents.size());
    for (std::size_t i = 0; i < got.documents.size(); ++i) {
      EXPECT_EQ(got.documents[i].source, expected.documents[i].source);
      EXPECT_EQ(got.documents[i].text, expected.documents[i].text);
    }
  }
}

}  // namespace
}  // namespace aqa
