#include <gtest/gtest.h>

#include "support.hpp"

namespace aqa {
namespace {

std::string cli() { return test::shell_quote(AQA_CLI) + " --data-dir " + test::shell_quote(test::data_dir()); }

std::string fixtures() { return " --fixtures " + test::shell_quote(test::fixtures_dir()); }

test::CommandResult aqa(const std::string& args) { return test::run(cli() + " " + args + " 2>/dev/null"); }

TEST(Cli, AnalyzePrintsRecord) {
  const auto r = aqa("analyze " + test::shell_quote("من صمم برج ايفل؟"));
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find(R"("keywords":["صمم","برج","ايفل"])"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find(R"("expected_answer_type":"PERSON")"), std::string::npos);
}

TEST(Cli, LinguisticFailureExitsTwo) {
  EXPECT_EQ(aqa("analyze ''").exit_code, 2);
  EXPECT_EQ(aqa("logic " + test::shell_quote("من صمم؟")).exit_code, 2);
}

TEST(Cli, LogicOnQuestionFile) {
  test::TempDir dir;
  test::write_file(dir / "q.txt", "من صمم برج ايفل؟\n{\"id\":\"t\",\"question_text\":\"متى استقلت تونس؟\"}\n");
  const auto r = aqa("logic " + test::shell_quote(dir / "q.txt"));
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out,
            "q1\t∃X, ∃Y, PERSON(X) ∧ صمم(X,Y) ∧ برج(Y) ∧ ايفل(Y)\n"
            "t\t∃X, ∃Y, DATE(X) ∧ استقلت(Y,X) ∧ تونس(Y)\n");
}

TEST(Cli, RetrieveWithFixtures) {
  const auto r = aqa(fixtures() + " retrieve " + test::shell_quote("من صمم برج ايفل؟"));
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out.rfind(R"({"rank":1,)", 0), 0u) << r.out;
}

TEST(Cli, RetrieveWithoutProviderIsConfigError) {
  EXPECT_EQ(aqa("retrieve " + test::shell_quote("من صمم برج ايفل؟")).exit_code, 1);
}

TEST(Cli, LiveProviderWithoutCredentialExitsThree) {
  test::TempDir dir;
  test::write_file(dir / "aqa.conf",
                   "search_endpoint = http://127.0.0.1:1/search\n"
                   "search_api_key_env = AQA_CLI_TEST_NO_SUCH_KEY\n");
  const auto r = test::run("env -u AQA_CLI_TEST_NO_SUCH_KEY " + cli() + " --config " +
                           test::shell_quote(dir / "aqa.conf") + " retrieve " +
                           test::shell_quote("من صمم برج ايفل؟") + " 2>/dev/null");
  EXPECT_EQ(r.exit_code, 3);
}

TEST(Cli, CorpusBuildOnEmptyFileExitsOne) {
  test::TempDir dir;
  test::write_file(dir / "empty.txt", "");
  EXPECT_EQ(aqa(fixtures() + " corpus-build " + test::shell_quote(dir / "empty.txt")).exit_code, 1);
  EXPECT_EQ(aqa(fixtures() + " corpus-build " + test::shell_quote(dir / "missing.txt")).exit_code, 1);
}

TEST(Cli, CorpusBuildValidateEval) {
  test::TempDir dir;
  test::write_file(dir / "q.jsonl",
                   R"({"id":"e","question_text":"من صمم برج ايفل؟","gold_answer":"جوستاف ايفل","source":"FAQ","domain":"DISCOVERIES_CULTURE"})"
                   "\n"
                   R"({"id":"t","question_text":"متى استقلت تونس؟","gold_answer":"20 مارس 1956"})"
                   "\n"
                   R"({"id":"n","question_text":"من كتب رواية الحرافيش؟"})"
                   "\n");
  const auto corpus = dir / "corpus.jsonl";
  auto r = aqa(fixtures() + " --out " + test::shell_quote(corpus) + " corpus-build " +
               test::shell_quote(dir / "q.jsonl"));
  ASSERT_EQ(r.exit_code, 0);
  const auto built = test::read_file(corpus);
  EXPECT_EQ(std::count(built.begin(), built.end(), '\n'), 3);

  r = aqa("corpus-validate " + test::shell_quote(corpus));
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, built);

  test::write_file(dir / "gold.tsv", "e\t∃X, ∃Y, PERSON(X) ∧ صمم(X,Y) ∧ برج(Y) ∧ ايفل(Y)\n");
  r = aqa("eval --gold " + test::shell_quote(dir / "gold.tsv") + " " + test::shell_quote(corpus));
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find(R"("TQ":3,"CT":1,"CA":2,"UQ":1)"), std::string::npos) << r.out;
}

TEST(Cli, InteractiveValidationReadsAnswers) {
  test::TempDir dir;
  test::write_file(dir / "q.jsonl", R"({"id":"e","question_text":"من صمم برج ايفل؟"})" "\n");
  const auto corpus = dir / "corpus.jsonl";
  ASSERT_EQ(aqa(fixtures() + " --out " + test::shell_quote(corpus) + " corpus-build " +
                test::shell_quote(dir / "q.jsonl"))
                .exit_code,
            0);
  const auto r = test::run("printf '%s\\n' " + test::shell_quote("جوستاف إيفل") + " | " + cli() +
                           " corpus-validate --interactive " + test::shell_quote(corpus) + " 2>/dev/null");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find(R"("answer_found":true)"), std::string::npos) << r.out;
}

TEST(Cli, EvalCounts) {
  const auto r = aqa("eval --counts 74,101,14,115");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find(R"("display":"0.64")"), std::string::npos);
  EXPECT_NE(r.out.find(R"("display":"0.87")"), std::string::npos);
  EXPECT_NE(r.out.find(R"({"exact":"13029/13225","display":"0.98"})"), std::string::npos) << r.out;
  EXPECT_EQ(aqa("eval --counts 1,2,3").exit_code, 1);
  EXPECT_EQ(aqa("eval --counts 5,1,1,4").exit_code, 1);
}

TEST(Cli, FixtureKey) {
  const auto r = aqa("fixture-key " + test::shell_quote("من صمم برج ايفل؟"));
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "20a14f05a1043372\tصمم برج ايفل\n");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(aqa("").exit_code, 1);
  EXPECT_EQ(aqa("frobnicate").exit_code, 1);
  EXPECT_EQ(aqa("--help").exit_code, 0);
}

}  // namespace
}  // namespace aqa
