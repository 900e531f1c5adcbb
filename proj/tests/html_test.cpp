#include <gtest/gtest.h>

#include "aqa/html.hpp"

namespace aqa {
namespace {

TEST(HtmlToText, Examples) {
  EXPECT_EQ(html_to_text("<p>برج ايفل</p>"), "برج ايفل");
  EXPECT_EQ(html_to_text("<script>x=1</script><p>نص</p>"), "نص");
  EXPECT_EQ(html_to_text(""), "");
}

TEST(HtmlToText, DropsHeadStyleAndComments) {
  const std::string html =
      "<html><head><title>عنوان</title><style>p{color:red}</style></head>"
      "<body><!-- <p>hidden</p> --><p>ظاهر</p><noscript>x</noscript></body></html>";
  EXPECT_EQ(html_to_text(html), "ظاهر");
}

TEST(HtmlToText, TextBeforeBodyWithoutHeadClose) {
  EXPECT_EQ(html_to_text("<head><title>t</title><body><p>نص</p>"), "نص");
}

TEST(HtmlToText, BlocksBecomeParagraphs) {
  EXPECT_EQ(html_to_text("<p>الأول</p><p>الثاني</p>"), "الأول\n\nالثاني");
  EXPECT_EQ(html_to_text("<div>سطر<br>آخر</div>"), "سطر\nآخر");
  EXPECT_EQ(html_to_text("<span>برج</span> <b>ايفل</b>"), "برج ايفل");
}

TEST(HtmlToText, CollapsesWhitespacePerLine) {
  EXPECT_EQ(html_to_text("<p>  برج \t\n   ايفل  </p>"), "برج ايفل");
}

TEST(HtmlToText, DecodesEntities) {
  EXPECT_EQ(html_to_text("<p>&amp;&lt;&gt;&quot;&#39;&#x628;&#1578;&laquo;&raquo;</p>"),
            "&<>\"'بت«»");
  EXPECT_EQ(html_to_text("a&nbsp;b"), "a b");
  EXPECT_EQ(html_to_text("&unknown; & &#xZZ;"), "&unknown; & &#xZZ;");
  EXPECT_EQ(html_to_text("&#0;"), "\xEF\xBF\xBD");
}

TEST(HtmlToText, EscapedMarkupDoesNotLookLikeTags) {
  EXPECT_EQ(html_to_text("&lt;p&gt;"), "< p>");
  EXPECT_EQ(html_to_text("1 < 2 and 3 <x"), "1 < 2 and 3");
}

TEST(HtmlToText, MalformedInputIsTolerated) {
  EXPECT_EQ(html_to_text("<p>نص<b"), "نص");
  EXPECT_EQ(html_to_text("<p class=\"a>b\">نص</p>"), "نص");
  EXPECT_EQ(html_to_text("<p class=\"unbalanced>نص</p>"), "نص");
  EXPECT_EQ(html_to_text("<script>never closed <p>x</p>"), "");
  EXPECT_EQ(html_to_text("<!-- open comment <p>x</p>"), "");
  EXPECT_EQ(html_to_text("<SCRIPT type='x'>a</Script ><P>نص</P>"), "نص");
}

TEST(HtmlToText, ScriptBodyWithMarkupInside) {
  EXPECT_EQ(html_to_text("<script>document.write('<p>x</p>')</script><p>y</p>"), "y");
}

}  // namespace
}  // namespace aqa
