#pragma once

#include <string>
#include <string_view>

namespace aqa {

// Tolerant markup stripper for decoded (UTF-8) HTML.
//
// script/style/noscript/template bodies and everything inside <head> are
// dropped. Block-level tags become line breaks, so paragraphs come out
// separated by one blank line. Character references are decoded and
// whitespace is collapsed within each line. Unterminated tags or comments
// run to the end of the input. A decoded '<' directly followed by an ASCII
// letter gets a space inserted so the output never looks like markup.
std::string html_to_text(std::string_view html);

}  // namespace aqa
