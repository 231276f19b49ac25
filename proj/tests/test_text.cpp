#include <doctest.h>

#include "kgdim/text.hpp"

using namespace kgdim;

TEST_CASE("collapse_whitespace trims and collapses runs") {
  CHECK(collapse_whitespace("  Food  ") == "Food");
  CHECK(collapse_whitespace("comfort   food") == "comfort food");
  CHECK(collapse_whitespace("a\tb\nc") == "a b c");
  CHECK(collapse_whitespace("") == "");
  CHECK(collapse_whitespace("   ") == "");
  // U+00A0 no-break space counts as whitespace
  CHECK(collapse_whitespace("a\xc2\xa0\xc2\xa0m") == "a m");
}

TEST_CASE("case_fold handles ASCII and common non-ASCII scripts") {
  CHECK(case_fold("FOOD") == "food");
  CHECK(case_fold("MiXeD 123") == "mixed 123");
  CHECK(case_fold("Émincé") == "émincé");   // É -> é
  CHECK(case_fold("ŒUF") == "œuf");         // Latin Extended-A pair
  CHECK(case_fold("ΣΟΦΌΣ") == case_fold("σοφόσ"));
  CHECK(case_fold("ΑΓΟΡΆ") == "αγορά");
  CHECK(case_fold("БОРЩ") == "борщ");
  // final sigma folds onto sigma
  CHECK(case_fold("ὀδυσσεύς") == case_fold("ὀδυσσεύσ"));
  // malformed UTF-8 passes through
  CHECK(case_fold("a\xffZ") == "a\xffz");
}

TEST_CASE("first_label takes the segment before the first pipe") {
  CHECK(first_label("dish|plate") == "dish");
  CHECK(first_label("dish") == "dish");
  CHECK(first_label("|plate") == "");
}

TEST_CASE("split_tabs keeps empty fields") {
  const auto f = split_tabs("a\t\tb\t");
  REQUIRE(f.size() == 4);
  CHECK(f[0] == "a");
  CHECK(f[1] == "");
  CHECK(f[2] == "b");
  CHECK(f[3] == "");
}

TEST_CASE("tsv_safe rejects control characters") {
  CHECK(tsv_safe("plain text"));
  CHECK_FALSE(tsv_safe("a\tb"));
  CHECK_FALSE(tsv_safe("a\nb"));
  CHECK_FALSE(tsv_safe("a\rb"));
}
