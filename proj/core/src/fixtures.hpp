#pragma once

#include <string_view>

namespace j4free::fixtures {

std::string_view table1_tsv();
std::string_view table2_tsv();
std::string_view table3_tsv();

}  // namespace j4free::fixtures
