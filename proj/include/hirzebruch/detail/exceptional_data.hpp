// Generated by tools/gen_exceptional_data.py; do not edit by hand.
#pragma once

#include <string_view>

namespace hirzebruch::detail {

inline constexpr std::string_view k_icosahedral_json = R"json({"name":"icosahedral","cyclotomic_order":5,"lines":[[["0","0","0","0"],["0","0","0","0"],["1","0","0","0"]],[["0","0","0","0"],["1","0","0","0"],["0","0","0","0"]],[["1","0","0","0"],["-2","0","-1","-1"],["-1","0","-1","-1"]],[["1","0","0","0"],["-2","0","-1","-1"],["1","0","1","1"]],[["1","0","0","0"],["0","0","-1","-1"],["-1","0","-1","-1"]],[["1","0","0","0"],["0","0","-1","-1"],["-1","0","1","1"]],[["1","0","0","0"],["0","0","-1","-1"],["1","0","-1","-1"]],[["1","0","0","0"],["0","0","-1","-1"],["1","0","1","1"]],[["1","0","0","0"],["0","0","0","0"],["0","0","0","0"]],[["1","0","0","0"],["0","0","1","1"],["-1","0","-1","-1"]],[["1","0","0","0"],["0","0","1","1"],["-1","0","1","1"]],[["1","0","0","0"],["0","0","1","1"],["1","0","-1","-1"]],[["1","0","0","0"],["0","0","1","1"],["1","0","1","1"]],[["1","0","0","0"],["2","0","1","1"],["-1","0","-1","-1"]],[["1","0","0","0"],["2","0","1","1"],["1","0","1","1"]]]})json";

inline constexpr std::string_view k_klein_json = R"json({"name":"klein","cyclotomic_order":7,"lines":[[["1","0","0","0","0","0"],["-1","-1","-1","-1","-1","0"],["0","1","1","0","1","1"]],[["1","0","0","0","0","0"],["-1","-1","-1","-1","0","-1"],["0","0","0","-1","-1","-1"]],[["1","0","0","0","0","0"],["-1","-1","-1","0","-1","-1"],["-1","0","0","-1","0","-1"]],[["1","0","0","0","0","0"],["-1","-1","0","-1","-1","-1"],["1","0","1","1","0","1"]],[["1","0","0","0","0","0"],["-1","0","-1","-1","-1","-1"],["0","0","1","1","1","1"]],[["1","0","0","0","0","0"],["0","-1","-1","-1","-1","-1"],["0","-1","0","0","-1","-1"]],[["1","0","0","0","0","0"],["0","0","0","0","1","1"],["0","-1","-1","0","0","-1"]],[["1","0","0","0","0","0"],["0","0","0","1","0","1"],["0","1","1","1","1","0"]],[["1","0","0","0","0","0"],["0","0","0","1","1","0"],["-1","0","0","-1","-1","0"]],[["1","0","0","0","0","0"],["0","0","1","0","0","1"],["-1","0","-1","0","0","-1"]],[["1","0","0","0","0","0"],["0","0","1","0","1","0"],["-1","-1","-1","0","0","0"]],[["1","0","0","0","0","0"],["0","0","1","1","0","0"],["1","1","0","1","1","0"]],[["1","0","0","0","0","0"],["0","1","0","0","0","1"],["1","0","1","0","1","1"]],[["1","0","0","0","0","0"],["0","1","0","0","1","0"],["-1","0","-1","0","-1","0"]],[["1","0","0","0","0","0"],["0","1","0","1","0","0"],["0","0","-1","-1","-1","0"]],[["1","0","0","0","0","0"],["0","1","1","0","0","0"],["-1","-1","0","0","-1","0"]],[["1","0","0","0","0","0"],["1","0","0","0","0","1"],["0","-1","-1","-1","0","0"]],[["1","0","0","0","0","0"],["1","0","0","0","1","0"],["0","-1","0","-1","0","-1"]],[["1","0","0","0","0","0"],["1","0","0","1","0","0"],["1","1","0","1","0","1"]],[["1","0","0","0","0","0"],["1","0","1","0","0","0"],["1","1","1","1","0","0"]],[["1","0","0","0","0","0"],["1","1","0","0","0","0"],["1","1","0","0","1","1"]]]})json";

inline constexpr std::string_view k_hesse_json = R"json({"name":"hesse","cyclotomic_order":3,"lines":[[["0","0"],["0","0"],["1","0"]],[["0","0"],["1","0"],["0","0"]],[["1","0"],["-1","-1"],["-1","-1"]],[["1","0"],["-1","-1"],["0","1"]],[["1","0"],["-1","-1"],["1","0"]],[["1","0"],["0","0"],["0","0"]],[["1","0"],["0","1"],["-1","-1"]],[["1","0"],["0","1"],["0","1"]],[["1","0"],["0","1"],["1","0"]],[["1","0"],["1","0"],["-1","-1"]],[["1","0"],["1","0"],["0","1"]],[["1","0"],["1","0"],["1","0"]]]})json";

inline constexpr std::string_view k_g26_json = R"json({"name":"g26","cyclotomic_order":3,"lines":[[["0","0"],["0","0"],["1","0"]],[["0","0"],["1","0"],["-1","0"]],[["0","0"],["1","0"],["0","-1"]],[["0","0"],["1","0"],["0","0"]],[["0","0"],["1","0"],["1","1"]],[["1","0"],["-1","-1"],["-1","-1"]],[["1","0"],["-1","-1"],["0","1"]],[["1","0"],["-1","-1"],["1","0"]],[["1","0"],["-1","0"],["0","0"]],[["1","0"],["0","-1"],["0","0"]],[["1","0"],["0","0"],["-1","0"]],[["1","0"],["0","0"],["0","-1"]],[["1","0"],["0","0"],["0","0"]],[["1","0"],["0","0"],["1","1"]],[["1","0"],["0","1"],["-1","-1"]],[["1","0"],["0","1"],["0","1"]],[["1","0"],["0","1"],["1","0"]],[["1","0"],["1","0"],["-1","-1"]],[["1","0"],["1","0"],["0","1"]],[["1","0"],["1","0"],["1","0"]],[["1","0"],["1","1"],["0","0"]]]})json";

inline constexpr std::string_view k_valentiner_json = R"json({"name":"valentiner","cyclotomic_order":15,"lines":[[["0","0","0","0","0","0","0","0"],["0","0","0","0","0","0","0","0"],["1","0","0","0","0","0","0","0"]],[["0","0","0","0","0","0","0","0"],["1","0","0","0","0","0","0","0"],["-1","0","0","0","0","-1","0","0"]],[["0","0","0","0","0","0","0","0"],["1","0","0","0","0","0","0","0"],["0","0","0","0","0","0","0","0"]],[["0","0","0","0","0","0","0","0"],["1","0","0","0","0","0","0","0"],["1","0","0","0","0","1","0","0"]],[["1","0","0","0","0","0","0","0"],["-1","0","-1","1","0","0","0","-1"],["0","0","-1","1","0","0","0","-1"]],[["1","0","0","0","0","0","0","0"],["-1","0","-1","1","0","0","0","-1"],["0","0","1","-1","0","0","0","1"]],[["1","0","0","0","0","0","0","0"],["-1","0","0","0","0","-1","0","0"],["-2","1","1","-1","1","-1","0","1"]],[["1","0","0","0","0","0","0","0"],["-1","0","0","0","0","-1","0","0"],["0","0","0","0","0","0","0","0"]],[["1","0","0","0","0","0","0","0"],["-1","0","0","0","0","-1","0","0"],["2","-1","-1","1","-1","1","0","-1"]],[["1","0","0","0","0","0","0","0"],["-1","0","1","-1","0","0","0","1"],["-2","0","1","-1","0","0","0","1"]],[["1","0","0","0","0","0","0","0"],["-1","0","1","-1","0","0","0","1"],["0","0","-1","1","0","0","0","-1"]],[["1","0","0","0","0","0","0","0"],["-1","0","1","-1","0","0","0","1"],["0","0","1","-1","0","0","0","1"]],[["1","0","0","0","0","0","0","0"],["-1","0","1","-1","0","0","0","1"],["2","0","-1","1","0","0","0","-1"]],[["1","0","0","0","0","0","0","0"],["-1","1","0","0","1","0","0","0"],["0","0","0","0","0","-1","0","0"]],[["1","0","0","0","0","0","0","0"],["-1","1","0","0","1","0","0","0"],["0","0","0","0","0","1","0","0"]],[["1","0","0","0","0","0","0","0"],["-1","1","1","-1","1","-1","0","1"],["-2","1","0","0","1","-2","0","0"]],[["1","0","0","0","0","0","0","0"],["-1","1","1","-1","1","-1","0","1"],["0","-1","0","0","-1","0","0","0"]],[["1","0","0","0","0","0","0","0"],["-1","1","1","-1","1","-1","0","1"],["0","1","0","0","1","0","0","0"]],[["1","0","0","0","0","0","0","0"],["-1","1","1","-1","1","-1","0","1"],["2","-1","0","0","-1","2","0","0"]],[["1","0","0","0","0","0","0","0"],["-1","1","1","-1","1","1","0","1"],["0","-1","0","0","-1","0","0","0"]],[["1","0","0","0","0","0","0","0"],["-1","1","1","-1","1","1","0","1"],["0","1","0","0","1","0","0","0"]],[["1","0","0","0","0","0","0","0"],["0","-1/2","0","0","-1/2","1/2","0","0"],["0","-1/2","-1/2","1/2","-1/2","0","0","-1/2"]],[["1","0","0","0","0","0","0","0"],["0","-1/2","0","0","-1/2","1/2","0","0"],["0","1/2","1/2","-1/2","1/2","0","0","1/2"]],[["1","0","0","0","0","0","0","0"],["0","0","0","0","0","0","0","0"],["0","0","0","0","0","-1","0","0"]],[["1","0","0","0","0","0","0","0"],["0","0","0","0","0","0","0","0"],["0","0","0","0","0","0","0","0"]],[["1","0","0","0","0","0","0","0"],["0","0","0","0","0","0","0","0"],["0","0","0","0","0","1","0","0"]],[["1","0","0","0","0","0","0","0"],["0","1/2","0","0","1/2","-1/2","0","0"],["0","-1/2","-1/2","1/2","-1/2","0","0","-1/2"]],[["1","0","0","0","0","0","0","0"],["0","1/2","0","0","1/2","-1/2","0","0"],["0","1/2","1/2","-1/2","1/2","0","0","1/2"]],[["1","0","0","0","0","0","0","0"],["1","-1","-1","1","-1","-1","0","-1"],["0","-1","0","0","-1","0","0","0"]],[["1","0","0","0","0","0","0","0"],["1","-1","-1","1","-1","-1","0","-1"],["0","1","0","0","1","0","0","0"]],[["1","0","0","0","0","0","0","0"],["1","-1","-1","1","-1","1","0","-1"],["-2","1","0","0","1","-2","0","0"]],[["1","0","0","0","0","0","0","0"],["1","-1","-1","1","-1","1","0","-1"],["0","-1","0","0","-1","0","0","0"]],[["1","0","0","0","0","0","0","0"],["1","-1","-1","1","-1","1","0","-1"],["0","1","0","0","1","0","0","0"]],[["1","0","0","0","0","0","0","0"],["1","-1","-1","1","-1","1","0","-1"],["2","-1","0","0","-1","2","0","0"]],[["1","0","0","0","0","0","0","0"],["1","-1","0","0","-1","0","0","0"],["0","0","0","0","0","-1","0","0"]],[["1","0","0","0","0","0","0","0"],["1","-1","0","0","-1","0","0","0"],["0","0","0","0","0","1","0","0"]],[["1","0","0","0","0","0","0","0"],["1","0","-1","1","0","0","0","-1"],["-2","0","1","-1","0","0","0","1"]],[["1","0","0","0","0","0","0","0"],["1","0","-1","1","0","0","0","-1"],["0","0","-1","1","0","0","0","-1"]],[["1","0","0","0","0","0","0","0"],["1","0","-1","1","0","0","0","-1"],["0","0","1","-1","0","0","0","1"]],[["1","0","0","0","0","0","0","0"],["1","0","-1","1","0","0","0","-1"],["2","0","-1","1","0","0","0","-1"]],[["1","0","0","0","0","0","0","0"],["1","0","0","0","0","1","0","0"],["-2","1","1","-1","1","-1","0","1"]],[["1","0","0","0","0","0","0","0"],["1","0","0","0","0","1","0","0"],["0","0","0","0","0","0","0","0"]],[["1","0","0","0","0","0","0","0"],["1","0","0","0","0","1","0","0"],["2","-1","-1","1","-1","1","0","-1"]],[["1","0","0","0","0","0","0","0"],["1","0","1","-1","0","0","0","1"],["0","0","-1","1","0","0","0","-1"]],[["1","0","0","0","0","0","0","0"],["1","0","1","-1","0","0","0","1"],["0","0","1","-1","0","0","0","1"]]]})json";

}  // namespace hirzebruch::detail
