#pragma once

#include <string_view>

#include "reasm/graph.hpp"

// Trees and arrangements of the worked examples, over vertices 1..8.
namespace reasm::fixtures {

inline constexpr std::string_view b1 = "((((1 2) (3 4)) (5 6)) (7 8))";
inline constexpr std::string_view b2 = "(((1 2) (3 4)) ((5 6) (7 8)))";
inline constexpr std::string_view b3 = "(((((((1 2) 3) 4) 5) 6) 7) 8)";
inline constexpr std::string_view b4 = "(((((1 2) (3 4)) (5 6)) 7) 8)";
inline constexpr std::string_view b5 = "(((((((2 3) 4) 1) 5) 6) 7) 8)";

inline constexpr std::string_view phi3 = "2 1 3 4 5 6 7 8";
inline constexpr std::string_view phi3_prime = "1 2 3 4 5 6 7 8";
inline constexpr std::string_view phi5 = "2 3 4 1 5 6 7 8";

inline Graph q3() { return generate::qcube3(); }
inline Graph k8() { return generate::complete(8); }
inline Graph s7() { return generate::star(7); }

} // namespace reasm::fixtures
