#pragma once

#include "oracles.hpp"
#include "qsp/core.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <string>

namespace test {

inline oracle::Poly to_oracle(const qsp::PolyTUV& p) {
  oracle::Poly out;
  for (const auto& [m, c] : p.terms()) out[{m.t, m.u, m.v}] = c.convert_to<std::int64_t>();
  return out;
}

inline qsp::Word w(std::string_view text) { return qsp::parse_word(text); }
inline qsp::MultisetSpec ms(std::string_view text) { return qsp::MultisetSpec::parse(text); }

// All multiplicity vectors with K <= max_K, as plain vectors.
inline std::vector<std::vector<int>> small_multisets(int max_K) {
  std::vector<std::vector<int>> out;
  for (const auto& m : qsp::multisets_up_to(max_K)) out.push_back(m.multiplicities());
  return out;
}

}  // namespace test
