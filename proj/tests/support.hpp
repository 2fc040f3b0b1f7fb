#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "mm/ideal.hpp"
#include "mm/polynomial.hpp"
#include "mm/ring.hpp"

namespace mmtest {

inline mm::RingPtr ring(std::vector<std::string> names, std::vector<int> weights = {},
                        std::uint32_t p = mm::PrimeField::kDefaultCharacteristic) {
  return mm::RingContext::make(std::move(names), p, std::move(weights));
}

inline mm::Polynomial poly(const mm::RingPtr& r, const std::string& text) { return mm::parse_polynomial(r, text); }

inline mm::Ideal ideal(const mm::RingPtr& r, std::initializer_list<const char*> gens) {
  std::vector<mm::Polynomial> ps;
  for (const char* g : gens) ps.push_back(poly(r, g));
  return mm::Ideal(r, std::move(ps));
}

inline std::vector<std::string> strings(const mm::GroebnerBasis& gb) {
  std::vector<std::string> out;
  for (const auto& g : gb.elements()) out.push_back(g.to_string());
  return out;
}

}  // namespace mmtest
