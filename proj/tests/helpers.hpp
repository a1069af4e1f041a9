#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "pd3c/groebner.hpp"
#include "pd3c/io.hpp"

namespace pd3c::test {

inline RingPtr make_ring(uint32_t p, std::vector<std::string> names,
                         MonomialOrder ord = MonomialOrder::grevlex()) {
    return PolyRing::make(PrimeField(p), std::move(names), std::move(ord));
}

inline Polynomial P(const RingPtr& r, const std::string& s) {
    return polynomial_from_string(r, s);
}

inline Ideal ideal_of(const RingPtr& r, std::initializer_list<const char*> gens) {
    std::vector<Polynomial> v;
    for (const char* s : gens) v.push_back(P(r, s));
    return Ideal(r, std::move(v));
}

inline std::vector<Polynomial> polys(const RingPtr& r, std::initializer_list<const char*> gens) {
    std::vector<Polynomial> v;
    for (const char* s : gens) v.push_back(P(r, s));
    return v;
}

inline std::vector<std::string> gb_strings(const Ideal& I) {
    std::vector<std::string> out;
    for (const Polynomial& g : I.groebner().elements()) out.push_back(polynomial_to_string(g));
    return out;
}

} // namespace pd3c::test
