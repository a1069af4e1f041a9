#pragma once

#include <iosfwd>
#include <string>

#include "pd3c/ideal.hpp"

namespace pd3c {

/// Order named in ideal-file headers: grevlex, lex or grlex.
MonomialOrder order_by_name(const std::string& name);

/// Text of a polynomial: terms descending, coefficients canonical in [0,p),
/// `*` for products, `^` for powers. The zero polynomial prints as "0".
std::string polynomial_to_string(const Polynomial& f);

/// Parse a polynomial in the ideal-file grammar. `line` seeds the position
/// reported in ParseError diagnostics.
Polynomial polynomial_from_string(const RingPtr& r, std::string_view s, int line = 1);

/// Header line "ring <p> <n> <order> <name_1> ... <name_n>".
std::string ring_header_line(const PolyRing& r);

/// Full ideal file: header line plus one generator per line.
std::string ideal_to_text(const Ideal& I);

struct IdealFileContents {
    RingPtr ring;
    std::vector<Polynomial> gens;
};

/// Read an ideal file: a `ring` header, then one polynomial per line.
/// `#` starts a comment; blank lines are ignored. Variable names match
/// [A-Za-z][A-Za-z0-9_]* ("@" is reserved for internal use).
IdealFileContents read_ideal_file(std::istream& in);

Ideal read_ideal(std::istream& in);

} // namespace pd3c
